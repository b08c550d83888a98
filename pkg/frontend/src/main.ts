import { ServiceClient } from "./api.js";
import { mountDemo } from "./ui.js";

// ?service=http://127.0.0.1:8000 points the page at a remote service;
// default is same-origin.
const base = new URLSearchParams(window.location.search).get("service") ?? "";
const root = document.getElementById("app");
if (root !== null) {
  mountDemo(root, new ServiceClient(base));
}
