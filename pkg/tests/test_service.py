"""Tests for the HTTP suggestion service."""
from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from nextword.predict import BackoffConfig, PredictionRequest, suggest
from nextword.service import create_app
from nextword.storage import load_model, save_model

from conftest import LATIN_CONFIG, MINI_LATIN
from nextword.ngram import LanguageModel


@pytest.fixture(scope="module")
def model_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("served") / "model"
    model = LanguageModel.build(MINI_LATIN, max_order=5,
                                norm_config=LATIN_CONFIG)
    save_model(model, directory)
    return directory


@pytest.fixture(scope="module")
def client(model_dir):
    return TestClient(create_app(model_dir))


def body_without_timing(response):
    payload = response.json()
    payload.pop("elapsed_micros")
    return payload


class TestPredict:
    """POST /api/predict."""

    def test_bo_context(self, client):
        response = client.post("/api/predict", json={"text": "bo"})
        assert response.status_code == 200
        payload = response.json()
        words = [s["word"] for s in payload["suggestions"]]
        assert words == ["bazar", "seyran"]
        assert payload["suggestions"][0]["score"] == pytest.approx(2 / 3)
        assert payload["suggestions"][1]["score"] == pytest.approx(1 / 3)
        assert all(s["matched_order"] == 2 for s in payload["suggestions"])
        assert isinstance(payload["elapsed_micros"], int)
        assert payload["model_id"].endswith("-5g-26")

    def test_empty_context_top_unigrams(self, client):
        response = client.post("/api/predict", json={"text": "", "k": 3})
        assert response.status_code == 200
        words = [s["word"] for s in response.json()["suggestions"]]
        assert words == ["bo", "bazar", "ew"]

    def test_scores_non_increasing(self, client):
        response = client.post("/api/predict",
                               json={"text": "ewan", "k": 10})
        scores = [s["score"] for s in response.json()["suggestions"]]
        assert scores == sorted(scores, reverse=True)

    def test_k_caps_suggestions(self, client):
        response = client.post("/api/predict", json={"text": "", "k": 2})
        assert len(response.json()["suggestions"]) == 2

    def test_prefix_filter(self, client):
        response = client.post("/api/predict",
                               json={"text": "", "prefix": "ba"})
        words = [s["word"] for s in response.json()["suggestions"]]
        assert words == ["bazar"]

    def test_matches_library_call(self, client, model_dir):
        model, _ = load_model(model_dir)
        for text in ["", "bo", "ewan çûn", "zzz unknown words", "keş û"]:
            response = client.post("/api/predict", json={"text": text})
            wanted = suggest(model, PredictionRequest(text),
                             BackoffConfig())
            got = response.json()["suggestions"]
            assert got == [
                {"word": s.word, "score": s.score,
                 "matched_order": s.matched_order}
                for s in wanted
            ]

    def test_markers_never_appear(self, client):
        for text in ["", "bo bazar", "xoşe", "ew deçêt bo bazar"]:
            response = client.post("/api/predict",
                                   json={"text": text, "k": 20})
            words = [s["word"] for s in response.json()["suggestions"]]
            assert "<s>" not in words
            assert "</s>" not in words

    def test_identical_requests_identical_bodies(self, client):
        first = body_without_timing(
            client.post("/api/predict", json={"text": "bo"}))
        for _ in range(20):
            again = body_without_timing(
                client.post("/api/predict", json={"text": "bo"}))
            assert again == first

    def test_restart_reproduces_responses(self, model_dir):
        payloads = []
        for _ in range(2):
            fresh = TestClient(create_app(model_dir))
            payloads.append(body_without_timing(
                fresh.post("/api/predict", json={"text": "ewan"})))
        assert payloads[0] == payloads[1]

    def test_valid_inputs_never_500(self, client):
        oddballs = ["؟؟؟", "1234 5678", "....", "🙂 🙂", "a" * 4000,
                    "\n\n\n", "ئەو وتی"]
        for text in oddballs:
            response = client.post("/api/predict", json={"text": text})
            assert response.status_code == 200, text


class TestPredictRejections:
    """Malformed and oversize bodies."""

    def test_missing_text(self, client):
        assert client.post("/api/predict", json={"k": 3}).status_code == 400

    def test_wrong_type(self, client):
        assert client.post("/api/predict",
                           json={"text": 7}).status_code == 400

    def test_bad_k(self, client):
        assert client.post("/api/predict",
                           json={"text": "bo", "k": 0}).status_code == 400

    def test_unparseable_body(self, client):
        response = client.post("/api/predict", content=b"not json at all",
                               headers={"content-type": "application/json"})
        assert response.status_code == 400

    def test_oversize_ascii(self, client):
        response = client.post("/api/predict", json={"text": "a" * 4097})
        assert response.status_code == 400

    def test_oversize_multibyte(self, client):
        # 2049 two-byte letters = 4098 encoded bytes
        response = client.post("/api/predict", json={"text": "ş" * 2049})
        assert response.status_code == 400

    def test_limit_boundary_accepted(self, client):
        response = client.post("/api/predict", json={"text": "a" * 4096})
        assert response.status_code == 200


class TestHealth:
    """GET /api/health."""

    def test_loaded_model(self, client, model_dir):
        response = client.get("/api/health")
        assert response.status_code == 200
        payload = response.json()
        _, manifest = load_model(model_dir)
        assert payload["status"] == "ok"
        assert payload["model_id"] == manifest.model_id
        assert payload["orders"] == 5
        assert payload["vocab_size"] == 16  # unigram rows minus end marker
        assert payload["script_mode"] == "latin-script"

    def test_no_model_is_503(self):
        bare = TestClient(create_app(None))
        assert bare.get("/api/health").status_code == 503
        assert bare.post("/api/predict",
                         json={"text": "bo"}).status_code == 503

    def test_cors_preflight(self, client):
        response = client.options(
            "/api/predict",
            headers={"Origin": "http://localhost:5173",
                     "Access-Control-Request-Method": "POST"})
        assert response.headers["access-control-allow-origin"] == "*"
