"""Model persistence: one TSV table per order plus a flat manifest.

Layout of a model directory:

    1-gram.tsv .. <max_order>-gram.tsv   header line, then
                                         `token [token ...]<TAB>count`
                                         sorted by count desc, key asc
    manifest                             `key = value` lines

Everything is UTF-8 with LF line endings and no byte-order mark. Counts
are stored rather than probabilities so lambda can change without a
rebuild. Table files are byte-deterministic for a given model; only the
manifest's created_utc line varies between saves.

The manifest also carries the full normalization settings (norm.* keys,
codepoints hex-encoded) so a loaded model re-runs the exact pipeline it
was trained with; the stored fingerprint is cross-checked against the
reconstructed settings and a mismatch warns without failing the load.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .errors import (
    CorruptRow,
    IoFailure,
    MissingFile,
    TableMismatch,
    VersionMismatch,
    WriteCollision,
)
from .ngram import DEFAULT_MARKERS, LanguageModel, NGramTable
from .normalize import NormalizationConfig
from .predict import DEFAULT_LAMBDA

MANIFEST_NAME = "manifest"
FORMAT_VERSION = 1
TABLE_HEADER = "ngram\tcount"


def table_filename(order: int) -> str:
    return f"{order}-gram.tsv"


@dataclass(frozen=True)
class TableInfo:
    filename: str
    rows: int
    total: int


@dataclass(frozen=True)
class ModelManifest:
    format_version: int
    max_order: int
    lambda_: float
    corpus_size_n: int
    begin_marker: str
    end_marker: str
    fingerprint: str
    created_utc: str
    tables: dict[int, TableInfo]
    norm_config: NormalizationConfig

    @property
    def model_id(self) -> str:
        return f"{self.fingerprint[:8]}-{self.max_order}g-{self.corpus_size_n}"


# -- codepoint-level encodings (keep hand-editable manifests unambiguous) --

def _hex_seq(s: str) -> str:
    return "+".join(f"{ord(c):04X}" for c in s)


def _unhex_seq(s: str) -> str:
    if not s:
        return ""
    return "".join(chr(int(part, 16)) for part in s.split("+"))


def _encode_norm(config: NormalizationConfig) -> list[str]:
    lines = [
        f"norm.script_mode = {config.script_mode}",
        f"norm.lowercase_latin = {str(config.lowercase_latin).lower()}",
        f"norm.strip_digits = {str(config.strip_digits).lower()}",
        f"norm.strip_punctuation = {str(config.strip_punctuation).lower()}",
        "norm.terminators = " + ",".join(
            f"{ord(c):04X}" for c in sorted(config.sentence_terminators)),
        "norm.map = " + ";".join(
            f"{_hex_seq(src)}:{_hex_seq(dst)}"
            for src, dst in config.codepoint_map),
    ]
    if config.allowed_ranges is not None:
        lines.append("norm.ranges = " + ",".join(
            f"{lo:04X}-{hi:04X}" for lo, hi in config.allowed_ranges))
    return lines


def _parse_bool(value: str, path, key: str) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise CorruptRow(path, 0, f"{key} must be true or false, got {value!r}")


def _decode_norm(entries: dict[str, str], path) -> NormalizationConfig:
    try:
        terminators = frozenset(
            chr(int(code, 16))
            for code in entries["norm.terminators"].split(",") if code)
        map_field = entries["norm.map"]
        codepoint_map = tuple(
            (_unhex_seq(src), _unhex_seq(dst))
            for src, dst in (item.split(":", 1)
                             for item in map_field.split(";") if item))
        ranges = None
        if "norm.ranges" in entries:
            ranges = tuple(
                (int(lo, 16), int(hi, 16))
                for lo, hi in (part.split("-", 1)
                               for part in entries["norm.ranges"].split(",")))
        return NormalizationConfig(
            script_mode=entries["norm.script_mode"],
            codepoint_map=codepoint_map,
            lowercase_latin=_parse_bool(entries["norm.lowercase_latin"],
                                        path, "norm.lowercase_latin"),
            strip_digits=_parse_bool(entries["norm.strip_digits"],
                                     path, "norm.strip_digits"),
            strip_punctuation=_parse_bool(entries["norm.strip_punctuation"],
                                          path, "norm.strip_punctuation"),
            sentence_terminators=terminators,
            allowed_ranges=ranges,
        )
    except KeyError as exc:
        raise CorruptRow(path, 0, f"missing manifest key {exc.args[0]!r}")
    except ValueError as exc:
        raise CorruptRow(path, 0, f"bad normalization field: {exc}")


# -- saving ----------------------------------------------------------------

def render_table(table: NGramTable) -> str:
    rows = sorted(table.counts.items(),
                  key=lambda kv: (-kv[1], " ".join(kv[0])))
    lines = [TABLE_HEADER]
    lines.extend(f"{' '.join(key)}\t{count}" for key, count in rows)
    return "\n".join(lines) + "\n"


def save_model(model: LanguageModel, directory,
               lambda_: float = DEFAULT_LAMBDA,
               overwrite: bool = False) -> ModelManifest:
    """Write table files and manifest; returns the manifest written."""
    directory = Path(directory)
    manifest_path = directory / MANIFEST_NAME
    if manifest_path.exists() and not overwrite:
        raise WriteCollision(f"{directory} already holds a model")
    created = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    tables: dict[int, TableInfo] = {}
    try:
        directory.mkdir(parents=True, exist_ok=True)
        for n in range(1, model.max_order + 1):
            table = model.tables[n]
            path = directory / table_filename(n)
            path.write_bytes(render_table(table).encode("utf-8"))
            tables[n] = TableInfo(table_filename(n), len(table), table.total)
        manifest = ModelManifest(
            format_version=FORMAT_VERSION,
            max_order=model.max_order,
            lambda_=lambda_,
            corpus_size_n=model.corpus_size_n,
            begin_marker=model.begin_marker,
            end_marker=model.end_marker,
            fingerprint=model.fingerprint,
            created_utc=created,
            tables=tables,
            norm_config=model.norm_config,
        )
        manifest_path.write_bytes(_render_manifest(manifest).encode("utf-8"))
    except OSError as exc:
        raise IoFailure(f"cannot write model to {directory}: {exc}")
    return manifest


def _render_manifest(m: ModelManifest) -> str:
    lines = [
        f"format_version = {m.format_version}",
        f"max_order = {m.max_order}",
        f"lambda = {m.lambda_!r}",
        f"corpus_size_n = {m.corpus_size_n}",
        f"begin_marker = {m.begin_marker}",
        f"end_marker = {m.end_marker}",
        f"normalization_fingerprint = {m.fingerprint}",
        f"created_utc = {m.created_utc}",
    ]
    for n in sorted(m.tables):
        info = m.tables[n]
        lines.append(f"table.{n}.file = {info.filename}")
        lines.append(f"table.{n}.rows = {info.rows}")
        lines.append(f"table.{n}.total = {info.total}")
    lines.extend(_encode_norm(m.norm_config))
    return "\n".join(lines) + "\n"


# -- loading ---------------------------------------------------------------

def _decode_file(path: Path) -> str:
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise MissingFile(f"{path} does not exist")
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data[:exc.start].count(b"\n") + 1
        raise CorruptRow(path, line, "not valid UTF-8")


def _parse_manifest(path: Path) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, line in enumerate(_decode_file(path).splitlines(), start=1):
        if not line.strip():
            continue
        if " = " not in line:
            raise CorruptRow(path, lineno, "expected 'key = value'")
        key, _, value = line.partition(" = ")
        if key in entries:
            raise CorruptRow(path, lineno, f"duplicate key {key!r}")
        entries[key] = value
    return entries


def _require(entries: dict[str, str], key: str, path) -> str:
    if key not in entries:
        raise CorruptRow(path, 0, f"missing manifest key {key!r}")
    return entries[key]


def _require_int(entries: dict[str, str], key: str, path) -> int:
    value = _require(entries, key, path)
    if not (value.isascii() and value.isdigit()):
        raise CorruptRow(path, 0, f"{key} must be a non-negative integer")
    return int(value)


def _load_table(path: Path, order: int, info: TableInfo) -> NGramTable:
    text = _decode_file(path)
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != TABLE_HEADER:
        raise CorruptRow(path, 1, f"expected header {TABLE_HEADER!r}")
    counts: dict[tuple[str, ...], int] = {}
    total = 0
    previous_rank = None
    for lineno, line in enumerate(lines[1:], start=2):
        if line.count("\t") != 1:
            raise CorruptRow(path, lineno, "expected exactly one tab")
        key_str, count_str = line.split("\t")
        if not (count_str.isascii() and count_str.isdigit()):
            raise CorruptRow(path, lineno,
                             f"count {count_str!r} is not a decimal integer")
        if len(count_str) > 1 and count_str[0] == "0":
            raise CorruptRow(path, lineno, "count has a leading zero")
        count = int(count_str)
        if count < 1:
            raise CorruptRow(path, lineno, "count must be >= 1")
        key = tuple(key_str.split(" "))
        if any(not t for t in key):
            raise CorruptRow(path, lineno, "empty token in key")
        if len(key) != order:
            raise CorruptRow(
                path, lineno,
                f"key has {len(key)} tokens, expected {order}")
        if key in counts:
            raise CorruptRow(path, lineno, f"duplicate key {key_str!r}")
        rank = (-count, key_str)
        if previous_rank is not None and rank <= previous_rank:
            raise CorruptRow(path, lineno, "rows out of order")
        previous_rank = rank
        counts[key] = count
        total += count
    if len(counts) != info.rows:
        raise TableMismatch(
            f"{path}: {len(counts)} rows, manifest says {info.rows}")
    if total != info.total:
        raise TableMismatch(
            f"{path}: counts sum to {total}, manifest says {info.total}")
    return NGramTable(order=order, counts=counts, total=total)


def load_model(directory) -> tuple[LanguageModel, ModelManifest]:
    """Load a saved model; returns it with the manifest it came from."""
    directory = Path(directory)
    manifest_path = directory / MANIFEST_NAME
    entries = _parse_manifest(manifest_path)

    version = _require_int(entries, "format_version", manifest_path)
    if version != FORMAT_VERSION:
        raise VersionMismatch(
            f"manifest format {version}, loader understands {FORMAT_VERSION}")
    max_order = _require_int(entries, "max_order", manifest_path)
    corpus_size_n = _require_int(entries, "corpus_size_n", manifest_path)
    try:
        lambda_ = float(_require(entries, "lambda", manifest_path))
    except ValueError:
        raise CorruptRow(manifest_path, 0, "lambda is not a number")
    begin = _require(entries, "begin_marker", manifest_path)
    end = _require(entries, "end_marker", manifest_path)
    fingerprint = _require(entries, "normalization_fingerprint",
                           manifest_path)
    created = _require(entries, "created_utc", manifest_path)
    norm_config = _decode_norm(entries, manifest_path)

    tables: dict[int, NGramTable] = {}
    infos: dict[int, TableInfo] = {}
    for n in range(1, max_order + 1):
        info = TableInfo(
            filename=_require(entries, f"table.{n}.file", manifest_path),
            rows=_require_int(entries, f"table.{n}.rows", manifest_path),
            total=_require_int(entries, f"table.{n}.total", manifest_path),
        )
        infos[n] = info
        tables[n] = _load_table(directory / info.filename, n, info)
    if tables[1].total != corpus_size_n:
        raise TableMismatch(
            f"order-1 total {tables[1].total} != corpus_size_n "
            f"{corpus_size_n}")

    if norm_config.fingerprint() != fingerprint:
        warnings.warn(
            f"manifest fingerprint {fingerprint} does not match the stored "
            "normalization settings; predictions may diverge from training",
            RuntimeWarning, stacklevel=2)

    model = LanguageModel(tables, max_order, norm_config, (begin, end))
    manifest = ModelManifest(
        format_version=version, max_order=max_order, lambda_=lambda_,
        corpus_size_n=corpus_size_n, begin_marker=begin, end_marker=end,
        fingerprint=fingerprint, created_utc=created, tables=infos,
        norm_config=norm_config)
    return model, manifest
