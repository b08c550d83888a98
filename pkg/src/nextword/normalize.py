"""Corpus text normalization: codepoint canonicalization, cleaning,
sentence segmentation and tokenization.

The pipeline is split in two steps that are each idempotent:

1. ``canonicalize`` rewrites configured codepoint sequences (e.g. Arabic
   kaf to Kurdish kaf) until the text is a fixed point of the map.
2. ``clean_and_segment`` splits sentences on terminator codepoints (and
   line breaks), strips digits/punctuation/symbols, collapses whitespace,
   drops out-of-script tokens and lowercases Latin text when configured.

Sentence segmentation happens *before* punctuation stripping so sentence
boundaries survive the cleaning pass.
"""
from __future__ import annotations

import hashlib
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CyclicMap, InvalidEncoding

# Whole token is dropped if any of its letters falls outside these ranges
# (script purity; a half-foreign token is noise, not vocabulary).
ARABIC_SCRIPT_RANGES: tuple[tuple[int, int], ...] = (
    (0x0600, 0x06FF),   # Arabic, incl. Kurdish additions
    (0x0750, 0x077F),   # Arabic Supplement
    (0x08A0, 0x08FF),   # Arabic Extended-A
    (0xFB50, 0xFDFF),   # Presentation Forms-A
    (0xFE70, 0xFEFF),   # Presentation Forms-B
)

LATIN_SCRIPT_RANGES: tuple[tuple[int, int], ...] = (
    (0x0041, 0x005A),   # A-Z
    (0x0061, 0x007A),   # a-z
    (0x00C0, 0x024F),   # Latin-1 Supplement letters through Latin Extended-B
    (0x1E00, 0x1EFF),   # Latin Extended Additional
)

DEFAULT_SENTENCE_TERMINATORS = frozenset({".", "!", "?", "؟", "۔", "։"})

# Line breaks always end a sentence; a sentence never spans lines.
_LINE_BREAKS = frozenset({"\n", "\r"})

# Bounds on fixed-point iteration before a map is declared cyclic.
_MAX_MAP_PASSES = 100
_MAX_EXPANSION = 1000


@dataclass(frozen=True)
class NormalizationConfig:
    """Settings for the whole normalization pipeline.

    ``codepoint_map`` is an ordered list of (source, replacement) string
    pairs; replacements may be empty (deletion). ``allowed_ranges``
    overrides the per-script defaults when given.
    """

    script_mode: str = "mixed"  # arabic-script | latin-script | mixed
    codepoint_map: tuple[tuple[str, str], ...] = ()
    lowercase_latin: bool = False
    strip_digits: bool = True
    strip_punctuation: bool = True
    sentence_terminators: frozenset[str] = DEFAULT_SENTENCE_TERMINATORS
    allowed_ranges: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.script_mode not in ("arabic-script", "latin-script", "mixed"):
            raise ValueError(f"unknown script_mode: {self.script_mode!r}")
        if not self.sentence_terminators:
            raise ValueError("sentence_terminators must be non-empty")
        object.__setattr__(self, "codepoint_map", tuple(
            (str(src), str(dst)) for src, dst in self.codepoint_map
        ))
        for src, _dst in self.codepoint_map:
            if not src:
                raise ValueError("codepoint_map source sequences must be non-empty")

    def letter_ranges(self) -> tuple[tuple[int, int], ...] | None:
        """Ranges letters must fall in, or None when any script is allowed."""
        if self.allowed_ranges is not None:
            return self.allowed_ranges
        if self.script_mode == "arabic-script":
            return ARABIC_SCRIPT_RANGES
        if self.script_mode == "latin-script":
            return LATIN_SCRIPT_RANGES
        return None

    def fingerprint(self) -> str:
        """Stable hash binding a trained model to this pipeline."""
        parts = [
            f"script_mode={self.script_mode}",
            f"lowercase_latin={self.lowercase_latin}",
            f"strip_digits={self.strip_digits}",
            f"strip_punctuation={self.strip_punctuation}",
            "terminators=" + ",".join(
                f"{ord(c):04X}" for c in sorted(self.sentence_terminators)),
            "map=" + ";".join(
                _hex_seq(src) + ":" + _hex_seq(dst) for src, dst in self.codepoint_map),
        ]
        if self.allowed_ranges is not None:
            parts.append("ranges=" + ",".join(
                f"{lo:04X}-{hi:04X}" for lo, hi in self.allowed_ranges))
        digest = hashlib.sha256("\n".join(parts).encode("utf-8")).hexdigest()
        return digest[:16]


@dataclass(frozen=True)
class Sentence:
    """One cleaned sentence: tokens plus the byte span it came from."""

    tokens: tuple[str, ...]
    source_span: tuple[int, int] = (0, 0)

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("Sentence.tokens must be non-empty")


@dataclass
class CleanStats:
    """Counters collected while cleaning a text."""

    sentences: int = 0
    tokens: int = 0
    dropped_tokens: int = 0


def _hex_seq(s: str) -> str:
    return "+".join(f"{ord(c):04X}" for c in s)


def decode_utf8(data: bytes) -> str:
    """Decode bytes strictly; invalid sequences are an error, never dropped."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidEncoding(f"input is not valid UTF-8: {exc}") from None


def load_codepoint_map(path: str | Path) -> tuple[tuple[str, str], ...]:
    """Read a map file: one ``source<TAB>replacement`` per line, # comments."""
    entries = []
    text = decode_utf8(Path(path).read_bytes())
    for raw_line in text.splitlines():
        line = raw_line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise ValueError(f"map line without a tab separator: {line!r}")
        src, _, dst = line.partition("\t")
        if not src:
            raise ValueError(f"map line with empty source: {line!r}")
        entries.append((src, dst))
    return tuple(entries)


def default_codepoint_map() -> tuple[tuple[str, str], ...]:
    """The bundled Arabic-to-Kurdish canonical form map."""
    return load_codepoint_map(Path(__file__).parent / "data" / "sorani_map.tsv")


def _check_no_surrogates(raw: str) -> None:
    try:
        raw.encode("utf-8")
    except UnicodeEncodeError as exc:
        raise InvalidEncoding(f"input contains unencodable codepoints: {exc}") from None


def _substitute_once(text: str, entries: Sequence[tuple[str, str]]) -> str:
    # Longest source first so overlapping sources resolve deterministically.
    for src, dst in sorted(entries, key=lambda e: -len(e[0])):
        text = text.replace(src, dst)
    return text


def _is_fixed(text: str, entries: Sequence[tuple[str, str]]) -> bool:
    # A sequential full pass can be a no-op on cyclic maps (a -> b, b -> a),
    # so fixedness is judged entry by entry, never by pass equality.
    return all(src not in text or src == dst for src, dst in entries)


@lru_cache(maxsize=64)
def _validate_map(entries: tuple[tuple[str, str], ...]) -> None:
    """Reject maps whose closure never settles (a -> b, b -> a)."""
    for src, dst in entries:
        current = dst
        for _ in range(_MAX_MAP_PASSES):
            if _is_fixed(current, entries):
                break
            expanded = _substitute_once(current, entries)
            if expanded == current or len(expanded) > _MAX_EXPANSION:
                raise CyclicMap(f"map entry {src!r} has no closed form")
            current = expanded
        else:
            raise CyclicMap(f"map entry {src!r} has no closed form")


def canonicalize(raw: str, config: NormalizationConfig) -> str:
    """Apply the codepoint map until the text no longer changes.

    Raises CyclicMap when the map has no fixed point (e.g. a -> b, b -> a)
    and InvalidEncoding when ``raw`` holds unencodable codepoints.
    """
    _check_no_surrogates(raw)
    if not config.codepoint_map:
        return raw
    _validate_map(config.codepoint_map)
    text = raw
    growth_cap = max(len(raw) * 4, 4096)
    for _ in range(_MAX_MAP_PASSES):
        if _is_fixed(text, config.codepoint_map):
            return text
        replaced = _substitute_once(text, config.codepoint_map)
        if replaced == text or len(replaced) > growth_cap:
            break
        text = replaced
    raise CyclicMap("codepoint map substitution does not converge")


@lru_cache(maxsize=4096)
def _char_class(ch: str) -> str:
    """Coarse class: L(etter), N(umber), P(unct/symbol/format), W(hitespace), O(ther)."""
    if ch.isspace():
        return "W"
    cat = unicodedata.category(ch)
    if cat.startswith("L") or cat.startswith("M"):
        return "L"
    if cat.startswith("N"):
        return "N"
    if cat.startswith("P") or cat.startswith("S") or cat == "Cf":
        return "P"
    return "O"


def _in_ranges(cp: int, ranges: tuple[tuple[int, int], ...]) -> bool:
    return any(lo <= cp <= hi for lo, hi in ranges)


def _token_in_script(token: str, ranges: tuple[tuple[int, int], ...]) -> bool:
    for ch in token:
        if unicodedata.category(ch).startswith("L") and not _in_ranges(ord(ch), ranges):
            return False
    return True


def _split_segments(raw: str, terminators: frozenset[str]):
    """Yield (segment_text, start_byte, end_byte) split on terminators/line breaks."""
    buf: list[str] = []
    seg_start = 0
    byte_pos = 0
    for ch in raw:
        ch_bytes = len(ch.encode("utf-8"))
        if ch in terminators or ch in _LINE_BREAKS:
            if buf:
                yield "".join(buf), seg_start, byte_pos
                buf = []
            seg_start = byte_pos + ch_bytes
        else:
            if not buf:
                seg_start = byte_pos
            buf.append(ch)
        byte_pos += ch_bytes
    if buf:
        yield "".join(buf), seg_start, byte_pos


def clean_and_segment_with_stats(
    raw: str, config: NormalizationConfig
) -> tuple[list[Sentence], CleanStats]:
    """Clean canonicalized text into sentences, returning drop counters too."""
    stats = CleanStats()
    ranges = config.letter_ranges()
    sentences: list[Sentence] = []
    for segment, start, end in _split_segments(raw, config.sentence_terminators):
        tokens: list[str] = []
        word: list[str] = []

        def flush():
            if not word:
                return
            token = "".join(word)
            word.clear()
            if ranges is not None and not _token_in_script(token, ranges):
                stats.dropped_tokens += 1
                return
            if config.lowercase_latin:
                token = token.lower()
            tokens.append(token)

        for ch in segment:
            cls = _char_class(ch)
            if cls == "W":
                flush()
            elif cls == "N":
                if not config.strip_digits:
                    word.append(ch)
            elif cls == "P":
                if not config.strip_punctuation:
                    word.append(ch)
            elif cls == "L":
                word.append(ch)
            # class "O" (controls, unassigned): dropped
        flush()

        if tokens:
            sentences.append(Sentence(tokens=tuple(tokens), source_span=(start, end)))
            stats.sentences += 1
            stats.tokens += len(tokens)
    return sentences, stats


def clean_and_segment(raw: str, config: NormalizationConfig) -> list[Sentence]:
    """Clean canonicalized text into sentences (empty input yields [])."""
    sentences, _ = clean_and_segment_with_stats(raw, config)
    return sentences


def normalize_text(raw: str, config: NormalizationConfig) -> list[Sentence]:
    """Full pipeline: canonicalize then clean and segment."""
    return clean_and_segment(canonicalize(raw, config), config)


def context_tokens(raw: str, config: NormalizationConfig) -> list[str]:
    """Tokens of the sentence currently being typed.

    Runs the training pipeline on ``raw`` and keeps only the segment after
    the last sentence terminator: a terminator resets the context.
    """
    canonical = canonicalize(raw, config)
    segments = list(_split_segments(canonical, config.sentence_terminators))
    if not segments:
        return []
    last_segment, _, _ = segments[-1]
    # A trailing terminator means a finished sentence: empty context.
    trailing = canonical.rstrip()
    if trailing and (trailing[-1] in config.sentence_terminators):
        return []
    cleaned = clean_and_segment(last_segment, config)
    if not cleaned:
        return []
    return list(cleaned[-1].tokens)


def render_sentences(sentences: Iterable[Sentence]) -> str:
    """Serialize sentences one per line, tokens space-separated."""
    return "\n".join(" ".join(s.tokens) for s in sentences)
