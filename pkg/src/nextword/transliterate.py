"""Sorani (Arabic-script) to Latin-script transliteration.

Mapping classes:

* one-to-one letters map directly (ب -> b, ش -> ş, ...); ڕ and ڵ fold
  into r and l, ە is always the vowel e.
* the digraph وو maps to û, consumed leftmost-first before anything else.
* و, ی and ه each have a consonant and a vowel reading. The positional
  heuristic: the consonant reading (w, y, h) applies when the letter is
  adjacent, on either side, to a plain vowel letter (ا ە ێ ۆ or a وو
  digraph); the vowel reading (u, î, e) applies otherwise. Adjacency is
  judged on the original letter sequence, not on resolved readings.
* the carrier ئ is silent before any letter that can read as a vowel
  and becomes i elsewhere.
* ع غ ح, tatweel and Arabic harakat map to nothing.

Input is expected in canonical form (see normalize.canonicalize); any
other letter raises UnmappedCodepoint. Output is lowercase.
"""
from __future__ import annotations

from typing import Iterable

from .errors import UnmappedCodepoint

ONE_TO_ONE = {
    "ا": "a", "ب": "b", "ج": "c", "چ": "ç", "د": "d", "ێ": "ê",
    "ف": "f", "گ": "g", "ژ": "j", "ک": "k", "ل": "l", "م": "m",
    "ن": "n", "ۆ": "o", "پ": "p", "ق": "q", "ر": "r", "س": "s",
    "ش": "ş", "ت": "t", "خ": "x", "ز": "z", "ڤ": "v",
    "ڕ": "r", "ڵ": "l", "ە": "e",
}

# letter -> (consonant reading, vowel reading)
AMBIGUOUS = {"و": ("w", "u"), "ی": ("y", "î"), "ه": ("h", "e")}

CARRIER = "ئ"

# Dropped before segmentation: Arabic-only consonants, tatweel, harakat.
SILENT = frozenset("عغحـ") | frozenset(
    chr(cp) for cp in range(0x064B, 0x0653))

_DIGRAPH = "وو"
_DIGRAPH_UNIT = "û"

# Units that count as vowels for the adjacency test.
_VOWELISH = frozenset({"ا", "ە", "ێ", "ۆ", _DIGRAPH_UNIT})


def _segment(token: str) -> list[str]:
    """Split a token into units, folding وو into a single û unit."""
    units: list[str] = []
    i = 0
    while i < len(token):
        if token.startswith(_DIGRAPH, i):
            units.append(_DIGRAPH_UNIT)
            i += 2
        else:
            units.append(token[i])
            i += 1
    return units


def transliterate_token(token: str) -> str:
    """Render one canonical Sorani token in Latin script.

    Raises UnmappedCodepoint for letters outside the mapping tables.
    """
    kept = "".join(ch for ch in token if ch not in SILENT)
    units = _segment(kept)
    out: list[str] = []
    for pos, unit in enumerate(units):
        if unit == _DIGRAPH_UNIT:
            out.append(unit)
        elif unit in ONE_TO_ONE:
            out.append(ONE_TO_ONE[unit])
        elif unit in AMBIGUOUS:
            consonant, vowel = AMBIGUOUS[unit]
            before = units[pos - 1] if pos > 0 else ""
            after = units[pos + 1] if pos + 1 < len(units) else ""
            if before in _VOWELISH or after in _VOWELISH:
                out.append(consonant)
            else:
                out.append(vowel)
        elif unit == CARRIER:
            after = units[pos + 1] if pos + 1 < len(units) else ""
            if after in _VOWELISH or after in AMBIGUOUS:
                continue
            out.append("i")
        else:
            raise UnmappedCodepoint(unit, token)
    return "".join(out)


def transliterate_sorani_to_latin(tokens: Iterable[str]) -> list[str]:
    """Transliterate a token sequence, discarding tokens that empty out."""
    result = []
    for token in tokens:
        latin = transliterate_token(token)
        if latin:
            result.append(latin)
    return result
