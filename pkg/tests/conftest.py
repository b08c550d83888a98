"""Shared fixtures: mini corpora and model builders."""
import pytest
from hypothesis import strategies as st

from nextword.ngram import LanguageModel
from nextword.normalize import NormalizationConfig, default_codepoint_map

# Five-sentence mini corpus: "bo" occurs three times, followed twice by
# bazar and once by seyran, so bazar|bo = 2/3 and seyran|bo = 1/3.
MINI_LATIN_LINES = [
    "ew wotî supast ekem",
    "ewan çûn bo seyran",
    "ew deçêt bo bazar",
    "keş û hewa lêre xoşe",
    "ewan royştin bo bazar",
]
MINI_LATIN = [line.split() for line in MINI_LATIN_LINES]

# The same corpus in Arabic script; بۆ occurs three times likewise.
MINI_SORANI_LINES = [
    "ئەو وتی سوپاست ئەکەم",
    "ئەوان چوون بۆ سەیران",
    "ئەو دەچێت بۆ بازار",
    "کەش و هەوا لێرە خۆشە",
    "ئەوان ڕۆیشتن بۆ بازار",
]
MINI_SORANI = [line.split() for line in MINI_SORANI_LINES]

LATIN_CONFIG = NormalizationConfig(script_mode="latin-script",
                                   lowercase_latin=True)
SORANI_CONFIG = NormalizationConfig(script_mode="arabic-script",
                                    codepoint_map=default_codepoint_map())


def small_corpora(max_sentences: int = 12, max_len: int = 8,
                  vocab: str = "abcde"):
    """Strategy producing small corpora as lists of token lists."""
    word = st.sampled_from([ch for ch in vocab])
    sentence = st.lists(word, min_size=1, max_size=max_len)
    return st.lists(sentence, min_size=1, max_size=max_sentences)


@pytest.fixture(scope="session")
def mini_latin_model() -> LanguageModel:
    return LanguageModel.build(MINI_LATIN, max_order=5,
                               norm_config=LATIN_CONFIG)


@pytest.fixture(scope="session")
def mini_sorani_model() -> LanguageModel:
    return LanguageModel.build(MINI_SORANI, max_order=5,
                               norm_config=SORANI_CONFIG)


@pytest.fixture()
def mini_latin_corpus_file(tmp_path):
    path = tmp_path / "mini.txt"
    path.write_text("".join(line + ".\n" for line in MINI_LATIN_LINES),
                    encoding="utf-8")
    return path
