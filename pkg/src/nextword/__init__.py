"""Next-word suggestion toolkit for Arabic-script and Latin-script corpora."""

from .errors import (
    CorruptRow,
    EmptyModel,
    EmptyTestSet,
    InsufficientCorpus,
    IoFailure,
    MissingFile,
    NextwordError,
    TableMismatch,
    WriteCollision,
)
from .evaluate import (
    EvalConfig,
    EvalReport,
    OrderResult,
    ScalingRow,
    benchmark_scaling,
    evaluate_topk,
    split_sentences,
)
from .ngram import LanguageModel, NGramTable, count_ngrams, pad_sentence
from .normalize import (
    CleanStats,
    NormalizationConfig,
    Sentence,
    canonicalize,
    clean_and_segment,
    clean_and_segment_with_stats,
    default_codepoint_map,
    normalize_text,
    render_sentences,
)
from .predict import (
    BackoffConfig,
    PredictionRequest,
    Suggestion,
    complete_prefix,
    sbo_score,
    suggest,
    suggest_tokens,
)
from .storage import ModelManifest, load_model, save_model
from .transliterate import transliterate_sorani_to_latin, transliterate_token

__version__ = "0.1.0"

__all__ = [
    "BackoffConfig",
    "CleanStats",
    "CorruptRow",
    "EmptyModel",
    "EmptyTestSet",
    "EvalConfig",
    "EvalReport",
    "InsufficientCorpus",
    "IoFailure",
    "LanguageModel",
    "MissingFile",
    "ModelManifest",
    "NGramTable",
    "NextwordError",
    "NormalizationConfig",
    "OrderResult",
    "PredictionRequest",
    "ScalingRow",
    "Sentence",
    "Suggestion",
    "TableMismatch",
    "WriteCollision",
    "benchmark_scaling",
    "canonicalize",
    "clean_and_segment",
    "clean_and_segment_with_stats",
    "complete_prefix",
    "count_ngrams",
    "default_codepoint_map",
    "evaluate_topk",
    "load_model",
    "normalize_text",
    "pad_sentence",
    "render_sentences",
    "save_model",
    "sbo_score",
    "split_sentences",
    "suggest",
    "suggest_tokens",
    "transliterate_sorani_to_latin",
    "transliterate_token",
    "__version__",
]
