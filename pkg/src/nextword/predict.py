"""Stupid Backoff scoring and ranked next-word suggestion.

The score of word w after context c is the count ratio at the longest
suffix of c that has both counts positive, discounted by lambda once per
backed-off token; with nothing left it is count(w)/N. Scores are
relative frequencies, not probabilities: no normalization happens.

Two candidate policies:

* "observed" (the default, what the CLI and service use): candidates
  are the words seen after some non-empty suffix of the context, each
  keeping its longest-match score; top unigrams serve as the fallback
  when no suffix of the context was ever observed (this includes the
  empty-context case).
* "all": every vocabulary word is scored. This is the whole-vocabulary
  reading used by the evaluation harness, where the end marker must be
  a predictable token.

Both use the same lambda powers, built by repeated multiplication, so
their scores for any given word are bit-identical.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyModel
from .ngram import LanguageModel
from .normalize import canonicalize, clean_and_segment, context_tokens

DEFAULT_LAMBDA = 0.4
DEFAULT_K = 5


@dataclass(frozen=True)
class BackoffConfig:
    """Backoff discount and suggestion-list size."""

    lambda_: float = DEFAULT_LAMBDA
    k_suggestions: int = DEFAULT_K

    def __post_init__(self):
        if not 0 < self.lambda_ <= 1:
            raise ValueError(f"lambda must be in (0, 1], got {self.lambda_}")
        if self.k_suggestions < 1:
            raise ValueError("k_suggestions must be >= 1")


@dataclass(frozen=True)
class Suggestion:
    """One ranked candidate with its provenance."""

    word: str
    score: float
    matched_order: int
    backoff_depth: int


@dataclass(frozen=True)
class PredictionRequest:
    """What a caller asks for: raw context text, k, optional prefix."""

    context_text: str = ""
    k: int | None = None
    prefix: str | None = None

    def __post_init__(self):
        if self.k is not None and self.k < 1:
            raise ValueError("k must be >= 1")


def lambda_factors(lambda_: float, depth: int) -> list[float]:
    """[1, λ, λ², ...] by repeated multiplication, index = backoff depth."""
    factors = [1.0]
    for _ in range(depth):
        factors.append(factors[-1] * lambda_)
    return factors


def _trim(model: LanguageModel, context: tuple[str, ...]) -> tuple[str, ...]:
    width = model.max_order - 1
    return context[-width:] if width else ()


def _backoff_score(model: LanguageModel, word: str, context: tuple[str, ...],
                   factors: list[float]) -> tuple[float, int, int]:
    """(score, backoff_depth, matched_order) for one word."""
    for depth in range(len(context)):
        suffix = context[depth:]
        numerator = model.count(suffix + (word,))
        if numerator == 0:
            continue
        denominator = model.context_count(suffix)
        if denominator == 0:
            continue
        return (factors[depth] * (numerator / denominator),
                depth, len(suffix) + 1)
    n = model.corpus_size_n
    count = model.tables[1].count((word,))
    if n == 0 or count == 0:
        return 0.0, len(context), 1
    return factors[len(context)] * (count / n), len(context), 1


def sbo_score(model: LanguageModel, word: str, context: tuple[str, ...] = (),
              config: BackoffConfig = BackoffConfig()) -> float:
    """Stupid Backoff score; 0 only for out-of-vocabulary words."""
    context = _trim(model, tuple(context))
    factors = lambda_factors(config.lambda_, len(context))
    score, _, _ = _backoff_score(model, word, context, factors)
    return score


def _rank_key(model: LanguageModel):
    def key(item: Suggestion):
        return (-item.score, -model.tables[1].count((item.word,)), item.word)
    return key


def _normalize_prefix(model: LanguageModel, prefix: str) -> str:
    sentences = clean_and_segment(
        canonicalize(prefix, model.norm_config), model.norm_config)
    if not sentences:
        return ""
    return sentences[-1].tokens[-1]


def suggest_tokens(model: LanguageModel, context: tuple[str, ...],
                   k: int, config: BackoffConfig = BackoffConfig(),
                   policy: str = "observed",
                   include_end_marker: bool = False,
                   prefix: str | None = None) -> list[Suggestion]:
    """Rank candidates for an already-tokenized context."""
    if model.corpus_size_n == 0:
        raise EmptyModel("model holds no counts")
    if policy not in ("observed", "all"):
        raise ValueError(f"unknown candidate policy: {policy!r}")
    context = _trim(model, tuple(context))
    factors = lambda_factors(config.lambda_, len(context))
    excluded = ({model.begin_marker} if include_end_marker
                else set(model.markers))

    candidates: dict[str, Suggestion] = {}
    if policy == "all":
        words = model.vocabulary(include_end_marker=include_end_marker)
        for word in words:
            score, depth, order = _backoff_score(model, word, context,
                                                 factors)
            if score > 0:
                candidates[word] = Suggestion(word, score, order, depth)
    else:
        for depth in range(len(context)):
            suffix = context[depth:]
            denominator = model.context_count(suffix)
            if denominator == 0:
                continue
            for word, joint in model.successors(suffix).items():
                if word in candidates or word in excluded:
                    continue
                candidates[word] = Suggestion(
                    word, factors[depth] * (joint / denominator),
                    len(suffix) + 1, depth)
        if not candidates:
            # nothing observed after any suffix: top unigrams, discounted
            n = model.corpus_size_n
            for word, count in model.unigrams_by_count():
                candidates[word] = Suggestion(
                    word, factors[len(context)] * (count / n),
                    1, len(context))
            if include_end_marker and model.sentence_count:
                end = model.end_marker
                candidates[end] = Suggestion(
                    end,
                    factors[len(context)] * (model.sentence_count / n),
                    1, len(context))

    ranked = sorted(candidates.values(), key=_rank_key(model))
    if prefix is not None:
        wanted = _normalize_prefix(model, prefix)
        ranked = [s for s in ranked if s.word.startswith(wanted)]
    return ranked[:k]


def suggest(model: LanguageModel, request: PredictionRequest,
            config: BackoffConfig = BackoffConfig(),
            policy: str = "observed",
            include_end_marker: bool = False) -> list[Suggestion]:
    """Normalize the request text and rank next-word candidates."""
    context = tuple(context_tokens(request.context_text, model.norm_config))
    k = request.k if request.k is not None else config.k_suggestions
    return suggest_tokens(model, context, k, config, policy,
                          include_end_marker, request.prefix)


def complete_prefix(model: LanguageModel, prefix: str,
                    k: int = DEFAULT_K) -> list[Suggestion]:
    """Unigram completion: words starting with the prefix, count-ranked."""
    wanted = _normalize_prefix(model, prefix)
    if not wanted:
        return []
    n = model.corpus_size_n
    matches = [Suggestion(word, count / n, 1, 0)
               for word, count in model.unigrams_by_count()
               if word.startswith(wanted)]
    return matches[:k]
