"""Top-k accuracy evaluation and corpus-scaling benchmarks.

A prediction is correct when the true next token (end marker included)
appears among the k suggestions. Per order n, each position of every
padded test sentence is predicted from only its preceding n-1 tokens,
with the model truncated to orders <= n. Candidates come from the
whole-vocabulary backoff scorer, so any in-vocabulary token can in
principle be predicted; ``no_backoff`` restricts candidates to exact
order-n continuations instead, which is the each-order-in-isolation
reading of per-order accuracy.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from statistics import fmean
from typing import Sequence

from .errors import EmptyTestSet, InsufficientCorpus
from .ngram import LanguageModel, pad_sentence
from .normalize import Sentence
from .predict import BackoffConfig, Suggestion, suggest_tokens


@dataclass(frozen=True)
class EvalConfig:
    k: int = 5
    max_order: int = 5
    lambda_: float = 0.4
    split: str = "heldout"  # heldout | resub | file
    heldout_fraction: float = 0.1
    seed: int = 0
    no_backoff: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.split == "heldout" and not 0 < self.heldout_fraction < 1:
            raise ValueError("heldout_fraction must be in (0, 1)")


@dataclass(frozen=True)
class OrderResult:
    order: int
    total: int
    correct: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[OrderResult, ...]
    k: int
    mode: str
    latency_mean_ms: float
    latency_p95_ms: float
    train_label: str = "inline"
    test_label: str = "inline"

    def render_tsv(self) -> str:
        lines = ["order\ttotal\tcorrect\taccuracy"]
        lines.extend(
            f"{r.order}\t{r.total}\t{r.correct}\t{100 * r.accuracy:.2f}"
            for r in self.rows)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScalingRow:
    size: int
    accuracy: float
    latency_mean_ms: float


def _tokens_of(sentence) -> tuple[str, ...]:
    if isinstance(sentence, Sentence):
        return sentence.tokens
    return tuple(sentence)


def percentile_95(values: Sequence[float]) -> float:
    """Nearest-rank 95th percentile."""
    if not values:
        return 0.0
    ordered = sorted(values)
    rank = max(0, -(-95 * len(ordered) // 100) - 1)
    return ordered[rank]


def _exact_order_suggest(model: LanguageModel, context: tuple[str, ...],
                         k: int) -> list[Suggestion]:
    """Only words continuing the exact order-n context; no backoff."""
    denominator = model.context_count(context)
    if denominator == 0:
        return []
    candidates = [
        Suggestion(word, joint / denominator, len(context) + 1, 0)
        for word, joint in model.successors(context).items()
        if word != model.begin_marker
    ]
    candidates.sort(
        key=lambda s: (-s.score, -model.tables[1].count((s.word,)), s.word))
    return candidates[:k]


def _evaluate_order(model: LanguageModel, sentences: Sequence, order: int,
                    config: EvalConfig,
                    durations_ms: list[float]) -> OrderResult:
    backoff = BackoffConfig(lambda_=config.lambda_, k_suggestions=config.k)
    truncated = model.truncated(order) if order < model.max_order else model
    total = 0
    correct = 0
    for sentence in sentences:
        padded = pad_sentence(_tokens_of(sentence), order, model.markers)
        for i in range(order - 1, len(padded)):
            context = padded[i - order + 1:i]
            started = time.perf_counter()
            if config.no_backoff:
                suggestions = _exact_order_suggest(truncated, context,
                                                   config.k)
            else:
                suggestions = suggest_tokens(
                    truncated, context, config.k, backoff,
                    policy="all", include_end_marker=True)
            durations_ms.append((time.perf_counter() - started) * 1e3)
            total += 1
            if any(s.word == padded[i] for s in suggestions):
                correct += 1
    return OrderResult(order=order, total=total, correct=correct)


def evaluate_topk(model: LanguageModel, test_sentences: Sequence,
                  config: EvalConfig = EvalConfig(),
                  train_label: str = "inline",
                  test_label: str = "inline") -> EvalReport:
    """Accuracy per order 1..max_order over the test sentences."""
    test_sentences = list(test_sentences)
    if not test_sentences:
        raise EmptyTestSet("no test sentences")
    max_order = min(config.max_order, model.max_order)
    durations: list[float] = []
    rows = tuple(
        _evaluate_order(model, test_sentences, order, config, durations)
        for order in range(1, max_order + 1))
    return EvalReport(
        rows=rows, k=config.k, mode=config.split,
        latency_mean_ms=fmean(durations) if durations else 0.0,
        latency_p95_ms=percentile_95(durations),
        train_label=train_label, test_label=test_label)


def split_sentences(sentences: Sequence, config: EvalConfig):
    """(train, test) per the configured mode; deterministic in the seed."""
    sentences = list(sentences)
    if config.split == "resub":
        return sentences, list(sentences)
    if config.split != "heldout":
        raise ValueError(f"cannot split in mode {config.split!r}")
    if len(sentences) < 2:
        raise EmptyTestSet("need at least two sentences for a held-out split")
    indexes = list(range(len(sentences)))
    random.Random(config.seed).shuffle(indexes)
    cut = max(1, round(config.heldout_fraction * len(sentences)))
    test_idx = set(indexes[:cut])
    train = [s for i, s in enumerate(sentences) if i not in test_idx]
    test = [s for i, s in enumerate(sentences) if i in test_idx]
    return train, test


def benchmark_scaling(sentences: Sequence, sizes: Sequence[int],
                      config: EvalConfig = EvalConfig(),
                      tail_fraction: float = 0.1) -> list[ScalingRow]:
    """Accuracy and latency when training on growing corpus prefixes.

    The last ``tail_fraction`` of sentences is a fixed held-out test set;
    each size takes whole sentences from the front until the next one
    would exceed the token budget.
    """
    sentences = [_tokens_of(s) for s in sentences]
    if list(sizes) != sorted(set(sizes)) or not sizes:
        raise ValueError("sizes must be ascending and non-empty")
    tail_count = max(1, round(tail_fraction * len(sentences)))
    if tail_count >= len(sentences):
        raise InsufficientCorpus("corpus too small to hold out a tail")
    pool, tail = sentences[:-tail_count], sentences[-tail_count:]
    pool_tokens = sum(len(s) for s in pool)

    rows = []
    for size in sizes:
        if size > pool_tokens:
            raise InsufficientCorpus(
                f"requested {size} training tokens, corpus offers "
                f"{pool_tokens}")
        prefix = []
        used = 0
        for tokens in pool:
            if used + len(tokens) > size:
                break
            prefix.append(tokens)
            used += len(tokens)
        if not prefix:
            raise InsufficientCorpus(
                f"size {size} is below the first sentence's length")
        model = LanguageModel.build(prefix, max_order=config.max_order)
        durations: list[float] = []
        result = _evaluate_order(model, tail, config.max_order, config,
                                 durations)
        rows.append(ScalingRow(size=size, accuracy=result.accuracy,
                               latency_mean_ms=fmean(durations)))
    return rows
