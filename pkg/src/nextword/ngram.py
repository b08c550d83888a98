"""N-gram counting and maximum-likelihood probabilities for orders 1..5.

Each sentence is padded with (n-1) begin markers and one end marker
before its n-token windows are counted. The order-1 table therefore
never holds the begin marker, while the end marker is an ordinary
countable token. Two consequences worth spelling out:

* corpus size N is the order-1 total: real tokens plus one end marker
  per sentence, no begin markers.
* the count of an all-begin-marker context is the sentence count (every
  padded sentence starts with exactly one such run), which keeps
  per-context probabilities summing to 1 at every order.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    ContextTooLong,
    MarkerCollision,
    OrderOutOfRange,
    UndefinedDistribution,
)
from .normalize import NormalizationConfig, Sentence

BEGIN_MARKER = "<s>"
END_MARKER = "</s>"
DEFAULT_MARKERS = (BEGIN_MARKER, END_MARKER)
MAX_SUPPORTED_ORDER = 5

Key = tuple[str, ...]


@dataclass(frozen=True)
class NGramTable:
    """Counts for one order; keys are n-token tuples, counts are >= 1."""

    order: int
    counts: Mapping[Key, int]
    total: int

    @classmethod
    def from_counter(cls, order: int, counter: Mapping[Key, int]) -> "NGramTable":
        counts = {k: c for k, c in counter.items() if c > 0}
        return cls(order=order, counts=counts, total=sum(counts.values()))

    def count(self, key: Key) -> int:
        return self.counts.get(key, 0)

    def __len__(self) -> int:
        return len(self.counts)


def _token_seq(sentence) -> tuple[str, ...]:
    if isinstance(sentence, Sentence):
        return sentence.tokens
    return tuple(sentence)


def _check_order(n: int, max_order: int = MAX_SUPPORTED_ORDER) -> None:
    if not 1 <= n <= max_order:
        raise OrderOutOfRange(f"order {n} outside 1..{max_order}")


def pad_sentence(tokens: Sequence[str], n: int,
                 markers: tuple[str, str] = DEFAULT_MARKERS) -> tuple[str, ...]:
    begin, end = markers
    return (begin,) * (n - 1) + tuple(tokens) + (end,)


def count_ngrams(sentences: Iterable, n: int,
                 markers: tuple[str, str] = DEFAULT_MARKERS) -> NGramTable:
    """Count every n-token window over marker-padded sentences."""
    _check_order(n)
    marker_set = set(markers)
    counter: Counter[Key] = Counter()
    for sentence in sentences:
        tokens = _token_seq(sentence)
        for token in tokens:
            if token in marker_set:
                raise MarkerCollision(
                    f"token {token!r} collides with a boundary marker")
        padded = pad_sentence(tokens, n, markers)
        counter.update(
            padded[i:i + n] for i in range(len(padded) - n + 1))
    return NGramTable.from_counter(n, counter)


def merge_tables(a: NGramTable, b: NGramTable) -> NGramTable:
    """Pointwise count addition; the shard-merge for parallel counting."""
    if a.order != b.order:
        raise OrderOutOfRange(
            f"cannot merge order {a.order} with order {b.order}")
    merged = Counter(a.counts)
    merged.update(b.counts)
    return NGramTable.from_counter(a.order, merged)


class LanguageModel:
    """Immutable table stack with MLE and chain-rule queries.

    ``min_count`` prunes rows below the threshold from orders >= 2 only;
    the order-1 table always stays complete so N and unigram scores are
    exact. Per-context sums reach exactly 1 only for unpruned models.
    """

    def __init__(self, tables: Mapping[int, NGramTable], max_order: int,
                 norm_config: NormalizationConfig,
                 markers: tuple[str, str] = DEFAULT_MARKERS):
        _check_order(max_order)
        for n in range(1, max_order + 1):
            if n not in tables:
                raise OrderOutOfRange(f"missing table for order {n}")
        self.tables = {n: tables[n] for n in range(1, max_order + 1)}
        self.max_order = max_order
        self.norm_config = norm_config
        self.markers = markers
        self._successors: dict[int, dict[Key, dict[str, int]]] | None = None
        self._unigrams_by_count: list[tuple[str, int]] | None = None

    @classmethod
    def build(cls, sentences: Sequence, max_order: int = MAX_SUPPORTED_ORDER,
              norm_config: NormalizationConfig | None = None,
              markers: tuple[str, str] = DEFAULT_MARKERS,
              min_count: int = 1) -> "LanguageModel":
        _check_order(max_order)
        sentences = list(sentences)
        tables = {}
        for n in range(1, max_order + 1):
            table = count_ngrams(sentences, n, markers)
            if min_count > 1 and n >= 2:
                pruned = {k: c for k, c in table.counts.items()
                          if c >= min_count}
                table = NGramTable.from_counter(n, pruned)
            tables[n] = table
        return cls(tables, max_order,
                   norm_config or NormalizationConfig(), markers)

    # -- basic accessors ---------------------------------------------------

    @property
    def begin_marker(self) -> str:
        return self.markers[0]

    @property
    def end_marker(self) -> str:
        return self.markers[1]

    @property
    def corpus_size_n(self) -> int:
        return self.tables[1].total

    @property
    def sentence_count(self) -> int:
        return self.tables[1].count((self.end_marker,))

    @property
    def fingerprint(self) -> str:
        return self.norm_config.fingerprint()

    def vocabulary(self, include_end_marker: bool = False) -> list[str]:
        """Order-1 words; the end marker only on request, begin never."""
        words = [k[0] for k in self.tables[1].counts
                 if k[0] != self.end_marker]
        if include_end_marker and self.sentence_count:
            words.append(self.end_marker)
        return words

    def unigram_count(self, word: str) -> int:
        return self.tables[1].count((word,))

    def count(self, key: Key) -> int:
        _check_order(len(key), self.max_order)
        return self.tables[len(key)].count(tuple(key))

    def context_count(self, context: Key) -> int:
        """Denominator for a context: table count, or the sentence count
        when the context is nothing but begin markers."""
        context = tuple(context)
        if not context:
            return self.corpus_size_n
        if all(t == self.begin_marker for t in context):
            return self.sentence_count
        _check_order(len(context), self.max_order)
        return self.tables[len(context)].count(context)

    # -- probabilities -----------------------------------------------------

    def mle_prob(self, word: str, context: Sequence[str] = ()) -> float:
        """c(context + word) / c(context); empty context uses c(word)/N."""
        context = tuple(context)
        if len(context) > self.max_order - 1:
            raise ContextTooLong(
                f"context of {len(context)} tokens exceeds order "
                f"{self.max_order} model")
        denominator = self.context_count(context)
        if denominator == 0:
            raise UndefinedDistribution(
                f"context {' '.join(context)!r} has zero count")
        return self.count(context + (word,)) / denominator

    def sequence_log_prob(self, tokens: Sequence[str], order: int) -> float:
        """Chain-rule log probability of a sentence at the given order."""
        _check_order(order, self.max_order)
        padded = pad_sentence(tuple(tokens), order, self.markers)
        log_prob = 0.0
        for i in range(order - 1, len(padded)):
            context = padded[i - order + 1:i]
            try:
                p = self.mle_prob(padded[i], context)
            except UndefinedDistribution:
                return -math.inf
            if p == 0.0:
                return -math.inf
            log_prob += math.log(p)
        return log_prob

    # -- derived views -----------------------------------------------------

    def truncated(self, order: int) -> "LanguageModel":
        """A model restricted to tables 1..order (shared, not copied)."""
        _check_order(order, self.max_order)
        return LanguageModel({n: self.tables[n] for n in range(1, order + 1)},
                             order, self.norm_config, self.markers)

    def successors(self, context: Key) -> Mapping[str, int]:
        """Observed words after ``context`` with their joint counts."""
        context = tuple(context)
        if len(context) + 1 > self.max_order:
            raise ContextTooLong(
                f"context of {len(context)} tokens exceeds order "
                f"{self.max_order} model")
        index = self._successor_index()
        return index[len(context)].get(context, {})

    def unigrams_by_count(self) -> list[tuple[str, int]]:
        """Non-marker words sorted by count desc, then codepoint asc."""
        if self._unigrams_by_count is None:
            rows = [(k[0], c) for k, c in self.tables[1].counts.items()
                    if k[0] != self.end_marker]
            rows.sort(key=lambda r: (-r[1], r[0]))
            self._unigrams_by_count = rows
        return self._unigrams_by_count

    def _successor_index(self) -> dict[int, dict[Key, dict[str, int]]]:
        if self._successors is None:
            index: dict[int, dict[Key, dict[str, int]]] = {}
            for n in range(1, self.max_order + 1):
                by_context: dict[Key, dict[str, int]] = defaultdict(dict)
                for key, count in self.tables[n].counts.items():
                    by_context[key[:-1]][key[-1]] = count
                index[n - 1] = dict(by_context)
            self._successors = index
        return self._successors
