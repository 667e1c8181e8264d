"""Forced-choice evaluation and accuracy aggregation.

A model is correct on a pair iff it assigns strictly higher probability to
the grammatical member.  Equal scores are ties: counted incorrect (a model
that cannot tell the members apart has not met the criterion) and reported
separately.  The decision depends only on score order, so any strictly
increasing rescoring of both members leaves every verdict unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .generation import MinimalPair


def decide(score_grammatical: float, score_ungrammatical: float) -> tuple[bool, bool]:
    """(correct, tie) under the strict forced-choice criterion."""
    tie = score_grammatical == score_ungrammatical
    return (score_grammatical > score_ungrammatical, tie)


@dataclass
class PairResult:
    pair_id: str
    condition: str
    subcondition: str
    features: dict[str, str]
    score_grammatical: float
    score_ungrammatical: float
    correct: bool
    tie: bool

    def to_json(self) -> str:
        return json.dumps({
            "pair_id": self.pair_id,
            "condition": self.condition,
            "subcondition": self.subcondition,
            "features": self.features,
            "score_grammatical": self.score_grammatical,
            "score_ungrammatical": self.score_ungrammatical,
            "correct": self.correct,
            "tie": self.tie,
        })

    @classmethod
    def from_json(cls, line: str) -> "PairResult":
        d = json.loads(line)
        return cls(**d)

    def group_value(self, key: str) -> str:
        if key == "condition":
            return self.condition
        if key == "subcondition":
            return self.subcondition
        return self.features.get(key, "n/a")


def score_pairs(pairs: Iterable[MinimalPair], pair_scorer) -> Iterator[PairResult]:
    """One PairResult per scorable pair.

    `pair_scorer` returns (grammatical, ungrammatical) scores or None for a
    missing pair; adapters record missing and OOV pair ids on themselves.
    """
    for pair in pairs:
        scores = pair_scorer.pair_scores(pair)
        if scores is None:
            continue
        g, u = scores
        correct, tie = decide(g, u)
        yield PairResult(
            pair_id=pair.pair_id,
            condition=pair.condition,
            subcondition=pair.subcondition,
            features=pair.features,
            score_grammatical=g,
            score_ungrammatical=u,
            correct=correct,
            tie=tie,
        )


def read_results(path) -> Iterator[PairResult]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield PairResult.from_json(line)


def write_results(results: Iterable[PairResult], path) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for r in results:
            fh.write(r.to_json())
            fh.write("\n")
            n += 1
    return n


# --- aggregation --------------------------------------------------------------

@dataclass
class GroupStats:
    count: int = 0
    correct: int = 0
    ties: int = 0

    @property
    def accuracy(self) -> float:
        return self.correct / self.count if self.count else 0.0


@dataclass
class AccuracyTable:
    """Grouped forced-choice accuracies with exact counts.

    Shared by model evaluation and the human judgment service, so a report
    can render model and human columns through one path.
    """

    keys: tuple[str, ...]
    groups: dict[tuple[str, ...], GroupStats] = field(default_factory=dict)

    def add(self, group: tuple[str, ...], correct: bool, tie: bool = False) -> None:
        stats = self.groups.setdefault(group, GroupStats())
        stats.count += 1
        stats.correct += int(correct)
        stats.ties += int(tie)

    def get(self, group: tuple[str, ...]) -> GroupStats | None:
        return self.groups.get(group)

    @property
    def total_count(self) -> int:
        return sum(s.count for s in self.groups.values())

    @property
    def total_ties(self) -> int:
        return sum(s.ties for s in self.groups.values())

    def rows(self) -> list[tuple[tuple[str, ...], GroupStats]]:
        return sorted(self.groups.items())


def aggregate(results: Iterable[PairResult],
              keys: Sequence[str] = ("condition",)) -> AccuracyTable:
    """Exact-ratio accuracies grouped by the given keys.

    Keys are `condition`, `subcondition`, or any feature key of the pairs
    (including the auto-recorded lexical-slot keys like `lex_verb` and
    `lex_anaphor`).
    """
    table = AccuracyTable(keys=tuple(keys))
    for r in results:
        group = tuple(r.group_value(k) for k in keys)
        table.add(group, r.correct, r.tie)
    return table


# --- alternative comparison statistics -----------------------------------------

def normalized_score(scorer, unigram_logprob: Callable[[str], float],
                     tokens: Sequence[str]) -> float:
    """Sentence log-probability minus the sum of its tokens' unigram
    log-probabilities (the sentence-end term is not normalized).

    Tokens shared by both members of a pair cancel, so on a minimal pair
    this changes the decision only through the contrast tokens' unigram
    frequencies.
    """
    return scorer.sentence_logprob(tokens) - sum(unigram_logprob(t) for t in tokens)


def word_trace(scorer, tokens: Sequence[str]) -> list[float]:
    """Per-token log-probabilities, sentence-end term last.

    Sanity-checks that the trace sums to the scorer's total within 1e-6.
    """
    trace = scorer.token_logprobs(tokens)
    total = scorer.sentence_logprob(tokens)
    if abs(sum(trace) - total) > 1e-6:
        raise ValueError(
            f"scorer trace sums to {sum(trace)!r} but total is {total!r}")
    return trace
