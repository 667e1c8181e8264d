"""Scorers and external score ingestion.

The evaluation engine works in natural-log space, the convention of score
files produced by neural LM toolkits.  The bundled n-gram model works in
base-10 logs (the ARPA convention); conversion happens here, at the scoring
boundary, and nowhere else.

Score files are JSON Lines with fields:
    sentence_id     "<pair_id>:grammatical" or "<pair_id>:ungrammatical"
    logprob         total natural-log probability of the sentence
    token_logprobs  optional per-token array (sentence-end term included);
                    must sum to logprob within 1e-6 or the record is rejected
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Protocol, Sequence

from .generation import MinimalPair
from .ngram import NGramModel

LN10 = math.log(10.0)

TOKEN_SUM_TOL = 1e-6


class ScoreError(ValueError):
    pass


class Scorer(Protocol):
    """Deterministic sentence scorer in natural-log space."""

    def sentence_logprob(self, tokens: Sequence[str]) -> float: ...

    def token_logprobs(self, tokens: Sequence[str]) -> list[float]: ...


class NGramScorer:
    """Natural-log adapter over an ARPA-convention n-gram model."""

    def __init__(self, model: NGramModel):
        self.model = model

    def sentence_logprob(self, tokens: Sequence[str]) -> float:
        return self.model.sentence_logprob(tokens) * LN10

    def token_logprobs(self, tokens: Sequence[str]) -> list[float]:
        return [lp * LN10 for lp in self.model.token_logprobs(tokens)]

    def has_oov(self, tokens: Sequence[str]) -> bool:
        return self.model.has_oov(tokens)

    def unigram_logprob(self, token: str) -> float:
        return self.model.cond_logprob((), token) * LN10


def sentence_id(pair_id: str, role: str) -> str:
    if role not in ("grammatical", "ungrammatical"):
        raise ScoreError(f"unknown member role {role!r}")
    return f"{pair_id}:{role}"


@dataclass
class ScoreRecord:
    sentence_id: str
    logprob: float
    token_logprobs: list[float] | None = None

    def to_json(self) -> str:
        d = {"sentence_id": self.sentence_id, "logprob": self.logprob}
        if self.token_logprobs is not None:
            d["token_logprobs"] = self.token_logprobs
        return json.dumps(d)


@dataclass
class ScoreSet:
    """External scores indexed by sentence_id."""

    records: dict[str, ScoreRecord] = field(default_factory=dict)
    rejected: list[str] = field(default_factory=list)  # one message per bad record

    def __len__(self) -> int:
        return len(self.records)

    def get(self, sid: str) -> ScoreRecord | None:
        return self.records.get(sid)


def ingest_scores(path) -> ScoreSet:
    """Load and validate a score file.

    Duplicate sentence_ids keep the last record (with a warning); records
    whose token_logprobs disagree with logprob by more than 1e-6 are
    rejected with a message and never indexed.
    """
    out = ScoreSet()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                d = json.loads(line)
                rec = ScoreRecord(
                    sentence_id=d["sentence_id"],
                    logprob=float(d["logprob"]),
                    token_logprobs=(
                        [float(x) for x in d["token_logprobs"]]
                        if d.get("token_logprobs") is not None else None
                    ),
                )
            except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
                out.rejected.append(f"line {lineno}: unparseable record ({exc})")
                continue
            if rec.token_logprobs is not None:
                total = sum(rec.token_logprobs)
                if abs(total - rec.logprob) > TOKEN_SUM_TOL:
                    out.rejected.append(
                        f"line {lineno}: token_logprobs sum {total!r} does not "
                        f"match logprob {rec.logprob!r} for {rec.sentence_id}"
                    )
                    continue
            if rec.sentence_id in out.records:
                warnings.warn(
                    f"duplicate sentence_id {rec.sentence_id!r} at line "
                    f"{lineno}; keeping the later record"
                )
            out.records[rec.sentence_id] = rec
    return out


def write_scores(pairs, scorer: Scorer, path, per_token: bool = False) -> int:
    """Score both members of each pair into a score file; returns record count."""
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            for role, tokens in (("grammatical", pair.grammatical),
                                 ("ungrammatical", pair.ungrammatical)):
                if per_token:
                    tls = scorer.token_logprobs(tokens)
                    rec = ScoreRecord(sentence_id(pair.pair_id, role),
                                      sum(tls), tls)
                else:
                    rec = ScoreRecord(sentence_id(pair.pair_id, role),
                                      scorer.sentence_logprob(tokens))
                fh.write(rec.to_json())
                fh.write("\n")
                n += 1
    return n


# --- pair-level scoring adapters ---------------------------------------------

class SentencePairScorer:
    """Scores pairs with a live sentence scorer; flags OOV members."""

    def __init__(self, scorer):
        self.scorer = scorer
        self.missing: list[str] = []
        self.oov_pairs: list[str] = []

    def pair_scores(self, pair: MinimalPair) -> tuple[float, float] | None:
        if hasattr(self.scorer, "has_oov"):
            if (self.scorer.has_oov(pair.grammatical)
                    or self.scorer.has_oov(pair.ungrammatical)):
                self.oov_pairs.append(pair.pair_id)
        return (self.scorer.sentence_logprob(pair.grammatical),
                self.scorer.sentence_logprob(pair.ungrammatical))


class ExternalPairScorer:
    """Scores pairs by lookup in an ingested ScoreSet.

    Pairs with either member absent are recorded in `missing` and skipped,
    never silently dropped from anyone's denominator.
    """

    def __init__(self, scores: ScoreSet):
        self.scores = scores
        self.missing: list[str] = []
        self.oov_pairs: list[str] = []

    def pair_scores(self, pair: MinimalPair) -> tuple[float, float] | None:
        g = self.scores.get(sentence_id(pair.pair_id, "grammatical"))
        u = self.scores.get(sentence_id(pair.pair_id, "ungrammatical"))
        if g is None or u is None:
            self.missing.append(pair.pair_id)
            return None
        return (g.logprob, u.logprob)
