"""Backoff n-gram language model with interpolated modified Kneser-Ney smoothing.

Counting convention: each sentence is padded with order-1 start markers and
one end marker, and every k-gram (k = 1..order) ending at a predicted
position (a real token or the end marker) is counted.  The start marker is
therefore never a predicted token: it appears only inside contexts, carries
no unigram probability mass, and is written to ARPA files with the
conventional -99 placeholder log-probability.

Estimation follows Chen & Goodman's modified Kneser-Ney:

  * at orders below the highest, counts are replaced by continuation counts
    (the number of distinct single-token left extensions), except for
    k-grams starting with the start marker, which keep raw counts since
    nothing can precede them;
  * three discounts per order are derived from the counts-of-counts of the
    counts actually used at that order:
        Y  = n1 / (n1 + 2*n2)
        D1 = 1 - 2*Y*n2/n1,  D2 = 2 - 3*Y*n3/n2,  D3+ = 3 - 4*Y*n4/n3
    with a fixed 0.75 fallback for all three when the statistics are
    degenerate (n1 or n2 zero, or any derived discount negative); when only
    n3 is zero, D3+ falls back to D2;
  * probabilities interpolate down to a uniform 1/|V| base case, so every
    in-vocabulary token has strictly positive probability everywhere;
  * the interpolated distribution is stored in backoff form: the stored
    probability of an n-gram is its full interpolated value and the backoff
    weight of a context is its leftover-mass coefficient, which makes every
    stored context's conditional distribution sum to one.

All probabilities are base-10 logs, matching the ARPA text format.
"""

from __future__ import annotations

import math
import os
import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .corpus import BOS, EOS, UNK, Vocab

LOG10_PSEUDO_ZERO = -99.0  # conventional ARPA placeholder for "never predicted"


class NGramError(ValueError):
    pass


Gram = tuple[str, ...]


@dataclass
class CountTable:
    """Exact k-gram counts for all k up to `order`, over vocab-mapped tokens."""

    order: int
    vocab: Vocab
    tables: list[dict[Gram, int]]  # tables[k-1]: k-gram -> count
    n_sentences: int = 0

    def counts_of_counts(self, k: int, upto: int = 4) -> list[int]:
        """[n1, .., n_upto] over the raw k-gram counts."""
        hist = Counter(self.tables[k - 1].values())
        return [hist.get(r, 0) for r in range(1, upto + 1)]


def count_ngrams(corpus: Iterable[Sequence[str]], vocab: Vocab, order: int) -> CountTable:
    """Count all k-grams (k <= order) with start padding and end markers.

    Every sentence contributes, for each predicted position (its tokens plus
    the end marker), one k-gram per k in 1..order ending at that position.
    Tokens outside the vocabulary are counted as the unknown marker.
    """
    if order < 1:
        raise NGramError(f"order must be >= 1, got {order}")
    tables: list[dict[Gram, int]] = [{} for _ in range(order)]
    n_sentences = 0
    pad = (BOS,) * (order - 1)
    for sent in corpus:
        if not sent:
            continue
        n_sentences += 1
        seq = pad + tuple(vocab.map_sentence(sent)) + (EOS,)
        for i in range(order - 1, len(seq)):
            for k in range(1, order + 1):
                gram = seq[i - k + 1 : i + 1]
                tab = tables[k - 1]
                tab[gram] = tab.get(gram, 0) + 1
    if n_sentences == 0:
        raise NGramError("cannot count n-grams over an empty corpus")
    return CountTable(order=order, vocab=vocab, tables=tables, n_sentences=n_sentences)


def _kn_discounts(values: Iterable[int], order_k: int) -> tuple[float, float, float]:
    """Modified KN discounts (D1, D2, D3+) from a bag of adjusted counts."""
    hist = Counter(v for v in values if v > 0)
    n1, n2, n3, n4 = (hist.get(r, 0) for r in (1, 2, 3, 4))
    if n1 == 0 or n2 == 0:
        warnings.warn(
            f"degenerate counts-of-counts at order {order_k} "
            f"(n1={n1}, n2={n2}); falling back to a fixed 0.75 discount"
        )
        return (0.75, 0.75, 0.75)
    y = n1 / (n1 + 2.0 * n2)
    d1 = 1.0 - 2.0 * y * n2 / n1
    d2 = 2.0 - 3.0 * y * n3 / n2
    d3 = 3.0 - 4.0 * y * n4 / n3 if n3 > 0 else d2
    if d1 < 0 or d2 < 0 or d3 < 0:
        warnings.warn(
            f"negative derived discount at order {order_k} "
            f"(D1={d1:.3f}, D2={d2:.3f}, D3+={d3:.3f}); "
            "falling back to a fixed 0.75 discount"
        )
        return (0.75, 0.75, 0.75)
    return (d1, d2, d3)


def _discount_for(count: int, d: tuple[float, float, float]) -> float:
    if count <= 0:
        return 0.0
    if count == 1:
        return d[0]
    if count == 2:
        return d[1]
    return d[2]


@dataclass
class NGramModel:
    """Immutable-after-estimation backoff model in base-10 log space.

    `probs[k-1]` maps stored k-grams to log10 conditional probabilities,
    `backoffs` maps contexts (length 1..order-1) to log10 backoff weights.
    `lexicon` is the set of predictable tokens (unigram entries, minus the
    start marker).
    """

    order: int
    probs: list[dict[Gram, float]]
    backoffs: dict[Gram, float]
    discounts: list[tuple[float, float, float]] = field(default_factory=list)
    lexicon: set[str] = field(default_factory=set)

    def __post_init__(self):
        if not self.lexicon:
            self.lexicon = {g[0] for g in self.probs[0] if g[0] != BOS}

    def map_token(self, token: str) -> str:
        if token in self.lexicon or token == BOS:
            return token
        if UNK not in self.lexicon:
            raise NGramError(
                f"token {token!r} is out of vocabulary and the model has no "
                f"{UNK} entry to back off to"
            )
        return UNK

    def has_oov(self, tokens: Sequence[str]) -> bool:
        return any(t not in self.lexicon for t in tokens)

    def cond_logprob(self, context: Sequence[str], word: str) -> float:
        """log10 P(word | context) via longest-match lookup with backoff chaining.

        Contexts longer than order-1 are truncated to their final tokens;
        out-of-vocabulary tokens are mapped to the unknown marker.
        """
        w = self.map_token(word)
        ctx = tuple(self.map_token(t) for t in context)
        if self.order > 1:
            ctx = ctx[-(self.order - 1):]
        else:
            ctx = ()
        acc = 0.0
        while True:
            p = self.probs[len(ctx)].get(ctx + (w,))
            if p is not None:
                return acc + p
            if not ctx:
                raise NGramError(f"no unigram entry for token {w!r}")
            acc += self.backoffs.get(ctx, 0.0)
            ctx = ctx[1:]

    def cond_prob(self, context: Sequence[str], word: str) -> float:
        return 10.0 ** self.cond_logprob(context, word)

    def token_logprobs(self, tokens: Sequence[str]) -> list[float]:
        """Per-position log10 probabilities for tokens plus the end marker."""
        if not tokens:
            raise NGramError("cannot score an empty token sequence")
        seq = (BOS,) * (self.order - 1) + tuple(tokens) + (EOS,)
        out = []
        for i in range(self.order - 1, len(seq)):
            out.append(self.cond_logprob(seq[i - self.order + 1 : i], seq[i]))
        return out

    def sentence_logprob(self, tokens: Sequence[str]) -> float:
        """Total log10 probability of the sentence including its end marker."""
        return sum(self.token_logprobs(tokens))

    def contexts(self) -> Iterator[Gram]:
        """All stored contexts (the empty context plus every backoff context)."""
        yield ()
        yield from self.backoffs.keys()


def estimate(counts: CountTable) -> NGramModel:
    """Interpolated modified Kneser-Ney estimation from exact counts."""
    n = counts.order
    for k in range(1, n + 1):
        if not counts.tables[k - 1]:
            raise NGramError(f"no counts at order {k}; cannot estimate")
    vocab_tokens = list(counts.vocab)

    # Adjusted counts: continuation counts below the top order, except for
    # start-marker-initial k-grams, which cannot have a left extension.
    adjusted: list[dict[Gram, int]] = [dict() for _ in range(n)]
    adjusted[n - 1] = dict(counts.tables[n - 1])
    for k in range(n - 1, 0, -1):
        adj: dict[Gram, int] = {}
        for gram in counts.tables[k]:  # (k+1)-grams
            suffix = gram[1:]
            adj[suffix] = adj.get(suffix, 0) + 1
        for gram, c in counts.tables[k - 1].items():
            if gram[0] == BOS:
                adj[gram] = c
        adjusted[k - 1] = adj
    # Every predictable token keeps a unigram entry even at zero count, so
    # that the interpolation with the uniform base assigns it mass.
    for t in vocab_tokens:
        adjusted[0].setdefault((t,), 0)

    discounts = [_kn_discounts(adjusted[k - 1].values(), k) for k in range(1, n + 1)]

    v_size = len(vocab_tokens)
    probs: list[dict[Gram, float]] = [dict() for _ in range(n)]
    backoffs: dict[Gram, float] = {}

    for k in range(1, n + 1):
        d = discounts[k - 1]
        totals: dict[Gram, int] = {}
        mass: dict[Gram, float] = {}
        for gram, c in adjusted[k - 1].items():
            ctx = gram[:-1]
            totals[ctx] = totals.get(ctx, 0) + c
            mass[ctx] = mass.get(ctx, 0.0) + _discount_for(c, d)
        gammas = {ctx: mass[ctx] / totals[ctx] for ctx in totals if totals[ctx] > 0}
        if k == 1:
            g0 = gammas[()]
            base = 1.0 / v_size
            total = totals[()]
            for gram, c in adjusted[0].items():
                p = max(c - _discount_for(c, d), 0.0) / total + g0 * base
                probs[0][gram] = math.log10(p)
        else:
            lower = probs[k - 2]
            for gram, c in adjusted[k - 1].items():
                ctx = gram[:-1]
                f = max(c - _discount_for(c, d), 0.0) / totals[ctx]
                p = f + gammas[ctx] * (10.0 ** lower[gram[1:]])
                probs[k - 1][gram] = math.log10(p)
            for ctx, g in gammas.items():
                backoffs[ctx] = math.log10(g)

    return NGramModel(order=n, probs=probs, backoffs=backoffs,
                      discounts=discounts)


def train(corpus: Iterable[Sequence[str]], vocab: Vocab, order: int) -> NGramModel:
    return estimate(count_ngrams(corpus, vocab, order))


def perplexity(model: NGramModel, corpus: Iterable[Sequence[str]]) -> float:
    """10 ** (-avg log10 prob), each token and each end marker counting once."""
    total = 0.0
    n_events = 0
    for sent in corpus:
        if not sent:
            continue
        total += model.sentence_logprob(sent)
        n_events += len(sent) + 1
    if n_events == 0:
        raise NGramError("cannot compute perplexity over an empty corpus")
    return 10.0 ** (-total / n_events)


def validate_normalization(model: NGramModel, tol: float = 1e-9,
                           contexts: Iterable[Gram] | None = None) -> None:
    """Check that every stored context's conditional distribution sums to 1.

    Raises NGramError naming the first offending context.  Exhaustive over
    the model's contexts by default; pass a sample for large models.
    """
    vocab = sorted(model.lexicon)
    for ctx in (model.contexts() if contexts is None else contexts):
        s = sum(model.cond_prob(ctx, w) for w in vocab)
        if abs(s - 1.0) > tol:
            raise NGramError(
                f"context {' '.join(ctx) or '(empty)'} sums to {s!r}, not 1"
            )


# --- ARPA serialization ---------------------------------------------------

def write_arpa(model: NGramModel, path: str | os.PathLike) -> None:
    """Write the model in ARPA backoff text format.

    Entries are sorted lexicographically per order.  Contexts that are never
    predicted themselves (start-marker-initial histories) are written with
    the conventional -99 log-probability so their backoff weights survive a
    round trip.  Floats are written with repr precision, so a write/read
    cycle reproduces scores exactly.
    """
    sections: list[list[str]] = []
    for k in range(1, model.order + 1):
        entries: dict[Gram, float] = dict(model.probs[k - 1])
        for ctx in model.backoffs:
            if len(ctx) == k and ctx not in entries:
                entries[ctx] = LOG10_PSEUDO_ZERO
        lines = []
        for gram in sorted(entries):
            parts = [repr(entries[gram]), " ".join(gram)]
            bow = model.backoffs.get(gram)
            if bow is not None:
                parts.append(repr(bow))
            lines.append("\t".join(parts))
        sections.append(lines)

    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\\data\\\n")
        for k, lines in enumerate(sections, start=1):
            fh.write(f"ngram {k}={len(lines)}\n")
        for k, lines in enumerate(sections, start=1):
            fh.write(f"\n\\{k}-grams:\n")
            fh.write("\n".join(lines))
            fh.write("\n")
        fh.write("\n\\end\\\n")


def read_arpa(path: str | os.PathLike) -> NGramModel:
    """Load an ARPA backoff model (ours or an external toolkit's)."""
    declared: dict[int, int] = {}
    probs: list[dict[Gram, float]] = []
    backoffs: dict[Gram, float] = {}
    state = "preamble"
    cur_k = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line == "\\data\\":
                state = "data"
                continue
            if line == "\\end\\":
                state = "end"
                break
            if line.startswith("\\") and line.endswith("-grams:"):
                cur_k = int(line[1:-7])
                while len(probs) < cur_k:
                    probs.append({})
                state = "grams"
                continue
            if state == "data":
                if line.startswith("ngram "):
                    lhs, _, rhs = line[6:].partition("=")
                    declared[int(lhs)] = int(rhs)
                continue
            if state == "grams":
                # Tokens cannot contain whitespace, so splitting on any
                # whitespace handles both tab- and space-separated files:
                # a k-gram line has 1+k fields, or 2+k with a backoff.
                fields = line.split()
                if len(fields) == cur_k + 1:
                    lp, toks, bow = fields[0], fields[1:], None
                elif len(fields) == cur_k + 2:
                    lp, toks, bow = fields[0], fields[1:-1], fields[-1]
                else:
                    raise NGramError(f"{path}:{lineno}: unparseable {cur_k}-gram entry")
                gram = tuple(toks)
                probs[cur_k - 1][gram] = float(lp)
                if bow is not None:
                    backoffs[gram] = float(bow)
    if state != "end":
        raise NGramError(f"{path}: missing \\end\\ marker")
    if not probs or not probs[0]:
        raise NGramError(f"{path}: no unigram section")
    for k, cnt in declared.items():
        have = len(probs[k - 1]) if k <= len(probs) else 0
        if have != cnt:
            warnings.warn(
                f"{path}: header declares {cnt} {k}-grams but {have} were read"
            )
    return NGramModel(order=len(probs), probs=probs, backoffs=backoffs)
