"""Shared toy-corpus family for oracle-equivalence and normalization checks.

Small enough for the brute-force oracle (vocab <= 5 distinct words, <= 50
tokens per corpus), structured to cover repeated sentences, singleton
words, skewed frequencies, and every-bigram-seen cases.
"""

import random
import warnings

from minpairs.corpus import Vocab
from minpairs import ngram

import kn_oracle as KO


def _split(lines):
    return [line.split() for line in lines]


FIXED_CORPORA = [
    _split(["a"]),
    _split(["a a a a"]),
    _split(["a b", "a b", "b a"]),
    _split(["a b c a b", "c c a", "b a c a"]),
    _split(["a a b b", "a b a b", "b b b", "a"]),
    _split(["a b c d e", "e d c b a", "a c e b d", "a b c d e"]),
    _split(["a b a c a d", "d c b a", "a a a", "b c d"]),
]


def random_corpus(seed, max_tokens=50, max_vocab=5):
    rng = random.Random(seed)
    alphabet = ["a", "b", "c", "d", "e"][: rng.randint(1, max_vocab)]
    sents = []
    budget = rng.randint(5, max_tokens)
    while budget > 0:
        n = rng.randint(1, min(6, budget))
        sents.append([rng.choice(alphabet) for _ in range(n)])
        budget -= n
    return sents


def toy_family():
    return FIXED_CORPORA + [random_corpus(seed) for seed in range(3)]


def train_quiet(sents, order, min_count=1):
    vocab = Vocab.build(sents, min_count=min_count)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        model = ngram.estimate(ngram.count_ngrams(sents, vocab, order))
    return model


def compare_with_oracle(sents, order, rel_tol=1e-10, norm_tol=1e-9,
                        extra_contexts=()):
    """Every conditional at every stored context must match the brute-force
    oracle to rel_tol, and every stored context must normalize to norm_tol.

    Returns the number of (context, word) probabilities checked.
    """
    model = train_quiet(sents, order)
    words = sorted({t for s in sents for t in s})
    vocab = sorted(set(words) | {KO.EOS, KO.UNK})
    checked = 0
    contexts = list(model.contexts()) + list(extra_contexts)
    for ctx in contexts:
        total = 0.0
        for w in vocab:
            got = model.cond_prob(ctx, w)
            want = KO.cond_prob(sents, order, words, ctx, w)
            assert got > 0.0
            assert abs(got - want) <= rel_tol * abs(want), (
                f"P({w}|{' '.join(ctx) or '()'}) order={order}: "
                f"model={got!r} oracle={want!r}"
            )
            total += got
            checked += 1
        if ctx in set(model.contexts()):
            assert abs(total - 1.0) <= norm_tol, (
                f"context {' '.join(ctx) or '()'} sums to {total!r}"
            )
    return checked
