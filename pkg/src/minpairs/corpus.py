"""Tokenization, vocabulary construction, and corpus streaming.

Corpora are plain text, one sentence per line, pre-tokenized (punctuation
already separated by spaces), UTF-8.  Everything is lowercased so that
generated test sentences hit the same vocabulary entries as corpus tokens.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Iterable, Iterator, Sequence

EOS = "</s>"
UNK = "<unk>"
# Sentence-start marker.  Context-only: it is never part of a Vocab and is
# never predicted, but it appears in n-gram contexts and in ARPA files.
BOS = "<s>"


class CorpusError(ValueError):
    pass


def tokenize(line: str) -> list[str]:
    """Lowercase and split on whitespace.

    The corpus format is pre-tokenized, so no punctuation splitting is
    attempted here.  Empty or whitespace-only lines yield [].
    """
    return line.lower().split()


def read_corpus(path: str | os.PathLike) -> Iterator[list[str]]:
    """Stream sentences from a one-sentence-per-line text file.

    Empty lines are skipped; no empty sentence is ever emitted.
    """
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            toks = tokenize(line)
            if toks:
                yield toks


class Vocab:
    """Bijective token <-> dense integer id mapping with reserved markers.

    Id 0 is the sentence-end marker, id 1 the unknown-token marker; both are
    always present.  Tokens below the frequency cutoff are not given ids and
    map to the unknown marker.
    """

    EOS_ID = 0
    UNK_ID = 1

    def __init__(self, tokens: Sequence[str], freqs: Counter | None = None):
        self._tokens: list[str] = [EOS, UNK]
        for t in tokens:
            if t not in (EOS, UNK):
                self._tokens.append(t)
        self._ids: dict[str, int] = {t: i for i, t in enumerate(self._tokens)}
        if len(self._ids) != len(self._tokens):
            raise CorpusError("duplicate token in vocabulary")
        self.freqs: Counter = freqs if freqs is not None else Counter()

    @classmethod
    def build(cls, corpus: Iterable[Sequence[str]], min_count: int = 2) -> "Vocab":
        """Count tokens over `corpus` and keep those with frequency >= min_count.

        Kept tokens get ids in order of decreasing frequency (ties broken
        alphabetically) so that id assignment is deterministic.
        """
        if min_count < 1:
            raise CorpusError(f"min_count must be >= 1, got {min_count}")
        freqs: Counter = Counter()
        n_sents = 0
        for sent in corpus:
            n_sents += 1
            freqs.update(sent)
        if n_sents == 0 or not freqs:
            raise CorpusError("cannot build a vocabulary from an empty corpus")
        kept = sorted(
            (t for t, c in freqs.items() if c >= min_count),
            key=lambda t: (-freqs[t], t),
        )
        return cls(kept, freqs)

    def __len__(self) -> int:
        return len(self._tokens)

    def __contains__(self, token: str) -> bool:
        return token in self._ids

    def __iter__(self) -> Iterator[str]:
        return iter(self._tokens)

    def id_of(self, token: str) -> int:
        """Id of `token`, or the unknown-marker id if out of vocabulary."""
        return self._ids.get(token, self.UNK_ID)

    def token_of(self, idx: int) -> str:
        return self._tokens[idx]

    def map_token(self, token: str) -> str:
        """`token` itself if in vocabulary, else the unknown marker."""
        return token if token in self._ids else UNK

    def map_sentence(self, tokens: Sequence[str]) -> list[str]:
        return [self.map_token(t) for t in tokens]


def oov_report(vocab: Vocab, tokens: Iterable[str]) -> list[str]:
    """Sorted list of the given tokens that are out of vocabulary.

    Used to report grammar lexicon items missing from a training corpus.
    """
    return sorted({t for t in tokens if t not in vocab})
