#!/usr/bin/env python3
"""Emit the bundled sample corpus (src/minpairs/data/sample_corpus.txt).

One thousand distinct grammatical sentences sampled with a fixed seed from
the bundled grammar's full generation stream, one per line, pre-tokenized.
Useful for smoke-training an n-gram model and for vocabulary coverage
checks; not a substitute for a real training corpus.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from minpairs.grammar import load_grammar
from minpairs.generation import generate_pairs

SEED = 20180901
N_SENTENCES = 1000


def main():
    root = Path(__file__).resolve().parents[1]
    grammar = load_grammar(root / "src" / "minpairs" / "data" / "full.grammar.json")
    seen = set()
    sentences = []
    for pair in generate_pairs(grammar):
        s = " ".join(pair.grammatical)
        if s not in seen:
            seen.add(s)
            sentences.append(s)
    rng = random.Random(SEED)
    sample = rng.sample(sentences, N_SENTENCES)
    out = root / "src" / "minpairs" / "data" / "sample_corpus.txt"
    out.write_text("\n".join(sample) + "\n", encoding="utf-8")
    print(f"wrote {out} ({N_SENTENCES} sentences)")


if __name__ == "__main__":
    main()
