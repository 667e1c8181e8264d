import math
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from minpairs.corpus import BOS, EOS, UNK, Vocab
from minpairs import ngram

import kn_oracle as KO
from toy_corpora import toy_family, train_quiet, compare_with_oracle


def _vocab(sents, min_count=1):
    return Vocab.build(sents, min_count=min_count)


# --- counting ---------------------------------------------------------------

def test_count_bigrams_tiny():
    sents = [["a", "b"]]
    table = ngram.count_ngrams(sents, _vocab(sents), 2)
    assert table.tables[1] == {(BOS, "a"): 1, ("a", "b"): 1, ("b", EOS): 1}
    assert table.tables[0] == {("a",): 1, ("b",): 1, (EOS,): 1}


def test_count_unigrams_repeated():
    sents = [["a", "a", "a"]]
    table = ngram.count_ngrams(sents, _vocab(sents), 1)
    assert table.tables[0] == {("a",): 3, (EOS,): 1}


def test_count_order_validation():
    with pytest.raises(ngram.NGramError):
        ngram.count_ngrams([["a"]], _vocab([["a"]]), 0)


def test_count_matches_brute_force_recount():
    # independent recount oracle over a mid-sized corpus
    import random
    rng = random.Random(7)
    sents = [[rng.choice("abcd") for _ in range(rng.randint(1, 8))] for _ in range(60)]
    order = 5
    table = ngram.count_ngrams(sents, _vocab(sents), order)
    mapped = [tuple(s) for s in sents]
    for k in (1, 3, 5):
        grams = KO.all_grams(mapped, order, k)
        assert set(table.tables[k - 1]) == grams
        for g in grams:
            assert table.tables[k - 1][g] == KO.raw_count(mapped, order, g)


def test_oov_tokens_counted_as_unk():
    sents = [["a", "a", "b"]]
    vocab = Vocab.build(sents, min_count=2)  # b falls below the cutoff
    table = ngram.count_ngrams(sents, vocab, 1)
    assert table.tables[0] == {("a",): 2, (UNK,): 1, (EOS,): 1}


# --- estimation: frozen longhand values -------------------------------------

# Oracle-computed (and spot-checked by hand) interpolated modified KN
# conditionals for the corpus ["a b", "a b", "b a"] at order 2.  With this
# corpus the bigram discounts are D1=1/3, D2=2 (n3=0), and the unigram
# order falls back to the fixed 0.75 discount (its continuation counts are
# all 2, so n1=0).  E.g. P(a) = (2-0.75)/6 + (0.75*3/6)/4 = 29/96.
FROZEN = {
    ((), "a"): 0.30208333333333337,
    ((), EOS): 0.30208333333333337,
    ((), UNK): 0.09375,
    (("a",), "b"): 0.23495370370370375,
    (("a",), EOS): 0.45717592592592593,
    (("b",), "a"): 0.45717592592592593,
    ((BOS,), "a"): 0.23495370370370375,
    ((BOS,), "b"): 0.45717592592592593,
}


@pytest.fixture(scope="module")
def toy_model():
    return train_quiet([["a", "b"], ["a", "b"], ["b", "a"]], 2)


def test_frozen_conditionals(toy_model):
    for (ctx, w), want in FROZEN.items():
        assert toy_model.cond_prob(ctx, w) == pytest.approx(want, rel=1e-12)


def test_frozen_sentence_logprobs(toy_model):
    assert toy_model.sentence_logprob(["a", "b"]) == pytest.approx(
        -1.887053113697041, rel=1e-12)
    assert toy_model.sentence_logprob(["b", "a"]) == pytest.approx(
        -1.0197499405572992, rel=1e-12)
    assert toy_model.sentence_logprob(["a"]) == pytest.approx(
        -0.9689343514181133, rel=1e-12)


def test_single_token_sentence_is_two_terms(toy_model):
    lps = toy_model.token_logprobs(["a"])
    assert len(lps) == 2
    assert lps[0] == pytest.approx(toy_model.cond_logprob((BOS,), "a"))
    assert lps[1] == pytest.approx(toy_model.cond_logprob(("a",), EOS))
    assert sum(lps) == pytest.approx(toy_model.sentence_logprob(["a"]))


def test_normalization_every_stored_context(toy_model):
    ngram.validate_normalization(toy_model, tol=1e-9)


def test_degenerate_counts_fall_back_with_warning():
    # every bigram occurs exactly twice -> n2 > 0 but n1 == 0 at order 2
    sents = [["a", "b"], ["a", "b"]]
    with pytest.warns(UserWarning, match="0.75"):
        model = ngram.estimate(ngram.count_ngrams(sents, _vocab(sents), 2))
    assert model.discounts[1] == (0.75, 0.75, 0.75)
    ngram.validate_normalization(model, tol=1e-9)


# --- oracle equivalence ------------------------------------------------------

@pytest.mark.parametrize("order", [1, 2, 3])
def test_oracle_equivalence_toy_family(order):
    for sents in toy_family():
        compare_with_oracle(sents, order, extra_contexts=[("q",), ("a", "q")])


@settings(max_examples=20, deadline=None)
@given(
    st.lists(
        st.lists(st.sampled_from("abc"), min_size=1, max_size=5),
        min_size=1, max_size=6,
    ),
    st.integers(min_value=1, max_value=3),
)
def test_oracle_equivalence_random(sents, order):
    compare_with_oracle(sents, order)


# --- query behaviour ---------------------------------------------------------

def test_backoff_product_for_unseen(toy_model):
    # unseen word in unseen context: product of backoff weights down to the
    # unigram (here the context word "a" is in vocabulary but the bigram
    # (a, unk) is unseen, so exactly one backoff weight applies)
    want = toy_model.backoffs[("a",)] + toy_model.probs[0][(UNK,)]
    assert toy_model.cond_logprob(("a",), "zzz") == pytest.approx(want)


def test_context_truncation(toy_model):
    full = toy_model.cond_logprob(("b", "a"), "b")
    assert toy_model.cond_logprob(("a", "b", "a"), "b") == full
    assert toy_model.cond_logprob(("x", "y", "b", "a"), "b") == full


def test_unseen_context_backs_off_with_weight_one(toy_model):
    # ("q" maps to <unk>; the context (<unk>,) was never seen)
    assert toy_model.cond_logprob(("q",), "a") == toy_model.probs[0][("a",)]


def test_most_vs_no_bigram_mechanism():
    sents = (
        [["most", "students", "laugh"]] * 5
        + [["no", "teachers", "laugh"]] * 2
        + [["students", "laugh"]]
    )
    model = train_quiet(sents, 2)
    assert model.cond_prob(("most",), "students") > model.cond_prob(("no",), "students")


def test_prefix_logprob_strictly_decreasing(toy_model):
    # Appending a token strictly lowers the prefix log-probability (every
    # conditional is < 1).  Stated over prefixes: with the end-marker term
    # included the claim is false in general, e.g. extending "a" to "a b"
    # here raises the total because "a" never ends a sentence.
    tokens = ["a", "b", "a", "zzz", "b"]
    lps = toy_model.token_logprobs(tokens)
    prefix = list(_cumsum(lps[:-1]))
    assert all(b < a for a, b in zip(prefix, prefix[1:]))


def _cumsum(xs):
    total = 0.0
    for x in xs:
        total += x
        yield total


def test_has_oov(toy_model):
    assert toy_model.has_oov(["a", "zzz"])
    assert not toy_model.has_oov(["a", "b"])


# --- perplexity --------------------------------------------------------------

def test_perplexity_matches_oracle():
    sents = [["a", "b", "c"], ["c", "a"], ["b"]]
    model = train_quiet(sents, 2)
    words = sorted({t for s in sents for t in s})
    total = sum(KO.sentence_logprob10(sents, 2, words, s) for s in sents)
    n = sum(len(s) + 1 for s in sents)
    assert ngram.perplexity(model, sents) == pytest.approx(
        10.0 ** (-total / n), rel=1e-9)


def test_perplexity_approaches_one_with_repetition():
    last = None
    for reps in (4, 16, 64, 256):
        sents = [["a", "b"]] * reps
        model = train_quiet(sents, 2)
        ppl = ngram.perplexity(model, sents)
        assert ppl > 1.0
        if last is not None:
            assert ppl < last
        last = ppl
    assert last < 1.1


# --- ARPA round trip ---------------------------------------------------------

def test_arpa_round_trip_scores(tmp_path, toy_model):
    path = tmp_path / "toy.arpa"
    ngram.write_arpa(toy_model, path)
    loaded = ngram.read_arpa(path)
    for tokens in (["a", "b"], ["b", "a", "a"], ["zzz"], ["a"]):
        assert loaded.sentence_logprob(tokens) == pytest.approx(
            toy_model.sentence_logprob(tokens), abs=1e-10)


def test_arpa_rewrite_is_byte_identical(tmp_path, toy_model):
    p1, p2 = tmp_path / "m1.arpa", tmp_path / "m2.arpa"
    ngram.write_arpa(toy_model, p1)
    ngram.write_arpa(ngram.read_arpa(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()


SRILM_STYLE = """\
\\data\\
ngram 1=4
ngram 2=5

\\1-grams:
-0.5228787	</s>
-99	<s>	-0.3010300
-0.4259687	a	-0.3979400
-0.6020600	b	-0.3010300

\\2-grams:
-0.3010300	<s> a
-0.6989700	<s> b
-0.3979400	a b
-0.3010300	a </s>
-0.1760913	b </s>

\\end\\
"""


def test_external_toolkit_style_arpa(tmp_path):
    # space-separated n-grams, %.7f probabilities, no <unk> entry
    path = tmp_path / "ext.arpa"
    path.write_text(SRILM_STYLE)
    model = ngram.read_arpa(path)
    assert model.order == 2
    lp = model.sentence_logprob(["a", "b"])
    assert lp == pytest.approx(-0.3010300 + -0.3979400 + -0.1760913, abs=1e-7)
    # backed-off query chains the stored backoff weight
    assert model.cond_logprob(("b",), "a") == pytest.approx(
        -0.3010300 + -0.4259687, abs=1e-7)
    # without an <unk> entry, out-of-vocabulary tokens cannot be scored
    with pytest.raises(ngram.NGramError, match="<unk>"):
        model.sentence_logprob(["a", "zzz"])


def test_malformed_arpa_rejected(tmp_path):
    path = tmp_path / "bad.arpa"
    path.write_text("\\data\\\nngram 1=1\n\n\\1-grams:\n-0.5 a\n")
    with pytest.raises(ngram.NGramError, match="end"):
        ngram.read_arpa(path)
