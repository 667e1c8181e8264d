import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from minpairs.data_files import bundled_grammar_path, sample_corpus_path
from minpairs.grammar import load_grammar


@pytest.fixture(scope="session")
def full_grammar():
    return load_grammar(bundled_grammar_path())


@pytest.fixture(scope="session")
def sample_corpus_file():
    return sample_corpus_path()


# A miniature grammar exercising every mechanism (inflection, selection,
# distinctness, multi-token surfaces, all four contrast kinds) while staying
# small enough to enumerate by hand in tests.
TINY_GRAMMAR = {
    "conditions": [
        {"id": "agr", "display": "Agreement", "section": "Agreement"},
        {"id": "refl", "display": "Reflexive", "section": "Reflexive"},
        {"id": "npi", "display": "NPI", "section": "NPI"},
        {"id": "npi_rc", "display": "NPI across RC", "section": "NPI"},
    ],
    "features": {"number": ["sg", "pl"], "tense": ["past", "future"]},
    "lexicon": {
        "dets": {"entries": [{"lemma": "the", "form": "the"}]},
        "quants": {"entries": [
            {"lemma": "no", "form": "no"},
            {"lemma": "most", "form": "most"},
            {"lemma": "many", "form": "many"},
        ]},
        "comps": {"entries": [{"lemma": "that", "form": "that"}]},
        "nouns": {
            "inflects": "number",
            "entries": [
                {"lemma": "author", "forms": {"sg": "author", "pl": "authors"},
                 "features": {"animacy": "animate", "gender": "unspecified"}},
                {"lemma": "security guard",
                 "forms": {"sg": "security guard", "pl": "security guards"},
                 "features": {"animacy": "animate", "gender": "unspecified"}},
            ],
        },
        "verbs": {
            "inflects": "number",
            "entries": [
                {"lemma": "laugh", "forms": {"sg": "laughs", "pl": "laugh"}},
                {"lemma": "be_tall", "forms": {"sg": "is tall", "pl": "are tall"}},
            ],
        },
        "emb_verbs": {
            "inflects": "number",
            "entries": [{"lemma": "like", "forms": {"sg": "likes", "pl": "like"}}],
        },
        "refl_verbs": {"entries": [{"lemma": "hurt", "form": "hurt"}]},
        "auxes": {"entries": [
            {"lemma": "have", "form": "have", "features": {"tense": "past"}},
            {"lemma": "will", "form": "will", "features": {"tense": "future"}},
        ]},
        "npi_verbs": {
            "inflects": "tense",
            "entries": [{"lemma": "be_famous",
                         "forms": {"past": "been famous", "future": "be famous"}}],
        },
        "npis": {"entries": [{"lemma": "ever", "form": "ever"}]},
        "anaphors": {"entries": [
            {"lemma": "himself", "form": "himself",
             "features": {"number": "sg", "gender": "masc"}},
            {"lemma": "herself", "form": "herself",
             "features": {"number": "sg", "gender": "fem"}},
            {"lemma": "themselves", "form": "themselves",
             "features": {"number": "pl", "gender": "unspecified"}},
        ]},
    },
    "templates": [
        {
            "condition": "agr",
            "subcondition": "{num}",
            "vars": {"num": "number"},
            "slots": [
                {"name": "det", "class": "dets", "lemma": "the"},
                {"name": "subject", "class": "nouns", "inflect": "num"},
                {"name": "verb", "class": "verbs", "inflect": "num"},
            ],
            "features": {"main_number": "{num}"},
            "contrast": {"kind": "inflection_swap", "target": "verb"},
        },
        {
            "condition": "refl",
            "subcondition": "{num}",
            "vars": {"num": "number"},
            "slots": [
                {"name": "det", "class": "dets", "lemma": "the"},
                {"name": "subject", "class": "nouns", "inflect": "num"},
                {"name": "verb", "class": "refl_verbs"},
                {"name": "anaphor", "class": "anaphors", "select": {"number": "num"}},
            ],
            "features": {"main_number": "{num}"},
            "contrast": {"kind": "anaphor_swap", "target": "anaphor",
                         "map": {"himself": ["themselves"],
                                 "herself": ["themselves"],
                                 "themselves": ["himself", "herself"]}},
        },
        {
            "condition": "npi",
            "subcondition": "{tense}",
            "vars": {"tense": "tense"},
            "slots": [
                {"name": "quant", "class": "quants", "lemma": "no"},
                {"name": "subject", "class": "nouns", "inflect_value": "pl"},
                {"name": "aux", "class": "auxes", "select": {"tense": "tense"}},
                {"name": "npi", "class": "npis", "lemma": "ever"},
                {"name": "verb", "class": "npi_verbs", "inflect": "tense"},
            ],
            "features": {"tense": "{tense}"},
            "contrast": {"kind": "quantifier_swap", "target": "quant",
                         "replacements": ["most", "many"]},
        },
        {
            "condition": "npi_rc",
            "subcondition": "{tense}",
            "vars": {"tense": "tense"},
            "slots": [
                {"name": "quant", "class": "quants", "lemma": "no"},
                {"name": "subject", "class": "nouns", "inflect_value": "pl"},
                {"name": "that", "class": "comps", "lemma": "that"},
                {"name": "det2", "class": "dets", "lemma": "the"},
                {"name": "emb_subject", "class": "nouns", "inflect_value": "pl"},
                {"name": "emb_verb", "class": "emb_verbs", "inflect_value": "pl"},
                {"name": "aux", "class": "auxes", "select": {"tense": "tense"}},
                {"name": "npi", "class": "npis", "lemma": "ever"},
                {"name": "verb", "class": "npi_verbs", "inflect": "tense"},
            ],
            "features": {"tense": "{tense}"},
            "contrast": {"kind": "licensor_swap", "slot_a": "quant", "slot_b": "det2"},
        },
    ],
}


@pytest.fixture()
def tiny_grammar():
    import copy
    return load_grammar(copy.deepcopy(TINY_GRAMMAR))


@pytest.fixture()
def tiny_grammar_doc():
    import copy
    return copy.deepcopy(TINY_GRAMMAR)
