"""Access to the bundled grammar and sample corpus."""

from importlib.resources import files


def bundled_path(name: str):
    """Filesystem path of a bundled data file (e.g. 'full.grammar.json')."""
    return files("minpairs").joinpath("data", name)


def bundled_grammar_path():
    return bundled_path("full.grammar.json")


def sample_corpus_path():
    return bundled_path("sample_corpus.txt")
