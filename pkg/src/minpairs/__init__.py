"""Minimal-pair test suite generation and forced-choice evaluation of language models."""

__version__ = "0.1.0"
