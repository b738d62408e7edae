"""Unstable modules, Milgram spaces and nilpotent polyGEM computations."""

from ._polygem import (
    InputError,
    ParseError,
    basis,
    classify,
    construct,
    milgram_generators,
    reduce,
    run_cli,
    series,
)

__all__ = [
    "InputError",
    "ParseError",
    "basis",
    "classify",
    "construct",
    "milgram_generators",
    "reduce",
    "run_cli",
    "series",
]
