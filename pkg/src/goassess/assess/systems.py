"""Access to the fuzzy systems shipped as package data."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..fml import FuzzySystem, parse_fml
from .knowledge import FML_1, FML_2

_FILES = {FML_1: "fml-1.xml", FML_2: "fml-2.xml"}


@lru_cache(maxsize=None)
def load_shipped_system(variant: str = FML_2) -> FuzzySystem:
    """Parse the packaged FML document for the given variant."""
    try:
        filename = _FILES[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r} (expected {FML_1} or {FML_2})") from None
    text = resources.files("goassess.data").joinpath(filename).read_text()
    return parse_fml(text)
