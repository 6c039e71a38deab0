"""Bundled example models and samples, loadable without a file path."""

from __future__ import annotations

from importlib import resources

from .automata import PDFA, loads_pdfa
from .sample import PreferenceSample, loads_sample


def _read(name: str) -> str:
    return resources.files("prefdfa.data").joinpath(name).read_text(encoding="utf-8")


def parity_pdfa() -> PDFA:
    """Two-letter demo model whose states track letter-count parities."""
    return loads_pdfa(_read("parity.pdfa"))


def parity_sample() -> PreferenceSample:
    """Hand-picked comparisons consistent with :func:`parity_pdfa`."""
    return loads_sample(_read("parity.sample"))


def garden_pdfa() -> PDFA:
    """Bee-garden preference model over pollination sequences."""
    return loads_pdfa(_read("garden.pdfa"))


def fixture_text(name: str) -> str:
    """Raw text of a bundled fixture file (for writing copies to disk)."""
    return _read(name)
