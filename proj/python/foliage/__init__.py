"""Exact computations with holomorphic foliation germs and degree-two foliations."""

import json

from ._foliage import (
    DomainError,
    FoliageError,
    ParseError,
    __version__,
    chi_contains,
    is_integrable,
    normalize,
    run_command,
    suite_names,
)
from . import _foliage


def milnor(text, params=()):
    return json.loads(_foliage.milnor_json(text, list(params)))


def analyze(text):
    return json.loads(_foliage.germ_json(text))


def cli(*args):
    """Run a subcommand; returns (exit_code, decoded JSON or None)."""
    code, out, _ = run_command([str(a) for a in args])
    return code, json.loads(out) if out.strip() else None


def verify_suite(name="all"):
    code, report = cli("verify-suite", name)
    return code == 0, report


__all__ = [
    "DomainError", "FoliageError", "ParseError", "__version__", "analyze", "chi_contains", "cli",
    "is_integrable", "milnor", "normalize", "run_command", "suite_names", "verify_suite",
]
