"""Verification engine for finite Krasner hyperrings."""

from ._core import (
    EngineError,
    Instance,
    acceptance,
    builtin,
    builtin_names,
    check,
    emit,
    ideals,
    parse,
    quotient,
    run,
    spectral,
    theorem,
)

__all__ = [
    "EngineError",
    "Instance",
    "acceptance",
    "builtin",
    "builtin_names",
    "check",
    "emit",
    "ideals",
    "parse",
    "quotient",
    "run",
    "spectral",
    "theorem",
]
