"""Cardinal direction calculus toolkit.

Geometries, networks and variable maps are exchanged as JSON text in the
same versioned formats the ``cdc`` command-line tool uses.
"""

from ._core import (
    FORMAT_VERSION,
    CdcError,
    MissingVariable,
    NotThreeSat,
    ParseError,
    TooLarge,
    brute_force_sat,
    check,
    drm,
    is_basic,
    reduce,
    relations,
    render,
    solve,
    witness,
    witness_decides,
)

__all__ = [
    "FORMAT_VERSION",
    "CdcError",
    "MissingVariable",
    "NotThreeSat",
    "ParseError",
    "TooLarge",
    "brute_force_sat",
    "check",
    "drm",
    "is_basic",
    "reduce",
    "relations",
    "render",
    "solve",
    "witness",
    "witness_decides",
]
