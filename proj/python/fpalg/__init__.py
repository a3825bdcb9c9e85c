"""Exact verification engine for finitely presented algebras over Q(i).

Thin wrapper around the compiled extension. Everything crosses the boundary
as strings, ints, and plain dicts so results can be asserted or serialized
without further conversion.
"""

from ._fpalg import (
    builtins,
    builtin_homs,
    confluence,
    expand,
    normalize,
    pbw_count,
    rep_check,
    verify_all,
    verify_diagram,
    verify_hom,
    verify_hom_file,
    verify_inverse,
)

__all__ = [
    "builtins",
    "builtin_homs",
    "confluence",
    "expand",
    "normalize",
    "pbw_count",
    "rep_check",
    "verify_all",
    "verify_diagram",
    "verify_hom",
    "verify_hom_file",
    "verify_inverse",
]

__version__ = "0.1.0"
