"""Exact invariants of symplectic torus actions with coisotropic orbits.

Thin re-export of the compiled extension. All list and space inputs are the
same text format the ``torinv`` command-line tool reads; rationals cross the
boundary as ``"p/q"`` strings so every value stays exact.
"""

from ._torinv import (  # noqa: F401
    PreconditionError,
    SchemaError,
    canonical,
    decompose,
    dim_m,
    equal,
    invariants,
    validate,
)

__all__ = [
    "PreconditionError",
    "SchemaError",
    "canonical",
    "decompose",
    "dim_m",
    "equal",
    "invariants",
    "validate",
]
