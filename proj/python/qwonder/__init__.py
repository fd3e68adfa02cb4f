"""Exact computer algebra for the quantum SL2 family.

Thin wrapper over the compiled module: normal forms, matrix-coefficient
filtrations, Rees and associated-graded algebras, Poisson limits,
graded-module torsion, and the named verification suites.
"""

try:
    from ._qwonder import *  # noqa: F401,F403  (installed wheel layout)
    from ._qwonder import InternalError, UserError  # noqa: F401
except ImportError:  # development layout: module next to the build tree
    from _qwonder import *  # noqa: F401,F403
    from _qwonder import InternalError, UserError  # noqa: F401

__all__ = [
    "InternalError",
    "UserError",
    "cg_json",
    "contexts",
    "dims",
    "gr_mul",
    "mul",
    "nf",
    "nf_json",
    "phi",
    "poisson_bracket",
    "pw_components",
    "rees_mul",
    "semiclassical",
    "torsion",
    "verify",
    "verify_all",
    "veronese_dims",
]
