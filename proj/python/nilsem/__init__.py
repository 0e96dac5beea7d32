"""Finite semirings with absorbing zero: commutators, congruences, ideals.

The heavy lifting lives in the compiled extension ``nilsem._core``; this
package re-exports its public surface.
"""

from ._core import (
    BudgetError,
    DomainError,
    FalsificationError,
    InternalError,
    Semiring,
    binary_commutator,
    census,
    centralizes,
    classify,
    commutator,
    congruences,
    cube,
    enumerate_semirings,
    eval_term,
    fixture,
    fixture_names,
    ideal_commutator,
    ideal_product,
    ideals,
    is_additively_cancellative,
    is_n_nilpotent,
    is_n_solvable,
    is_n_supernilpotent,
    make,
    parity_check,
    parse,
    power,
    rho,
    verify_laws,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "FalsificationError",
    "InternalError",
    "Semiring",
    "binary_commutator",
    "census",
    "centralizes",
    "classify",
    "commutator",
    "congruences",
    "cube",
    "enumerate_semirings",
    "eval_term",
    "fixture",
    "fixture_names",
    "ideal_commutator",
    "ideal_product",
    "ideals",
    "is_additively_cancellative",
    "is_n_nilpotent",
    "is_n_solvable",
    "is_n_supernilpotent",
    "make",
    "parity_check",
    "parse",
    "power",
    "rho",
    "verify_laws",
]

__version__ = "0.1.0"
