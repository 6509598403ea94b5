"""Multivariate linear congruences over the integers.

Solvability, exact solution counts, per-seed expansion, bases of pairwise
independent solutions, and full enumeration for

    a1*x1 + a2*x2 + ... + an*xn ≡ b (mod m).
"""

from .core import (
    LinearCongruence,
    Solution,
    SolutionBasis,
    SolveSummary,
    StrideLattice,
    are_dependent,
    build_basis,
    enumerate_all,
    enumerate_raw,
    expand,
    find_particular,
    iter_basis,
    module_generators,
    normalize,
    satisfies,
    summarize,
)
from .intmath import (
    BezoutCertificate,
    UnaryCongruenceSolution,
    basis_size,
    extended_gcd,
    multi_gcd_bezout,
    solve_unary,
)
from .oracle import CapExceededError, OracleReport, brute_force, verify
from .parser import ParsedCongruence, ParseError, format_congruence, parse

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "CapExceededError",
    "LinearCongruence",
    "OracleReport",
    "ParseError",
    "ParsedCongruence",
    "Solution",
    "SolutionBasis",
    "SolveSummary",
    "StrideLattice",
    "UnaryCongruenceSolution",
    "are_dependent",
    "basis_size",
    "brute_force",
    "build_basis",
    "enumerate_all",
    "enumerate_raw",
    "expand",
    "extended_gcd",
    "find_particular",
    "format_congruence",
    "iter_basis",
    "module_generators",
    "multi_gcd_bezout",
    "normalize",
    "parse",
    "satisfies",
    "solve_unary",
    "summarize",
    "verify",
]
