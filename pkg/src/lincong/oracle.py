"""Exhaustive ground-truth solver, for differential testing of the fast paths.

brute_force scans every tuple in [0, m)**n and shares nothing with the
solvers in core beyond the LinearCongruence type; that independence is the
point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LinearCongruence, build_basis, enumerate_all, summarize

__all__ = ["DEFAULT_CAP", "CapExceededError", "OracleReport", "brute_force", "verify"]

DEFAULT_CAP = 10**7


class CapExceededError(ValueError):
    """The m**n search space is too large for an exhaustive scan."""


@dataclass(frozen=True)
class OracleReport:
    solution_count: int
    solutions: frozenset[tuple[int, ...]]
    agrees_with_summary: bool
    agrees_with_basis: bool


def brute_force(c: LinearCongruence, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """The exact solution set, by scanning all m**n residue tuples."""
    space = c.modulus ** c.arity
    if space > cap:
        raise CapExceededError(
            f"search space m**n = {space} exceeds the cap of {cap} tuples")
    m = c.modulus
    found = set()
    for index in range(space):
        # decode the index as n base-m digits; coordinate order is
        # irrelevant for a set
        x = []
        for _ in range(c.arity):
            index, digit = divmod(index, m)
            x.append(digit)
        if sum(a * xi for a, xi in zip(c.coeffs, x)) % m == c.rhs:
            found.add(tuple(x))
    return found


def verify(c: LinearCongruence, cap: int = DEFAULT_CAP) -> OracleReport:
    """Compare the brute-force set against the counting and basis machinery."""
    found = brute_force(c, cap)
    s = summarize(c)
    expected = s.solution_count if s.solvable else 0
    basis = build_basis(c)
    regenerated = set(enumerate_all(basis, c)) if basis is not None else set()
    return OracleReport(
        solution_count=len(found),
        solutions=frozenset(found),
        agrees_with_summary=len(found) == expected,
        agrees_with_basis=found == regenerated,
    )
