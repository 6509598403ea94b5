"""Multivariate linear congruences a1*x1 + ... + an*xn = b (mod m).

A solution is a vector of n residues in [0, m); two solutions are distinct
when they differ in at least one coordinate mod m.  Writing
d = gcd(a1, ..., an, m), the facts this module is built on are:

* the congruence is solvable iff d divides b, and then has exactly
  d * m**(n-1) distinct solutions;
* shifting a known solution coordinatewise by multiples of the strides
  g_i = m // gcd(a_i, m) yields prod(gcd(a_i, m)) distinct solutions (the
  "expansion" of that seed);
* two solutions whose difference is divisible by g_i in every coordinate i
  are *dependent*: one lies in the other's expansion.  Dependence is an
  equivalence relation, its classes all have size prod(gcd(a_i, m)), and a
  set of one representative per class (a *basis*) regenerates the whole
  solution set through expansion.

All functions are pure; enumeration is lazy wherever the output can be large.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import intmath

__all__ = [
    "LinearCongruence",
    "StrideLattice",
    "SolutionBasis",
    "SolveSummary",
    "normalize",
    "summarize",
    "module_generators",
    "are_dependent",
    "satisfies",
    "find_particular",
    "expand",
    "enumerate_raw",
    "iter_basis",
    "build_basis",
    "enumerate_all",
]

Solution = tuple[int, ...]


@dataclass(frozen=True)
class LinearCongruence:
    """A normalized instance: modulus >= 1, coefficients and rhs in [0, modulus)."""

    coeffs: tuple[int, ...]
    rhs: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1 (use normalize() on raw input)")
        if not self.coeffs:
            raise ValueError("at least one coefficient is required")
        if any(not 0 <= a < self.modulus for a in self.coeffs):
            raise ValueError("coefficients must be reduced into [0, modulus)")
        if not 0 <= self.rhs < self.modulus:
            raise ValueError("rhs must be reduced into [0, modulus)")

    @property
    def arity(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class StrideLattice:
    """Per-coordinate strides g_i = m // gcd(a_i, m).

    The integer combinations of the axis vectors (0, ..., g_i, ..., 0) form
    the lattice of differences between dependent solutions, so membership of
    a difference vector reduces to coordinatewise divisibility by g_i.
    """

    strides: tuple[int, ...]
    modulus: int


@dataclass(frozen=True)
class SolutionBasis:
    """Pairwise-independent solutions whose expansions cover the solution set.

    param_bounds holds d_i = gcd(a_i, m), the number of expansion steps per
    coordinate; strides holds g_i = m // d_i, the step size.
    """

    solutions: tuple[Solution, ...]
    param_bounds: tuple[int, ...]
    strides: tuple[int, ...]


@dataclass(frozen=True)
class SolveSummary:
    """The derived scalars of an instance.

    solution_count and basis_size describe the solvable case; both are
    reported even for unsolvable instances (they depend only on the
    coefficients and the modulus, and are useful diagnostics).
    """

    gcd_all: int         # gcd(a1, ..., an, m)
    solvable: bool       # gcd_all divides rhs
    solution_count: int  # gcd_all * m**(n-1), distinct solutions when solvable
    expansion_count: int # prod(gcd(ai, m)), solutions one seed expands into
    basis_size: int      # solution_count // expansion_count, always exact


def normalize(raw_coeffs: Sequence[int], raw_b: int, raw_m: int) -> LinearCongruence:
    """Build the canonical instance: modulus |m|, everything reduced mod m.

    Normalization never changes the solution set.  Rejects a zero modulus and
    an empty coefficient list.
    """
    if raw_m == 0:
        raise ValueError("modulus must be nonzero")
    coeffs = tuple(raw_coeffs)
    if not coeffs:
        raise ValueError("at least one coefficient is required")
    m = abs(raw_m)
    return LinearCongruence(tuple(a % m for a in coeffs), raw_b % m, m)


def summarize(c: LinearCongruence) -> SolveSummary:
    """Solvability plus the counting scalars of the instance."""
    m = c.modulus
    d = m
    for a in c.coeffs:
        d = gcd(d, a)
    p2 = 1
    for a in c.coeffs:
        p2 *= gcd(a, m)
    return SolveSummary(
        gcd_all=d,
        solvable=c.rhs % d == 0,
        solution_count=d * m ** (c.arity - 1),
        expansion_count=p2,
        basis_size=intmath.basis_size(c.coeffs, m),
    )


def module_generators(c: LinearCongruence) -> StrideLattice:
    """The stride lattice of the instance: g_i = m // gcd(a_i, m)."""
    m = c.modulus
    return StrideLattice(strides=tuple(m // gcd(a, m) for a in c.coeffs), modulus=m)


def are_dependent(x: Sequence[int], y: Sequence[int], lattice: StrideLattice) -> bool:
    """True iff x - y lies in the stride lattice, i.e. g_i | (x_i - y_i) for all i.

    Well defined on residues because every stride divides the modulus.
    """
    n = len(lattice.strides)
    if len(x) != n or len(y) != n:
        raise ValueError(f"arity mismatch: lattice has {n} coordinates, "
                         f"got vectors of length {len(x)} and {len(y)}")
    return all((xi - yi) % g == 0 for xi, yi, g in zip(x, y, lattice.strides))


def satisfies(x: Sequence[int], c: LinearCongruence) -> bool:
    """True iff the residue vector solves the congruence."""
    if len(x) != c.arity:
        raise ValueError(f"arity mismatch: expected {c.arity} residues, got {len(x)}")
    return sum(a * xi for a, xi in zip(c.coeffs, x)) % c.modulus == c.rhs


def find_particular(c: LinearCongruence) -> Solution | None:
    """One deterministic solution of the instance, or None when unsolvable.

    Combines a Bezout certificate of the coefficients with a one-unknown
    solve: with g0 = gcd(a1, ..., an) and coefficients u_i such that
    sum(u_i * a_i) = g0, any y with g0*y = b (mod m) gives the solution
    x_i = u_i * y mod m.  Such a y exists exactly when the congruence is
    solvable, because gcd(g0, m) = gcd(a1, ..., an, m).
    """
    s = summarize(c)
    if not s.solvable:
        return None
    cert = intmath.multi_gcd_bezout(c.coeffs)
    y = intmath.solve_unary(cert.gcd, c.rhs, c.modulus)
    assert y is not None  # guaranteed by solvability
    return tuple(u * y.x0 % c.modulus for u in cert.coefficients)


def _require_solution(x: Solution, c: LinearCongruence) -> None:
    if len(x) != c.arity:
        raise ValueError(f"arity mismatch: expected {c.arity} residues, got {len(x)}")
    if any(not 0 <= xi < c.modulus for xi in x):
        raise ValueError(f"{x} is not reduced into [0, {c.modulus})")
    if not satisfies(x, c):
        raise ValueError(f"{x} does not satisfy the congruence")


def expand(x0: Sequence[int], c: LinearCongruence) -> Iterator[Solution]:
    """All solutions obtained from the seed x0 by stride shifts, lazily.

    Yields exactly prod(gcd(a_i, m)) pairwise-distinct solutions
    x_i = x0_i + (m // gcd(a_i, m)) * t_i with parameter tuples
    (t_1, ..., t_n), 0 <= t_i < gcd(a_i, m), in lexicographic order; the
    first yield is x0 itself.  The seed is validated before any yield.
    """
    x0 = tuple(x0)
    _require_solution(x0, c)
    return _expand_iter(x0, c)


def _lazy_product(bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # lexicographic odometer over range(b) per coordinate; itertools.product
    # would materialize each range as a tuple, unusable for huge moduli
    if any(b <= 0 for b in bounds):
        return
    counters = [0] * len(bounds)
    while True:
        yield tuple(counters)
        i = len(bounds) - 1
        while i >= 0 and counters[i] == bounds[i] - 1:
            counters[i] = 0
            i -= 1
        if i < 0:
            return
        counters[i] += 1


def _expand_iter(x0: Solution, c: LinearCongruence) -> Iterator[Solution]:
    m = c.modulus
    bounds = [gcd(a, m) for a in c.coeffs]
    strides = [m // d for d in bounds]
    for ts in _lazy_product(bounds):
        yield tuple((xi + g * t) % m for xi, g, t in zip(x0, strides, ts))


def enumerate_raw(c: LinearCongruence) -> Iterator[Solution]:
    """Every distinct solution exactly once, in lexicographic order, lazily.

    Scans the first n-1 coordinates over [0, m)**(n-1) and solves for the
    last coordinate; for an unsolvable instance the stream is empty.
    """
    m = c.modulus
    head, last = c.coeffs[:-1], c.coeffs[-1]
    for prefix in _lazy_product((m,) * (c.arity - 1)):
        residual = (c.rhs - sum(a * x for a, x in zip(head, prefix))) % m
        sol = intmath.solve_unary(last, residual, m)
        if sol is None:
            continue
        for k in range(sol.count):
            yield prefix + (sol.x0 + sol.step * k,)


def iter_basis(c: LinearCongruence,
               candidates: Iterable[Sequence[int]] | None = None) -> Iterator[Solution]:
    """Greedily yield pairwise-independent solutions until a full basis is out.

    Keeps the first candidate of every dependence class in stream order;
    because dependence is an equivalence relation, first-seen representatives
    are sound and exactly basis_size of them exist.  `candidates` defaults to
    enumerate_raw(c) and only needs to cover every class.  The instance must
    be solvable.
    """
    lattice = module_generators(c)
    target = summarize(c).basis_size
    if candidates is None:
        candidates = enumerate_raw(c)
    kept: list[Solution] = []
    for cand in candidates:
        cand = tuple(cand)
        if any(are_dependent(cand, rep, lattice) for rep in kept):
            continue
        kept.append(cand)
        yield cand
        if len(kept) == target:
            return
    raise RuntimeError(f"candidate stream exhausted after {len(kept)} of "
                       f"{target} independent solutions; this is a bug")


def build_basis(c: LinearCongruence,
                candidates: Iterable[Sequence[int]] | None = None,
                limit: int | None = None) -> SolutionBasis | None:
    """A full basis of independent solutions, or None when unsolvable.

    The default candidate stream makes the result deterministic; passing a
    different `candidates` ordering may pick different representatives but
    always the same number of them.  `limit` caps how many representatives
    are collected (a guardrail for instances with a huge basis).
    """
    if not summarize(c).solvable:
        return None
    reps: Iterator[Solution] = iter_basis(c, candidates)
    if limit is not None:
        reps = itertools.islice(reps, limit)
    m = c.modulus
    return SolutionBasis(
        solutions=tuple(reps),
        param_bounds=tuple(gcd(a, m) for a in c.coeffs),
        strides=tuple(m // gcd(a, m) for a in c.coeffs),
    )


def enumerate_all(basis: SolutionBasis, c: LinearCongruence) -> Iterator[Solution]:
    """Every distinct solution, lazily: the expansions of the basis in order.

    For a full basis this yields exactly summarize(c).solution_count pairwise
    distinct solutions; as a set it equals enumerate_raw(c).
    """
    for seed in basis.solutions:
        yield from expand(seed, c)
