"""Exact integer primitives: gcd certificates and one-unknown modular equations.

Everything operates on plain Python ints, so counting quantities that grow
like m**(n-1) stay exact no matter how large they get.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

__all__ = [
    "BezoutCertificate",
    "UnaryCongruenceSolution",
    "gcd",
    "extended_gcd",
    "multi_gcd_bezout",
    "solve_unary",
    "basis_size",
]


@dataclass(frozen=True)
class BezoutCertificate:
    """A gcd together with integer coefficients certifying it.

    For the values v1..vk the certificate was built from,
    sum(c * v for c, v in zip(coefficients, values)) == gcd holds exactly,
    gcd >= 0, and gcd divides every value.
    """

    gcd: int
    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class UnaryCongruenceSolution:
    """The solutions of a*x = b (mod m): x0, x0+step, ..., x0+step*(count-1).

    x0 is the least nonnegative solution, step = m // gcd(a, m) and
    count = gcd(a, m), so all listed residues lie in [0, m).
    """

    x0: int
    step: int
    count: int

    def residues(self) -> tuple[int, ...]:
        return tuple(self.x0 + self.step * k for k in range(self.count))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g; the canonical
    # small coefficients of the classic recursion, (0, 0) for a = b = 0.
    if b == 0:
        if a == 0:
            return 0, 0, 0
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    g, u, v = _egcd(b, a % b)
    return g, v, u - (a // b) * v


def extended_gcd(a: int, b: int) -> BezoutCertificate:
    """Certificate with gcd(a, b) and (u, v) such that u*a + v*b = gcd."""
    g, u, v = _egcd(a, b)
    return BezoutCertificate(g, (u, v))


def multi_gcd_bezout(values: Sequence[int]) -> BezoutCertificate:
    """Gcd of all values plus coefficients, by folding extended_gcd left to right.

    The left fold makes the coefficients deterministic: the same input list
    always yields the same certificate.
    """
    if not values:
        raise ValueError("multi_gcd_bezout needs at least one value")
    first = values[0]
    g = abs(first)
    coeffs = [0 if first == 0 else (1 if first > 0 else -1)]
    for a in values[1:]:
        g, s, t = _egcd(g, a)
        coeffs = [s * u for u in coeffs]
        coeffs.append(t)
    return BezoutCertificate(g, tuple(coeffs))


def solve_unary(a: int, b: int, m: int) -> UnaryCongruenceSolution | None:
    """Solve a*x = b (mod m) for a single unknown.

    Returns None when gcd(a, m) does not divide b (no solution exists);
    otherwise the canonical solution with the smallest nonnegative x0.
    """
    if m < 1:
        raise ValueError("modulus must be a positive integer")
    g, u, _ = _egcd(a, m)
    if b % g:
        return None
    step = m // g
    return UnaryCongruenceSolution(x0=u * (b // g) % step, step=step, count=g)


def basis_size(coeffs: Sequence[int], m: int) -> int:
    """Number of independent seed solutions of a1*x1 + ... + an*xn = b (mod m).

    Computes gcd(a1, ..., an, m) * |m|**(n-1) // prod(gcd(ai, m)).  The
    division is exact for every choice of coefficients and nonzero modulus,
    and the result does not depend on b.
    """
    if m == 0:
        raise ValueError("modulus must be nonzero")
    if not coeffs:
        raise ValueError("basis_size needs at least one coefficient")
    g = abs(m)
    for a in coeffs:
        g = gcd(g, a)
    numerator = g * abs(m) ** (len(coeffs) - 1)
    denominator = prod(gcd(a, m) for a in coeffs)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"inexact division {numerator} / {denominator}; this is a bug"
        )
    return quotient
