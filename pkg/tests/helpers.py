"""Shared fixtures: seeded random instance generators."""

import random
import string

from lincong import LinearCongruence, ParsedCongruence, normalize, summarize


def random_instances(seed, count, arities=(1, 2, 3),
                     coeff_bound=20, mod_bound=20) -> list[LinearCongruence]:
    """Deterministic list of `count` solvable instances."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(arities)
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(n)]
        b = rng.randint(-coeff_bound, coeff_bound)
        m = rng.randint(1, mod_bound)
        c = normalize(coeffs, b, m)
        if summarize(c).solvable:
            out.append(c)
    return out


def random_parsed(rng: random.Random) -> ParsedCongruence:
    """A random congruence with distinct single-letter-ish variable names."""
    k = rng.randint(1, 5)
    names = tuple(rng.sample(string.ascii_lowercase, k))
    coeffs = tuple(rng.randint(-99, 99) for _ in range(k))
    modulus = 0
    while modulus == 0:
        modulus = rng.randint(-99, 99)
    return ParsedCongruence(names, coeffs, rng.randint(-99, 99), modulus)
