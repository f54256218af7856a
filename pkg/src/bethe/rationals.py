"""Exact rational scalars shared across the package.

All arithmetic in this library is exact; gmpy2.mpq is used when available
(identical semantics to fractions.Fraction, much faster), with Fraction as
fallback.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)

_FRACTION_TYPES = (int, Fraction, type(ONE))


def is_rat(x) -> bool:
    """True for plain numeric scalars (int / Fraction / mpq)."""
    return isinstance(x, _FRACTION_TYPES)


def rat(p, q=1):
    return Q(p, q)


def binomial(n: int, k: int):
    if k < 0 or k > n:
        return ZERO
    return Q(comb(n, k))


def format_rat(x) -> str:
    """Canonical "p/q" encoding, lowest terms, q > 0."""
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str):
    if "/" in s:
        p, q = s.split("/")
        return Q(int(p), int(q))
    return Q(int(s))
