"""Exact harmonic numbers, certified rational enclosures, and the inequality
checks built on them.

The heavy lifting lives in the compiled module; this wrapper adds a few
conveniences for working with :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._certharm import *  # noqa: F401,F403
from ._certharm import (
    GammaEnclosure,
    Interval,
    Rational,
    __version__,
    gamma_enclosure,
    harmonic_exact,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]


def as_fraction(x) -> Fraction:
    """Exact conversion of a Rational to a Fraction."""
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected Rational, got {type(x).__name__}")


def as_fraction_bounds(x) -> tuple[Fraction, Fraction]:
    """Exact (lo, hi) Fractions of an Interval or GammaEnclosure."""
    if isinstance(x, Interval):
        return as_fraction(x.lo), as_fraction(x.hi)
    if isinstance(x, GammaEnclosure):
        return as_fraction(x.lo), as_fraction(x.hi)
    raise TypeError(f"expected Interval or GammaEnclosure, got {type(x).__name__}")


def harmonic(n: int) -> Fraction:
    """Exact H_n as a Fraction."""
    return as_fraction(harmonic_exact(n))


def euler_gamma_digits(n: int = 10000) -> str:
    """Decimal digits of Euler's constant certified by the enclosure at n."""
    return gamma_enclosure(n).interval().agreed_decimal(30)
