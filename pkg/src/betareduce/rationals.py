"""Exact rational parameters and their integer/fraction decompositions.

The evaluation routines need the parameter split as ``n + p/q`` (positive
case, with an explicit flag for exact integers) or ``-n + p/q`` (negative
case, 0 < p/q < 1).  Fractions are always held in lowest terms; decimal input
is converted exactly, never through a binary float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergentParameter, OutsideDomain, ParseError

# Exact parameter type used throughout the package.
RationalNu = Fraction

_GRAMMAR = re.compile(r"-?\d+(?:/\d+|\.\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or a finite decimal literal into an exact fraction.

    Decimals convert exactly ("12.3" -> 123/10); the result is in lowest
    terms.  Anything outside ``[-]digits[/digits]`` / ``[-]digits[.digits]``
    raises :class:`ParseError`, as does a zero denominator.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if not _GRAMMAR.fullmatch(s):
        raise ParseError(f"not a fraction or decimal literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(s)


def render_rational(x: Fraction) -> str:
    """Canonical lowest-terms form: "p/q", or a bare integer."""
    return str(Fraction(x))


@dataclass(frozen=True)
class PosDecomposition:
    """A positive rational split as n + p/q with 0 <= p < q in lowest terms.

    ``r_is_one`` marks exact integers: the value is then n + 1 and the p/q
    fields are unused (kept at 0/1), routing evaluation to the pure-log form.
    """

    n: int
    p: int
    q: int
    r_is_one: bool = False

    def reconstruct(self) -> Fraction:
        if self.r_is_one:
            return Fraction(self.n + 1)
        return self.n + Fraction(self.p, self.q)


@dataclass(frozen=True)
class NegDecomposition:
    """A negative non-integer rational split as -n + p/q with 0 < p < q."""

    n: int
    p: int
    q: int

    def reconstruct(self) -> Fraction:
        return -self.n + Fraction(self.p, self.q)


def decompose_pos(nu: Fraction) -> PosDecomposition:
    """Split nu > 0 as floor(nu) plus a reduced proper fraction.

    Exact positive integers come back flagged with n = nu - 1 so the caller
    applies the integer-parameter formula; the general form excludes them.
    """
    nu = Fraction(nu)
    if nu <= 0:
        raise OutsideDomain(f"positive decomposition needs nu > 0, got {nu}")
    if nu.denominator == 1:
        return PosDecomposition(n=int(nu) - 1, p=0, q=1, r_is_one=True)
    n = nu.numerator // nu.denominator
    r = nu - n
    return PosDecomposition(n=n, p=r.numerator, q=r.denominator)


def decompose_neg(nu: Fraction) -> NegDecomposition:
    """Split non-integer nu < 0 as -n + p/q with 0 < p/q < 1 reduced.

    Integers <= 0 raise :class:`DivergentParameter` (the underlying series
    diverges there); nu > 0 raises :class:`OutsideDomain`.
    """
    nu = Fraction(nu)
    if nu.denominator == 1 and nu <= 0:
        raise DivergentParameter(f"divergent at the non-positive integer {nu}")
    if nu >= 0:
        raise OutsideDomain(f"negative decomposition needs nu < 0, got {nu}")
    n = -(nu.numerator // nu.denominator)
    r = nu + n
    return NegDecomposition(n=n, p=r.numerator, q=r.denominator)
