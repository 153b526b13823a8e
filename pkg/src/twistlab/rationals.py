"""Exact rational scalars.

Every number in the package is an arbitrary-precision rational; there is no
floating point anywhere.  gmpy2's mpq is used when available (roughly an
order of magnitude faster on the big tensor products), with a transparent
fallback to fractions.Fraction.  Both keep values reduced with positive
denominator, which is the invariant the rest of the code relies on.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rat(num=0, den=None):
        if den is None:
            if isinstance(num, str):
                return _mpq(num)
            return _mpq(num)
        return _mpq(num, den)

    Rational = type(_mpq(1, 2))
    FAST_BACKEND = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    def rat(num=0, den=None):
        if den is None:
            return Fraction(num)
        return Fraction(num, den)

    Rational = Fraction
    FAST_BACKEND = False

ZERO = rat(0)
ONE = rat(1)
HALF = rat(1, 2)


def rat_str(q) -> str:
    """Stable "num/den" rendering used by the JSON report format."""
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str):
    """Parse "num/den" or a bare integer string."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rat(int(num), int(den))
    return rat(int(text))


def factorial(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def binomial_general(q, k: int):
    """Generalized binomial C(q, k) = q(q-1)...(q-k+1)/k! for rational q."""
    num = ONE
    for j in range(k):
        num *= q - j
    return num / factorial(k)
