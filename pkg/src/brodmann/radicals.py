"""Exact arithmetic in the field generated by square roots of integers.

Two layers: ExactRadical is a single term q*sqrt(m) with q a nonnegative
rational and m squarefree, closed under multiplication; RadicalSum is a
finite signed sum of such terms, closed under addition and comparable to
rationals without any floating point.  Comparisons of a nonzero sum
terminate because square roots of distinct squarefree integers are
linearly independent over the rationals, so the sum is either identically
zero (detectable term by term) or bounded away from zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import InputError


def split_square(n: int) -> tuple[int, int]:
    """n = a*a*m with m squarefree; returns (a, m).  Requires n >= 1."""
    if n < 1:
        raise InputError(f"radicand must be >= 1, got {n}")
    a, m = 1, 1
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            a *= d ** (e // 2)
            if e % 2:
                m *= d
        d += 1 if d == 2 else 2
    m *= rest
    return a, m


@dataclass(frozen=True)
class ExactRadical:
    """The nonnegative real q*sqrt(m), q rational >= 0, m squarefree >= 1.

    Zero is represented as coeff 0, radicand 1.
    """

    coeff: Fraction
    radicand: int

    def __post_init__(self):
        if self.coeff < 0:
            raise InputError(f"coefficient must be >= 0, got {self.coeff}")
        if self.coeff == 0 and self.radicand != 1:
            raise InputError("zero must carry radicand 1")
        a, m = split_square(self.radicand)
        if a != 1:
            raise InputError(f"radicand {self.radicand} is not squarefree")
        if m != self.radicand:
            raise InputError(f"radicand {self.radicand} is not squarefree")

    @staticmethod
    def of_fraction(q: Fraction | int) -> "ExactRadical":
        q = Fraction(q)
        if q < 0:
            raise InputError(f"negative value {q} has no radical form here")
        return ExactRadical(q, 1)

    @staticmethod
    def sqrt_of(n: int) -> "ExactRadical":
        """sqrt(n) for an integer n >= 0."""
        if n < 0:
            raise InputError(f"cannot take sqrt of {n}")
        if n == 0:
            return ExactRadical(Fraction(0), 1)
        a, m = split_square(n)
        return ExactRadical(Fraction(a), m)

    @staticmethod
    def sqrt_of_fraction(q: Fraction | int) -> "ExactRadical":
        q = Fraction(q)
        if q < 0:
            raise InputError(f"cannot take sqrt of {q}")
        if q == 0:
            return ExactRadical(Fraction(0), 1)
        # sqrt(p/s) = sqrt(p*s)/s
        num = ExactRadical.sqrt_of(q.numerator * q.denominator)
        return ExactRadical(num.coeff / q.denominator, num.radicand)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_rational(self) -> bool:
        return self.radicand == 1 or self.coeff == 0

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def __mul__(self, other: "ExactRadical | Fraction | int") -> "ExactRadical":
        if not isinstance(other, ExactRadical):
            return ExactRadical.of_fraction(Fraction(other)) * self
        if self.is_zero() or other.is_zero():
            return ExactRadical(Fraction(0), 1)
        g = gcd(self.radicand, other.radicand)
        m = (self.radicand // g) * (other.radicand // g)
        return ExactRadical(self.coeff * other.coeff * g, m)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExactRadical":
        if n < 0:
            raise InputError(f"power exponent must be >= 0, got {n}")
        q = self.coeff**n * Fraction(self.radicand) ** (n // 2)
        if n % 2:
            return ExactRadical(q, self.radicand) if q else ExactRadical(Fraction(0), 1)
        return ExactRadical.of_fraction(q)

    def _cmp(self, other: "ExactRadical | Fraction | int") -> int:
        if not isinstance(other, ExactRadical):
            other = ExactRadical.of_fraction(Fraction(other))
        a, b = self.square(), other.square()
        if a == b:
            return 0
        return -1 if a < b else 1

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactRadical):
            return self.coeff == other.coeff and self.radicand == other.radicand
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeff == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeff)
        return hash(((self.radicand, self.coeff),))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def floor(self) -> int:
        if self.is_rational():
            return self.coeff.numerator // self.coeff.denominator
        a = self.coeff.numerator
        b = self.coeff.denominator
        return isqrt(a * a * self.radicand) // b

    def ceil(self) -> int:
        if self.is_rational():
            return -((-self.coeff.numerator) // self.coeff.denominator)
        # irrational, so never an integer
        return self.floor() + 1

    def __float__(self) -> float:
        return float(self.coeff) * self.radicand**0.5

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeff)
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        return f"{self.coeff}*sqrt({self.radicand})"


def _sqrt_bounds(m: int, k: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(m) <= hi with hi - lo <= 1/2**k."""
    scale = 1 << k
    s = isqrt(m * scale * scale)
    return Fraction(s, scale), Fraction(s + 1, scale)


@dataclass(frozen=True)
class RadicalSum:
    """A signed sum of rational multiples of sqrt(squarefree integer).

    Terms are (radicand, coefficient) pairs, radicands strictly increasing,
    coefficients nonzero.  The empty sum is zero.
    """

    terms: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def of(*parts: "ExactRadical | Fraction | int") -> "RadicalSum":
        acc: dict[int, Fraction] = {}
        for p in parts:
            if isinstance(p, ExactRadical):
                if not p.is_zero():
                    acc[p.radicand] = acc.get(p.radicand, Fraction(0)) + p.coeff
            else:
                q = Fraction(p)
                if q:
                    acc[1] = acc.get(1, Fraction(0)) + q
        return RadicalSum(tuple(sorted((m, q) for m, q in acc.items() if q)))

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 1)

    def __add__(self, other: "RadicalSum | ExactRadical | Fraction | int") -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            other = RadicalSum.of(other)
        acc = dict(self.terms)
        for m, q in other.terms:
            acc[m] = acc.get(m, Fraction(0)) + q
        return RadicalSum(tuple(sorted((m, q) for m, q in acc.items() if q)))

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(tuple((m, -q) for m, q in self.terms))

    def __sub__(self, other) -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            other = RadicalSum.of(other)
        return self + (-other)

    def scaled(self, q: Fraction | int) -> "RadicalSum":
        q = Fraction(q)
        if not q:
            return RadicalSum(())
        return RadicalSum(tuple((m, c * q) for m, c in self.terms))

    def bounds(self, k: int) -> tuple[Fraction, Fraction]:
        """Rational enclosure of the value, width shrinking as k grows."""
        lo = Fraction(0)
        hi = Fraction(0)
        for m, q in self.terms:
            if m == 1:
                lo += q
                hi += q
                continue
            slo, shi = _sqrt_bounds(m, k)
            if q > 0:
                lo += q * slo
                hi += q * shi
            else:
                lo += q * shi
                hi += q * slo
        return lo, hi

    def sign(self) -> int:
        """-1, 0 or 1.  Exact: zero only when every coefficient vanishes."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            return 1 if self.terms[0][1] > 0 else -1
        k = 8
        while True:
            lo, hi = self.bounds(k)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            k *= 2

    def compare(self, other: "RadicalSum | ExactRadical | Fraction | int") -> int:
        if not isinstance(other, RadicalSum):
            other = RadicalSum.of(other)
        return (self - other).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, (RadicalSum, ExactRadical, int, Fraction)):
            if not isinstance(other, RadicalSum):
                other = RadicalSum.of(other)
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.terms[0][1] if self.terms else Fraction(0))
        return hash(self.terms)

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) > -1

    def floor(self) -> int:
        if self.is_rational():
            q = self.terms[0][1] if self.terms else Fraction(0)
            return q.numerator // q.denominator
        # irrational value: enclosure eventually excludes every integer
        k = 8
        while True:
            lo, hi = self.bounds(k)
            flo = lo.numerator // lo.denominator
            fhi = hi.numerator // hi.denominator
            if flo == fhi:
                return flo
            k *= 2

    def ceil(self) -> int:
        if self.is_rational():
            q = self.terms[0][1] if self.terms else Fraction(0)
            return -((-q.numerator) // q.denominator)
        return self.floor() + 1

    def __float__(self) -> float:
        return sum(float(q) * m**0.5 for m, q in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, q in self.terms:
            if m == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({m})")
            else:
                parts.append(f"{q}*sqrt({m})")
        return " + ".join(parts).replace("+ -", "- ")
