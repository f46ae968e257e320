"""Exact arithmetic for the irrational game constant.

Two representations are supported and nothing else:

* ``QuadraticSurd`` -- (a + b*sqrt(d))/c with integer coefficients and
  nonsquare d.  Every floor this package needs is computed exactly with
  integer square roots; no precision limit exists.
* ``DigitConstant`` -- a decimal literal with P fractional digits, trusted
  to be the correctly rounded prefix of an irrational value.  The value is
  therefore strictly inside the centered interval
  (literal - 10**-P / 2, literal + 10**-P / 2).  Floors are decided from
  that interval or refused with ``PrecisionExhausted``; they are never
  guessed.

All arithmetic is arbitrary-precision integer / rational; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt

from ._digits import E_DIGITS, PI_DIGITS
from .errors import BetaOutOfRange, NotIrrational, PrecisionExhausted

__all__ = [
    "QuadraticSurd",
    "DigitConstant",
    "IrrationalSpec",
    "Enclosure",
    "BeattyPair",
    "PI",
    "E",
    "refine",
    "floor_mul",
    "derive_alpha",
    "beatty_member",
    "beatty_prefix",
    "available_precision",
    "proves_greater_than",
    "proves_less_than",
]


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _sign_a_plus_b_sqrt(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for nonsquare d > 0."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a**2 against b**2 * d (cannot tie, d nonsquare)
    lhs, rhs = a * a, b * b * d
    if a > 0:
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


def _floor_sqrt_term(b: int, d: int) -> int:
    """floor(b * sqrt(d)) for nonsquare d; exact for either sign of b."""
    if b == 0:
        return 0
    s = isqrt(b * b * d)
    # b*sqrt(d) is irrational, so it lies strictly between s and s+1
    return s if b > 0 else -s - 1


def _floor_surd(a: int, b: int, c: int, d: int) -> int:
    """floor((a + b*sqrt(d))/c) with c > 0, d nonsquare."""
    if b == 0:
        return a // c
    return (a + _floor_sqrt_term(b, d)) // c


@dataclass(frozen=True)
class QuadraticSurd:
    """(a + b*sqrt(d))/c in canonical form: gcd(a,b,c)=1, c>0, d nonsquare."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.c == 0:
            raise ValueError("denominator c must be nonzero")
        if self.d <= 0:
            raise ValueError("radicand d must be positive")
        if self.b == 0:
            raise NotIrrational("b = 0 denotes a rational")
        if _is_square(self.d):
            raise NotIrrational(f"{self.d} is a perfect square")
        a, b, c = self.a, self.b, self.c
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __str__(self) -> str:
        sign = "+" if self.b >= 0 else "-"
        return f"({self.a}{sign}{abs(self.b)}*sqrt({self.d}))/{self.c}"

    def _floor_times(self, n: int) -> int:
        return _floor_surd(n * self.a, n * self.b, self.c, self.d)

    def _floor_into(self, m: int) -> int:
        """floor(m / value); value must be nonzero (guaranteed irrational)."""
        # m/value = m*c*(a - b*sqrt(d)) / (a**2 - b**2*d)
        e = self.a * self.a - self.b * self.b * self.d
        a, b, c = m * self.c * self.a, -m * self.c * self.b, e
        if c < 0:
            a, b, c = -a, -b, -c
        return _floor_surd(a, b, c, self.d)

    def _compare_int(self, q: int) -> int:
        """Exact sign of value - q."""
        return _sign_a_plus_b_sqrt(self.a - q * self.c, self.b, self.d)


@dataclass(frozen=True)
class DigitConstant:
    """Decimal literal "I.F" with P = len(F) fractional digits.

    The digits are trusted to be correctly rounded, i.e. the denoted value
    lies strictly inside (literal - 10**-P/2, literal + 10**-P/2).  The
    artifact cannot check irrationality of the denoted value; a rational
    input silently breaks the containment contract and is the caller's
    responsibility.
    """

    digits: str
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        head, dot, tail = self.digits.partition(".")
        if dot != "." or not head or not tail:
            raise ValueError("digits must look like '3.14'")
        if not (head.isdigit() and tail.isdigit()):
            raise ValueError("digits must be decimal digits")

    def __repr__(self) -> str:
        label = self.name or f"{self.digits[:12]}..."
        return f"DigitConstant({label!r}, frac_digits={self.frac_digits})"

    @cached_property
    def frac_digits(self) -> int:
        return len(self.digits.partition(".")[2])

    @cached_property
    def _scaled(self) -> int:
        """literal * 10**P as an integer."""
        head, _, tail = self.digits.partition(".")
        return int(head + tail)

    # enclosure endpoints as integer pairs over the common denominator 2*10**P
    @cached_property
    def _lo2(self) -> int:
        return 2 * self._scaled - 1

    @cached_property
    def _hi2(self) -> int:
        return 2 * self._scaled + 1

    @cached_property
    def _den2(self) -> int:
        return 2 * 10**self.frac_digits

    def _floor_times(self, n: int) -> int:
        lo2, hi2, den2 = self._lo2, self._hi2, self._den2
        q = (n * lo2) // den2
        if n * hi2 <= (q + 1) * den2:
            return q
        raise PrecisionExhausted(
            f"{self.frac_digits} fractional digits cannot decide floor({n} * value)"
        )

    def _floor_into(self, m: int) -> int:
        lo2, hi2, den2 = self._lo2, self._hi2, self._den2
        if lo2 <= 0:
            raise PrecisionExhausted("interval does not bound the value away from 0")
        q = (m * den2) // hi2
        if m * den2 <= (q + 1) * lo2:
            return q
        raise PrecisionExhausted(
            f"{self.frac_digits} fractional digits cannot decide floor({m} / value)"
        )


IrrationalSpec = QuadraticSurd | DigitConstant

PI = DigitConstant(PI_DIGITS, name="pi")
E = DigitConstant(E_DIGITS, name="e")


@dataclass(frozen=True)
class Enclosure:
    """Rational interval whose interior contains the exact value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("enclosure requires lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def available_precision(spec: IrrationalSpec) -> int | None:
    """Largest usable `refine` precision; None means unbounded (surds)."""
    if isinstance(spec, QuadraticSurd):
        return None
    # largest p with 2**-p >= 10**-P
    return (10**spec.frac_digits).bit_length() - 1


def refine(spec: IrrationalSpec, precision: int) -> Enclosure:
    """Enclosure of width <= 2**-precision around the exact value."""
    if precision < 1:
        raise ValueError("precision must be a positive integer")
    if isinstance(spec, QuadraticSurd):
        # sqrt(d) in [s, s+1] / 2**m, strict since d is nonsquare
        m = precision + abs(spec.b).bit_length() + 1
        s = isqrt(spec.d << (2 * m))
        sq_lo = Fraction(s, 1 << m)
        sq_hi = Fraction(s + 1, 1 << m)
        if spec.b > 0:
            lo = Fraction(spec.a + spec.b * sq_lo, spec.c)
            hi = Fraction(spec.a + spec.b * sq_hi, spec.c)
        else:
            lo = Fraction(spec.a + spec.b * sq_hi, spec.c)
            hi = Fraction(spec.a + spec.b * sq_lo, spec.c)
        return Enclosure(lo, hi)
    den = 10**spec.frac_digits
    if (1 << precision) > den:
        raise PrecisionExhausted(
            f"digit constant with {spec.frac_digits} fractional digits cannot "
            f"reach width 2**-{precision}"
        )
    return Enclosure(Fraction(spec._lo2, spec._den2), Fraction(spec._hi2, spec._den2))


def floor_mul(spec: IrrationalSpec, n: int) -> int:
    """floor(n * value), exact; raises PrecisionExhausted when undecidable."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 0
    return spec._floor_times(n)


def proves_greater_than(spec: IrrationalSpec, bound: int) -> bool:
    """True iff value > bound is provable from the representation."""
    if isinstance(spec, QuadraticSurd):
        return spec._compare_int(bound) > 0
    return spec._lo2 >= 2 * bound * 10**spec.frac_digits


def proves_less_than(spec: IrrationalSpec, bound: int) -> bool:
    if isinstance(spec, QuadraticSurd):
        return spec._compare_int(bound) < 0
    return spec._hi2 <= 2 * bound * 10**spec.frac_digits


def _require_beta(beta: IrrationalSpec) -> None:
    if not proves_greater_than(beta, 2):
        raise BetaOutOfRange(f"cannot prove beta > 2 for {beta!r}")


def derive_alpha(beta: IrrationalSpec) -> IrrationalSpec:
    """alpha = beta/(beta - 1); exact for surds, digit-extracted otherwise."""
    _require_beta(beta)
    if isinstance(beta, QuadraticSurd):
        a, b, c, d = beta.a, beta.b, beta.c, beta.d
        # rationalize (a + b*sqrt(d)) / ((a - c) + b*sqrt(d))
        num_a = a * (a - c) - b * b * d
        num_b = -b * c
        den = (a - c) * (a - c) - b * b * d
        return QuadraticSurd(num_a, num_b, den, d)
    # interval division: alpha = 1 + 1/(beta - 1) is decreasing in beta
    blo = Fraction(beta._lo2, beta._den2)
    bhi = Fraction(beta._hi2, beta._den2)
    alo = bhi / (bhi - 1)
    ahi = blo / (blo - 1)
    return _digit_constant_covering(alo, ahi)


def _digit_constant_covering(lo: Fraction, hi: Fraction) -> DigitConstant:
    """Longest correctly-rounded digit string whose centered interval covers (lo, hi)."""
    width = hi - lo
    # initial guess: largest P with 10**-P >= width
    approx = width.denominator // width.numerator
    p = max(len(str(approx)) - 1, 1)
    mid = (lo + hi) / 2
    while p >= 1:
        scale = 10**p
        # nearest multiple of 10**-p to the midpoint
        n = (2 * mid.numerator * scale + mid.denominator) // (2 * mid.denominator)
        # need n/scale - 1/(2*scale) <= lo and hi <= n/scale + 1/(2*scale)
        if (2 * n - 1) * lo.denominator <= 2 * lo.numerator * scale and (
            2 * hi.numerator * scale <= (2 * n + 1) * hi.denominator
        ):
            s = str(n).rjust(p + 1, "0")
            return DigitConstant(s[:-p] + "." + s[-p:])
        p -= 1
    raise PrecisionExhausted("interval too wide for even one fractional digit")


def beatty_member(spec: IrrationalSpec, x: int) -> int | None:
    """n >= 1 with floor(n * value) == x, or None; value must exceed 1."""
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return None
    # floor(n*v) == x iff x/v <= n < (x+1)/v, a window shorter than 1
    n = spec._floor_into(x + 1)
    if n < 1:
        return None
    return n if spec._floor_times(n) == x else None


def beatty_prefix(spec: IrrationalSpec, count: int) -> list[int]:
    """[floor(n * value) for n = 1..count]."""
    if count < 1:
        raise ValueError("count must be positive")
    return [spec._floor_times(n) for n in range(1, count + 1)]


# raw (a, b, c) arithmetic used for the exact BeattyPair identity check;
# intermediate triples may be rational, so they bypass QuadraticSurd validation
def _canon3(a: int, b: int, c: int) -> tuple[int, int, int]:
    if c < 0:
        a, b, c = -a, -b, -c
    g = gcd(gcd(abs(a), abs(b)), c)
    return (a // g, b // g, c // g) if g > 1 else (a, b, c)


def _surd_add(t1: tuple[int, int, int], t2: tuple[int, int, int]) -> tuple[int, int, int]:
    a1, b1, c1 = t1
    a2, b2, c2 = t2
    return _canon3(a1 * c2 + a2 * c1, b1 * c2 + b2 * c1, c1 * c2)


def _surd_mul(t1: tuple[int, int, int], t2: tuple[int, int, int], d: int) -> tuple[int, int, int]:
    a1, b1, c1 = t1
    a2, b2, c2 = t2
    return _canon3(a1 * a2 + b1 * b2 * d, a1 * b2 + b1 * a2, c1 * c2)


@dataclass(frozen=True)
class BeattyPair:
    """beta together with its derived complement alpha = beta/(beta-1).

    1/alpha + 1/beta = 1, so the two Beatty sequences partition the
    positive integers; construction proves 1 < alpha < 2 < beta.
    """

    beta: IrrationalSpec
    alpha: IrrationalSpec

    @classmethod
    def from_beta(cls, beta: IrrationalSpec) -> "BeattyPair":
        alpha = derive_alpha(beta)
        if not (proves_greater_than(alpha, 1) and proves_less_than(alpha, 2)):
            raise ValueError(f"derived alpha not provably in (1, 2): {alpha!r}")
        cls._check_unit_density(beta, alpha)
        return cls(beta=beta, alpha=alpha)

    @staticmethod
    def _check_unit_density(beta: IrrationalSpec, alpha: IrrationalSpec) -> None:
        if isinstance(beta, QuadraticSurd) and isinstance(alpha, QuadraticSurd):
            # 1/alpha + 1/beta = 1 is equivalent to alpha + beta = alpha * beta
            ta = (alpha.a, alpha.b, alpha.c)
            tb = (beta.a, beta.b, beta.c)
            if _surd_add(ta, tb) != _surd_mul(ta, tb, beta.d):
                raise ValueError("alpha + beta != alpha * beta")
            return
        # interval check: 1 must lie inside 1/[alpha] + 1/[beta]
        alo = Fraction(alpha._lo2, alpha._den2)
        ahi = Fraction(alpha._hi2, alpha._den2)
        blo = Fraction(beta._lo2, beta._den2)
        bhi = Fraction(beta._hi2, beta._den2)
        if not (1 / ahi + 1 / bhi < 1 < 1 / alo + 1 / blo):
            raise ValueError("enclosures of 1/alpha + 1/beta exclude 1")
