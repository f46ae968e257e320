"""Shared fixtures: the five verification betas and high-precision oracles."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from bwythoff.exact import E, PI, QuadraticSurd

# 2+sqrt(2) correctly rounded to 60 fractional digits (checked in test_exact)
SQRT2_PLUS_2_60 = "3.414213562373095048801688724209698078569671875376948073176680"

SURD_2_SQRT2 = QuadraticSurd(2, 1, 1, 2)
SURD_1_SQRT3 = QuadraticSurd(1, 1, 1, 3)
SURD_13 = QuadraticSurd(3, 1, 2, 13)  # 1 + (1 + sqrt(13))/2

FIXTURE_BETAS = {
    "pi": PI,
    "e": E,
    "2+sqrt2": SURD_2_SQRT2,
    "1+sqrt3": SURD_1_SQRT3,
    "1+(1+sqrt13)/2": SURD_13,
}


def oracle_value(spec) -> mpmath.mpf:
    """50+ digit numeric value of a spec, independent of the exact layer."""
    mpmath.mp.dps = 60
    if isinstance(spec, QuadraticSurd):
        return (spec.a + spec.b * mpmath.sqrt(spec.d)) / spec.c
    if spec.name == "pi":
        return mpmath.pi + 0
    if spec.name == "e":
        return mpmath.e + 0
    return mpmath.mpf(spec.digits)


def oracle_floor_mul(spec, n: int) -> int:
    return int(mpmath.floor(oracle_value(spec) * n))


def oracle_fraction(spec, dps: int = 1100) -> Fraction:
    """Decimal-string rational approximation good to ~dps-20 digits."""
    mpmath.mp.dps = dps
    if isinstance(spec, QuadraticSurd):
        v = (spec.a + spec.b * mpmath.sqrt(spec.d)) / spec.c
    elif spec.name == "pi":
        v = mpmath.pi + 0
    elif spec.name == "e":
        v = mpmath.e + 0
    else:
        return Fraction(spec.digits)
    return Fraction(mpmath.nstr(v, dps - 20, strip_zeros=False))


@pytest.fixture(params=sorted(FIXTURE_BETAS))
def fixture_beta(request):
    return FIXTURE_BETAS[request.param]
