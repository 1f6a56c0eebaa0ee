"""Exponential growth rates of free inverse monoids.

For rank ``r >= 2`` and ``p = 2r - 1`` the growth rate is the largest real
root of ``P_p(y) = p^p y^(p-2) - (p y - 1)^(p-1)``, which lies in
``(p, p+1)``.  The same number is the maximum of ``exp h(x)`` over
``x >= 0``; :func:`maximize_h` computes it that way as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from . import polyarith as pa


class PolynomialGrowth(ValueError):
    """Rank 1: FIM_1 has quadratic spherical growth, so there is no exponential rate."""


class PrecisionError(ArithmeticError):
    pass


class MaximizationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PrecisionReal:
    """An mpmath value with an error bound; ``lo``/``hi`` hold an exact bracket when certified."""

    value: mpmath.mpf
    error_bound: mpmath.mpf
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def __float__(self) -> float:
        return float(self.value)

    def width(self) -> Optional[Fraction]:
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo

    def format(self, digits: int) -> str:
        return mpmath.nstr(self.value, digits, strip_zeros=False)


def _p_of(rank: int) -> int:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if rank == 1:
        raise PolynomialGrowth("FIM_1 has polynomial (quadratic) growth; no exponential growth rate")
    return 2 * rank - 1


# ---------------------------------------------------------------------------
# the growth polynomial
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthPolynomial:
    p: int
    coefficients: tuple  # ascending degree

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]

    def __call__(self, y):
        return pa.evaluate(list(self.coefficients), y)

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of the polynomial at a rational point, in integer arithmetic."""
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        acc = self.coefficients[-1]
        bpow = 1
        for c in reversed(self.coefficients[:-1]):
            bpow *= b
            acc = acc * a + c * bpow
        # acc = P(a/b) * b^n with b > 0
        return (acc > 0) - (acc < 0)

    def descending(self) -> list[int]:
        return list(reversed(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for d, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            mono = "" if d == 0 else ("y" if d == 1 else f"y^{d}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or d == 0) else mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def growth_poly_coefficients(p: int) -> list[int]:
    lhs = [0] * (p - 2) + [p**p]
    rhs = pa.power([-1, p], p - 1)
    return pa.add(lhs, pa.scale(rhs, -1))


def growth_poly(rank: int) -> GrowthPolynomial:
    p = _p_of(rank)
    return GrowthPolynomial(p, tuple(growth_poly_coefficients(p)))


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------


def _guard_dps(digits: int, p: int) -> int:
    return digits + 2 * math.ceil(math.log10(p)) + 10


def _to_fraction(x: mpmath.mpf) -> Fraction:
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp


def _log_sign(p: int, y):
    # same sign as P_p(y) for y > 1/p, without forming p^p
    return p * mpmath.log(p) + (p - 2) * mpmath.log(y) - (p - 1) * mpmath.log(p * y - 1)


def growth_rate(rank: int, digits: int = 15) -> PrecisionReal:
    """Certified growth rate of FIM_rank.

    Bisects the logarithmic sign function on ``(p, p+1)`` and then checks the
    sign change of the exact integer polynomial at the rational bracket
    endpoints.  The returned bracket has width at most ``10**-digits``.
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    p = _p_of(rank)
    poly = growth_poly(rank)
    target = Fraction(1, 10**digits)
    for extra in (0, 10, 30):
        with mpmath.workdps(_guard_dps(digits, p) + extra):
            lo, hi = mpmath.mpf(p), mpmath.mpf(p + 1)
            half_target = mpmath.mpf(10) ** (-digits) / 4
            while hi - lo > half_target:
                mid = (lo + hi) / 2
                if _log_sign(p, mid) > 0:
                    lo = mid
                else:
                    hi = mid
            flo, fhi = _to_fraction(lo), _to_fraction(hi)
            if fhi - flo <= target and poly.sign_at(flo) > 0 and poly.sign_at(fhi) < 0:
                return PrecisionReal((lo + hi) / 2, (hi - lo) / 2, flo, fhi)
    raise PrecisionError(f"could not certify the rank {rank} root to {digits} digits")


def certify_bracket(rank: int, lo: Fraction, hi: Fraction) -> bool:
    """True iff ``P_p`` changes sign (positive to negative) across ``[lo, hi]``."""
    poly = growth_poly(rank)
    return poly.sign_at(lo) > 0 > poly.sign_at(hi)


def idempotent_growth_rate(rank: int, digits: int = 30) -> PrecisionReal:
    """``((2r-1)/(2r-2))^(r-1) * sqrt(2r-1)``, i.e. ``sqrt(p^p / (p-1)^(p-1))``."""
    _p_of(rank)
    with mpmath.workdps(digits + 10):
        r = mpmath.mpf(rank)
        value = ((2 * r - 1) / (2 * r - 2)) ** (r - 1) * mpmath.sqrt(2 * r - 1)
    return PrecisionReal(value, mpmath.mpf(10) ** (-digits))


def h(x, rank: int):
    """The exponent whose supremum over ``x >= 0`` gives the growth rate.

    Evaluated at the current mpmath precision; returns an ``mpf``.
    """
    p = _p_of(rank)
    x = mpmath.mpf(x)
    if x < 0:
        raise ValueError("h is defined for x >= 0")
    a = p + x * (p - 1)
    b = (p - 1) + x * (p - 1)
    return (x * mpmath.log(p) + a * mpmath.log(a) - b * mpmath.log(b)) / (x + 2)


def maximize_h(rank: int, tol: float = 1e-12, max_iter: int = 1000) -> tuple[PrecisionReal, PrecisionReal]:
    """Golden-section maximisation of ``h`` on ``[0, 10p]``.

    ``h`` rises then falls on ``[0, inf)`` and its maximiser satisfies
    ``x < p/(p-1) * p < 10p``, so the window is safe.  Returns the argmax
    (error = final bracket half-width) and ``exp h`` there (error = spread
    of ``exp h`` over the final bracket).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = _p_of(rank)
    dps = max(30, 2 * math.ceil(-math.log10(tol)) + 15)
    with mpmath.workdps(dps):
        inv_phi = (mpmath.sqrt(5) - 1) / 2
        a, b = mpmath.mpf(0), mpmath.mpf(10 * p)
        c = b - inv_phi * (b - a)
        d = a + inv_phi * (b - a)
        hc, hd = h(c, rank), h(d, rank)
        for _ in range(max_iter):
            if b - a <= tol:
                break
            if hc > hd:
                b, d, hd = d, c, hc
                c = b - inv_phi * (b - a)
                hc = h(c, rank)
            else:
                a, c, hc = c, d, hd
                d = a + inv_phi * (b - a)
                hd = h(d, rank)
        else:
            raise MaximizationError(f"golden-section search did not reach tol={tol} in {max_iter} steps")
        x_star = (a + b) / 2
        values = [mpmath.exp(h(v, rank)) for v in (a, x_star, b)]
        peak = values[1]
        spread = max(values) - min(values)
        return (
            PrecisionReal(x_star, (b - a) / 2),
            PrecisionReal(peak, spread),
        )


def stationary_x(rank: int, y) -> mpmath.mpf:
    """Maximiser of ``h`` implied by a growth rate ``y``: ``p (y-1)/(p-1)``."""
    p = _p_of(rank)
    return p * (mpmath.mpf(y) - 1) / (p - 1)


def asymptotic_growth(rank: int) -> Fraction:
    """Large-rank approximation ``2r - 3/(4r)``, exactly."""
    _p_of(rank)
    return Fraction(2 * rank) - Fraction(3, 4 * rank)


# ---------------------------------------------------------------------------
# factorisation / irreducibility
# ---------------------------------------------------------------------------

RANK5_QUADRATIC = (1, 1, 1)  # (py)^2 + py + 1, ascending in py
RANK5_SEXTIC = (1, -9, 36, -83, 117, -90, 1)


def _substitute_py(coeffs, p: int) -> list[int]:
    # c_i (p y)^i  ->  c_i p^i y^i
    return pa.trim([c * p**i for i, c in enumerate(coeffs)])


def check_rank5_factorization() -> bool:
    """Verify ``P_9(y) = -((9y)^2 + 9y + 1)((9y)^6 - 90(9y)^5 + ... + 1)`` exactly."""
    p = 9
    product = pa.mul(_substitute_py(RANK5_QUADRATIC, p), _substitute_py(RANK5_SEXTIC, p))
    return pa.scale(product, -1) == list(growth_poly(5).coefficients)


@dataclass(frozen=True)
class Irreducible:
    """Irreducible over Q.  One prime: the reduction mod that prime is irreducible.
    Several primes: the factor-degree patterns modulo them admit no proper factor."""

    primes: tuple


@dataclass(frozen=True)
class ReducibleWitness:
    factor: tuple  # ascending integer coefficients
    cofactor: tuple  # ascending rational coefficients

    def factor_str(self) -> str:
        return str(GrowthPolynomial(0, self.factor))


@dataclass(frozen=True)
class Unknown:
    primes_tried: tuple


def _witness_candidates(p: int) -> list[list[int]]:
    return [_substitute_py(RANK5_QUADRATIC, p)]


def irreducibility_certificate(rank: int, prime_budget: int = 1000):
    """One-sided irreducibility test for ``P_p`` over Q.

    Tries exact division by known candidate factors first.  Otherwise looks
    at primes ``l <= prime_budget`` that do not divide the leading
    coefficient and keep ``P_p`` squarefree mod ``l``.  The degrees of a
    rational factor must be a subset sum of the factor degrees mod every
    such ``l``; once only ``0`` and ``deg P`` survive the polynomial is
    irreducible.
    """
    poly = growth_poly(rank)
    f = list(poly.coefficients)
    n = poly.degree
    for cand in _witness_candidates(poly.p):
        if 0 < pa.degree(cand) < n:
            quotient, remainder = pa.divmod_q(f, cand)
            if not remainder:
                return ReducibleWitness(tuple(cand), tuple(quotient))
    if n <= 1:
        return Irreducible(())
    possible = set(range(n + 1))
    used: list[int] = []
    tried: list[int] = []
    for ell in pa.primes_up_to(prime_budget):
        if poly.leading_coefficient % ell == 0:
            continue
        if not pa.is_squarefree_mod(f, ell):
            continue
        tried.append(ell)
        pattern = pa.distinct_degree_pattern(f, ell)
        if pattern == [n]:
            return Irreducible((ell,))
        narrowed = possible & pa.subset_sums(pattern)
        if narrowed != possible:
            used.append(ell)
            possible = narrowed
        if possible <= {0, n}:
            return Irreducible(tuple(used))
    return Unknown(tuple(tried))
