"""Exact arithmetic in the cyclotomic field Q(zeta_N) for odd N.

Character sums are stored by their coordinates in the power basis
1, zeta, ..., zeta**(phi(N)-1), as integer numerators over one positive
denominator, reduced modulo the N-th cyclotomic polynomial.  The reduced
form is canonical, so equality, vanishing, and unit-modulus questions are
decided exactly; floating point appears only in the explicitly named
cross-check helpers (to_complex) and never inside a predicate.  Sign
decisions for real values use rigorous interval refinement, which
terminates because a nonzero algebraic number is bounded away from zero.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from mpmath import iv

Rational = int | Fraction


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Coefficient lists low -> high; the divisor is monic, division is exact.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            j = i - dn
            out[j] = c
            for t in range(dn + 1):
                num[j + t] -= c * den[t]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


_phi_cache: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low to high."""
    if n in _phi_cache:
        return _phi_cache[n]
    if n == 1:
        poly = (-1, 1)
    else:
        acc = [-1] + [0] * (n - 1) + [1]  # x**n - 1
        for d in _divisors(n):
            if d < n:
                acc = _poly_div_exact(acc, list(cyclotomic_polynomial(d)))
        poly = tuple(acc)
    _phi_cache[n] = poly
    return poly


class _Ring:
    """Precomputed reduction data for Q(zeta_N)."""

    def __init__(self, n: int):
        phi = cyclotomic_polynomial(n)
        self.order = n
        self.degree = len(phi) - 1
        rows: list[tuple[int, ...]] = []
        cur = [-c for c in phi[: self.degree]]  # x**degree reduced
        rows.append(tuple(cur))
        for _ in range(self.degree + 1, n):
            top = cur[-1]
            nxt = [0] + cur[:-1]
            if top:
                base = rows[0]
                nxt = [a + top * b for a, b in zip(nxt, base)]
            cur = nxt
            rows.append(tuple(cur))
        self.rows = rows  # rows[e - degree] reduces zeta**e for degree <= e < n


_ring_cache: dict[int, _Ring] = {}


def _ring(n: int) -> _Ring:
    ring = _ring_cache.get(n)
    if ring is None:
        if n < 1:
            raise ValueError("order must be positive")
        if n % 2 == 0:
            raise ValueError("order must be odd")
        ring = _Ring(n)
        _ring_cache[n] = ring
    return ring


@dataclass(frozen=True)
class CycloElement:
    """An element of Q(zeta_order) in canonical reduced form."""

    order: int
    num: tuple[int, ...]
    den: int

    # -- construction -----------------------------------------------------

    @staticmethod
    def _make(order: int, num: list[int], den: int) -> "CycloElement":
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = reduce(gcd, num, den)
        if g > 1:
            den //= g
            num = [c // g for c in num]
        if not any(num):
            return CycloElement(order, (0,) * _ring(order).degree, 1)
        return CycloElement(order, tuple(num), den)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return Fraction(self.num[0], self.den)

    def is_unit_modulus(self) -> bool:
        return (self * self.conj()).is_one()

    def is_real(self) -> bool:
        return self == self.conj()

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other) -> "CycloElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        da, db = self.den, other.den
        num = [x * db + y * da for x, y in zip(self.num, other.num)]
        return CycloElement._make(self.order, num, da * db)

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.order, tuple(-c for c in self.num), self.den)

    def __sub__(self, other) -> "CycloElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CycloElement":
        return (-self) + other

    def __mul__(self, other) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            num = [c * q.numerator for c in self.num]
            return CycloElement._make(self.order, num, self.den * q.denominator)
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("order mismatch")
        ring = _ring(self.order)
        deg, n = ring.degree, ring.order
        a, b = self.num, other.num
        conv = [0] * (2 * deg - 1) if deg > 1 else [0]
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        vec = list(conv[:deg])
        for e in range(deg, len(conv)):
            c = conv[e]
            if not c:
                continue
            ee = e if e < n else e - n
            if ee < deg:
                vec[ee] += c
            else:
                row = ring.rows[ee - deg]
                for t in range(deg):
                    if row[t]:
                        vec[t] += c * row[t]
        return CycloElement._make(self.order, vec, self.den * other.den)

    __rmul__ = __mul__

    def conj(self) -> "CycloElement":
        n = self.order
        terms = [((n - e) % n, c) for e, c in enumerate(self.num) if c]
        return from_terms(n, terms, self.den)

    def times_root(self, t: int) -> "CycloElement":
        """Multiply by zeta_order**t via an exponent shift (no convolution)."""
        n = self.order
        terms = [((e + t) % n, c) for e, c in enumerate(self.num) if c]
        return from_terms(n, terms, self.den)

    # -- numeric cross-checks -------------------------------------------------

    def to_complex(self) -> complex:
        """Float evaluation at zeta = exp(2*pi*i/order); never used in predicates."""
        step = 2.0 * cmath.pi / self.order
        total = 0j
        for e, c in enumerate(self.num):
            if c:
                total += c * cmath.exp(1j * step * e)
        return total / self.den

    def real_sign(self) -> int:
        """Exact sign of a real value via interval refinement (-1, 0, or 1)."""
        if not self.is_real():
            raise ValueError("value is not real")
        if self.is_zero():
            return 0
        saved = iv.dps
        try:
            iv.dps = 30
            while True:
                two_pi = 2 * iv.pi
                total = iv.mpf(0)
                for e, c in enumerate(self.num):
                    if c:
                        total += c * iv.cos(two_pi * e / self.order)
                if total.a > 0:
                    return 1
                if total.b < 0:
                    return -1
                iv.dps *= 2
        finally:
            iv.dps = saved


def from_terms(order: int, terms, den: int = 1) -> CycloElement:
    """Sum of num * zeta**exponent monomials, reduced to canonical form."""
    ring = _ring(order)
    deg, n = ring.degree, ring.order
    vec = [0] * deg
    for e, c in terms:
        if not c:
            continue
        e %= n
        if e < deg:
            vec[e] += c
        else:
            row = ring.rows[e - deg]
            for t in range(deg):
                if row[t]:
                    vec[t] += c * row[t]
    return CycloElement._make(order, vec, den)


def from_rational(order: int, value: Rational) -> CycloElement:
    q = Fraction(value)
    ring = _ring(order)
    vec = [0] * ring.degree
    vec[0] = q.numerator
    return CycloElement._make(order, vec, q.denominator)


def zero(order: int) -> CycloElement:
    return from_rational(order, 0)


def one(order: int) -> CycloElement:
    return from_rational(order, 1)


_zeta_cache: dict[tuple[int, int], CycloElement] = {}


def zeta(order: int, t: int = 1) -> CycloElement:
    """zeta_order**t in reduced form."""
    key = (order, t % order)
    value = _zeta_cache.get(key)
    if value is None:
        value = from_terms(order, [(key[1], 1)])
        _zeta_cache[key] = value
    return value
