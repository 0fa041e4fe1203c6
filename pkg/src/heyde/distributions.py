"""Exact rational probability distributions on the model groups.

A distribution is a finitely supported probability mass function with
strictly positive Fraction masses summing to one.  Equality is structural
equality of reduced mass lists, so every theorem-level conclusion is an
exact identity.  The unit-modulus and equals-one predicates are decided
combinatorially (a character sum has modulus one exactly when the pairing
is constant on the support); the cyclotomic route is kept as a cross-check
and as one side of the dual-route Haar-factor test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import cyclotomic
from .cyclotomic import CycloElement
from .errors import VerificationFailure
from .groups import Element, GroupSpec, Subgroup, subgroup_generated


@dataclass(frozen=True)
class Distribution:
    spec: GroupSpec
    masses: tuple[tuple[Element, Fraction], ...]

    def __post_init__(self):
        total = Fraction(0)
        prev = None
        for x, m in self.masses:
            self.spec.require_element(x)
            if prev is not None and x <= prev:
                raise ValueError("masses must be sorted by element with no duplicates")
            prev = x
            if m <= 0:
                raise ValueError("masses must be strictly positive")
            total += m
        if total != 1:
            raise ValueError(f"total mass is {total}, expected 1")

    @cached_property
    def pmf(self) -> dict[Element, Fraction]:
        return dict(self.masses)

    def support(self) -> tuple[Element, ...]:
        return tuple(x for x, _ in self.masses)

    def mass(self, x: Element) -> Fraction:
        return self.pmf.get(x, Fraction(0))


def from_pmf(spec: GroupSpec, pmf) -> Distribution:
    """Build a distribution from any element -> mass mapping (reduces keys)."""
    acc: dict[Element, Fraction] = {}
    for x, m in pmf.items() if isinstance(pmf, dict) else pmf:
        m = Fraction(m)
        if m == 0:
            continue
        key = spec.reduce(x)
        acc[key] = acc.get(key, Fraction(0)) + m
    return Distribution(spec, tuple(sorted(acc.items())))


def degenerate(spec: GroupSpec, x: Element) -> Distribution:
    return Distribution(spec, ((spec.reduce(x), Fraction(1)),))


def haar(sub: Subgroup) -> Distribution:
    """Uniform distribution on a product subgroup."""
    w = Fraction(1, sub.order)
    return Distribution(sub.spec, tuple((x, w) for x in sorted(sub.elements())))


def convolve(mu: Distribution, nu: Distribution) -> Distribution:
    if mu.spec != nu.spec:
        raise ValueError("spec mismatch")
    spec = mu.spec
    acc: dict[Element, Fraction] = {}
    for x, mx in mu.masses:
        for y, my in nu.masses:
            z = spec.add(x, y)
            acc[z] = acc.get(z, Fraction(0)) + mx * my
    return Distribution(spec, tuple(sorted(acc.items())))


def reflect(mu: Distribution) -> Distribution:
    spec = mu.spec
    return Distribution(spec, tuple(sorted((spec.neg(x), m) for x, m in mu.masses)))


def shift(mu: Distribution, x: Element) -> Distribution:
    spec = mu.spec
    x = spec.reduce(x)
    return Distribution(spec, tuple(sorted((spec.add(s, x), m) for s, m in mu.masses)))


def char_fn(mu: Distribution, y: Element) -> CycloElement:
    """The character sum of mu at the dual element y, exactly."""
    spec = mu.spec
    den = 1
    for _, m in mu.masses:
        den = lcm(den, m.denominator)
    terms = [
        (spec.pair_exponent(x, y), m.numerator * (den // m.denominator)) for x, m in mu.masses
    ]
    return cyclotomic.from_terms(spec.exponent, terms, den)


def char_fn_table(mu: Distribution) -> dict[Element, CycloElement]:
    return {y: char_fn(mu, y) for y in mu.spec.elements()}


def _constancy_subgroup(mu: Distribution) -> Subgroup:
    # Dual elements whose pairing is constant on the support; equivalently
    # the annihilator of the subgroup generated by support differences.
    spec = mu.spec
    base = mu.masses[0][0]
    diffs = [spec.sub(x, base) for x, _ in mu.masses]
    return subgroup_generated(spec, diffs).annihilator()


def unit_modulus_set(mu1: Distribution, mu2: Distribution) -> Subgroup:
    """Dual subgroup where both character sums have modulus one."""
    if mu1.spec != mu2.spec:
        raise ValueError("spec mismatch")
    return _constancy_subgroup(mu1).intersect(_constancy_subgroup(mu2))


def equals_one_set(mu: Distribution) -> Subgroup:
    """Dual subgroup where the character sum equals one."""
    return subgroup_generated(mu.spec, mu.support()).annihilator()


def min_support_subgroup(mu: Distribution) -> Subgroup:
    """Smallest product subgroup containing the support."""
    return subgroup_generated(mu.spec, mu.support())


def has_haar_factor(lam: Distribution, sub: Subgroup) -> bool:
    """Whether the uniform distribution on sub is a convolution factor of lam.

    Decided along two independent routes that must agree: the fixed-point
    identity lam == lam * haar(sub), and vanishing of the character sum off
    the annihilator of sub.
    """
    if lam.spec != sub.spec:
        raise ValueError("spec mismatch")
    fixed_point = lam == convolve(lam, haar(sub))
    ann = sub.annihilator()
    vanishing = all(
        char_fn(lam, y).is_zero() for y in lam.spec.elements() if not ann.contains(y)
    )
    if fixed_point != vanishing:
        raise VerificationFailure(
            "haar-factor routes disagree: "
            f"fixed_point={fixed_point} vanishing={vanishing} for subgroup {sub.exponents}"
        )
    return fixed_point


def invert_char_table(spec: GroupSpec, table: dict[Element, CycloElement]) -> Distribution:
    """Recover a distribution from its full character table (exact inversion).

    The inner sums are accumulated as raw exponent vectors over a common
    denominator and reduced once per point, which keeps the exhaustive
    identity checks cheap.
    """
    n = spec.size
    order = spec.exponent
    den = 1
    for value in table.values():
        den = lcm(den, value.den)
    entries = [
        (y, value.num, den // value.den) for y, value in table.items()
    ]
    pmf: dict[Element, Fraction] = {}
    for x in spec.elements():
        vec = [0] * order
        for y, num, scale in entries:
            t = spec.pair_exponent(x, y)
            for e, c in enumerate(num):
                if c:
                    vec[(e - t) % order] += c * scale
        acc = cyclotomic.from_terms(order, enumerate(vec), den)
        if not acc.is_rational():
            raise VerificationFailure(f"inversion produced a non-rational mass at {x}")
        q = acc.rational_value() / n
        if q:
            pmf[x] = q
    return from_pmf(spec, pmf)
