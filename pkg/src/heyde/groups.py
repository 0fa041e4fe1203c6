"""Finite abelian groups of odd order as products of cyclic p-components.

Every group handled by the package is a direct product of cyclic groups of
pairwise distinct odd prime power orders.  Elements are coordinate tuples
(one residue per component), and the character group is identified with the
group itself through the standard product pairing, so dual elements share
the element representation.  Because the component primes are distinct,
every subgroup is itself a product of cyclic p-subgroups and is described
by one exponent per component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import prod

Element = tuple[int, ...]


class ComponentKind(str, Enum):
    """What the cyclic component of order p**k stands for."""

    FINITE = "finite"
    PADIC = "padic"  # finite truncation of the p-adic integers
    QUASICYCLIC = "quasicyclic"  # finite layer of the p-quasicyclic group


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Component:
    p: int
    k: int
    kind: ComponentKind = ComponentKind.FINITE

    @property
    def order(self) -> int:
        return self.p**self.k


@dataclass(frozen=True)
class GroupSpec:
    """A product of cyclic components with pairwise distinct odd primes."""

    components: tuple[Component, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("group must have at least one component")
        primes = []
        for comp in self.components:
            if comp.p == 2:
                raise ValueError("contains 2-torsion")
            if not is_odd_prime(comp.p):
                raise ValueError(f"{comp.p} is not an odd prime")
            if comp.k <= 0:
                raise ValueError("component exponent must be positive")
            primes.append(comp.p)
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be pairwise distinct")

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(c.order for c in self.components)

    @cached_property
    def exponent(self) -> int:
        return prod(self.orders)

    @property
    def size(self) -> int:
        return self.exponent

    @cached_property
    def _pair_weights(self) -> tuple[int, ...]:
        n = self.exponent
        return tuple(n // q for q in self.orders)

    def zero(self) -> Element:
        return (0,) * len(self.components)

    def is_element(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == len(self.components)
            and all(isinstance(c, int) and 0 <= c < q for c, q in zip(x, self.orders))
        )

    def require_element(self, x) -> Element:
        if not self.is_element(x):
            raise ValueError(f"{x!r} is not a reduced element of {self.describe()}")
        return x

    def reduce(self, x) -> Element:
        if len(x) != len(self.components):
            raise ValueError(f"{x!r} has wrong arity for {self.describe()}")
        return tuple(int(c) % q for c, q in zip(x, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % q for a, b, q in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % q for a, q in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % q for a, b, q in zip(x, y, self.orders))

    def scalar_mul(self, n: int, x: Element) -> Element:
        return tuple((n * a) % q for a, q in zip(x, self.orders))

    def elements(self):
        """All elements in lexicographic order of coordinate tuples."""
        return itertools.product(*(range(q) for q in self.orders))

    @cached_property
    def element_list(self) -> tuple[Element, ...]:
        return tuple(self.elements())

    def pair_exponent(self, x: Element, y: Element) -> int:
        """t with (x, y) = zeta_N ** t for the fixed self-duality pairing."""
        t = 0
        for a, b, w in zip(x, y, self._pair_weights):
            t += a * b * w
        return t % self.exponent

    def pair(self, x: Element, y: Element) -> "RootOfUnity":
        return RootOfUnity(self.exponent, self.pair_exponent(x, y))

    def describe(self) -> str:
        return " x ".join(f"Z({c.p}^{c.k})" if c.k > 1 else f"Z({c.p})" for c in self.components)


def validate_spec(raw) -> GroupSpec:
    """Normalize a component list into a GroupSpec.

    Accepts (p, k) / (p, k, kind) tuples, dicts with keys p, k, kind, or
    Component instances; kind defaults to "finite".
    """
    components = []
    for entry in raw:
        if isinstance(entry, Component):
            components.append(entry)
            continue
        if isinstance(entry, dict):
            p, k = entry["p"], entry["k"]
            kind = entry.get("kind", ComponentKind.FINITE)
        else:
            if len(entry) == 2:
                (p, k), kind = entry, ComponentKind.FINITE
            elif len(entry) == 3:
                p, k, kind = entry
            else:
                raise ValueError(f"component entry {entry!r} not understood")
        components.append(Component(int(p), int(k), ComponentKind(kind)))
    return GroupSpec(tuple(components))


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i*exponent/order); multiplication adds exponents."""

    order: int
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return RootOfUnity(self.order, self.exponent + other.exponent)

    def conj(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0


def valuation(n: int, p: int, cap: int) -> int:
    """p-adic valuation of n, capped at cap; the zero residue gets the cap."""
    n = n % p**cap
    if n == 0:
        return cap
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class Subgroup:
    """Product subgroup: component j contributes p_j**a_j * Z(p_j**k_j)."""

    spec: GroupSpec
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.spec.components):
            raise ValueError("exponent vector has wrong arity")
        for a, comp in zip(self.exponents, self.spec.components):
            if not 0 <= a <= comp.k:
                raise ValueError(f"subgroup exponent {a} out of range for p^{comp.k}")

    @cached_property
    def order(self) -> int:
        return prod(c.p ** (c.k - a) for c, a in zip(self.spec.components, self.exponents))

    @property
    def is_trivial(self) -> bool:
        return all(a == c.k for a, c in zip(self.exponents, self.spec.components))

    @property
    def is_full(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def contains(self, x: Element) -> bool:
        return all(c % (comp.p**a) == 0 for c, a, comp in zip(x, self.exponents, self.spec.components))

    def elements(self):
        ranges = [
            range(0, comp.order, comp.p**a) for a, comp in zip(self.exponents, self.spec.components)
        ]
        return itertools.product(*ranges)

    def annihilator(self) -> "Subgroup":
        """Characters trivial on this subgroup, as a subgroup of the dual."""
        return Subgroup(
            self.spec, tuple(c.k - a for c, a in zip(self.spec.components, self.exponents))
        )

    def intersect(self, other: "Subgroup") -> "Subgroup":
        if self.spec != other.spec:
            raise ValueError("spec mismatch")
        return Subgroup(self.spec, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))


def trivial_subgroup(spec: GroupSpec) -> Subgroup:
    return Subgroup(spec, tuple(c.k for c in spec.components))


def full_subgroup(spec: GroupSpec) -> Subgroup:
    return Subgroup(spec, (0,) * len(spec.components))


def subgroup_generated(spec: GroupSpec, xs) -> Subgroup:
    """Smallest product subgroup containing every element of xs."""
    xs = list(xs)
    exps = []
    for j, comp in enumerate(spec.components):
        a = comp.k
        for x in xs:
            a = min(a, valuation(x[j], comp.p, comp.k))
        exps.append(a)
    return Subgroup(spec, tuple(exps))


def enumerate_subgroups(spec: GroupSpec) -> list[Subgroup]:
    """All product subgroups, lexicographic in the exponent vectors."""
    ranges = [range(c.k + 1) for c in spec.components]
    return [Subgroup(spec, exps) for exps in itertools.product(*ranges)]
