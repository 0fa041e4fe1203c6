"""Construction of symmetric instances and deterministic test distributions.

The sufficiency construction takes a subgroup G, an automorphism whose
restriction I - alpha is invertible on G, a seed distribution on G, and a
free shift x2: the common distribution is the seed convolved with the
uniform distribution on (I + alpha)(G), and the two margins are its shifts
by x1 = -alpha(x2) and x2.  Every instance built this way is conditionally
symmetric, which the constructor asserts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .distributions import Distribution, convolve, haar, shift
from .engine import HeydeInstance, is_conditionally_symmetric
from .errors import VerificationFailure
from .groups import Element, GroupSpec, Subgroup, enumerate_subgroups, subgroup_generated
from .morphisms import Endomorphism, identity
from .rng import DeterministicStream


@dataclass(frozen=True)
class ConstructedFixture:
    instance: HeydeInstance
    lam: Distribution
    shift1: Element
    shift2: Element
    declared_subgroup: Subgroup
    effective_subgroup: Subgroup  # generated by the centered support of lam


def construction_admissible(sub: Subgroup, alpha: Endomorphism) -> bool:
    """Whether I - alpha restricts to an automorphism of the subgroup."""
    one_minus = identity(alpha.spec).add(alpha.neg())
    return one_minus.image_of(sub) == sub


def construct_instance(
    sub: Subgroup, alpha: Endomorphism, rho: Distribution, x2: Element
) -> ConstructedFixture:
    """Build a conditionally symmetric pair from a subgroup-level seed."""
    spec = sub.spec
    if alpha.spec != spec or rho.spec != spec:
        raise ValueError("spec mismatch")
    if not alpha.is_automorphism():
        raise ValueError("alpha is not an automorphism")
    if not construction_admissible(sub, alpha):
        raise ValueError("construction hypothesis violated: I - alpha not invertible on G")
    if not all(sub.contains(x) for x in rho.support()):
        raise ValueError("seed distribution must be supported in the subgroup")
    x2 = spec.reduce(x2)
    one_plus = identity(spec).add(alpha)
    lam = convolve(rho, haar(one_plus.image_of(sub)))
    x1 = spec.neg(alpha.apply(x2))
    instance = HeydeInstance(spec, shift(lam, x1), shift(lam, x2), alpha)
    if not is_conditionally_symmetric(instance):
        raise VerificationFailure("constructed instance is not conditionally symmetric")
    # An off-center seed can make the raw support generate more than the
    # subgroup the pair really lives on; the decomposition always recenters,
    # so the effective subgroup is generated by the support differences.
    base = lam.masses[0][0]
    effective = subgroup_generated(spec, [spec.sub(s, base) for s in lam.support()])
    return ConstructedFixture(instance, lam, x1, x2, sub, effective)


def enumerate_automorphisms(spec: GroupSpec) -> list[Endomorphism]:
    """All automorphisms, ordered by multiplier vectors."""
    units_per_component = [
        [m for m in range(1, c.order) if m % c.p != 0] for c in spec.components
    ]
    return [Endomorphism(spec, vec) for vec in itertools.product(*units_per_component)]


def compositions(total: int, parts: int):
    """All tuples of nonnegative integers of the given length summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_distributions(spec: GroupSpec, denominator: int):
    """Every pmf whose masses are multiples of 1/denominator, in lex order."""
    if denominator < 1:
        raise ValueError("denominator must be at least 1")
    elements = spec.element_list
    for parts in compositions(denominator, len(elements)):
        yield Distribution(
            spec,
            tuple(
                (x, Fraction(c, denominator)) for x, c in zip(elements, parts) if c
            ),
        )


def count_distributions(spec: GroupSpec, denominator: int) -> int:
    n = spec.size
    return comb(denominator + n - 1, n - 1)


def _as_stream(seed) -> DeterministicStream:
    return seed if isinstance(seed, DeterministicStream) else DeterministicStream(seed)


def random_distribution(
    spec: GroupSpec,
    max_denominator: int,
    seed,
    support: Subgroup | None = None,
) -> Distribution:
    """Seed-deterministic pmf with masses in multiples of 1/d, d <= max_denominator."""
    if max_denominator < 1:
        raise ValueError("max_denominator must be at least 1")
    stream = _as_stream(seed)
    elements = sorted(support.elements()) if support is not None else list(spec.element_list)
    d = stream.randint(1, max_denominator)
    size = stream.randint(1, min(len(elements), d))
    chosen = [elements[i] for i in stream.distinct(len(elements), size)]
    if size == 1:
        masses = [d]
    else:
        cuts = stream.distinct(d - 1, size - 1)
        bounds = [0] + [c + 1 for c in cuts] + [d]
        masses = [b - a for a, b in zip(bounds, bounds[1:])]
    return Distribution(
        spec, tuple(sorted((x, Fraction(m, d)) for x, m in zip(chosen, masses)))
    )


def random_instance(
    spec: GroupSpec, max_denominator: int, seed, alpha: Endomorphism
) -> HeydeInstance:
    stream = _as_stream(seed)
    mu1 = random_distribution(spec, max_denominator, stream.derive("mu1"))
    mu2 = random_distribution(spec, max_denominator, stream.derive("mu2"))
    return HeydeInstance(spec, mu1, mu2, alpha)


def iter_admissible_constructions(
    spec: GroupSpec,
    seed: int,
    variants: int = 1,
    max_denominator: int = 8,
):
    """Constructed fixtures over all (subgroup, automorphism) pairs that admit one.

    Deterministic under the seed: the seed distribution and the free shift for
    each combination are drawn from substreams keyed by the combination.
    """
    stream = DeterministicStream(seed, label="constructions")
    for sub in enumerate_subgroups(spec):
        for alpha in enumerate_automorphisms(spec):
            if not construction_admissible(sub, alpha):
                continue
            for i in range(variants):
                label = f"{sub.exponents}|{alpha.multipliers}|{i}"
                sub_stream = stream.derive(label)
                rho = random_distribution(
                    spec, max_denominator, sub_stream.derive("rho"), support=sub
                )
                x2 = sub_stream.choice(spec.element_list)
                yield construct_instance(sub, alpha, rho, x2)
