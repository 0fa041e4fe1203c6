"""Conditional symmetry of linear forms and its structural consequences.

Given independent group-valued random variables with distributions mu1 and
mu2 and an automorphism alpha, the package decides exactly whether the
conditional distribution of xi1 + alpha*xi2 given xi1 + xi2 is symmetric,
checks the equivalent dual functional equation, and, for symmetric pairs,
produces the canonical decomposition: a subgroup G stable under I - alpha,
a common distribution lambda supported in G whose shifts recover mu1 and
mu2, a Haar convolution factor on (I + alpha)(G), and symmetry of the
restricted pair.  Strengthened conclusions that hold under extra
hypotheses (trivial kernel of I + alpha, nonvanishing character sums,
truncated p-adic components) are checked by the corollary classifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .distributions import (
    Distribution,
    char_fn,
    from_pmf,
    haar,
    has_haar_factor,
    min_support_subgroup,
    shift,
    unit_modulus_set,
)
from .errors import VerificationFailure
from .groups import Component, ComponentKind, Element, GroupSpec, Subgroup
from .morphisms import Endomorphism, PAdicUnit, identity


@dataclass(frozen=True)
class HeydeInstance:
    """Two distributions and an automorphism on one group."""

    spec: GroupSpec
    mu1: Distribution
    mu2: Distribution
    alpha: Endomorphism

    def __post_init__(self):
        if self.mu1.spec != self.spec or self.mu2.spec != self.spec or self.alpha.spec != self.spec:
            raise ValueError("spec mismatch")
        if not self.alpha.is_automorphism():
            raise ValueError("alpha is not an automorphism")


def is_conditionally_symmetric(inst: HeydeInstance) -> bool:
    """Whether (L1, L2) and (L1, -L2) have the same exact joint distribution."""
    spec = inst.spec
    alpha = inst.alpha
    joint: dict[tuple[Element, Element], Fraction] = {}
    for x1, m1 in inst.mu1.masses:
        for x2, m2 in inst.mu2.masses:
            key = (spec.add(x1, x2), spec.add(x1, alpha.apply(x2)))
            joint[key] = joint.get(key, Fraction(0)) + m1 * m2
    for (l1, l2), m in joint.items():
        if joint.get((l1, spec.neg(l2))) != m:
            return False
    return True


def satisfies_heyde_equation(inst: HeydeInstance) -> bool:
    """Exact dual-side check of the functional equation equivalent to symmetry.

    Verifies, in the cyclotomic field, that the product of the two
    characteristic functions at (u + v, u + adjoint(alpha) v) equals the
    product at (u - v, u - adjoint(alpha) v) for all dual pairs (u, v).
    Character values and products are memoized, and (u, v) / (u, -v) state
    the same identity so only one representative per {v, -v} is visited.
    """
    spec = inst.spec
    adj = inst.alpha.adjoint()
    tables = ({}, {})
    mus = (inst.mu1, inst.mu2)

    def chi(j: int, y: Element):
        table = tables[j]
        value = table.get(y)
        if value is None:
            value = char_fn(mus[j], y)
            table[y] = value
        return value

    products: dict[tuple, object] = {}

    def prod(a, b):
        key = (a, b)
        value = products.get(key)
        if value is None:
            value = a * b
            products[key] = value
        return value

    elements = spec.element_list
    for v in elements:
        nv = spec.neg(v)
        if nv <= v:
            continue  # v = 0 is trivial; -v repeats the identity for v
        av = adj.apply(v)
        nav = spec.neg(av)
        for u in elements:
            lhs = prod(chi(0, spec.add(u, v)), chi(1, spec.add(u, av)))
            rhs = prod(chi(0, spec.add(u, nv)), chi(1, spec.add(u, nav)))
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class ReducedPair:
    subgroup: Subgroup
    lam1: Distribution
    lam2: Distribution
    shift1: Element
    shift2: Element


def _canonical_shift(mu: Distribution, sub: Subgroup) -> tuple[Element, Distribution]:
    """Shift mu into sub, canonically.

    All admissible shifts form one coset of sub, and the shifted
    distributions form one orbit under translation by sub; choosing the
    lexicographically smallest shifted distribution (then the smallest
    shift realizing it) removes the translation ambiguity, so both margins
    of a symmetric pair land on the same representative.
    """
    spec = mu.spec
    base = mu.masses[0][0]
    best: tuple | None = None
    for g in sub.elements():
        x = spec.add(base, g)
        shifted = shift(mu, spec.neg(x))
        if not all(sub.contains(s) for s in shifted.support()):
            continue
        key = (shifted.masses, x)
        if best is None or key < best[:2]:
            best = (shifted.masses, x, shifted)
    if best is None:
        raise VerificationFailure("no valid shift found")
    return best[1], best[2]


def reduce_to_subgroup(inst: HeydeInstance) -> ReducedPair:
    """Reduce a symmetric pair to the annihilator of its unit-modulus set."""
    s_dual = unit_modulus_set(inst.mu1, inst.mu2)
    sub = s_dual.annihilator()
    x1, lam1 = _canonical_shift(inst.mu1, sub)
    x2, lam2 = _canonical_shift(inst.mu2, sub)
    return ReducedPair(sub, lam1, lam2, x1, x2)


@dataclass(frozen=True)
class DecompositionFlags:
    stable_under_one_minus_alpha: bool
    shifts_of_common_distribution: bool
    minimal_support_subgroup: bool
    haar_factor: bool
    restricted_symmetry: bool

    @property
    def all_true(self) -> bool:
        return (
            self.stable_under_one_minus_alpha
            and self.shifts_of_common_distribution
            and self.minimal_support_subgroup
            and self.haar_factor
            and self.restricted_symmetry
        )


@dataclass(frozen=True)
class HeydeDecomposition:
    subgroup: Subgroup
    lam: Distribution
    shift1: Element
    shift2: Element
    flags: DecompositionFlags


def decompose(inst: HeydeInstance) -> HeydeDecomposition:
    """Full decomposition of a conditionally symmetric pair, with all checks."""
    if not is_conditionally_symmetric(inst):
        raise ValueError("instance is not conditionally symmetric")
    red = reduce_to_subgroup(inst)
    if red.lam1 != red.lam2:
        raise VerificationFailure("lambda mismatch: reduced distributions differ")
    lam = red.lam1
    spec = inst.spec
    alpha = inst.alpha
    sub = red.subgroup
    one_minus = identity(spec).add(alpha.neg())
    one_plus = identity(spec).add(alpha)
    flags = DecompositionFlags(
        stable_under_one_minus_alpha=one_minus.image_of(sub) == sub,
        shifts_of_common_distribution=(
            inst.mu1 == shift(lam, red.shift1) and inst.mu2 == shift(lam, red.shift2)
        ),
        minimal_support_subgroup=min_support_subgroup(lam) == sub,
        haar_factor=has_haar_factor(lam, one_plus.image_of(sub)),
        restricted_symmetry=is_conditionally_symmetric(
            HeydeInstance(spec, lam, lam, alpha)
        ),
    )
    return HeydeDecomposition(sub, lam, red.shift1, red.shift2, flags)


@dataclass(frozen=True)
class CorollaryCheck:
    name: str
    applicable: bool
    verified: bool | None  # None when the hypothesis does not hold
    detail: str


@dataclass(frozen=True)
class CorollaryReport:
    checks: tuple[CorollaryCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.verified for c in self.checks if c.applicable)


def classify_corollary(inst: HeydeInstance, dec: HeydeDecomposition) -> CorollaryReport:
    """Check the strengthened conclusions whose hypotheses the instance meets."""
    spec = inst.spec
    one_plus = identity(spec).add(inst.alpha)
    checks: list[CorollaryCheck] = []

    kernel = one_plus.kernel()
    if kernel.is_trivial:
        verified = dec.lam == haar(dec.subgroup)
        detail = "lambda equals the uniform distribution on G" if verified else "lambda is not uniform on G"
        checks.append(CorollaryCheck("haar_when_kernel_trivial", True, verified, detail))
    else:
        checks.append(
            CorollaryCheck(
                "haar_when_kernel_trivial", False, None, "Ker(I + alpha) is nontrivial"
            )
        )

    nonvanishing = all(
        not char_fn(mu, y).is_zero() for mu in (inst.mu1, inst.mu2) for y in spec.elements()
    )
    if nonvanishing:
        verified = all(kernel.contains(x) for x in dec.lam.support())
        detail = (
            "support of lambda lies in Ker(I + alpha)"
            if verified
            else "support of lambda escapes Ker(I + alpha)"
        )
        checks.append(CorollaryCheck("support_in_kernel_when_nonvanishing", True, verified, detail))
    else:
        checks.append(
            CorollaryCheck(
                "support_in_kernel_when_nonvanishing", False, None, "a character sum vanishes"
            )
        )

    comp = spec.components[0]
    truncated = len(spec.components) == 1 and comp.kind in (
        ComponentKind.PADIC,
        ComponentKind.QUASICYCLIC,
    )
    if truncated:
        c0 = inst.alpha.multipliers[0] % comp.p
        if c0 == comp.p - 1:
            checks.append(
                CorollaryCheck("truncated_unit_digit", False, None, "leading digit is p - 1")
            )
        elif c0 == 1:
            verified = (
                dec.subgroup.is_trivial
                and len(inst.mu1.masses) == 1
                and len(inst.mu2.masses) == 1
            )
            detail = "G is trivial and both margins degenerate" if verified else "G is nontrivial"
            checks.append(CorollaryCheck("truncated_unit_digit", True, verified, detail))
        else:
            verified = dec.lam == haar(dec.subgroup)
            detail = "lambda equals the uniform distribution on G" if verified else "lambda is not uniform on G"
            checks.append(CorollaryCheck("truncated_unit_digit", True, verified, detail))
    else:
        checks.append(
            CorollaryCheck(
                "truncated_unit_digit", False, None, "spec is not a single truncated component"
            )
        )

    return CorollaryReport(tuple(checks))


# -- quasicyclic truncations ---------------------------------------------------


def quasicyclic_residue(p: int, level: int, value) -> int:
    """Map k/p**e (mod 1) to its residue in the level-sized cyclic layer."""
    v = Fraction(value)
    v -= v.numerator // v.denominator  # reduce mod 1
    scaled = v * p**level
    if scaled.denominator != 1:
        raise ValueError("support exceeds declared level")
    return int(scaled) % p**level


def quasicyclic_distribution(p: int, level: int, pmf) -> Distribution:
    """Distribution on the level-n layer from p-power fractions mod 1."""
    spec = GroupSpec((Component(p, level, ComponentKind.QUASICYCLIC),))
    return from_pmf(
        spec, {(quasicyclic_residue(p, level, x),): Fraction(m) for x, m in dict(pmf).items()}
    )


@dataclass(frozen=True)
class QuasicyclicReduction:
    instance: HeydeInstance
    branch: str  # "minus_identity" or "general"
    symmetric: bool
    mu_equal: bool | None
    decomposition: HeydeDecomposition | None
    corollaries: CorollaryReport | None


def reduce_quasicyclic(p: int, level: int, pmf1, pmf2, unit: PAdicUnit) -> QuasicyclicReduction:
    """Finite reduction of a quasicyclic-group pair at a declared level.

    Finitely supported distributions live in the level-n layer, where the
    automorphism acts as multiplication by the truncated unit.  When that
    action is minus the identity, symmetry must coincide exactly with
    equality of the two distributions; otherwise the general decomposition
    machinery applies and produces a finite subgroup.
    """
    if unit.p != p:
        raise ValueError("unit prime does not match the group prime")
    if unit.level < level:
        raise ValueError("truncation level exceeded")
    mu1 = quasicyclic_distribution(p, level, pmf1)
    mu2 = quasicyclic_distribution(p, level, pmf2)
    spec = mu1.spec
    q = p**level
    s = unit.truncation(level) % q
    inst = HeydeInstance(spec, mu1, mu2, Endomorphism(spec, (s,)))
    symmetric = is_conditionally_symmetric(inst)
    if s == q - 1:
        equal = mu1 == mu2
        if symmetric != equal:
            raise VerificationFailure(
                "with the minus-identity action, symmetry must hold exactly when the "
                f"distributions coincide (symmetric={symmetric}, equal={equal})"
            )
        return QuasicyclicReduction(inst, "minus_identity", symmetric, equal, None, None)
    decomposition = corollaries = None
    if symmetric:
        decomposition = decompose(inst)
        corollaries = classify_corollary(inst, decomposition)
    return QuasicyclicReduction(inst, "general", symmetric, None, decomposition, corollaries)


# -- mixed products -------------------------------------------------------------


@dataclass(frozen=True)
class MixedProductReduction:
    instance: HeydeInstance
    branch: str  # "regular" or "minus_identity"
    symmetric: bool
    decomposition: HeydeDecomposition | None
    reduces_to_first_factor: bool | None
    noncompact_candidate: bool | None


def mixed_product_spec(k_spec: GroupSpec, p: int, level: int) -> GroupSpec:
    if any(c.p == p for c in k_spec.components):
        raise ValueError(f"prime {p} appears in both factors")
    return GroupSpec(k_spec.components + (Component(p, level, ComponentKind.QUASICYCLIC),))


def mixed_product_distribution(k_spec: GroupSpec, p: int, level: int, pmf) -> Distribution:
    """Distribution on K x (level-n quasicyclic layer).

    Support keys are tuples whose leading coordinates are residues in K and
    whose last coordinate is a p-power fraction mod 1 (or a plain residue).
    """
    spec = mixed_product_spec(k_spec, p, level)
    converted = {}
    for key, m in dict(pmf).items():
        *head, last = key
        if isinstance(last, Fraction) or not isinstance(last, int):
            last = quasicyclic_residue(p, level, last)
        converted[tuple(head) + (last,)] = Fraction(m)
    return from_pmf(spec, converted)


def reduce_mixed_product(
    k_spec: GroupSpec,
    alpha_k: Endomorphism,
    p: int,
    level: int,
    unit: PAdicUnit,
    pmf1,
    pmf2,
) -> MixedProductReduction:
    """Finite reduction on the product of a model group and a quasicyclic layer.

    While the quasicyclic action differs from minus identity the subgroup
    produced by the decomposition is compact; in the minus-identity case the
    reduction reports whether the computed subgroup contains the full
    truncated layer, which a finite truncation cannot distinguish from the
    genuinely noncompact outcome.
    """
    if alpha_k.spec != k_spec:
        raise ValueError("spec mismatch")
    if unit.p != p:
        raise ValueError("unit prime does not match the group prime")
    if unit.level < level:
        raise ValueError("truncation level exceeded")
    mu1 = mixed_product_distribution(k_spec, p, level, pmf1)
    mu2 = mixed_product_distribution(k_spec, p, level, pmf2)
    spec = mu1.spec
    q = p**level
    s = unit.truncation(level) % q
    alpha = Endomorphism(spec, alpha_k.multipliers + (s,))
    inst = HeydeInstance(spec, mu1, mu2, alpha)
    symmetric = is_conditionally_symmetric(inst)
    decomposition = None
    reduces = noncompact = None
    if s == q - 1:
        branch = "minus_identity"
        if symmetric:
            decomposition = decompose(inst)
            noncompact = decomposition.subgroup.exponents[-1] == 0
    else:
        branch = "regular"
        if symmetric:
            decomposition = decompose(inst)
            reduces = s == 1
            if reduces and decomposition.subgroup.exponents[-1] != level:
                raise VerificationFailure(
                    "identity action on the quasicyclic layer must force a subgroup "
                    "inside the first factor"
                )
    return MixedProductReduction(inst, branch, symmetric, decomposition, reduces, noncompact)
