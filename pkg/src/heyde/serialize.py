"""Canonical JSON encodings for every object that crosses the CLI boundary.

Encodings are byte-stable: keys are emitted in sorted order with compact
separators, probabilities are integer numerator/denominator pairs (never
floats), and mass lists are sorted by support point.  Readers validate
exactly what the writers guarantee and raise ValueError on anything else.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .engine import (
    CorollaryReport,
    HeydeDecomposition,
    HeydeInstance,
)
from .distributions import Distribution
from .groups import GroupSpec, Subgroup, validate_spec
from .lemmas import DifferenceLemmaReport, FixedPointLemmaReport
from .morphisms import Endomorphism, PAdicUnit
from .sweep import SweepConfig, SweepReport


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- group specs -----------------------------------------------------------


def spec_to_obj(spec: GroupSpec) -> dict:
    return {
        "components": [
            {"p": c.p, "k": c.k, "kind": c.kind.value} for c in spec.components
        ]
    }


def spec_from_obj(obj) -> GroupSpec:
    if not isinstance(obj, dict) or "components" not in obj:
        raise ValueError("spec object must have a 'components' list")
    return validate_spec(obj["components"])


# -- elements, subgroups, endomorphisms --------------------------------------


def element_to_obj(x) -> list[int]:
    return list(x)


def element_from_obj(spec: GroupSpec, obj):
    if not isinstance(obj, list) or not all(isinstance(c, int) for c in obj):
        raise ValueError(f"element must be a list of integers, got {obj!r}")
    return spec.reduce(tuple(obj))


def subgroup_to_obj(sub: Subgroup) -> list[int]:
    return list(sub.exponents)


def subgroup_from_obj(spec: GroupSpec, obj) -> Subgroup:
    if not isinstance(obj, list) or not all(isinstance(a, int) for a in obj):
        raise ValueError(f"subgroup must be a list of integers, got {obj!r}")
    return Subgroup(spec, tuple(obj))


def endo_to_obj(endo: Endomorphism) -> list[int]:
    return list(endo.multipliers)


def endo_from_obj(spec: GroupSpec, obj) -> Endomorphism:
    if not isinstance(obj, list) or not all(isinstance(m, int) for m in obj):
        raise ValueError(f"endomorphism must be a list of integers, got {obj!r}")
    return Endomorphism(spec, tuple(obj))


def unit_to_obj(unit: PAdicUnit) -> dict:
    return {"p": unit.p, "digits": list(unit.digits)}


def unit_from_obj(obj) -> PAdicUnit:
    if not isinstance(obj, dict):
        raise ValueError("p-adic unit must be an object with 'p' and 'digits'")
    return PAdicUnit(int(obj["p"]), tuple(int(d) for d in obj["digits"]))


# -- distributions -----------------------------------------------------------


def distribution_to_obj(mu: Distribution) -> list[dict]:
    return [
        {"x": list(x), "num": m.numerator, "den": m.denominator} for x, m in mu.masses
    ]


def distribution_from_obj(spec: GroupSpec, obj) -> Distribution:
    if not isinstance(obj, list):
        raise ValueError("distribution must be a list of mass entries")
    masses = {}
    for entry in obj:
        if not isinstance(entry, dict) or not {"x", "num", "den"} <= set(entry):
            raise ValueError(f"mass entry {entry!r} must have keys x, num, den")
        x = element_from_obj(spec, entry["x"])
        if x in masses:
            raise ValueError(f"duplicate support point {entry['x']!r}")
        num, den = entry["num"], entry["den"]
        if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
            raise ValueError(f"mass entry {entry!r} must use integer num/den with den > 0")
        if num <= 0:
            raise ValueError("masses must be strictly positive")
        masses[x] = Fraction(num, den)
    # Distribution validation enforces total mass one.
    return Distribution(spec, tuple(sorted(masses.items())))


# -- instances ----------------------------------------------------------------


def instance_to_obj(inst: HeydeInstance) -> dict:
    return {
        "spec": spec_to_obj(inst.spec),
        "mu1": distribution_to_obj(inst.mu1),
        "mu2": distribution_to_obj(inst.mu2),
        "alpha": endo_to_obj(inst.alpha),
    }


def instance_from_obj(obj) -> HeydeInstance:
    if not isinstance(obj, dict):
        raise ValueError("instance must be a JSON object")
    for key in ("spec", "mu1", "mu2", "alpha"):
        if key not in obj:
            raise ValueError(f"instance is missing the {key!r} field")
    spec = spec_from_obj(obj["spec"])
    return HeydeInstance(
        spec,
        distribution_from_obj(spec, obj["mu1"]),
        distribution_from_obj(spec, obj["mu2"]),
        endo_from_obj(spec, obj["alpha"]),
    )


# -- reports --------------------------------------------------------------------


def corollary_report_to_obj(report: CorollaryReport) -> list[dict]:
    return [
        {
            "name": c.name,
            "applicable": c.applicable,
            "verified": c.verified,
            "detail": c.detail,
        }
        for c in report.checks
    ]


def decomposition_to_obj(
    dec: HeydeDecomposition, corollaries: CorollaryReport | None = None
) -> dict:
    flags = {
        "stable_under_one_minus_alpha": dec.flags.stable_under_one_minus_alpha,
        "shifts_of_common_distribution": dec.flags.shifts_of_common_distribution,
        "minimal_support_subgroup": dec.flags.minimal_support_subgroup,
        "haar_factor": dec.flags.haar_factor,
        "restricted_symmetry": dec.flags.restricted_symmetry,
    }
    obj = {
        "subgroup": subgroup_to_obj(dec.subgroup),
        "lambda": distribution_to_obj(dec.lam),
        "x1": element_to_obj(dec.shift1),
        "x2": element_to_obj(dec.shift2),
        "flags": flags,
        "all_flags_true": dec.flags.all_true,
    }
    if corollaries is not None:
        obj["corollaries"] = corollary_report_to_obj(corollaries)
    return obj


def difference_report_to_obj(report: DifferenceLemmaReport) -> dict:
    return {
        "hypothesis_ok": report.hypothesis_ok,
        "positive_ok": report.positive_ok,
        "evaluated": report.evaluated,
        "first_conclusion_ok": report.first_conclusion_ok,
        "second_conclusion_ok": report.second_conclusion_ok,
        "first_violation": report.first_violation,
        "checks": report.checks,
        "max_log_residual": report.max_log_residual,
    }


def fixed_point_report_to_obj(report: FixedPointLemmaReport) -> dict:
    return {
        "hypothesis_equation_ok": report.hypothesis_equation_ok,
        "bounds_ok": report.bounds_ok,
        "invertible_ok": report.invertible_ok,
        "evaluated": report.evaluated,
        "substitution_f_ok": report.substitution_f_ok,
        "substitution_g_ok": report.substitution_g_ok,
        "fixed_point_f_ok": report.fixed_point_f_ok,
        "fixed_point_g_ok": report.fixed_point_g_ok,
        "kappa": list(report.kappa_multipliers) if report.kappa_multipliers else None,
        "first_violation": report.first_violation,
    }


# -- sweeps -----------------------------------------------------------------------


def sweep_config_from_obj(obj) -> SweepConfig:
    if not isinstance(obj, dict) or "specs" not in obj:
        raise ValueError("sweep config must be an object with a 'specs' list")
    specs = tuple(spec_from_obj(s) for s in obj["specs"])
    autos = obj.get("automorphisms")
    if autos is not None and autos != "all":
        autos = tuple(tuple(int(m) for m in vec) for vec in autos)
    else:
        autos = None
    return SweepConfig(
        specs=specs,
        mode=obj.get("mode", "random"),
        denominator=int(obj.get("denominator", 2)),
        max_denominator=int(obj.get("max_denominator", 8)),
        budget=int(obj.get("budget", 100)),
        automorphisms=autos,
        seed=int(obj.get("seed", 0)),
    )


def sweep_report_to_obj(report: SweepReport) -> dict:
    return {
        "seed": report.seed,
        "instances": report.instances,
        "symmetric": report.symmetric,
        "disagreements": report.disagreements,
        "decomposition_failures": report.decomposition_failures,
        "corollary_failures": report.corollary_failures,
        "corollary_checked": report.corollary_checked,
        "corollary_skipped": report.corollary_skipped,
        "violations": report.violations,
        "first_counterexample": report.first_counterexample,
    }
