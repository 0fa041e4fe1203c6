"""Seeded verification sweeps over instance families, with JSON-ready reports.

A sweep runs the symmetry test and the dual functional equation on every
instance, decomposes the symmetric ones, and classifies the corollaries.
Any disagreement between the two equivalent tests, any false decomposition
flag, and any failed applicable corollary is a violation; the first
violating instance is kept in full so it can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import (
    HeydeInstance,
    classify_corollary,
    decompose,
    is_conditionally_symmetric,
    satisfies_heyde_equation,
)
from .errors import VerificationFailure
from .fixtures import enumerate_automorphisms, enumerate_distributions, random_instance
from .groups import GroupSpec
from .morphisms import Endomorphism
from .rng import DeterministicStream


@dataclass(frozen=True)
class SweepConfig:
    specs: tuple[GroupSpec, ...]
    mode: str = "random"  # "random" or "exhaustive"
    denominator: int = 2  # exhaustive mode: mass granularity
    max_denominator: int = 8  # random mode: cap on mass denominators
    budget: int = 100  # random mode: instances per spec
    automorphisms: tuple[tuple[int, ...], ...] | None = None  # None means all
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("random", "exhaustive"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")


@dataclass
class SweepReport:
    seed: int
    instances: int = 0
    symmetric: int = 0
    disagreements: int = 0
    decomposition_failures: int = 0
    corollary_failures: int = 0
    corollary_checked: int = 0
    corollary_skipped: int = 0
    first_counterexample: dict | None = field(default=None)

    @property
    def violations(self) -> int:
        return self.disagreements + self.decomposition_failures + self.corollary_failures

    @property
    def ok(self) -> bool:
        return self.violations == 0


def _alphas_for(spec: GroupSpec, config: SweepConfig) -> list[Endomorphism]:
    if config.automorphisms is None:
        return enumerate_automorphisms(spec)
    return [Endomorphism(spec, vec) for vec in config.automorphisms]


def _record(report: SweepReport, inst: HeydeInstance, reason: str) -> None:
    if report.first_counterexample is None:
        from .serialize import instance_to_obj

        report.first_counterexample = {"reason": reason, "instance": instance_to_obj(inst)}


def check_instance(inst: HeydeInstance, report: SweepReport) -> None:
    """Run the full battery on one instance, accumulating into the report."""
    report.instances += 1
    symmetric = is_conditionally_symmetric(inst)
    equation = satisfies_heyde_equation(inst)
    if symmetric != equation:
        report.disagreements += 1
        _record(report, inst, f"symmetry={symmetric} but equation={equation}")
    if not symmetric:
        return
    report.symmetric += 1
    try:
        dec = decompose(inst)
    except VerificationFailure as exc:
        report.decomposition_failures += 1
        _record(report, inst, f"decompose failed: {exc}")
        return
    if not dec.flags.all_true:
        report.decomposition_failures += 1
        _record(report, inst, f"false decomposition flag: {dec.flags}")
        return
    corollaries = classify_corollary(inst, dec)
    for check in corollaries.checks:
        if not check.applicable:
            report.corollary_skipped += 1
        else:
            report.corollary_checked += 1
            if not check.verified:
                report.corollary_failures += 1
                _record(report, inst, f"corollary {check.name} failed: {check.detail}")


def run_sweep(config: SweepConfig) -> SweepReport:
    report = SweepReport(seed=config.seed)
    for spec_index, spec in enumerate(config.specs):
        alphas = _alphas_for(spec, config)
        if config.mode == "exhaustive":
            pmfs = list(enumerate_distributions(spec, config.denominator))
            for alpha in alphas:
                for mu1 in pmfs:
                    for mu2 in pmfs:
                        check_instance(HeydeInstance(spec, mu1, mu2, alpha), report)
        else:
            stream = DeterministicStream(config.seed, label=f"sweep:{spec_index}")
            for i in range(config.budget):
                alpha = alphas[i % len(alphas)]
                inst = random_instance(
                    spec, config.max_denominator, stream.derive(str(i)), alpha
                )
                check_instance(inst, report)
    return report
