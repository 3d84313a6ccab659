"""Randomized family harness for the gluing preservation properties.

Star gluings of curves with ACM closures must stay ACM (and Gorenstein
inputs must stay Gorenstein); any deficit is a build-failing violation.
Non-star control gluings are sampled alongside and merely recorded: their
failures land in the counterexample list, never in the violation list.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .criteria import CurveVerdict, full_verdict
from .errors import Timeout, TooLarge, ValidationError
from .semigroup import (
    GluingSpec,
    NumericalSemigroup,
    format_generators,
    gluing_spec,
    make_semigroup,
    star_glue,
)
from .toric import complete_glued_ideal, defining_ideal, glued_ideal

CONTROL_GLUING = {"left": (3, 5), "right": (7, 12), "p": 8, "q": 19}


@dataclass
class FamilyReport:
    """Aggregated outcome of a family run.

    For star trials acm_preserved must equal star_trials and
    gorenstein_preserved must equal gorenstein_eligible; a deficit means a
    preservation violation (collected in `violations`)."""

    seed: int
    trials: int = 0
    star_trials: int = 0
    acm_preserved: int = 0
    gorenstein_eligible: int = 0
    gorenstein_preserved: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "star_trials": self.star_trials,
            "acm_preserved": self.acm_preserved,
            "gorenstein_eligible": self.gorenstein_eligible,
            "gorenstein_preserved": self.gorenstein_preserved,
            "counterexamples": self.counterexamples,
            "violations": self.violations,
            "skipped": self.skipped,
            "records": self.records,
        }


class _VerdictCache:
    """full_verdict is the expensive step for the sampled inputs; memoize it
    per semigroup within one family run."""

    def __init__(self):
        self.ideals = {}
        self.verdicts = {}

    def ideal(self, S: NumericalSemigroup):
        if S.generators not in self.ideals:
            self.ideals[S.generators] = defining_ideal(S)
        return self.ideals[S.generators]

    def verdict(self, S: NumericalSemigroup) -> CurveVerdict:
        if S.generators not in self.verdicts:
            self.verdicts[S.generators] = full_verdict(S, affine_ideal=self.ideal(S))
        return self.verdicts[S.generators]


def _sample_semigroup(rng: random.Random, max_gen: int) -> NumericalSemigroup:
    while True:
        r = rng.choice((2, 3))
        gens = rng.sample(range(2, max_gen + 1), r)
        try:
            return make_semigroup(gens)
        except ValidationError:
            continue


def _sample_acm_pair(rng, max_gen, cache):
    while True:
        S = _sample_semigroup(rng, max_gen)
        verdict = cache.verdict(S)
        if verdict.acm:
            return S, verdict


def _sample_star_spec(rng, left, right) -> GluingSpec | None:
    k = len(right.generators)
    for _ in range(60):
        b_l = rng.randint(2, 4)
        total = rng.randint(2, b_l)
        avec = [0] * k
        for _ in range(total):
            avec[rng.randrange(k)] += 1
        try:
            return star_glue(left, right, b_l, avec)
        except ValidationError:
            continue
    return None


def _sample_nonstar_spec(rng, left, right) -> GluingSpec | None:
    """Control gluing that is definitely not star: p not a multiple of the
    largest left generator."""
    m_l = left.generators[-1]
    lo = left.generators[0] + left.generators[1]
    hi = 4 * m_l
    for _ in range(120):
        p = rng.randint(lo, hi)
        if p % m_l == 0:
            continue
        q_lo = right.generators[0] + right.generators[1]
        q = rng.randint(q_lo, 4 * right.generators[-1])
        try:
            return gluing_spec(left, right, p, q, star=False)
        except ValidationError:
            continue
    return None


def _glued_verdict(spec: GluingSpec, cache, deadline) -> tuple[CurveVerdict, bool]:
    raw = glued_ideal(spec, cache.ideal(spec.left), cache.ideal(spec.right))
    completed, added_nothing = complete_glued_ideal(raw, deadline=deadline)
    verdict = full_verdict(completed.semigroup, affine_ideal=completed, deadline=deadline)
    return verdict, added_nothing


def _flag_summary(v: CurveVerdict) -> dict:
    return {
        "generators": format_generators(v.semigroup),
        "acm": v.acm_groebner,
        "gorenstein_apery": v.gorenstein_apery,
        "gorenstein_hilbert": v.gorenstein_hilbert,
    }


def _run_control(spec, cache, report, index, deadline) -> None:
    left_v = cache.verdict(spec.left)
    right_v = cache.verdict(spec.right)
    verdict, _ = _glued_verdict(spec, cache, deadline)
    record = {
        "trial": index,
        "kind": "control",
        "spec": spec.to_json(),
        "glued": _flag_summary(verdict),
    }
    report.records.append(record)
    acm_lost = left_v.acm and right_v.acm and not verdict.acm
    gor_lost = (
        left_v.gorenstein
        and right_v.gorenstein
        and verdict.acm
        and not verdict.gorenstein
    )
    if acm_lost or gor_lost:
        report.counterexamples.append(record)


def random_star_family(
    trials: int,
    max_gen: int,
    seed: int,
    *,
    star_only: bool = False,
    trial_timeout: float = 30.0,
) -> FamilyReport:
    """Sample `trials` star gluings of curve pairs with ACM closures and
    verify that ACM (and Gorenstein, when both inputs are Gorenstein) is
    preserved; sample non-star controls alongside unless star_only.

    Deterministic for a fixed seed.  Trials that blow the per-trial
    timeout are skipped and logged, never counted as failures."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    cache = _VerdictCache()
    report = FamilyReport(seed=seed)
    for index in range(trials):
        deadline = time.monotonic() + trial_timeout
        try:
            left, left_v = _sample_acm_pair(rng, max_gen, cache)
            right, right_v = _sample_acm_pair(rng, max_gen, cache)
            spec = _sample_star_spec(rng, left, right)
            if spec is None:
                report.skipped.append({"trial": index, "reason": "no valid star data"})
                continue
            verdict, added_nothing = _glued_verdict(spec, cache, deadline)
        except (Timeout, TooLarge) as exc:
            report.skipped.append({"trial": index, "reason": type(exc).__name__.lower()})
            continue
        report.trials += 1
        report.star_trials += 1
        record = {
            "trial": index,
            "kind": "star",
            "spec": spec.to_json(),
            "basis_already_groebner": added_nothing,
            "inputs": [_flag_summary(left_v), _flag_summary(right_v)],
            "glued": _flag_summary(verdict),
        }
        report.records.append(record)
        if verdict.acm:
            report.acm_preserved += 1
        else:
            report.violations.append({**record, "violated": "acm preservation"})
        gorenstein_inputs = left_v.gorenstein and right_v.gorenstein
        if gorenstein_inputs:
            report.gorenstein_eligible += 1
            if verdict.acm and verdict.gorenstein:
                report.gorenstein_preserved += 1
            else:
                report.violations.append({**record, "violated": "gorenstein preservation"})
        if not star_only:
            control = _sample_nonstar_spec(rng, left, right)
            if control is not None:
                try:
                    _run_control(control, cache, report, index, deadline)
                    report.trials += 1
                except (Timeout, TooLarge) as exc:
                    report.skipped.append(
                        {"trial": index, "reason": f"control {type(exc).__name__.lower()}"}
                    )
    if not star_only:
        # fixed non-star control: the gluing known to destroy ACM
        left = make_semigroup(CONTROL_GLUING["left"])
        right = make_semigroup(CONTROL_GLUING["right"])
        spec = gluing_spec(left, right, CONTROL_GLUING["p"], CONTROL_GLUING["q"])
        _run_control(spec, cache, report, trials, time.monotonic() + trial_timeout)
        report.trials += 1
    report.records.sort(key=lambda r: (r["trial"], r["kind"]))
    return report
