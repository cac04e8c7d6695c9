"""Property audits of window maps, and the obstruction that rules out sigma."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..core_sets import NaturalSet, add, gap, is_interval, normalize, translate
from ..numerical_semigroup import NumericalSemigroup
from ..power_structures import enumerate_window, sigma
from .maps import (
    CandidateMap,
    CheckResult,
    IllDefinedQuotient,
    check_additivity,
    induced_quotient_map,
    measure_params,
    translation_equivariance_check,
    verify_growth_formula,
)
from .search import SearchConfig, search_automorphisms

__all__ = ["LemmaReport", "MapAudit", "ObstructionWitness", "lemma_suite", "sigma_restriction_obstruction"]

MAX_WITNESSES = 5


@dataclass(frozen=True)
class ObstructionWitness:
    """Why sigma cannot act on P(S) for a non-interval S.

    ``x = {m, k, k+1}`` lies in P(S) but ``sigma(x) = {m, m+1, k+1}`` does not,
    since ``m + 1`` is a gap. ``shifted`` and ``sigma_shifted`` record the
    translated pair inside [[k, oo)) where sigma is forced to act.
    """

    m: int
    k: int
    x: NaturalSet
    sigma_x: NaturalSet
    missing: int
    shifted: NaturalSet
    sigma_shifted: NaturalSet

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "x": self.x.to_list(),
            "sigma_x": self.sigma_x.to_list(),
            "missing": self.missing,
            "shifted": self.shifted.to_list(),
            "sigma_shifted": self.sigma_shifted.to_list(),
        }


def sigma_restriction_obstruction(s: NumericalSemigroup) -> ObstructionWitness | None:
    m = s.interval_obstruction_witness()
    if m is None:
        return None
    k = s.critical
    x = NaturalSet([m, k, k + 1])
    sx = sigma(x)
    shifted = translate(k, x)
    sigma_shifted = sigma(shifted)
    # sigma commutes with translation, so sigma(x) is pinned by the shifted set
    assert sigma_shifted == translate(k, sx)
    assert m in s and all(e in s for e in x) and m + 1 not in s
    return ObstructionWitness(m, k, x, sx, m + 1, shifted, sigma_shifted)


def _result(witnesses: list[dict], checked: int) -> CheckResult:
    return CheckResult(not witnesses, witnesses[:MAX_WITNESSES], checked)


def _pointwise(f: CandidateMap, applies, holds) -> CheckResult:
    witnesses: list[dict] = []
    checked = 0
    for x, y in f.items():
        if not applies(x):
            continue
        checked += 1
        if not holds(x, y):
            witnesses.append({"x": x.to_list(), "image": y.to_list()})
            if len(witnesses) >= MAX_WITNESSES:
                break
    return _result(witnesses, checked)


def _quotient_check(f: CandidateMap) -> CheckResult:
    try:
        induced = induced_quotient_map(f)
    except IllDefinedQuotient as exc:
        return CheckResult(False, [exc.witness], 0)
    k = f.carrier.semigroup.critical
    witnesses: list[dict] = []
    checked = 0
    # constant on classes
    for x, y in f.items():
        if x.alpha < k:
            continue
        rep = normalize(x)
        if rep in induced:
            checked += 1
            if induced[rep] != normalize(y):
                witnesses.append({"check": "class", "x": x.to_list(), "image": y.to_list()})
    if len(set(induced.values())) != len(induced):
        witnesses.append({"check": "injective"})
    # additive on classes
    reps = list(induced)
    for i, r1 in enumerate(reps):
        for r2 in reps[i:]:
            r = add(r1, r2)
            if r in induced:
                checked += 1
                if induced[r] != add(induced[r1], induced[r2]):
                    witnesses.append(
                        {"check": "additive", "x": r1.to_list(), "y": r2.to_list()}
                    )
    return _result(witnesses, checked)


def _growth_check(f: CandidateMap) -> CheckResult:
    k = f.carrier.semigroup.critical
    try:
        params = measure_params(f)
    except ValueError as exc:
        return CheckResult(False, [{"error": str(exc)}], 0)
    growth = verify_growth_formula(f, params)
    witnesses = list(growth.witnesses)
    if growth.status == "not_applicable":
        if not growth.extrema_preserved:
            witnesses.append({"check": "extrema"})
        return _result(witnesses, len(f.carrier))
    if params.as_tuple() != (k, k, k, k + 1):
        witnesses.insert(0, {"check": "params", "params": list(params.as_tuple()), "k": k})
    return _result(witnesses, len(f.carrier))


def audit_map(f: CandidateMap) -> dict[str, CheckResult]:
    """Run every property a genuine automorphism has against one window map."""
    k = f.carrier.semigroup.critical
    violations = check_additivity(f, closure=True)
    checks = {
        "additive": CheckResult(
            not violations, [v.to_dict() for v in violations[:MAX_WITNESSES]], len(f.carrier)
        ),
        "preserves_extrema": _pointwise(
            f, lambda x: True, lambda x, y: (x.alpha, x.beta) == (y.alpha, y.beta)
        ),
        "preserves_gap": _pointwise(f, lambda x: True, lambda x, y: gap(x) == gap(y)),
        "fixes_small_sets": _pointwise(f, lambda x: len(x) <= 2, lambda x, y: x == y),
        "fixes_intervals": _pointwise(
            f, lambda x: is_interval(x) and x.alpha >= k, lambda x, y: x == y
        ),
        "restricts_to_tail": _pointwise(f, lambda x: x.alpha >= k, lambda x, y: y.alpha >= k),
        "translation_equivariant": translation_equivariance_check(f, MAX_WITNESSES),
        "quotient_well_defined": _quotient_check(f),
    }
    if f.carrier.bound >= k + 1:
        checks["growth_formula"] = _growth_check(f)
    return checks


@dataclass
class MapAudit:
    label: str
    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]


@dataclass
class LemmaReport:
    semigroup: NumericalSemigroup
    bound: int
    mode: str
    audits: list[MapAudit] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.audits)

    def to_dict(self) -> dict:
        return {
            "semigroup": self.semigroup.describe(),
            "bound": self.bound,
            "mode": self.mode,
            "passed": self.passed,
            "maps": [
                {
                    "label": a.label,
                    "passed": a.passed,
                    "checks": {name: c.to_dict() for name, c in a.checks.items()},
                }
                for a in self.audits
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def lemma_suite(
    s: NumericalSemigroup,
    bound: int,
    mode: str = "filtered",
    maps: list[tuple[str, CandidateMap]] | None = None,
    config: SearchConfig | None = None,
) -> LemmaReport:
    """Audit the search survivors on the window of ``bound`` (or the given ``maps``).

    In filtered mode several properties hold by construction of the search;
    raw mode makes every check independent of the search.
    """
    if maps is None:
        config = config or SearchConfig.for_mode(mode)
        carrier = enumerate_window(s, bound, cap=config.cap)
        report = search_automorphisms(carrier, config)
        maps = [(sv.cls, sv.map) for sv in report.survivors]
        mode = report.mode
    else:
        mode = "given"
    audits = [MapAudit(label, audit_map(f)) for label, f in maps]
    return LemmaReport(s, bound, mode, audits)
