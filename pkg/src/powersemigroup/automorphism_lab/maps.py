"""Candidate maps on window carriers and the checks run against them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from ..core_sets import NaturalSet, interval, normalize, translate
from ..power_structures import EquivClassRep, WindowCarrier, phi_inv, sigma

__all__ = [
    "CandidateMap",
    "CheckResult",
    "GrowthCheck",
    "IllDefinedQuotient",
    "MeasuredParams",
    "Violation",
    "check_additivity",
    "induced_quotient_map",
    "measure_params",
    "translation_equivariance_check",
    "verify_growth_formula",
]


class IllDefinedQuotient(ValueError):
    """The map does not commute with translations, so it does not pass to classes."""

    def __init__(self, witness: dict):
        self.witness = witness
        super().__init__(f"map is not translation-equivariant: {witness}")


@dataclass(frozen=True)
class CandidateMap:
    """A partial injective map on a carrier, stored as index -> index (None = undefined)."""

    carrier: WindowCarrier
    table: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.table) != len(self.carrier):
            raise ValueError("table length must equal carrier size")
        seen: set[int] = set()
        for v in self.table:
            if v is None:
                continue
            if v in seen:
                raise ValueError(f"map is not injective: {self.carrier[v]} is hit twice")
            seen.add(v)

    @classmethod
    def identity(cls, carrier: WindowCarrier) -> CandidateMap:
        return cls(carrier, tuple(range(len(carrier))))

    @classmethod
    def from_function(
        cls, carrier: WindowCarrier, fn: Callable[[NaturalSet], NaturalSet]
    ) -> CandidateMap:
        """Tabulate ``fn``; members whose image leaves the carrier stay undefined."""
        return cls(carrier, tuple(carrier.index_of(fn(x)) for x in carrier.members))

    @classmethod
    def sigma(cls, carrier: WindowCarrier) -> CandidateMap:
        return cls.from_function(carrier, sigma)

    @classmethod
    def from_pairs(cls, carrier: WindowCarrier, pairs: dict[NaturalSet, NaturalSet]) -> CandidateMap:
        """Identity except on the listed members."""
        table = list(range(len(carrier)))
        for x, y in pairs.items():
            table[carrier.index[x]] = carrier.index[y]
        return cls(carrier, tuple(table))

    def __call__(self, x: NaturalSet) -> NaturalSet | None:
        i = self.carrier.index_of(x)
        if i is None:
            return None
        v = self.table[i]
        return None if v is None else self.carrier[v]

    @property
    def is_total(self) -> bool:
        return None not in self.table

    def items(self) -> Iterator[tuple[NaturalSet, NaturalSet]]:
        for i, v in enumerate(self.table):
            if v is not None:
                yield self.carrier[i], self.carrier[v]

    def is_identity(self) -> bool:
        return self.is_total and all(i == v for i, v in enumerate(self.table))

    def is_sigma(self) -> bool:
        return self.is_total and all(y == sigma(x) for x, y in self.items())


@dataclass(frozen=True)
class Violation:
    """``f(x) + f(y)`` disagrees with the image recorded for ``x + y``."""

    x: NaturalSet
    y: NaturalSet
    total: NaturalSet
    image_sum: NaturalSet
    image_of_total: NaturalSet | None
    reason: str = "mismatch"

    def to_dict(self) -> dict:
        return {
            "x": self.x.to_list(),
            "y": self.y.to_list(),
            "sum": self.total.to_list(),
            "image_sum": self.image_sum.to_list(),
            "image_of_sum": None if self.image_of_total is None else self.image_of_total.to_list(),
            "reason": self.reason,
        }


def check_additivity(f: CandidateMap, closure: bool = False) -> list[Violation]:
    """Every pair (X, Y) with X + Y in the carrier where f(X) + f(Y) != f(X + Y).

    With ``closure`` the check also covers sums that leave the carrier: all
    decompositions of one sum must give the same image sum, and distinct sums
    must have distinct image sums, and for a total map no image sum may land
    back in the carrier. These are necessary for ``f`` to extend to an automorphism.
    """
    carrier = f.carrier
    members = carrier.members
    defined = [(i, v) for i, v in enumerate(f.table) if v is not None]
    out: list[Violation] = []
    total_map = f.is_total
    first_image: dict[NaturalSet, tuple[NaturalSet, NaturalSet, NaturalSet]] = {}
    claimed: dict[NaturalSet, NaturalSet] = {}
    for a, (i, fi) in enumerate(defined):
        x, fx = members[i], members[fi]
        for j, fj in defined[a:]:
            y = members[j]
            total = x + y
            image_sum = fx + members[fj]
            k = carrier.index_of(total)
            if k is not None:
                fk = f.table[k]
                if fk is None:
                    continue
                if members[fk] != image_sum:
                    out.append(Violation(x, y, total, image_sum, members[fk]))
                continue
            if not closure:
                continue
            if total_map and image_sum in carrier:
                out.append(Violation(x, y, total, image_sum, None, "image sum lands in carrier"))
                continue
            seen = first_image.get(total)
            if seen is None:
                first_image[total] = (x, y, image_sum)
                other = claimed.setdefault(image_sum, total)
                if other != total:
                    out.append(
                        Violation(x, y, total, image_sum, None, f"image sum also produced by {other}")
                    )
            elif seen[2] != image_sum:
                out.append(Violation(x, y, total, image_sum, seen[2], "decompositions disagree"))
    return out


@dataclass(frozen=True)
class MeasuredParams:
    """Extrema of the images of {k} (s, t) and of [[k, k+1]] (a, b)."""

    s: int
    t: int
    a: int
    b: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.s, self.t, self.a, self.b)


def measure_params(f: CandidateMap) -> MeasuredParams:
    k = f.carrier.semigroup.critical
    point, pair = NaturalSet([k]), interval(k, k + 1)
    fp, fq = f(point), f(pair)
    if fp is None or fq is None:
        raise ValueError(
            f"carrier must contain {{{k}}} and [[{k},{k + 1}]] with images defined; "
            f"need bound >= {k + 1}"
        )
    return MeasuredParams(fp.alpha, fp.beta, fq.alpha, fq.beta)


@dataclass
class GrowthCheck:
    """Outcome of the extrema growth-formula check.

    ``status`` is ``"pass"``, ``"fail"`` or ``"not_applicable"`` (critical
    element 0, where the formula divides by zero). ``extrema_preserved`` is
    always computed directly.
    """

    status: str
    params: MeasuredParams
    witnesses: list[dict] = field(default_factory=list)
    extrema_preserved: bool = True

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "params": list(self.params.as_tuple()),
            "extrema_preserved": self.extrema_preserved,
            "witnesses": self.witnesses,
        }


def verify_growth_formula(
    f: CandidateMap, params: MeasuredParams | None = None, max_witnesses: int = 10
) -> GrowthCheck:
    """Check that min/max of every image follow the linear law fixed by (s, t, a, b).

    min f(X) = (a - s)(max X - min X) + (s / k) min X
    max f(X) = (b - t)(max X - min X) + (t / k) min X

    together with k | s and k | t.
    """
    if params is None:
        params = measure_params(f)
    k = f.carrier.semigroup.critical
    preserved = all(x.alpha == y.alpha and x.beta == y.beta for x, y in f.items())
    if k == 0:
        return GrowthCheck("not_applicable", params, [], preserved)
    s, t, a, b = params.as_tuple()
    witnesses: list[dict] = []
    for name, val in (("s", s), ("t", t)):
        if val % k:
            witnesses.append({"check": "divisibility", "param": name, "value": val, "k": k})
    for x, y in f.items():
        spread = x.beta - x.alpha
        lo = (a - s) * spread + Fraction(s, k) * x.alpha
        hi = (b - t) * spread + Fraction(t, k) * x.alpha
        if lo != y.alpha or hi != y.beta:
            witnesses.append(
                {
                    "check": "formula",
                    "x": x.to_list(),
                    "image": y.to_list(),
                    "predicted": [str(lo), str(hi)],
                }
            )
        if len(witnesses) >= max_witnesses:
            break
    return GrowthCheck("fail" if witnesses else "pass", params, witnesses, preserved)


@dataclass
class CheckResult:
    passed: bool
    witnesses: list[dict] = field(default_factory=list)
    checked: int = 0

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checked": self.checked, "witnesses": self.witnesses}


def _tail_members(carrier: WindowCarrier) -> list[NaturalSet]:
    k = carrier.semigroup.critical
    return [x for x in carrier.members if x.alpha >= k]


def translation_equivariance_check(f: CandidateMap, max_witnesses: int = 10) -> CheckResult:
    """``f(m + X) == m + f(X)`` for m >= 1 and X inside [[k, oo)), whenever both are in the window.

    For an interval semigroup this covers every member of the carrier.
    """
    carrier = f.carrier
    witnesses: list[dict] = []
    checked = 0
    for x in _tail_members(carrier):
        fx = f(x)
        if fx is None:
            continue
        for m in range(1, carrier.bound - x.beta + 1):
            shifted = translate(m, x)
            fs = f(shifted)
            if fs is None:
                continue
            checked += 1
            expected = translate(m, fx)
            if fs != expected:
                witnesses.append(
                    {
                        "m": m,
                        "x": x.to_list(),
                        "image_of_shift": fs.to_list(),
                        "shift_of_image": expected.to_list(),
                    }
                )
                if len(witnesses) >= max_witnesses:
                    return CheckResult(False, witnesses, checked)
    return CheckResult(not witnesses, witnesses, checked)


def induced_quotient_map(f: CandidateMap) -> dict[NaturalSet, NaturalSet]:
    """The map on translation classes, keyed and valued by min-0 representatives.

    Defined on every representative ``r`` whose member ``k + r`` lies in the
    carrier. Raises IllDefinedQuotient when ``f`` is not translation-equivariant.
    """
    check = translation_equivariance_check(f, max_witnesses=1)
    if not check.passed:
        raise IllDefinedQuotient(check.witnesses[0])
    k = f.carrier.semigroup.critical
    induced: dict[NaturalSet, NaturalSet] = {}
    for x in _tail_members(f.carrier):
        if x.alpha != k:
            continue
        fx = f(x)
        if fx is None:
            continue
        rep = normalize(x)
        assert phi_inv(EquivClassRep(rep), k) == x
        induced[rep] = normalize(fx)
    return induced
