"""Exhaustive search for addition-preserving bijections of a window carrier.

The search is a depth-first backtracking over the carrier members with
eager constraint propagation. Besides the sums that stay in the window,
every sum ``X + Y`` of two window members is an element of P(S), so an
automorphism must send it to ``f(X) + f(Y)``. Those out-of-window sums get
their own (forced, never branched) variables: each must receive a single
image whatever decomposition produced it, and images must be pairwise
distinct. Without them the members at the top of the window are never
constrained and every permutation of them would survive.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from ..core_sets import NaturalSet, gap, is_interval
from ..numerical_semigroup import NumericalSemigroup, parse_description
from ..power_structures import (
    DEFAULT_CARRIER_CAP,
    CarrierTooLarge,
    WindowCarrier,
    enumerate_window,
)
from .maps import CandidateMap

__all__ = [
    "ALL_FILTERS",
    "ElementSearchReport",
    "SearchConfig",
    "SearchReport",
    "Survivor",
    "element_automorphism_search",
    "expected_classes",
    "filter_admits",
    "search_automorphisms",
]

# each filter is a property every genuine automorphism of P(S) has
ALL_FILTERS = ("alpha-beta", "gap", "small-sets", "intervals")


def filter_admits(name: str, x: NaturalSet, y: NaturalSet, k: int) -> bool:
    """Whether filter ``name`` allows ``x -> y`` when the critical element is ``k``."""
    if name == "alpha-beta":
        return (x.alpha, x.beta) == (y.alpha, y.beta)
    if name == "gap":
        return gap(x) == gap(y)
    if name == "small-sets":
        return len(x) > 2 or x == y
    if name == "intervals":
        return not (is_interval(x) and x.alpha >= k) or x == y
    raise ValueError(f"unknown filter {name!r}; choose from {ALL_FILTERS}")


@dataclass(frozen=True)
class SearchConfig:
    filters: frozenset[str] = frozenset(ALL_FILTERS)
    cap: int = DEFAULT_CARRIER_CAP
    workers: int = 1
    max_witnesses: int = 20

    def __post_init__(self) -> None:
        unknown = set(self.filters) - set(ALL_FILTERS)
        if unknown:
            raise ValueError(f"unknown filters {sorted(unknown)}; choose from {ALL_FILTERS}")

    @classmethod
    def for_mode(cls, mode: str, **kwargs) -> SearchConfig:
        if mode == "filtered":
            return cls(frozenset(ALL_FILTERS), **kwargs)
        if mode == "raw":
            return cls(frozenset(), **kwargs)
        raise ValueError(f"mode must be 'filtered' or 'raw', got {mode!r}")

    @property
    def mode(self) -> str:
        return "filtered" if self.filters else "raw"


@dataclass(frozen=True)
class Survivor:
    cls: str
    map: CandidateMap

    def to_dict(self) -> dict:
        return {
            "class": self.cls,
            "table": [[x.to_list(), y.to_list()] for x, y in self.map.items()],
        }


def expected_classes(s: NumericalSemigroup, reduced: bool) -> list[str] | None:
    """Classes the known classification predicts, or None when nothing is known."""
    if reduced:
        return ["identity", "sigma"] if s.critical == 0 else None
    return ["identity", "sigma"] if s.is_interval else ["identity"]


@dataclass
class SearchReport:
    carrier: WindowCarrier
    mode: str
    filters: list[str]
    survivors: list[Survivor]
    constraints_checked: int
    witnesses: list[dict] = field(default_factory=list)

    @property
    def classes(self) -> list[str]:
        return [s.cls for s in self.survivors]

    @property
    def expected(self) -> list[str] | None:
        return expected_classes(self.carrier.semigroup, self.carrier.reduced)

    @property
    def finding(self) -> str:
        """``"classification-check"`` when a proved answer exists to compare with,
        otherwise ``"bounded-finding"`` (an observation about this window only)."""
        return "bounded-finding" if self.expected is None else "classification-check"

    @property
    def matches_expected(self) -> bool | None:
        exp = self.expected
        return None if exp is None else sorted(self.classes) == sorted(exp)

    def to_dict(self, tables: bool = True) -> dict:
        d = {
            "semigroup": self.carrier.semigroup.describe(),
            "bound": self.carrier.bound,
            "reduced": self.carrier.reduced,
            "size": len(self.carrier),
            "mode": self.mode,
            "filters": self.filters,
            "constraints_checked": self.constraints_checked,
            "finding": self.finding,
            "expected": self.expected,
            "matches_expected": self.matches_expected,
            "survivors": [
                s.to_dict() if tables else {"class": s.cls} for s in self.survivors
            ],
            "witnesses": self.witnesses,
        }
        if self.finding == "bounded-finding":
            d["note"] = (
                f"observation for the window bound {self.carrier.bound} only; "
                "no automorphism classification is known for this case"
            )
        return d

    def to_json(self, tables: bool = True) -> str:
        return json.dumps(self.to_dict(tables), indent=2, sort_keys=True)


def _classify(f: CandidateMap) -> str:
    if f.is_identity():
        return "identity"
    if f.is_sigma():
        return "sigma"
    return "unclassified"


class _Conflict(Exception):
    def __init__(self, info: dict):
        self.info = info


class _Engine:
    """Search state for one carrier. Variables ``0..n-1`` are the carrier
    members; higher ids are out-of-window sums."""

    def __init__(self, carrier: WindowCarrier, filters: Iterable[str], max_witnesses: int):
        self.carrier = carrier
        self.filters = frozenset(filters)
        self.max_witnesses = max_witnesses
        members = carrier.members
        n = len(members)
        self.n = n
        k = carrier.semigroup.critical
        self.k = k

        self.domains = self._domains()
        self.domain_sets = [None if d is None else frozenset(d) for d in self.domains]

        sums: list[NaturalSet] = list(members)
        zid: dict[NaturalSet, int] = dict(carrier.index)
        partners: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        betas = [x.beta for x in members]
        for i in range(n):
            x = members[i]
            for j in range(i, n):
                z = x + members[j]
                v = zid.get(z)
                if v is None:
                    v = zid[z] = len(sums)
                    sums.append(z)
                w = betas[i] + betas[j]
                partners[i].append((w, j, v))
                if j != i:
                    partners[j].append((w, i, v))
        for p in partners:
            p.sort()
        self.partners = [[(j, v) for _, j, v in p] for p in partners]
        self.sums = sums
        self.image: list[NaturalSet | None] = [None] * len(sums)
        self.owner: dict[NaturalSet, int] = {}
        self.assigned = 0
        self.checked = 0
        self.witnesses: list[dict] = []
        self._sum_cache: dict[tuple[NaturalSet, NaturalSet], NaturalSet] = {}

    def _fixed(self, x: NaturalSet) -> bool:
        if "small-sets" in self.filters and len(x) <= 2:
            return True
        return "intervals" in self.filters and is_interval(x) and x.alpha >= self.k

    def _admits(self, x: NaturalSet, y: NaturalSet) -> bool:
        """Whether the enabled filters allow ``x -> y``; same answer as
        ``filter_admits`` over ``self.filters``, computed from the grouping key."""
        if self._fixed(x):
            return x == y
        return self._key(x) == self._key(y)

    def _key(self, x: NaturalSet) -> tuple:
        key: tuple = ()
        if "alpha-beta" in self.filters:
            key += (x.alpha, x.beta)
        if "gap" in self.filters:
            key += (gap(x),)
        return key

    def _domains(self) -> list[tuple[int, ...] | None]:
        members = self.carrier.members
        if not self.filters:
            return [None] * len(members)
        groups: dict[tuple, list[int]] = {}
        keys = [self._key(x) for x in members]
        for i, key in enumerate(keys):
            groups.setdefault(key, []).append(i)
        return [
            (i,) if self._fixed(x) else tuple(groups[keys[i]])
            for i, x in enumerate(members)
        ]

    def _sum(self, a: NaturalSet, b: NaturalSet) -> NaturalSet:
        key = (a, b)
        r = self._sum_cache.get(key)
        if r is None:
            r = self._sum_cache[key] = self._sum_cache[(b, a)] = a + b
        return r

    def _fail(self, reason: str, var: int, value: NaturalSet, **extra) -> _Conflict:
        info = {"reason": reason, "member": self.sums[var].to_list(), "image": value.to_list()}
        for key, val in extra.items():
            info[key] = val.to_list() if isinstance(val, NaturalSet) else val
        return _Conflict(info)

    def assign(self, var: int, value: NaturalSet, trail: list[int]) -> None:
        """Assign and propagate; raises _Conflict, leaving partial work on ``trail``."""
        n = self.n
        image, owner, sums = self.image, self.owner, self.sums
        stack = [(var, value, None)]
        while stack:
            z, v, why = stack.pop()
            cur = image[z]
            if cur is not None:
                if cur != v:
                    raise self._fail("sum image mismatch", z, v, recorded=cur, **(why or {}))
                continue
            if v in owner:
                raise self._fail("image already taken", z, v, taken_by=sums[owner[v]], **(why or {}))
            if z < n:
                dom = self.domain_sets[z]
                if dom is None:
                    if v not in self.carrier.index:
                        raise self._fail("image outside carrier", z, v, **(why or {}))
                elif self.carrier.index.get(v) not in dom:
                    raise self._fail("image rejected by filters", z, v, **(why or {}))
            else:
                if v in self.carrier.index:
                    raise self._fail("out-of-window sum maps into carrier", z, v, **(why or {}))
                if self.filters and not self._admits(sums[z], v):
                    raise self._fail("image rejected by filters", z, v, **(why or {}))
            image[z] = v
            owner[v] = z
            trail.append(z)
            if z >= n:
                continue
            self.assigned += 1
            x = sums[z]
            for j, s in self.partners[z]:
                fj = image[j]
                if fj is None:
                    continue
                self.checked += 1
                stack.append((s, self._sum(v, fj), {"x": x, "y": sums[j]}))

    def undo(self, trail: list[int]) -> None:
        image, owner, n = self.image, self.owner, self.n
        for z in reversed(trail):
            del owner[image[z]]
            image[z] = None
            if z < n:
                self.assigned -= 1
        trail.clear()

    def try_assign(self, var: int, value: NaturalSet, trail: list[int]) -> bool:
        try:
            self.assign(var, value, trail)
            return True
        except _Conflict as c:
            if len(self.witnesses) < self.max_witnesses:
                info = {"branch": [self.sums[var].to_list(), value.to_list()]}
                info.update(c.info)
                self.witnesses.append(info)
            self.undo(trail)
            return False

    def run_root(self) -> bool:
        """Pin every member whose domain is a single value; False on contradiction."""
        trail: list[int] = []
        for i, dom in enumerate(self.domains):
            if dom is not None and len(dom) == 1 and self.image[i] is None:
                if not self.try_assign(i, self.carrier[dom[0]], trail):
                    return False
                trail = []
        return True

    def choose(self) -> tuple[int, list[int]] | None:
        """Unassigned member with fewest remaining candidates (ties: lowest index)."""
        image, owner, members = self.image, self.owner, self.carrier.members
        best: int | None = None
        best_count = -1
        free = self.n - self.assigned
        for i in range(self.n):
            if image[i] is not None:
                continue
            dom = self.domains[i]
            count = free if dom is None else sum(1 for v in dom if members[v] not in owner)
            if best is None or count < best_count:
                best, best_count = i, count
                if count <= 1:
                    break
        if best is None:
            return None
        dom = self.domains[best]
        cands = range(self.n) if dom is None else dom
        return best, [v for v in cands if members[v] not in owner]

    def run(self, found: list[tuple[int, ...]]) -> None:
        """Enumerate every total assignment from the current state (iterative DFS)."""
        members = self.carrier.members
        index = self.carrier.index
        frames: list[tuple[int, list[int], int, list[int]]] = []
        pick = self.choose()
        if pick is None:
            found.append(tuple(index[self.image[i]] for i in range(self.n)))
            return
        frames.append((pick[0], pick[1], 0, []))
        while frames:
            var, cands, pos, trail = frames.pop()
            self.undo(trail)
            while pos < len(cands):
                value = members[cands[pos]]
                pos += 1
                if self.try_assign(var, value, trail):
                    break
            else:
                continue
            frames.append((var, cands, pos, trail))
            pick = self.choose()
            if pick is None:
                found.append(tuple(index[self.image[i]] for i in range(self.n)))
                continue
            frames.append((pick[0], pick[1], 0, []))


def _branch_worker(args: tuple) -> tuple[list[tuple[int, ...]], int, list[dict]]:
    desc, bound, reduced, cap, filters, max_witnesses, var, value = args
    carrier = enumerate_window(parse_description(desc), bound, reduced, cap)
    eng = _Engine(carrier, filters, max_witnesses)
    eng.run_root()
    base = eng.checked
    found: list[tuple[int, ...]] = []
    trail: list[int] = []
    if eng.try_assign(var, carrier[value], trail):
        eng.run(found)
    return found, eng.checked - base, eng.witnesses


def search_automorphisms(carrier: WindowCarrier, config: SearchConfig | None = None) -> SearchReport:
    """All bijections of the carrier compatible with addition, within the window.

    Survivors are sorted by their table, so the report does not depend on the
    branch order or on ``config.workers``.
    """
    config = config or SearchConfig()
    if len(carrier) > config.cap:
        raise CarrierTooLarge(f"carrier has {len(carrier)} members, above the cap {config.cap}")
    eng = _Engine(carrier, config.filters, config.max_witnesses)
    found: list[tuple[int, ...]] = []
    if eng.run_root():
        pick = eng.choose()
        if config.workers > 1 and pick is not None and len(pick[1]) > 1:
            var, cands = pick
            desc = carrier.semigroup.describe()
            jobs = [
                (desc, carrier.bound, carrier.reduced, config.cap, config.filters,
                 config.max_witnesses, var, v)
                for v in cands
            ]
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                for sub, checked, wit in pool.map(_branch_worker, jobs):
                    found.extend(sub)
                    eng.checked += checked
                    room = config.max_witnesses - len(eng.witnesses)
                    eng.witnesses.extend(wit[:max(room, 0)])
        else:
            eng.run(found)
    found.sort()
    survivors = []
    for table in found:
        f = CandidateMap(carrier, table)
        survivors.append(Survivor(_classify(f), f))
    order = {"identity": 0, "sigma": 1, "unclassified": 2}
    survivors.sort(key=lambda s: (order[s.cls], s.map.table))
    return SearchReport(
        carrier,
        config.mode,
        [f for f in ALL_FILTERS if f in config.filters],
        survivors,
        eng.checked,
        eng.witnesses,
    )


@dataclass
class ElementSearchReport:
    """Survivors of the element-level search on S ∩ [[k, bound]]."""

    semigroup: NumericalSemigroup
    bound: int
    survivors: list[dict[int, int]]
    constraints_checked: int

    @property
    def classes(self) -> list[str]:
        return [
            "identity" if all(k == v for k, v in m.items()) else "unclassified"
            for m in self.survivors
        ]

    def to_dict(self) -> dict:
        return {
            "semigroup": self.semigroup.describe(),
            "bound": self.bound,
            "constraints_checked": self.constraints_checked,
            "survivors": [
                {"class": c, "table": [[k, v] for k, v in sorted(m.items())]}
                for c, m in zip(self.classes, self.survivors)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def element_automorphism_search(s: NumericalSemigroup, bound: int) -> ElementSearchReport:
    """Bijections tau of [[k, bound]] with tau(x) + tau(y) = tau(x + y) whenever x + y <= bound.

    ``s`` must be a discrete interval [[k, oo)).
    """
    if not s.is_interval:
        raise ValueError(f"{s} is not a discrete interval [[k, oo))")
    k = s.min_element
    if bound < 2 * k + 2:
        raise ValueError(f"bound must be at least 2k + 2 = {2 * k + 2}")
    elems = list(range(k, bound + 1))
    tau: dict[int, int] = {}
    used: set[int] = set()
    found: list[dict[int, int]] = []
    checked = 0

    def consistent(x: int) -> bool:
        nonlocal checked
        fx = tau[x]
        for y, fy in tau.items():
            # x as a summand
            t = x + y
            if t <= bound and t in tau:
                checked += 1
                if tau[t] != fx + fy:
                    return False
            # x as a sum
            d = x - y
            if d >= k and d in tau:
                checked += 1
                if tau[d] + fy != fx:
                    return False
        return True

    def rec(pos: int) -> None:
        if pos == len(elems):
            found.append(dict(tau))
            return
        x = elems[pos]
        for v in elems:
            if v in used:
                continue
            tau[x] = v
            used.add(v)
            if consistent(x):
                rec(pos + 1)
            used.discard(v)
            del tau[x]

    rec(0)
    found.sort(key=lambda m: [m[x] for x in elems])
    return ElementSearchReport(s, bound, found, checked)
