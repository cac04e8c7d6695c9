"""Finite windows of the power semigroup P(S) and the reduced monoid P_0(S).

Also holds the involution ``sigma``, translation equivalence and the
quotient isomorphism ``phi`` onto P_0(N).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core_sets import NaturalSet, normalize, reflect, translate
from .numerical_semigroup import NumericalSemigroup

__all__ = [
    "DEFAULT_CARRIER_CAP",
    "CarrierTooLarge",
    "EquivClassRep",
    "WindowCarrier",
    "enumerate_window",
    "equivalent",
    "phi",
    "phi_inv",
    "sigma",
]

DEFAULT_CARRIER_CAP = 1_000_000


class CarrierTooLarge(RuntimeError):
    """The requested window has more members than the configured cap."""


@dataclass(frozen=True)
class WindowCarrier:
    """All X in P(S) with max(X) <= bound (and 0 in X when ``reduced``), indexed.

    Members are in canonical order: by max, then min, then elements.
    """

    semigroup: NumericalSemigroup
    bound: int
    reduced: bool
    members: tuple[NaturalSet, ...]
    index: dict[NaturalSet, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __getitem__(self, i: int) -> NaturalSet:
        return self.members[i]

    def index_of(self, x: NaturalSet) -> int | None:
        return self.index.get(x)

    def describe(self) -> dict:
        return {
            "semigroup": self.semigroup.describe(),
            "bound": self.bound,
            "reduced": self.reduced,
            "size": len(self.members),
        }


def window_size(s: NumericalSemigroup, bound: int, reduced: bool = False) -> int:
    n = len(s.members_upto(bound))
    return 2 ** (n - 1) if reduced else 2**n - 1


def enumerate_window(
    s: NumericalSemigroup,
    bound: int,
    reduced: bool = False,
    cap: int = DEFAULT_CARRIER_CAP,
) -> WindowCarrier:
    if bound < s.min_element:
        raise ValueError(f"bound {bound} is below the minimum element {s.min_element} of S")
    if reduced and not s.contains_zero:
        raise ValueError("the reduced window needs a semigroup containing 0")
    size = window_size(s, bound, reduced)
    if size > cap:
        raise CarrierTooLarge(
            f"window of bound {bound} has {size} members, above the cap {cap}; "
            "lower --bound or raise --max-carrier"
        )
    elems = s.members_upto(bound)
    members: list[NaturalSet] = []
    # generated directly in canonical order: by max, then min, then the middle part
    for bi, b in enumerate(elems):
        lows = [0] if reduced else elems[: bi + 1]
        for a in lows:
            if a == b:
                members.append(NaturalSet([a]))
                continue
            inner = [e for e in elems if a < e < b]
            block = []
            for r in range(len(inner) + 1):
                for mid in combinations(inner, r):
                    block.append((a, *mid, b))
            block.sort()
            members.extend(NaturalSet(t) for t in block)
    index = {x: i for i, x in enumerate(members)}
    return WindowCarrier(s, bound, reduced, tuple(members), index)


def sigma(x: NaturalSet) -> NaturalSet:
    """``beta(X) - X + alpha(X)``: reflect X inside its own hull."""
    return reflect(x.beta + x.alpha, x)


def equivalent(x: NaturalSet, y: NaturalSet) -> bool:
    """True iff one set is an integer shift of the other."""
    return x.bits == y.bits


@dataclass(frozen=True)
class EquivClassRep:
    """A translation class, stored as its member with minimum 0."""

    rep: NaturalSet

    def __post_init__(self) -> None:
        if self.rep.alpha != 0:
            raise ValueError(f"class representative must contain 0, got {self.rep}")


def phi(x: NaturalSet) -> EquivClassRep:
    return EquivClassRep(normalize(x))


def phi_inv(rep: EquivClassRep, k: int) -> NaturalSet:
    """The class member ``k + rep``, lying in P([[k, oo)))."""
    return translate(k, rep.rep)
