"""Numerical semigroups: co-finite additive subsemigroups of N."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable

__all__ = [
    "ClosureViolation",
    "InfiniteComplement",
    "NumericalSemigroup",
    "from_complement",
    "from_generators",
    "interval_semigroup",
    "parse_description",
]


class InfiniteComplement(ValueError):
    """The generators have a common divisor > 1, so N minus S is infinite."""


class ClosureViolation(ValueError):
    """A proposed complement does not describe an additively closed set."""

    def __init__(self, x: int, y: int):
        self.witness = (x, y, x + y)
        super().__init__(f"not additively closed: {x} + {y} = {x + y} is a gap")


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, stored by its finite set of gaps.

    ``contains_zero`` distinguishes a numerical monoid from a semigroup that
    omits 0. ``0`` is never listed among the gaps; its membership is carried
    by the flag alone.
    """

    gaps: frozenset[int]
    contains_zero: bool = True
    generators: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def frobenius(self) -> int | None:
        """Largest non-member, or None for S = N."""
        if self.gaps:
            return max(self.gaps)
        return None if self.contains_zero else 0

    @property
    def critical(self) -> int:
        """Least k with [[k, oo)) inside S; 0 when S = N."""
        f = self.frobenius
        return 0 if f is None else f + 1

    @property
    def min_element(self) -> int:
        if self.contains_zero:
            return 0
        n = 1
        while n in self.gaps:
            n += 1
        return n

    @property
    def is_interval(self) -> bool:
        """True iff S = [[min_element, oo))."""
        return self.min_element == self.critical

    @property
    def is_monoid(self) -> bool:
        return self.contains_zero

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        if n == 0:
            return self.contains_zero
        return n not in self.gaps

    def contains(self, n: int) -> bool:
        return n in self

    def members_upto(self, bound: int) -> list[int]:
        """Members of S in [[0, bound]], ascending."""
        return [n for n in range(bound + 1) if n in self]

    def interval_obstruction_witness(self) -> int | None:
        """Largest m in [[min_element, critical - 2]] with m in S and m + 1 not in S.

        None when S is a discrete interval.
        """
        if self.is_interval:
            return None
        for m in range(self.critical - 2, self.min_element - 1, -1):
            if m in self and m + 1 not in self:
                return m
        raise AssertionError("a non-interval semigroup always has a witness")

    def describe(self) -> dict:
        """JSON description in the gaps form (always valid input to parse_description)."""
        return {"gaps": sorted(self.gaps), "contains_zero": self.contains_zero}

    def __str__(self) -> str:
        if self.generators is not None:
            inner = ",".join(map(str, self.generators))
            return f"<{inner}>" + (" (monoid)" if self.contains_zero else "")
        if self.is_interval:
            return f"[[{self.min_element},oo))"
        gaps = ",".join(map(str, sorted(self.gaps)))
        return f"N\\{{{gaps}}}" + ("" if self.contains_zero else " without 0")


def from_generators(gens: Iterable[int], monoid: bool = True) -> NumericalSemigroup:
    """All finite sums of ``gens`` (plus 0 when ``monoid``).

    >>> sorted(from_generators([3, 5]).gaps)
    [1, 2, 4, 7]
    """
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    d = reduce(gcd, gens)
    if d != 1:
        raise InfiniteComplement(f"gcd of generators is {d}; the complement is infinite")

    smallest = gens[0]
    reach = [True]  # reach[n]: n is a sum of zero or more generators
    run = 0
    n = 0
    # stop once `smallest` consecutive members appear; all larger n follow
    while run < smallest:
        n += 1
        ok = any(g <= n and reach[n - g] for g in gens)
        reach.append(ok)
        run = run + 1 if ok else 0
    gaps = frozenset(i for i in range(1, n + 1) if not reach[i])
    return NumericalSemigroup(gaps, monoid, tuple(_minimal_generators(gens)))


def _minimal_generators(gens: list[int]) -> list[int]:
    minimal: list[int] = []
    for g in gens:
        reach = [False] * (g + 1)
        reach[0] = True
        for n in range(1, g + 1):
            reach[n] = any(h <= n and reach[n - h] for h in minimal)
        if not reach[g]:
            minimal.append(g)
    return minimal


def from_complement(gaps: Iterable[int], contains_zero: bool = True) -> NumericalSemigroup:
    """Validate ``N \\ gaps`` (without 0 unless ``contains_zero``) as a semigroup."""
    gaps = frozenset(gaps)
    if any(g <= 0 for g in gaps):
        raise ValueError("gaps must be positive integers; use contains_zero for 0")
    s = NumericalSemigroup(gaps, contains_zero)
    # sums above F(S) are members, so only pairs of members <= F(S) matter
    top = s.frobenius or 0
    members = [m for m in s.members_upto(top)]
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y > top:
                break
            if x + y not in s:
                raise ClosureViolation(x, y)
    return s


def interval_semigroup(k: int) -> NumericalSemigroup:
    """The discrete interval [[k, oo))."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return NumericalSemigroup(frozenset(), True)
    return NumericalSemigroup(frozenset(range(1, k)), False)


def parse_description(desc: dict) -> NumericalSemigroup:
    """Build a semigroup from ``{"generators": [...], "monoid": bool}``
    or ``{"gaps": [...], "contains_zero": bool}``."""
    if "generators" in desc:
        return from_generators(desc["generators"], bool(desc.get("monoid", True)))
    if "gaps" in desc:
        return from_complement(desc["gaps"], bool(desc.get("contains_zero", True)))
    if "interval" in desc:
        return interval_semigroup(int(desc["interval"]))
    raise ValueError(f"semigroup description needs 'generators' or 'gaps': {desc!r}")
