"""Slow, obviously-correct reference computations used to check the library."""

from itertools import product


def pairwise_sum(xs, ys):
    return sorted({a + b for a in xs for b in ys})


def brute_dilate(l, xs):
    return sorted({sum(t) for t in product(xs, repeat=l)})


def sieve_members(gens, limit, monoid=True):
    """Members of the semigroup generated by ``gens`` up to ``limit``."""
    reach = {0}
    frontier = {0}
    while frontier:
        nxt = {r + g for r in frontier for g in gens if r + g <= limit} - reach
        reach |= nxt
        frontier = nxt
    if not monoid:
        reach.discard(0)
    return sorted(reach)


def gap_set_by_definition(xs):
    """All d >= 1 with {x, x+d} equal to X restricted to [[x, x+d]] for some x."""
    xs = set(xs)
    out = set()
    for x in xs:
        for d in range(1, max(xs) - x + 1):
            window = {y for y in xs if x <= y <= x + d}
            if window == {x, x + d}:
                out.add(d)
    return out


def all_subsets(elements):
    """Nonempty subsets, by bitmask."""
    elements = list(elements)
    for mask in range(1, 1 << len(elements)):
        yield sorted(e for i, e in enumerate(elements) if mask >> i & 1)
