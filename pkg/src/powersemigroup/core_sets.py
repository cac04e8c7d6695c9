"""Finite nonempty sets of non-negative integers and their sumset arithmetic.

A :class:`NaturalSet` keeps its minimum ``alpha`` and a bit-vector of the
elements relative to that minimum, so that addition of two sets is a
sequence of shifted ORs on Python integers.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "UINT_MAX",
    "ArithmeticOverflow",
    "NaturalSet",
    "add",
    "dilate",
    "gap",
    "gap_set",
    "interval",
    "is_interval",
    "normalize",
    "reflect",
    "translate",
]

UINT_MAX = (1 << 64) - 1


class ArithmeticOverflow(OverflowError):
    """An element left the unsigned 64-bit range."""


def _check(value: int) -> int:
    if value > UINT_MAX:
        raise ArithmeticOverflow(f"element {value} exceeds the 64-bit unsigned range")
    return value


class NaturalSet:
    """Immutable finite nonempty set of non-negative integers.

    >>> NaturalSet([8, 0, 5, 10])
    NaturalSet('0,5,8,10')
    """

    __slots__ = ("_alpha", "_bits", "_elements", "_hash")

    def __init__(self, elements: Iterable[int]):
        values = sorted(set(elements))
        if not values:
            raise ValueError("a NaturalSet must be nonempty")
        if values[0] < 0:
            raise ValueError(f"negative element {values[0]}")
        _check(values[-1])
        alpha = values[0]
        bits = 0
        for v in values:
            bits |= 1 << (v - alpha)
        self._alpha = alpha
        self._bits = bits
        self._elements: tuple[int, ...] | None = tuple(values)
        self._hash: int | None = None

    @classmethod
    def _from_bits(cls, alpha: int, bits: int) -> NaturalSet:
        # bits must have bit 0 set
        obj = cls.__new__(cls)
        obj._alpha = alpha
        obj._bits = bits
        obj._elements = None
        obj._hash = None
        _check(alpha + bits.bit_length() - 1)
        return obj

    @classmethod
    def parse(cls, text: str) -> NaturalSet:
        """Parse the literal format ``"0,5,8,10"``; an item may be a range ``"i..j"``.

        Items must be strictly ascending.
        """
        text = text.strip()
        if not text:
            raise ValueError("empty set literal")
        values: list[int] = []
        for item in text.split(","):
            lo, sep, hi = item.partition("..")
            try:
                if sep:
                    start, stop = _parse_uint(lo), _parse_uint(hi)
                    if stop < start:
                        raise ValueError
                    chunk = range(start, stop + 1)
                else:
                    chunk = range(_parse_uint(item), _parse_uint(item) + 1)
            except ValueError:
                raise ValueError(f"malformed set literal {text!r} at item {item!r}") from None
            if values and chunk[0] <= values[-1]:
                raise ValueError(f"set literal {text!r} is not strictly ascending")
            values.extend(chunk)
        return cls(values)

    @property
    def alpha(self) -> int:
        """Minimum element."""
        return self._alpha

    @property
    def beta(self) -> int:
        """Maximum element."""
        return self._alpha + self._bits.bit_length() - 1

    @property
    def bits(self) -> int:
        """Bit-vector of the elements, bit ``i`` standing for ``alpha + i``."""
        return self._bits

    @property
    def elements(self) -> tuple[int, ...]:
        if self._elements is None:
            a, b = self._alpha, self._bits
            self._elements = tuple(a + i for i in range(b.bit_length()) if b >> i & 1)
        return self._elements

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        i = x - self._alpha
        return i >= 0 and bool(self._bits >> i & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NaturalSet):
            return NotImplemented
        return self._alpha == other._alpha and self._bits == other._bits

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._alpha, self._bits))
        return self._hash

    def __add__(self, other: NaturalSet) -> NaturalSet:
        if not isinstance(other, NaturalSet):
            return NotImplemented
        return add(self, other)

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        """Canonical order: by maximum, then minimum, then elements."""
        return (self.beta, self._alpha, self.elements)

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))

    def __repr__(self) -> str:
        return f"NaturalSet('{self}')"

    def to_list(self) -> list[int]:
        return list(self.elements)


def _parse_uint(token: str) -> int:
    if not token.isdigit() or not token.isascii():
        raise ValueError(token)
    return int(token)


def interval(i: int, j: int) -> NaturalSet:
    """The discrete interval ``[[i, j]]``."""
    if i < 0 or j < i:
        raise ValueError(f"invalid interval [[{i}, {j}]]")
    return NaturalSet._from_bits(i, (1 << (j - i + 1)) - 1)


def add(x: NaturalSet, y: NaturalSet) -> NaturalSet:
    """Sumset ``{a + b : a in x, b in y}``."""
    if len(y) > len(x):
        x, y = y, x
    xb, ya = x.bits, y.alpha
    acc = 0
    # OR shifted copies of the larger vector, one per element of the smaller
    for e in y.elements:
        acc |= xb << (e - ya)
    return NaturalSet._from_bits(_check(x.alpha + y.alpha), acc)


def dilate(l: int, x: NaturalSet) -> NaturalSet:
    """All sums of ``l`` elements of ``x`` (``l * x`` in the sumset sense)."""
    if l < 1:
        raise ValueError(f"dilation factor must be >= 1, got {l}")
    result = x
    base = x
    l -= 1
    # square-and-multiply over the sumset operation
    while l:
        if l & 1:
            result = add(result, base)
        l >>= 1
        if l:
            base = add(base, base)
    return result


def translate(m: int, x: NaturalSet) -> NaturalSet:
    if m < 0:
        raise ValueError(f"translation must be non-negative, got {m}")
    return NaturalSet._from_bits(_check(x.alpha + m), x.bits)


def reflect(l: int, x: NaturalSet) -> NaturalSet:
    """``{l - a : a in x}``; requires ``l >= beta(x)``."""
    if l < x.beta:
        raise ValueError(f"reflection point {l} is below max {x.beta}; result would leave N")
    width = x.bits.bit_length()
    rev = int(format(x.bits, f"0{width}b")[::-1], 2)
    return NaturalSet._from_bits(l - x.beta, rev)


def gap_set(x: NaturalSet) -> frozenset[int]:
    """Differences between consecutive elements; empty for a singleton."""
    e = x.elements
    return frozenset(b - a for a, b in zip(e, e[1:]))


def gap(x: NaturalSet) -> int:
    """Largest consecutive difference, 0 for a singleton."""
    bits = x.bits
    best = 0
    run = 0
    # longest zero run between set bits, plus one
    while bits > 1:
        bits >>= 1
        run += 1
        if bits & 1:
            best = max(best, run)
            run = 0
    return best


def normalize(x: NaturalSet) -> NaturalSet:
    """Shift ``x`` down so that its minimum is 0."""
    if x.alpha == 0:
        return x
    return NaturalSet._from_bits(0, x.bits)


def is_interval(x: NaturalSet) -> bool:
    return x.bits & (x.bits + 1) == 0
