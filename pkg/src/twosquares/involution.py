"""Involutions on explicit finite subsets of a totally ordered domain.

A map ``f`` is passed as a total function on the ambient domain; it only
has to behave as an involution on the finite set being examined.  All sets
are stored in ascending order so every result is reproducible.

Two flavours are provided:

* object level: :class:`FiniteSubset` plus the functions below, working on
  any hashable, orderable elements (tuples, ints, named tuples);
* encoded level: :func:`encoded_involution` and friends, working on sorted
  ``int64`` key arrays.  The windmill and partition kernels use these when
  the sets get too large for per-element Python calls.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, Hashable, Iterable, Iterator, TypeVar

import numpy as np

from .errors import EvenCardinality, FixedPointArgument, NotAnInvolution, NotMember

E = TypeVar("E", bound=Hashable)


class FiniteSubset(Generic[E]):
    """An immutable finite set iterated in ascending order."""

    __slots__ = ("_items", "_members")

    def __init__(self, elements: Iterable[E] = ()):
        members = frozenset(elements)
        self._items: tuple[E, ...] = tuple(sorted(members))
        self._members = members

    @classmethod
    def _from_sorted(cls, items: tuple[E, ...]) -> "FiniteSubset[E]":
        # caller guarantees items are strictly ascending
        obj = cls.__new__(cls)
        obj._items = items
        obj._members = frozenset(items)
        return obj

    def __iter__(self) -> Iterator[E]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, item: object) -> bool:
        return item in self._members

    def __getitem__(self, i: int) -> E:
        return self._items[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteSubset):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"FiniteSubset({list(self._items)!r})"

    @property
    def elements(self) -> tuple[E, ...]:
        return self._items

    def without(self, *drop: E) -> "FiniteSubset[E]":
        gone = set(drop)
        return FiniteSubset._from_sorted(tuple(e for e in self._items if e not in gone))

    def where(self, pred: Callable[[E], bool]) -> "FiniteSubset[E]":
        return FiniteSubset._from_sorted(tuple(e for e in self._items if pred(e)))


@dataclass(frozen=True)
class OrbitReport(Generic[E]):
    """Fixed points and 2-cycles of an involution on a finite set."""

    fixed_points: FiniteSubset[E]
    two_cycles: tuple[tuple[E, E], ...]

    @property
    def size(self) -> int:
        return len(self.fixed_points) + 2 * len(self.two_cycles)

    def members(self) -> FiniteSubset[E]:
        out = list(self.fixed_points)
        for a, b in self.two_cycles:
            out.extend((a, b))
        return FiniteSubset(out)


def is_involution_on(s: FiniteSubset[E], f: Callable[[E], E]) -> bool:
    """True iff ``f`` maps ``s`` into itself and ``f(f(x)) == x`` on ``s``."""
    for x in s:
        y = f(x)
        if y not in s or f(y) != x:
            return False
    return True


def _require_involution(s: FiniteSubset[E], f: Callable[[E], E]) -> None:
    if not is_involution_on(s, f):
        raise NotAnInvolution("map is not an involution on the given set")


def fixed_points(s: FiniteSubset[E], f: Callable[[E], E]) -> FiniteSubset[E]:
    _require_involution(s, f)
    return s.where(lambda x: f(x) == x)


def orbit_decomposition(s: FiniteSubset[E], f: Callable[[E], E]) -> OrbitReport[E]:
    """Split ``s`` into fixed points and ``{x, f(x)}`` pairs.

    Pairs are listed once, smaller member first, sorted by that member.
    """
    _require_involution(s, f)
    fixed = []
    cycles = []
    for x in s:
        y = f(x)
        if y == x:
            fixed.append(x)
        elif x < y:
            cycles.append((x, y))
    return OrbitReport(FiniteSubset._from_sorted(tuple(fixed)), tuple(cycles))


def parity_lemma_check(s: FiniteSubset[E], f: Callable[[E], E]) -> bool:
    """Executable statement of the parity lemma: |Fix f| = |s| (mod 2).

    Returns False only if something in this module is broken.
    """
    report = orbit_decomposition(s, f)
    return len(report.fixed_points) % 2 == len(s) % 2


def shrink_step(s: FiniteSubset[E], f: Callable[[E], E], x: E) -> FiniteSubset[E]:
    """Remove a non-fixed point and its image: the induction step of the lemma."""
    if x not in s:
        raise NotMember(f"{x!r} is not in the set")
    _require_involution(s, f)
    y = f(x)
    if y == x:
        raise FixedPointArgument(f"{x!r} is a fixed point")
    return s.without(x, y)


def find_fixed_point(s: FiniteSubset[E], f: Callable[[E], E]) -> E:
    """Least fixed point of an involution on an odd-sized set."""
    _require_involution(s, f)
    if len(s) % 2 == 0:
        raise EvenCardinality(f"set has even size {len(s)}; a fixed point need not exist")
    for x in s:
        if f(x) == x:
            return x
    raise AssertionError("odd set without a fixed point: parity lemma violated")


# -- encoded sets -----------------------------------------------------------


def encoded_involution(keys: np.ndarray, image: np.ndarray) -> np.ndarray:
    """Index form of an involution on a sorted key array.

    ``keys`` must be strictly ascending; ``image[i]`` is the key of
    ``f(element i)``.  Returns ``perm`` with ``keys[perm] == image``, after
    checking closure and ``perm[perm] == arange``.  Raises NotAnInvolution
    otherwise.
    """
    n = len(keys)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    pos = np.searchsorted(keys, image)
    np.minimum(pos, n - 1, out=pos)
    if not np.array_equal(keys[pos], image):
        raise NotAnInvolution("image leaves the set")
    if not np.array_equal(pos[pos], np.arange(n)):
        raise NotAnInvolution("map is not self-inverse on the set")
    return pos


def encoded_is_involution(keys: np.ndarray, image: np.ndarray) -> bool:
    try:
        encoded_involution(keys, image)
    except NotAnInvolution:
        return False
    return True


def encoded_fixed_mask(perm: np.ndarray) -> np.ndarray:
    return perm == np.arange(len(perm))
