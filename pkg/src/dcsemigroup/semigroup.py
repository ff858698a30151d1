"""Numerical semigroups stored as a dense membership bitmap.

A numerical semigroup is held as a boolean array covering ``0 .. conductor +
max(generators)``; every integer at or past the conductor is a member, so
membership queries never need more than that window.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import EmptyGenerators, GcdNotOne, NotOdd

GapSet = tuple[int, ...]


def _sieve(gens: tuple[int, ...], bound: int) -> np.ndarray:
    """Members of <gens> in ``0..bound`` via one strided OR-scan per generator."""
    members = np.zeros(bound + 1, dtype=bool)
    members[0] = True
    for g in sorted(set(gens)):
        if members[g]:
            # already a member of a semigroup closed under the earlier generators
            continue
        rows = -(-(bound + 1) // g)
        buf = np.zeros(rows * g, dtype=bool)
        buf[: bound + 1] = members
        # column j of the reshaped buffer is the progression j, j+g, j+2g, ...
        buf = np.logical_or.accumulate(buf.reshape(rows, g), axis=0).ravel()
        members = buf[: bound + 1]
    return members


def _first_run(members: np.ndarray, length: int) -> int:
    """Start of the first run of ``length`` consecutive True entries."""
    csum = np.concatenate(([0], np.cumsum(members, dtype=np.int64)))
    window = csum[length:] - csum[:-length]
    hits = np.flatnonzero(window == length)
    if hits.size == 0:
        raise AssertionError("bitmap bound too small to certify the conductor")
    return int(hits[0])


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    """A cofinite additive submonoid of the non-negative integers.

    ``generators`` are kept exactly as supplied (sorted, deduplicated), not
    reduced to a minimal system. Equality and hashing compare membership only.
    """

    generators: tuple[int, ...]
    conductor: int
    elements_bitmap: np.ndarray = field(repr=False)

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, (int, np.integer)) or n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.elements_bitmap[n])

    def contains(self, n: int) -> bool:
        return n in self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash((self.conductor, self.gaps))

    def __repr__(self) -> str:
        return f"<{','.join(map(str, self.generators))}>"

    @cached_property
    def gaps(self) -> GapSet:
        window = self.elements_bitmap[: self.conductor]
        return tuple(int(n) for n in np.flatnonzero(~window))

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        """Largest gap; ``-1`` for the full monoid."""
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        return int(np.flatnonzero(self.elements_bitmap[1:])[0]) + 1

    @property
    def odd_gaps(self) -> GapSet:
        return tuple(g for g in self.gaps if g % 2)

    @property
    def even_gaps(self) -> GapSet:
        return tuple(g for g in self.gaps if not g % 2)

    @property
    def min_odd_element(self) -> int:
        # the bitmap extends past the conductor, so it always holds an odd member
        odd = np.flatnonzero(self.elements_bitmap[1::2])
        return 2 * int(odd[0]) + 1

    def members_upto(self, bound: int) -> list[int]:
        return [n for n in range(bound + 1) if n in self]

    def h0(self, n: int) -> int:
        """Dimension count ``n + 1 - #{gaps <= n}``.

        Grows by one from ``n - 1`` to ``n`` exactly when ``n`` is a member.
        """
        if n < 0:
            raise ValueError("n must be non-negative")
        return n + 1 - bisect.bisect_right(self.gaps, n)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest additively closed set containing 0 and ``gens``.

    Raises :class:`EmptyGenerators` for an empty input and :class:`GcdNotOne`
    when the generators have a common factor.
    """
    gens = tuple(sorted({int(g) for g in gens}))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    g = math.gcd(*gens)
    if g != 1:
        raise GcdNotOne(f"gcd of {list(gens)} is {g}")

    lo, hi = gens[0], gens[-1]
    # Schur: frobenius <= (lo-1)(hi-1) - 1, so this bound covers conductor + hi
    bound = lo * hi + hi
    return _from_bitmap(gens, _sieve(gens, bound))


def _from_bitmap(gens: tuple[int, ...], members: np.ndarray) -> NumericalSemigroup:
    conductor = _first_run(members, gens[0])
    bitmap = np.ones(conductor + gens[-1] + 1, dtype=bool)
    head = members[: len(bitmap)]
    bitmap[: len(head)] = head
    bitmap.flags.writeable = False
    return NumericalSemigroup(gens, conductor, bitmap)


def _minimal_generators(members: np.ndarray) -> list[int]:
    """Positive members that are not a sum of two positive members."""
    positive = members.astype(np.int64)
    positive[0] = 0
    sums = np.convolve(positive, positive)[: len(positive)]
    return [int(n) for n in np.flatnonzero(positive.astype(bool) & (sums == 0))]


def d2(H: NumericalSemigroup) -> NumericalSemigroup:
    """The halves of the even members of ``H``.

    The result carries its minimal generating system.
    """
    # every h >= ceil(conductor/2) is a half, and H.multiplicity is a member of
    # the result, so this window holds all minimal generators and a full run
    top = (H.conductor + 1) // 2 + H.multiplicity + 1
    members = np.array([2 * h in H for h in range(top)], dtype=bool)
    return _from_bitmap(tuple(_minimal_generators(members)), members)


def double_cover_semigroup(H: NumericalSemigroup, odd_gens: Iterable[int]) -> NumericalSemigroup:
    """``2H + sum(n * N0 for n in odd_gens)``."""
    odd_gens = list(odd_gens)
    even = [n for n in odd_gens if n % 2 == 0]
    if even:
        raise NotOdd(f"expected odd generators, got {even}")
    return from_generators([2 * g for g in H.generators] + odd_gens)
