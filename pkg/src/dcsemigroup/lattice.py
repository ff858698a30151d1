"""Intersection form on the Picard lattice of the one-point blowup of the plane.

Classes are written ``aL + bE`` with ``L`` the pulled-back line class and ``E``
the exceptional curve; the Gram matrix is ``diag(1, -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooSmall, OddBranchCount, ParityError

MIN_DEGREE = 4


@dataclass(frozen=True)
class DivisorClass:
    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.a}L{self.b:+d}E"


LINE = DivisorClass(1, 0)
EXCEPTIONAL = DivisorClass(0, 1)


def intersect(D1: DivisorClass, D2: DivisorClass) -> int:
    return D1.a * D2.a - D1.b * D2.b


def canonical_class() -> DivisorClass:
    return DivisorClass(-3, 1)


def curve_class(d: int) -> DivisorClass:
    """Proper transform of a degree-``d`` plane curve through the blown-up point."""
    return DivisorClass(d, -1)


def adjunction_genus(D: DivisorClass) -> int:
    """Arithmetic genus ``(D.D + D.K)/2 + 1``."""
    twice = intersect(D, D) + intersect(D, canonical_class())
    if twice % 2:
        raise ParityError(f"D^2 + D.K = {twice} is odd for {D}")
    return twice // 2 + 1


def branch_degree(d: int) -> int:
    """Number of points cut on ``C ~ dL - E`` by a member of ``|-2K|``."""
    if d < MIN_DEGREE:
        raise DegreeTooSmall(f"d must be >= {MIN_DEGREE}, got {d}")
    return intersect(curve_class(d), -2 * canonical_class())


def hurwitz_genus(g: int, branch_points: int) -> int:
    """Genus of a double cover of a genus-``g`` curve with the given branch count."""
    if branch_points % 2:
        raise OddBranchCount(f"a double cover needs an even branch count, got {branch_points}")
    return 2 * g - 1 + branch_points // 2
