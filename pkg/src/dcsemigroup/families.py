"""Weierstrass semigroup families of double-covering type on the blown-up plane.

The seven families:

* ``lemma21i``  : a total inflection point of a smooth plane curve, ``<d-1, d>``.
* ``lemma21ii`` : a point whose tangent meets the curve with contact ``d-1``,
  ``<d-1+r(d-2) : r = 0..d-2>``.
* ``thm11a``, ``thm11b`` : double covers over a total inflection point.
* ``thm12a``, ``thm12b``, ``thm12c`` : double covers over a point with
  tangent contact ``d-1``, distinguished by which of ``P``, ``Q`` or a third
  point ``R`` lies on the exceptional curve ``E``.

For the ``thm12`` families the odd gaps are also produced a second way: by
restricting explicit divisors ``D ~ C`` on the surface to the curve and
reading off their contact order with ``C`` at ``P``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from . import lattice
from .errors import (
    ClassMismatch,
    DegreeTooSmall,
    InvalidParameters,
    NotACoverCase,
    NotEffective,
    SemigroupError,
)
from .lattice import DivisorClass
from .semigroup import GapSet, NumericalSemigroup, d2, from_generators


class CaseId(str, enum.Enum):
    LEMMA21I = "lemma21i"
    LEMMA21II = "lemma21ii"
    THM11A = "thm11a"
    THM11B = "thm11b"
    THM12A = "thm12a"
    THM12B = "thm12b"
    THM12C = "thm12c"

    def __str__(self) -> str:
        return self.value


LEMMA_CASES = (CaseId.LEMMA21I, CaseId.LEMMA21II)
THM12_CASES = (CaseId.THM12A, CaseId.THM12B, CaseId.THM12C)
INFLECTION_CASES = (CaseId.LEMMA21I, CaseId.THM11A, CaseId.THM11B)


@dataclass(frozen=True)
class FamilyCase:
    case_id: CaseId
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "case_id", CaseId(self.case_id))
        if self.d < lattice.MIN_DEGREE:
            raise DegreeTooSmall(f"d must be >= {lattice.MIN_DEGREE}, got {self.d}")

    @property
    def is_cover(self) -> bool:
        return self.case_id not in LEMMA_CASES

    def __str__(self) -> str:
        return f"{self.case_id.value}(d={self.d})"


def _check_degree(d: int) -> None:
    if d < lattice.MIN_DEGREE:
        raise DegreeTooSmall(f"d must be >= {lattice.MIN_DEGREE}, got {d}")


def base_generators(case: FamilyCase) -> list[int]:
    d = case.d
    if case.case_id in INFLECTION_CASES:
        return [d - 1, d]
    return [d - 1 + r * (d - 2) for r in range(d - 1)]


def base_semigroup(case: FamilyCase) -> NumericalSemigroup:
    """Weierstrass semigroup ``H(P)`` of the plane-curve point underneath."""
    return from_generators(base_generators(case))


def odd_generators(case: FamilyCase) -> dict[str, int]:
    """Odd generators of a cover family, keyed by a label naming their formula."""
    d, cid = case.d, case.case_id
    if cid == CaseId.THM11A:
        return {"6d_minus_3": 6 * d - 3}
    if cid == CaseId.THM11B:
        return {"6d_minus_1": 6 * d - 1, "2d2_plus_1": 2 * d * d + 1}
    if cid == CaseId.THM12A:
        return {f"8d_minus_9_r{r}": 8 * d - 9 + 2 * r * (d - 2) for r in range(d - 2)}
    if cid == CaseId.THM12B:
        return {f"8d_minus_11_r{r}": 8 * d - 11 + 2 * r * (d - 2) for r in range(d - 3)}
    if cid == CaseId.THM12C:
        gens = {f"8d_minus_9_r{r}": 8 * d - 9 + 2 * r * (d - 2) for r in range(d - 3)}
        gens["2d2_minus_1"] = 2 * d * d - 1
        return gens
    raise NotACoverCase(f"{cid.value} is a plane-curve point, not a double cover")


def family_generators(case: FamilyCase) -> list[int]:
    odd = odd_generators(case)
    return sorted({2 * h for h in base_generators(case)} | set(odd.values()))


def family_semigroup(case: FamilyCase) -> NumericalSemigroup:
    if not case.is_cover:
        return base_semigroup(case)
    return from_generators(family_generators(case))


def expected_min_odd(case: FamilyCase) -> int:
    d = case.d
    return {
        CaseId.THM11A: 6 * d - 3,
        CaseId.THM11B: 6 * d - 1,
        CaseId.THM12A: 8 * d - 9,
        CaseId.THM12B: 8 * d - 11,
        CaseId.THM12C: 8 * d - 9,
    }[case.case_id]


def st_range(d: int) -> list[tuple[int, int]]:
    """All ``(s, t)`` with ``0 <= s <= d`` and ``0 <= t <= min(d-2, d-s)``."""
    return [(s, t) for s in range(d + 1) for t in range(min(d - 2, d - s) + 1)]


def _proof_case(case: CaseId | str) -> str:
    key = str(case)
    if key in ("a", "b", "c"):
        return key
    if key in ("thm12a", "thm12b", "thm12c"):
        return key[-1]
    raise NotACoverCase(f"no gap formula for case {key!r}")


def odd_gap_formula(case: CaseId | str, d: int) -> GapSet:
    """Odd gaps of a ``thm12`` family, enumerated from the closed form.

    The set has ``(d^2 + 3d - 2)/2`` elements for every case.
    """
    _check_degree(d)
    c = _proof_case(case)
    pairs = st_range(d)
    if c == "a":
        gaps = {2 * s * (d - 1) + 2 * t + 1 for s, t in pairs} | {2 * d * d - 1}
    elif c == "b":
        gaps = {2 * s * (d - 1) + 2 * t - 1 for s, t in pairs if (s, t) != (0, 0)}
        gaps |= {2 * d * d - 2 * d + 1, 2 * d * d - 3}
    else:
        gaps = {2 * s * (d - 1) + 2 * t + 1 for s, t in pairs} | {2 * d * d - 2 * d + 3}
    return tuple(sorted(gaps))


# -- restrictions of surface divisors to C ----------------------------------

LINE_MEMBERS = ("T_P", "T_Q", "L_P", "L_PR", "L_QR")


@dataclass(frozen=True)
class CurveDivisor:
    """Integer combination of the named points P, Q, R plus generic residuals.

    ``generic`` maps a pencil-member label to ``(multiplicity, degree)``: the
    points of that member's restriction other than P, Q, R, which are never
    allowed to cancel against another member's residual.
    """

    cP: int = 0
    cQ: int = 0
    cR: int = 0
    generic: dict[str, tuple[int, int]] = field(default_factory=dict)

    def __add__(self, other: CurveDivisor) -> CurveDivisor:
        generic = dict(self.generic)
        for label, (mult, deg) in other.generic.items():
            if label in generic:
                m0, d0 = generic[label]
                if d0 != deg:
                    raise ValueError(f"residual degree mismatch for {label}")
                mult += m0
            generic[label] = (mult, deg)
        generic = {k: v for k, v in generic.items() if v[0] != 0}
        return CurveDivisor(self.cP + other.cP, self.cQ + other.cQ, self.cR + other.cR, generic)

    def __mul__(self, k: int) -> CurveDivisor:
        if k == 0:
            return CurveDivisor()
        generic = {label: (k * m, deg) for label, (m, deg) in self.generic.items()}
        return CurveDivisor(k * self.cP, k * self.cQ, k * self.cR, generic)

    __rmul__ = __mul__

    def __neg__(self) -> CurveDivisor:
        return self * -1

    def __sub__(self, other: CurveDivisor) -> CurveDivisor:
        return self + (-other)

    @property
    def degree(self) -> int:
        return self.cP + self.cQ + self.cR + sum(m * deg for m, deg in self.generic.values())

    @property
    def is_effective(self) -> bool:
        return min(self.cP, self.cQ, self.cR, *(m for m, _ in self.generic.values())) >= 0

    def __str__(self) -> str:
        parts = [f"{c}{name}" for c, name in ((self.cP, "P"), (self.cQ, "Q"), (self.cR, "R")) if c]
        parts += [f"{m}*gen({label},{deg})" for label, (m, deg) in sorted(self.generic.items())]
        return " + ".join(parts) or "0"


def restriction_table(case: CaseId | str, d: int) -> dict[str, CurveDivisor]:
    """Restrictions to ``C`` of the pencil members and of ``E``.

    Case ``a`` has ``Q`` on ``E``, case ``b`` has ``P`` on ``E``, and case
    ``c`` has a third point ``R = C . E``.
    """
    _check_degree(d)
    c = _proof_case(case)
    table = {
        "T_P": CurveDivisor(cP=d - 1, cQ=1),
        "T_Q": CurveDivisor(cQ=d),
    }
    if c in ("a", "b"):
        table["L_P"] = CurveDivisor(cP=1, generic={"L_P": (1, d - 1)})
        table["E"] = CurveDivisor(cQ=1) if c == "a" else CurveDivisor(cP=1)
    else:
        table["L_PR"] = CurveDivisor(cP=1, cR=1, generic={"L_PR": (1, d - 2)})
        table["L_QR"] = CurveDivisor(cQ=1, cR=1, generic={"L_QR": (1, d - 2)})
        table["E"] = CurveDivisor(cR=1)
    return table


@dataclass(frozen=True)
class DivisorTemplate:
    template_id: str
    s: int | None = None
    t: int | None = None

    def __str__(self) -> str:
        if self.template_id == "D1":
            return f"D1(s={self.s},t={self.t})"
        return self.template_id

    def terms(self, case: CaseId | str, d: int) -> list[tuple[int, str]]:
        """Coefficients of the template over pencil members and ``E``.

        Raises :class:`InvalidParameters` outside the admissible range.
        """
        c = _proof_case(case)
        tid = self.template_id
        if tid == "D1":
            s, t = self.s, self.t
            if s is None or t is None or not (0 <= s <= d and 0 <= t <= min(d - 2, d - s)):
                raise InvalidParameters(f"{self} out of range for d={d}")
            if c == "b" and (s, t) == (0, 0):
                raise InvalidParameters("case b excludes (s,t)=(0,0)")
            if c == "c" and (s, t) == (d, 0):
                raise InvalidParameters("case c excludes (s,t)=(d,0)")
            if c == "c":
                return [(s, "T_P"), (t, "L_PR"), (d - s - t, "L_QR"), (-1, "E")]
            return [(s, "T_P"), (t, "L_P"), (d - s - t, "T_Q"), (-1, "E")]
        if self.s is not None or self.t is not None:
            raise InvalidParameters(f"{tid} takes no (s,t) parameters")
        if tid == "D2":
            if c == "c":
                return [(1, "L_PR"), (d, "T_P"), (-1, "T_Q"), (-1, "E")]
            return [(d + 1, "T_P"), (-1, "T_Q"), (-1, "E")]
        if tid == "D3":
            if c == "b":
                return [(1, "L_P"), (d, "T_P"), (-1, "T_Q"), (-1, "E")]
            if c == "c":
                return [(1, "L_QR"), (d, "T_P"), (-1, "T_Q"), (-1, "E")]
            raise InvalidParameters("case a has no D3 template")
        raise InvalidParameters(f"unknown template {tid!r}")


def templates(case: CaseId | str, d: int) -> list[DivisorTemplate]:
    """Every admissible template for the case, D1 first."""
    c = _proof_case(case)
    out = []
    for s, t in st_range(d):
        if (c == "b" and (s, t) == (0, 0)) or (c == "c" and (s, t) == (d, 0)):
            continue
        out.append(DivisorTemplate("D1", s, t))
    out.append(DivisorTemplate("D2"))
    if c in ("b", "c"):
        out.append(DivisorTemplate("D3"))
    return out


def template_class(terms: list[tuple[int, str]]) -> DivisorClass:
    total = DivisorClass(0, 0)
    for coef, label in terms:
        if label == "E":
            unit = lattice.EXCEPTIONAL
        elif label in LINE_MEMBERS:
            unit = lattice.LINE
        else:
            raise InvalidParameters(f"unknown divisor label {label!r}")
        total = total + coef * unit
    return total


def expand(case: CaseId | str, d: int, template: DivisorTemplate) -> CurveDivisor:
    table = restriction_table(case, d)
    total = CurveDivisor()
    for coef, label in template.terms(case, d):
        total = total + coef * table[label]
    return total


def gap_witness(case: CaseId | str, d: int, template: DivisorTemplate) -> int:
    """Odd gap at the ramification point certified by ``template``.

    The template must be linearly equivalent to ``C`` and restrict to an
    effective divisor of degree ``C.C``; its pullback then meets the cover
    of ``C`` at the ramification point with contact ``2 * cP``, which makes
    ``2 * cP + 1`` a gap.
    """
    _check_degree(d)
    terms = template.terms(case, d)
    cls = template_class(terms)
    C = lattice.curve_class(d)
    if cls != C:
        raise ClassMismatch(f"{template} has class {cls}, expected {C}")
    restricted = expand(case, d, template)
    if not restricted.is_effective:
        raise NotEffective(f"{template} restricts to {restricted}")
    if restricted.degree != lattice.intersect(C, C):
        raise NotEffective(
            f"{template} restricts to degree {restricted.degree}, expected {lattice.intersect(C, C)}"
        )
    return 2 * restricted.cP + 1


# -- verification harness ----------------------------------------------------


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


@dataclass
class VerificationReport:
    case: FamilyCase
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, expected: Any, actual: Any, passed: bool | None = None) -> None:
        if passed is None:
            passed = expected == actual
        self.checks.append(Check(name, expected, actual, passed))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case.case_id.value,
            "d": self.case.d,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _membership_checks(report: VerificationReport, H: NumericalSemigroup) -> None:
    d, cid = report.case.d, report.case.case_id
    if cid == CaseId.THM12A:
        report.add("nonmember_2d2_minus_1", False, (2 * d * d - 1) in H)
    elif cid == CaseId.THM12B:
        report.add("nonmember_2d2_minus_3", False, (2 * d * d - 3) in H)
    elif cid == CaseId.THM12C:
        report.add("nonmember_2d2_minus_2d_plus_3", False, (2 * d * d - 2 * d + 3) in H)
        report.add("member_2d2_minus_1", True, (2 * d * d - 1) in H)


def _witness_checks(report: VerificationReport, formula: GapSet) -> None:
    d, cid = report.case.d, report.case.case_id
    witnesses, failures = [], []
    for tpl in templates(cid, d):
        try:
            witnesses.append(gap_witness(cid, d, tpl))
        except SemigroupError as exc:
            failures.append(f"{tpl}: {type(exc).__name__}")
    report.add("witness_templates_sound", [], failures)
    report.add("witness_coverage", list(formula), sorted(witnesses))


def verify_case(case: FamilyCase) -> VerificationReport:
    """Cross-check a family's semigroup against every independent route."""
    report = VerificationReport(case)
    d = case.d
    H = family_semigroup(case)
    C = lattice.curve_class(d)
    g_curve = lattice.adjunction_genus(C)

    if not case.is_cover:
        report.add("genus", (d - 1) * (d - 2) // 2, H.genus)
        report.add("genus_via_adjunction", g_curve, H.genus)
        return report

    g_cover = lattice.hurwitz_genus(g_curve, lattice.branch_degree(d))
    report.add("genus", d * d, H.genus)
    report.add("genus_via_hurwitz", g_cover, H.genus)

    formula = None
    if case.case_id in THM12_CASES:
        formula = odd_gap_formula(case.case_id, d)
        report.add("odd_gaps_formula", list(formula), list(H.odd_gaps))

    report.add("odd_gap_count", g_cover - g_curve, len(H.odd_gaps))
    if formula is not None:
        report.add("formula_count", (d * d + 3 * d - 2) // 2, len(formula))

    base = base_semigroup(case)
    halved = d2(H)
    report.add("halving", list(base.gaps), list(halved.gaps), halved == base)
    report.add("min_odd", expected_min_odd(case), H.min_odd_element)
    _membership_checks(report, H)
    if formula is not None:
        _witness_checks(report, formula)
    return report


def all_cases() -> list[CaseId]:
    return list(CaseId)
