"""Cross-checks between published family tables and the enumeration.

Also hosts the supporting tests: the scaled H(t) cyclotomic check, the
mod 3 / mod 5 no-integer-root test, Eisenstein's criterion, and an
exhaustive completeness scan over Weil-bounded coefficient vectors.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from math import comb, isqrt
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from sympy import divisors

from .enumeration import enumerate_simple_ss, simple_classes_up_to_degree
from .errors import InvalidInputError
from .family_tables import FamilyTemplate, TemplateStatus, templates_for
from .hondatate import IsogenyClass
from .numtheory import (
    IntPoly,
    PrimePower,
    QLike,
    as_int_q,
    cyclotomic_decompose,
    is_weil_palindromic,
    poly_kth_root,
)
from .polyexpr import PolyExpr, evaluate, variables
from .weil import weil_root_check

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------ Templates
def instantiate(template: FamilyTemplate, q: PrimePower) -> Optional[Tuple[IntPoly, ...]]:
    """Polynomials of the family at q (both signs for signed families), or None."""
    if not template.applies_to(q.p):
        return None
    return template.polynomials(q)


@dataclass
class MissingEntry:
    P: IntPoly
    template_key: str
    source: str


@dataclass
class UnlistedEntry:
    isogeny_class: IsogenyClass
    root_check: bool


@dataclass
class RefutedEntry:
    template_key: str
    P: IntPoly
    root: Optional[IntPoly]
    root_e: Optional[int]
    root_g: Optional[int]
    note: str


@dataclass
class ErratumEntry:
    template_key: str
    printed: IntPoly
    corrected: IntPoly
    note: str


@dataclass
class DiscrepancyReport:
    q: PrimePower
    g: int
    matched: int = 0
    missing_from_enumeration: List[MissingEntry] = field(default_factory=list)
    missing_from_paper: List[UnlistedEntry] = field(default_factory=list)
    refuted: List[RefutedEntry] = field(default_factory=list)
    errata: List[ErratumEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing_from_enumeration and not self.missing_from_paper


def _refutation(template: FamilyTemplate, P: IntPoly, q: PrimePower) -> RefutedEntry:
    root = poly_kth_root(P, 2)
    root_class = None
    if root is not None and (len(root.coeffs) - 1) % 2 == 0:
        half = (len(root.coeffs) - 1) // 2
        root_class = next((c for c in enumerate_simple_ss(q, half).classes if c.h == root), None)
    return RefutedEntry(
        template_key=template.key,
        P=P,
        root=root,
        root_e=root_class.e if root_class else None,
        root_g=root_class.g if root_class else None,
        note=template.note,
    )


def compare_tables(q: PrimePower, g: int, n_jobs: int = 1, root_tolerance: float = 1e-9) -> DiscrepancyReport:
    report = DiscrepancyReport(q=q, g=g)
    enumerated = {cls.P: cls for cls in enumerate_simple_ss(q, g, n_jobs=n_jobs).classes}
    expected: Dict[IntPoly, FamilyTemplate] = {}
    for template in templates_for(g):
        polys = instantiate(template, q)
        if polys is None:
            continue
        if template.status is TemplateStatus.REFUTED:
            report.refuted.extend(_refutation(template, P, q) for P in polys)
            continue
        if template.status is TemplateStatus.CORRECTED and template.printed is not None:
            printed = template.polynomials(q, template.printed)
            report.errata.extend(
                ErratumEntry(template.key, bad, good, template.note)
                for bad, good in zip(printed, polys)
            )
        for P in polys:
            expected[P] = template
    for P, template in expected.items():
        if P in enumerated:
            report.matched += 1
        else:
            report.missing_from_enumeration.append(MissingEntry(P, template.key, template.source))
    for P, cls in enumerated.items():
        if P not in expected:
            report.missing_from_paper.append(UnlistedEntry(cls, weil_root_check(cls.h, q, root_tolerance)))
    if not report.ok:
        logger.warning(
            "q=%s g=%s: %s listed but not enumerated, %s enumerated but not listed",
            q.q, g, len(report.missing_from_enumeration), len(report.missing_from_paper),
        )
    return report


def verify_paper_tables(
    q_list: Sequence[PrimePower], g_list: Sequence[int], n_jobs: int = 1, root_tolerance: float = 1e-9
) -> List[DiscrepancyReport]:
    jobs = [(q, g) for q in q_list for g in g_list]
    if n_jobs == 1:
        return [compare_tables(q, g, root_tolerance=root_tolerance) for q, g in jobs]
    return list(
        Parallel(n_jobs=n_jobs)(delayed(compare_tables)(q, g, root_tolerance=root_tolerance) for q, g in jobs)
    )


# ------------------------------------------------------------ H(t) cyclotomic test
def _spread(coeffs: Sequence[int], qv: int) -> IntPoly:
    """sum c_j (q t^2)^j"""
    out: List[int] = []
    for j, c in enumerate(coeffs):
        out.extend((c * qv**j, 0))
    return IntPoly.of(out)


def build_H_scaled(P: IntPoly, q: QLike) -> IntPoly:
    """A(q t^2)^2 - q t^2 B(q t^2)^2 for P(X) = A(X^2) + X B(X^2)."""
    qv = as_int_q(q)
    evens = P.coeffs[0::2]
    odds = P.coeffs[1::2]
    a_sub = _spread(evens, qv)
    b_sub = _spread(odds, qv)
    H = a_sub * a_sub - IntPoly.monomial(2, qv) * b_sub * b_sub
    if any(H.coeff(i) for i in range(1, len(H.coeffs), 2)):
        raise AssertionError("H(t) has an odd-degree term")
    return H


def h_cyclotomic_check(P: IntPoly, q: QLike) -> Optional[Tuple[int, ...]]:
    """Cyclotomic orders m with H(t) = prod Phi_m, or None for a non-supersingular P."""
    qv = as_int_q(q)
    if not is_weil_palindromic(P, qv):
        raise InvalidInputError("h_cyclotomic_check needs a q-palindromic polynomial")
    g = (len(P.coeffs) - 1) // 2
    scale = qv ** (2 * g)
    H = build_H_scaled(P, qv)
    if any(c % scale for c in H.coeffs):
        return None
    return cyclotomic_decompose(IntPoly.of(c // scale for c in H.coeffs))


# ------------------------------------------------------------ f(z, q) utilities
@dataclass(frozen=True)
class ZQPoly:
    """Integer polynomial in z and q, stored as {(deg_z, deg_q): coefficient}."""

    terms: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, data: Dict[Tuple[int, int], int]) -> "ZQPoly":
        return cls(tuple(sorted((k, v) for k, v in data.items() if v)))

    @classmethod
    def from_expr(cls, node: PolyExpr) -> "ZQPoly":
        extra = variables(node) - {"z", "q"}
        if extra:
            raise InvalidInputError(f"only z and q are allowed, got {sorted(extra)}")
        ring = _ZQRing()
        return cls.from_dict(evaluate(node, ring, {"z": {(1, 0): 1}, "q": {(0, 1): 1}}))

    @property
    def z_degree(self) -> int:
        return max((dz for (dz, _), _ in self.terms), default=0)

    @property
    def is_monic_in_z(self) -> bool:
        top = self.z_degree
        lead = [(dq, c) for (dz, dq), c in self.terms if dz == top]
        return lead == [(0, 1)]

    def at(self, q: int) -> IntPoly:
        coeffs = [0] * (self.z_degree + 1)
        for (dz, dq), c in self.terms:
            coeffs[dz] += c * q**dq
        return IntPoly(tuple(coeffs))

    def has_root_mod(self, modulus: int, q: int) -> bool:
        poly = self.at(q)
        return any(poly(z) % modulus == 0 for z in range(modulus))


class _ZQRing:
    def from_int(self, value: int) -> Dict[Tuple[int, int], int]:
        return {(0, 0): value} if value else {}

    def add(self, left, right):
        out = dict(left)
        for k, v in right.items():
            out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}

    def sub(self, left, right):
        return self.add(left, {k: -v for k, v in right.items()})

    def mul(self, left, right):
        out: Dict[Tuple[int, int], int] = {}
        for (z1, q1), a in left.items():
            for (z2, q2), b in right.items():
                key = (z1 + z2, q1 + q2)
                out[key] = out.get(key, 0) + a * b
        return {k: v for k, v in out.items() if v}


class Verdict(str, Enum):
    PROVEN_NO_ROOT = "ProvenNoRoot"
    INCONCLUSIVE = "Inconclusive"


def mod35_no_integer_root(f: ZQPoly) -> Verdict:
    """No root mod 3 at q in {1, 2} and none mod 5 at q in {1, 4}."""
    if not f.is_monic_in_z:
        raise InvalidInputError("f must be monic in z")
    if any(f.has_root_mod(3, q) for q in (1, 2)):
        return Verdict.INCONCLUSIVE
    if any(f.has_root_mod(5, q) for q in (1, 4)):
        return Verdict.INCONCLUSIVE
    return Verdict.PROVEN_NO_ROOT


def eisenstein_irreducible(f: IntPoly, p: int) -> bool:
    if len(f.coeffs) < 2:
        raise InvalidInputError("Eisenstein's criterion needs a nonconstant polynomial")
    if f.leading % p == 0:
        return False
    if any(c % p for c in f.coeffs[:-1]):
        return False
    return f.coeffs[0] % (p * p) != 0


def integer_roots(f: IntPoly, bound: int = 10**6) -> List[int]:
    """Integer roots z with |z| <= bound, via divisors of the lowest nonzero coefficient."""
    if f.is_zero:
        raise InvalidInputError("the zero polynomial has every integer as a root")
    roots: List[int] = []
    low = 0
    while f.coeffs[low] == 0:
        low += 1
    if low:
        roots.append(0)
    constant = abs(f.coeffs[low])
    for d in divisors(constant):
        if d > bound:
            break
        for z in (d, -d):
            if f(z) == 0:
                roots.append(z)
    return sorted(roots)


@dataclass(frozen=True)
class RegressionEntry:
    label: str
    poly: str
    test: str
    expected: str
    prime: Optional[int] = None
    note: str = ""


def load_regression_inventory(path: str) -> List[RegressionEntry]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [RegressionEntry(**entry) for entry in data["entries"]]


# ------------------------------------------------------------ Completeness oracle
@dataclass
class CompletenessReport:
    q: PrimePower
    g: int
    scanned: int
    supersingular: List[IntPoly]
    unexplained: List[IntPoly]
    not_found: List[IntPoly]

    @property
    def ok(self) -> bool:
        return not self.unexplained and not self.not_found


def weil_bounded_polynomials(q: int, g: int) -> Iterable[IntPoly]:
    """Every monic q-palindromic degree-2g integer polynomial with |a_i| <= C(2g,i) q^(i/2)."""
    bounds = [isqrt(comb(2 * g, i) ** 2 * q**i) for i in range(1, g + 1)]
    for top in product(*(range(-b, b + 1) for b in bounds)):
        head = [1] + list(top)
        tail = [head[g - j] * q**j for j in range(1, g + 1)]
        yield IntPoly.from_descending(head + tail)


def completeness_oracle(q: PrimePower, g: int) -> CompletenessReport:
    known = [cls.h for cls in simple_classes_up_to_degree(q, 2 * g)]
    target = {cls.P for cls in enumerate_simple_ss(q, g).classes}
    scanned = 0
    supersingular: List[IntPoly] = []
    unexplained: List[IntPoly] = []
    for P in weil_bounded_polynomials(q.q, g):
        scanned += 1
        if h_cyclotomic_check(P, q) is None:
            continue
        supersingular.append(P)
        remaining = P
        for h in known:
            while len(remaining.coeffs) >= len(h.coeffs):
                quot = remaining.exact_div(h)
                if quot is None:
                    break
                remaining = quot
        if remaining.coeffs != (1,):
            unexplained.append(P)
    found = set(supersingular)
    not_found = [P for P in target if P not in found]
    logger.info("q=%s g=%s: scanned %s vectors, %s supersingular", q.q, g, scanned, len(supersingular))
    return CompletenessReport(q, g, scanned, supersingular, unexplained, not_found)
