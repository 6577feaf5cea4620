"""Enumerate simple supersingular isogeny classes of a given dimension over F_q."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from .cycring import quadratic_character, units
from .errors import ConsistencyError, InvalidInputError
from .family_tables import match_template, render_pattern
from .hondatate import (
    IsogenyClass,
    decomposition_order,
    dimension,
    invariant_and_e,
    prime_to_p_part,
    splitting_from_orders,
)
from .numtheory import IntPoly, PrimePower, euler_phi, mult_order, orders_with_phi_at_most
from .weil import conductor, min_poly, stabilizer, weil_number

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class OrbitSignature:
    """Invariants of the Galois orbit of sqrt(p) * zeta_L^k; independent of n."""

    order: int
    k: int
    m: int
    degree: int
    d: int
    r: int
    e: int
    g: int
    stabilizer: FrozenSet[int]
    members: FrozenSet[Pair]


@dataclass(frozen=True)
class EnumerationResult:
    q: PrimePower
    g: int
    classes: Tuple[IsogenyClass, ...]
    scanned_orders: Tuple[int, ...]


def candidate_orders(g: int) -> Tuple[int, ...]:
    if g < 1:
        raise InvalidInputError("dimension must be >= 1")
    return orders_with_phi_at_most(4 * g)


# ------------------------------------------------------------ Orbit signatures
def _canonical(order: int, j: int, sign: int) -> Pair:
    """(L', k') with sign * zeta_L^j == zeta_L'^k' primitive."""
    if sign == 1:
        pair = (order, j % order)
    elif order % 2:
        pair = (2 * order, (2 * j + order) % (2 * order))
    elif order % 4 == 2:
        pair = (order // 2, ((j + order // 2) % order) // 2)
    else:
        pair = (order, (j + order // 2) % order)
    return (pair[0], pair[1] if pair[0] > 1 else 1)


def fast_stabilizer(p: int, order: int, m: int) -> FrozenSet[int]:
    """Stabilizer of sqrt(p) * zeta_L^k read off the quadratic character."""
    chi = quadratic_character(p)
    step = order if order % 2 else max(order // 2, 1)
    found = set()
    for a in range(1, m, step):
        if gcd(a, m) != 1:
            continue
        shift = (a - 1) % order
        if shift == 0 and chi(a) == 1:
            found.add(a)
        elif order % 2 == 0 and shift == order // 2 and chi(a) == -1:
            found.add(a)
    return frozenset(found)


@lru_cache(maxsize=None)
def orbit_signatures(p: int, order: int) -> Tuple[OrbitSignature, ...]:
    m = conductor(p, order)
    chi = quadratic_character(p)
    group = units(m)
    realized = {(a % order, chi(a)) for a in group}
    stab = fast_stabilizer(p, order, m)
    mp = prime_to_p_part(m, p)
    powers = {pow(p, j, mp) for j in range(mult_order(p, mp))}
    split = splitting_from_orders(
        len(group),
        len(stab),
        decomposition_order(m, p),
        sum(1 for a in stab if a % mp in powers),
        order in (1, 2),
    )
    _, e = invariant_and_e(split)
    degree = len(group) // len(stab)
    signatures: List[OrbitSignature] = []
    consumed = set()
    for k in units(order):
        if k in consumed:
            continue
        members = frozenset(_canonical(order, k * b, sign) for b, sign in realized)
        consumed.update(kk for ll, kk in members if ll == order)
        signatures.append(
            OrbitSignature(order, k, m, degree, split.d, split.r, e, e * degree // 2, stab, members)
        )
    logger.debug("p=%s L=%s: %s orbits of degree %s", p, order, len(signatures), degree)
    return tuple(signatures)


def _build_class(q: PrimePower, sig: OrbitSignature, cross_check_limit: int) -> IsogenyClass:
    w = weil_number(q, sig.order, sig.k)
    if euler_phi(w.m) <= cross_check_limit and stabilizer(w) != sig.stabilizer:
        raise ConsistencyError(f"stabilizer mismatch at L={sig.order} k={sig.k}")
    cls = dimension(min_poly(w, sig.stabilizer), q)
    if (cls.splitting.d, cls.splitting.r, cls.e, cls.g) != (sig.d, sig.r, sig.e, sig.g):
        raise ConsistencyError(f"local data mismatch at L={sig.order} k={sig.k}")
    return cls


def class_sort_key(cls: IsogenyClass) -> Tuple[int, ...]:
    return tuple(cls.P.descending())


def _select_orbits(p: int, orders: Sequence[int], keep: Callable[[OrbitSignature], bool]) -> List[OrbitSignature]:
    consumed = set()
    selected: List[OrbitSignature] = []
    for order in orders:
        for sig in orbit_signatures(p, order):
            if (order, sig.k) in consumed:
                continue
            consumed.update(sig.members)
            if keep(sig):
                selected.append(sig)
    return selected


def _build_unique(
    q: PrimePower, selected: Sequence[OrbitSignature], n_jobs: int, cross_check_limit: int
) -> Tuple[IsogenyClass, ...]:
    if n_jobs == 1 or len(selected) < 2:
        built = [_build_class(q, sig, cross_check_limit) for sig in selected]
    else:
        built = Parallel(n_jobs=n_jobs)(
            delayed(_build_class)(q, sig, cross_check_limit) for sig in selected
        )
    unique: Dict[IntPoly, IsogenyClass] = {}
    for cls in built:
        unique.setdefault(cls.h, cls)
    return tuple(sorted(unique.values(), key=class_sort_key))


def enumerate_simple_ss(
    q: PrimePower, g: int, n_jobs: int = 1, cross_check_limit: int = 256
) -> EnumerationResult:
    orders = candidate_orders(g)
    selected = _select_orbits(q.p, orders, lambda sig: sig.g == g)
    logger.info("q=%s g=%s: %s orbits of dimension g over %s orders", q.q, g, len(selected), len(orders))
    classes = _build_unique(q, selected, n_jobs, cross_check_limit)
    return EnumerationResult(q=q, g=g, classes=classes, scanned_orders=tuple(orders))


def simple_classes_up_to_degree(
    q: PrimePower, max_degree: int, n_jobs: int = 1, cross_check_limit: int = 256
) -> Tuple[IsogenyClass, ...]:
    """Every simple class whose minimal polynomial h has degree <= max_degree."""
    if max_degree < 1:
        raise InvalidInputError("max_degree must be >= 1")
    orders = candidate_orders((max_degree + 1) // 2)
    selected = _select_orbits(q.p, orders, lambda sig: sig.degree <= max_degree)
    return _build_unique(q, selected, n_jobs, cross_check_limit)


# ------------------------------------------------------------------ Families
@dataclass
class FamilyMember:
    n: int
    sign: int
    P: IntPoly


@dataclass
class Family:
    p: int
    multipliers: Tuple[int, ...]
    formula: str
    template_key: Optional[str]
    members: List[FamilyMember] = field(default_factory=list)


@dataclass
class FamilyScanReport:
    g: int
    families: List[Family]
    residuals: List[Tuple[int, int, IntPoly]]


def family_pattern(P: IntPoly, q: PrimePower) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Sign-normalized multipliers m_1..m_g of P and the sign of s, or None."""
    coeffs = P.descending()
    g = (len(coeffs) - 1) // 2
    s = q.sqrt_pq
    mults: List[int] = []
    for i in range(1, g + 1):
        unit = q.q ** (i // 2) * (s if i % 2 else 1)
        if coeffs[i] % unit:
            return None
        mults.append(coeffs[i] // unit)
    sign = next((1 if m > 0 else -1 for i, m in enumerate(mults, start=1) if i % 2 and m), 1)
    normalized = tuple(m * sign if i % 2 else m for i, m in enumerate(mults, start=1))
    return normalized, sign


def family_scan(
    primes: Sequence[int], exponents: Sequence[int], g: int, n_jobs: int = 1
) -> FamilyScanReport:
    if any(n % 2 == 0 for n in exponents):
        raise InvalidInputError("family_scan needs odd exponents")
    families: Dict[Tuple[int, Tuple[int, ...]], Family] = {}
    residuals: List[Tuple[int, int, IntPoly]] = []
    for p in primes:
        for n in exponents:
            q = PrimePower(p, n)
            for cls in enumerate_simple_ss(q, g, n_jobs=n_jobs).classes:
                pattern = family_pattern(cls.P, q)
                if pattern is None:
                    residuals.append((p, n, cls.P))
                    continue
                mults, sign = pattern
                family = families.get((p, mults))
                if family is None:
                    template = match_template(mults, p)
                    family = Family(
                        p=p,
                        multipliers=mults,
                        formula=render_pattern(mults, p),
                        template_key=template.key if template else None,
                    )
                    families[(p, mults)] = family
                family.members.append(FamilyMember(n=n, sign=sign, P=cls.P))
    ordered = sorted(families.values(), key=lambda f: (f.p, f.multipliers))
    return FamilyScanReport(g=g, families=ordered, residuals=residuals)
