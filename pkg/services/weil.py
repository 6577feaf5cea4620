"""Supersingular Weil q-numbers sqrt(q)*zeta and their exact minimal polynomials."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, lcm
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cycring import CycElem, cyc_mul, galois_apply, sqrt_conductor, sqrt_p_embed, units
from .errors import ConsistencyError, InvalidInputError
from .numtheory import IntPoly, PrimePower, QLike, as_int_q, is_weil_palindromic, poly_kth_root

logger = logging.getLogger(__name__)


def conductor(p: int, order: int) -> int:
    return lcm(order, sqrt_conductor(p))


@dataclass(frozen=True)
class WeilNumber:
    """pi = p^((n-1)/2) * sqrt(p) * zeta_L^k inside Z[zeta_M]."""

    q: PrimePower
    order: int
    k: int
    m: int
    unit: CycElem
    value: CycElem

    def square_matches(self) -> bool:
        square = cyc_mul(self.value, self.value)
        expected = CycElem.zeta(self.m, 2 * self.k * (self.m // self.order)).scale(self.q.q)
        return square == expected


@dataclass(frozen=True)
class WeilClass:
    h: IntPoly
    orbit: Tuple[int, ...]
    order: int
    k: int
    m: int
    stabilizer: FrozenSet[int]

    @property
    def degree(self) -> int:
        return len(self.h.coeffs) - 1


def weil_number(q: PrimePower, order: int, k: int) -> WeilNumber:
    if order < 1:
        raise InvalidInputError("order of zeta must be positive")
    if gcd(k, order) != 1:
        raise InvalidInputError(f"exponent {k} is not a unit mod {order}")
    m = conductor(q.p, order)
    unit = cyc_mul(sqrt_p_embed(q.p, m), CycElem.zeta(m, k * (m // order)))
    return WeilNumber(q, order, k % order if order > 1 else 1, m, unit, unit.scale(q.unit_scale))


def stabilizer(w: WeilNumber) -> FrozenSet[int]:
    """Units a mod M with sigma_a(pi) = pi, by direct comparison."""
    return frozenset(a for a in units(w.m) if galois_apply(a, w.value) == w.value)


def coset_representatives(m: int, subgroup: Iterable[int]) -> Tuple[int, ...]:
    members = tuple(subgroup)
    covered = set()
    reps: List[int] = []
    for a in units(m):
        if a in covered:
            continue
        reps.append(a)
        covered.update(a * b % m for b in members)
    return tuple(reps)


def _expand(roots: Sequence[CycElem]) -> IntPoly:
    m = roots[0].m
    # coefficients of prod (X - root), ascending
    coeffs: List[CycElem] = [CycElem.rational(m, 1)]
    for root in roots:
        shifted = [CycElem.rational(m, 0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] = shifted[i] - cyc_mul(root, c)
        coeffs = shifted
    values = []
    for c in coeffs:
        if not c.is_rational:
            raise ConsistencyError(f"minimal polynomial coefficient {c} is not rational")
        values.append(c.rational_value)
    return IntPoly(tuple(values))


def min_poly(
    w: WeilNumber,
    subgroup: Optional[FrozenSet[int]] = None,
    representatives: Optional[Sequence[int]] = None,
) -> WeilClass:
    """Product of X - sigma_a(pi) over coset representatives of the stabilizer."""
    subgroup = subgroup if subgroup is not None else stabilizer(w)
    reps = tuple(representatives) if representatives is not None else coset_representatives(w.m, subgroup)
    if len(reps) * len(subgroup) != len(units(w.m)):
        raise ConsistencyError(f"{len(reps)} cosets of a group of order {len(subgroup)} in (Z/{w.m})^*")
    # conjugates of the unit part, rescaled by the rational factor afterwards
    conjugates = [galois_apply(a, w.unit) for a in reps]
    h = _expand(conjugates).rescale_roots(w.q.unit_scale)
    logger.debug("min_poly L=%s k=%s M=%s -> degree %s", w.order, w.k, w.m, len(h.coeffs) - 1)
    return WeilClass(h, reps, w.order, w.k, w.m, frozenset(subgroup))


def evaluate_at(h: IntPoly, w: WeilNumber) -> CycElem:
    acc = CycElem.rational(w.m, 0)
    for c in reversed(h.coeffs):
        acc = cyc_mul(acc, w.value) + CycElem.rational(w.m, c)
    return acc


def weil_root_check(h: IntPoly, q: QLike, tolerance: float = 1e-9) -> bool:
    """Numerical safety net: every root has modulus sqrt(q) and h is q-palindromic."""
    qv = as_int_q(q)
    if not h.is_monic:
        raise InvalidInputError("weil_root_check needs a monic polynomial")
    degree = len(h.coeffs) - 1
    if degree % 2 == 0 and not is_weil_palindromic(h, qv):
        return False
    # repeated roots lose half the float precision; check the radical of a perfect power
    for k in range(degree, 1, -1):
        if degree % k == 0:
            root = poly_kth_root(h, k)
            if root is not None:
                h, degree = root, degree // k
                break
    # roots of h(sqrt(q) t) / q^(deg/2) lie on the unit circle
    scaled = [float(c) / qv ** ((degree - i) / 2) for i, c in enumerate(h.coeffs)]
    roots = np.roots(list(reversed(scaled)))
    return bool(np.all(np.abs(np.abs(roots) - 1.0) <= tolerance))
