"""Resolve an arbitrary q-palindromic polynomial into simple supersingular classes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .enumeration import simple_classes_up_to_degree
from .errors import ConsistencyError
from .hondatate import IsogenyClass
from .numtheory import IntPoly, PrimePower, is_weil_palindromic
from .papercheck import h_cyclotomic_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factor:
    isogeny_class: IsogenyClass
    multiplicity: int

    @property
    def realizable(self) -> bool:
        return self.multiplicity % self.isogeny_class.e == 0


@dataclass
class Classification:
    q: PrimePower
    P: IntPoly
    supersingular: bool
    root_orders: Optional[Tuple[int, ...]] = None
    factors: List[Factor] = field(default_factory=list)

    @property
    def g(self) -> int:
        return (len(self.P.coeffs) - 1) // 2

    @property
    def simple(self) -> bool:
        return len(self.factors) == 1 and self.factors[0].multiplicity == self.factors[0].isogeny_class.e

    @property
    def realizable(self) -> bool:
        """P is the characteristic polynomial of some abelian variety over F_q."""
        return self.supersingular and all(f.realizable for f in self.factors)


def classify_polynomial(
    P: IntPoly, q: PrimePower, n_jobs: int = 1, cross_check_limit: int = 256
) -> Classification:
    if not is_weil_palindromic(P, q):
        logger.info("P is not q-palindromic for q=%s", q.q)
        return Classification(q=q, P=P, supersingular=False)
    orders = h_cyclotomic_check(P, q)
    if orders is None:
        return Classification(q=q, P=P, supersingular=False)

    result = Classification(q=q, P=P, supersingular=True, root_orders=orders)
    remaining = P
    for cls in simple_classes_up_to_degree(q, len(P.coeffs) - 1, n_jobs, cross_check_limit):
        count = 0
        while len(remaining.coeffs) >= len(cls.h.coeffs):
            quot = remaining.exact_div(cls.h)
            if quot is None:
                break
            remaining = quot
            count += 1
        if count:
            result.factors.append(Factor(cls, count))
    if remaining.coeffs != (1,):
        raise ConsistencyError(f"supersingular P leaves the cofactor {remaining} unexplained")
    logger.info("q=%s: P splits into %s simple factor(s)", q.q, len(result.factors))
    return result
