"""Local invariants, multiplicity e and dimension g of supersingular Weil classes.

Every root of a supersingular Weil polynomial has p-adic valuation n/2, so the
invariant at a place above p is d * (1/2) mod 1 with d the local degree.
Local degrees are read off inside (Z/M)^* from the stabilizer of pi and the
decomposition group of p.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Tuple

from .cycring import units
from .errors import ConsistencyError, InvalidInputError
from .numtheory import IntPoly, PrimePower, euler_phi, mult_order
from .weil import WeilClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalSplitting:
    d: int
    r: int
    inv_order: int
    has_real_place: bool


@dataclass(frozen=True)
class IsogenyClass:
    h: IntPoly
    e: int
    g: int
    P: IntPoly
    order: int
    k: int
    m: int
    splitting: LocalSplitting
    invariant: Fraction

    @property
    def provenance(self) -> Tuple[int, int, int]:
        return self.order, self.k, self.m


def prime_to_p_part(m: int, p: int) -> int:
    while m % p == 0:
        m //= p
    return m


def decomposition_subgroup(m: int, p: int) -> FrozenSet[int]:
    """Units congruent to a power of p modulo the prime-to-p part of M."""
    mp = prime_to_p_part(m, p)
    powers = {pow(p, j, mp) for j in range(mult_order(p, mp))}
    return frozenset(a for a in units(m) if a % mp in powers)


def decomposition_order(m: int, p: int) -> int:
    mp = prime_to_p_part(m, p)
    return euler_phi(m) // euler_phi(mp) * mult_order(p, mp)


def splitting_from_orders(
    group: int, stab: int, decomp: int, intersection: int, has_real_place: bool
) -> LocalSplitting:
    if decomp % intersection:
        raise ConsistencyError(f"|D cap H|={intersection} does not divide |D|={decomp}")
    d = decomp // intersection
    num, den = group * intersection, decomp * stab
    if num % den:
        raise ConsistencyError(f"number of primes above p is not integral ({num}/{den})")
    r = num // den
    if r * d * stab != group:
        raise ConsistencyError(f"r*d={r * d} differs from the degree {group // stab}")
    return LocalSplitting(d=d, r=r, inv_order=2 if d % 2 else 1, has_real_place=has_real_place)


def local_degree(stab: Iterable[int], decomp: Iterable[int], m: int) -> Tuple[int, int]:
    """(d, r) with d = [D : D cap H] and r = [G : D H]."""
    stab_set, decomp_set = frozenset(stab), frozenset(decomp)
    if not stab_set or not decomp_set:
        raise InvalidInputError("subgroups must be non-empty")
    split = splitting_from_orders(
        euler_phi(m), len(stab_set), len(decomp_set), len(stab_set & decomp_set), False
    )
    return split.d, split.r


def invariant_and_e(split: LocalSplitting) -> Tuple[Fraction, int]:
    invariant = Fraction(split.d, 2) % 1
    e = 2 if (split.d % 2 or split.has_real_place) else 1
    return invariant, e


def local_splitting(cls: WeilClass, p: int) -> LocalSplitting:
    decomp = decomposition_subgroup(cls.m, p)
    return splitting_from_orders(
        euler_phi(cls.m),
        len(cls.stabilizer),
        len(decomp),
        len(cls.stabilizer & decomp),
        cls.order in (1, 2),
    )


def dimension(cls: WeilClass, q: PrimePower) -> IsogenyClass:
    split = local_splitting(cls, q.p)
    invariant, e = invariant_and_e(split)
    if (e * cls.degree) % 2:
        raise ConsistencyError(f"e*deg h = {e * cls.degree} is odd")
    g = e * cls.degree // 2
    logger.debug("class L=%s k=%s: d=%s r=%s e=%s g=%s", cls.order, cls.k, split.d, split.r, e, g)
    return IsogenyClass(
        h=cls.h,
        e=e,
        g=g,
        P=cls.h**e,
        order=cls.order,
        k=cls.k,
        m=cls.m,
        splitting=split,
        invariant=invariant,
    )


def cyclotomic_padic_factor_count(m0: int, p: int) -> int:
    """Number of irreducible factors of Phi_m0 over Q_p, for p not dividing m0."""
    if m0 % p == 0:
        raise InvalidInputError(f"p={p} divides {m0}")
    return euler_phi(m0) // mult_order(p, m0)
