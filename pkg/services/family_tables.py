"""Published families of supersingular Weil polynomials, dimensions 1 to 7.

Each family writes the coefficient of X^(2g-i) as m_i * q^(i//2) * s^(i%2),
with s = sqrt(p*q) and m_(2g-i) = m_i. Families with s-terms stand for both
signs of s.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import TemplateError
from .numtheory import IntPoly, PrimePower


class PrimeCondition(str, Enum):
    ANY = "any"
    EQ = "eq"
    NE = "ne"


class TemplateStatus(str, Enum):
    CONFIRMED = "confirmed"
    CORRECTED = "corrected"
    REFUTED = "refuted"


@dataclass(frozen=True)
class FamilyTemplate:
    key: str
    g: int
    condition: PrimeCondition
    prime: Optional[int]
    multipliers: Tuple[int, ...]  # m_1 .. m_g
    source: str
    status: TemplateStatus = TemplateStatus.CONFIRMED
    printed: Optional[Tuple[int, ...]] = None  # multipliers as published, when they differ
    note: str = ""

    def applies_to(self, p: int) -> bool:
        if self.condition is PrimeCondition.EQ:
            return p == self.prime
        if self.condition is PrimeCondition.NE:
            return p != self.prime
        return True

    @property
    def signed(self) -> bool:
        return is_signed(self.multipliers)

    def polynomials(self, q: PrimePower, multipliers: Optional[Sequence[int]] = None) -> Tuple[IntPoly, ...]:
        mults = tuple(multipliers if multipliers is not None else self.multipliers)
        if not is_signed(mults):
            return (pattern_polynomial(mults, q.q, 0),)
        s = isqrt(q.p * q.q)
        if s * s != q.p * q.q:
            raise TemplateError(f"{self.key}: sqrt({q.p}*{q.q}) is not an integer")
        return pattern_polynomial(mults, q.q, s), pattern_polynomial(mults, q.q, -s)


def is_signed(multipliers: Sequence[int]) -> bool:
    return any(m for i, m in enumerate(multipliers, start=1) if i % 2)


def full_multipliers(multipliers: Sequence[int]) -> List[int]:
    """m_0 .. m_2g from m_1 .. m_g."""
    g = len(multipliers)
    head = [1] + list(multipliers)
    return head + [head[2 * g - i] for i in range(g + 1, 2 * g + 1)]


def pattern_polynomial(multipliers: Sequence[int], q: int, s: int) -> IntPoly:
    mults = full_multipliers(multipliers)
    descending = [m * q ** (i // 2) * (s if i % 2 else 1) for i, m in enumerate(mults)]
    return IntPoly.from_descending(descending)


def render_pattern(multipliers: Sequence[int], p: Optional[int]) -> str:
    """Human form such as 'X^2 ± √(2q)X + q'."""
    mults = full_multipliers(multipliers)
    top = len(mults) - 1
    radical = f"√({p}q)" if p is not None else "√(pq)"
    parts: List[str] = []
    for i, m in enumerate(mults):
        if m == 0:
            continue
        power = top - i
        xpart = "" if power == 0 else ("X" if power == 1 else f"X^{power}")
        qexp = i // 2
        qpart = "" if qexp == 0 else ("q" if qexp == 1 else f"q^{qexp}")
        spart = radical if i % 2 else ""
        magnitude = "" if abs(m) == 1 and (qpart or spart or xpart) else str(abs(m))
        body = f"{magnitude}{qpart}{spart}{xpart}" or "1"
        if i % 2:
            sign = "±" if m > 0 else "∓"
        else:
            sign = "+" if m > 0 else "-"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_T = FamilyTemplate
_ANY, _EQ, _NE = PrimeCondition.ANY, PrimeCondition.EQ, PrimeCondition.NE

FAMILY_TABLES: Dict[str, FamilyTemplate] = {
    # --- dimension 1
    "d1.any": _T("d1.any", 1, _ANY, None, (0,), "dim 1: X^2 + q"),
    "d1.p2": _T("d1.p2", 1, _EQ, 2, (1,), "dim 1, p = 2: X^2 ± √(2q)X + q"),
    "d1.p3": _T("d1.p3", 1, _EQ, 3, (1,), "dim 1, p = 3: X^2 ± √(3q)X + q"),
    # --- dimension 2
    "d2.1": _T("d2.1", 2, _NE, 3, (0, -1), "dim 2 item 1, p ≠ 3: X^4 - qX^2 + q^2"),
    "d2.2": _T("d2.2", 2, _ANY, None, (0, 1), "dim 2 item 2: X^4 + qX^2 + q^2"),
    "d2.3": _T("d2.3", 2, _EQ, 2, (1, 1), "dim 2 item 3, p = 2: X^4 ± √(2q)X^3 + qX^2 ± q√(2q)X + q^2"),
    "d2.4": _T("d2.4", 2, _EQ, 5, (1, 3), "dim 2 item 4, p = 5: X^4 ± √(5q)X^3 + 3qX^2 ± q√(5q)X + q^2"),
    "d2.5": _T("d2.5", 2, _ANY, None, (0, -2), "dim 2 item 5: (X^2 - q)^2"),
    "d2.6": _T("d2.6", 2, _NE, 2, (0, 0), "dim 2 item 6, p ≠ 2: X^4 + q^2"),
    # --- dimension 3
    "d3.p3": _T("d3.p3", 3, _EQ, 3, (0, 0, 1), "dim 3, p = 3: X^6 ± q√(3q)X^3 + q^3"),
    "d3.p7": _T("d3.p7", 3, _EQ, 7, (1, 3, 1), "dim 3, p = 7: X^6 ± √(7q)X^5 + 3qX^4 ± q√(7q)X^3 + ..."),
    # --- dimension 4
    "d4.1": _T("d4.1", 4, _EQ, 2, (1, 1, 0, -1), "dim 4 item 1, p = 2: X^8 ± √(2q)X^7 + qX^6 - q^2X^4 + ..."),
    "d4.2": _T("d4.2", 4, _EQ, 3, (1, 2, 1, 1), "dim 4 item 2, p = 3: X^8 ± √(3q)X^7 + 2qX^6 ± q√(3q)X^5 + q^2X^4 + ..."),
    "d4.3": _T("d4.3", 4, _ANY, None, (0, 0, 0, 0), "dim 4 item 3: X^8 + q^4"),
    "d4.4": _T("d4.4", 4, _ANY, None, (0, -1, 0, 1), "dim 4 item 4: X^8 - qX^6 + q^2X^4 - q^3X^2 + q^4"),
    "d4.5": _T("d4.5", 4, _NE, 5, (0, 1, 0, 1), "dim 4 item 5, p ≠ 5: X^8 + qX^6 + q^2X^4 + q^3X^2 + q^4"),
    "d4.6": _T("d4.6", 4, _NE, 2, (0, 0, 0, -1), "dim 4 item 6, p ≠ 2: X^8 - q^2X^4 + q^4"),
    "d4.7": _T("d4.7", 4, _EQ, 5, (1, 2, 1, 3), "dim 4 item 7, p = 5: X^8 ± √(5q)X^7 + 2qX^6 ± q√(5q)X^5 + 3q^2X^4 + ..."),
    # --- dimension 5
    "d5.p11": _T(
        "d5.p11", 5, _EQ, 11, (1, 5, 1, -1, -1),
        "dim 5, p = 11: X^10 ± √(11q)X^9 + 5qX^8 ± q√(11q)X^7 - q^2X^6 ± q^2√(11q)X^5 + ...",
        status=TemplateStatus.CORRECTED,
        printed=(1, 5, 1, -1, 1),
        note="middle term must carry the opposite sign: ∓q^2√(11q)X^5",
    ),
    # --- dimension 6
    "d6.1": _T("d6.1", 6, _EQ, 2, (1, 1, 0, -1, -1, -1), "dim 6 item 1, p = 2: X^12 ± √(2q)X^11 + qX^10 - q^2X^8 ∓ q^2√(2q)X^7 - q^3X^6 + ..."),
    "d6.2": _T("d6.2", 6, _EQ, 2, (0, 0, 1, 0, 0, 1), "dim 6 item 2, p = 2: X^12 ± q√(2q)X^9 + q^3X^6 ± q^4√(2q)X^3 + q^6"),
    "d6.3": _T(
        "d6.3", 6, _EQ, 3, (1, 2, 1, 1, 0, -1),
        "dim 6 item 3, p = 3: X^12 ± √(3q)X^11 + 2qX^10 ± 3q√(3q)X^9 + q^2X^8 - q^3X^6 + ...",
        status=TemplateStatus.CORRECTED,
        printed=(1, 2, 3, 1, 0, -1),
        note="X^9 and X^3 coefficients are q√(3q) and q^4√(3q), without the factor 3",
    ),
    "d6.4": _T("d6.4", 6, _EQ, 7, (1, 4, 1, -1, -2, -7), "dim 6 item 4, p = 7: X^12 ± √(7q)X^11 + 4qX^10 ± q√(7q)X^9 - q^2X^8 ∓ 2q^2√(7q)X^7 - 7q^3X^6 + ..."),
    "d6.5": _T(
        "d6.5", 6, _EQ, 7, (2, 13, 8, 29, 14, 41),
        "dim 6 item 5, p = 7: X^12 ± 2√(7q)X^11 + 13qX^10 ± 8q√(7q)X^9 + 29q^2X^8 ± 14q^2√(7q)X^7 + 41q^3X^6 + ...",
        status=TemplateStatus.REFUTED,
        note="square of the dimension 3 p = 7 class, whose invariants are all 0",
    ),
    "d6.6": _T("d6.6", 6, _EQ, 13, (1, 7, 3, 15, 5, 19), "dim 6 item 6, p = 13: X^12 ± √(13q)X^11 + 7qX^10 ± 3q√(13q)X^9 + 15q^2X^8 ± 5q^2√(13q)X^7 + 19q^3X^6 + ..."),
    "d6.7": _T("d6.7", 6, _ANY, None, (0, 1, 0, 1, 0, 1), "dim 6 item 7: X^12 + qX^10 + q^2X^8 + q^3X^6 + q^4X^4 + q^5X^2 + q^6"),
    "d6.8": _T("d6.8", 6, _NE, 7, (0, -1, 0, 1, 0, -1), "dim 6 item 8, p ≠ 7: X^12 - qX^10 + q^2X^8 - q^3X^6 + q^4X^4 - q^5X^2 + q^6"),
    "d6.9": _T("d6.9", 6, _NE, 3, (0, 0, 0, 0, 0, -1), "dim 6 item 9, p ≠ 3: X^12 - q^3X^6 + q^6"),
    "d6.10": _T("d6.10", 6, _ANY, None, (0, 0, 0, 0, 0, 1), "dim 6 item 10: X^12 + q^3X^6 + q^6"),
    # dimension 7 has no simple supersingular classes
}


def templates_for(g: int) -> List[FamilyTemplate]:
    return [t for t in FAMILY_TABLES.values() if t.g == g]


def match_template(multipliers: Sequence[int], p: int) -> Optional[FamilyTemplate]:
    """Template of the right prime whose (sign-normalized) pattern equals multipliers."""
    target = tuple(multipliers)
    for template in templates_for(len(target)):
        if template.status is not TemplateStatus.REFUTED and template.applies_to(p):
            if template.multipliers == target:
                return template
    return None
