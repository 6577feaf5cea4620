"""Artin-Schreier curves y^2 + y = f(x) over GF(2^w): point counts and Frobenius polynomials."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .binary_field import BinaryField, binary_field
from .errors import InconsistentCountsError, InvalidInputError, RefusalError
from .numtheory import IntPoly, is_weil_palindromic
from .polyexpr import PolyExpr, evaluate, parse_poly_expr, variables

logger = logging.getLogger(__name__)

FieldPoly = Dict[int, int]


class _FieldPolyRing:
    """Polynomials in x over a binary field, as {exponent: element}."""

    def __init__(self, field: BinaryField) -> None:
        self.field = field

    def from_int(self, value: int) -> FieldPoly:
        return {0: 1} if value % 2 else {}

    def add(self, left: FieldPoly, right: FieldPoly) -> FieldPoly:
        out = dict(left)
        for e, c in right.items():
            out[e] = out.get(e, 0) ^ c
        return {e: c for e, c in out.items() if c}

    sub = add

    def mul(self, left: FieldPoly, right: FieldPoly) -> FieldPoly:
        out: FieldPoly = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                out[e1 + e2] = out.get(e1 + e2, 0) ^ self.field.mul(c1, c2)
        return {e: c for e, c in out.items() if c}


@dataclass(frozen=True)
class CurveAS:
    field: BinaryField
    terms: Tuple[Tuple[int, int], ...]  # (exponent, coefficient), nonzero coefficients

    def __post_init__(self) -> None:
        if self.degree % 2 == 0:
            raise InvalidInputError(f"deg f = {self.degree} must be odd")

    @classmethod
    def from_expr(cls, expr: Union[str, PolyExpr], field: BinaryField, generator: Optional[int] = None) -> "CurveAS":
        node = parse_poly_expr(expr) if isinstance(expr, str) else expr
        extra = variables(node) - {"x", "a"}
        if extra:
            raise InvalidInputError(f"curve equations use x and a only, got {sorted(extra)}")
        alpha = field.primitive_element if generator is None else generator
        poly = evaluate(node, _FieldPolyRing(field), {"x": {1: 1}, "a": {0: alpha} if alpha else {}})
        return cls(field, tuple(sorted(poly.items())))

    @property
    def degree(self) -> int:
        return max((e for e, _ in self.terms), default=0)

    @property
    def genus(self) -> int:
        return (self.degree - 1) // 2

    @property
    def q(self) -> int:
        return self.field.size


@dataclass(frozen=True)
class PointCounts:
    q: int
    counts: Tuple[int, ...]

    def weil_bound_holds(self, g: int) -> bool:
        # |q^i + 1 - N_i| <= 2g q^(i/2)
        for i, n in enumerate(self.counts, start=1):
            s = self.q**i + 1 - n
            if s * s > 4 * g * g * self.q**i:
                return False
        return True


# ------------------------------------------------------------------ Counting
@dataclass(frozen=True)
class _Extension:
    field: BinaryField
    root: int  # image of the base generator t


def _extension(base: BinaryField, degree: int) -> _Extension:
    if degree == 1:
        return _Extension(base, 2 if base.w > 1 else 1)
    ext = binary_field(base.w * degree)
    if base.w == 1:
        return _Extension(ext, 1)  # F_2 embeds as {0, 1}
    return _Extension(ext, ext.subfield_root(base.modulus))


def _embed(ext: _Extension, element: int) -> int:
    acc, power = 0, 1
    while element:
        if element & 1:
            acc ^= power
        element >>= 1
        power = ext.field.mul(power, ext.root)
    return acc


def check_field_bits(w: int, depth: int, max_bits: int) -> None:
    """Refuse before any field of 2^(w * depth) elements gets built."""
    bits = w * max(depth, 1)
    if bits > max_bits:
        raise RefusalError(f"counting over GF(2^{bits}) exceeds the {max_bits}-bit cap")


def count_points(curve: CurveAS, i: int, max_bits: int = 24) -> int:
    """N_i = 1 + 2 #{x in F_(q^i) : Tr(f(x)) = 0}."""
    check_field_bits(curve.field.w, i, max_bits)
    bits = curve.field.w * i
    ext = _extension(curve.field, i)
    field = ext.field
    terms = [(e, _embed(ext, c)) for e, c in curve.terms]
    constant = next((c for e, c in terms if e == 0), 0)
    exp_table, log_table = field.exp_table, field.log_table
    k = np.arange(field.order, dtype=np.int64)
    values = np.zeros(field.order, dtype=np.int64)
    for e, c in terms:
        if e == 0:
            values ^= c
        else:
            values ^= exp_table[(log_table[c] + e * k) % field.order]
    zeros = int(field.order - field.trace_bits(values).sum())
    if field.trace(constant) == 0:
        zeros += 1  # x = 0
    logger.debug("count over GF(2^%s): %s trace-zero values", bits, zeros)
    return 1 + 2 * zeros


def count_points_through(curve: CurveAS, depth: int, max_bits: int = 24) -> PointCounts:
    check_field_bits(curve.field.w, depth, max_bits)
    return PointCounts(curve.q, tuple(count_points(curve, i, max_bits) for i in range(1, depth + 1)))


# ------------------------------------------------------------ Newton identities
def charpoly_from_counts(q: int, g: int, counts: Union[PointCounts, Sequence[int]]) -> IntPoly:
    values = counts.counts if isinstance(counts, PointCounts) else tuple(counts)
    if len(values) != g:
        raise InvalidInputError(f"need exactly {g} counts, got {len(values)}")
    sums = [q**i + 1 - n for i, n in enumerate(values, start=1)]
    a = [1]
    for i in range(1, g + 1):
        total = sums[i - 1] + sum(sums[j - 1] * a[i - j] for j in range(1, i))
        if total % i:
            raise InconsistentCountsError(f"Newton recursion is not integral at step {i}")
        a.append(-total // i)
    a.extend(q**i * a[g - i] for i in range(1, g + 1))
    return IntPoly.from_descending(a)


def roundtrip_counts(P: IntPoly, q: int, depth: int) -> PointCounts:
    if not is_weil_palindromic(P, q):
        raise InvalidInputError("roundtrip_counts needs a q-palindromic polynomial")
    desc = P.descending()
    top = len(desc) - 1
    a = [desc[i] if i <= top else 0 for i in range(depth + 1)]
    sums: List[int] = []
    for i in range(1, depth + 1):
        s = -i * a[i] - sum(a[j] * sums[i - j - 1] for j in range(1, i))
        sums.append(s)
    return PointCounts(q, tuple(q**i + 1 - s for i, s in enumerate(sums, start=1)))


# ------------------------------------------------------------ Generator scan
@dataclass(frozen=True)
class GeneratorModel:
    exponent: int
    generator: int
    counts: PointCounts


def find_generator_model(
    expr: str, expected: IntPoly, field: BinaryField, max_bits: int = 24
) -> Optional[GeneratorModel]:
    """First j such that a = t^j (t the primitive element) reproduces expected."""
    node = parse_poly_expr(expr)
    g = (len(expected.coeffs) - 1) // 2
    check_field_bits(field.w, g, max_bits)
    target = roundtrip_counts(expected, field.size, g)
    for j, alpha in field.generators():
        curve = CurveAS.from_expr(node, field, alpha)
        counts: List[int] = []
        for i in range(1, g + 1):
            n = count_points(curve, i, max_bits)
            if n != target.counts[i - 1]:
                break
            counts.append(n)
        else:
            logger.info("generator t^%s reproduces %s", j, expr)
            return GeneratorModel(j, alpha, PointCounts(field.size, tuple(counts)))
    return None
