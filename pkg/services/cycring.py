"""Exact arithmetic in Z[zeta_M] with Galois action and a Gauss-sum square root of p."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import ConsistencyError, InvalidInputError
from .numtheory import cyclotomic, euler_phi, kronecker

logger = logging.getLogger(__name__)

# numpy fast paths stay well clear of int64 overflow
_INT64_SAFE = 1 << 62


def sqrt_conductor(p: int) -> int:
    """Least M with sqrt(p) in Q(zeta_M)."""
    if p == 2:
        return 8
    return p if p % 4 == 1 else 4 * p


def discriminant(p: int) -> int:
    """Discriminant of Q(sqrt(p))."""
    if p == 2:
        return 8
    return p if p % 4 == 1 else 4 * p


@lru_cache(maxsize=None)
def units(m: int) -> Tuple[int, ...]:
    return tuple(a for a in range(1, m + 1) if gcd(a, m) == 1)


# --------------------------------------------------------- Per-conductor tables
class CycContext:
    """Power-basis images of x^e mod Phi_M for 0 <= e < M."""

    def __init__(self, m: int) -> None:
        self.m = m
        self.phi = euler_phi(m)
        modulus = cyclotomic(m).coeffs
        rows: List[List[int]] = []
        row = [0] * self.phi
        row[0] = 1
        for _ in range(m):
            rows.append(row)
            shifted = [0] + row
            top = shifted.pop()
            if top:
                for j in range(self.phi):
                    shifted[j] -= top * modulus[j]
            row = shifted
        self.rows = rows
        self.row_bound = max(abs(c) for r in rows for c in r)
        self.table = np.array(rows, dtype=np.int64)
        logger.debug("Built cyclotomic table M=%s phi=%s bound=%s", m, self.phi, self.row_bound)

    def reduce(self, values: Sequence[int], exponents: Sequence[int]) -> Tuple[int, ...]:
        """Sum of values[i] * x^exponents[i], reduced mod Phi_M."""
        bound = max((abs(v) for v in values), default=0)
        if bound * self.row_bound * max(len(values), 1) < _INT64_SAFE:
            vec = np.asarray(values, dtype=np.int64)
            idx = np.asarray(exponents, dtype=np.int64) % self.m
            out = vec @ self.table[idx]
            return tuple(int(c) for c in out)
        out_py = [0] * self.phi
        for v, e in zip(values, exponents):
            if v:
                row = self.rows[e % self.m]
                for j in range(self.phi):
                    out_py[j] += v * row[j]
        return tuple(out_py)


@lru_cache(maxsize=512)
def context(m: int) -> CycContext:
    return CycContext(m)


# ------------------------------------------------------------------ Elements
@dataclass(frozen=True)
class CycElem:
    m: int
    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != context(self.m).phi:
            raise InvalidInputError(f"Z[zeta_{self.m}] elements have {context(self.m).phi} coordinates")

    @classmethod
    def rational(cls, m: int, value: int) -> "CycElem":
        coords = [0] * context(m).phi
        coords[0] = value
        return cls(m, tuple(coords))

    @classmethod
    def zeta(cls, m: int, exponent: int = 1) -> "CycElem":
        return cls(m, tuple(context(m).rows[exponent % m]))

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    @property
    def rational_value(self) -> int:
        if not self.is_rational:
            raise ConsistencyError(f"{self} is not rational")
        return self.coords[0]

    def _check(self, other: "CycElem") -> None:
        if self.m != other.m:
            raise InvalidInputError(f"conductor mismatch {self.m} != {other.m}")

    def __add__(self, other: "CycElem") -> "CycElem":
        self._check(other)
        return CycElem(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CycElem") -> "CycElem":
        self._check(other)
        return CycElem(self.m, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CycElem":
        return CycElem(self.m, tuple(-a for a in self.coords))

    def scale(self, c: int) -> "CycElem":
        return CycElem(self.m, tuple(c * a for a in self.coords))

    def __mul__(self, other: "CycElem") -> "CycElem":
        return cyc_mul(self, other)

    def __str__(self) -> str:
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coords) if c]
        return f"[{' + '.join(terms) or '0'} in Z[zeta_{self.m}]]"


def cyc_mul(a: CycElem, b: CycElem) -> CycElem:
    a._check(b)
    ctx = context(a.m)
    bound_a = max((abs(c) for c in a.coords), default=0)
    bound_b = max((abs(c) for c in b.coords), default=0)
    if bound_a * bound_b * ctx.phi < _INT64_SAFE:
        conv = np.convolve(np.asarray(a.coords, dtype=np.int64), np.asarray(b.coords, dtype=np.int64))
        values = [int(c) for c in conv]
    else:
        values = [0] * (2 * ctx.phi - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    values[i + j] += x * y
    return CycElem(a.m, ctx.reduce(values, range(len(values))))


def galois_apply(a: int, elem: CycElem) -> CycElem:
    """Image of elem under zeta_M -> zeta_M^a."""
    if gcd(a, elem.m) != 1:
        raise InvalidInputError(f"{a} is not a unit mod {elem.m}")
    ctx = context(elem.m)
    return CycElem(elem.m, ctx.reduce(elem.coords, [i * a for i in range(ctx.phi)]))


def embed_up(elem: CycElem, target: int) -> CycElem:
    if target % elem.m:
        raise InvalidInputError(f"{elem.m} does not divide {target}")
    if target == elem.m:
        return elem
    step = target // elem.m
    ctx = context(target)
    return CycElem(target, ctx.reduce(elem.coords, [i * step for i in range(len(elem.coords))]))


# ------------------------------------------------------------- Square root of p
@lru_cache(maxsize=None)
def _gauss_root(p: int) -> CycElem:
    base = sqrt_conductor(p)
    if p == 2:
        root = CycElem.zeta(8, 1) + CycElem.zeta(8, 7)
    else:
        step = base // p
        gauss = CycElem.rational(base, 0)
        for t in range(1, p):
            term = CycElem.zeta(base, t * step).scale(kronecker(t, p))
            gauss = gauss + term
        if p % 4 == 1:
            root = gauss
        else:
            root = cyc_mul(CycElem.zeta(base, 3 * p), gauss)
    square = cyc_mul(root, root)
    if not (square.is_rational and square.rational_value == p):
        raise ConsistencyError(f"Gauss sum for p={p} does not square to p")
    return root


def sqrt_p_embed(p: int, m: int) -> CycElem:
    base = sqrt_conductor(p)
    if m % base:
        raise InvalidInputError(f"sqrt({p}) needs conductor divisible by {base}, got {m}")
    return embed_up(_gauss_root(p), m)


@dataclass(frozen=True)
class QuadraticCharacter:
    """chi with sigma_a(sqrt p) = chi(a) sqrt p, tabulated mod the conductor of sqrt p."""

    p: int
    conductor: int
    values: Dict[int, int]

    def __call__(self, a: int) -> int:
        return self.values[a % self.conductor]


@lru_cache(maxsize=None)
def quadratic_character(p: int) -> QuadraticCharacter:
    root = _gauss_root(p)
    values: Dict[int, int] = {}
    for a in units(root.m):
        image = galois_apply(a, root)
        if image == root:
            values[a] = 1
        elif image == -root:
            values[a] = -1
        else:
            raise ConsistencyError(f"sigma_{a} does not send sqrt({p}) to +-sqrt({p})")
    return QuadraticCharacter(p, root.m, values)
