"""Integer, totient, cyclotomic and dense-polynomial primitives."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import factorint, isprime, jacobi_symbol, n_order

from .errors import InvalidInputError

logger = logging.getLogger(__name__)


class ZeroDegree(Enum):
    """Degree of the zero polynomial."""

    NEG_INF = "-inf"


@dataclass(frozen=True)
class PrimePower:
    p: int
    n: int
    q: int = field(init=False)

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise InvalidInputError(f"p={self.p} is not prime")
        if self.n < 1 or self.n % 2 == 0:
            raise InvalidInputError(f"n={self.n} must be a positive odd integer")
        object.__setattr__(self, "q", self.p**self.n)

    def __int__(self) -> int:
        return self.q

    @property
    def unit_scale(self) -> int:
        """p^((n-1)/2), the rational factor of every supersingular Weil q-number."""
        return self.p ** ((self.n - 1) // 2)

    @property
    def sqrt_pq(self) -> int:
        """The integer s with s^2 = p*q."""
        return self.p ** ((self.n + 1) // 2)

    def __str__(self) -> str:
        return f"{self.p}^{self.n}" if self.n > 1 else str(self.p)


QLike = Union[PrimePower, int]


def as_int_q(q: QLike) -> int:
    return q.q if isinstance(q, PrimePower) else int(q)


# ------------------------------------------------------------------ Polynomials
@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients in ascending degree."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in trimmed))

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPoly":
        return cls(tuple([0] * degree + [c]))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(tuple(reversed(list(coeffs))))

    # ---------------------------------------------------------------- Accessors
    @property
    def degree(self) -> Union[int, ZeroDegree]:
        if not self.coeffs:
            return ZeroDegree.NEG_INF
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def descending(self) -> List[int]:
        return list(reversed(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # --------------------------------------------------------------- Arithmetic
    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, divisor: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        if not divisor.is_monic:
            raise InvalidInputError("divisor must be monic")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        if len(rem) - 1 < dd:
            return IntPoly(()), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            quot[i - dd] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= c * b
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:dd]))

    def exact_div(self, divisor: "IntPoly") -> Optional["IntPoly"]:
        quot, rem = self.divmod_monic(divisor)
        return quot if rem.is_zero else None

    def rescale_roots(self, c: int) -> "IntPoly":
        """Polynomial whose roots are c times the roots of this monic one."""
        d = len(self.coeffs) - 1
        return IntPoly(tuple(a * c ** (d - i) for i, a in enumerate(self.coeffs)))

    def to_text(self) -> str:
        return coeffs_to_text(self)

    def __str__(self) -> str:
        return self.to_text()


def coeffs_to_text(poly: IntPoly) -> str:
    """Ascending, comma-separated decimal coefficients."""
    return ",".join(str(c) for c in poly.coeffs) if poly.coeffs else "0"


def coeffs_from_text(text: str) -> IntPoly:
    parts = [part.strip() for part in text.split(",")]
    try:
        return IntPoly(tuple(int(part) for part in parts))
    except ValueError as exc:
        raise InvalidInputError(f"bad coefficient list {text!r}: {exc}") from exc


# ------------------------------------------------------------------ Arithmetic
def euler_phi(m: int) -> int:
    if m < 1:
        raise InvalidInputError("euler_phi needs m >= 1")
    result = 1
    for prime, exp in factorint(m).items():
        result *= prime ** (exp - 1) * (prime - 1)
    return result


@lru_cache(maxsize=None)
def phi_inverse(k: int) -> Tuple[int, ...]:
    # phi(m) >= sqrt(m/2) bounds the search
    if k < 1:
        raise InvalidInputError("phi_inverse needs k >= 1")
    return tuple(m for m in range(1, 2 * k * k + 1) if euler_phi(m) == k)


@lru_cache(maxsize=None)
def orders_with_phi_at_most(bound: int) -> Tuple[int, ...]:
    return tuple(m for m in range(1, 2 * bound * bound + 1) if euler_phi(m) <= bound)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    if m < 1:
        raise InvalidInputError("cyclotomic needs m >= 1")
    poly = IntPoly.monomial(m) - IntPoly.constant(1)
    for d in range(1, m):
        if m % d == 0:
            quot = poly.exact_div(cyclotomic(d))
            if quot is None:
                raise AssertionError(f"Phi_{d} does not divide x^{m} - 1")
            poly = quot
    return poly


def mult_order(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise InvalidInputError(f"{a} is not a unit mod {m}")
    if m == 1:
        return 1
    return int(n_order(a % m, m))


def _kronecker_two(d: int) -> int:
    if d % 2 == 0:
        return 0
    return 1 if d % 8 in (1, 7) else -1


def kronecker(d: int, a: int) -> int:
    """Kronecker symbol (d | a)."""
    if a == 0:
        return 1 if d in (1, -1) else 0
    sign = 1
    if a < 0:
        a = -a
        if d < 0:
            sign = -1
    while a % 2 == 0:
        a //= 2
        sign *= _kronecker_two(d)
        if sign == 0:
            return 0
    if a == 1:
        return sign
    return sign * int(jacobi_symbol(d % a, a))


def is_weil_palindromic(poly: IntPoly, q: QLike) -> bool:
    qv = as_int_q(q)
    if poly.is_zero or (len(poly.coeffs) - 1) % 2:
        raise InvalidInputError("Weil polynomials have even degree")
    if not poly.is_monic:
        raise InvalidInputError("Weil polynomials are monic")
    g = (len(poly.coeffs) - 1) // 2
    return all(poly.coeff(2 * g - i) * qv ** (g - i) == poly.coeff(i) for i in range(g + 1))


def poly_kth_root(poly: IntPoly, k: int) -> Optional[IntPoly]:
    """Monic G with G^k == poly, or None."""
    if k < 1 or not poly.is_monic:
        raise InvalidInputError("poly_kth_root needs a monic polynomial and k >= 1")
    total = len(poly.coeffs) - 1
    if total % k:
        raise InvalidInputError(f"{k} does not divide degree {total}")
    if k == 1:
        return poly
    m = total // k
    root = [0] * m + [1]
    for j in range(1, m + 1):
        current = IntPoly(tuple(root)) ** k
        diff = poly.coeff(total - j) - current.coeff(total - j)
        if diff % k:
            return None
        root[m - j] = diff // k
    candidate = IntPoly(tuple(root))
    return candidate if candidate**k == poly else None


def cyclotomic_decompose(poly: IntPoly) -> Optional[Tuple[int, ...]]:
    """Multiset of m with poly = prod Phi_m, or None."""
    if poly.is_zero or not poly.is_monic:
        raise InvalidInputError("cyclotomic_decompose needs a monic polynomial")
    remaining = poly
    found: List[int] = []
    for m in orders_with_phi_at_most(max(len(poly.coeffs) - 1, 1)):
        phi_m = cyclotomic(m)
        while len(remaining.coeffs) >= len(phi_m.coeffs):
            quot = remaining.exact_div(phi_m)
            if quot is None:
                break
            found.append(m)
            remaining = quot
        if remaining.coeffs == (1,):
            break
    if remaining.coeffs != (1,):
        logger.debug("non-cyclotomic remainder %s", remaining)
        return None
    return tuple(found)
