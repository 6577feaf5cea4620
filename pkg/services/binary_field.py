"""GF(2^w) in a polynomial basis, with numpy exp/log tables for bulk evaluation."""

from __future__ import annotations

import logging
from functools import cached_property, lru_cache
from math import gcd
from typing import List, Optional, Tuple

import numpy as np
from sympy import factorint

from .errors import InvalidInputError

logger = logging.getLogger(__name__)


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible_gf2(modulus: int) -> bool:
    """Exhaustive trial division by every polynomial of degree <= w/2."""
    w = modulus.bit_length() - 1
    if w < 1:
        return False
    for divisor in range(2, 1 << (w // 2 + 1)):
        if _gf2_mod(modulus, divisor) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def first_irreducible(w: int) -> int:
    for modulus in range(1 << w, 1 << (w + 1)):
        if is_irreducible_gf2(modulus):
            return modulus
    raise InvalidInputError(f"no irreducible polynomial of degree {w}")


def parse_modulus(bits: str) -> int:
    """'100101' -> t^5 + t^2 + 1 (most significant bit first)."""
    if not bits or set(bits) - {"0", "1"}:
        raise InvalidInputError(f"modulus {bits!r} is not a binary string")
    return int(bits, 2)


class BinaryField:
    def __init__(self, w: int, modulus: int) -> None:
        if modulus.bit_length() - 1 != w:
            raise InvalidInputError(f"modulus {modulus:b} does not have degree {w}")
        if not is_irreducible_gf2(modulus):
            raise InvalidInputError(f"modulus {modulus:b} is reducible over F_2")
        self.w = w
        self.modulus = modulus
        self.size = 1 << w
        self.order = self.size - 1

    def __repr__(self) -> str:
        return f"BinaryField(w={self.w}, modulus={self.modulus:b})"

    # ---------------------------------------------------------------- Scalars
    def mul(self, a: int, b: int) -> int:
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a >> self.w:
                a ^= self.modulus
        return acc

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        result = 1
        e %= self.order
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def trace(self, a: int) -> int:
        acc, x = 0, a
        for _ in range(self.w):
            acc ^= x
            x = self.mul(x, x)
        return acc

    def evaluate_gf2_poly(self, bits: int, x: int) -> int:
        acc = 0
        for i in range(bits.bit_length() - 1, -1, -1):
            acc = self.mul(acc, x) ^ ((bits >> i) & 1)
        return acc

    @cached_property
    def trace_mask(self) -> int:
        return sum(1 << j for j in range(self.w) if self.trace(1 << j))

    @cached_property
    def primitive_element(self) -> int:
        if self.order == 1:
            return 1
        primes = list(factorint(self.order))
        for candidate in range(2, self.size):
            if all(self.pow(candidate, self.order // r) != 1 for r in primes):
                return candidate
        raise InvalidInputError(f"{self!r} has no primitive element")

    def generators(self, base: Optional[int] = None) -> List[Tuple[int, int]]:
        """(j, base^j) for every j prime to the group order, in increasing j."""
        base = self.primitive_element if base is None else base
        return [(j, self.pow(base, j)) for j in range(1, self.order + 1) if gcd(j, self.order) == 1]

    # ------------------------------------------------------------ Vectorized
    def mul_const(self, values: np.ndarray, c: int) -> np.ndarray:
        acc = np.zeros_like(values)
        for i in range(self.w):
            if (c >> i) & 1:
                acc ^= values << i
        for bit in range(2 * self.w - 2, self.w - 1, -1):
            acc ^= ((acc >> bit) & 1) * (self.modulus << (bit - self.w))
        return acc

    @cached_property
    def exp_table(self) -> np.ndarray:
        g = self.primitive_element
        table = np.ones(1, dtype=np.int64)
        while len(table) < self.order:
            table = np.concatenate([table, self.mul_const(table, self.pow(g, len(table)))])
        logger.info("Built exp table for GF(2^%s)", self.w)
        return table[: self.order]

    @cached_property
    def log_table(self) -> np.ndarray:
        log = np.zeros(self.size, dtype=np.int64)
        log[self.exp_table] = np.arange(self.order, dtype=np.int64)
        return log

    def trace_bits(self, values: np.ndarray) -> np.ndarray:
        v = values & self.trace_mask
        for shift in (32, 16, 8, 4, 2, 1):
            v ^= v >> shift
        return v & 1

    def subfield_root(self, sub_modulus: int) -> int:
        """A root in this field of an irreducible polynomial whose degree divides w."""
        d = sub_modulus.bit_length() - 1
        if d < 1 or self.w % d:
            raise InvalidInputError(f"degree {d} does not divide {self.w}")
        step = self.order // ((1 << d) - 1)
        g = self.primitive_element
        for k in range((1 << d) - 1):
            candidate = self.pow(g, k * step)
            if self.evaluate_gf2_poly(sub_modulus, candidate) == 0:
                return candidate
        raise InvalidInputError(f"{sub_modulus:b} has no root in {self!r}")


@lru_cache(maxsize=None)
def binary_field(w: int, modulus: Optional[int] = None) -> BinaryField:
    return BinaryField(w, modulus if modulus is not None else first_irreducible(w))
