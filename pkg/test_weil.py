#!/usr/bin/env python3
"""
Tests for supersingular Weil numbers and their minimal polynomials
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.cycring import CycElem, units
from services.errors import InvalidInputError
from services.numtheory import IntPoly, PrimePower, euler_phi, is_weil_palindromic, orders_with_phi_at_most
from services.weil import (
    conductor,
    coset_representatives,
    evaluate_at,
    min_poly,
    stabilizer,
    weil_number,
    weil_root_check,
)

Q2 = PrimePower(2, 1)


def test_conductor_is_lcm_with_sqrt_p():
    assert conductor(2, 4) == 8
    assert conductor(3, 1) == 12
    assert conductor(7, 3) == 84
    assert conductor(5, 10) == 10


def test_dimension_one_minimal_polynomials_at_two():
    expected = {
        (1, 1): IntPoly.of([-2, 0, 1]),
        (4, 1): IntPoly.of([2, 0, 1]),
        (8, 1): IntPoly.of([2, -2, 1]),
        (8, 3): IntPoly.of([2, 2, 1]),
    }
    for (order, k), h in expected.items():
        w = weil_number(Q2, order, k)
        assert w.square_matches()
        assert min_poly(w).h == h, f"L={order} k={k}"


def test_unit_scale_for_odd_exponents():
    w = weil_number(PrimePower(2, 3), 4, 1)
    assert min_poly(w).h == IntPoly.of([8, 0, 1])
    w = weil_number(PrimePower(7, 1), 3, 1)
    assert min_poly(w).h == IntPoly.of([49, 0, 7, 0, 1])


def test_stabilizer_and_cosets():
    w = weil_number(Q2, 4, 1)
    assert stabilizer(w) == frozenset({1, 3})
    assert coset_representatives(8, {1, 3}) == (1, 5)


def test_root_is_a_zero_of_its_minimal_polynomial():
    for order, k in ((5, 2), (12, 5), (3, 1)):
        w = weil_number(PrimePower(3, 1), order, k)
        cls = min_poly(w)
        assert evaluate_at(cls.h, w) == CycElem.rational(w.m, 0)
        assert cls.degree == len(cls.h.coeffs) - 1


def test_exponent_must_be_a_unit():
    try:
        weil_number(Q2, 6, 3)
        assert False, "3 is not a unit mod 6"
    except InvalidInputError:
        pass


def test_numeric_root_check():
    assert weil_root_check(IntPoly.of([2, 2, 1]), 2)
    assert weil_root_check(IntPoly.of([2, 1, 1]), 2)
    assert weil_root_check(IntPoly.of([-7, 0, 1]) ** 2, 7)
    assert weil_root_check(IntPoly.of([81, 0, 0, 0, 0, 0, 0, 0, 1]), 3)
    assert not weil_root_check(IntPoly.of([2, 3, 1]), 2)


def test_reference_values():
    assert conductor(2, 5) == 40
    assert conductor(11, 4) == 44
    assert conductor(3, 4) == 12
    assert stabilizer(weil_number(Q2, 8, 1)) == frozenset({1, 5})
    assert stabilizer(weil_number(PrimePower(3, 1), 4, 1)) == frozenset({1, 7})
    for p in (2, 3, 5, 7):
        w = weil_number(PrimePower(p, 1), 1, 1)
        assert len(units(w.m)) == 2 * len(stabilizer(w)), p
    q5 = min_poly(weil_number(PrimePower(5, 1), 5, 1)).h
    assert q5 == IntPoly.of([25, -25, 15, -5, 1])
    assert min_poly(weil_number(PrimePower(3, 1), 4, 1)).h == IntPoly.of([3, 0, 1])
    assert not weil_root_check(IntPoly.of([2, -3, 1]), 2)
    assert weil_root_check(q5, 5)


def test_minimal_polynomials_over_small_orders():
    for p in (2, 3, 5, 7):
        q = PrimePower(p, 1)
        for order in orders_with_phi_at_most(4):
            for k in units(order):
                w = weil_number(q, order, k)
                cls = min_poly(w)
                label = (p, order, k)
                assert cls.degree * len(cls.stabilizer) == euler_phi(w.m), label
                assert euler_phi(order) <= 2 * cls.degree, label
                assert evaluate_at(cls.h, w) == CycElem.rational(w.m, 0), label
                if cls.degree % 2 == 0:
                    assert is_weil_palindromic(cls.h, q), label
                s = max(cls.stabilizer)
                shifted = tuple(r * s % w.m for r in cls.orbit)
                assert min_poly(w, subgroup=cls.stabilizer, representatives=shifted).h == cls.h, label
                reordered = tuple(reversed(shifted))
                assert min_poly(w, subgroup=cls.stabilizer, representatives=reordered).h == cls.h, label
                assert min_poly(weil_number(q, order, (-k) % order)).h == cls.h, label


if __name__ == "__main__":
    tests = [(name, fn) for name, fn in list(globals().items()) if name.startswith("test_") and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"✅ {name}")
        except Exception as e:
            failed += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(tests) - failed}/{len(tests)} passed")
    sys.exit(1 if failed else 0)
