#!/usr/bin/env python3
"""
Tests for local invariants, multiplicity e and dimension g
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from fractions import Fraction

from services.errors import ConsistencyError, InvalidInputError
from services.hondatate import (
    cyclotomic_padic_factor_count,
    decomposition_order,
    decomposition_subgroup,
    dimension,
    local_degree,
    prime_to_p_part,
    splitting_from_orders,
)
from services.numtheory import IntPoly, PrimePower
from services.weil import min_poly, weil_number


def _class(p, n, order, k):
    q = PrimePower(p, n)
    return dimension(min_poly(weil_number(q, order, k)), q)


def test_real_weil_number_has_multiplicity_two():
    cls = _class(2, 1, 1, 1)
    assert cls.h == IntPoly.of([-2, 0, 1])
    assert (cls.e, cls.g) == (2, 2)
    assert cls.P == IntPoly.of([4, 0, -4, 0, 1])
    assert cls.splitting.has_real_place


def test_elliptic_curve_classes_at_two():
    for order, k in ((4, 1), (8, 1), (8, 3)):
        cls = _class(2, 1, order, k)
        assert (cls.e, cls.g) == (1, 1), f"L={order} k={k}"
        assert (cls.splitting.d, cls.splitting.r) == (2, 1)
        assert cls.invariant == Fraction(0)


def test_octic_local_data():
    # X^8 + q^4: d = 2 with four places above 17, two places above p = 3, 5, 7
    cls = _class(17, 1, 16, 1)
    assert cls.h == IntPoly.of([17**4, 0, 0, 0, 0, 0, 0, 0, 1])
    assert (cls.splitting.d, cls.splitting.r, cls.e, cls.g) == (2, 4, 1, 4)
    for p in (3, 5, 7):
        cls = _class(p, 1, 16, 1)
        assert cls.h == IntPoly.of([p**4, 0, 0, 0, 0, 0, 0, 0, 1])
        assert (cls.splitting.r, cls.e, cls.g) == (2, 1, 4), f"p={p}"
        assert cls.splitting.r == cyclotomic_padic_factor_count(8, p)
    assert cyclotomic_padic_factor_count(8, 17) == 4


def test_local_data_is_independent_of_n():
    for order, k in ((3, 1), (12, 1), (5, 1)):
        base = _class(7, 1, order, k)
        cubed = _class(7, 3, order, k)
        assert base.splitting == cubed.splitting
        assert (base.e, base.g) == (cubed.e, cubed.g)


def test_honda_tate_relations():
    for p in (2, 3, 5, 7):
        for order, k in ((1, 1), (3, 1), (4, 1), (5, 1), (8, 1), (12, 5)):
            cls = _class(p, 1, order, k)
            degree = len(cls.h.coeffs) - 1
            assert cls.e * degree == 2 * cls.g
            assert cls.splitting.r * cls.splitting.d == degree
            assert cls.splitting.inv_order in (1, 2)
            assert cls.P == cls.h ** cls.e


def test_decomposition_group():
    assert prime_to_p_part(72, 2) == 9
    assert decomposition_order(8, 2) == 4
    assert decomposition_order(272, 17) == 16 * 1
    assert len(decomposition_subgroup(84, 7)) == decomposition_order(84, 7)


def test_local_degree_from_subgroups():
    assert local_degree({1, 3}, {1, 3, 5, 7}, 8) == (2, 1)
    assert local_degree({1}, {1}, 5) == (1, 4)
    try:
        local_degree(set(), {1}, 5)
        assert False, "empty stabilizer"
    except InvalidInputError:
        pass


def test_splitting_counts_must_be_integral():
    try:
        splitting_from_orders(8, 3, 4, 1, False)
        assert False, "r is not integral"
    except ConsistencyError:
        pass


def test_padic_factor_count():
    assert cyclotomic_padic_factor_count(5, 2) == 1
    assert cyclotomic_padic_factor_count(12, 5) == 2
    assert cyclotomic_padic_factor_count(9, 2) == 1
    assert cyclotomic_padic_factor_count(14, 3) == 1
    try:
        cyclotomic_padic_factor_count(10, 5)
        assert False, "5 divides 10"
    except InvalidInputError:
        pass


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
