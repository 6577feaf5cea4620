#!/usr/bin/env python3
"""
Tests for exact cyclotomic arithmetic and the Gauss-sum square roots
"""
import sys
import os
import random
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.cycring import (
    CycElem,
    context,
    cyc_mul,
    discriminant,
    embed_up,
    galois_apply,
    quadratic_character,
    sqrt_conductor,
    sqrt_p_embed,
    units,
)
from services.errors import InvalidInputError
from services.numtheory import kronecker

PRIMES = (2, 3, 5, 7, 11, 13, 17)


def test_conductors():
    assert [sqrt_conductor(p) for p in (2, 3, 5, 7, 13)] == [8, 12, 5, 28, 13]
    assert discriminant(3) == 12


def test_root_of_unity_arithmetic():
    one = CycElem.rational(12, 1)
    assert cyc_mul(CycElem.zeta(12, 5), CycElem.zeta(12, 7)) == one
    assert CycElem.zeta(12, 6) == -one
    assert CycElem.zeta(12, 12) == one
    assert (CycElem.zeta(12, 1) - CycElem.zeta(12, 1)).is_rational


def test_wide_coefficients_take_the_exact_path():
    big = 10**20
    product = cyc_mul(CycElem.rational(12, big), CycElem.zeta(12, 1))
    assert product == CycElem.zeta(12, 1).scale(big)


def test_galois_action():
    for a in units(20):
        assert galois_apply(a, CycElem.zeta(20, 1)) == CycElem.zeta(20, a)
    try:
        galois_apply(4, CycElem.zeta(20, 1))
        assert False, "4 is not a unit mod 20"
    except InvalidInputError:
        pass


def test_embedding():
    assert embed_up(CycElem.zeta(4, 1), 12) == CycElem.zeta(12, 3)
    try:
        embed_up(CycElem.zeta(4, 1), 10)
        assert False, "4 does not divide 10"
    except InvalidInputError:
        pass


def test_sqrt_p_squares_to_p():
    for p in PRIMES:
        for m in (sqrt_conductor(p), 3 * sqrt_conductor(p)):
            root = sqrt_p_embed(p, m)
            square = cyc_mul(root, root)
            assert square.is_rational and square.rational_value == p, f"p={p} M={m}"


def test_sqrt_p_needs_its_conductor():
    try:
        sqrt_p_embed(3, 6)
        assert False, "sqrt(3) does not live in Q(zeta_6)"
    except InvalidInputError:
        pass


def test_quadratic_character_matches_kronecker():
    for p in PRIMES:
        chi = quadratic_character(p)
        for a in units(chi.conductor):
            assert chi(a) == kronecker(discriminant(p), a), f"p={p} a={a}"
    chi2 = quadratic_character(2)
    assert (chi2(3), chi2(5), chi2(7)) == (-1, -1, 1)


def test_element_shape_is_checked():
    try:
        CycElem(12, (1, 0, 0))
        assert False, "Z[zeta_12] has rank 4"
    except InvalidInputError:
        pass


def _random_elem(rng, m):
    return CycElem(m, tuple(rng.randint(-5, 5) for _ in range(context(m).phi)))


def test_reference_products():
    z8 = CycElem.zeta(8, 1)
    root2 = z8 + CycElem.zeta(8, 7)
    assert CycElem.zeta(4, 1) * CycElem.zeta(4, 1) == CycElem.rational(4, -1)
    assert CycElem.zeta(5, 1) * CycElem.zeta(5, 4) == CycElem.rational(5, 1)
    assert root2 * root2 == CycElem.rational(8, 2)
    assert galois_apply(3, z8) == CycElem.zeta(8, 3)
    assert galois_apply(5, root2) == -root2
    z5 = [CycElem.zeta(5, k) for k in range(5)]
    assert sqrt_p_embed(5, 5) == z5[1] - z5[2] - z5[3] + z5[4]
    assert embed_up(CycElem.rational(5, 7), 40) == CycElem.rational(40, 7)
    lifted = embed_up(sqrt_p_embed(2, 8), 40)
    assert lifted * lifted == CycElem.rational(40, 2)


def test_sqrt_p_squares_to_p_at_every_admissible_conductor():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        c = sqrt_conductor(p)
        for m in range(c, 121, c):
            root = sqrt_p_embed(p, m)
            assert root * root == CycElem.rational(m, p), (p, m)


def test_galois_action_is_a_homomorphism_that_composes():
    rng = random.Random(7)
    for m in (7, 12, 15, 20, 24):
        x, y = _random_elem(rng, m), _random_elem(rng, m)
        for a in units(m):
            assert galois_apply(a, x + y) == galois_apply(a, x) + galois_apply(a, y), (m, a)
            assert galois_apply(a, x * y) == galois_apply(a, x) * galois_apply(a, y), (m, a)
            for b in units(m):
                assert galois_apply(a, galois_apply(b, x)) == galois_apply(a * b % m, x), (m, a, b)


def test_galois_acts_on_sqrt_p_by_the_kronecker_symbol():
    for p in PRIMES:
        for m in (sqrt_conductor(p), 2 * sqrt_conductor(p)):
            root = sqrt_p_embed(p, m)
            for a in units(m):
                assert galois_apply(a, root) == root.scale(kronecker(discriminant(p), a)), (p, m, a)


def test_embedding_commutes_with_ring_operations():
    rng = random.Random(11)
    for m, target in ((4, 12), (5, 40), (8, 24), (12, 60)):
        x, y = _random_elem(rng, m), _random_elem(rng, m)
        assert embed_up(x + y, target) == embed_up(x, target) + embed_up(y, target), (m, target)
        assert embed_up(x * y, target) == embed_up(x, target) * embed_up(y, target), (m, target)


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
