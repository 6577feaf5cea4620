#!/usr/bin/env python3
"""
Tests for the polynomial expression grammar
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.errors import InvalidInputError, PolyExprSyntaxError
from services.polyexpr import BinOp, Neg, Num, Pow, Var, evaluate, parse_poly_expr, variables


class IntRing:
    def from_int(self, value):
        return value

    def add(self, left, right):
        return left + right

    def sub(self, left, right):
        return left - right

    def mul(self, left, right):
        return left * right


def _syntax_error(text):
    try:
        parse_poly_expr(text)
    except PolyExprSyntaxError as exc:
        return exc
    raise AssertionError(f"{text!r} parsed")


def test_curve_row_parses():
    node = parse_poly_expr("x^9 + a^2*x^5 + a^9*x^3")
    assert variables(node) == {"x", "a"}
    assert node.op == "+"
    assert node.right == BinOp("*", Pow(Var("a"), 9), Pow(Var("x"), 3))


def test_eliminated_polynomial_parses():
    node = parse_poly_expr("z^6-19*q*z^4+83*q^2*z^2-q^3")
    assert variables(node) == {"z", "q"}
    assert evaluate(node, IntRing(), {"z": 1, "q": 1}) == 1 - 19 + 83 - 1


def test_leading_minus():
    node = parse_poly_expr("-q^3+z^2")
    assert node == BinOp("+", Neg(Pow(Var("q"), 3)), Pow(Var("z"), 2))
    assert evaluate(parse_poly_expr("-x^2+3"), IntRing(), {"x": 2}) == -1


def test_evaluation_and_precedence():
    ring = IntRing()
    assert evaluate(parse_poly_expr("(x+1)^3 - 2*x"), ring, {"x": 2}) == 23
    assert evaluate(parse_poly_expr("2*x^2"), ring, {"x": 3}) == 18
    assert evaluate(parse_poly_expr("x^0"), ring, {"x": 5}) == 1
    assert parse_poly_expr(" 7 ") == Num(7)


def test_double_caret_reports_offset_two():
    exc = _syntax_error("x^^2")
    assert exc.offset == 2
    assert "unsigned integer" in exc.expected


def test_implicit_multiplication_is_rejected():
    exc = _syntax_error("2x")
    assert exc.offset == 1
    assert "*" in exc.expected


def test_offsets_are_bytes():
    exc = _syntax_error("x\u00a0+^2")
    assert exc.offset == 4


def test_only_ascii_digits_are_numbers():
    assert _syntax_error("x^\u00b2").offset == 2
    assert _syntax_error("x^\u0663").offset == 2
    assert _syntax_error("x^3\u0663").offset == 3
    assert _syntax_error("\uff11+x").offset == 0


def test_unknown_symbols_and_unclosed_groups():
    assert _syntax_error("y+1").offset == 0
    assert _syntax_error("(x+1").offset == 4
    assert _syntax_error("x+").offset == 2
    assert _syntax_error("--x").offset == 1


def test_unbound_variable():
    try:
        evaluate(parse_poly_expr("q"), IntRing(), {"x": 1})
        assert False, "q is unbound"
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
