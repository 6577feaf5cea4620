"""Parser and ring-generic evaluator for polynomial expressions.

Grammar (whitespace insensitive, no implicit multiplication)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := var | uint | '(' expr ')'

Variables are x, z, q and a (a spells a generator of the base field).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Mapping, Protocol, Set, TypeVar, Union

from .errors import InvalidInputError, PolyExprSyntaxError

VARIABLES = ("a", "q", "x", "z")

T = TypeVar("T")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Num, Var, Neg, BinOp, Pow]


# ------------------------------------------------------------------ Tokenizer
@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "var", an operator character, or "end"
    text: str
    offset: int


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"  # ASCII only


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif _is_digit(ch):
            start = i
            while i < len(text) and _is_digit(text[i]):
                i += 1
            tokens.append(_Token("num", text[start:i], start))
        elif ch in VARIABLES:
            tokens.append(_Token("var", ch, i))
            i += 1
        elif ch in "+-*^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise PolyExprSyntaxError(text, _byte_offset(text, i), ["variable", "integer", "+", "-", "*", "^", "(", ")"])
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def fail(self, expected) -> PolyExprSyntaxError:
        return PolyExprSyntaxError(self.text, _byte_offset(self.text, self.current.offset), expected)

    def advance(self) -> _Token:
        token = self.current
        self.pos += 1
        return token

    def parse(self) -> PolyExpr:
        node = self.expr()
        if self.current.kind != "end":
            raise self.fail(["+", "-", "*", "end of input"])
        return node

    def expr(self) -> PolyExpr:
        if self.current.kind == "-":
            self.advance()
            node: PolyExpr = Neg(self.term())
        else:
            node = self.term()
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> PolyExpr:
        node = self.factor()
        while self.current.kind == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> PolyExpr:
        node = self.base()
        if self.current.kind == "^":
            self.advance()
            if self.current.kind != "num":
                raise self.fail(["unsigned integer"])
            node = Pow(node, int(self.advance().text))
        return node

    def base(self) -> PolyExpr:
        token = self.current
        if token.kind == "num":
            self.advance()
            return Num(int(token.text))
        if token.kind == "var":
            self.advance()
            return Var(token.text)
        if token.kind == "(":
            self.advance()
            node = self.expr()
            if self.current.kind != ")":
                raise self.fail([")", "+", "-", "*"])
            self.advance()
            return node
        raise self.fail(["variable", "unsigned integer", "("])


def parse_poly_expr(text: str) -> PolyExpr:
    return _Parser(text).parse()


def variables(node: PolyExpr) -> Set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Num):
        return set()
    if isinstance(node, Neg):
        return variables(node.operand)
    if isinstance(node, Pow):
        return variables(node.base)
    return variables(node.left) | variables(node.right)


# ------------------------------------------------------------------ Evaluation
class Ring(Protocol[T]):
    def from_int(self, value: int) -> T: ...

    def add(self, left: T, right: T) -> T: ...

    def sub(self, left: T, right: T) -> T: ...

    def mul(self, left: T, right: T) -> T: ...


def evaluate(node: PolyExpr, ring: "Ring[T]", bindings: Mapping[str, T]) -> T:
    if isinstance(node, Num):
        return ring.from_int(node.value)
    if isinstance(node, Var):
        if node.name not in bindings:
            raise InvalidInputError(f"variable {node.name!r} is not allowed here")
        return bindings[node.name]
    if isinstance(node, Neg):
        return ring.sub(ring.from_int(0), evaluate(node.operand, ring, bindings))
    if isinstance(node, Pow):
        base = evaluate(node.base, ring, bindings)
        result = ring.from_int(1)
        exponent = node.exponent
        while exponent:
            if exponent & 1:
                result = ring.mul(result, base)
            base = ring.mul(base, base)
            exponent >>= 1
        return result
    left = evaluate(node.left, ring, bindings)
    right = evaluate(node.right, ring, bindings)
    ops: Mapping[str, Callable[[T, T], T]] = {"+": ring.add, "-": ring.sub, "*": ring.mul}
    return ops[node.op](left, right)
