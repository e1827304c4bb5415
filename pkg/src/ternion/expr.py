"""Tokenizer, recursive-descent parser and evaluator for ternion expressions.

Grammar, lowest precedence first::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := unary ('^' INTEGER)?
    unary  := '-' unary | atom
    atom   := NUMBER | IDENT | IDENT '(' expr ')'
            | '(' expr ',' expr ',' expr ')' | '(' expr ')'

A parenthesised triple whose entries are reals is a ternion literal.
Evaluation produces a ``Ternion``, a ``float`` or a ``SplitForm``.
"""
from __future__ import annotations

import enum
import json
import math
import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

from . import seminorm, structure
from .core import (
    DELTA,
    J,
    ONE,
    U,
    V,
    ZERO,
    NonFiniteError,
    Ternion,
    add,
    conj,
    mul,
    neg,
    quad_forms,
    scale,
    sub,
)
from .structure import I_G, ONE_D, ONE_G, SplitForm

__all__ = [
    "TokenKind",
    "Token",
    "ExprError",
    "LexError",
    "ParseError",
    "ArityError",
    "EvalError",
    "Literal",
    "RealLiteral",
    "ConstRef",
    "Unary",
    "Binary",
    "Call",
    "Triple",
    "CONSTANTS",
    "FUNCTIONS",
    "tokenize",
    "parse",
    "parse_text",
    "evaluate",
    "evaluate_text",
    "format_result",
    "format_number",
    "result_kind",
    "json_value",
]

Value = Union[Ternion, float, SplitForm]

MAX_DEPTH = 100


class TokenKind(enum.Enum):
    NUMBER = "Number"
    IDENT = "Ident"
    LPAREN = "LParen"
    RPAREN = "RParen"
    COMMA = "Comma"
    PLUS = "Plus"
    MINUS = "Minus"
    STAR = "Star"
    SLASH = "Slash"
    CARET = "Caret"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    pos: int


class ExprError(Exception):
    """Base for every positioned error raised by the expression language."""

    kind = "Error"

    def __init__(self, pos: int, detail: str):
        self.pos = pos
        self.detail = detail
        super().__init__(f"{self.kind} at position {pos}: {detail}")

    @property
    def message(self) -> str:
        return str(self)


class LexError(ExprError):
    kind = "LexError"

    def __init__(self, pos: int, char: str):
        self.char = char
        super().__init__(pos, f"unexpected character {char!r}")


class ParseError(ExprError):
    kind = "ParseError"

    def __init__(self, pos: int, expected: str):
        self.expected = expected
        super().__init__(pos, f"expected {expected}")


class ArityError(ExprError):
    kind = "ArityError"


class EvalError(ExprError):
    """Evaluation failure; ``kind`` is NotInvertible, TypeError or NonFinite."""

    def __init__(self, pos: int, detail: str, kind: str):
        self.kind = kind
        super().__init__(pos, detail)


# -- tokens -----------------------------------------------------------------

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PUNCT = {
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
}
_SPACE = " \t\r\n\f\v"


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch in _SPACE:
            pos += 1
        elif ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, pos))
            pos += 1
        elif ch.isascii() and (ch.isdigit() or ch == "."):
            m = _NUMBER.match(text, pos)
            if m is None:
                raise LexError(pos, ch)
            tokens.append(Token(TokenKind.NUMBER, m.group(), pos))
            pos = m.end()
        elif ch.isascii() and (ch.isalpha() or ch == "_"):
            m = _IDENT.match(text, pos)
            tokens.append(Token(TokenKind.IDENT, m.group(), pos))
            pos = m.end()
        else:
            raise LexError(pos, ch)
    return tokens


# -- syntax tree --------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: Ternion
    pos: int = 0


@dataclass(frozen=True)
class RealLiteral:
    value: float  # an int when it is the exponent of '^'
    pos: int = 0


@dataclass(frozen=True)
class ConstRef:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Unary:
    op: str
    child: "Node"
    pos: int = 0


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"
    pos: int = 0


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple["Node", ...]
    pos: int = 0


@dataclass(frozen=True)
class Triple:
    """Parenthesised triple whose entries are not all plain numbers."""

    items: Tuple["Node", "Node", "Node"]
    pos: int = 0


Node = Union[Literal, RealLiteral, ConstRef, Unary, Binary, Call, Triple]

CONSTANTS: Dict[str, Ternion] = {
    "one": ONE,
    "u": U,
    "v": V,
    "delta": DELTA,
    "j": J,
    "oneD": ONE_D,
    "oneG": ONE_G,
    "iG": I_G,
    "zero": ZERO,
}

# name -> (arity, implementation taking (ternion, tol))
FUNCTIONS: Dict[str, Tuple[int, Callable[[Ternion, float], Value]]] = {
    "conj": (1, lambda x, tol: conj(x)),
    "norm": (1, lambda x, tol: seminorm.abs_value(x)),
    "A": (1, lambda x, tol: quad_forms(x).a),
    "B": (1, lambda x, tol: quad_forms(x).b),
    "projD": (1, lambda x, tol: structure.proj_d(x)),
    "projG": (1, lambda x, tol: structure.proj_g(x)),
    "inv": (1, lambda x, tol: structure.invert(x, tol)),
    "reduce": (1, lambda x, tol: structure.reduce_mod_d(x)),
    "split": (1, lambda x, tol: structure.split(x)),
}


class _Parser:
    def __init__(self, tokens: List[Token], end: int):
        self.tokens = tokens
        self.i = 0
        self.end = end
        self.depth = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def here(self) -> int:
        tok = self.peek()
        return tok.pos if tok is not None else self.end

    def accept(self, kind: TokenKind) -> Optional[Token]:
        tok = self.peek()
        if tok is not None and tok.kind is kind:
            self.i += 1
            return tok
        return None

    def expect(self, kind: TokenKind, what: str) -> Token:
        tok = self.accept(kind)
        if tok is None:
            raise ParseError(self.here(), what)
        return tok

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError(self.here(), f"nesting depth at most {MAX_DEPTH}")

    def leave(self):
        self.depth -= 1

    def parse(self) -> Node:
        node = self.expr()
        if self.peek() is not None:
            raise ParseError(self.here(), "operator or end of input")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            tok = self.accept(TokenKind.PLUS) or self.accept(TokenKind.MINUS)
            if tok is None:
                return node
            node = Binary(tok.text, node, self.term(), tok.pos)

    def term(self) -> Node:
        node = self.factor()
        while True:
            tok = self.accept(TokenKind.STAR) or self.accept(TokenKind.SLASH)
            if tok is None:
                return node
            node = Binary(tok.text, node, self.factor(), tok.pos)

    def factor(self) -> Node:
        node = self.unary()
        tok = self.accept(TokenKind.CARET)
        if tok is None:
            return node
        exp = self.peek()
        if exp is None or exp.kind is not TokenKind.NUMBER or not exp.text.isdigit():
            raise ParseError(self.here(), "nonnegative integer exponent")
        self.i += 1
        # the exponent stays an exact int; it may exceed float range
        return Binary("^", node, RealLiteral(int(exp.text), exp.pos), tok.pos)

    def unary(self) -> Node:
        tok = self.accept(TokenKind.MINUS)
        if tok is None:
            return self.atom()
        self.enter()
        child = self.unary()
        self.leave()
        return Unary("-", child, tok.pos)

    def atom(self) -> Node:
        tok = self.peek()
        if tok is None:
            raise ParseError(self.end, "number, name or '('")
        if tok.kind is TokenKind.NUMBER:
            self.i += 1
            return RealLiteral(float(tok.text), tok.pos)
        if tok.kind is TokenKind.IDENT:
            self.i += 1
            return self.name(tok)
        if tok.kind is TokenKind.LPAREN:
            self.i += 1
            return self.group(tok)
        raise ParseError(tok.pos, "number, name or '('")

    def name(self, tok: Token) -> Node:
        if tok.text in CONSTANTS:
            return ConstRef(tok.text, tok.pos)
        if tok.text not in FUNCTIONS:
            raise ParseError(tok.pos, f"a constant or function name, not {tok.text!r}")
        self.expect(TokenKind.LPAREN, f"'(' after {tok.text}")
        self.enter()
        args = [self.expr()]
        while self.accept(TokenKind.COMMA):
            args.append(self.expr())
        self.leave()
        self.expect(TokenKind.RPAREN, "')'")
        arity = FUNCTIONS[tok.text][0]
        if len(args) != arity:
            raise ArityError(tok.pos, f"{tok.text} takes {arity} argument, got {len(args)}")
        return Call(tok.text, tuple(args), tok.pos)

    def group(self, open_tok: Token) -> Node:
        self.enter()
        first = self.expr()
        if self.accept(TokenKind.COMMA) is None:
            self.leave()
            self.expect(TokenKind.RPAREN, "')' or ','")
            return first
        second = self.expr()
        self.expect(TokenKind.COMMA, "',' (a ternion literal has three entries)")
        third = self.expr()
        self.leave()
        self.expect(TokenKind.RPAREN, "')' closing the ternion literal")
        items = (first, second, third)
        numbers = [_literal_number(item) for item in items]
        if all(x is not None for x in numbers):
            try:
                return Literal(Ternion(*numbers), open_tok.pos)
            except NonFiniteError:
                pass
        return Triple(items, open_tok.pos)


def _literal_number(node: Node) -> Optional[float]:
    if isinstance(node, RealLiteral):
        return node.value
    if isinstance(node, Unary) and isinstance(node.child, RealLiteral):
        return -node.child.value
    return None


def parse(tokens: List[Token], end: Optional[int] = None) -> Node:
    """Build a syntax tree. ``end`` is the source length, used to position EOF errors."""
    if end is None:
        end = tokens[-1].pos + len(tokens[-1].text) if tokens else 0
    return _Parser(tokens, end).parse()


def parse_text(text: str) -> Node:
    return parse(tokenize(text), len(text))


# -- evaluation ---------------------------------------------------------------


def _type_name(value: Value) -> str:
    return result_kind(value)


def _check_real(value: float, pos: int) -> float:
    if not math.isfinite(value):
        raise EvalError(pos, "result is not finite", "NonFinite")
    return value


def _power(base: Value, n: int, pos: int) -> Value:
    if isinstance(base, SplitForm):
        raise EvalError(pos, "'^' needs a ternion or real base, got split", "TypeError")
    if isinstance(base, float):
        try:
            return _check_real(base ** n, pos)
        except OverflowError:
            raise EvalError(pos, "result is not finite", "NonFinite") from None
    result = ONE
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def _divide(left: Value, right: Value, pos: int, tol: float) -> Value:
    if isinstance(right, float):
        if right == 0.0:
            raise EvalError(pos, "division by zero", "NotInvertible")
        if isinstance(left, float):
            return _check_real(left / right, pos)
        return scale(1.0 / right, left)
    try:
        inverse = structure.invert(right, tol)
    except structure.NotInvertible:
        raise EvalError(pos, "divisor is zero or a zero divisor", "NotInvertible") from None
    if isinstance(left, float):
        return scale(left, inverse)
    return mul(left, inverse)


def _binary(op: str, left: Value, right: Value, pos: int, tol: float) -> Value:
    if isinstance(left, SplitForm) or isinstance(right, SplitForm):
        raise EvalError(pos, f"'{op}' is not defined for split values", "TypeError")
    if op in "+-":
        if isinstance(left, float) and isinstance(right, float):
            return _check_real(left + right if op == "+" else left - right, pos)
        if isinstance(left, Ternion) and isinstance(right, Ternion):
            return add(left, right) if op == "+" else sub(left, right)
        raise EvalError(
            pos, f"cannot apply '{op}' to {_type_name(left)} and {_type_name(right)}", "TypeError"
        )
    if op == "*":
        if isinstance(left, float):
            return _check_real(left * right, pos) if isinstance(right, float) else scale(left, right)
        return scale(right, left) if isinstance(right, float) else mul(left, right)
    return _divide(left, right, pos, tol)


def _call(node: Call, arg: Value, tol: float) -> Value:
    if not isinstance(arg, Ternion):
        raise EvalError(node.pos, f"{node.func} needs a ternion, got {_type_name(arg)}", "TypeError")
    fn = FUNCTIONS[node.func][1]
    try:
        return fn(arg, tol)
    except structure.NotInvertible:
        raise EvalError(node.pos, f"{node.func}: argument is zero or a zero divisor", "NotInvertible") from None


def _eval(node: Node, tol: float) -> Value:
    if isinstance(node, Binary):
        # walk the left spine iteratively so long operator chains do not recurse
        spine = []
        while isinstance(node, Binary):
            spine.append(node)
            node = node.left
        value = _eval(node, tol)
        for b in reversed(spine):
            try:
                if b.op == "^":
                    value = _power(value, b.right.value, b.pos)
                else:
                    value = _binary(b.op, value, _eval(b.right, tol), b.pos, tol)
            except NonFiniteError:
                raise EvalError(b.pos, "result is not finite", "NonFinite") from None
        return value
    if isinstance(node, RealLiteral):
        return _check_real(node.value, node.pos)
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, ConstRef):
        return CONSTANTS[node.name]
    if isinstance(node, Unary):
        value = _eval(node.child, tol)
        if isinstance(value, SplitForm):
            raise EvalError(node.pos, "cannot negate a split value", "TypeError")
        return -value if isinstance(value, float) else neg(value)
    if isinstance(node, Call):
        arg = _eval(node.args[0], tol)
        try:
            return _call(node, arg, tol)
        except NonFiniteError:
            raise EvalError(node.pos, "result is not finite", "NonFinite") from None
    if isinstance(node, Triple):
        coords = []
        for item in node.items:
            value = _eval(item, tol)
            if not isinstance(value, float):
                raise EvalError(
                    item.pos, f"ternion literal entries must be real, got {_type_name(value)}", "TypeError"
                )
            coords.append(value)
        return Ternion(*coords)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, tol: float = structure.DEFAULT_TOL) -> Value:
    """Evaluate a syntax tree; ``tol`` is forwarded to the invertibility test."""
    return _eval(node, tol)


def evaluate_text(text: str, tol: float = structure.DEFAULT_TOL) -> Value:
    return evaluate(parse_text(text), tol)


# -- output -------------------------------------------------------------------


def format_number(value: float) -> str:
    """12 significant digits, trailing zeros trimmed, no negative zero."""
    if value == 0.0:
        return "0"
    return f"{value:.12g}"


def _format_split(s: SplitForm) -> str:
    im = format_number(s.z_im)
    sign, im = ("-", im[1:]) if im.startswith("-") else ("+", im)
    return f"z = {format_number(s.z_re)} {sign} {im}i, r = {format_number(s.r)}"


def result_kind(value: Value) -> str:
    if isinstance(value, Ternion):
        return "ternion"
    if isinstance(value, SplitForm):
        return "split"
    return "real"


def _json_number(value: float):
    value = float(value)
    if value == 0.0:
        return 0
    if value.is_integer() and abs(value) < 2.0 ** 53:
        return int(value)
    return value


def json_value(value: Value):
    if isinstance(value, Ternion):
        return [_json_number(c) for c in value]
    if isinstance(value, SplitForm):
        return {
            "z_re": _json_number(value.z_re),
            "z_im": _json_number(value.z_im),
            "r": _json_number(value.r),
        }
    return _json_number(value)


def dump_json(record) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


def format_result(value: Value, mode: str = "tuple") -> str:
    """Render a result in ``tuple``, ``split`` or ``json`` mode.

    Split values print in split notation under every non-JSON mode; in split
    mode a ternion is shown through its split form.
    """
    if mode == "json":
        return dump_json({"kind": result_kind(value), "value": json_value(value)})
    if mode not in ("tuple", "split"):
        raise ValueError(f"unknown output mode {mode!r}")
    if isinstance(value, SplitForm):
        return _format_split(value)
    if isinstance(value, Ternion):
        if mode == "split":
            return _format_split(structure.split(value))
        return "(" + ", ".join(format_number(c) for c in value) + ")"
    return format_number(value)
