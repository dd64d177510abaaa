"""Expression language for the CLI.

Grammar (full EBNF shipped in docs/grammar.ebnf):

    expr     = term { ("+" | "-") term } ;
    term     = factor { "*" factor } ;
    factor   = "-" factor | power ;
    power    = atom [ "^" exponent ] ;
    exponent = [ "-" ] INT ;
    atom     = INT [ "/" INT ] | "i" | "t" | "q" | generator | "zeta"
             | "(" expr ")" ;
    generator = "a" | "b" | "c" | "d" | "s" ;

Juxtaposition is not multiplication; "*" is required.  Negative exponents
are only meaningful on t and q.  The letter q is eliminated at parse time
through q = -t^2, so no AST node ever carries it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .algebra import Element, zeta as zeta_element
from .scalars import Scalar


class ExprError(ValueError):
    """Lexical or syntax error, carrying the byte offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class ImagUnit:
    pass


@dataclass(frozen=True)
class TPow:
    exp: int


@dataclass(frozen=True)
class Gen:
    name: str  # a, b, c, d, s


@dataclass(frozen=True)
class Zeta:
    pass


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


Expr = Union[Num, ImagUnit, TPow, Gen, Zeta, Add, Sub, Mul, Neg, Pow]

_WORDS = {"i", "t", "q", "a", "b", "c", "d", "s", "zeta"}


def _lex(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("INT", text[start:pos], start))
            continue
        if ch.isalpha():
            start = pos
            while pos < n and text[pos].isalpha():
                pos += 1
            word = text[start:pos]
            if word not in _WORDS:
                raise ExprError(f"unknown symbol {word!r}", start)
            tokens.append(("WORD", word, start))
            continue
        if ch in "+-*^/()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise ExprError(f"unexpected character {ch!r}", pos)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ExprError(f"trailing input {tok[1]!r}", tok[2])
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek()[0] == "*":
            self.next()
            e = Mul(e, self.factor())
        return e

    def factor(self) -> Expr:
        if self.peek()[0] == "-":
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self) -> Expr:
        base, kind = self.atom()
        exp: Optional[int] = None
        if self.peek()[0] == "^":
            self.next()
            exp = self.exponent()
        if kind == "t":
            return TPow(exp if exp is not None else 1)
        if kind == "q":
            n = exp if exp is not None else 1
            node: Expr = TPow(2 * n)
            return Neg(node) if n % 2 else node
        if exp is None:
            return base
        if exp < 0:
            tok = self.peek()
            raise ExprError("negative exponents are only defined for t and q",
                            tok[2])
        return Pow(base, exp)

    def exponent(self) -> int:
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        tok = self.expect("INT")
        return sign * int(tok[1])

    def atom(self) -> Tuple[Expr, str]:
        tok = self.next()
        kind, val, pos = tok
        if kind == "INT":
            if self.peek()[0] == "/":
                self.next()
                den = self.expect("INT")
                if int(den[1]) == 0:
                    raise ExprError("zero denominator", den[2])
                return Num(Fraction(int(val), int(den[1]))), ""
            return Num(Fraction(int(val))), ""
        if kind == "WORD":
            if val == "i":
                return ImagUnit(), ""
            if val == "t":
                return TPow(1), "t"
            if val == "q":
                return TPow(2), "q"
            if val == "zeta":
                return Zeta(), ""
            return Gen(val), ""
        if kind == "(":
            e = self.expr()
            self.expect(")")
            return e, ""
        raise ExprError(f"unexpected token {val!r}", pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- printing ------------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _PREC_ADD
    if isinstance(e, Mul):
        return _PREC_MUL
    if isinstance(e, Neg):
        return _PREC_NEG
    if isinstance(e, Pow):
        return _PREC_POW
    if isinstance(e, Num) and e.value.denominator != 1:
        return _PREC_POW  # fractions bind like powers (contain '/')
    if isinstance(e, TPow) and e.exp != 1:
        return _PREC_POW
    return _PREC_ATOM


def _wrap(e: Expr, parent_prec: int) -> str:
    s = to_text(e)
    if _prec(e) < parent_prec:
        return f"({s})"
    return s


def to_text(e: Expr) -> str:
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, ImagUnit):
        return "i"
    if isinstance(e, TPow):
        return "t" if e.exp == 1 else f"t^{e.exp}"
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Zeta):
        return "zeta"
    if isinstance(e, Add):
        return f"{_wrap(e.left, _PREC_ADD)} + {_wrap(e.right, _PREC_ADD + 1)}"
    if isinstance(e, Sub):
        return f"{_wrap(e.left, _PREC_ADD)} - {_wrap(e.right, _PREC_ADD + 1)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, _PREC_MUL)}*{_wrap(e.right, _PREC_MUL + 1)}"
    if isinstance(e, Neg):
        return f"-{_wrap(e.arg, _PREC_NEG + 1)}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _PREC_ATOM)}^{e.exp}"
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation ------------------------------------------------------------------

def to_element(e: Expr, ring: str = "Asigma") -> Element:
    if isinstance(e, Num):
        return Element.scalar(Scalar.from_rational(e.value), ring)
    if isinstance(e, ImagUnit):
        return Element.scalar(Scalar.from_gauss(0, 1), ring)
    if isinstance(e, TPow):
        return Element.scalar(Scalar.t_power(e.exp), ring)
    if isinstance(e, Gen):
        name = "sigma" if e.name == "s" else e.name
        return Element.generator(name, ring)
    if isinstance(e, Zeta):
        if ring == "B":
            raise ValueError("zeta needs sigma: use ring Bsigma or Asigma")
        return zeta_element(ring)
    if isinstance(e, Add):
        return to_element(e.left, ring) + to_element(e.right, ring)
    if isinstance(e, Sub):
        return to_element(e.left, ring) - to_element(e.right, ring)
    if isinstance(e, Mul):
        return to_element(e.left, ring) * to_element(e.right, ring)
    if isinstance(e, Neg):
        return -to_element(e.arg, ring)
    if isinstance(e, Pow):
        return to_element(e.base, ring) ** e.exp
    raise TypeError(f"not an expression: {e!r}")


def eval_text(text: str, ring: str = "Asigma") -> Element:
    return to_element(parse(text), ring)


def random_ast(rng, depth: int = 3) -> Expr:
    """Random expression tree for the round-trip property."""
    leaves = [
        lambda: Num(Fraction(rng.randint(0, 9))),
        lambda: Num(Fraction(rng.randint(1, 9), rng.randint(2, 9))),
        lambda: ImagUnit(),
        lambda: TPow(rng.randint(-4, 4) or 1),
        lambda: Gen(rng.choice("abcds")),
        lambda: Zeta(),
    ]
    if depth <= 0:
        return rng.choice(leaves)()
    roll = rng.random()
    if roll < 0.25:
        return Add(random_ast(rng, depth - 1), random_ast(rng, depth - 1))
    if roll < 0.45:
        return Sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1))
    if roll < 0.7:
        return Mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1))
    if roll < 0.8:
        return Neg(random_ast(rng, depth - 1))
    if roll < 0.9:
        base = random_ast(rng, depth - 1)
        if isinstance(base, TPow):
            # the parser folds t^k into one node, so a power of bare t
            # would not round-trip as a Pow node
            base = Gen(rng.choice("abcds"))
        return Pow(base, rng.randint(0, 4))
    return rng.choice(leaves)()
