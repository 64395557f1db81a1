"""Surface expression language for the CLI.

Grammar (precedence low to high):

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | power
    power   := primary ("^" integer)*        # integer may be negative
    primary := "A" | "B" | "I" | "q" | integer
             | "(" expr ")"
             | "[" expr "," expr "]"         # commutator
             | "<" word ">"                  # bracketed regular word

Negative powers are only defined for scalar subexpressions (multiples of
the empty word).  <W> demands a regular word and parses straight into its
canonical bracketing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .coeff import CoefficientError, QValue, RationalFunction
from .freealg import FreeElement, commutator as f_commutator, eval_monomial
from .heis import (
    GradedParts,
    LiePowerCoords,
    NormalElement,
    grade,
    normal_form,
    to_lie_power_basis,
)
from .lie import membership_generic, membership_zero
from .words import bracketing, is_regular


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    name: str  # "A" or "B"


@dataclass(frozen=True)
class Ident:
    pass


@dataclass(frozen=True)
class QSym:
    pass


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class Neg:
    arg: "Expression"


@dataclass(frozen=True)
class Add:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Sub:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Mul:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class BracketWord:
    word: str


Expression = Union[
    Letter, Ident, QSym, IntLit, Neg, Add, Sub, Mul, Pow, Commutator, BracketWord
]


# ---------------------------------------------------------------------------
# tokenizer / parser
# ---------------------------------------------------------------------------

_PUNCT = set("+-*^()[],<>")


def _tokenize(text: str):
    tokens = []  # (kind, value, pos)
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
            continue
        if c.isalpha():
            tokens.append(("name", c, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % c, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[1]), tok[2])
        return tok

    def parse(self) -> Expression:
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input %r" % tok[1], tok[2])
        return e

    def expr(self) -> Expression:
        e = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expression:
        e = self.factor()
        while self.peek()[0] == "*":
            self.next()
            e = Mul(e, self.factor())
        return e

    def factor(self) -> Expression:
        if self.peek()[0] == "-":
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self) -> Expression:
        e = self.primary()
        while self.peek()[0] == "^":
            self.next()
            sign = 1
            if self.peek()[0] == "-":
                self.next()
                sign = -1
            tok = self.expect("int")
            e = Pow(e, sign * tok[1])
        return e

    def primary(self) -> Expression:
        tok = self.next()
        kind, value, pos = tok
        if kind == "int":
            return IntLit(value)
        if kind == "name":
            if value in ("A", "B"):
                return Letter(value)
            if value == "I":
                return Ident()
            if value == "q":
                return QSym()
            raise ParseError("unknown symbol %r" % value, pos)
        if kind == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "[":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Commutator(left, right)
        if kind == "<":
            letters = []
            while self.peek()[0] == "name":
                letters.append(self.next()[1])
            close = self.expect(">")
            word = "".join(letters)
            if not word or any(c not in "AB" for c in word):
                raise ParseError("bracketed word must be nonempty over A, B", pos)
            if not is_regular(word):
                raise ParseError("%r is not a regular word" % word, pos)
            return BracketWord(word)
        raise ParseError("unexpected token %r" % (value,), pos)


def parse(text: str) -> Expression:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# pretty printer (pretty . parse == identity on ASTs)
# ---------------------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(e: Expression) -> int:
    if isinstance(e, (Add, Sub)):
        return _PREC_ADD
    if isinstance(e, Mul):
        return _PREC_MUL
    if isinstance(e, Neg):
        return _PREC_NEG
    if isinstance(e, Pow):
        return _PREC_POW
    return _PREC_ATOM


def pretty(e: Expression) -> str:
    def wrap(child: Expression, minimum: int) -> str:
        s = pretty(child)
        return "(%s)" % s if _prec(child) < minimum else s

    if isinstance(e, Letter):
        return e.name
    if isinstance(e, Ident):
        return "I"
    if isinstance(e, QSym):
        return "q"
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, Add):
        return "%s + %s" % (wrap(e.left, _PREC_ADD), wrap(e.right, _PREC_ADD + 1))
    if isinstance(e, Sub):
        return "%s - %s" % (wrap(e.left, _PREC_ADD), wrap(e.right, _PREC_ADD + 1))
    if isinstance(e, Mul):
        return "%s*%s" % (wrap(e.left, _PREC_MUL), wrap(e.right, _PREC_MUL + 1))
    if isinstance(e, Neg):
        return "-%s" % wrap(e.arg, _PREC_NEG)
    if isinstance(e, Pow):
        return "%s^%d" % (wrap(e.base, _PREC_ATOM), e.exponent)
    if isinstance(e, Commutator):
        return "[%s, %s]" % (pretty(e.left), pretty(e.right))
    if isinstance(e, BracketWord):
        return "<%s>" % e.word
    raise TypeError("unknown AST node %r" % (e,))


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def eval_free(e: Expression, q: QValue) -> FreeElement:
    """Evaluate an AST in the free algebra with scalars from Q(q)."""
    if isinstance(e, Letter):
        return FreeElement.word(e.name)
    if isinstance(e, Ident):
        return FreeElement.one()
    if isinstance(e, QSym):
        return FreeElement.word("", q.scalar())
    if isinstance(e, IntLit):
        return FreeElement.word("", RationalFunction.from_int(e.value))
    if isinstance(e, Neg):
        return -eval_free(e.arg, q)
    if isinstance(e, Add):
        return eval_free(e.left, q) + eval_free(e.right, q)
    if isinstance(e, Sub):
        return eval_free(e.left, q) - eval_free(e.right, q)
    if isinstance(e, Mul):
        return eval_free(e.left, q) * eval_free(e.right, q)
    if isinstance(e, Pow):
        base = eval_free(e.base, q)
        if e.exponent >= 0:
            return base ** e.exponent
        scalar = _as_scalar(base)
        if scalar is None:
            raise EvalError("negative power of a non-scalar expression")
        try:
            return FreeElement.word("", scalar ** e.exponent)
        except CoefficientError as exc:
            raise EvalError(str(exc)) from exc
    if isinstance(e, Commutator):
        return f_commutator(eval_free(e.left, q), eval_free(e.right, q))
    if isinstance(e, BracketWord):
        return eval_monomial(bracketing(e.word))
    raise TypeError("unknown AST node %r" % (e,))


def _as_scalar(x: FreeElement) -> Optional[RationalFunction]:
    if x.is_zero():
        return None
    if set(x.terms) == {""}:
        return x.terms[""]
    return None


@dataclass
class EvalResult:
    expression: Expression
    q: QValue
    free: FreeElement
    normal: NormalElement
    graded: GradedParts
    lie_coords: Optional[LiePowerCoords]
    membership: Optional[bool]
    membership_mode: str


def eval_expr(e: Expression, q: QValue) -> EvalResult:
    """Normal form plus the derived views the CLI prints."""
    free = eval_free(e, q)
    nf = normal_form(free, q)
    graded = grade(nf)
    lie_coords = None
    if not (q.is_zero or q.is_one):
        lie_coords = to_lie_power_basis(nf)
    membership: Optional[bool] = None
    if q.is_zero:
        mode = "zero"
        membership = membership_zero(nf)
    elif q.is_degenerate:
        mode = "degenerate"
    else:
        mode = "generic"
        membership = membership_generic(nf)
    return EvalResult(e, q, free, nf, graded, lie_coords, membership, mode)
