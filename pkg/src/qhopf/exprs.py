"""Parser and evaluator for *-algebra expressions.

Grammar (infix, left associative):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-'* atom postfix*
    postfix := '^' '*'  |  '^' ['-'] INT
    atom    := INT | NAME | '(' expr ')'

Names: the sphere generators a, b; the base generators f0, f1; the
circle generator u; the parameters p, q.  ``^*`` is the adjoint and
binds tighter than an integer power, both tighter than ``*``.  The
three generator families cannot be mixed in one expression: base
generators are routed through their embedding, so a mixed expression
would hide which algebra the result lives in.  Negative powers exist
only for u.  Division is by scalar-valued subexpressions only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import ONE, P, Q, ParamScalar, scalar
from .s3core import AlgElement, iota_image
from .hopf import LaurentElement

__all__ = [
    "ExprError",
    "parse",
    "evaluate",
    "evaluate_algebra",
    "evaluate_scalar",
    "Num", "Sym", "Neg", "Add", "Sub", "Mul", "Div", "Pow", "Star",
]


class ExprError(ValueError):
    """Syntax or typing error, carrying the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Star:
    arg: object


_NAMES = {"a", "b", "u", "p", "q", "f0", "f1"}


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExprError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ExprError(f"trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while True:
            kind = self.peek()[0]
            if kind in ("*", "/"):
                op = self.advance()[0]
                rhs = self.factor()
                node = Mul(node, rhs) if op == "*" else Div(node, rhs)
            elif kind in ("NAME", "INT", "("):
                # juxtaposition: canonical monomials separate factors
                # with spaces, e.g. "a (1 - a a^*) b"
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        while self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] == "*":
                self.advance()
                node = Star(node)
            elif tok[0] == "-":
                self.advance()
                exp = self.expect("INT")
                node = Pow(node, -exp[1])
            elif tok[0] == "INT":
                self.advance()
                node = Pow(node, tok[1])
            else:
                raise ExprError("expected '*' or an integer after '^'",
                                tok[2])
        return node

    def atom(self):
        tok = self.advance()
        if tok[0] == "INT":
            return Num(tok[1])
        if tok[0] == "NAME":
            if tok[1] not in _NAMES:
                raise ExprError(f"unknown symbol {tok[1]!r}", tok[2])
            return Sym(tok[1])
        if tok[0] == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprError(f"unexpected token {tok[1]!r}", tok[2])


def parse(text: str):
    """Parse an expression into its AST."""
    return _Parser(text).parse()


# -- evaluation ---------------------------------------------------------------

def _families(node, found: set):
    if isinstance(node, Sym):
        if node.name in ("a", "b"):
            found.add("ab")
        elif node.name in ("f0", "f1"):
            found.add("f")
        elif node.name == "u":
            found.add("u")
    elif isinstance(node, (Neg, Star)):
        _families(node.arg, found)
    elif isinstance(node, Pow):
        _families(node.base, found)
    elif isinstance(node, (Add, Sub, Mul, Div)):
        _families(node.left, found)
        _families(node.right, found)
    return found


def _unit_like(value):
    if isinstance(value, AlgElement):
        return AlgElement.one()
    if isinstance(value, LaurentElement):
        return LaurentElement.one()
    return ONE


def _promote(value, like):
    # lift a scalar to a multiple of the unit of the other operand's algebra
    if isinstance(value, ParamScalar):
        if isinstance(like, AlgElement):
            return AlgElement.one().scale(value)
        if isinstance(like, LaurentElement):
            return LaurentElement.one() * value
    return value


def _add(xv, yv, sign):
    if isinstance(xv, ParamScalar) and not isinstance(yv, ParamScalar):
        xv = _promote(xv, yv)
    if isinstance(yv, ParamScalar) and not isinstance(xv, ParamScalar):
        yv = _promote(yv, xv)
    if type(xv) is not type(yv):
        raise ExprError("cannot add elements of different algebras", 0)
    return xv + yv if sign > 0 else xv - yv


def _mul_values(xv, yv):
    if isinstance(xv, ParamScalar) and isinstance(yv, ParamScalar):
        return xv * yv
    if isinstance(xv, ParamScalar):
        return yv * xv if isinstance(yv, LaurentElement) else yv.scale(xv)
    if isinstance(yv, ParamScalar):
        return xv * yv if isinstance(xv, LaurentElement) else xv.scale(yv)
    if type(xv) is not type(yv):
        raise ExprError("cannot multiply elements of different algebras", 0)
    from .s3core import mul
    if isinstance(xv, AlgElement):
        return mul(xv, yv)
    return xv * yv


def _eval(node):
    if isinstance(node, Num):
        return scalar(node.value)
    if isinstance(node, Sym):
        if node.name == "p":
            return P
        if node.name == "q":
            return Q
        if node.name == "u":
            return LaurentElement.u_power(1)
        if node.name in ("a", "b"):
            return AlgElement.generator(node.name)
        return iota_image(node.name)
    if isinstance(node, Neg):
        return -_eval(node.arg)
    if isinstance(node, Add):
        return _add(_eval(node.left), _eval(node.right), +1)
    if isinstance(node, Sub):
        return _add(_eval(node.left), _eval(node.right), -1)
    if isinstance(node, Mul):
        return _mul_values(_eval(node.left), _eval(node.right))
    if isinstance(node, Div):
        num, den = _eval(node.left), _eval(node.right)
        if not isinstance(den, ParamScalar):
            raise ExprError("division only by scalar expressions", 0)
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        inv = ONE / den
        return _mul_values(num, inv)
    if isinstance(node, Pow):
        base = _eval(node.base)
        k = node.exponent
        if k < 0:
            # only single u-monomials are invertible in the circle algebra
            if isinstance(base, LaurentElement) and len(base.terms) == 1:
                (j, c), = base.terms.items()
                inv = LaurentElement({-j: ONE / c})
                out = LaurentElement.one()
                for _ in range(-k):
                    out = out * inv
                return out
            raise ExprError("negative powers exist only for powers of u", 0)
        out = _unit_like(base)
        for _ in range(k):
            out = _mul_values(out, base)
        return out
    if isinstance(node, Star):
        val = _eval(node.arg)
        if isinstance(val, ParamScalar):
            return val  # the parameters are real
        return val.star()
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(text_or_node):
    """Evaluate an expression to a ParamScalar, AlgElement, or LaurentElement."""
    node = parse(text_or_node) if isinstance(text_or_node, str) else text_or_node
    fams = _families(node, set())
    if len(fams) > 1:
        raise ExprError(
            "cannot mix generator families "
            f"({', '.join(sorted(fams))}) in one expression", 0)
    return _eval(node)


def evaluate_algebra(text_or_node) -> AlgElement:
    """Evaluate and land in the sphere algebra (scalars become multiples of 1)."""
    val = evaluate(text_or_node)
    if isinstance(val, ParamScalar):
        return AlgElement.one().scale(val)
    if isinstance(val, AlgElement):
        return val
    raise ExprError("expected a sphere-algebra expression, got one in u", 0)


def evaluate_scalar(text_or_node) -> ParamScalar:
    """Evaluate an expression that must be scalar-valued."""
    val = evaluate(text_or_node)
    if not isinstance(val, ParamScalar):
        raise ExprError("expected a scalar expression", 0)
    return val
