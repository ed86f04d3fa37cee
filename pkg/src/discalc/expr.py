"""A small closed-form language over the deformed basis.

Basis nodes are the falling powers [x]^n, exponentials c^x, the deformed
trig pair sin(a.x)/cos(a.x), log, plus sums and products.  The dotted
argument in ``sin(3.x)`` marks the deformed frequency; ``sin(3*x)`` is
deliberately rejected because the two are different functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numcore import (
    DomainError,
    exp_trig_rational,
    falling_power,
    log_discrete,
    reciprocal,
)


class ParseError(ValueError):
    """Syntax error; carries the byte offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class NoClosedFormError(ValueError):
    """Raised when no closed-form antiderivative exists in the basis."""


# ---------------------------------------------------------------------------
# Tree nodes


@dataclass(frozen=True)
class Const:
    value: object  # Fraction (exact path) or float


@dataclass(frozen=True)
class FallingPower:
    n: int


@dataclass(frozen=True)
class PlainPower:
    n: int


@dataclass(frozen=True)
class ExpBase:
    c: Fraction


@dataclass(frozen=True)
class Trig:
    kind: str  # "sin" or "cos"
    a: int


@dataclass(frozen=True)
class Log:
    pass


@dataclass(frozen=True)
class Reciprocal:
    """Derivative of log; float-valued."""


@dataclass(frozen=True)
class Shift:
    """f(x+1); produced by the product rule, printable but not parseable."""

    inner: object


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


def make_sum(terms) -> object:
    flat = []
    for t in terms:
        if isinstance(t, Sum):
            flat.extend(t.terms)
        elif isinstance(t, Const) and t.value == 0:
            continue
        else:
            flat.append(t)
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def make_product(factors) -> object:
    coeff = Fraction(1)
    rest = []
    for f in factors:
        if isinstance(f, Product):
            fs = f.factors
        else:
            fs = (f,)
        for g in fs:
            if isinstance(g, Const):
                coeff *= g.value
            else:
                rest.append(g)
    if coeff == 0:
        return ZERO
    if not rest:
        return Const(coeff)
    if coeff != 1:
        rest = [Const(coeff)] + rest
    if len(rest) == 1:
        return rest[0]
    return Product(tuple(rest))


def scale(c, node) -> object:
    return make_product([Const(Fraction(c)), node])


def negate(node) -> object:
    if isinstance(node, Const):
        return Const(-node.value)
    if isinstance(node, Product) and isinstance(node.factors[0], Const):
        return make_product([Const(-node.factors[0].value)] + list(node.factors[1:]))
    return make_product([Const(Fraction(-1)), node])


# ---------------------------------------------------------------------------
# Parser

_SYMBOLS = "+-*^()[]./"


def _tokenize(text: str):
    tokens = []  # (kind, value, position)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("number", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if ch == "·":  # middle dot, same as '.'
            tokens.append(("dot", ".", i))
            i += 1
            continue
        if ch == ".":
            tokens.append(("dot", ".", i))
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        if not text.strip():
            raise ParseError("empty expression", 0)
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self):
        negated = False
        if self.peek()[0] == "-":
            self.next()
            negated = True
        terms = [self.term()]
        if negated:
            terms[0] = negate(terms[0])
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            t = self.term()
            terms.append(negate(t) if op == "-" else t)
        return make_sum(terms)

    def term(self):
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.next()
            factors.append(self.factor())
        return make_product(factors)

    def number(self):
        tok = self.expect("number")
        value = Fraction(tok[1])
        if self.peek()[0] == "/" and self.tokens[self.pos + 1][0] == "number":
            self.next()
            den = self.next()[1]
            if den == 0:
                raise ParseError("zero denominator", tok[2])
            value = Fraction(tok[1], den)
        return value, tok[2]

    def factor(self):
        tok = self.peek()
        if tok[0] == "number":
            value, pos = self.number()
            if self.peek()[0] == "^":
                self.next()
                nxt = self.next()
                if nxt[0] == "ident" and nxt[1] == "x":
                    return ExpBase(value)
                if nxt[0] == "number":
                    return Const(value ** nxt[1])
                raise ParseError("expected exponent after '^'", nxt[2])
            return Const(value)
        atom = self.atom()
        if self.peek()[0] == "^":
            self.next()
            nxt = self.next()
            if nxt[0] != "number":
                raise ParseError("expected integer exponent", nxt[2])
            n = nxt[1]
            if isinstance(atom, FallingPower):
                return FallingPower(n)
            if isinstance(atom, PlainPower):
                return PlainPower(n) if n >= 1 else Const(Fraction(1))
            raise ParseError("'^' only applies to x, [x] or a number", nxt[2])
        return atom

    def atom(self):
        tok = self.next()
        if tok[0] == "(":
            node = self.expr()
            self.expect(")")
            return node
        if tok[0] == "[":
            nxt = self.next()
            if nxt[0] != "ident" or nxt[1] != "x":
                raise ParseError("expected 'x' inside brackets", nxt[2])
            self.expect("]")
            return FallingPower(1)
        if tok[0] == "ident":
            name = tok[1]
            if name == "x":
                return PlainPower(1)
            if name in ("sin", "cos", "exp"):
                self.expect("(")
                negative = False
                if self.peek()[0] == "-":
                    self.next()
                    negative = True
                num = self.next()
                if num[0] != "number":
                    raise ParseError(f"{name} needs a dotted argument like {name}(2.x)", num[2])
                dot = self.next()
                if dot[0] != "dot":
                    raise ParseError(f"{name}({num[1]}*x) is not {name}({num[1]}.x); use the dotted form", dot[2])
                var = self.next()
                if var[0] != "ident" or var[1] != "x":
                    raise ParseError("expected 'x' after the dot", var[2])
                self.expect(")")
                a = -num[1] if negative else num[1]
                if name == "exp":
                    return ExpBase(Fraction(1 + a))
                if a == 0:
                    raise ParseError("trig frequency must be nonzero", num[2])
                return Trig(name, a)
            if name == "log":
                self.expect("(")
                var = self.next()
                if var[0] != "ident" or var[1] != "x":
                    raise ParseError("log takes the bare variable x", var[2])
                self.expect(")")
                return Log()
            raise ParseError(f"unknown identifier {name!r}", tok[2])
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse(text: str):
    """Parse the surface grammar into an expression tree."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printing (inverse of parse for all parseable trees)


def _print_factor(node) -> str:
    if isinstance(node, Sum):
        return "(" + to_string(node) + ")"
    return to_string(node)


def to_string(node) -> str:
    if isinstance(node, Const):
        v = node.value
        if isinstance(v, Fraction):
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return repr(v)
    if isinstance(node, FallingPower):
        return "[x]" if node.n == 1 else f"[x]^{node.n}"
    if isinstance(node, PlainPower):
        return "x" if node.n == 1 else f"x^{node.n}"
    if isinstance(node, ExpBase):
        c = node.c
        if c < 0 and c.denominator == 1:
            return f"exp({c.numerator - 1}.x)"  # negative base has no '^x' spelling
        base = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return f"{base}^x"
    if isinstance(node, Trig):
        return f"{node.kind}({node.a}.x)"
    if isinstance(node, Log):
        return "log(x)"
    if isinstance(node, Reciprocal):
        return "recip(x)"
    if isinstance(node, Shift):
        return f"shift({to_string(node.inner)})"
    if isinstance(node, Product):
        factors = list(node.factors)
        if isinstance(factors[0], Const):
            c = factors[0].value
            if isinstance(c, Fraction) and c < 0:
                pos = make_product([Const(-c)] + factors[1:])
                return "-" + to_string(pos)
        return "*".join(_print_factor(f) for f in factors)
    if isinstance(node, Sum):
        parts = []
        for i, t in enumerate(node.terms):
            s = to_string(t)
            if i == 0:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(" - " + s[1:])
            else:
                parts.append(" + " + s)
        return "".join(parts)
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Evaluation


def _norm(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def evaluate(node, x: int):
    """Exact evaluation at an integer point (floats only via log/recip)."""
    if isinstance(node, Const):
        return _norm(node.value)
    if isinstance(node, FallingPower):
        return falling_power(x, node.n) if x >= 0 or node.n >= 0 else falling_power(x, node.n)
    if isinstance(node, PlainPower):
        return x ** node.n
    if isinstance(node, ExpBase):
        if node.c == 0 and x < 0:
            raise DomainError("0^x undefined for negative x")
        return _norm(node.c ** x)
    if isinstance(node, Trig):
        z = exp_trig_rational(node.a, x)
        return _norm(z.im if node.kind == "sin" else z.re)
    if isinstance(node, Log):
        return log_discrete(x)
    if isinstance(node, Reciprocal):
        return reciprocal(x)
    if isinstance(node, Shift):
        return evaluate(node.inner, x + 1)
    if isinstance(node, Sum):
        total = 0
        for t in node.terms:
            total = total + evaluate(t, x)
        return _norm(total)
    if isinstance(node, Product):
        total = 1
        for f in node.factors:
            total = total * evaluate(f, x)
        return _norm(total)
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Falling-power basis rewrite (Stirling-type expansion via Newton-Gregory)


def from_difference_table(coeffs):
    """Build sum_k coeffs[k] [x]^k / k! from a difference table."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        weight = Fraction(c) / math.factorial(k) if not isinstance(c, float) else c / math.factorial(k)
        if k == 0:
            terms.append(Const(weight))
        else:
            terms.append(make_product([Const(weight), FallingPower(k)]))
    return make_sum(terms)


def plain_to_falling(n: int):
    """Rewrite x^n in the falling-power basis, e.g. x^2 = [x]^2 + [x]."""
    from .interpolate import forward_differences
    from .numcore import Sequence

    samples = Sequence(0, tuple(k ** n for k in range(n + 1)))
    return from_difference_table(forward_differences(samples).coeffs)


# ---------------------------------------------------------------------------
# Symbolic derivative


def derivative(node):
    """The forward-difference derivative, applied symbolically."""
    if isinstance(node, Const):
        return ZERO
    if isinstance(node, FallingPower):
        if node.n == 0:
            return ZERO
        base = FallingPower(node.n - 1) if node.n > 1 else FallingPower(1)
        if node.n == 1:
            return ONE
        return scale(node.n, base)
    if isinstance(node, PlainPower):
        return derivative(plain_to_falling(node.n))
    if isinstance(node, ExpBase):
        return scale(node.c - 1, node)
    if isinstance(node, Trig):
        if node.kind == "sin":
            return scale(node.a, Trig("cos", node.a))
        return scale(-node.a, Trig("sin", node.a))
    if isinstance(node, Log):
        return Reciprocal()
    if isinstance(node, Shift):
        return Shift(derivative(node.inner))
    if isinstance(node, Sum):
        return make_sum([derivative(t) for t in node.terms])
    if isinstance(node, Product):
        f = node.factors[0]
        g = make_product(list(node.factors[1:]))
        # D(f g) = Df g + f(x+1) Dg
        return make_sum([
            make_product([derivative(f), g]),
            make_product([Shift(f) if not isinstance(f, Const) else f, derivative(g)]),
        ])
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Antiderivative (normalized so that F(0) = 0)


def antiderivative(node):
    """Closed-form F with DF = f and F(0) = 0, when the basis admits one."""
    if isinstance(node, Const):
        return make_product([node, FallingPower(1)])
    if isinstance(node, FallingPower):
        return scale(Fraction(1, node.n + 1), FallingPower(node.n + 1))
    if isinstance(node, PlainPower):
        return antiderivative(plain_to_falling(node.n))
    if isinstance(node, ExpBase):
        if node.c == 1:
            return FallingPower(1)
        w = Fraction(1) / (node.c - 1)
        return make_sum([scale(w, node), Const(-w)])
    if isinstance(node, Trig):
        a = Fraction(node.a)
        if node.kind == "sin":
            # S sin(a.x) = (1 - cos(a.x))/a
            return make_sum([Const(1 / a), scale(-1 / a, Trig("cos", node.a))])
        return scale(1 / a, Trig("sin", node.a))
    if isinstance(node, Sum):
        return make_sum([antiderivative(t) for t in node.terms])
    if isinstance(node, Product):
        consts = [f for f in node.factors if isinstance(f, Const)]
        rest = [f for f in node.factors if not isinstance(f, Const)]
        if len(rest) == 1:
            return make_product(consts + [antiderivative(rest[0])])
        raise NoClosedFormError(f"no closed-form antiderivative for {to_string(node)}")
    raise NoClosedFormError(f"no closed-form antiderivative for {to_string(node)}")


def definite_sum(node, lo: int, hi: int):
    """sum_{k=lo}^{hi-1} f(k); via the antiderivative when one exists.

    When a closed form is available both routes are computed and must agree.
    """
    if lo > hi:
        raise DomainError("definite_sum needs lo <= hi")
    direct = 0
    for k in range(lo, hi):
        direct = direct + evaluate(node, k)
    direct = _norm(direct)
    try:
        anti = antiderivative(node)
    except NoClosedFormError:
        return direct
    closed = _norm(evaluate(anti, hi) - evaluate(anti, lo))
    if isinstance(closed, float) or isinstance(direct, float):
        if not math.isclose(closed, direct, rel_tol=1e-9, abs_tol=1e-9):
            raise ArithmeticError(f"antiderivative route {closed} != direct sum {direct}")
    elif closed != direct:
        raise ArithmeticError(f"antiderivative route {closed} != direct sum {direct}")
    return direct
