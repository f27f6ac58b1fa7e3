"""A small infix parser shared by the scalar, polynomial and formal-sum readers.

Grammar (implicit multiplication allowed between adjacent factors):

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/" | <implicit>) unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "{" label "}" | "[" scalar "]" | "(" expr ")"

NAME tokens are matched greedily against the caller's vocabulary, so "3Ix"
reads as 3 * I * x when both "I" and "x" are known names.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable


class ParseError(ValueError):
    pass


def tokenize(text: str, names: Iterable[str]):
    vocab = sorted(set(names), key=len, reverse=True)
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch in "+-*/^()":
            toks.append((ch, ch))
            i += 1
        elif ch in "{[":
            close = "}" if ch == "{" else "]"
            depth, j = 0, i
            while j < n:
                if text[j] == ch:
                    depth += 1
                elif text[j] == close:
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if j >= n:
                raise ParseError(f"unbalanced {ch} in {text!r}")
            toks.append(("label" if ch == "{" else "bracket", text[i + 1 : j]))
            i = j + 1
        elif ch.isalpha() or ch in "_$":
            for name in vocab:
                if text.startswith(name, i):
                    toks.append(("name", name))
                    i += len(name)
                    break
            else:
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                raise ParseError(f"unknown name {text[i:j]!r} in {text!r}")
        else:
            raise ParseError(f"unexpected character {ch!r} in {text!r}")
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        node = self.expr()
        if self.pos != len(self.toks):
            raise ParseError(f"trailing input at token {self.toks[self.pos]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op = self.take()[0]
                node = (op, node, self.unary())
            elif nxt in ("int", "name", "label", "bracket", "("):
                node = ("*", node, self.power())
            else:
                return node

    def unary(self):
        if self.peek() == "-":
            self.take()
            return ("neg", self.unary())
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() != "int":
                raise ParseError("exponent must be a nonnegative integer")
            node = ("^", node, self.take()[1])
        return node

    def atom(self):
        kind = self.peek()
        if kind is None:
            raise ParseError("unexpected end of input")
        if kind == "(":
            self.take()
            node = self.expr()
            if self.peek() != ")":
                raise ParseError("missing )")
            self.take()
            return node
        if kind in ("int", "name", "label", "bracket"):
            return self.take()
        raise ParseError(f"unexpected token {self.toks[self.pos]!r}")


def parse(text: str, names: Iterable[str]):
    return _Parser(tokenize(text, names)).parse()


def evaluate(node, leaf: Callable, divide: Callable):
    """Fold a parse tree; `leaf` maps ("int"|"name"|"label"|"bracket", value) to a value."""
    kind = node[0]
    if kind in ("int", "name", "label", "bracket"):
        return leaf(node)
    if kind == "neg":
        return -evaluate(node[1], leaf, divide)
    if kind == "^":
        base = evaluate(node[1], leaf, divide)
        out = None
        for _ in range(node[2]):
            out = base if out is None else out * base
        if out is None:
            return leaf(("int", 1))
        return out
    lhs = evaluate(node[1], leaf, divide)
    rhs = evaluate(node[2], leaf, divide)
    if kind == "+":
        return lhs + rhs
    if kind == "-":
        return lhs - rhs
    if kind == "*":
        return lhs * rhs
    if kind == "/":
        return divide(lhs, rhs)
    raise ParseError(f"bad node {kind}")


def evaluate_scalar(text: str, ring):
    from .scalars import NeutroScalar

    def leaf(tok):
        if tok[0] == "int":
            return NeutroScalar(ring, tok[1], 0)
        if tok[0] == "name" and tok[1] == "I":
            return NeutroScalar.indeterminate(ring)
        raise ParseError(f"{tok[1]!r} is not part of a scalar")

    def divide(x, y):
        if ring.kind == "Z" and y.b == 0 and y.a != 0:
            # allow p/q in Z only when it is exact
            q = Fraction(x.a, y.a), Fraction(x.b, y.a)
            if q[0].denominator == 1 and q[1].denominator == 1:
                return NeutroScalar(ring, q[0], q[1])
        return x / y

    return evaluate(parse(text, ["I"]), leaf, divide)
