"""Exact base rings (Z, Q, Z/n) and scalars a + bI with I*I = I."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

Value = Union[int, Fraction]


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class BaseRing:
    """One of Z, Q or Z/n. Values are plain ints (Z, Z/n) or Fractions (Q)."""

    kind: str  # "Z", "Q" or "Zn"
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zn"):
            raise ValueError(f"unknown base ring kind {self.kind!r}")
        if self.kind == "Zn":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError("Z/n needs an integer modulus >= 2")
        elif self.modulus is not None:
            raise ValueError("only Z/n takes a modulus")

    # -- canonical values -------------------------------------------------
    def elem(self, v) -> Value:
        if self.kind == "Zn":
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    return self.div(v.numerator, v.denominator)
                v = v.numerator
            return int(v) % self.modulus
        if self.kind == "Z":
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"{v} is not an integer")
                return v.numerator
            return int(v)
        return Fraction(v)

    @property
    def is_finite(self) -> bool:
        return self.kind == "Zn"

    @property
    def order(self) -> Optional[int]:
        return self.modulus if self.kind == "Zn" else None

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == "Zn" else 0

    def is_field(self) -> bool:
        if self.kind == "Q":
            return True
        if self.kind == "Z":
            return False
        n = self.modulus
        return n > 1 and all(n % p for p in range(2, math.isqrt(n) + 1))

    def elements(self) -> Iterator[Value]:
        if self.kind != "Zn":
            raise ValueError(f"{self} is infinite")
        return iter(range(self.modulus))

    def zero(self) -> Value:
        return self.elem(0)

    def one(self) -> Value:
        return self.elem(1)

    # -- arithmetic -------------------------------------------------------
    def add(self, x: Value, y: Value) -> Value:
        return self.elem(x + y)

    def sub(self, x: Value, y: Value) -> Value:
        return self.elem(x - y)

    def neg(self, x: Value) -> Value:
        return self.elem(-x)

    def mul(self, x: Value, y: Value) -> Value:
        return self.elem(x * y)

    def is_unit(self, x: Value) -> bool:
        if self.kind == "Q":
            return x != 0
        if self.kind == "Z":
            return x in (1, -1)
        return math.gcd(x, self.modulus) == 1

    def inv(self, x: Value) -> Value:
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{self.fmt(x)} is not a unit in {self}")
        if self.kind == "Q":
            return 1 / Fraction(x)
        if self.kind == "Z":
            return x
        return pow(x, -1, self.modulus)

    def div(self, x: Value, y: Value) -> Value:
        return self.mul(x, self.inv(self.elem(y)))

    def is_zero_divisor(self, x: Value) -> bool:
        """Nonzero x with some nonzero y such that x*y = 0."""
        if x == 0 or self.kind != "Zn":
            return False
        return math.gcd(x, self.modulus) != 1

    def is_idempotent(self, x: Value) -> bool:
        return self.mul(x, x) == x

    def is_nilpotent(self, x: Value) -> bool:
        if x == 0:
            return True
        if self.kind != "Zn":
            return False
        return pow(x, self.modulus.bit_length() + 1, self.modulus) == 0

    # -- text -------------------------------------------------------------
    def fmt(self, x: Value) -> str:
        if isinstance(x, Fraction) and x.denominator != 1:
            return f"{x.numerator}/{x.denominator}"
        return str(int(x))

    def parse(self, s: str) -> Value:
        s = s.strip()
        if "/" in s:
            p, q = s.split("/", 1)
            return self.elem(Fraction(int(p), int(q)))
        return self.elem(int(s))

    def __str__(self):
        return f"Z{self.modulus}" if self.kind == "Zn" else self.kind


ZZ = BaseRing("Z")
QQ = BaseRing("Q")


def Zmod(n: int) -> BaseRing:
    return BaseRing("Zn", n)


def base_ring_from_name(name) -> BaseRing:
    """Accepts "Z", "Q", "Zn:5", "Z5", "z5" or {"Zn": 5}."""
    if isinstance(name, BaseRing):
        return name
    if isinstance(name, dict):
        return Zmod(int(name["Zn"]))
    s = str(name).strip()
    if s.upper() == "Z":
        return ZZ
    if s.upper() == "Q":
        return QQ
    for prefix in ("Zn:", "zn:", "Z", "z"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return Zmod(int(s[len(prefix):]))
    raise ValueError(f"cannot read base ring {name!r}")


class NeutroScalar:
    """a + bI over a base ring."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: BaseRing, a=0, b=0):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "a", ring.elem(a))
        object.__setattr__(self, "b", ring.elem(b))

    def __setattr__(self, name, value):
        raise AttributeError("NeutroScalar is immutable")

    @classmethod
    def indeterminate(cls, ring: BaseRing) -> "NeutroScalar":
        return cls(ring, 0, 1)

    def _check(self, other) -> "NeutroScalar":
        if isinstance(other, (int, Fraction)):
            return NeutroScalar(self.ring, other, 0)
        if not isinstance(other, NeutroScalar):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        r = self.ring
        return NeutroScalar(r, r.add(self.a, o.a), r.add(self.b, o.b))

    __radd__ = __add__

    def __neg__(self):
        return NeutroScalar(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        return NeutroScalar(self.ring, a * c, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = NeutroScalar(self.ring, 1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == self.ring.elem(other)
        if not isinstance(other, NeutroScalar):
            return NotImplemented
        return self.ring == other.ring and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.ring, self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sort_key(self):
        return (self.a, self.b)

    # -- structure ----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self

    @property
    def has_indeterminate(self) -> bool:
        return self.b != 0

    def split(self) -> tuple:
        """The isomorphism a + bI -> (a, a + b) onto R x R."""
        return (self.a, self.ring.add(self.a, self.b))

    @classmethod
    def unsplit(cls, pair, ring: BaseRing) -> "NeutroScalar":
        u, v = pair
        return cls(ring, u, ring.sub(ring.elem(v), ring.elem(u)))

    def is_unit(self) -> bool:
        u, v = self.split()
        return self.ring.is_unit(u) and self.ring.is_unit(v)

    def inverse(self) -> "NeutroScalar":
        u, v = self.split()
        r = self.ring
        if not (r.is_unit(u) and r.is_unit(v)):
            raise ZeroDivisionError(f"{self} is not invertible over {r}")
        return NeutroScalar.unsplit((r.inv(u), r.inv(v)), r)

    def is_idempotent(self) -> bool:
        return self * self == self

    def __repr__(self):
        return f"NeutroScalar({self})"

    def __str__(self):
        r = self.ring
        a, b = self.a, self.b
        if b == 0:
            return r.fmt(a)
        if b == 1:
            bpart = "I"
        elif b == -1:
            bpart = "-I"
        else:
            bpart = r.fmt(b) + "I"
        if a == 0:
            return bpart
        if bpart.startswith("-"):
            return f"{r.fmt(a)}{bpart}"
        return f"{r.fmt(a)}+{bpart}"


def scalar(ring: BaseRing, a=0, b=0) -> NeutroScalar:
    return NeutroScalar(ring, a, b)


def all_scalars(ring: BaseRing) -> list:
    """Every element of <Z/n u I>, in lexicographic (a, b) order."""
    return [NeutroScalar(ring, a, b) for a in ring.elements() for b in ring.elements()]


def classify_unit(x: NeutroScalar) -> Optional[NeutroScalar]:
    """The inverse of x when it exists."""
    return x.inverse() if x.is_unit() else None


def is_idempotent(x: NeutroScalar) -> bool:
    return x.is_idempotent()


# -- zero divisors ----------------------------------------------------------

ZD_NONE = "None"
ZD_TRIVIAL = "TrivialNeutrosophic"
ZD_NEUTRO = "Neutrosophic"
ZD_SEMI = "SemiNeutrosophic"
ZD_PLAIN = "Plain"

_ZD_RANK = {ZD_TRIVIAL: 0, ZD_NEUTRO: 1, ZD_SEMI: 2, ZD_PLAIN: 3}


@dataclass(frozen=True)
class ZeroDivisorClass:
    tag: str
    witness: Optional[NeutroScalar] = None


def _is_a_minus_aI(x: NeutroScalar) -> bool:
    return x.a != 0 and x.ring.add(x.a, x.b) == 0


def _is_pure_indeterminate(x: NeutroScalar) -> bool:
    return x.a == 0 and x.b != 0


def zero_divisor_pair_tag(x: NeutroScalar, y: NeutroScalar) -> str:
    """Tag of a factorisation x*y = 0 with x, y nonzero."""
    if (_is_a_minus_aI(x) and _is_pure_indeterminate(y)) or (
        _is_pure_indeterminate(x) and _is_a_minus_aI(y)
    ):
        return ZD_TRIVIAL
    if x.b != 0 and y.b != 0:
        return ZD_NEUTRO
    if x.a != 0 and x.b != 0 and y.b == 0:
        return ZD_SEMI
    return ZD_PLAIN


def classify_zero_divisor(
    x: NeutroScalar, witness: Optional[NeutroScalar] = None
) -> ZeroDivisorClass:
    """Classify x as a zero divisor, optionally against a given witness.

    Without a witness over Z/n every scalar is tried and the best-ranked tag
    wins (trivial, neutrosophic, semi, plain), ties broken by (a, b) order.
    Over Z and Q the split components decide: a zero component is the only
    way to be a zero divisor there.
    """
    ring = x.ring
    if witness is not None:
        if witness.ring != ring:
            raise RingMismatch(f"{ring} vs {witness.ring}")
        if x.is_zero or witness.is_zero or not (x * witness).is_zero:
            raise ValueError(f"({x})*({witness}) is not a product of nonzero factors equal to 0")
        return ZeroDivisorClass(zero_divisor_pair_tag(x, witness), witness)
    if x.is_zero:
        return ZeroDivisorClass(ZD_NONE)
    if not ring.is_finite:
        u, v = x.split()
        if u == 0:
            y = NeutroScalar.unsplit((1, 0), ring)
        elif v == 0:
            y = NeutroScalar.indeterminate(ring)
        else:
            return ZeroDivisorClass(ZD_NONE)
        return ZeroDivisorClass(zero_divisor_pair_tag(x, y), y)
    best = None
    for y in all_scalars(ring):
        if y.is_zero or not (x * y).is_zero:
            continue
        tag = zero_divisor_pair_tag(x, y)
        if best is None or _ZD_RANK[tag] < _ZD_RANK[best[0]]:
            best = (tag, y)
            if tag == ZD_TRIVIAL:
                break
    if best is None:
        return ZeroDivisorClass(ZD_NONE)
    return ZeroDivisorClass(best[0], best[1])


def parse_scalar(text: str, ring: BaseRing) -> NeutroScalar:
    """Read strings such as "2+3I", "-I", "5/19", "14-6I"."""
    from .expr import evaluate_scalar

    return evaluate_scalar(text, ring)
