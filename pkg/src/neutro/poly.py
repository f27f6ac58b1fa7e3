"""Polynomials in one or more variables with coefficients a + bI."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .expr import ParseError, evaluate, parse
from .scalars import QQ, ZZ, BaseRing, NeutroScalar, RingMismatch

NEG_INF = float("-inf")


class _Unknown:
    """Returned when a question cannot be settled within the search bounds."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


def default_vars(nvars: int) -> tuple:
    return ("x",) if nvars == 1 else tuple(f"x{i + 1}" for i in range(nvars))


class NeutroPoly:
    __slots__ = ("ring", "nvars", "terms", "var_names")

    def __init__(self, ring: BaseRing, terms=None, nvars: int = 1, var_names: Optional[Sequence[str]] = None):
        self.ring = ring
        self.nvars = nvars
        self.var_names = tuple(var_names) if var_names else default_vars(nvars)
        if len(self.var_names) != nvars:
            raise ValueError("one name per variable")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp}")
            if not isinstance(c, NeutroScalar):
                c = NeutroScalar(ring, c)
            elif c.ring != ring:
                raise RingMismatch(f"{c.ring} vs {ring}")
            if not c.is_zero:
                clean[exp] = clean[exp] + c if exp in clean else c
                if clean[exp].is_zero:
                    del clean[exp]
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, ring, c, nvars=1, var_names=None):
        return cls(ring, {(0,) * nvars: c}, nvars, var_names)

    @classmethod
    def variable(cls, ring, k=0, nvars=1, var_names=None):
        exp = tuple(1 if i == k else 0 for i in range(nvars))
        return cls(ring, {exp: 1}, nvars, var_names)

    @classmethod
    def from_coeffs(cls, ring, coeffs: Sequence):
        """Univariate polynomial c0 + c1 x + c2 x^2 + ..."""
        return cls(ring, {(i,): c for i, c in enumerate(coeffs)})

    def _like(self, terms):
        return NeutroPoly(self.ring, terms, self.nvars, self.var_names)

    def _coerce(self, other):
        if isinstance(other, NeutroPoly):
            if other.ring != self.ring or other.nvars != self.nvars:
                raise RingMismatch("polynomials over different rings or variable counts")
            return other
        if isinstance(other, (int, Fraction, NeutroScalar)):
            return NeutroPoly.constant(self.ring, other, self.nvars, self.var_names)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.nvars == 1:
            return self._like(_convolve(self, o))
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = NeutroPoly.constant(self.ring, 1, self.nvars, self.var_names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, NeutroScalar)):
            other = self._coerce(other)
        if not isinstance(other, NeutroPoly):
            return NotImplemented
        return self.ring == other.ring and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.nvars, frozenset(self.terms.items())))

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        return max((sum(e) for e in self.terms), default=NEG_INF)

    def coeff(self, exp) -> NeutroScalar:
        if isinstance(exp, int):
            exp = (exp,)
        return self.terms.get(tuple(exp), NeutroScalar(self.ring))

    def coeffs(self) -> list:
        """Dense coefficient list for a univariate polynomial."""
        if self.nvars != 1:
            raise ValueError("dense coefficients need one variable")
        if self.is_zero():
            return []
        return [self.coeff(i) for i in range(int(self.degree) + 1)]

    def leading_coeff(self) -> NeutroScalar:
        if self.nvars != 1:
            raise ValueError("leading coefficient needs one variable")
        return self.coeff(int(self.degree)) if self.terms else NeutroScalar(self.ring)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def split(self) -> tuple:
        """Coefficientwise split: two classical polynomials as {exp: value} maps."""
        left, right = {}, {}
        for e, c in self.terms.items():
            u, v = c.split()
            if u != 0:
                left[e] = u
            if v != 0:
                right[e] = v
        return left, right

    @classmethod
    def unsplit(cls, pair, ring, nvars=1, var_names=None):
        left, right = pair
        terms = {}
        for e in set(left) | set(right):
            terms[e] = NeutroScalar.unsplit((left.get(e, 0), right.get(e, 0)), ring)
        return cls(ring, terms, nvars, var_names)

    # -- text -------------------------------------------------------------
    def _monomial(self, exp) -> str:
        parts = []
        for name, k in zip(self.var_names, exp):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            mono = self._monomial(exp)
            cs = str(c)
            if not mono:
                text = cs
            elif cs == "1":
                text = mono
            elif cs == "-1":
                text = "-" + mono
            elif c.a != 0 and c.b != 0:
                text = f"({cs}){mono}"
            else:
                text = cs + mono
            pieces.append(text)
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"NeutroPoly({self})"


def _convolve(p: NeutroPoly, q: NeutroPoly) -> dict:
    """C_t = sum of a_i b_(t-i), univariate."""
    if p.is_zero() or q.is_zero():
        return {}
    a, b = p.coeffs(), q.coeffs()
    zero = NeutroScalar(p.ring)
    out = {}
    for t in range(len(a) + len(b) - 1):
        acc = zero
        for i in range(max(0, t - len(b) + 1), min(t, len(a) - 1) + 1):
            acc = acc + a[i] * b[t - i]
        if not acc.is_zero:
            out[(t,)] = acc
    return out


def poly_add(p: NeutroPoly, q: NeutroPoly) -> NeutroPoly:
    return p + q


def poly_mul(p: NeutroPoly, q: NeutroPoly) -> NeutroPoly:
    return p * q


def brute_force_mul(p: NeutroPoly, q: NeutroPoly) -> NeutroPoly:
    """Distribute every term pair, then collect like monomials.

    Works on raw (a, b) pairs with the defining product rule so it shares no
    arithmetic with the main code path beyond the base ring.
    """
    r = p.ring
    products = []
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            a = r.mul(c1.a, c2.a)
            b = r.add(r.add(r.mul(c1.a, c2.b), r.mul(c1.b, c2.a)), r.mul(c1.b, c2.b))
            products.append((tuple(x + y for x, y in zip(e1, e2)), a, b))
    products.sort(key=lambda t: t[0])
    collected = {}
    for exp, group in itertools.groupby(products, key=lambda t: t[0]):
        a = b = r.zero()
        for _, x, y in group:
            a, b = r.add(a, x), r.add(b, y)
        collected[exp] = NeutroScalar(r, a, b)
    return NeutroPoly(r, collected, p.nvars, p.var_names)


def classical_mul(ring: BaseRing, f: dict, g: dict) -> dict:
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = ring.add(out.get(e, ring.zero()), ring.mul(c1, c2))
    return {e: c for e, c in out.items() if c != 0}


def split_mul(p: NeutroPoly, q: NeutroPoly) -> NeutroPoly:
    """Product through the split isomorphism: two classical products, then unsplit."""
    pl, pr = p.split()
    ql, qr = q.split()
    pair = (classical_mul(p.ring, pl, ql), classical_mul(p.ring, pr, qr))
    return NeutroPoly.unsplit(pair, p.ring, p.nvars, p.var_names)


# -- classification ----------------------------------------------------------


def classify_poly(p: NeutroPoly) -> str:
    flags = [c.b != 0 for c in p.terms.values()]
    if flags and all(flags):
        return "Strong"
    if any(flags):
        return "Mixed"
    return "Plain"


def is_neutrosophic_poly(p: NeutroPoly) -> bool:
    return any(c.b != 0 for c in p.terms.values())


def content(p: NeutroPoly) -> NeutroScalar:
    """Componentwise gcd of the split coefficients, both parts taken positive."""
    if p.ring != ZZ:
        raise ValueError("content is defined over Z")
    if p.is_zero():
        raise ValueError("zero polynomial has no content")
    g1 = g2 = 0
    for c in p.terms.values():
        u, v = c.split()
        g1, g2 = math.gcd(g1, u), math.gcd(g2, v)
    return NeutroScalar.unsplit((g1, g2), ZZ)


def is_primitive(p: NeutroPoly) -> bool:
    return content(p) == 1


def is_monic(p: NeutroPoly) -> bool:
    """Univariate with highest coefficient exactly 1."""
    return not p.is_zero() and p.leading_coeff() == 1


# -- divisibility ------------------------------------------------------------

SEARCH_CAP = 4096


def _strip(ring, f):
    return {e: c for e, c in f.items() if c != 0}


def _component_divide(ring: BaseRing, d: dict, f: dict):
    """Quotient q with q*d = f in R[x] (univariate maps), None when impossible, UNKNOWN when undecided."""
    d, f = _strip(ring, d), _strip(ring, f)
    if not d:
        return {} if not f else None
    if not f:
        return {}
    if ring == ZZ:
        q = _component_divide(QQ, {e: Fraction(c) for e, c in d.items()}, {e: Fraction(c) for e, c in f.items()})
        if q is None:
            return None
        if any(c.denominator != 1 for c in q.values()):
            return None
        return {e: int(c) for e, c in q.items()}
    dd = max(e[0] for e in d)
    lead = d[(dd,)]
    if ring.is_unit(lead):
        inv = ring.inv(lead)
        rem = dict(f)
        q = {}
        while rem:
            top = max(e[0] for e in rem)
            if top < dd:
                return None
            c = ring.mul(rem[(top,)], inv)
            q[(top - dd,)] = c
            for (k,), dc in d.items():
                e = (k + top - dd,)
                rem[e] = ring.sub(rem.get(e, ring.zero()), ring.mul(c, dc))
                if rem[e] == 0:
                    del rem[e]
        return q
    # non-unit leading coefficient over Z/n: bounded search
    n = ring.modulus
    top = max(e[0] for e in f)
    if n ** (top + 1) > SEARCH_CAP:
        return UNKNOWN
    for cs in itertools.product(range(n), repeat=top + 1):
        q = {(i,): c for i, c in enumerate(cs) if c}
        if classical_mul(ring, q, d) == f:
            return q
    return UNKNOWN


def divides(d, p: NeutroPoly):
    """Quotient q with d*q = p, None if no quotient exists, UNKNOWN if undecided."""
    ring = p.ring
    if isinstance(d, (int, Fraction)):
        d = NeutroScalar(ring, d)
    if isinstance(d, NeutroScalar):
        d = NeutroPoly.constant(ring, d, p.nvars, p.var_names)
    if d.nvars != p.nvars:
        raise RingMismatch("variable counts differ")
    if d.degree <= 0 and not d.is_zero():
        # scalar divisor: divide coefficients componentwise
        du, dv = d.coeff((0,) * p.nvars).split()
        out = ({}, {})
        for e, c in p.terms.items():
            for k, (dc, pc) in enumerate(zip((du, dv), c.split())):
                q = _scalar_component_div(ring, dc, pc)
                if q is None or q is UNKNOWN:
                    return q
                if q != 0:
                    out[k][e] = q
        return NeutroPoly.unsplit(out, ring, p.nvars, p.var_names)
    if p.nvars != 1:
        raise ValueError("polynomial divisors need one variable")
    quots = []
    for dc, pc in zip(d.split(), p.split()):
        q = _component_divide(ring, dc, pc)
        if q is None:
            return None
        quots.append(q)
    if any(q is UNKNOWN for q in quots):
        return UNKNOWN
    return NeutroPoly.unsplit(tuple(quots), ring, 1, p.var_names)


def _scalar_component_div(ring: BaseRing, d, x):
    if d == 0:
        return 0 if x == 0 else None
    if ring == ZZ:
        return x // d if x % d == 0 else None
    if ring == QQ:
        return Fraction(x) / d
    if ring.is_unit(d):
        return ring.div(x, d)
    for q in range(ring.modulus):
        if ring.mul(q, d) == x:
            return q
    return None


# -- reducibility ------------------------------------------------------------

NEUTRO_REDUCIBLE = "NeutrosophicReducible"
SEMI_REDUCIBLE = "SemiNeutrosophicReducible"
PLAIN_REDUCIBLE = "PlainReducible"
IRREDUCIBLE = "IrreducibleNeutrosophic"
UNIT = "Unit"
UNKNOWN_CLASS = "Unknown"

FACTOR_BOX_CAP = 256


def _is_unit_component(ring: BaseRing, f: dict, nvars: int) -> bool:
    """Units of Z/n[x..]: unit constant term and nilpotent other coefficients."""
    const = f.get((0,) * nvars, 0)
    if not ring.is_unit(const):
        return False
    return all(ring.is_nilpotent(c) for e, c in f.items() if any(e))


def is_unit_poly(p: NeutroPoly) -> bool:
    if not p.ring.is_finite:
        return p.degree == 0 and p.coeff((0,) * p.nvars).is_unit()
    return all(_is_unit_component(p.ring, f, p.nvars) for f in p.split())


def _component_factor_pairs(ring: BaseRing, f: dict, box: list):
    """All (r, s) drawn from the monomial box with r*s = f."""
    n = ring.modulus
    cands = []
    for cs in itertools.product(range(n), repeat=len(box)):
        cands.append({e: c for e, c in zip(box, cs) if c})
    target = _strip(ring, f)
    out = []
    for r in cands:
        if not r:
            if not target:
                out.extend((r, s) for s in cands)
            continue
        for s in cands:
            if classical_mul(ring, r, s) == target:
                out.append((r, s))
    return out


@dataclass
class ReducibilityReport:
    klass: str
    factorizations: list = field(default_factory=list)  # (r, s) NeutroPoly pairs
    complete: bool = False
    note: str = ""


def _trivial_factor(r: NeutroPoly) -> bool:
    """A unit, or a unit multiple of I."""
    if is_unit_poly(r):
        return True
    left, right = r.split()
    return not left and _is_unit_component(r.ring, right, r.nvars)


def reducibility_classify(p: NeutroPoly, box_cap: int = FACTOR_BOX_CAP, keep: int = 50) -> ReducibilityReport:
    """Exhaustive factor search through the split components.

    Factors are drawn from monomials whose exponents stay below those of p in
    each variable.  Over a prime modulus each component ring is a domain, so
    the box is complete and a negative answer is final.
    """
    ring = p.ring
    if not ring.is_finite:
        raise ValueError("factor search needs a finite coefficient ring")
    if p.is_zero():
        raise ValueError("zero polynomial")
    if is_unit_poly(p):
        return ReducibilityReport(UNIT, complete=True)
    top = [max((e[i] for e in p.terms), default=0) for i in range(p.nvars)]
    box = list(itertools.product(*[range(t + 1) for t in top]))
    if ring.modulus ** len(box) > box_cap:
        return ReducibilityReport(UNKNOWN_CLASS, note="factor box exceeds the search cap")
    comp_pairs = [_component_factor_pairs(ring, f, box) for f in p.split()]
    found = {NEUTRO_REDUCIBLE: [], SEMI_REDUCIBLE: [], PLAIN_REDUCIBLE: []}
    for (r1, s1), (r2, s2) in itertools.product(*comp_pairs):
        r = NeutroPoly.unsplit((r1, r2), ring, p.nvars, p.var_names)
        s = NeutroPoly.unsplit((s1, s2), ring, p.nvars, p.var_names)
        if _trivial_factor(r) or _trivial_factor(s):
            continue
        k = is_neutrosophic_poly(r) + is_neutrosophic_poly(s)
        bucket = found[(PLAIN_REDUCIBLE, SEMI_REDUCIBLE, NEUTRO_REDUCIBLE)[k]]
        if len(bucket) < keep:
            bucket.append((r, s))
    complete = ring.is_field()
    for klass in (NEUTRO_REDUCIBLE, SEMI_REDUCIBLE, PLAIN_REDUCIBLE):
        if found[klass]:
            facs = found[NEUTRO_REDUCIBLE] + found[SEMI_REDUCIBLE] + found[PLAIN_REDUCIBLE]
            return ReducibilityReport(klass, facs, complete)
    if complete:
        return ReducibilityReport(IRREDUCIBLE, complete=True)
    return ReducibilityReport(UNKNOWN_CLASS, note="no factor in the bounded box over a non-field base")


# -- Gauss lemma probe -------------------------------------------------------


def random_poly(rng: random.Random, ring: BaseRing, degree: int, coeff_range: int = 6) -> NeutroPoly:
    coeffs = [
        NeutroScalar(ring, rng.randint(-coeff_range, coeff_range), rng.randint(-coeff_range, coeff_range))
        for _ in range(degree + 1)
    ]
    return NeutroPoly.from_coeffs(ring, coeffs)


@dataclass
class GaussProbe:
    passed: bool
    samples: int
    counterexample: Optional[tuple] = None


def gauss_lemma_probe(samples: int = 1000, degree: int = 3, seed: int = 0) -> GaussProbe:
    """Random primitive pairs over <Z u I>; is their product primitive?"""
    rng = random.Random(seed)
    tested = 0
    while tested < samples:
        p = random_poly(rng, ZZ, rng.randint(0, degree))
        q = random_poly(rng, ZZ, rng.randint(0, degree))
        if p.is_zero() or q.is_zero() or not is_primitive(p) or not is_primitive(q):
            continue
        tested += 1
        if not is_primitive(p * q):
            return GaussProbe(False, tested, (p, q))
    return GaussProbe(True, tested)


# -- parsing -----------------------------------------------------------------


def parse_poly(text: str, ring: BaseRing, var_names: Optional[Iterable[str]] = None) -> NeutroPoly:
    """Read e.g. "(2-I) + (7+5I)x - 8I x^2"; variables default to x (or x1, x2, ... if present)."""
    if var_names is None:
        found = sorted({int(m) for m in _numbered_vars(text)})
        var_names = tuple(f"x{i}" for i in range(1, max(found) + 1)) if found else ("x",)
    var_names = tuple(var_names)
    nvars = len(var_names)
    if "I" in var_names:
        raise ValueError("I is reserved for the indeterminate")

    def leaf(tok):
        kind, val = tok
        if kind == "int":
            return NeutroPoly.constant(ring, val, nvars, var_names)
        if kind == "name" and val == "I":
            return NeutroPoly.constant(ring, NeutroScalar.indeterminate(ring), nvars, var_names)
        if kind == "name":
            return NeutroPoly.variable(ring, var_names.index(val), nvars, var_names)
        if kind == "bracket":
            from .scalars import parse_scalar

            return NeutroPoly.constant(ring, parse_scalar(val, ring), nvars, var_names)
        raise ParseError(f"unexpected {val!r}")

    def divide(x, y):
        if y.degree != 0:
            raise ParseError("can only divide by a nonzero constant")
        c = y.coeff((0,) * nvars)
        inv = c.inverse() if ring != ZZ else None
        if inv is None:
            q = divides(c, x)
            if q is None or q is UNKNOWN:
                raise ParseError("inexact division over Z")
            return q
        return x * inv

    return evaluate(parse(text, ("I",) + var_names), leaf, divide)


def _numbered_vars(text: str):
    import re

    return re.findall(r"x(\d+)", text)
