"""Formal sums over finite magmas: group rings, semigroup rings and their neutrosophic variants.

One engine covers every combination of plain or a + bI coefficients with a
plain or I-carrying magma; the combination decides the kind tag.  Finite
cases compile to integer-coded elements (`AlgebraRing`) so the ring-level
tools in `rings` apply; linear questions over Q and Z/p go through the split
isomorphism and exact Gaussian elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from . import rings as R
from .expr import ParseError, evaluate, parse
from .groups import PLAIN as PLAIN_SUBGROUP, NEUTRO as NEUTRO_SUBGROUP, classify_subset, has_plain_group, is_normal_subgroup
from .magma import FiniteMagma, bits, popcount
from .scalars import QQ, ZZ, BaseRing, NeutroScalar, RingMismatch, parse_scalar
from .poly import UNKNOWN

ALGEBRA_CAP = 1 << 16
LINEAR_CAP = 64
MEMO_CAP = 1 << 20


class AlgebraError(ValueError):
    pass


# -- scalars ---------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarRing:
    """Coefficients: the base ring itself (plain) or a + bI over it (neutro)."""

    base: BaseRing
    neutro: bool = False

    def elem(self, v) -> NeutroScalar:
        if isinstance(v, NeutroScalar):
            if v.ring != self.base:
                raise RingMismatch(f"{v.ring} vs {self.base}")
            s = v
        elif isinstance(v, str):
            s = parse_scalar(v, self.base)
        else:
            s = NeutroScalar(self.base, v)
        if not self.neutro and s.b != 0:
            raise AlgebraError(f"{s} is not a plain {self.base} scalar")
        return s

    @property
    def zero(self) -> NeutroScalar:
        return NeutroScalar(self.base)

    @property
    def one(self) -> NeutroScalar:
        return NeutroScalar(self.base, 1)

    @property
    def indeterminate(self) -> NeutroScalar:
        if not self.neutro:
            raise AlgebraError("plain scalars have no I")
        return NeutroScalar.indeterminate(self.base)

    @property
    def is_finite(self) -> bool:
        return self.base.is_finite

    def elements(self) -> list:
        n = self.base.modulus
        if n is None:
            raise AlgebraError("infinite scalar ring")
        if self.neutro:
            return [NeutroScalar(self.base, a, b) for a in range(n) for b in range(n)]
        return [NeutroScalar(self.base, a) for a in range(n)]

    @property
    def size(self) -> Optional[int]:
        n = self.base.modulus
        if n is None:
            return None
        return n * n if self.neutro else n

    def plain(self) -> "ScalarRing":
        return ScalarRing(self.base, False)

    def __str__(self):
        return f"<{self.base} u I>" if self.neutro else str(self.base)


def Plain(base: BaseRing) -> ScalarRing:
    return ScalarRing(base, False)


def Neutro(base: BaseRing) -> ScalarRing:
    return ScalarRing(base, True)


# -- kinds -------------------------------------------------------------------------

GROUP_RING = "GroupRing"
NEUTRO_GROUP_RING = "NeutrosophicGroupRing"
SEMIGROUP_RING = "SemigroupRing"
NEUTRO_SEMIGROUP_RING = "NeutrosophicSemigroupRing"
GROUP_NEUTRO_RING = "GroupNeutrosophicRing"
SEMIGROUP_NEUTRO_RING = "SemigroupNeutrosophicRing"
S_SEMIGROUP_NEUTRO_RING = "SSemigroupNeutrosophicRing"
NEUTRO_GROUP_NEUTRO_RING = "NeutrosophicGroupNeutrosophicRing"
S_NEUTRO_SEMIGROUP_NEUTRO_RING = "SNeutrosophicSemigroupNeutrosophicRing"


def algebra_kind(scalars: ScalarRing, m: FiniteMagma) -> str:
    neutro_magma = any(m.neutro)
    if neutro_magma:
        plain = m.plain_part()
        group_like = plain != 0 and m.is_closed(plain) and m.is_group_subset(plain)
        if not scalars.neutro:
            return NEUTRO_GROUP_RING if group_like else NEUTRO_SEMIGROUP_RING
        return NEUTRO_GROUP_NEUTRO_RING if group_like else S_NEUTRO_SEMIGROUP_NEUTRO_RING
    if m.is_group:
        return GROUP_NEUTRO_RING if scalars.neutro else GROUP_RING
    if not scalars.neutro:
        return SEMIGROUP_RING
    return S_SEMIGROUP_NEUTRO_RING if m.is_s_semigroup else SEMIGROUP_NEUTRO_RING


# -- formal sums -----------------------------------------------------------------

_PLAIN_LABEL = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_^")


def _label_text(label: str, identity: bool) -> str:
    if identity:
        return ""
    if set(label) <= _PLAIN_LABEL and not label[0].isdigit():
        return label
    return "{" + label + "}"


class FormalSum:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "Algebra", coeffs: Optional[dict] = None):
        self.algebra = algebra
        clean = {}
        for k, c in (coeffs or {}).items():
            c = algebra.scalars.elem(c)
            if not c.is_zero:
                clean[k] = clean[k] + c if k in clean else c
                if clean[k].is_zero:
                    del clean[k]
        self.coeffs = clean

    def _other(self, other):
        if isinstance(other, FormalSum):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise RingMismatch("formal sums from different algebras")
            return other
        if isinstance(other, (int, Fraction, NeutroScalar)):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        out = dict(self.coeffs)
        for k, c in o.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return FormalSum(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return FormalSum(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NeutroScalar)):
            c = self.algebra.scalars.elem(other)
            return FormalSum(self.algebra, {k: v * c for k, v in self.coeffs.items()})
        o = self._other(other)
        if o is NotImplemented:
            return o
        table = self.algebra.magma.table
        out = {}
        for i, ci in self.coeffs.items():
            row = table[i]
            for j, cj in o.coeffs.items():
                k = row[j]
                p = ci * cj
                out[k] = out[k] + p if k in out else p
        return FormalSum(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, NeutroScalar)):
            c = self.algebra.scalars.elem(other)
            return FormalSum(self.algebra, {k: c * v for k, v in self.coeffs.items()})
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, NeutroScalar)):
            c = self.algebra.scalars.elem(other)
            return self * c.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, NeutroScalar)):
            other = self.algebra.scalar(other)
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> int:
        mask = 0
        for k in self.coeffs:
            mask |= 1 << k
        return mask

    def has_indeterminate(self) -> bool:
        """Some support element carries I, or some coefficient does."""
        m = self.algebra.magma
        return any(m.neutro[k] or c.b != 0 for k, c in self.coeffs.items())

    def coefficient(self, label) -> NeutroScalar:
        return self.coeffs.get(self.algebra.magma.index(label), self.algebra.scalars.zero)

    def __str__(self):
        if not self.coeffs:
            return "0"
        alg = self.algebra
        m = alg.magma
        bracket = alg.bracket_scalars
        pieces = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            lab = _label_text(m.labels[k], k == m.identity)
            cs = str(c)
            if bracket and c.b != 0:
                cs = f"[{cs}]"
            if not lab:
                text = cs
            elif cs == "1":
                text = lab
            elif cs == "-1":
                text = "-" + lab
            elif c.a != 0 and c.b != 0 and not bracket:
                text = f"({cs}){lab}"
            else:
                text = cs + lab
            pieces.append(text)
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"FormalSum({self})"


# -- the algebra -------------------------------------------------------------------


class Algebra:
    def __init__(self, scalars: ScalarRing, magma: FiniteMagma, name: Optional[str] = None):
        self.scalars = scalars
        self.magma = magma
        self.kind = algebra_kind(scalars, magma)
        self.name = name or f"{scalars}[{magma.name}]"

    def __repr__(self):
        return f"Algebra({self.name}, {self.kind})"

    # -- elements ---------------------------------------------------------
    @property
    def bracket_scalars(self) -> bool:
        """Neutro coefficients print in brackets when the magma has its own I label."""
        return self.scalars.neutro and "I" in self.magma.labels

    def zero(self) -> FormalSum:
        return FormalSum(self, {})

    def one(self) -> FormalSum:
        e = self.magma.identity
        if e is None:
            raise AlgebraError(f"{self.magma.name} has no identity")
        return FormalSum(self, {e: self.scalars.one})

    def scalar(self, c) -> FormalSum:
        c = self.scalars.elem(c)
        if c.is_zero:
            return self.zero()
        e = self.magma.identity
        if e is None:
            raise AlgebraError("scalars embed only when the magma has an identity")
        return FormalSum(self, {e: c})

    def basis(self, label) -> FormalSum:
        return FormalSum(self, {self.magma.index(label): self.scalars.one})

    def element(self, terms) -> FormalSum:
        """From {label: coefficient} or a list of (label, coefficient)."""
        items = terms.items() if isinstance(terms, dict) else terms
        return FormalSum(self, {self.magma.index(k): self.scalars.elem(c) for k, c in items})

    def sum_of(self, labels: Iterable, coeff=1) -> FormalSum:
        c = self.scalars.elem(coeff)
        return FormalSum(self, {self.magma.index(x): c for x in labels})

    @property
    def indeterminate(self) -> Optional[FormalSum]:
        """The magma's I when it has one, else the scalar I times the identity."""
        m = self.magma
        if m.indeterminate is not None:
            return FormalSum(self, {m.indeterminate: self.scalars.one})
        if self.scalars.neutro and m.identity is not None:
            return FormalSum(self, {m.identity: self.scalars.indeterminate})
        return None

    def parse(self, text: str) -> FormalSum:
        """Read e.g. "1 - 5*(1 + g^3 + I + g^3I)"; {label} quotes odd labels, [s] quotes a scalar."""
        m = self.magma
        names = [s for s in m.labels if s and set(s) <= _PLAIN_LABEL and not s[0].isdigit()]
        if "I" not in names:
            names.append("I")

        def leaf(tok):
            kind, val = tok
            if kind == "int":
                return self.scalars.elem(val)
            if kind == "bracket":
                return parse_scalar(val, self.scalars.base)
            if kind == "name" and val == "I" and "I" not in m.labels:
                return self.scalars.indeterminate
            if kind in ("name", "label"):
                return self.basis(val)
            raise ParseError(f"unexpected {val!r}")

        def divide(x, y):
            if isinstance(y, FormalSum):
                raise ParseError("can only divide by a scalar")
            if isinstance(x, FormalSum):
                return x / y
            return x / y

        out = evaluate(parse(text, names), leaf, divide)
        if isinstance(out, NeutroScalar):
            out = self.scalar(out)
        return out

    # -- size -----------------------------------------------------------------
    @property
    def order(self) -> Optional[int]:
        q = self.scalars.size
        return None if q is None else q ** self.magma.order

    @property
    def is_commutative(self) -> bool:
        return self.magma.is_commutative

    @cached_property
    def ring(self) -> "AlgebraRing":
        return AlgebraRing(self)

    def code(self, x: FormalSum) -> int:
        return self.ring.encode(x)

    def decode(self, code: int) -> FormalSum:
        return self.ring.decode(code)

    def subalgebra(self, scalars: ScalarRing, magma_mask: int, name: Optional[str] = None) -> "Algebra":
        sub = self.magma.restrict(magma_mask)
        return Algebra(scalars, sub, name)


# -- compiled finite form ----------------------------------------------------------


class AlgebraRing(R.FiniteRing):
    """Integer-coded elements: code = sum of coefficient codes times q^position."""

    def __init__(self, alg: Algebra):
        q = alg.scalars.size
        if q is None:
            raise AlgebraError("algebra over infinite scalars cannot be compiled")
        total = q ** alg.magma.order
        if total > ALGEBRA_CAP:
            raise AlgebraError(f"algebra has {total} elements, above the cap {ALGEBRA_CAP}")
        self.alg = alg
        self.q = q
        self.m = alg.magma.order
        self.scal = alg.scalars.elements()
        self._scode = {s: k for k, s in enumerate(self.scal)}
        self.sadd = [[self._scode[x + y] for y in self.scal] for x in self.scal]
        self.smul = [[self._scode[x * y] for y in self.scal] for x in self.scal]
        self.total = total
        self.zero = 0
        self.name = alg.name
        self._digits_cache = {}
        self._add_memo = {}
        self._mul_memo = {}
        ind = alg.indeterminate
        self.indeterminate = self.encode(ind) if ind is not None else None

    @property
    def order(self):
        return self.total

    @cached_property
    def labels(self):
        return tuple(str(self.decode(c)) for c in range(self.total))

    @cached_property
    def _index(self):
        return {s: i for i, s in enumerate(self.labels)}

    @cached_property
    def neutro(self):
        m = self.alg.magma
        flags = []
        for c in range(self.total):
            d = self.digits(c)
            flags.append(any(v and (m.neutro[k] or self.scal[v].b != 0) for k, v in enumerate(d)))
        return tuple(flags)

    def digits(self, code: int) -> tuple:
        d = self._digits_cache.get(code)
        if d is None:
            out = []
            x = code
            for _ in range(self.m):
                x, r = divmod(x, self.q)
                out.append(r)
            d = tuple(out)
            if len(self._digits_cache) < 1 << 17:
                self._digits_cache[code] = d
        return d

    def undigits(self, d) -> int:
        code = 0
        for v in reversed(d):
            code = code * self.q + v
        return code

    def encode(self, x: FormalSum) -> int:
        d = [0] * self.m
        for k, c in x.coeffs.items():
            d[k] = self._scode[c]
        return self.undigits(d)

    def decode(self, code: int) -> FormalSum:
        d = self.digits(code)
        return FormalSum(self.alg, {k: self.scal[v] for k, v in enumerate(d) if v})

    def add(self, i, j):
        key = (i, j)
        out = self._add_memo.get(key)
        if out is None:
            a, b = self.digits(i), self.digits(j)
            sadd = self.sadd
            out = self.undigits([sadd[x][y] for x, y in zip(a, b)])
            if len(self._add_memo) < MEMO_CAP:
                self._add_memo[key] = out
        return out

    def neg(self, i):
        zero = self._scode[self.alg.scalars.zero]
        d = self.digits(i)
        return self.undigits([next(y for y in range(self.q) if self.sadd[x][y] == zero) for x in d])

    def mul(self, i, j):
        key = (i, j)
        out = self._mul_memo.get(key)
        if out is None:
            out = self._mul(i, j)
            if len(self._mul_memo) < MEMO_CAP:
                self._mul_memo[key] = out
        return out

    def _mul(self, i, j):
        a, b = self.digits(i), self.digits(j)
        table = self.alg.magma.table
        sadd, smul = self.sadd, self.smul
        out = [0] * self.m
        for p, x in enumerate(a):
            if not x:
                continue
            row = table[p]
            sm = smul[x]
            for t, y in enumerate(b):
                if y:
                    k = row[t]
                    out[k] = sadd[out[k]][sm[y]]
        return self.undigits(out)

    @cached_property
    def one(self):
        e = self.alg.magma.identity
        if e is None:
            return None
        return self.encode(self.alg.one())

    @property
    def is_commutative(self):
        return self.alg.magma.is_commutative

    def ring_generators(self):
        alg = self.alg
        gens = [self.encode(alg.basis(k)) for k in range(self.m)]
        if alg.scalars.neutro:
            i = alg.scalars.indeterminate
            gens += [self.encode(FormalSum(alg, {k: i})) for k in range(self.m)]
        return gens

    def codes(self, xs: Iterable[FormalSum]) -> int:
        mask = 0
        for x in xs:
            mask |= 1 << self.encode(x)
        return mask

    def sums(self, mask: int) -> list:
        return [self.decode(c) for c in bits(mask)]


# -- subgroup sums, units, zero divisors ------------------------------------------


def subgroup_sum(alg: Algebra, h) -> FormalSum:
    """Sum of the elements of a closed subset h (mask or labels)."""
    m = alg.magma
    mask = h if isinstance(h, int) else m.subset(h)
    if not m.is_closed(mask):
        raise AlgebraError("subset is not closed")
    return FormalSum(alg, {k: alg.scalars.one for k in bits(mask)})


def zero_divisor_pair(alg: Algebra, h) -> tuple:
    """(alpha, alpha - n) for alpha the sum of h, n = |h|; their product vanishes when hH = H."""
    alpha = subgroup_sum(alg, h)
    n = len(alpha.coeffs)
    return alpha, alpha - alg.scalar(n)


def unit_from_subgroup(alpha: FormalSum, a) -> tuple:
    """x = 1 - a*alpha and y = 1 - (a/(a n - 1)) alpha, for alpha^2 = n alpha."""
    alg = alpha.algebra
    a = alg.scalars.elem(a)
    n = _subgroup_parameter(alpha)
    if n is None:
        raise AlgebraError("alpha^2 is not a scalar multiple of alpha")
    denom = a * n - 1
    if not denom.is_unit():
        raise AlgebraError(f"{denom} is not invertible")
    x = alg.one() - alpha * a
    y = alg.one() - alpha * (a * denom.inverse())
    return x, y


def neutrosophic_unit_from_subgroup(alpha: FormalSum, a) -> tuple:
    """(x, I*y): x times it gives I whenever x*y = 1."""
    x, y = unit_from_subgroup(alpha, a)
    i = alpha.algebra.indeterminate
    if i is None:
        raise AlgebraError("algebra has no indeterminate")
    return x, i * y


def _subgroup_parameter(alpha: FormalSum) -> Optional[NeutroScalar]:
    sq = alpha * alpha
    if alpha.is_zero():
        return None
    k = next(iter(alpha.coeffs))
    c = alpha.coeffs[k]
    if not c.is_unit():
        return None
    n = sq.coefficient(k) * c.inverse()
    if sq == alpha * n:
        return n
    return None


def idempotent_report(alpha: FormalSum) -> dict:
    return {"idempotent": alpha * alpha == alpha, "neutrosophic": alpha.has_indeterminate()}


# exact linear algebra over Q and Z/p, one split component at a time


def _field_ops(base: BaseRing):
    if base == ZZ or base == QQ:
        return QQ
    if base.is_field():
        return base
    return None


def _split_vector(x: FormalSum, side: int) -> list:
    vec = [0] * x.algebra.magma.order
    for k, c in x.coeffs.items():
        vec[k] = c.split()[side]
    return vec


def _left_matrix(alg: Algebra, vec: list, left: bool = True) -> list:
    """Matrix of y -> x*y (left) or y -> y*x on the magma basis."""
    m = alg.magma
    n = m.order
    mat = [[0] * n for _ in range(n)]
    for i, c in enumerate(vec):
        if c == 0:
            continue
        for j in range(n):
            k = m.table[i][j] if left else m.table[j][i]
            mat[k][j] = mat[k][j] + c
    return mat


def _nullspace_and_solve(F: BaseRing, mat: list, rhs: Optional[list]):
    """Row-reduce [mat | rhs]; return (solution or None, nullspace basis)."""
    n_rows = len(mat)
    n_cols = len(mat[0]) if mat else 0
    a = [[F.elem(v) for v in row] + ([F.elem(rhs[i])] if rhs is not None else []) for i, row in enumerate(mat)]
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(v, inv) for v in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [F.sub(v, F.mul(f, w)) for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    sol = None
    if rhs is not None:
        if all(a[i][-1] == 0 for i in range(r, n_rows)):
            sol = [F.zero()] * n_cols
            for i, c in enumerate(pivots):
                sol[c] = a[i][-1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero()] * n_cols
        v[f] = F.one()
        for i, c in enumerate(pivots):
            v[c] = F.neg(a[i][f])
        basis.append(v)
    return sol, basis


def _integral(vec) -> Optional[list]:
    if all(Fraction(v).denominator == 1 for v in vec):
        return [int(v) for v in vec]
    return None


def _scale_to_integers(vec) -> list:
    den = 1
    for v in vec:
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    return [int(Fraction(v) * den) for v in vec]


def _from_components(alg: Algebra, u: list, v: list) -> FormalSum:
    base = alg.scalars.base
    coeffs = {}
    for k, (x, y) in enumerate(zip(u, v)):
        if alg.scalars.neutro:
            s = NeutroScalar.unsplit((x, y), base)
        else:
            s = NeutroScalar(base, x)
        if not s.is_zero:
            coeffs[k] = s
    return FormalSum(alg, coeffs)


def _components(alg: Algebra) -> int:
    return 2 if alg.scalars.neutro else 1


def solve_product(x: FormalSum, target: FormalSum, left: bool = True):
    """Some y with x*y = target (left) or y*x = target; None when impossible, UNKNOWN if undecided."""
    alg = x.algebra
    base = alg.scalars.base
    F = _field_ops(base)
    if F is None or alg.magma.order > LINEAR_CAP:
        return _search_product(x, target, left)
    sols = []
    for side in range(_components(alg)):
        mat = _left_matrix(alg, _split_vector(x, side), left)
        sol, null = _nullspace_and_solve(F, mat, _split_vector(target, side))
        if sol is None:
            return None
        if base == ZZ:
            integral = _integral(sol)
            if integral is None:
                if null:
                    return UNKNOWN
                return None
            sol = integral
        sols.append(sol)
    if len(sols) == 1:
        sols.append(sols[0])
    return _from_components(alg, sols[0], sols[1])


def annihilator_witness(x: FormalSum, left: bool = True) -> Optional[FormalSum]:
    """A nonzero y with x*y = 0 (left) or y*x = 0, or None if none exists."""
    alg = x.algebra
    base = alg.scalars.base
    F = _field_ops(base)
    if F is None or alg.magma.order > LINEAR_CAP:
        return _search_annihilator(x, left)
    n = alg.magma.order
    zero = [0] * n
    for side in range(_components(alg)):
        mat = _left_matrix(alg, _split_vector(x, side), left)
        _, null = _nullspace_and_solve(F, mat, None)
        if null:
            vec = null[0]
            if base == ZZ:
                vec = _scale_to_integers(vec)
            elif base == QQ:
                vec = [Fraction(v) for v in vec]
            if alg.scalars.neutro:
                pair = (vec, zero) if side == 0 else (zero, vec)
                return _from_components(alg, *pair)
            return _from_components(alg, vec, vec)
    return None


def _search_product(x, target, left):
    alg = x.algebra
    if alg.order is None or alg.order > ALGEBRA_CAP:
        return UNKNOWN
    r = alg.ring
    xc, tc = r.encode(x), r.encode(target)
    for y in range(r.order):
        if (r.mul(xc, y) if left else r.mul(y, xc)) == tc:
            return r.decode(y)
    return None


def _search_annihilator(x, left):
    alg = x.algebra
    if alg.order is None or alg.order > ALGEBRA_CAP:
        return UNKNOWN
    r = alg.ring
    xc = r.encode(x)
    for y in range(1, r.order):
        if (r.mul(xc, y) if left else r.mul(y, xc)) == 0:
            return r.decode(y)
    return None


def zero_divisor_report(alpha: FormalSum) -> dict:
    if alpha.is_zero():
        return {"zero_divisor": False, "witness": None, "side": None, "neutrosophic": False}
    right = annihilator_witness(alpha, left=True)
    w, side = right, "right"
    if w is None or w is UNKNOWN:
        left = annihilator_witness(alpha, left=False)
        if left is not None and left is not UNKNOWN:
            w, side = left, "left"
        elif w is None and left is UNKNOWN:
            w = UNKNOWN
    if w is UNKNOWN:
        return {"zero_divisor": UNKNOWN, "witness": None, "side": None, "neutrosophic": alpha.has_indeterminate()}
    return {
        "zero_divisor": w is not None,
        "witness": w,
        "side": side if w is not None else None,
        "neutrosophic": alpha.has_indeterminate() and w is not None,
    }


def unit_report(alpha: FormalSum) -> dict:
    """Inverse (x*y = y*x = 1) and a neutrosophic partner (x*y = y*x = I) when they exist."""
    alg = alpha.algebra
    out = {"unit": False, "inverse": None, "neutrosophic_unit": False, "neutrosophic_inverse": None,
           "neutrosophic": alpha.has_indeterminate()}
    if alg.magma.identity is None:
        return out
    one = alg.one()
    y = solve_product(alpha, one)
    if y is UNKNOWN:
        out["unit"] = UNKNOWN
    elif y is not None and y * alpha == one:
        out["unit"], out["inverse"] = True, y
    i = alg.indeterminate
    if i is not None:
        z = solve_product(alpha, i)
        if z is UNKNOWN:
            out["neutrosophic_unit"] = UNKNOWN
        elif z is not None and z * alpha == i:
            out["neutrosophic_unit"], out["neutrosophic_inverse"] = True, z
    return out


def idempotent_search(alg: Algebra, cap: int = ALGEBRA_CAP) -> dict:
    """All idempotents when the algebra is small enough; otherwise only 0/1-coefficient sums."""
    q = alg.scalars.size
    if q is None:
        raise AlgebraError("search needs finite scalars")
    m = alg.magma.order
    if q ** m <= cap:
        r = alg.ring
        found = [r.decode(c) for c in range(r.order) if r.mul(c, c) == c]
        return {"idempotents": found, "truncated": False}
    if 2 ** m > cap:
        raise AlgebraError("even the 0/1 search exceeds the cap")
    found = []
    one = alg.scalars.one
    for mask in range(1 << m):
        x = FormalSum(alg, {k: one for k in bits(mask)})
        if x * x == x:
            found.append(x)
    return {"idempotents": found, "truncated": True}


# -- subring taxonomy ----------------------------------------------------------------

SUBNEUTRO_GROUP_RING = "SubneutrosophicGroupRing"
NEUTRO_SUBRING = "NeutrosophicSubring"
PSEUDO_SUBRING = "PseudoNeutrosophicSubring"
SUBGROUP_RING = "SubgroupRing"
JUST_SUBRING = "JustSubring"

_NEUTRO_KINDS = (SUBNEUTRO_GROUP_RING, NEUTRO_SUBRING)


def _unital_scalar_subrings(sc: ScalarRing) -> list:
    """Coefficient subrings sharing the unit: Z/n, and <Z/n u I> when neutro."""
    out = [sc.plain()]
    if sc.neutro:
        out.append(sc)
    return out


def _coefficient_set(r: AlgebraRing, mask: int) -> tuple:
    support = 0
    coeffs = set()
    for c in bits(mask):
        for k, v in enumerate(r.digits(c)):
            if v:
                support |= 1 << k
                coeffs.add(r.scal[v])
    return support, coeffs


def _is_span(r: AlgebraRing, mask: int, support: int, allowed: set) -> bool:
    size = len(allowed)
    return popcount(mask) == size ** popcount(support)


def classify_algebra_subring(alg: Algebra, mask: int, checked: bool = False) -> str:
    """Five kinds, tried in order: span of a unital coefficient ring over a closed
    submagma holding a plain group where I shows up somewhere; a neutrosophic
    subring in the ring sense; pseudo; span of some coefficient subring over a
    plain subgroup; otherwise just a subring."""
    r = alg.ring
    if not checked and not R.is_subring(r, mask):
        raise AlgebraError("subset is not a subring")
    m = alg.magma
    support, coeffs = _coefficient_set(r, mask)
    if mask != r.full_mask and support and m.is_closed(support):
        for t in _unital_scalar_subrings(alg.scalars):
            allowed = set(t.elements())
            if not coeffs <= allowed:
                continue
            if has_plain_group(m, support) and (t.neutro or m.has_neutro(support)) and _is_span(r, mask, support, allowed):
                return SUBNEUTRO_GROUP_RING
    kind = R.classify_subring(r, mask, checked=True)
    if kind == R.NEUTRO_SUBRING:
        return NEUTRO_SUBRING
    if kind == R.PSEUDO_SUBRING:
        return PSEUDO_SUBRING
    if support and not m.has_neutro(support) and m.is_group_subset(support):
        allowed = coeffs | {alg.scalars.zero}
        if all(c.b == 0 for c in allowed) and _is_span(r, mask, support, allowed):
            return SUBGROUP_RING
    return JUST_SUBRING


def subring_taxonomy(alg: Algebra, max_order: int = R.SUBRING_CAP) -> list:
    r = alg.ring
    out = []
    for s in R.enumerate_subrings(r, max_order):
        if s in (r.full_mask, 1):
            continue
        out.append((s, classify_algebra_subring(alg, s, checked=True)))
    return out


def ideal_taxonomy(alg: Algebra, max_order: int = R.SUBRING_CAP) -> dict:
    """Proper nonzero ideals by kind, plus the quasi-ideal relation among subrings."""
    r = alg.ring
    ideals = [s for s in R.all_ideals(r) if s not in (1, r.full_mask)]
    neutro, pseudo, other = [], [], []
    for s in ideals:
        k = classify_algebra_subring(alg, s, checked=True)
        (neutro if k in _NEUTRO_KINDS else pseudo if k == PSEUDO_SUBRING else other).append((s, k))
    subs = [s for s in R.enumerate_subrings(r, max_order) if s not in (1,)]
    kinds = {s: classify_algebra_subring(alg, s, checked=True) if s != r.full_mask else "Whole" for s in subs}
    gens = {s: R.span_with_generators(r, list(bits(s)))[1] for s in subs}

    def absorbs(s, p):
        return all(s >> r.mul(x, y) & 1 and s >> r.mul(y, x) & 1 for x in gens[s] for y in gens[p])

    relative = {s: [p for p in subs if p != s and absorbs(s, p)] for s in subs}
    loyal = [s for s in subs if len(relative[s]) == 1]
    bonded = sorted({tuple(sorted((s, p))) for s in subs for p in relative[s] if s in relative[p]})
    strong_pseudo = [
        (s, p) for s in subs if kinds[s] == PSEUDO_SUBRING for p in relative[s] if kinds.get(p) == PSEUDO_SUBRING
    ]
    return {
        "neutrosophic_ideals": neutro,
        "pseudo_neutrosophic_ideals": pseudo,
        "other_ideals": other,
        "quasi_relations": relative,
        "loyal": loyal,
        "bonded": bonded,
        "strong_pseudo": strong_pseudo,
        "subring_kinds": kinds,
    }


# -- prime, semiprime, semisimple ---------------------------------------------------


def _ring_predicates(alg: Algebra) -> dict:
    return R.radical_and_semisimplicity(alg.ring)


def _sub_algebra_plain(alg: Algebra) -> Optional[Algebra]:
    """Plain coefficients over the plain part of the magma, when that part is closed."""
    m = alg.magma
    plain = m.plain_part()
    if not plain or not m.is_closed(plain):
        return None
    if plain == m.full_mask and not alg.scalars.neutro:
        return alg
    return alg.subalgebra(alg.scalars.plain(), plain, name=f"{alg.scalars.base}[{m.name}|plain]")


def prime_semiprime_semisimple(alg: Algebra) -> dict:
    base = _ring_predicates(alg)
    out = {
        "prime": base["prime"],
        "semiprime": base["semiprime"],
        "semisimple": base["semisimple"],
        "jacobson_order": popcount(base["jacobson"]),
    }
    sub = _sub_algebra_plain(alg)
    if sub is not None and sub is not alg:
        p = _ring_predicates(sub)
        out["pseudo_prime"] = p["prime"]
        out["pseudo_semiprime"] = p["semiprime"]
        out["pseudo_semisimple"] = p["semisimple"]
        if alg.kind == NEUTRO_GROUP_NEUTRO_RING:
            # both intermediate rings reduce to the same plain group ring
            out["weakly_pseudo_prime"] = p["prime"]
            out["weakly_pseudo_semiprime"] = p["semiprime"]
            out["weakly_pseudo_semisimple"] = p["semisimple"]
    if alg.kind in (S_SEMIGROUP_NEUTRO_RING, S_NEUTRO_SEMIGROUP_NEUTRO_RING):
        out["s_semisimple"] = _s_semisimple(alg)
    return out


def _s_semisimple(alg: Algebra) -> bool:
    m = alg.magma
    subsets, _ = m.closed_subsets()
    for s in subsets:
        if s != m.full_mask and popcount(s) >= 2 and not m.has_neutro(s) and m.is_group_subset(s):
            sub = alg.subalgebra(alg.scalars.plain(), s)
            if _ring_predicates(sub)["semisimple"]:
                return True
    return False


def semiprime_equivalence(alg: Algebra) -> dict:
    """Three ways to decide semiprimeness of K<G u I> over a field of characteristic p."""
    p = alg.scalars.base.characteristic
    m = alg.magma
    by_ideals = _ring_predicates(alg)["semiprime"]
    orders = m.element_orders()
    has_p_element = any(
        not m.neutro[k] and orders[m.labels[k]]["index"] == 1 and orders[m.labels[k]]["period"] == p
        for k in range(m.order)
    )
    subsets, _ = m.closed_subsets()
    normal_p = False
    for s in subsets:
        kind = classify_subset(m, s).kind if s != m.full_mask else (PLAIN_SUBGROUP if m.is_group else None)
        if kind in (PLAIN_SUBGROUP, NEUTRO_SUBGROUP) and popcount(s) % p == 0 and is_normal_subgroup(m, s):
            normal_p = True
            break
    return {
        "semiprime_by_ideals": by_ideals,
        "no_elements_of_order_p": not has_p_element,
        "no_normal_subgroup_divisible_by_p": not normal_p,
    }


# -- containment and special group rings ------------------------------------------


def containment_lattice(alg: Algebra) -> list:
    """The canonical sub-algebras promised for each kind, each verified closed."""
    m = alg.magma
    out = []
    plain = m.plain_part()

    def add(name, scalars, mask):
        ok = bool(mask) and m.is_closed(mask)
        out.append({"name": name, "scalars": str(scalars), "magma": m.labels_of(mask), "verified": ok})

    neutro_magma = any(m.neutro)
    if neutro_magma and plain:
        add("plain-coefficient plain-magma ring", alg.scalars.plain(), plain)
        if alg.scalars.neutro:
            add("plain coefficients over the full magma", alg.scalars.plain(), m.full_mask)
            add("neutro coefficients over the plain magma", alg.scalars, plain)
    elif alg.scalars.neutro:
        add("plain-coefficient ring", alg.scalars.plain(), m.full_mask)
    if not m.is_group:
        subsets, _ = m.closed_subsets()
        for s in subsets:
            if s != m.full_mask and popcount(s) >= 2 and not m.has_neutro(s) and m.is_group_subset(s):
                add("group ring of a group inside the magma", alg.scalars.plain(), s)
    if m.order == 1:
        add("scalar ring", alg.scalars, 1)
    return out


def special_group_ring_check(scalars: ScalarRing, group: FiniteMagma) -> dict:
    """Exactly one proper group-ring subset K'H (K' unital coefficient subring, H nontrivial subgroup)."""
    base = scalars.base
    if base == QQ:
        unital = math.inf  # Q contains Z and more
        count_rings = unital
    else:
        count_rings = 1  # Z/n and Z have no proper subring containing 1
    plain = group.plain_part()
    g = group if plain == group.full_mask else group.restrict(plain)
    subsets, _ = g.closed_subsets()
    subgroups = [s for s in subsets if popcount(s) >= 2 and g.is_group_subset(s)]
    count = count_rings * len(subgroups)
    return {"special": count == 1, "group_ring_subsets": count, "subgroups": [g.labels_of(s) for s in subgroups]}


# -- homomorphisms -----------------------------------------------------------------


def verify_algebra_homomorphism(src: Algebra, dst: Algebra, images: dict, scalar_i=None) -> dict:
    """images: magma label -> dst formal sum (or parseable text); scalar_i: image of the scalar I."""
    if src.scalars.base != dst.scalars.base:
        raise AlgebraError("homomorphisms here keep the coefficient base")
    m = src.magma
    img = {}
    for k in range(m.order):
        v = images[m.labels[k]]
        img[k] = dst.parse(v) if isinstance(v, str) else v
    phi_i = None
    if src.scalars.neutro:
        if scalar_i is None:
            phi_i = dst.scalar(dst.scalars.indeterminate) if dst.scalars.neutro else None
        else:
            phi_i = dst.parse(scalar_i) if isinstance(scalar_i, str) else scalar_i
        if phi_i is None:
            raise AlgebraError("need the image of the scalar I")

    def phi(x: FormalSum) -> FormalSum:
        out = dst.zero()
        for k, c in x.coeffs.items():
            out = out + img[k] * NeutroScalar(dst.scalars.base, c.a)
            if c.b != 0:
                out = out + phi_i * img[k] * NeutroScalar(dst.scalars.base, c.b)
        return out

    gens = [src.basis(k) for k in range(m.order)]
    if src.scalars.neutro:
        gens += [FormalSum(src, {k: src.scalars.indeterminate}) for k in range(m.order)]
    for x in gens:
        for y in gens:
            if phi(x * y) != phi(x) * phi(y):
                return {"ok": False, "violation": "multiplicativity", "witness": (str(x), str(y))}
    if src.magma.identity is not None and dst.magma.identity is not None and phi(src.one()) != dst.one():
        return {"ok": False, "violation": "unit", "witness": ("1",)}
    si, di = src.indeterminate, dst.indeterminate
    if si is not None and (di is None or phi(si) != di):
        return {"ok": False, "violation": "indeterminate", "witness": (str(si),)}
    report = {"ok": True, "violation": None, "witness": None, "kernel": None, "kernel_kind": None}
    if src.order is not None and src.order <= ALGEBRA_CAP:
        r = src.ring
        kernel = 0
        for c in range(r.order):
            if phi(r.decode(c)).is_zero():
                kernel |= 1 << c
        report["kernel"] = kernel
        report["kernel_elements"] = [str(x) for x in r.sums(kernel)]
        kind = classify_algebra_subring(src, kernel) if kernel != 1 else "Zero"
        report["kernel_kind"] = kind
        report["kernel_is_neutrosophic"] = kind in _NEUTRO_KINDS
    return report


# -- presets --------------------------------------------------------------------------


def group_ring(base: BaseRing, m: FiniteMagma) -> Algebra:
    return Algebra(Plain(base), m)


def neutrosophic_group_ring(base: BaseRing, m: FiniteMagma) -> Algebra:
    """K<G u I>: plain coefficients over the tagged magma."""
    from .magma import neutrosophify_tagged

    return Algebra(Plain(base), neutrosophify_tagged(m))


def group_neutrosophic_ring(base: BaseRing, m: FiniteMagma) -> Algebra:
    """<K u I>[G]."""
    return Algebra(Neutro(base), m)


def neutrosophic_group_neutrosophic_ring(base: BaseRing, m: FiniteMagma) -> Algebra:
    from .magma import neutrosophify_tagged

    return Algebra(Neutro(base), neutrosophify_tagged(m))
