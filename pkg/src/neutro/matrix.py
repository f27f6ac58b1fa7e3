"""Square matrices over a + bI scalars."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .magma import FiniteMagma
from .scalars import BaseRing, NeutroScalar, RingMismatch, parse_scalar
from .poly import UNKNOWN

EXHAUSTIVE_DIM = 3
EXHAUSTIVE_CANDIDATES = 1 << 20
MAGMA_CAP = 512


class MatrixError(ValueError):
    pass


def _det_base(ring: BaseRing, rows) -> object:
    """Laplace expansion along the first row."""
    m = len(rows)
    if m == 1:
        return rows[0][0]
    if m == 2:
        return ring.sub(ring.mul(rows[0][0], rows[1][1]), ring.mul(rows[0][1], rows[1][0]))
    out = ring.zero()
    for j in range(m):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = ring.mul(rows[0][j], _det_base(ring, minor))
        out = ring.add(out, term) if j % 2 == 0 else ring.sub(out, term)
    return out


def _inverse_base(ring: BaseRing, rows):
    """Adjugate over det; requires a unit determinant."""
    m = len(rows)
    d = _det_base(ring, rows)
    if not ring.is_unit(d):
        return None
    dinv = ring.inv(d)
    if m == 1:
        return [[dinv]]
    out = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]
            cof = _det_base(ring, minor)
            if (i + j) % 2:
                cof = ring.neg(cof)
            out[j][i] = ring.mul(cof, dinv)
    return out


def _mul_base(ring: BaseRing, x, y):
    m = len(x)
    return [
        [
            _sum(ring, (ring.mul(x[i][k], y[k][j]) for k in range(m)))
            for j in range(m)
        ]
        for i in range(m)
    ]


def _sum(ring, vals):
    out = ring.zero()
    for v in vals:
        out = ring.add(out, v)
    return out


class NeutroMatrix:
    __slots__ = ("ring", "entries")

    def __init__(self, ring: BaseRing, rows: Sequence[Sequence]):
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise MatrixError("matrix must be square and nonempty")
        conv = []
        for r in rows:
            row = []
            for c in r:
                if isinstance(c, NeutroScalar):
                    if c.ring != ring:
                        raise RingMismatch(f"{c.ring} vs {ring}")
                elif isinstance(c, str):
                    c = parse_scalar(c, ring)
                else:
                    c = NeutroScalar(ring, c)
                row.append(c)
            conv.append(tuple(row))
        self.ring = ring
        self.entries = tuple(conv)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, ring, dim):
        return cls(ring, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, ring, dim):
        return cls(ring, [[0] * dim for _ in range(dim)])

    def _check(self, other):
        if not isinstance(other, NeutroMatrix):
            raise TypeError("expected a matrix")
        if other.ring != self.ring or other.dim != self.dim:
            raise MatrixError("shape or ring mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        m = self.dim
        return NeutroMatrix(self.ring, [[self.entries[i][j] + o.entries[i][j] for j in range(m)] for i in range(m)])

    def __neg__(self):
        return NeutroMatrix(self.ring, [[-c for c in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NeutroScalar)):
            return NeutroMatrix(self.ring, [[c * other for c in r] for r in self.entries])
        o = self._check(other)
        m = self.dim
        zero = NeutroScalar(self.ring)
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = zero
                for k in range(m):
                    acc = acc + self.entries[i][k] * o.entries[k][j]
                row.append(acc)
            rows.append(row)
        return NeutroMatrix(self.ring, rows)

    def __rmul__(self, other):
        return NeutroMatrix(self.ring, [[other * c for c in r] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, NeutroMatrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.entries))

    def is_zero(self) -> bool:
        return all(c.is_zero for r in self.entries for c in r)

    def transpose(self) -> "NeutroMatrix":
        m = self.dim
        return NeutroMatrix(self.ring, [[self.entries[j][i] for j in range(m)] for i in range(m)])

    def has_indeterminate(self) -> bool:
        return any(c.b != 0 for r in self.entries for c in r)

    def determinant(self) -> NeutroScalar:
        return _det_scalar(self.entries)

    def split(self) -> tuple:
        """Entrywise split into two classical matrices over the base ring."""
        left = [[c.split()[0] for c in r] for r in self.entries]
        right = [[c.split()[1] for c in r] for r in self.entries]
        return left, right

    @classmethod
    def unsplit(cls, pair, ring):
        left, right = pair
        m = len(left)
        return cls(ring, [[NeutroScalar.unsplit((left[i][j], right[i][j]), ring) for j in range(m)] for i in range(m)])

    def is_invertible(self) -> bool:
        return all(self.ring.is_unit(_det_base(self.ring, part)) for part in self.split())

    def inverse(self) -> "NeutroMatrix":
        parts = [_inverse_base(self.ring, part) for part in self.split()]
        if any(p is None for p in parts):
            raise ZeroDivisionError("matrix is not invertible")
        return NeutroMatrix.unsplit(parts, self.ring)

    def to_lists(self) -> list:
        return [[str(c) for c in r] for r in self.entries]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(c) for c in r) + "]" for r in self.entries) + "]"

    def __repr__(self):
        return f"NeutroMatrix({self})"


def _det_scalar(rows) -> NeutroScalar:
    m = len(rows)
    if m == 1:
        return rows[0][0]
    if m == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    out = NeutroScalar(rows[0][0].ring)
    for j in range(m):
        if rows[0][j].is_zero:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_scalar(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def determinant(x: NeutroMatrix) -> NeutroScalar:
    return x.determinant()


def split_product(x: NeutroMatrix, y: NeutroMatrix) -> NeutroMatrix:
    """Product through the split images; an oracle for the direct product."""
    l1, r1 = x.split()
    l2, r2 = y.split()
    return NeutroMatrix.unsplit((_mul_base(x.ring, l1, l2), _mul_base(x.ring, r1, r2)), x.ring)


def idempotent_report(x: NeutroMatrix) -> dict:
    return {"idempotent": x * x == x, "neutrosophic": x.has_indeterminate()}


# -- zero divisors -------------------------------------------------------------


@dataclass
class ZeroDivisorWitness:
    witness: NeutroMatrix
    side: str
    one_sided: bool
    search: str  # "exhaustive" or "random"


def _kernel_vectors(ring: BaseRing, rows) -> list:
    """Every column vector v with rows * v = 0 (finite base only)."""
    m = len(rows)
    out = []
    for v in itertools.product(range(ring.modulus), repeat=m):
        if all(_sum(ring, (ring.mul(rows[i][k], v[k]) for k in range(m))) == 0 for i in range(m)):
            out.append(v)
    return out


def one_sided_zero_divisor_search(
    x: NeutroMatrix, side: str = "right", seed: int = 0, probes: int = 20000
):
    """Nonzero y with x*y = 0 (side="right") or y*x = 0 (side="left").

    A witness that fails the other order is preferred.  Returns None when the
    exhaustive search proves there is none, UNKNOWN when random probes found
    nothing.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    ring = x.ring
    if not ring.is_finite:
        raise MatrixError("zero-divisor search needs a finite base ring")
    target = x if side == "right" else x.transpose()

    def kills(y):
        return (x * y).is_zero() if side == "right" else (y * x).is_zero()

    def other(y):
        return (y * x).is_zero() if side == "right" else (x * y).is_zero()

    m = x.dim
    if m <= EXHAUSTIVE_DIM:
        kernels = [_kernel_vectors(ring, part) for part in target.split()]
        total = (len(kernels[0]) ** m) * (len(kernels[1]) ** m)
        if total <= EXHAUSTIVE_CANDIDATES:
            fallback = None
            for c1 in itertools.product(kernels[0], repeat=m):
                for c2 in itertools.product(kernels[1], repeat=m):
                    # columns of the (transposed) witness live in the kernels
                    l = [[c1[j][i] for j in range(m)] for i in range(m)]
                    r = [[c2[j][i] for j in range(m)] for i in range(m)]
                    y = NeutroMatrix.unsplit((l, r), ring)
                    if y.is_zero():
                        continue
                    if side == "left":
                        y = y.transpose()
                    if not other(y):
                        return ZeroDivisorWitness(y, side, True, "exhaustive")
                    if fallback is None:
                        fallback = y
            if fallback is not None:
                return ZeroDivisorWitness(fallback, side, False, "exhaustive")
            return None
    rng = random.Random(seed)
    n = ring.modulus
    fallback = None
    for _ in range(probes):
        y = NeutroMatrix(ring, [[NeutroScalar(ring, rng.randrange(n), rng.randrange(n)) for _ in range(m)] for _ in range(m)])
        if y.is_zero() or not kills(y):
            continue
        if not other(y):
            return ZeroDivisorWitness(y, side, True, "random")
        fallback = fallback or y
    if fallback is not None:
        return ZeroDivisorWitness(fallback, side, False, "random")
    return UNKNOWN


# -- finite matrix magmas --------------------------------------------------------


def _all_matrices(ring: BaseRing, dim: int):
    n = ring.modulus
    scal = [NeutroScalar(ring, a, b) for a in range(n) for b in range(n)]
    for entries in itertools.product(scal, repeat=dim * dim):
        yield NeutroMatrix(ring, [entries[i * dim : (i + 1) * dim] for i in range(dim)])


def _magma_from(mats: list, name: str, ring: BaseRing, entry_filter=None) -> FiniteMagma:
    n = ring.modulus
    dim = mats[0].dim
    code = {}
    raw = []
    for k, mat in enumerate(mats):
        flat = tuple((c.a, c.b) for r in mat.entries for c in r)
        code[flat] = k
        raw.append(flat)

    def mul(x, y):
        out = []
        for i in range(dim):
            for j in range(dim):
                a = b = 0
                for t in range(dim):
                    p, q = x[i * dim + t]
                    s, u = y[t * dim + j]
                    a += p * s
                    b += p * u + q * s + q * u
                out.append((a % n, b % n))
        return tuple(out)

    table = []
    for x in raw:
        row = []
        for y in raw:
            z = mul(x, y)
            if z not in code:
                raise MatrixError("matrix set is not closed under multiplication")
            row.append(code[z])
        table.append(row)
    ident = NeutroMatrix.identity(ring, dim) * NeutroScalar.indeterminate(ring)
    ind = code.get(tuple((c.a, c.b) for r in ident.entries for c in r))
    return FiniteMagma(
        [str(mm) for mm in mats],
        table,
        neutro=[mm.has_indeterminate() for mm in mats],
        op_name="*",
        name=name,
        payload=mats,
        indeterminate=ind,
    )


def matrix_magma(ring: BaseRing, dim: int = 2, cap: int = 4096) -> FiniteMagma:
    """All dim x dim matrices under multiplication."""
    if not ring.is_finite or ring.modulus ** (2 * dim * dim) > cap:
        raise MatrixError("matrix semigroup too large to tabulate")
    return _magma_from(list(_all_matrices(ring, dim)), f"M{dim}(<{ring} u I>)", ring)


def invertible_matrices_magma(ring: BaseRing, dim: int = 2, cap: int = MAGMA_CAP) -> FiniteMagma:
    """Matrices with a unit determinant, under multiplication."""
    if not ring.is_finite or ring.modulus ** (2 * dim * dim) > 1 << 16:
        raise MatrixError("base ring too large for the invertible-matrix builder")
    mats = [x for x in _all_matrices(ring, dim) if x.determinant().is_unit()]
    if len(mats) > cap:
        raise MatrixError(f"{len(mats)} invertible matrices exceed the cap {cap}")
    return _magma_from(mats, f"GL{dim}(<{ring} u I>)", ring)


def noncommuting_pair(mats: Sequence[NeutroMatrix]) -> Optional[tuple]:
    for x in mats:
        for y in mats:
            if x * y != y * x:
                return (x, y)
    return None


def parse_matrix(rows, ring: BaseRing) -> NeutroMatrix:
    """Nested lists of scalar strings or numbers."""
    return NeutroMatrix(ring, [[parse_scalar(str(c), ring) for c in r] for r in rows])
