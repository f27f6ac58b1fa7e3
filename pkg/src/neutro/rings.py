"""Finite neutrosophic rings: subrings, ideals, quotients, homomorphisms and radicals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

from .magma import FiniteMagma, bits, popcount
from .scalars import BaseRing, NeutroScalar, Zmod

SUBRING_CAP = 256
PARAMETRIC_CAP = 4096

NEUTRO_SUBRING = "NeutrosophicSubring"
PSEUDO_SUBRING = "PseudoNeutrosophicSubring"
JUST_SUBRING = "JustSubring"

IDEAL_KIND = {
    NEUTRO_SUBRING: "NeutrosophicIdeal",
    PSEUDO_SUBRING: "PseudoNeutrosophicIdeal",
    JUST_SUBRING: "JustIdeal",
}


class RingError(ValueError):
    pass


class FiniteRing:
    """Common interface: elements are indices 0..order-1, subsets are bitmasks."""

    labels: tuple
    zero: int
    indeterminate: Optional[int]
    neutro: tuple
    name: str

    @property
    def order(self) -> int:
        return len(self.labels)

    def add(self, i: int, j: int) -> int:
        raise NotImplementedError

    def mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def neg(self, i: int) -> int:
        raise NotImplementedError

    def index(self, label) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            return label
        try:
            return self._index[str(label)]
        except KeyError:
            raise RingError(f"{label!r} is not in {self.name}") from None

    def subset(self, items) -> int:
        mask = 0
        for it in items:
            mask |= 1 << self.index(it)
        return mask

    def labels_of(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def one(self) -> Optional[int]:
        n = self.order
        for e in range(n):
            if all(self.mul(e, x) == x and self.mul(x, e) == x for x in range(n)):
                return e
        return None

    @cached_property
    def is_commutative(self) -> bool:
        n = self.order
        return all(self.mul(i, j) == self.mul(j, i) for i in range(n) for j in range(i))

    def times_int(self, k: int, x: int) -> int:
        out = self.zero
        for _ in range(k):
            out = self.add(out, x)
        return out

    def additive_order(self, x: int) -> int:
        k, cur = 1, x
        while cur != self.zero:
            cur = self.add(cur, x)
            k += 1
        return k

    def ring_generators(self) -> list:
        """Elements whose products and integer combinations give the whole ring."""
        return list(range(self.order))

    def indeterminate_times(self, x: int) -> Optional[int]:
        if self.indeterminate is None:
            return None
        return self.mul(self.indeterminate, x)

    def is_pure_indeterminate(self, x: int) -> bool:
        """Nonzero x with I*x = x."""
        return x != self.zero and self.indeterminate_times(x) == x

    def magma(self, op: str) -> FiniteMagma:
        fn = self.add if op == "add" else self.mul
        n = self.order
        table = [[fn(i, j) for j in range(n)] for i in range(n)]
        return FiniteMagma(
            self.labels,
            table,
            neutro=self.neutro,
            name=f"{self.name},{'+' if op == 'add' else 'x'}",
            op_name="+" if op == "add" else "*",
            indeterminate=self.indeterminate,
        )


class ZnNeutroRing(FiniteRing):
    """<Z/n u I> with element a + bI stored at index a*n + b."""

    def __init__(self, n: int):
        if n < 2:
            raise RingError("modulus must be >= 2")
        if n * n > PARAMETRIC_CAP:
            raise RingError(f"<Z{n} u I> has {n * n} elements, above the cap {PARAMETRIC_CAP}")
        self.n = n
        self.base = Zmod(n)
        self.scalars = [NeutroScalar(self.base, a, b) for a in range(n) for b in range(n)]
        self.labels = tuple(str(s) for s in self.scalars)
        self._index = {s: i for i, s in enumerate(self.labels)}
        self.zero = 0
        self.indeterminate = 1
        self.neutro = tuple(s.b != 0 for s in self.scalars)
        self.name = f"<Z{n} u I>"

    def add(self, i, j):
        n = self.n
        return ((i // n + j // n) % n) * n + (i % n + j % n) % n

    def neg(self, i):
        n = self.n
        return ((-(i // n)) % n) * n + (-(i % n)) % n

    def mul(self, i, j):
        n = self.n
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        return (a * c % n) * n + (a * d + b * c + b * d) % n

    def of(self, s) -> int:
        if isinstance(s, NeutroScalar):
            return s.a * self.n + s.b
        if isinstance(s, str):
            from .scalars import parse_scalar

            return self.of(parse_scalar(s, self.base))
        return (int(s) % self.n) * self.n

    def subset(self, items) -> int:
        mask = 0
        for it in items:
            mask |= 1 << (self.of(it) if not isinstance(it, int) else self.of(it))
        return mask

    @cached_property
    def one(self):
        return self.n

    def ring_generators(self):
        return [self.n, 1]

    @property
    def is_commutative(self):
        return True


class TabularRing(FiniteRing):
    def __init__(
        self,
        labels: Sequence[str],
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        *,
        zero: int = 0,
        neutro: Optional[Sequence[bool]] = None,
        indeterminate: Optional[int] = None,
        payload: Optional[Sequence] = None,
        name: str = "ring",
        check: bool = True,
    ):
        self.labels = tuple(labels)
        self._index = {s: i for i, s in enumerate(self.labels)}
        self.add_table = tuple(tuple(r) for r in add)
        self.mul_table = tuple(tuple(r) for r in mul)
        self.zero = zero
        self.neutro = tuple(neutro) if neutro is not None else (False,) * len(self.labels)
        self.indeterminate = indeterminate
        self.payload = tuple(payload) if payload is not None else None
        self.name = name
        self._neg = None
        if check:
            bad = check_ring_axioms(self)
            if bad:
                raise RingError(f"not a ring: {bad}")

    def add(self, i, j):
        return self.add_table[i][j]

    def mul(self, i, j):
        return self.mul_table[i][j]

    def neg(self, i):
        if self._neg is None:
            self._neg = [next(j for j in range(self.order) if self.add_table[x][j] == self.zero) for x in range(self.order)]
        return self._neg[i]


def tabular_from_elements(
    elements: Sequence,
    add: Callable,
    mul: Callable,
    *,
    zero,
    indeterminate=None,
    neutro: Optional[Callable] = None,
    name: str = "ring",
    labels: Optional[Sequence[str]] = None,
    check: bool = True,
) -> TabularRing:
    pos = {e: k for k, e in enumerate(elements)}

    def table(fn):
        out = []
        for x in elements:
            row = []
            for y in elements:
                z = fn(x, y)
                if z not in pos:
                    raise RingError(f"{x}, {y} -> {z} leaves the set")
                row.append(pos[z])
            out.append(row)
        return out

    return TabularRing(
        labels or [str(e) for e in elements],
        table(add),
        table(mul),
        zero=pos[zero],
        neutro=[neutro(e) for e in elements] if neutro else None,
        indeterminate=pos.get(indeterminate) if indeterminate is not None else None,
        payload=list(elements),
        name=name,
        check=check,
    )


def scalar_ring_from_subset(n: int, elements: Sequence, name: Optional[str] = None) -> TabularRing:
    """A subset of <Z/n u I> closed under + and x, as a ring of its own."""
    from .scalars import parse_scalar

    base = Zmod(n)
    elems = []
    for e in elements:
        s = e if isinstance(e, NeutroScalar) else parse_scalar(str(e), base)
        if s not in elems:
            elems.append(s)
    elems.sort(key=lambda s: (s.a, s.b))
    one_i = NeutroScalar.indeterminate(base)
    return tabular_from_elements(
        elems,
        lambda x, y: x + y,
        lambda x, y: x * y,
        zero=NeutroScalar(base),
        indeterminate=one_i if one_i in elems else None,
        neutro=lambda s: s.b != 0,
        name=name or f"subring of <Z{n} u I>",
    )


def check_ring_axioms(r: FiniteRing) -> Optional[str]:
    n = r.order
    z = r.zero
    for x in range(n):
        if r.add(x, z) != x or r.add(z, x) != x:
            return f"zero is not additive identity at {r.labels[x]}"
        if not any(r.add(x, y) == z for y in range(n)):
            return f"{r.labels[x]} has no additive inverse"
    for x in range(n):
        for y in range(n):
            if r.add(x, y) != r.add(y, x):
                return "addition is not commutative"
    for x in range(n):
        for y in range(n):
            xy = r.add(x, y)
            mxy = r.mul(x, y)
            for w in range(n):
                if r.add(xy, w) != r.add(x, r.add(y, w)):
                    return "addition is not associative"
                if r.mul(mxy, w) != r.mul(x, r.mul(y, w)):
                    return "multiplication is not associative"
                if r.mul(w, xy) != r.add(r.mul(w, x), r.mul(w, y)):
                    return "left distributivity fails"
                if r.mul(xy, w) != r.add(r.mul(x, w), r.mul(y, w)):
                    return "right distributivity fails"
    return None


def zn_neutro(n: int) -> ZnNeutroRing:
    return ZnNeutroRing(n)


def plain_zn(n: int) -> TabularRing:
    """Z/n as a tabular ring, for isomorphism checks."""
    return TabularRing(
        [str(k) for k in range(n)],
        [[(i + j) % n for j in range(n)] for i in range(n)],
        [[i * j % n for j in range(n)] for i in range(n)],
        name=f"Z{n}",
        check=False,
    )


# -- spans and closures ----------------------------------------------------------


def _extend_span(r: FiniteRing, mask: int, elems: list, g: int) -> int:
    """Grow the additive subgroup (mask, elems) by g in place; returns the new mask."""
    if mask >> g & 1:
        return mask
    base = list(elems)
    step = g
    while not mask >> step & 1:
        for h in base:
            z = r.add(h, step)
            if not mask >> z & 1:
                mask |= 1 << z
                elems.append(z)
        step = r.add(step, g)
    return mask


def additive_span(r: FiniteRing, gens) -> int:
    """Additive subgroup generated by the given element indices."""
    elems = [r.zero]
    mask = 1 << r.zero
    for g in gens:
        mask = _extend_span(r, mask, elems, g)
    return mask


def subring_closure(r: FiniteRing, mask: int) -> int:
    """Smallest subset containing mask closed under +, - and x.

    By bilinearity it is enough to multiply additive generators, so only the
    generators that actually enlarged the span are kept.
    """
    elems = [r.zero]
    span = 1 << r.zero
    gens = []
    pending = list(bits(mask))
    while pending:
        g = pending.pop()
        if span >> g & 1:
            continue
        span = _extend_span(r, span, elems, g)
        gens.append(g)
        for h in gens:
            for z in (r.mul(g, h), r.mul(h, g)):
                if not span >> z & 1:
                    pending.append(z)
    return span


def is_subring(r: FiniteRing, mask: int) -> bool:
    if not mask >> r.zero & 1:
        return False
    elems = list(bits(mask))
    for x in elems:
        if not mask >> r.neg(x) & 1:
            return False
        for y in elems:
            if not mask >> r.add(x, y) & 1 or not mask >> r.mul(x, y) & 1:
                return False
    return True


def determinate_part(r: FiniteRing, mask: int) -> int:
    out = 0
    for i in bits(mask):
        if not r.neutro[i]:
            out |= 1 << i
    return out


def indeterminate_multiples(r: FiniteRing) -> list:
    """The nonzero elements k*I."""
    if r.indeterminate is None:
        return []
    out = []
    cur = r.indeterminate
    while cur != r.zero and cur not in out:
        out.append(cur)
        cur = r.add(cur, r.indeterminate)
    return out


def classify_subring(r: FiniteRing, mask: int, checked: bool = False) -> str:
    """Neutrosophic when generated by a nonzero plain subring and some kI;
    pseudo when not of that form yet holding a nonzero x with I*x = x;
    otherwise just a subring."""
    if not checked and not is_subring(r, mask):
        raise RingError("subset is not a subring")
    d = determinate_part(r, mask)
    if d != 1 << r.zero:
        for k in indeterminate_multiples(r):
            if mask >> k & 1 and subring_closure(r, d | 1 << k) == mask:
                return NEUTRO_SUBRING
    if any(r.is_pure_indeterminate(x) for x in bits(mask)):
        return PSEUDO_SUBRING
    return JUST_SUBRING


def enumerate_subrings(r: FiniteRing, max_order: int = SUBRING_CAP, max_count: int = 50000) -> list:
    """Every subring (including {0} and the whole ring), sorted by (order, mask)."""
    if r.order > max_order:
        raise RingError(f"order {r.order} exceeds the subring enumeration cap {max_order}")
    atoms = {}
    for x in range(r.order):
        atoms.setdefault(subring_closure(r, 1 << x), x)
    atom_list = list(atoms)
    found = set(atom_list)
    frontier = list(atom_list)
    while frontier:
        nxt = []
        for s in frontier:
            for a in atom_list:
                if a & s == a:
                    continue
                t = subring_closure(r, s | a)
                if t not in found:
                    found.add(t)
                    nxt.append(t)
                    if len(found) > max_count:
                        raise RingError("too many subrings")
        frontier = nxt
    return sorted(found, key=lambda m: (popcount(m), m))


def subring_taxonomy(r: FiniteRing, max_order: int = SUBRING_CAP) -> list:
    """(mask, kind) for every proper nonzero subring."""
    out = []
    for s in enumerate_subrings(r, max_order):
        if s in (r.full_mask, 1 << r.zero):
            continue
        out.append((s, classify_subring(r, s, checked=True)))
    return out


# -- ideals ------------------------------------------------------------------


def span_with_generators(r: FiniteRing, seeds) -> tuple:
    """Additive span plus the seeds that actually enlarged it."""
    elems = [r.zero]
    mask = 1 << r.zero
    used = []
    for g in seeds:
        if not mask >> g & 1:
            mask = _extend_span(r, mask, elems, g)
            used.append(g)
    return mask, used


def ideal_closure(r: FiniteRing, seeds) -> tuple:
    """Two-sided ideal generated by seeds, with a list of additive generators."""
    elems = [r.zero]
    span = 1 << r.zero
    used = []
    ring_gens = r.ring_generators()
    pending = list(seeds)
    while pending:
        g = pending.pop()
        if span >> g & 1:
            continue
        span = _extend_span(r, span, elems, g)
        used.append(g)
        for t in ring_gens:
            pending.append(r.mul(t, g))
            pending.append(r.mul(g, t))
    return span, used


def principal_ideal(r: FiniteRing, x: int) -> int:
    return ideal_closure(r, [x])[0]


def is_ideal(r: FiniteRing, mask: int, side: str = "two_sided") -> bool:
    if not mask >> r.zero & 1:
        return False
    elems = list(bits(mask))
    for x in elems:
        for y in elems:
            if not mask >> r.add(x, y) & 1:
                return False
        if not mask >> r.neg(x) & 1:
            return False
        for a in range(r.order):
            if side in ("left", "two_sided") and not mask >> r.mul(a, x) & 1:
                return False
            if side in ("right", "two_sided") and not mask >> r.mul(x, a) & 1:
                return False
    return True


@dataclass(frozen=True)
class RingIdealRecord:
    subset: int
    kind: str
    order: int

    @property
    def trivial(self) -> bool:
        return self.kind == "Trivial"


def ideals_with_generators(r: FiniteRing, max_count: int = 50000) -> dict:
    """Every two-sided ideal mapped to a list of its additive generators."""
    found = {}
    for x in range(r.order):
        span, used = ideal_closure(r, [x])
        found.setdefault(span, used)
    principal = list(found.items())
    frontier = list(principal)
    while frontier:
        nxt = []
        for s, sg in frontier:
            for g, gg in principal:
                if g & s == g:
                    continue
                t, tg = span_with_generators(r, sg + gg)
                if t not in found:
                    found[t] = tg
                    nxt.append((t, tg))
                    if len(found) > max_count:
                        raise RingError("too many ideals")
        frontier = nxt
    return found


def all_ideals(r: FiniteRing, max_count: int = 50000) -> list:
    """Every two-sided ideal as a bitmask, sorted by (order, mask)."""
    return sorted(ideals_with_generators(r, max_count), key=lambda m: (popcount(m), m))


def ideals(r: FiniteRing) -> list:
    """Ideal records; {0} and the whole ring are tagged Trivial."""
    out = []
    for s in all_ideals(r):
        if s in (1 << r.zero, r.full_mask):
            kind = "Trivial"
        else:
            kind = IDEAL_KIND[classify_subring(r, s, checked=True)]
        out.append(RingIdealRecord(s, kind, popcount(s)))
    return out


def characteristic(r) -> int:
    if isinstance(r, BaseRing):
        return r.characteristic
    out = 1
    for x in range(r.order):
        k = r.additive_order(x)
        out = out * k // math.gcd(out, k)
    return out


# -- quotients -------------------------------------------------------------------

NEUTRO_QUOTIENT = "NeutrosophicQuotient"
FALSE_NEUTRO_QUOTIENT = "FalseNeutrosophicQuotient"
PSEUDO_QUOTIENT = "PseudoQuotientNeutrosophic"
FALSE_PSEUDO_QUOTIENT = "FalsePseudoQuotientNeutrosophic"


@dataclass
class QuotientClass:
    quotient: TabularRing
    klass: Optional[str]
    ideal_kind: str
    coset_of: list  # element index -> quotient index
    cosets: list  # quotient index -> bitmask


def quotient(r: FiniteRing, ideal: int) -> QuotientClass:
    if not is_ideal(r, ideal):
        raise RingError("not a two-sided ideal")
    n = r.order
    coset_of = [-1] * n
    cosets = []
    members = list(bits(ideal))
    for x in range(n):
        if coset_of[x] != -1:
            continue
        c = 0
        for i in members:
            c |= 1 << r.add(x, i)
        k = len(cosets)
        cosets.append(c)
        for y in bits(c):
            coset_of[y] = k
    reps = [next(bits(c)) for c in cosets]
    m = len(cosets)
    add = [[coset_of[r.add(reps[i], reps[j])] for j in range(m)] for i in range(m)]
    mul = [[coset_of[r.mul(reps[i], reps[j])] for j in range(m)] for i in range(m)]
    det_cosets = {coset_of[x] for x in range(n) if not r.neutro[x]}
    neutro = [k not in det_cosets for k in range(m)]
    ind = None
    if r.indeterminate is not None and coset_of[r.indeterminate] not in det_cosets:
        ind = coset_of[r.indeterminate]
    labels = [f"{r.labels[x]}+P" for x in reps]
    q = TabularRing(
        labels,
        add,
        mul,
        zero=coset_of[r.zero],
        neutro=neutro,
        indeterminate=ind,
        name=f"{r.name}/P",
        check=False,
    )
    if ideal in (1 << r.zero, r.full_mask):
        kind = "Trivial"
    else:
        kind = IDEAL_KIND[classify_subring(r, ideal)]
    bearing = ind is not None
    if kind == "NeutrosophicIdeal":
        klass = NEUTRO_QUOTIENT if bearing else FALSE_NEUTRO_QUOTIENT
    elif kind == "PseudoNeutrosophicIdeal":
        klass = PSEUDO_QUOTIENT if bearing else FALSE_PSEUDO_QUOTIENT
    else:
        klass = None
    return QuotientClass(q, klass, kind, coset_of, cosets)


# -- homomorphisms ---------------------------------------------------------------


@dataclass
class HomReport:
    ok: bool
    violation: Optional[str] = None
    witness: Optional[tuple] = None
    kernel: int = 0
    kernel_is_neutrosophic: bool = False


def verify_homomorphism(src: FiniteRing, dst: FiniteRing, mapping) -> HomReport:
    """mapping: list of dst indices by src index, or dict from src label to dst label."""
    if isinstance(mapping, dict):
        phi = [dst.index(mapping[src.labels[i]]) for i in range(src.order)]
    else:
        phi = [int(v) for v in mapping]
    if len(phi) != src.order:
        raise RingError("map must be total")
    for x in range(src.order):
        for y in range(src.order):
            if phi[src.add(x, y)] != dst.add(phi[x], phi[y]):
                return HomReport(False, "additivity", (src.labels[x], src.labels[y]))
            if phi[src.mul(x, y)] != dst.mul(phi[x], phi[y]):
                return HomReport(False, "multiplicativity", (src.labels[x], src.labels[y]))
    if src.indeterminate is not None:
        if dst.indeterminate is None or phi[src.indeterminate] != dst.indeterminate:
            return HomReport(False, "indeterminate", (src.labels[src.indeterminate],))
    kernel = 0
    for x in range(src.order):
        if phi[x] == dst.zero:
            kernel |= 1 << x
    kn = kernel not in (1 << src.zero,) and classify_subring(src, kernel) == NEUTRO_SUBRING
    return HomReport(True, kernel=kernel, kernel_is_neutrosophic=kn)


def canonical_zn_map(n: int, q: QuotientClass, r: ZnNeutroRing) -> list:
    """k -> k + P from Z/n into the quotient."""
    return [q.coset_of[r.of(k)] for k in range(n)]


def is_isomorphism(src: FiniteRing, dst: FiniteRing, phi: Sequence[int]) -> bool:
    if src.order != dst.order or sorted(phi) != list(range(dst.order)):
        return False
    for x in range(src.order):
        for y in range(src.order):
            if phi[src.add(x, y)] != dst.add(phi[x], phi[y]):
                return False
            if phi[src.mul(x, y)] != dst.mul(phi[x], phi[y]):
                return False
    return True


# -- radical and friends -----------------------------------------------------------


def zero_divisor_pairs_exist(r: FiniteRing) -> bool:
    n, z = r.order, r.zero
    return any(r.mul(x, y) == z for x in range(n) if x != z for y in range(n) if y != z)


def units(r: FiniteRing) -> int:
    e = r.one
    if e is None:
        return 0
    mask = 0
    for x in range(r.order):
        if any(r.mul(x, y) == e and r.mul(y, x) == e for y in range(r.order)):
            mask |= 1 << x
    return mask


QR_CAP = 256


def jacobson_radical(r: FiniteRing) -> int:
    """{a : a*s is right quasi-regular for every s}; z is right quasi-regular
    when z + w - z*w = 0 for some w."""
    n = r.order
    qr = [False] * n
    for z in range(n):
        for w in range(n):
            if r.add(r.add(z, w), r.neg(r.mul(z, w))) == r.zero:
                qr[z] = True
                break
    mask = 0
    for a in range(n):
        if all(qr[r.mul(a, s)] for s in range(n)):
            mask |= 1 << a
    return mask


def _products_zero(r: FiniteRing, ga, gb) -> bool:
    z = r.zero
    return all(r.mul(x, y) == z for x in ga for y in gb)


def is_nilpotent_ideal(r: FiniteRing, gens) -> bool:
    power = list(gens)
    seen = set()
    while power:
        mask, power = span_with_generators(r, [r.mul(x, y) for x in power for y in gens])
        if mask in seen:
            return False
        seen.add(mask)
    return True


def nilpotent_radical(r: FiniteRing, table: Optional[dict] = None) -> int:
    """Sum of all nilpotent ideals; equals the Jacobson radical of a finite ring."""
    table = table if table is not None else ideals_with_generators(r)
    gens = []
    for mask, g in table.items():
        if is_nilpotent_ideal(r, g):
            gens.extend(g)
    return span_with_generators(r, gens)[0]


def radical_and_semisimplicity(r: FiniteRing) -> dict:
    """Radical, semiprime/prime by ideal scans; domain and division-ring tests up to QR_CAP elements."""
    table = ideals_with_generators(r)
    nonzero_ids = [g for m, g in table.items() if m != 1 << r.zero]
    small = r.order <= QR_CAP
    j = jacobson_radical(r) if small else nilpotent_radical(r, table)
    semiprime = not any(_products_zero(r, g, g) for g in nonzero_ids)
    prime = not any(_products_zero(r, g, h) for g in nonzero_ids for h in nonzero_ids)
    nonzero = r.order > 1
    if small:
        has_zd = zero_divisor_pairs_exist(r)
        domain = nonzero and r.is_commutative and not has_zd
        division = nonzero and r.one is not None and popcount(units(r)) == r.order - 1
    else:
        domain = division = None
    return {
        "jacobson": j,
        "semisimple": j == 1 << r.zero,
        "semiprime": semiprime,
        "prime": prime,
        "integral_domain": domain,
        "division_ring": division,
    }


def _is_field_subset(r: FiniteRing, mask: int) -> bool:
    e = r.one
    if e is None or not mask >> e & 1 or popcount(mask) < 2:
        return False
    for x in bits(mask):
        if x == r.zero:
            continue
        if not any(r.mul(x, y) == e for y in bits(mask)):
            return False
    return all(r.mul(x, y) == r.mul(y, x) for x in bits(mask) for y in bits(mask))


def field_predicates(r: FiniteRing) -> dict:
    """Neutrosophic field: the plain elements form a field K and K with I generates r."""
    d = determinate_part(r, r.full_mask)
    ind = r.indeterminate
    is_nf = (
        ind is not None
        and is_subring(r, d)
        and _is_field_subset(r, d)
        and subring_closure(r, d | 1 << ind) == r.full_mask
    )
    subs = []
    if is_nf:
        for s in enumerate_subrings(r, max_order=max(r.order, SUBRING_CAP)):
            if s == r.full_mask or s & ~d:
                continue
            if _is_field_subset(r, s):
                p = subring_closure(r, s | 1 << ind)
                if p != r.full_mask:
                    subs.append(p)
    return {
        "is_neutrosophic_field": is_nf,
        "prime_neutrosophic_field": is_nf and not subs,
        "neutrosophic_subfields": subs,
        "characteristic": characteristic(r),
    }


@dataclass
class RingReport:
    order: int
    characteristic: int
    ideals: list
    quotients: list
    radical: dict
    field: dict
    extra: dict = field(default_factory=dict)


def analyze_ring(r: FiniteRing) -> RingReport:
    recs = ideals(r)
    quots = []
    for rec in recs:
        if rec.kind == "Trivial":
            continue
        q = quotient(r, rec.subset)
        quots.append((rec.subset, q))
    return RingReport(
        order=r.order,
        characteristic=characteristic(r),
        ideals=recs,
        quotients=quots,
        radical=radical_and_semisimplicity(r),
        field=field_predicates(r),
    )
