"""Finite magmas as Cayley tables, standard builders and the two ways of adjoining I."""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

from .scalars import BaseRing, NeutroScalar, Zmod

EXHAUSTIVE_CAP = 24
MAX_GENERATORS = 3


class MagmaError(ValueError):
    pass


def bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class FiniteMagma:
    """A finite set with a binary operation given by its table.

    Elements are referred to by index; `labels` gives their display names and
    `neutro` marks the elements that carry the indeterminate.  Subsets are int
    bitmasks over the indices.
    """

    def __init__(
        self,
        labels: Sequence[str],
        table: Sequence[Sequence[int]],
        *,
        neutro: Optional[Sequence[bool]] = None,
        op_name: str = "*",
        name: str = "magma",
        payload: Optional[Sequence] = None,
        indeterminate: Optional[int] = None,
    ):
        n = len(labels)
        if n == 0:
            raise MagmaError("a magma needs at least one element")
        if len(set(labels)) != n:
            raise MagmaError("labels must be unique")
        if len(table) != n or any(len(row) != n for row in table):
            raise MagmaError(f"table must be {n}x{n}")
        rows = tuple(tuple(int(v) for v in row) for row in table)
        for row in rows:
            for v in row:
                if not 0 <= v < n:
                    raise MagmaError(f"table entry {v} is not an element index")
        self.labels = tuple(str(s) for s in labels)
        self.table = rows
        self.neutro = tuple(bool(f) for f in neutro) if neutro is not None else (False,) * n
        self.op_name = op_name
        self.name = name
        self.payload = tuple(payload) if payload is not None else None
        self.indeterminate = indeterminate
        self._index = {s: i for i, s in enumerate(self.labels)}
        self.identity = self._find_identity()

    # -- basics ---------------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteMagma({self.name}, order={self.order})"

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, label) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.order:
                return label
            raise MagmaError(f"index {label} out of range")
        try:
            return self._index[str(label)]
        except KeyError:
            raise MagmaError(f"{label!r} is not an element of {self.name}") from None

    def index_of_payload(self, obj) -> int:
        if self.payload is None:
            raise MagmaError(f"{self.name} has no payload")
        for i, p in enumerate(self.payload):
            if p == obj:
                return i
        raise MagmaError(f"{obj!r} is not in {self.name}")

    def power(self, i: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        out = i
        for _ in range(k - 1):
            out = self.table[out][i]
        return out

    def _find_identity(self) -> Optional[int]:
        n = self.order
        for e in range(n):
            row = self.table[e]
            if all(row[x] == x and self.table[x][e] == x for x in range(n)):
                return e
        return None

    @cached_property
    def zero(self) -> Optional[int]:
        """The absorbing element, if any."""
        n = self.order
        for z in range(n):
            if all(self.table[z][x] == z and self.table[x][z] == z for x in range(n)):
                return z
        return None

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    # -- subsets ----------------------------------------------------------------
    def subset(self, items: Iterable) -> int:
        mask = 0
        for it in items:
            mask |= 1 << self.index(it)
        return mask

    def members(self, mask: int) -> list:
        return list(bits(mask))

    def labels_of(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    def has_neutro(self, mask: int) -> bool:
        return any(self.neutro[i] for i in bits(mask))

    def plain_part(self, mask: Optional[int] = None) -> int:
        if mask is None:
            mask = self.full_mask
        out = 0
        for i in bits(mask):
            if not self.neutro[i]:
                out |= 1 << i
        return out

    def product_set(self, left: int, right: int) -> int:
        out = 0
        for i in bits(left):
            row = self.table[i]
            for j in bits(right):
                out |= 1 << row[j]
        return out

    def is_closed(self, mask: int) -> bool:
        return self.product_set(mask, mask) & ~mask == 0

    def closure(self, mask: int) -> int:
        """Smallest closed subset containing mask."""
        if mask == 0:
            raise MagmaError("closure of the empty set is undefined here")
        queue = list(bits(mask))
        return self._grow(mask, queue, 0)

    def extend_closed(self, closed: int, x: int) -> int:
        """Closure of closed | {x}, reusing the fact that `closed` is already closed."""
        if closed >> x & 1:
            return closed
        queue = list(bits(closed))
        start = len(queue)
        queue.append(x)
        return self._grow(closed | 1 << x, queue, start)

    def _grow(self, seen: int, queue: list, start: int) -> int:
        t = self.table
        i = start
        while i < len(queue):
            x = queue[i]
            rx = t[x]
            for j in range(i + 1):
                y = queue[j]
                z = rx[y]
                if not seen >> z & 1:
                    seen |= 1 << z
                    queue.append(z)
                z = t[y][x]
                if not seen >> z & 1:
                    seen |= 1 << z
                    queue.append(z)
            i += 1
        return seen

    def closed_subsets(self, max_carrier: int = EXHAUSTIVE_CAP, max_generators: int = MAX_GENERATORS):
        """All nonempty closed subsets, with the enumeration mode used.

        Up to `max_carrier` elements every closed subset is reached by walking
        the closure lattice from singletons; beyond that only subsets generated
        by at most `max_generators` elements are produced.
        """
        exhaustive = self.order <= max_carrier
        level = {self.closure(1 << x) for x in range(self.order)}
        found = set(level)
        depth = 1
        while level and (exhaustive or depth < max_generators):
            nxt = set()
            for s in level:
                for x in range(self.order):
                    if not s >> x & 1:
                        t = self.extend_closed(s, x)
                        if t not in found:
                            found.add(t)
                            nxt.add(t)
            level = nxt
            depth += 1
        mode = "exhaustive" if exhaustive else f"generators<={max_generators}"
        return sorted(found, key=lambda m: (popcount(m), m)), mode

    def restrict(self, mask: int, name: Optional[str] = None) -> "FiniteMagma":
        """The closed subset `mask` as a magma of its own."""
        if not self.is_closed(mask):
            raise MagmaError("subset is not closed")
        idx = list(bits(mask))
        pos = {v: k for k, v in enumerate(idx)}
        table = [[pos[self.table[i][j]] for j in idx] for i in idx]
        ind = pos.get(self.indeterminate) if self.indeterminate is not None else None
        return FiniteMagma(
            [self.labels[i] for i in idx],
            table,
            neutro=[self.neutro[i] for i in idx],
            op_name=self.op_name,
            name=name or f"{self.name}|sub",
            payload=[self.payload[i] for i in idx] if self.payload else None,
            indeterminate=ind,
        )

    # -- laws -------------------------------------------------------------------
    @cached_property
    def is_associative(self) -> bool:
        t = self.table
        n = self.order
        for x in range(n):
            rx = t[x]
            for y in range(n):
                xy = rx[y]
                ry = t[y]
                txy = t[xy]
                for z in range(n):
                    if txy[z] != rx[ry[z]]:
                        return False
        return True

    @cached_property
    def is_commutative(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    def is_group_subset(self, mask: int) -> bool:
        """Closed subset that is a group under the table (with its own identity)."""
        if mask == 0 or not self.is_closed(mask):
            return False
        elems = list(bits(mask))
        t = self.table
        e = None
        for c in elems:
            if all(t[c][x] == x and t[x][c] == x for x in elems):
                e = c
                break
        if e is None:
            return False
        for x in elems:
            if not any(t[x][y] == e and t[y][x] == e for y in elems):
                return False
        return self.is_associative or all(
            t[t[x][y]][z] == t[x][t[y][z]] for x in elems for y in elems for z in elems
        )

    @cached_property
    def is_group(self) -> bool:
        return self.is_associative and self.is_group_subset(self.full_mask)

    def power_cycle(self, i: int):
        """(index, period, powers) of the sequence x, x^2, x^3, ..."""
        seen = {}
        powers = []
        cur = i
        k = 1
        while cur not in seen:
            seen[cur] = k
            powers.append(cur)
            cur = self.table[cur][i]
            k += 1
        start = seen[cur]
        return start, k - start, powers

    def exponent_to(self, i: int, target: Optional[int]) -> Optional[int]:
        """Least k >= 1 with x^k = target."""
        if target is None:
            return None
        _, _, powers = self.power_cycle(i)
        for k, p in enumerate(powers, start=1):
            if p == target:
                return k
        return None

    def cyclic_subgroup(self, i: int) -> int:
        start, period, powers = self.power_cycle(i)
        mask = 0
        for p in powers[start - 1 :]:
            mask |= 1 << p
        return mask

    @cached_property
    def is_s_semigroup(self) -> bool:
        """Some proper subset of order >= 2 is a group under the table."""
        for x in range(self.order):
            start, period, _ = self.power_cycle(x)
            if period >= 2 and popcount(self.cyclic_subgroup(x)) < self.order:
                return True
        return False

    def idempotents(self) -> list:
        return [i for i in range(self.order) if self.table[i][i] == i]

    def element_orders(self) -> dict:
        out = {}
        for i in range(self.order):
            start, period, _ = self.power_cycle(i)
            out[self.labels[i]] = {
                "order": self.exponent_to(i, self.identity),
                "index": start,
                "period": period,
            }
        return out

    def center(self) -> int:
        t = self.table
        n = self.order
        mask = 0
        for x in range(n):
            if all(t[x][a] == t[a][x] for a in range(n)):
                mask |= 1 << x
        return mask

    def describe(self):
        return {"elements": list(self.labels), "table": [list(r) for r in self.table], "identity": self.identity}


def predicates(m: FiniteMagma) -> dict:
    return {
        "is_semigroup": m.is_associative,
        "is_monoid": m.is_associative and m.identity is not None,
        "is_group": m.is_group,
        "is_commutative": m.is_commutative,
        "is_s_semigroup": m.is_associative and m.is_s_semigroup,
        "idempotent_elements": [m.labels[i] for i in m.idempotents()],
        "element_orders": m.element_orders(),
    }


# -- builders ---------------------------------------------------------------------


def from_elements(
    elements: Sequence,
    op: Callable,
    *,
    labels: Optional[Sequence[str]] = None,
    neutro: Optional[Sequence[bool]] = None,
    name: str = "magma",
    op_name: str = "*",
    indeterminate=None,
) -> FiniteMagma:
    """Magma on a list of hashable objects closed under op."""
    pos = {e: k for k, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise MagmaError("duplicate elements")
    table = []
    for x in elements:
        row = []
        for y in elements:
            z = op(x, y)
            if z not in pos:
                raise MagmaError(f"{x} {op_name} {y} = {z} leaves the set")
            row.append(pos[z])
        table.append(row)
    if labels is None:
        labels = [str(e) for e in elements]
    return FiniteMagma(
        labels,
        table,
        neutro=neutro,
        name=name,
        op_name=op_name,
        payload=list(elements),
        indeterminate=pos[indeterminate] if indeterminate is not None else None,
    )


def from_table(labels, table, *, name="table", neutro=None, indeterminate=None) -> FiniteMagma:
    ind = None
    if indeterminate is not None:
        ind = list(labels).index(indeterminate) if isinstance(indeterminate, str) else indeterminate
    return FiniteMagma(labels, table, name=name, neutro=neutro, indeterminate=ind)


def _power_label(base: str, k: int) -> str:
    if k == 0:
        return "1"
    return base if k == 1 else f"{base}^{k}"


def cyclic(n: int, gen: str = "g") -> FiniteMagma:
    if n < 1:
        raise MagmaError("cyclic group order must be >= 1")
    labels = [_power_label(gen, k) for k in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteMagma(labels, table, name=f"cyclic:{n}", payload=list(range(n)))


def dihedral(n: int) -> FiniteMagma:
    """Order 2n: b^i a^j with a^2 = 1, b^n = 1, bab = a."""
    if n < 1:
        raise MagmaError("dihedral parameter must be >= 1")
    elems = [(i, j) for j in range(2) for i in range(n)]

    def op(x, y):
        i, j = x
        k, l = y
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)

    def label(x):
        i, j = x
        b = "" if i == 0 else _power_label("b", i)
        if j == 0:
            return b or "1"
        return b + "a"

    return from_elements(elems, op, labels=[label(x) for x in elems], name=f"dihedral:{n}")


def _compose(p, q):
    # apply p first, then q
    return tuple(q[p[k]] for k in range(len(p)))


def _cycle_label(p) -> str:
    n = len(p)
    seen = [False] * n
    parts = []
    for s in range(n):
        if seen[s] or p[s] == s:
            seen[s] = True
            continue
        cyc = []
        k = s
        while not seen[k]:
            seen[k] = True
            cyc.append(str(k + 1))
            k = p[k]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "1"


def symmetric(n: int) -> FiniteMagma:
    """All permutations of {1..n}; x*y applies x first, then y."""
    if not 1 <= n <= 5:
        raise MagmaError("symmetric groups are supported for n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    return from_elements(perms, _compose, labels=[_cycle_label(p) for p in perms], name=f"symmetric:{n}")


def transformation_semigroup(n: int) -> FiniteMagma:
    """All maps {1..n} -> {1..n} under composition (left map applied first)."""
    if not 1 <= n <= 4:
        raise MagmaError("full transformation semigroups are supported for n <= 4")
    ident = tuple(range(n))
    maps = [ident] + [m for m in itertools.product(range(n), repeat=n) if m != ident]
    labels = ["[" + ",".join(str(v + 1) for v in m) + "]" for m in maps]
    return from_elements(maps, _compose, labels=labels, name=f"transformations:{n}")


def generated_transformations(n: int, generators: Sequence[Sequence[int]]) -> FiniteMagma:
    """Sub-monoid of maps on {0..n-1} generated by the given image tuples."""
    ident = tuple(range(n))
    found = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = _compose(f, g)
                if h not in found:
                    found.add(h)
                    nxt.append(h)
        frontier = nxt
    maps = [ident] + sorted(found - {ident})
    return from_elements(maps, _compose, labels=[_cycle_label(m) if len(set(m)) == n else str([v + 1 for v in m]) for m in maps], name=f"transformations:{n}|gen")


def additive_mod(n: int) -> FiniteMagma:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteMagma([str(k) for k in range(n)], table, name=f"add-mod:{n}", op_name="+", payload=list(range(n)))


def _residues(n: int, values: Sequence[int], name: str) -> FiniteMagma:
    vals = sorted(set(v % n for v in values), key=lambda v: (v != 1 % n, v))
    return from_elements(vals, lambda x, y: x * y % n, name=name)


def multiplicative_mod(n: int) -> FiniteMagma:
    """(Z/n, x), identity listed first."""
    return _residues(n, range(n), f"mul-mod:{n}")


def units_mod(n: int) -> FiniteMagma:
    import math

    return _residues(n, [k for k in range(1, n) if math.gcd(k, n) == 1], f"units-mod:{n}")


def nonzero_mod(n: int) -> FiniteMagma:
    """{1, ..., n-1} under multiplication; closed only for prime n."""
    return _residues(n, range(1, n), f"nonzero-mod:{n}")


def trivial() -> FiniteMagma:
    return cyclic(1)


BUILDERS = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "transformations": transformation_semigroup,
    "add-mod": additive_mod,
    "mul-mod": multiplicative_mod,
    "units-mod": units_mod,
    "nonzero-mod": nonzero_mod,
}


def build_standard(spec: str) -> FiniteMagma:
    """Build from "family:param", e.g. "cyclic:4" or "transformations:3"."""
    try:
        family, param = spec.split(":", 1)
        k = int(param)
    except ValueError:
        raise MagmaError(f"expected family:param, got {spec!r}") from None
    if family not in BUILDERS:
        raise MagmaError(f"unknown family {family!r}; choose from {sorted(BUILDERS)}")
    return BUILDERS[family](k)


# -- adjoining I ----------------------------------------------------------------


def tagged_label(label: str) -> str:
    return "I" if label == "1" else f"{label}I"


def neutrosophify_tagged(m: FiniteMagma) -> FiniteMagma:
    """G u GI where products carry the tag: g(hI) = (gI)h = (gI)(hI) = (gh)I."""
    n = m.order
    labels = list(m.labels) + [tagged_label(s) for s in m.labels]
    table = []
    for t in (0, 1):
        for i in range(n):
            row = m.table[i]
            table.append([row[j] + n * (t | s) for s in (0, 1) for j in range(n)])
    ind = m.identity + n if m.identity is not None else None
    return FiniteMagma(
        labels,
        table,
        neutro=[False] * n + [True] * n,
        name=f"{m.name}+tagged",
        op_name=m.op_name,
        payload=[(i, 0) for i in range(n)] + [(i, 1) for i in range(n)],
        indeterminate=ind,
    )


def _ambient_key(x: NeutroScalar):
    return (x.b != 0, x.b, x.a)


def neutrosophify_ambient(ring, op: str, generators: Iterable) -> FiniteMagma:
    """Close generators and I under + or x inside <Z/n u I>.

    `ring` is a BaseRing (Z/n) or anything with a `base` attribute holding one.
    Generators may be ints, strings like "1+I" or NeutroScalars.
    """
    base: BaseRing = getattr(ring, "base", ring)
    if not isinstance(base, BaseRing) or not base.is_finite:
        raise MagmaError("ambient closure needs a finite base ring Z/n")
    if op not in ("add", "mul"):
        raise MagmaError("op must be 'add' or 'mul'")
    from .scalars import parse_scalar

    gens = []
    for g in generators:
        if isinstance(g, NeutroScalar):
            gens.append(g)
        elif isinstance(g, str):
            gens.append(parse_scalar(g, base))
        else:
            gens.append(NeutroScalar(base, g, 0))
    fn = (lambda x, y: x + y) if op == "add" else (lambda x, y: x * y)
    one_i = NeutroScalar.indeterminate(base)
    found = {one_i, *gens}
    frontier = list(found)
    while frontier:
        nxt = []
        current = list(found)
        for x in frontier:
            for y in current:
                for z in (fn(x, y), fn(y, x)):
                    if z not in found:
                        found.add(z)
                        nxt.append(z)
                        current.append(z)
        frontier = nxt
    elems = sorted(found, key=_ambient_key)
    unit = NeutroScalar(base, 0 if op == "add" else 1, 0)
    if unit in found:
        elems.remove(unit)
        elems.insert(0, unit)
    return from_elements(
        elems,
        fn,
        neutro=[x.b != 0 for x in elems],
        name=f"<{base} u I>,{'+' if op == 'add' else 'x'}",
        op_name="+" if op == "add" else "*",
        indeterminate=one_i,
    )


def direct_product(ms: Sequence[FiniteMagma]) -> FiniteMagma:
    if not ms:
        raise MagmaError("direct product of an empty list")
    sizes = [m.order for m in ms]
    elems = list(itertools.product(*[range(s) for s in sizes]))
    pos = {e: k for k, e in enumerate(elems)}
    table = [
        [pos[tuple(m.table[a][b] for m, a, b in zip(ms, x, y))] for y in elems] for x in elems
    ]
    labels = ["(" + ",".join(m.labels[a] for m, a in zip(ms, x)) + ")" for x in elems]
    neutro = [any(m.neutro[a] for m, a in zip(ms, x)) for x in elems]
    ind = None
    if all(m.indeterminate is not None for m in ms):
        ind = pos[tuple(m.indeterminate for m in ms)]
    return FiniteMagma(
        labels, table, neutro=neutro, name=" x ".join(m.name for m in ms), payload=elems, indeterminate=ind
    )


def unique_product_check(m: FiniteMagma, a: int, b: int) -> Optional[int]:
    """An element with exactly one factorisation x = s*t (s in a, t in b), smallest index first."""
    if a == 0 or b == 0:
        raise MagmaError("both subsets must be nonempty")
    counts = {}
    for s in bits(a):
        row = m.table[s]
        for t in bits(b):
            z = row[t]
            counts[z] = counts.get(z, 0) + 1
    singles = sorted(z for z, c in counts.items() if c == 1)
    return singles[0] if singles else None


def cayley_csv(m: FiniteMagma) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([m.op_name] + list(m.labels))
    for i, row in enumerate(m.table):
        w.writerow([m.labels[i]] + [m.labels[j] for j in row])
    return buf.getvalue()


def zn_neutro_elements(n: int) -> list:
    base = Zmod(n)
    return [NeutroScalar(base, a, b) for a in range(n) for b in range(n)]


def full_neutro_magma(n: int, op: str) -> FiniteMagma:
    """All of <Z/n u I> under + or x."""
    return neutrosophify_ambient(Zmod(n), op, zn_neutro_elements(n))
