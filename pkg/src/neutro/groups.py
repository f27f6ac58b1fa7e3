"""Substructure classification for finite neutrosophic groups.

Kinds of proper closed subsets:

* PlainSubgroup: no element carries I and the subset is a group.
* NeutrosophicSubgroup: carries I and contains a group of plain elements of
  order at least 2.
* PseudoNeutrosophicSubgroup: carries I, has order at least 2, has its own
  identity, but holds no plain group of order 2 or more.
* ClosedNonGroup: everything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .magma import EXHAUSTIVE_CAP, FiniteMagma, MagmaError, bits, popcount

PLAIN = "PlainSubgroup"
NEUTRO = "NeutrosophicSubgroup"
PSEUDO = "PseudoNeutrosophicSubgroup"
CLOSED = "ClosedNonGroup"


@dataclass(frozen=True)
class SubstructureClass:
    subset: int
    kind: str
    order: int


def _own_identity(m: FiniteMagma, mask: int) -> Optional[int]:
    elems = list(bits(mask))
    for e in elems:
        if all(m.table[e][x] == x and m.table[x][e] == x for x in elems):
            return e
    return None


def has_plain_group(m: FiniteMagma, mask: int) -> bool:
    """True when the plain elements of mask contain a group of order >= 2."""
    for x in bits(mask):
        if m.neutro[x]:
            continue
        _, period, _ = m.power_cycle(x)
        if period >= 2:
            cyc = m.cyclic_subgroup(x)
            if not m.has_neutro(cyc):
                return True
    return False


def classify_subset(m: FiniteMagma, mask: int) -> SubstructureClass:
    if not m.is_closed(mask):
        raise MagmaError("subset is not closed")
    k = popcount(mask)
    if not m.has_neutro(mask):
        kind = PLAIN if m.is_group_subset(mask) else CLOSED
    elif has_plain_group(m, mask):
        kind = NEUTRO
    elif k >= 2 and _own_identity(m, mask) is not None:
        kind = PSEUDO
    else:
        kind = CLOSED
    return SubstructureClass(mask, kind, k)


@dataclass
class Enumeration:
    items: list
    mode: str


def enumerate_substructures(m: FiniteMagma, max_carrier: int = EXHAUSTIVE_CAP) -> Enumeration:
    """Every proper closed subset, classified."""
    subsets, mode = m.closed_subsets(max_carrier=max_carrier)
    items = [classify_subset(m, s) for s in subsets if s != m.full_mask]
    return Enumeration(items, mode)


def _divisibility_class(orders, total):
    if not orders:
        return "LagrangeFree"
    hits = [total % k == 0 for k in orders]
    if all(hits):
        return "Lagrange"
    return "WeaklyLagrange" if any(hits) else "LagrangeFree"


def lagrange_classify(m: FiniteMagma, subs: Optional[Enumeration] = None) -> dict:
    subs = subs or enumerate_substructures(m)
    n = m.order
    neutro = [s for s in subs.items if s.kind == NEUTRO]
    pseudo = [s for s in subs.items if s.kind == PSEUDO]
    return {
        "lagrange": _divisibility_class([s.order for s in neutro], n),
        "pseudo_lagrange": _divisibility_class([s.order for s in pseudo], n),
        "non_lagrange_subgroups": [s.subset for s in neutro if n % s.order],
        "non_lagrange_pseudo_subgroups": [s.subset for s in pseudo if n % s.order],
    }


def cauchy_classify(m: FiniteMagma) -> dict:
    """Per element: exponent to the identity and exponent to I.

    The identity and I themselves are trivially fine and do not count as
    witnesses either way.
    """
    n = m.order
    ident, ind = m.identity, m.indeterminate
    records = {}
    flags = []
    for x in range(n):
        torsion = m.exponent_to(x, ident)
        neutral = m.exponent_to(x, ind)
        cauchy = torsion is not None and n % torsion == 0
        cauchy_neutro = neutral is not None and n % neutral == 0
        records[m.labels[x]] = {
            "torsion_exponent": torsion,
            "neutrosophic_exponent": neutral,
            "cauchy": cauchy,
            "cauchy_neutrosophic": cauchy_neutro,
        }
        if x not in (ident, ind):
            flags.append(cauchy or cauchy_neutro)
    if flags and all(flags):
        agg = "StrongCauchy"
    elif any(flags):
        agg = "Cauchy"
    else:
        agg = "Neither"
    return {"cauchy": agg, "elements": records}


def prime_power_parts(n: int) -> dict:
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sylow_classify(m: FiniteMagma, subs: Optional[Enumeration] = None) -> dict:
    subs = subs or enumerate_substructures(m)
    records = {}
    for p, a in prime_power_parts(m.order).items():
        q = p ** a
        records[p] = {
            "prime_power": q,
            "sylow": [s.subset for s in subs.items if s.kind == NEUTRO and s.order == q],
            "pseudo_sylow": [s.subset for s in subs.items if s.kind == PSEUDO and s.order == q],
        }

    def agg(key, names):
        if not records:
            return names[0]
        hits = [bool(r[key]) for r in records.values()]
        if all(hits):
            return names[0]
        return names[1] if any(hits) else names[2]

    return {
        "sylow": agg("sylow", ("Sylow", "WeaklySylow", "SylowFree")),
        "pseudo_sylow": agg("pseudo_sylow", ("PseudoSylow", "WeaklyPseudoSylow", "PseudoSylowFree")),
        "primes": records,
    }


def cosets(m: FiniteMagma, h: int, side: str = "right", pseudo: bool = False) -> dict:
    """All distinct sets Hx (side="right") or xH (side="left").

    `pseudo` marks that h is a pseudo neutrosophic subgroup; the computation
    is the same, the flag only checks the kind.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if not m.is_closed(h):
        raise MagmaError("coset base must be closed")
    if pseudo and classify_subset(m, h).kind != PSEUDO:
        raise MagmaError("subset is not a pseudo neutrosophic subgroup")
    found = []
    for x in range(m.order):
        c = m.product_set(h, 1 << x) if side == "right" else m.product_set(1 << x, h)
        if c not in found:
            found.append(c)
    union = 0
    disjoint = True
    for c in found:
        if union & c:
            disjoint = False
        union |= c
    return {"cosets": found, "partitions": disjoint and union == m.full_mask}


def _absorbing(m: FiniteMagma, x: int) -> bool:
    return all(m.table[x][a] == x and m.table[a][x] == x for a in range(m.order))


def conjugate_check(
    m: FiniteMagma, p: int, k: int, action: Optional[FiniteMagma] = None
) -> Optional[tuple]:
    """Smallest (x, y) with xP = Ky as sets.

    `action` supplies the product used for xP and Ky when it differs from the
    magma's own operation (it must share the carrier labels).  Absorbing
    elements of the action are skipped, since they make every pair conjugate.
    """
    act, p, k, back = _in_action(m, action, p, k)
    candidates = [x for x in range(act.order) if not _absorbing(act, x)]
    left = {x: act.product_set(1 << x, p) for x in candidates}
    right = {}
    for y in candidates:
        right.setdefault(act.product_set(k, 1 << y), y)
    for x in sorted(candidates, key=back):
        y = right.get(left[x])
        if y is not None:
            return (back(x), back(y))
    return None


def _in_action(m: FiniteMagma, action, *masks):
    """Translate masks of m into the action magma's indexing (same label set)."""
    if action is None or action.labels == m.labels:
        return (action or m, *masks, lambda i: i)
    if sorted(action.labels) != sorted(m.labels):
        raise MagmaError("action magma must have the same carrier")
    out = [action.subset(m.labels_of(mk)) for mk in masks]
    return (action, *out, lambda i: m.index(action.labels[i]))


def is_conjugate_witness(m: FiniteMagma, p: int, k: int, x: int, y: int, action=None) -> bool:
    act, p, k, _ = _in_action(m, action, p, k)
    x, y = act.index(m.labels[x]), act.index(m.labels[y])
    return act.product_set(1 << x, p) == act.product_set(k, 1 << y)


def normal_exists(m: FiniteMagma, h: int) -> Optional[tuple]:
    """Smallest pair (x, y) other than (e, e) with xHy = H."""
    e = m.identity
    for x in range(m.order):
        xh = m.product_set(1 << x, h)
        for y in range(m.order):
            if (x, y) == (e, e):
                continue
            if m.product_set(xh, 1 << y) == h:
                return (x, y)
    return None


def normal_forall(m: FiniteMagma, h: int) -> bool:
    """For every x some y gives xHy = H."""
    for x in range(m.order):
        xh = m.product_set(1 << x, h)
        if not any(m.product_set(xh, 1 << y) == h for y in range(m.order)):
            return False
    return True


def is_normal_subgroup(m: FiniteMagma, h: int) -> bool:
    """xH = Hx for every x in the magma."""
    return all(m.product_set(1 << x, h) == m.product_set(h, 1 << x) for x in range(m.order))


def normality_and_simplicity(m: FiniteMagma, subs: Optional[Enumeration] = None) -> dict:
    subs = subs or enumerate_substructures(m)
    exists, forall = [], []
    for s in subs.items:
        if s.kind in (NEUTRO, PSEUDO):
            if normal_exists(m, s.subset) is not None:
                exists.append(s.subset)
            if normal_forall(m, s.subset):
                forall.append(s.subset)
    kinds = {s.subset: s.kind for s in subs.items}

    def simple(normals, kind):
        return not any(kinds[t] == kind and popcount(t) > 1 for t in normals)

    return {
        "normal_subsets_exists_version": exists,
        "normal_subsets_forall_version": forall,
        "simple": {"exists": simple(exists, NEUTRO), "forall": simple(forall, NEUTRO)},
        "pseudo_simple": {"exists": simple(exists, PSEUDO), "forall": simple(forall, PSEUDO)},
    }


def center(m: FiniteMagma) -> int:
    return m.center()


@dataclass
class GroupReport:
    order: int
    mode: str
    substructures: list
    lagrange: dict
    cauchy: dict
    sylow: dict
    normality: dict
    center: int
    extra: dict = field(default_factory=dict)

    def to_dict(self, m: FiniteMagma) -> dict:
        def lab(mask):
            return m.labels_of(mask)

        return {
            "order": self.order,
            "enumeration_mode": self.mode,
            "substructures": [
                {"subset": lab(s.subset), "kind": s.kind, "order": s.order} for s in self.substructures
            ],
            "lagrange": self.lagrange["lagrange"],
            "pseudo_lagrange": self.lagrange["pseudo_lagrange"],
            "cauchy": self.cauchy["cauchy"],
            "cauchy_elements": self.cauchy["elements"],
            "sylow": self.sylow["sylow"],
            "pseudo_sylow": self.sylow["pseudo_sylow"],
            "sylow_primes": {
                str(p): {
                    "prime_power": r["prime_power"],
                    "sylow": [lab(x) for x in r["sylow"]],
                    "pseudo_sylow": [lab(x) for x in r["pseudo_sylow"]],
                }
                for p, r in self.sylow["primes"].items()
            },
            "normal_exists_version": [lab(x) for x in self.normality["normal_subsets_exists_version"]],
            "normal_forall_version": [lab(x) for x in self.normality["normal_subsets_forall_version"]],
            "simple": self.normality["simple"],
            "pseudo_simple": self.normality["pseudo_simple"],
            "center": lab(self.center),
        }


def analyze_group(m: FiniteMagma, max_carrier: int = EXHAUSTIVE_CAP) -> GroupReport:
    subs = enumerate_substructures(m, max_carrier=max_carrier)
    return GroupReport(
        order=m.order,
        mode=subs.mode,
        substructures=subs.items,
        lagrange=lagrange_classify(m, subs),
        cauchy=cauchy_classify(m),
        sylow=sylow_classify(m, subs),
        normality=normality_and_simplicity(m, subs),
        center=m.center(),
    )


