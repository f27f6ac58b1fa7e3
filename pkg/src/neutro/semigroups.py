"""Subsemigroups, one- and two-sided ideals, idempotent semigroups, zero divisors and units."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .magma import EXHAUSTIVE_CAP, FiniteMagma, MagmaError, popcount

SUB_NEUTRO = "NeutrosophicSubsemigroup"
SUB_PLAIN = "PlainSubsemigroup"
SUB_MONOID = "NeutrosophicSubmonoid"
SUB_PSEUDO = "PseudoNeutrosophicSubsemigroup"


def _require_semigroup(m: FiniteMagma):
    if not m.is_associative:
        raise MagmaError(f"{m.name} is not associative")


def classify_subsemigroup(m: FiniteMagma, mask: int) -> str:
    """Kind of a closed subset.

    Carrying I is not enough: a neutrosophic subsemigroup also has to hold a
    plain element (whose powers give a plain subsemigroup).  Subsets made only
    of I-carrying elements are reported as pseudo.
    """
    if not m.is_closed(mask):
        raise MagmaError("subset is not closed")
    if not m.has_neutro(mask):
        return SUB_PLAIN
    if m.plain_part(mask) == 0:
        return SUB_PSEUDO
    if m.identity is not None and mask >> m.identity & 1:
        return SUB_MONOID
    return SUB_NEUTRO


def subsemigroups(m: FiniteMagma, max_carrier: int = EXHAUSTIVE_CAP):
    """Every proper closed subset with its kind, and the enumeration mode."""
    _require_semigroup(m)
    subsets, mode = m.closed_subsets(max_carrier=max_carrier)
    items = [(s, classify_subsemigroup(m, s)) for s in subsets if s != m.full_mask]
    return items, mode


def is_ideal(m: FiniteMagma, mask: int, side: str = "two_sided") -> bool:
    if mask == 0:
        return False
    full = m.full_mask
    left_ok = m.product_set(full, mask) & ~mask == 0
    right_ok = m.product_set(mask, full) & ~mask == 0
    if side == "left":
        return left_ok
    if side == "right":
        return right_ok
    return left_ok and right_ok


def principal_ideal(m: FiniteMagma, g: int, side: str = "two_sided") -> int:
    """{g} u Sg (left), {g} u gS (right), or {g} u Sg u gS u SgS."""
    full = m.full_mask
    one = 1 << g
    sg = m.product_set(full, one)
    gs = m.product_set(one, full)
    if side == "left":
        return one | sg
    if side == "right":
        return one | gs
    return one | sg | gs | m.product_set(sg, full)


@dataclass(frozen=True)
class SemigroupIdealRecord:
    subset: int
    sided: str
    neutrosophic: bool
    principal: bool
    generator: Optional[int]
    maximal: bool
    minimal: bool


IDEAL_CAP = 64


def ideals(m: FiniteMagma, side: str = "two_sided", max_carrier: int = IDEAL_CAP, max_count: int = 20000):
    """All ideals of the given side, found as unions of principal ideals."""
    _require_semigroup(m)
    if m.order > max_carrier:
        raise MagmaError(f"carrier {m.order} exceeds the ideal enumeration cap")
    principal = {}
    for g in range(m.order):
        p = principal_ideal(m, g, side)
        principal.setdefault(p, g)
    gens = list(principal)
    found = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for s in frontier:
            for p in gens:
                u = s | p
                if u not in found:
                    found.add(u)
                    nxt.append(u)
                    if len(found) > max_count:
                        raise MagmaError("too many ideals to enumerate")
        frontier = nxt
    proper = [s for s in found if s != m.full_mask]
    neutro = [s for s in proper if m.has_neutro(s)]
    records = []
    for s in sorted(found, key=lambda x: (popcount(x), x)):
        is_n = m.has_neutro(s)
        maximal = minimal = False
        if is_n and s != m.full_mask:
            maximal = not any(t != s and t & s == s for t in neutro)
            minimal = not any(t != s and t & s == t for t in neutro)
        records.append(
            SemigroupIdealRecord(
                subset=s,
                sided=side,
                neutrosophic=is_n,
                principal=s in principal,
                generator=principal.get(s),
                maximal=maximal,
                minimal=minimal,
            )
        )
    return records


def idempotent_semigroup_classify(m: FiniteMagma) -> str:
    """Idempotent, WeaklyIdempotent (some neutrosophic subsemigroup is all idempotent) or Neither."""
    _require_semigroup(m)
    idem = m.idempotents()
    if len(idem) == m.order:
        return "Idempotent"
    emask = 0
    for e in idem:
        emask |= 1 << e
    plain = [e for e in idem if not m.neutro[e]]
    neutro = [e for e in idem if m.neutro[e]]
    for p in plain:
        for q in neutro:
            c = m.closure(1 << p | 1 << q)
            if c & ~emask == 0 and c != m.full_mask:
                return "WeaklyIdempotent"
    return "Neither"


def zero_divisors_and_units(m: FiniteMagma) -> dict:
    """Per element: zero-divisor witnesses (x*y = 0 or y*x = 0, y nonzero) and inverse."""
    z, e = m.zero, m.identity
    if z is None and e is None:
        raise MagmaError("needs a zero or an identity")
    report = {}
    for x in range(m.order):
        right = [y for y in range(m.order) if z is not None and x != z and y != z and m.table[x][y] == z]
        left = [y for y in range(m.order) if z is not None and x != z and y != z and m.table[y][x] == z]
        inv = None
        if e is not None:
            for y in range(m.order):
                if m.table[x][y] == e and m.table[y][x] == e:
                    inv = y
                    break
        report[x] = {"right_witnesses": right, "left_witnesses": left, "inverse": inv}
    return report


def union_is_closed(m: FiniteMagma, a: int, b: int) -> bool:
    return m.is_closed(a | b)
