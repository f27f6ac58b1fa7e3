"""Self-contained reproduction checks behind `neutro verify`.

Each criterion builds its own fixtures and returns named sub-checks.  Where a
value can be cross-checked independently (raw (a, b) arithmetic, the split
components, plain loops over tables) the check compares against that rather
than against another library path.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import algebra as A
from . import rings as R
from .groups import PSEUDO, NEUTRO, classify_subset, cosets, lagrange_classify
from .magma import bits, cyclic, dihedral, full_neutro_magma, generated_transformations, neutrosophify_ambient, neutrosophify_tagged, symmetric
from .matrix import NeutroMatrix
from .poly import NeutroPoly, brute_force_mul, content, parse_poly, split_mul
from .scalars import (
    QQ, ZD_NEUTRO, ZD_SEMI, ZD_TRIVIAL, ZZ, NeutroScalar, Zmod, all_scalars, classify_zero_divisor, parse_scalar,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Outcome:
    number: int
    title: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _check(name, ok, detail="") -> Check:
    return Check(name, bool(ok), detail)


# -- raw oracles ----------------------------------------------------------------


def raw_mul(n, x, y):
    """(a, b) * (c, d) = (ac, ad + bc + bd), reduced mod n (n = None: no reduction)."""
    a, b = x
    c, d = y
    out = (a * c, a * d + b * c + b * d)
    return out if n is None else (out[0] % n, out[1] % n)


def raw_split(n, x):
    a, b = x
    return (a, a + b) if n is None else (a % n, (a + b) % n)


# -- criteria -----------------------------------------------------------------------


def c01_order_law(seed=0):
    out = []
    for n in range(2, 13):
        r = R.zn_neutro(n)
        pairs = {(s.a, s.b) for s in r.scalars}
        out.append(_check(f"n={n}", r.order == n * n and len(pairs) == n * n, f"order {r.order}"))
    return out


def c02_prime_ideals(seed=0):
    out = []
    for p in (2, 3, 5, 7, 11, 13):
        r = R.zn_neutro(p)
        recs = [i for i in R.ideals(r) if i.kind != "Trivial"]
        neutro = [i for i in recs if i.kind == "NeutrosophicIdeal"]
        pseudo = [i for i in recs if i.kind == "PseudoNeutrosophicIdeal"]
        ok = not neutro and len(pseudo) == 1 and pseudo[0].order == p
        out.append(_check(f"p={p}", ok, f"{len(neutro)} neutrosophic, pseudo orders {[i.order for i in pseudo]}"))
    return out


def c03_quotient_by_indeterminates(seed=0):
    out = []
    for n in range(2, 11):
        r = R.zn_neutro(n)
        ideal = r.subset([NeutroScalar(r.base, 0, k) for k in range(n)])
        q = R.quotient(r, ideal)
        phi = R.canonical_zn_map(n, q, r)
        iso = R.is_isomorphism(R.plain_zn(n), q.quotient, phi)
        out.append(_check(f"n={n}", q.quotient.order == n and iso, f"order {q.quotient.order}, isomorphic {iso}"))
    return out


def c04_quotient_25(seed=0):
    r = R.zn_neutro(10)
    ideal = r.subset(["0", "5", "5I", "5+5I"])
    q = R.quotient(r, ideal)
    return [
        _check("order", q.quotient.order == 25, str(q.quotient.order)),
        _check("class", q.klass == R.NEUTRO_QUOTIENT, str(q.klass)),
    ]


def c05_lagrange_failure(seed=0):
    m8 = neutrosophify_ambient(Zmod(5), "mul", [2])
    p6 = m8.subset(["1", "4", "I", "2I", "3I", "4I"])
    lag8 = lagrange_classify(m8)
    m4 = neutrosophify_ambient(Zmod(3), "mul", [2])
    p3 = m4.subset(["1", "I", "2I"])
    lag4 = lagrange_classify(m4)
    return [
        _check("order-8 magma", m8.order == 8, str(m8.labels)),
        _check("order-6 subset is a neutrosophic subgroup", classify_subset(m8, p6).kind == NEUTRO),
        _check("order-8 magma is not Lagrange", lag8["lagrange"] != "Lagrange" and p6 in lag8["non_lagrange_subgroups"],
               lag8["lagrange"]),
        _check("order-3 pseudo subgroup", classify_subset(m4, p3).kind == PSEUDO),
        _check("order-4 magma is not pseudo Lagrange",
               lag4["pseudo_lagrange"] != "Lagrange" and p3 in lag4["non_lagrange_pseudo_subgroups"],
               lag4["pseudo_lagrange"]),
    ]


def _as_label_sets(m, masks):
    return {frozenset(m.labels_of(c)) for c in masks}


def c06_cosets(seed=0):
    m = neutrosophify_ambient(Zmod(5), "mul", [2])
    h = m.subset(["1", "4", "I", "4I"])
    got = cosets(m, h)
    listed = {frozenset(s) for s in (["2", "3", "2I", "3I"], ["1", "4", "I", "4I"], ["I", "4I"], ["2I", "3I"])}
    m9 = full_neutro_magma(3, "mul")
    k = m9.subset(["1", "1+I"])
    got9 = cosets(m9, k, pseudo=True)
    listed9 = {frozenset(s) for s in (["0"], ["1", "1+I"], ["1+I"], ["2", "2+2I"], ["I", "2I"], ["1+2I"], ["2+I"])}
    found9 = _as_label_sets(m9, got9["cosets"])
    return [
        _check("neutrosophic subgroup cosets match the listed sets", _as_label_sets(m, got["cosets"]) == listed),
        _check("neutrosophic subgroup cosets do not partition", got["partitions"] is False),
        _check("pseudo subgroup cosets match the listed sets", found9 == listed9,
               f"computed {sorted(sorted(s) for s in found9)}"),
        _check("pseudo subgroup cosets do not partition", got9["partitions"] is False,
               f"partitions={got9['partitions']}"),
    ]


GOLDEN_P = "(2 - I) + (7 + 5I)x - 8Ix^2"
GOLDEN_Q = "(7 + I) + (2 + 5I)x^2 + (3 + I)x^3"


def c07_poly_golden(seed=0):
    p = parse_poly(GOLDEN_P, ZZ)
    q = parse_poly(GOLDEN_Q, ZZ)
    prod = p * q
    want = {0: "14-6I", 1: "49+47I", 4: "21-29I", 5: "-32I"}
    out = [
        _check(f"C{k}", prod.coeff((k,)) == parse_scalar(v, ZZ), str(prod.coeff((k,)))) for k, v in want.items()
    ]
    out.append(_check("brute-force oracle", prod == brute_force_mul(p, q)))
    out.append(_check("split oracle", prod == split_mul(p, q)))
    return out


def c08_poly_zero_product(seed=0):
    z5 = Zmod(5)
    prod = parse_poly("(2+3I)x^3", z5) * parse_poly("4Ix", z5)
    return [_check("product vanishes", prod.is_zero(), str(prod))]


def c09_content(seed=0):
    p = parse_poly("(2+I) + 7(2+I)x^2 + (4-I)x^3", ZZ)
    c = content(p)
    return [_check("content", c == parse_scalar("2+I", ZZ), str(c))]


def c10_units(seed=0):
    out = []
    alg = A.neutrosophic_group_ring(QQ, cyclic(6))
    alpha = alg.parse("1 + g^3 + I + g^3I")
    x = alg.one() - alpha * 5
    y = alg.one() - alpha * Fraction(5, 19)
    out.append(_check("cyclic-6 neutrosophic group ring, alpha over {1,g^3,I,g^3I}", x * y == alg.one(),
                      f"xy = {x * y}; alpha^2 = {alpha * alpha}"))
    s3 = A.Algebra(A.Neutro(QQ), symmetric(3))
    alpha = s3.sum_of(["1", "(1 2 3)", "(1 3 2)"])
    x = s3.one() - alpha * 5
    y = s3.one() - alpha * Fraction(5, 14)
    out.append(_check("S3 over <Q u I>, three-cycle subgroup", x * y == s3.one() and y * x == s3.one()))
    c5 = A.Algebra(A.Neutro(QQ), generated_transformations(5, [(1, 2, 3, 4, 0)]))
    alpha = c5.sum_of(c5.magma.labels)
    x = c5.one() - alpha * 3
    y = c5.one() - alpha * Fraction(3, 14)
    out.append(_check("5-cycle subgroup of S(5)", x * y == c5.one() and y * x == c5.one()))
    return out


def lemma_fixtures():
    ms = [neutrosophify_tagged(cyclic(n)) for n in range(1, 9)]
    return ms + [neutrosophify_tagged(dihedral(3)), neutrosophify_tagged(symmetric(3))]


def subgroup_like(m) -> list:
    subsets, _ = m.closed_subsets(max_carrier=64)
    return [s for s in subsets if all(m.product_set(1 << h, s) == s for h in bits(s))]


def c11_subgroup_sums(seed=0):
    out = []
    bases = [QQ, Zmod(2), Zmod(3), Zmod(5), Zmod(7)]
    for m in lemma_fixtures():
        bad = []
        count = 0
        for base in bases:
            alg = A.Algebra(A.Plain(base), m)
            for s in subgroup_like(m):
                alpha, beta = A.zero_divisor_pair(alg, s)
                count += 1
                if not (alpha * beta).is_zero():
                    bad.append((str(base), m.labels_of(s)))
        out.append(_check(m.name, not bad, f"{count} sums, failures {bad[:3]}"))
    return out


def _random_scalar(rng, base):
    if base == QQ:
        return NeutroScalar(base, Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    if base == ZZ:
        return NeutroScalar(base, rng.randint(-50, 50), rng.randint(-50, 50))
    n = base.modulus
    return NeutroScalar(base, rng.randrange(n), rng.randrange(n))


def _zn_exhaustive(n):
    """Componentwise oracle on <Z/n u I>, on raw pairs."""
    def unit(u):
        return gcd(u, n) == 1

    def zd_or_zero(u):
        return any(u * t % n == 0 for t in range(1, n)) or u % n == 0

    bad = []
    base = Zmod(n)
    for x in all_scalars(base):
        u, v = raw_split(n, (x.a, x.b))
        if x.is_unit() != (unit(u) and unit(v)):
            bad.append(("unit", str(x)))
        if x.is_idempotent() != (u * u % n == u and v * v % n == v):
            bad.append(("idempotent", str(x)))
        is_zd = classify_zero_divisor(x).tag != "None"
        want = (x.a, x.b) != (0, 0) and (zd_or_zero(u) or zd_or_zero(v))
        if is_zd != want:
            bad.append(("zero divisor", str(x)))
    return bad


def c12_split_oracle(seed=0, scalar_pairs=10_000, pairs=1_000):
    rng = random.Random(seed)
    out = []
    for base in (ZZ, QQ, Zmod(2), Zmod(6), Zmod(7), Zmod(12)):
        n = base.modulus
        bad = 0
        for _ in range(scalar_pairs):
            x, y = _random_scalar(rng, base), _random_scalar(rng, base)
            sx, sy = x.split(), y.split()
            s_sum, s_prod = (x + y).split(), (x * y).split()
            mod = (lambda t: t % n) if n else (lambda t: t)
            if s_sum != (mod(sx[0] + sy[0]), mod(sx[1] + sy[1])):
                bad += 1
            if s_prod != (mod(sx[0] * sy[0]), mod(sx[1] * sy[1])):
                bad += 1
            if (x * y).a != raw_mul(n, (x.a, x.b), (y.a, y.b))[0] or (x * y).b != raw_mul(n, (x.a, x.b), (y.a, y.b))[1]:
                bad += 1
        out.append(_check(f"scalar split is a homomorphism over {base}", bad == 0, f"{bad} mismatches"))
    bad = []
    for n in range(2, 13):
        bad += _zn_exhaustive(n)
    out.append(_check("unit/idempotent/zero-divisor tags, n <= 12", not bad, str(bad[:5])))
    mbad = 0
    for _ in range(pairs):
        base = rng.choice([ZZ, Zmod(5), Zmod(6)])
        dim = rng.choice([2, 3])
        x = NeutroMatrix(base, [[_random_scalar(rng, base) for _ in range(dim)] for _ in range(dim)])
        y = NeutroMatrix(base, [[_random_scalar(rng, base) for _ in range(dim)] for _ in range(dim)])
        prod = x * y
        lx, rx = x.split()
        ly, ry = y.split()
        lp, rp = prod.split()
        if NeutroMatrix.unsplit((lp, rp), base) != prod or lp != _plain_matmul(base, lx, ly) or rp != _plain_matmul(base, rx, ry):
            mbad += 1
    out.append(_check("matrix products through the split", mbad == 0, f"{mbad} mismatches"))
    pbad = 0
    for _ in range(pairs):
        base = rng.choice([ZZ, Zmod(5), Zmod(6)])
        p = _random_poly(rng, base)
        q = _random_poly(rng, base)
        if p * q != split_mul(p, q) or p * q != brute_force_mul(p, q):
            pbad += 1
    out.append(_check("polynomial products through the split", pbad == 0, f"{pbad} mismatches"))
    return out


def _plain_matmul(base, x, y):
    n = len(x)
    m = base.modulus
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = sum(x[i][k] * y[k][j] for k in range(n))
            row.append(s % m if m else s)
        out.append(row)
    return out


def _random_poly(rng, base):
    deg = rng.randint(0, 4)
    return NeutroPoly(base, {(k,): _random_scalar(rng, base) for k in range(deg + 1)})


def c13_semiprime(seed=0):
    out = []
    for p, n in ((2, 2), (3, 2), (3, 3)):
        alg = A.neutrosophic_group_ring(Zmod(p), cyclic(n))
        eq = A.semiprime_equivalence(alg)
        vals = set(eq.values())
        out.append(_check(f"Z{p}, g^{n}=1: predicates agree", len(vals) == 1, str(eq)))
    alg = A.neutrosophic_group_ring(Zmod(2), cyclic(2))
    r = alg.ring
    members = [alg.zero(), alg.parse("1+g"), alg.parse("I+gI"), alg.parse("1+g+I+gI")]
    mask = r.codes(members)
    out.append(_check("listed P is an ideal", R.is_ideal(r, mask)))
    out.append(_check("P^2 = 0", all((x * y).is_zero() for x in members for y in members)))
    out.append(_check("Z2 case not semiprime", A.prime_semiprime_semisimple(alg)["semiprime"] is False))
    return out


def c14_idempotents(seed=0):
    m = full_neutro_magma(2, "mul")
    a = A.neutrosophic_group_ring(Zmod(2), cyclic(4))
    alpha = a.parse("1+g+g^2+g^3")
    beta = a.parse("1+I")
    b = A.neutrosophic_group_neutrosophic_ring(Zmod(2), cyclic(6))
    x = b.parse("1+g^2+g^4")
    y = b.parse("I+g^2I+g^4I")
    return [
        _check("all four elements of <Z2 u I> idempotent", len(m.idempotents()) == 4 == m.order),
        _check("1+g+g^2+g^3 idempotent (g^4=1, Z2)", alpha * alpha == alpha, f"square = {alpha * alpha}"),
        _check("1+I neutrosophic idempotent", beta * beta == beta and A.idempotent_report(beta)["neutrosophic"]),
        _check("1+g^2+g^4 idempotent (g^6=1)", x * x == x),
        _check("I+g^2I+g^4I idempotent (g^6=1)", y * y == y),
    ]


def c15_matrices(seed=0):
    z2 = Zmod(2)

    def M(rows):
        return NeutroMatrix(z2, rows)

    x = M([["I", 0], [1, "I"]])
    y = M([[1, "I"], ["I", 0]])
    xi = M([["1+I", 0], [0, 0]])
    yi = M([[0, "1+I"], [0, 0]])
    a = M([[1, 0], [0, 0]])
    c = M([[0, 0], ["1+I", "1+I"]])
    return [
        _check("x*y", x * y == M([["I", "I"], ["1+I", "I"]]), str(x * y)),
        _check("y*x", y * x == M([[0, "I"], ["I", 0]]), str(y * x)),
        _check("one-sided x*y nonzero, y*x zero", xi * yi == M([[0, "1+I"], [0, 0]]) and (yi * xi).is_zero()),
        _check("b*a zero, a*b nonzero", (yi * a).is_zero() and a * yi == M([[0, "1+I"], [0, 0]])),
        _check("c times diag(1+I, 0)", c * xi == M([[0, 0], ["1+I", 0]]), str(c * xi)),
    ]


def c16_zero_divisor_tags(seed=0):
    z4 = Zmod(4)

    def s(t):
        return parse_scalar(t, z4)

    cases = [("2+2I", "I", ZD_TRIVIAL), ("2+2I", "2+2I", ZD_NEUTRO), ("2+3I", "2+2I", ZD_NEUTRO), ("2+2I", "2", ZD_SEMI)]
    out = []
    for x, y, tag in cases:
        prod_zero = (s(x) * s(y)).is_zero
        got = classify_zero_divisor(s(x), s(y)).tag if prod_zero else None
        out.append(_check(f"({x})({y})", prod_zero and got == tag, str(got)))
    return out


CRITERIA: list = [
    (1, "order of <Zn u I> is n^2", c01_order_law),
    (2, "prime modulus: no neutrosophic ideals, one pseudo ideal of order p", c02_prime_ideals),
    (3, "quotient by multiples of I is Zn", c03_quotient_by_indeterminates),
    (4, "order-25 neutrosophic quotient of <Z10 u I>", c04_quotient_25),
    (5, "Lagrange failure in finite neutrosophic groups", c05_lagrange_failure),
    (6, "coset families that do not partition", c06_cosets),
    (7, "worked polynomial product", c07_poly_golden),
    (8, "zero product of neutrosophic polynomials", c08_poly_zero_product),
    (9, "content over <Z u I>", c09_content),
    (10, "units 1 - a*alpha from subgroup sums", c10_units),
    (11, "subgroup sums satisfy alpha(alpha - n) = 0", c11_subgroup_sums),
    (12, "split oracle suite", c12_split_oracle),
    (13, "semiprimeness predicates agree", c13_semiprime),
    (14, "idempotent census", c14_idempotents),
    (15, "2x2 matrix products over <Z2 u I>", c15_matrices),
    (16, "zero-divisor tags over <Z4 u I>", c16_zero_divisor_tags),
]


def run(selection=None, seed: int = 0) -> list:
    outcomes = []
    for number, title, fn in CRITERIA:
        if selection and number not in selection:
            continue
        t0 = time.perf_counter()
        try:
            checks = fn(seed=seed)
        except Exception as exc:  # a crash is a failure, reported with its message
            checks = [Check("raised", False, f"{type(exc).__name__}: {exc}")]
        outcomes.append(Outcome(number, title, checks, time.perf_counter() - t0))
    return outcomes


def matrix_lines(outcomes, verbose: bool = False) -> list:
    lines = []
    for o in outcomes:
        lines.append(f"{'PASS' if o.ok else 'FAIL'}  criterion {o.number:2d}  {o.title}  ({o.seconds:.2f}s)")
        for c in o.checks:
            if verbose or not c.ok:
                lines.append(f"      {'ok ' if c.ok else 'BAD'} {c.name}" + (f": {c.detail}" if c.detail else ""))
    passed = sum(o.ok for o in outcomes)
    lines.append(f"{passed}/{len(outcomes)} criteria passed")
    return lines
