import random
from fractions import Fraction

import pytest

import neutro.algebra as A
import neutro.rings as R
from neutro.magma import (
    cyclic, generated_transformations, multiplicative_mod, neutrosophify_tagged, symmetric, trivial,
)
from neutro.scalars import QQ, ZZ, NeutroScalar, Zmod


def ngr(n, order):
    return A.neutrosophic_group_ring(Zmod(n), cyclic(order))


def test_kinds_and_orders():
    a = ngr(2, 2)
    assert a.kind == A.NEUTRO_GROUP_RING and a.order == 16
    assert A.group_ring(Zmod(3), cyclic(2)).kind == A.GROUP_RING
    assert A.group_neutrosophic_ring(Zmod(2), cyclic(2)).kind == A.GROUP_NEUTRO_RING
    assert A.neutrosophic_group_neutrosophic_ring(Zmod(2), cyclic(2)).kind == A.NEUTRO_GROUP_NEUTRO_RING


def test_square_zero_sums():
    a = ngr(2, 2)
    assert (a.parse("1+g") ** 2).is_zero() and (a.parse("I+gI") ** 2).is_zero()
    x = a.parse("1 + g + I")
    assert x * a.one() == x
    b = A.neutrosophic_group_neutrosophic_ring(Zmod(2), cyclic(8))
    assert (b.parse("1+g^2+g^4+g^6") * b.parse("1+g^2")).is_zero()


def brute_mul(x, y):
    alg = x.algebra
    out = {}
    for i, c in x.coeffs.items():
        for j, d in y.coeffs.items():
            k = alg.magma.table[i][j]
            out[k] = out.get(k, alg.scalars.zero) + c * d
    return A.FormalSum(alg, {k: v for k, v in out.items() if not v.is_zero})


def test_product_matches_double_loop():
    rng = random.Random(5)
    for alg in (ngr(3, 3), A.Algebra(A.Neutro(Zmod(2)), symmetric(3)), A.Algebra(A.Neutro(ZZ), neutrosophify_tagged(cyclic(2)))):
        coeffs = alg.scalars.elements() if alg.scalars.base.is_finite else None
        for _ in range(150):
            def rand():
                terms = []
                for lab in alg.magma.labels:
                    if rng.random() < 0.5:
                        c = rng.choice(coeffs) if coeffs else NeutroScalar(ZZ, rng.randint(-5, 5), rng.randint(-5, 5))
                        terms.append((lab, c))
                return alg.element(terms)
            x, y = rand(), rand()
            assert x * y == brute_mul(x, y)


def test_subgroup_sum_pairs():
    q = A.neutrosophic_group_ring(QQ, cyclic(6))
    m = q.magma
    beta, shifted = A.zero_divisor_pair(q, m.subset(["1", "g^2", "g^4"]))
    assert (beta * shifted).is_zero()
    one, one_shift = A.zero_divisor_pair(q, m.subset(["1"]))
    assert one == q.one() and (one * one_shift).is_zero()


def test_units_from_subgroups():
    s3 = A.Algebra(A.Neutro(QQ), symmetric(3))
    alpha = s3.sum_of(["1", "(1 2 3)", "(1 3 2)"])
    x, y = A.unit_from_subgroup(alpha, 5)
    assert x * y == s3.one() == y * x
    assert y == s3.one() - alpha * Fraction(5, 14)
    c5 = A.Algebra(A.Neutro(QQ), generated_transformations(5, [(1, 2, 3, 4, 0)]))
    x, y = A.unit_from_subgroup(c5.sum_of(c5.magma.labels), 3)
    assert x * y == c5.one() and y == c5.one() - c5.sum_of(c5.magma.labels) * Fraction(3, 14)


def test_unit_construction_rejects_non_subgroup_sums():
    q = A.neutrosophic_group_ring(QQ, cyclic(6))
    alpha = q.parse("1 + g^3 + I + g^3I")
    # the support is closed, yet I times it is only {I, g^3I}, so alpha^2 != 4 alpha
    with pytest.raises(A.AlgebraError):
        A.unit_from_subgroup(alpha, 5)
    x = q.one() - alpha * 5
    inv = A.solve_product(x, q.one())
    assert inv is not None and x * inv == q.one()


def test_idempotents():
    c4 = ngr(2, 4)
    assert A.idempotent_report(c4.parse("1+I")) == {"idempotent": True, "neutrosophic": True}
    s3 = A.Algebra(A.Neutro(QQ), symmetric(3))
    e = s3.sum_of(s3.magma.labels) * Fraction(1, 6)
    assert A.idempotent_report(e)["idempotent"]
    assert A.idempotent_report(s3.zero())["idempotent"] and A.idempotent_report(s3.one())["idempotent"]
    six = A.neutrosophic_group_neutrosophic_ring(Zmod(2), cyclic(6))
    for text in ("1+g^2+g^4", "I+g^2I+g^4I"):
        x = six.parse(text)
        assert x * x == x


def test_idempotent_search_is_exhaustive():
    a = ngr(2, 2)
    found = A.idempotent_search(a)
    brute = [x for x in a.ring.sums(a.ring.full_mask) if x * x == x]
    assert not found["truncated"] and {str(x) for x in found["idempotents"]} == {str(x) for x in brute}


def test_zero_divisors_and_units():
    c4 = ngr(2, 4)
    alpha = c4.parse("I+g^2")
    assert (alpha * c4.parse("I+gI+g^2I+g^3I")).is_zero()
    rep = A.zero_divisor_report(alpha)
    assert rep["zero_divisor"] and rep["neutrosophic"] and (alpha * rep["witness"]).is_zero()
    z4 = A.neutrosophic_group_ring(Zmod(4), cyclic(2))
    x = z4.parse("1+2gI")
    assert x * x == z4.one()
    u = A.unit_report(x)
    assert u["unit"] and u["neutrosophic"] and x * u["inverse"] == z4.one()


def test_unit_in_semigroup_ring():
    alg = A.Algebra(A.Neutro(Zmod(2)), multiplicative_mod(6))
    u = alg.parse("{1}+{2}+{4}")
    assert u * u == alg.one()
    assert u * alg.parse("[I]{1}+[I]{2}+[I]{4}") == alg.scalar(alg.scalars.indeterminate)


def test_five_subring_types():
    q = A.neutrosophic_group_ring(Zmod(2), cyclic(6))
    m = q.magma
    h = m.subset(["1", "g^2", "g^4", "I", "g^2I", "g^4I"])
    r = q.ring
    span = sum(1 << c for c in range(r.order) if all(h >> k & 1 for k in r.decode(c).coeffs))
    assert A.classify_algebra_subring(q, span) == A.SUBNEUTRO_GROUP_RING
    z6 = A.neutrosophic_group_ring(Zmod(6), cyclic(2))
    assert A.classify_algebra_subring(z6, z6.ring.codes([z6.zero(), z6.parse("3I")])) == A.PSEUDO_SUBRING
    c4 = ngr(2, 4)
    assert A.classify_algebra_subring(c4, c4.ring.codes([c4.zero(), c4.parse("1+g^2")])) == A.JUST_SUBRING


def test_ideals_with_square_zero():
    a = ngr(2, 2)
    members = [a.zero(), a.parse("1+g"), a.parse("I+gI"), a.parse("1+g+I+gI")]
    mask = a.ring.codes(members)
    assert R.is_ideal(a.ring, mask)
    assert all((x * y).is_zero() for x in members for y in members)
    c4 = ngr(2, 4)
    sums = [c4.zero(), c4.parse("1+g+g^2+g^3"), c4.parse("I+gI+g^2I+g^3I"), c4.parse("1+g+g^2+g^3+I+gI+g^2I+g^3I")]
    assert R.is_ideal(c4.ring, c4.ring.codes(sums))
    tax = A.ideal_taxonomy(a)
    assert (mask, A.PSEUDO_SUBRING) in tax["pseudo_neutrosophic_ideals"]


def test_semiprime_predicates():
    assert A.prime_semiprime_semisimple(ngr(2, 2))["semiprime"] is False
    for p, n in ((2, 2), (3, 2), (3, 3)):
        eq = A.semiprime_equivalence(ngr(p, n))
        assert len(set(eq.values())) == 1
    assert A.semiprime_equivalence(ngr(3, 2))["semiprime_by_ideals"] is True


def test_containment_and_special_rings():
    lat = A.containment_lattice(A.neutrosophic_group_ring(ZZ, cyclic(2)))
    assert lat and all(item["verified"] for item in lat)
    assert A.containment_lattice(A.Algebra(A.Plain(Zmod(3)), trivial()))[0]["magma"] == ["1"]
    assert A.special_group_ring_check(A.Plain(Zmod(5)), cyclic(3))["special"]
    assert not A.special_group_ring_check(A.Plain(QQ), cyclic(3))["special"]
    assert not A.special_group_ring_check(A.Plain(Zmod(5)), cyclic(4))["special"]


def test_homomorphisms():
    a = ngr(2, 2)
    point = A.neutrosophic_group_ring(Zmod(2), trivial())
    ident = A.verify_algebra_homomorphism(a, a, {lab: lab for lab in a.magma.labels})
    assert ident["ok"] and ident["kernel_elements"] == ["0"]
    aug = A.verify_algebra_homomorphism(a, point, {"1": "1", "g": "1", "I": "I", "gI": "I"})
    assert aug["ok"] and "1 + g" in aug["kernel_elements"] and not aug["kernel_is_neutrosophic"]
    bad = A.verify_algebra_homomorphism(a, point, {"1": "1", "g": "1", "I": "0", "gI": "0"})
    assert not bad["ok"] and bad["violation"] == "indeterminate"


def test_parse_and_print_round_trip():
    a = ngr(3, 3)
    x = a.parse("2 + g + 2g^2I")
    assert a.parse(str(x)) == x
    six = A.Algebra(A.Neutro(Zmod(2)), multiplicative_mod(6))
    u = six.parse("{1}+{2}+{4}")
    assert six.parse(str(u)) == u
