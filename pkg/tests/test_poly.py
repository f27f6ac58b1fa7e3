import random

import pytest

from neutro.poly import (
    UNKNOWN, NeutroPoly, brute_force_mul, classify_poly, content, divides, gauss_lemma_probe, is_monic,
    is_primitive, parse_poly, random_poly, reducibility_classify, split_mul,
)
from neutro.scalars import QQ, ZZ, NeutroScalar, RingMismatch, Zmod, parse_scalar


def P(text, ring=ZZ):
    return parse_poly(text, ring)


def test_addition():
    p = P("(7+I) + (2-5I)x")
    q = P("(8+3I) - (3+12I)x + (5-I)x^2")
    assert p + q == P("(15+4I) + (-1-17I)x + (5-I)x^2")
    assert p + 0 == p
    assert (p + (-p)).is_zero()


def test_worked_product_coefficients():
    p = P("(2-I) + (7+5I)x - 8Ix^2")
    q = P("(7+I) + (2+5I)x^2 + (3+I)x^3")
    prod = p * q
    assert prod.coeff(0) == parse_scalar("14-6I", ZZ)
    assert prod.coeff(1) == parse_scalar("49+47I", ZZ)
    assert prod.coeff(4) == parse_scalar("21-29I", ZZ)
    assert prod.coeff(5) == parse_scalar("-32I", ZZ)
    assert prod == brute_force_mul(p, q) == split_mul(p, q)


def test_annihilating_product_mod_five():
    assert (P("(2+3I)x^3", Zmod(5)) * P("4Ix", Zmod(5))).is_zero()


def test_multiplicative_identity_and_mismatch():
    p = P("1 + (2+I)x^2")
    assert p * 1 == p
    with pytest.raises(RingMismatch):
        _ = p + P("1", Zmod(3))


def test_classify():
    assert classify_poly(P("3I + (2+5I)x + 5x^2")) == "Mixed"
    assert classify_poly(P("I + I*x")) == "Strong"
    assert classify_poly(P("1 + x")) == "Plain"


def test_content_and_primitivity():
    assert content(P("(2+I) + 7(2+I)x^2 + (4-I)x^3")) == parse_scalar("2+I", ZZ)
    assert content(P("6 + 6I*x")) == parse_scalar("6", ZZ)
    assert content(P("1 + x")) == parse_scalar("1", ZZ) and is_primitive(P("1 + x"))
    with pytest.raises(ValueError):
        content(NeutroPoly(ZZ))
    assert is_monic(P("x^2 + 3"))


def test_divisibility():
    assert divides(parse_scalar("2+I", ZZ), P("14+7I")) == P("7")
    p = P("3 + Ix")
    assert divides(parse_scalar("1", ZZ), p) == p
    assert divides(P("x+1", QQ), P("x^2-1", QQ)) == P("x-1", QQ)
    assert not divides(parse_scalar("2", ZZ), P("1 + x"))


def test_two_variable_factorization():
    p = P("x1*x2 + x1 + (1+I)*x2 + (1+I)", Zmod(2))
    rep = reducibility_classify(p)
    assert rep.klass == "NeutrosophicReducible" and rep.complete
    vars_ = p.var_names
    as_pairs = {(str(a), str(b)) for a, b in rep.factorizations}
    a = parse_poly("x1 + (1+I)", Zmod(2), vars_)
    b = parse_poly("x2 + 1", Zmod(2), vars_)
    assert (str(a), str(b)) in as_pairs or (str(b), str(a)) in as_pairs
    for r, s in rep.factorizations:
        assert r * s == p


def test_reducibility_edge_cases():
    assert reducibility_classify(P("1", Zmod(3))).klass == "Unit"
    assert reducibility_classify(P("I + (1+I)x", Zmod(2))).klass == "IrreducibleNeutrosophic"


def test_primitive_pair_product():
    p, q = P("3I + (2+5I)x + 5x^2"), P("2 + 3I*x + (5-2I)x^3")
    assert is_primitive(p) and is_primitive(q)
    prod = p * q
    assert prod == brute_force_mul(p, q) and prod.degree == 5
    assert gauss_lemma_probe(100, seed=1).samples == 100
    assert is_primitive(P("1") * P("1"))


def test_split_oracle_on_random_pairs():
    rng = random.Random(7)
    for ring in (ZZ, Zmod(6), Zmod(7)):
        for _ in range(60):
            p = random_poly(rng, ring, rng.randint(0, 6))
            q = random_poly(rng, ring, rng.randint(0, 6))
            prod = p * q
            assert prod == brute_force_mul(p, q)
            assert NeutroPoly.unsplit(prod.split(), ring) == prod
            # split is multiplicative: compare against plain convolution of each component
            (l1, r1), (l2, r2) = p.split(), q.split()
            for lhs, rhs, got in ((l1, l2, prod.split()[0]), (r1, r2, prod.split()[1])):
                conv = {}
                for (e1,), c1 in lhs.items():
                    for (e2,), c2 in rhs.items():
                        conv[e1 + e2] = conv.get(e1 + e2, 0) + c1 * c2
                if ring.kind == "Zn":
                    conv = {k: v % ring.modulus for k, v in conv.items()}
                assert {k: v for k, v in conv.items() if v} == {k[0]: v for k, v in got.items() if v}


def test_text_round_trip():
    p = P("(2-I) + (7+5I)x - 8Ix^2")
    assert parse_poly(str(p), ZZ) == p
    assert str(NeutroPoly(ZZ)) == "0"


def test_unknown_is_falsy_sentinel():
    assert not UNKNOWN and repr(UNKNOWN) == "UNKNOWN"
    assert NeutroPoly.constant(ZZ, NeutroScalar(ZZ, 0, 1)) == P("I")
