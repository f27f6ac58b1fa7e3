import pytest

import neutro.rings as R
from neutro.scalars import NeutroScalar, Zmod


def i_multiples(r, n):
    return r.subset(["0", "I"] + [f"{k}I" for k in range(2, n)])


@pytest.mark.parametrize("n", range(2, 13))
def test_order_is_n_squared(n):
    r = R.zn_neutro(n)
    assert r.order == n * n
    assert len(set(r.labels)) == n * n


def test_ring_axioms_hold():
    for n in (2, 3, 4, 6):
        assert R.check_ring_axioms(R.zn_neutro(n)) is None
    sub = R.scalar_ring_from_subset(7, [f"{k}I" for k in range(1, 7)] + ["0"])
    assert R.check_ring_axioms(sub) is None and sub.order == 7


def test_characteristic():
    assert R.characteristic(R.zn_neutro(4)) == 4
    assert R.characteristic(R.zn_neutro(5)) == 5


def test_subring_kinds_mod_twelve():
    r = R.zn_neutro(12)
    assert R.classify_subring(r, R.subring_closure(r, r.subset(["0", "6", "I"]))) == R.NEUTRO_SUBRING
    assert R.classify_subring(r, r.subset(["0", "6+6I"])) == R.JUST_SUBRING
    assert R.classify_subring(r, r.subset(["0", "2I", "4I", "6I", "8I", "10I"])) == R.PSEUDO_SUBRING


def test_subring_taxonomy_is_exhaustive_for_small_ring():
    r = R.zn_neutro(2)
    found = {rec for rec in R.enumerate_subrings(r)}
    # brute force every subset through is_subring
    brute = {m for m in range(1, 1 << r.order) if R.is_subring(r, m)}
    assert {getattr(x, "subset", x) for x in found} == brute


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_rings_have_one_pseudo_ideal(p):
    r = R.zn_neutro(p)
    recs = [i for i in R.ideals(r) if i.kind not in ("Trivial",)]
    assert not [i for i in recs if i.kind == "NeutrosophicIdeal"]
    pseudo = [i for i in recs if i.kind == "PseudoNeutrosophicIdeal"]
    assert len(pseudo) == 1 and pseudo[0].order == p and pseudo[0].subset == i_multiples(r, p)


def test_mixed_ideals_mod_four():
    r = R.zn_neutro(4)
    kinds = {i.subset: i.kind for i in R.ideals(r)}
    assert kinds[r.subset(["0", "2", "2I", "2+2I"])] == "NeutrosophicIdeal"
    assert kinds[r.subset(["0", "I", "2I", "3I"])] == "PseudoNeutrosophicIdeal"
    assert kinds[1 << r.zero] == "Trivial"


def test_ideals_agree_with_brute_force():
    r = R.zn_neutro(3)
    brute = {m for m in range(1, 1 << r.order) if m >> r.zero & 1 and R.is_ideal(r, m)}
    assert {i.subset for i in R.ideals(r)} == brute


def test_quotients():
    r10 = R.zn_neutro(10)
    q = R.quotient(r10, r10.subset(["0", "5", "5I", "5+5I"]))
    assert q.quotient.order == 25 and q.klass == R.NEUTRO_QUOTIENT
    r6 = R.zn_neutro(6)
    q6 = R.quotient(r6, i_multiples(r6, 6))
    assert q6.quotient.order == 6 and q6.klass == R.FALSE_PSEUDO_QUOTIENT
    r7 = R.zn_neutro(7)
    q7 = R.quotient(r7, i_multiples(r7, 7))
    phi = R.canonical_zn_map(7, q7, r7)
    assert R.is_isomorphism(R.plain_zn(7), q7.quotient, phi)
    with pytest.raises(R.RingError):
        R.quotient(r7, r7.subset(["0", "1"]))


def test_homomorphism_checks():
    r = R.zn_neutro(3)
    ident = R.verify_homomorphism(r, r, list(range(r.order)))
    assert ident.ok and ident.kernel == 1 << r.zero and not ident.kernel_is_neutrosophic
    # projection onto the quotient by the I-multiples sends I to zero
    q = R.quotient(r, i_multiples(r, 3))
    proj = [q.coset_of[x] for x in range(r.order)]
    bad = R.verify_homomorphism(r, q.quotient, proj)
    assert not bad.ok and bad.violation == "indeterminate"
    r2, r4 = R.zn_neutro(2), R.zn_neutro(4)
    doubling = {lab: lab for lab in r2.labels}
    rep = R.verify_homomorphism(r2, r4, doubling)
    assert not rep.ok and rep.violation == "additivity"


def test_domains_and_radicals():
    assert not R.radical_and_semisimplicity(R.zn_neutro(2))["integral_domain"]
    seven = R.scalar_ring_from_subset(7, ["0"] + [f"{k}I" for k in range(1, 7)])
    assert R.radical_and_semisimplicity(seven)["integral_domain"]
    six = R.scalar_ring_from_subset(6, ["0"] + [f"{k}I" for k in range(1, 6)])
    assert not R.radical_and_semisimplicity(six)["integral_domain"]
    assert six.mul(six.index("2I"), six.index("3I")) == six.zero
    rad4 = R.radical_and_semisimplicity(R.zn_neutro(4))
    r4 = R.zn_neutro(4)
    # nilpotent elements of <Z4 u I> have both split components even
    nil = {x for x in range(r4.order) if all(v % 2 == 0 for v in r4.scalars[x].split())}
    assert set(R.bits(rad4["jacobson"])) == nil and not rad4["semisimple"]


def test_field_predicates():
    f7 = R.field_predicates(R.zn_neutro(7))
    assert f7["is_neutrosophic_field"] and f7["prime_neutrosophic_field"] and f7["characteristic"] == 7
    assert not R.field_predicates(R.zn_neutro(4))["is_neutrosophic_field"]
    f2 = R.field_predicates(R.zn_neutro(2))
    assert f2["is_neutrosophic_field"] and f2["characteristic"] == 2
    assert R.zero_divisor_pairs_exist(R.zn_neutro(2))


def test_tabular_ring_from_elements():
    base = Zmod(2)
    elems = [NeutroScalar(base, a, b) for a in range(2) for b in range(2)]
    t = R.tabular_from_elements(elems, lambda x, y: x + y, lambda x, y: x * y, zero=NeutroScalar(base))
    assert t.order == 4 and R.check_ring_axioms(t) is None
    rep = R.analyze_ring(t)
    assert rep.order == 4 and rep.characteristic == 2
