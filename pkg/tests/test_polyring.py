import pytest
from hypothesis import given, settings, strategies as st

from tracecodes import polyring
from tracecodes.cosets import build_cosets
from tracecodes.errors import DomainError
from tracecodes.gf2m import get_field
from tracecodes.polyring import BinaryPoly, poly_divmod, reciprocal

P = BinaryPoly.parse

polys = st.integers(0, 2 ** 40).map(BinaryPoly)
nonzero = st.integers(1, 2 ** 24).map(BinaryPoly)


def test_divmod_examples():
    assert poly_divmod(P("x^2+1"), P("x+1")) == (P("x+1"), BinaryPoly(0))
    a = P("x^5+x^2+1")
    assert poly_divmod(a, a) == (BinaryPoly(1), BinaryPoly(0))
    q, r = poly_divmod(P("x^15+1"), P("x^4+x+1"))
    assert not r and q * P("x^4+x+1") == P("x^15+1")
    with pytest.raises(DomainError):
        poly_divmod(a, BinaryPoly(0))


@settings(max_examples=300)
@given(polys, nonzero)
def test_divmod_identity(a, b):
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree or not r


@settings(max_examples=200)
@given(nonzero, nonzero)
def test_degree_of_product(a, b):
    assert (a * b).degree == a.degree + b.degree


def test_minimal_polynomial_examples():
    spec = get_field(4)
    ct = build_cosets(4)
    assert polyring.minimal_polynomial(0, spec, ct) == P("x+1")
    assert polyring.minimal_polynomial(1, spec, ct) == P("x^4+x+1")
    m5 = polyring.minimal_polynomial(5, spec, ct)
    assert m5 == P("x^2+x+1")
    # roots are exactly alpha^5 and alpha^10
    roots = [t for t in range(spec.v) if m5(spec.alpha_pow(t), spec) == 0]
    assert roots == [5, 10]


def test_reciprocal_examples():
    assert reciprocal(P("x+1")) == P("x+1")
    assert reciprocal(P("x^2+x+1")) == P("x^2+x+1")
    assert reciprocal(P("x^3+x+1")) == P("x^3+x^2+1")
    with pytest.raises(DomainError):
        reciprocal(P("x^2+x"))


@given(st.integers(0, 2 ** 30).map(lambda b: BinaryPoly(2 * b + 1)))
def test_reciprocal_involution(p):
    assert reciprocal(reciprocal(p)) == p


def test_factor_small_fields():
    spec = get_field(2)
    got = polyring.factor_xv_minus_1(spec, build_cosets(2))
    assert got == [(0, P("x+1")), (1, P("x^2+x+1"))]
    f4 = polyring.factor_xv_minus_1(get_field(4), build_cosets(4))
    assert [p.degree for _, p in f4] == [1, 4, 4, 2, 4]


@pytest.mark.parametrize("m", range(2, 11))
def test_factorization_reassembles(m):
    spec, ct = get_field(m), build_cosets(m)
    factors = polyring.factor_xv_minus_1(spec, ct)
    assert sum(p.degree for _, p in factors) == spec.v
    assert polyring.product(p for _, p in factors) == polyring.xn_plus_1(spec.v)
    ps = [p for _, p in factors]
    assert len(set(ps)) == len(ps)


@pytest.mark.parametrize("m", range(2, 9))
def test_minimal_polynomials_irreducible_and_coset_determined(m):
    spec, ct = get_field(m), build_cosets(m)
    # trial division against every irreducible of lower degree
    small = [q for q in range(2, 1 << (m // 2 + 1)) if polyring.is_irreducible(q)]
    for lead in ct.leaders:
        mp = polyring.minimal_polynomial(lead, spec, ct)
        assert mp.degree == ct.size(lead)
        for q in small:
            if polyring.degree(q) < mp.degree:
                assert polyring.mod2(mp.bits, q) != 0
        for j in ct.coset(lead):
            assert polyring.minimal_polynomial(j, spec, ct) == mp


def test_text_and_hex_round_trip():
    p = P("x^6+x^2+x+1")
    assert str(p) == "x^6+x^2+x+1"
    assert p.hex() == "47"
    assert BinaryPoly.from_hex("47") == p
    assert str(BinaryPoly(1)) == "1"


@given(st.integers(0, 2 ** 64))
def test_text_round_trip_property(bits):
    p = BinaryPoly(bits)
    assert BinaryPoly.parse(str(p)) == p
    assert BinaryPoly.from_hex(p.hex()) == p


def test_primitivity():
    assert polyring.is_primitive(polyring.from_terms("x^4+x+1"))
    assert not polyring.is_primitive(polyring.from_terms("x^4+x^3+x^2+x+1"))
    assert polyring.is_irreducible(polyring.from_terms("x^4+x^3+x^2+x+1"))
