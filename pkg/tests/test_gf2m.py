import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tracecodes import gf2m, polyring
from tracecodes.errors import DomainError, UsageError
from tracecodes.gf2m import FieldSpec, get_field


def naive_order(spec, a):
    x, k = a, 1
    while x != 1:
        x = spec.mul_shift(x, a)
        k += 1
    return k


@pytest.mark.parametrize("m", range(2, 13))
def test_alpha_is_primitive(m):
    spec = get_field(m)
    assert spec.v == 2 ** m - 1
    assert naive_order(spec, spec.alpha) == spec.v
    assert polyring.is_irreducible(spec.modulus)


def test_zero_absorbs_and_one_is_identity():
    spec = get_field(5)
    x = spec.element(2)
    assert spec.element(0) * spec.element(17) == 0
    assert spec.element(1) * x == x


def test_alpha30_times_alpha_is_one():
    spec = get_field(5)
    a = spec.element(spec.alpha)
    p = spec.element(1)
    for _ in range(30):  # iterated multiplication, not the table power
        p = spec.element(spec.mul_shift(p.value, a.value))
    assert gf2m.mul(p, a) == 1


def test_pow_basics():
    spec = get_field(5)
    a = spec.element(spec.alpha)
    assert gf2m.pow(a, 0) == 1
    assert gf2m.pow(a, 31) == 1
    with pytest.raises(DomainError):
        gf2m.pow(spec.element(0), -1)


def test_alpha5_has_order_3_in_gf16():
    spec = get_field(4)
    b = spec.pow(spec.alpha, 5)
    assert naive_order(spec, b) == 3


def test_trace_values():
    assert get_field(5).trace(0) == 0
    assert get_field(5).trace(1) == 1
    assert get_field(4).trace(1) == 0


def test_dlog_values():
    spec = get_field(5)
    assert spec.dlog(1) == 0
    assert spec.dlog(spec.alpha) == 1
    assert gf2m.dlog(spec.element(spec.alpha_pow(17))) == 17
    with pytest.raises(DomainError):
        spec.dlog(0)


def test_mixed_fields_rejected():
    a = get_field(4).element(3)
    b = get_field(5).element(3)
    with pytest.raises(UsageError):
        gf2m.mul(a, b)


@pytest.mark.parametrize("m", [3, 4, 7, 8, 10])
def test_trace_frobenius_invariance_and_balance(m):
    spec = get_field(m)
    xs = np.arange(spec.size)
    tr = spec.trace_table[xs]
    sq = np.array([spec.mul(int(x), int(x)) for x in xs])
    assert np.array_equal(tr, spec.trace_table[sq])
    assert int(tr.sum()) == 2 ** (m - 1)


@pytest.mark.parametrize("m", [4, 6, 8])
def test_trace_table_matches_literal_sum(m):
    spec = get_field(m)
    for a in range(spec.size):
        assert spec.trace(a) == spec.trace_by_frobenius(a)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 12), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_power_addition(m, i, j):
    spec = get_field(m)
    assert spec.mul(spec.alpha_pow(i), spec.alpha_pow(j)) == spec.alpha_pow((i + j) % spec.v)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 12), st.data())
def test_table_mul_matches_shift_mul(m, data):
    spec = get_field(m)
    a = data.draw(st.integers(0, spec.size - 1))
    b = data.draw(st.integers(0, spec.size - 1))
    c = data.draw(st.integers(0, spec.size - 1))
    assert spec.mul(a, b) == spec.mul_shift(a, b)
    assert spec.mul(a, b ^ c) == spec.mul(a, b) ^ spec.mul(a, c)
    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))
    assert spec.pow(a, spec.size) == a


@pytest.mark.parametrize("m", [4, 5, 9])
def test_dlog_inverts_pow(m):
    spec = get_field(m)
    assert [spec.dlog(spec.alpha_pow(t)) for t in range(spec.v)] == list(range(spec.v))


def test_m8_modulus_is_not_primitive_but_alpha_is():
    spec = get_field(8)
    assert spec.modulus == polyring.from_terms("x^8+x^4+x^3+x+1")
    assert not polyring.is_primitive(spec.modulus)
    assert naive_order(spec, spec.alpha) == 255


@pytest.mark.parametrize("m", [6, 7, 8])
def test_default_alpha_root_of_bundled_minpoly(m):
    spec = get_field(m)
    target = polyring.BinaryPoly.parse(gf2m.DEFAULT_ALPHA_MINPOLY[m])
    assert target(spec.alpha, spec) == 0


def test_explicit_poly_uses_x_as_alpha():
    spec = get_field(7, "x^7+x^3+1")
    assert spec.alpha == 2


def test_config_override():
    cfg = gf2m.parse_config("# comment\nm=7 poly=x^7+x^3+1\n")
    spec = get_field(7, config=cfg)
    assert spec.modulus == polyring.from_terms("x^7+x^3+1")
    with pytest.raises(UsageError):
        gf2m.parse_config("m=7\n")


def test_rejects_bad_moduli():
    with pytest.raises(UsageError):
        FieldSpec(4, "x^4+x^2+1")  # reducible
    with pytest.raises(UsageError):
        FieldSpec(4, "x^4+x^3+x^2+x+1")  # x has order 5
    with pytest.raises(UsageError):
        FieldSpec(1)
