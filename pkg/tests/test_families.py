import pytest

from tracecodes import families
from tracecodes.errors import DomainError, UsageError
from tracecodes.families import evaluate, exp3, get_family, is_permutation
from tracecodes.gf2m import get_field


def test_evaluate_examples():
    spec = get_field(5)
    assert evaluate("f3", 5, 0, spec) == 0
    assert evaluate("f3", 5, 1, spec) == 1
    s4 = get_field(4)
    a = s4.alpha
    want = a ^ s4.pow(a, 4) ^ s4.pow(a, 13)
    assert evaluate("f6", 4, a, s4) == want
    x = s4.element(a)
    assert evaluate("f6", 4, x).value == want


@pytest.mark.parametrize("fid", families.FAMILY_IDS)
def test_zero_maps_to_zero(fid):
    fam = get_family(fid)
    m = next(m for m in range(2, 12) if fam.allows(m))
    assert evaluate(fam, m, 0) == 0


def test_evaluate_all_matches_scalar():
    spec = get_field(7)
    vals = families.evaluate_all("f4", 7, spec=spec)
    for x in range(0, spec.size, 7):
        assert vals[x] == evaluate("f4", 7, x, spec)


def test_permutation_examples():
    assert is_permutation("f3", 5)
    assert not is_permutation("f6", 6)
    assert not is_permutation("f8", 6)


@pytest.mark.parametrize("fid", families.FAMILY_IDS)
def test_permutation_claims_up_to_12(fid):
    fam = get_family(fid)
    for m in range(2, 13):
        if not fam.is_valid(m):
            continue
        claim = fam.permutation_claim(m)
        assert claim is not None
        assert is_permutation(fam, m) == claim, (fid, m)


def test_exp3():
    assert exp3(1) == 0
    assert exp3(9) == 2
    for m in (2, 6, 10, 14):
        assert exp3(2 ** (m // 2) + 1) >= 1
    with pytest.raises(DomainError):
        exp3(0)


def test_kasami_exponent_identity():
    for m in range(3, 21, 2):
        h = (m - 1) // 2
        assert (2 ** (2 * h) - 2 ** h + 1) * (2 ** h + 1) == 2 ** (3 * h) + 1
        assert get_family("f5").exponents(m) == [2 ** (2 * h) - 2 ** h + 1]


def test_template_matches_named_families():
    for fid, (s, t) in (("f6", (1, -1)), ("f7", (2, -2))):
        tpl = families.trinomial_template(s, t)
        for m in (4, 6, 8):
            assert families.reduced_exponents(tpl, m) == \
                families.reduced_exponents(get_family(fid), m)
    with pytest.raises(UsageError):
        get_family("F0")
    assert get_family("F0", 1, -1).id == "F0(1,-1)"


def test_zero_exponent_maps_to_v():
    tpl = families.trinomial_template(0, 3)  # s = 0 gives exponent 1, fine
    assert families.reduced_exponents(tpl, 4)[1] == 1
    fam = families.FamilyDescriptor("t", "x^15", lambda m: [15], lambda m: True)
    assert families.reduced_exponents(fam, 4) == [15]
    assert evaluate(fam, 4, 0) == 0 and evaluate(fam, 4, 3) == 1


def test_validity_and_extrapolation():
    with pytest.raises(UsageError):
        families.check_m(get_family("f3"), 6)
    with pytest.warns(families.ExtrapolationWarning):
        assert families.check_m(get_family("f2"), 5) is True
    with pytest.warns(families.ExtrapolationWarning):
        families.check_m(get_family("f7"), 4)
    assert families.check_m(get_family("f2"), 7) is False
    with pytest.raises(UsageError):
        get_family("f9")


def test_m7_field_overrides():
    assert families.default_field("f4", 7).modulus == 0b10001001
    assert families.default_field("f2", 7).modulus == 0b10000011
