import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tracecodes import families, sequence
from tracecodes.cosets import build_cosets
from tracecodes.errors import UsageError
from tracecodes.gf2m import get_field
from tracecodes.polyring import BinaryPoly
from tracecodes.sequence import TraceSequence

CATALOG_PAIRS = [(fid, m) for fid in families.FAMILY_IDS for m in range(2, 11)
                 if families.get_family(fid).allows(m)]


def test_f1_sequence_is_trace_plus_one():
    seq = sequence.generate("f1", 5)
    spec = seq.spec
    want = [spec.trace(spec.alpha_pow(t)) ^ 1 for t in range(spec.v)]
    assert seq.bits.tolist() == want


@pytest.mark.parametrize("m", [4, 6, 8])
def test_f6_sequence_is_trace_of_geometric_sum(m):
    seq = sequence.generate("f6", m)
    spec = seq.spec
    h = m // 2
    for t in range(spec.v):
        y = spec.alpha_pow(t)
        acc = 0
        for i in range(2 ** (h + 1)):
            acc ^= spec.pow(y, i)
        assert seq.bits[t] == spec.trace(acc)


def zero_family():
    return families.FamilyDescriptor("zero", "x + x", lambda m: [1, 1], lambda m: True)


def test_zero_polynomial_gives_zero_sequence():
    seq = sequence.generate(zero_family(), 5)
    assert not seq.bits.any()
    res = sequence.analyze(seq)
    assert res.linear_span == 0 and res.minimal_poly == BinaryPoly(1)


def test_dft_examples():
    res = sequence.analyze_dft(sequence.generate("f1", 5))
    assert res.linear_span == 6
    assert res.index_set == frozenset({0, 1, 2, 4, 8, 16})
    assert sequence.analyze_dft(sequence.generate("f3", 5)).linear_span == 16


def test_bm_examples():
    spec = get_field(4)
    ones = TraceSequence.from_bits(np.ones(15), spec)
    res = sequence.analyze_bm(ones)
    assert res.minimal_poly == BinaryPoly.parse("x+1") and res.linear_span == 1
    f1 = sequence.generate("f1", 5)
    assert sequence.analyze_bm(f1).minimal_poly == sequence.analyze_dft(f1).minimal_poly
    f4 = sequence.generate("f4", 5)
    assert sequence.analyze_bm(f4).linear_span == 1 + 5 * (2 ** 1 + 1)


def test_bm_textbook_lfsr():
    # s_n = s_{n-1} + s_{n-4} from seed 1000: a maximal sequence of span 4
    s = [1, 0, 0, 0]
    for n in range(4, 30):
        s.append(s[n - 1] ^ s[n - 4])
    c, L = sequence.berlekamp_massey(s)
    assert L == 4 and c == 0b10011  # 1 + x + x^4


@pytest.mark.parametrize("fid,m", CATALOG_PAIRS)
def test_catalog_oracle_equivalence(fid, m):
    seq = sequence.generate(fid, m)
    dft = sequence.analyze_dft(seq)
    bm = sequence.analyze_bm(seq)
    assert dft.minimal_poly == bm.minimal_poly
    assert dft.linear_span == dft.minimal_poly.degree == len(dft.index_set)
    assert sequence.annihilates(dft.minimal_poly, seq.bits)
    ct = build_cosets(m)
    assert ct.union(dft.leaders(ct)) == set(dft.index_set)
    assert sequence.assemble_generator(dft.index_set, seq.spec, ct) == dft.minimal_poly
    assert seq.v % seq.period() == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 4, 5, 6]), st.data())
def test_random_sequences_oracle_equivalence(m, data):
    spec = get_field(m)
    bits = data.draw(st.lists(st.integers(0, 1), min_size=spec.v, max_size=spec.v))
    seq = TraceSequence.from_bits(bits, spec)
    dft = sequence.analyze_dft(seq)
    bm = sequence.analyze_bm(seq)
    assert dft.minimal_poly == bm.minimal_poly
    assert sequence.annihilates(bm.minimal_poly, seq.bits)
    assert np.array_equal(sequence.inverse_dft(dft.dft_coeffs, spec), seq.bits)


def test_annihilation_fails_for_wrong_poly():
    seq = sequence.generate("f3", 5)
    assert not sequence.annihilates(BinaryPoly.parse("x^5+x^2+1"), seq.bits)


def test_from_bits_validation():
    spec = get_field(3)
    with pytest.raises(UsageError):
        TraceSequence.from_bits([1, 0], spec)
    with pytest.raises(UsageError):
        TraceSequence.from_bits([2] * 7, spec)


def test_period_of_short_period_sequence():
    spec = get_field(4)
    seq = TraceSequence.from_bits([1, 0, 0] * 5, spec)
    assert seq.period() == 3
