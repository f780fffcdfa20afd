from dataclasses import replace

import pytest

from tracecodes import families, predict, sequence
from tracecodes.cosets import build_cosets
from tracecodes.errors import UnsupportedPrediction, UsageError
from tracecodes.polyring import BinaryPoly

PAIRS = [(fid, m) for fid in families.FAMILY_IDS for m in range(2, 12)
         if families.get_family(fid).allows(m)]


def run(fid, m):
    seq = sequence.generate(fid, m)
    return predict.crosscheck(predict.predict(fid, m), sequence.analyze_dft(seq), seq.spec)


def test_f3_prediction():
    p = predict.predict("f3", 5)
    assert (p.predicted_span, p.predicted_dim, p.predicted_distance) == (16, 15, (8, 8))
    assert p.predicted_leader_set == frozenset({0, 1, 3, 5})


def test_f8_m6_prediction_values():
    p = predict.predict("f8", 6)
    assert p.predicted_span == 35 and p.predicted_dim == 28


def test_f1_m3_prediction_matches_sequence():
    p = predict.predict("f1", 3)
    assert (p.predicted_span, p.predicted_dim, p.predicted_distance) == (4, 3, (4, 4))
    assert run("f1", 3).ok


def test_crosscheck_examples():
    assert run("f1", 5).ok
    r = run("f4", 7)
    assert r.ok and r.computed_span == 22


def test_crosscheck_negative_control():
    seq = sequence.generate("f3", 5)
    bad = replace(predict.predict("f3", 5), predicted_leader_set=frozenset({0, 1, 7}))
    r = predict.crosscheck(bad, sequence.analyze_dft(seq), seq.spec)
    assert not r.ok and r.missing == (3, 5) and r.extra == (7,)


@pytest.mark.parametrize("fid,m", PAIRS)
def test_prediction_invariants(fid, m):
    p = predict.predict(fid, m)
    v = 2 ** m - 1
    assert p.predicted_dim == v - p.predicted_span
    lo, hi = p.predicted_distance
    assert 2 <= lo <= hi


@pytest.mark.parametrize("fid,m", [pm for pm in PAIRS if pm[0] != "f8"])
def test_crosscheck_passes(fid, m):
    r = run(fid, m)
    assert r.ok, r.as_dict()


@pytest.mark.parametrize("m", [6, 8, 10])
def test_f8_leaders_agree_but_stated_span_does_not(m):
    r = run("f8", m)
    assert r.leaders_match and r.generator_match
    assert not r.span_match
    assert (r.formula_span, r.computed_span) == {6: (35, 32), 8: (132, 112), 10: (305, 280)}[m]


def test_f8_stated_display_contains_vanishing_and_repeated_cosets():
    for m in (8, 10):
        h = m // 2
        ct = build_cosets(m)
        p = predict.predict("f8", m)
        reps = [ct.leader(i) for i in p.display]
        assert ct.leader(2 ** h + 1) in reps and ct.size(2 ** h + 1) == h
        assert reps.count(ct.leader(5 + 2 ** (h + 1))) == 2


def test_f4_parity_structure():
    for m in (5, 9, 13):
        assert {0, 1, 3} <= predict.predict("f4", m).predicted_leader_set
    for m in (7, 11):
        s = predict.predict("f4", m).predicted_leader_set
        assert {0, 5} <= s and not {1, 3} & s


def test_f8_m6_special_coset_size():
    ct = build_cosets(6)
    assert ct.leader(5 + 2 ** 4) in predict.predict("f8", 6).predicted_leader_set
    assert ct.size(5 + 2 ** 4) == 2


def test_extrapolated_examples_are_flagged():
    for fid, m in (("f2", 5), ("f5", 5), ("f7", 4)):
        p = predict.predict(fid, m)
        assert p.extrapolated and p.notes
        assert run(fid, m).ok


def test_unsupported_and_unknown():
    with pytest.raises(UnsupportedPrediction):
        predict.predict("f3", 6)
    with pytest.raises(UnsupportedPrediction):
        predict.predict(families.get_family("F0", 1, 3), 8)
    with pytest.raises(UsageError):
        predict.predict("nope", 5)


def test_generator_from_prediction_matches_printed_f3_form():
    seq = sequence.generate("f3", 5)
    g = predict.generator_from_leaders({0, 1, 3, 5}, seq.spec)
    assert g == sequence.analyze_dft(seq).minimal_poly
    assert g.degree == 16 and g.coeff(0) == 1 and isinstance(g, BinaryPoly)
