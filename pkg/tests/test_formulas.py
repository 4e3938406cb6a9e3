import pytest
from hypothesis import given, strategies as st

from loewy.binlucas import hash_op, perp
from loewy.formulas import (BandSpec, StringSpec, UniserialA, UniserialB,
                            band_band_case, is_regular, loewy_band_band,
                            loewy_band_uniserial, loewy_general,
                            loewy_uniserial, projective_summand,
                            validate_spec)
from loewy.gf2e import GF2, GF4
from loewy.verify import band_spec, oracle_loewy


def test_paper_fixtures():
    assert loewy_uniserial("A", 146, "A", 266) == 412
    assert loewy_uniserial("A", 146, "B", 266) == 413
    assert loewy_band_band(146, 146, 1, 266, 266, 1) == 411


def test_uniserial_small():
    assert loewy_uniserial("A", 0, "B", 5) == 6
    assert loewy_uniserial("A", 1, "B", 1) == 3
    assert loewy_uniserial("A", 1, "A", 1) == 2
    assert loewy_uniserial("B", 146, "B", 266) == 412
    assert loewy_uniserial("B", 146, "A", 266) == 413


def test_band_uniserial():
    assert loewy_band_uniserial(2, 2, 1, "A", 1) == 3
    assert loewy_band_uniserial(2, 2, 2, "A", 1) == 4
    # unequal legs fall through to the string value
    for m in range(4):
        assert loewy_band_uniserial(3, 1, 2, "A", m) == \
            max(loewy_uniserial("A", 3, "A", m), loewy_uniserial("B", 1, "A", m))
    with pytest.raises(ValueError):
        loewy_band_uniserial(0, 1, 1, "A", 1)


def test_band_band_cases():
    assert band_band_case(146, 146, 1, 266, 266, 1) == ("e", 411)
    assert loewy_band_band(1, 1, 2, 1, 1, 2) == 2
    assert loewy_band_band(1, 1, 1, 1, 1, 2) == 3
    assert band_band_case(2, 1, 1, 1, 1, 1)[0] == "a"


def test_loewy_general_reduction():
    rep = loewy_general(StringSpec("XYx"), UniserialA(1), 4)
    assert rep.length == 4
    assert any("split" in line for line in rep.trace)
    # band with Jordan block size 2 reduces to its components
    band = band_spec(3, 3, 1, n=2)
    rep = loewy_general(band, UniserialA(2), 4)
    assert rep.length == max(loewy_uniserial("A", 3, "A", 2),
                             loewy_uniserial("B", 3, "A", 2))


def test_loewy_general_regular():
    reg = BandSpec("XY" * 2 + "xy" * 2, 1, 1)
    assert is_regular(reg, 2)
    assert not is_regular(reg, 4)
    for other in (UniserialA(0), UniserialA(3), band_spec(2, 1, 1)):
        rep = loewy_general(reg, other, 2)
        assert rep.length == 5
        assert rep.projective_summand


def test_validate_spec():
    with pytest.raises(ValueError):
        validate_spec(UniserialA(4), 2, GF2)
    validate_spec(UniserialA(3), 2, GF2)
    with pytest.raises(ValueError):
        validate_spec(band_spec(4, 4, 2), 2, GF4)   # legs 2q need rho = 1
    with pytest.raises(ValueError):
        validate_spec(BandSpec("Yx", 2, 1), 2, GF2)  # scalar outside field
    with pytest.raises(ValueError):
        loewy_general(UniserialA(1), UniserialA(1), 3)


def test_symmetry_and_covariance():
    specs = [UniserialA(2), UniserialB(3), StringSpec("XYx"),
             band_spec(2, 1, 3), band_spec(3, 3, 2)]
    swap = {UniserialA: UniserialB, UniserialB: UniserialA}
    for a in specs:
        for b in specs:
            assert loewy_general(a, b, 4, GF4).length == \
                loewy_general(b, a, 4, GF4).length
    for l in range(4):
        for m in range(4):
            assert loewy_uniserial("A", l, "A", m) == loewy_uniserial("B", l, "B", m)
            assert loewy_uniserial("A", l, "B", m) == loewy_uniserial("B", l, "A", m)


def test_length_cap():
    q = 4
    for a in (UniserialA(5), band_spec(3, 2, 1), StringSpec("XYxYX")):
        for b in (UniserialB(6), band_spec(7, 7, 3)):
            rep = loewy_general(a, b, q, GF4)
            assert rep.length <= 2 * q + 1


@given(st.integers(0, 200), st.integers(0, 200))
def test_mixed_dominates_same_kind(l, m):
    same = loewy_uniserial("A", l, "A", m)
    mixed = loewy_uniserial("A", l, "B", m)
    assert same <= mixed
    assert mixed == min(2 + hash_op(l, m), 1 + l + m)


@given(st.integers(1, 512), st.integers(1, 512))
def test_exactly_two_perp_predicates(l, m):
    flags = [perp(l, m), perp(l - 1, m), perp(l, m - 1)]
    assert sum(flags) in (0, 2)


def test_projective_summand_fixtures():
    assert projective_summand(UniserialA(3), UniserialB(1), 2)
    assert not projective_summand(UniserialA(3), UniserialA(1), 2)
    assert projective_summand(band_spec(2, 2, 1), band_spec(2, 2, 2), 2, GF4)
    assert oracle_loewy(band_spec(2, 2, 1), band_spec(2, 2, 2), GF4) == 5


def test_projective_matches_length():
    q = 2
    specs = [UniserialA(l) for l in range(4)] + \
            [UniserialB(l) for l in range(4)] + \
            [band_spec(l1, l2, rho) for l1 in (1, 2, 3)
             for l2 in (1, 2, 3) for rho in (1, 2, 3)]
    for a in specs:
        for b in specs:
            rep = loewy_general(a, b, q, GF4)
            assert projective_summand(a, b, q, GF4) == (rep.length == 2 * q + 1)
