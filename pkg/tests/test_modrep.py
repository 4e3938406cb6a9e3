import random

import pytest

from loewy.gf2e import GF2, GF4
from loewy.modrep import (band_rep, check_dihedral, dim_cap, loewy_length,
                          radical_series, regular_rep, socle_dim, string_rep,
                          tensor_rep, top_dim)
from loewy.words import a_word, b_word


def test_string_rep_uniserial():
    for l in range(9):
        r = string_rep(a_word(l), GF2)
        assert r.dim == l + 1
        assert loewy_length(r) == l + 1
        assert radical_series(r) == list(range(l + 1, -1, -1))


def test_string_rep_trivial():
    t = string_rep("", GF2)
    assert t.dim == 1
    assert t.xmat.is_zero() and t.ymat.is_zero()
    assert loewy_length(t) == 1
    assert radical_series(t) == [1, 0]
    assert socle_dim(t) == 1


def test_string_rep_generators():
    # the top of a string module counts peaks of the schema, not directed
    # components: XYx has components A_2, B_1 but a single peak e_2
    r = string_rep("XYx", GF2)
    assert r.dim == 4
    assert top_dim(r) == 1
    assert socle_dim(r) == 2  # sinks e_0 and e_3
    r = string_rep("XyX", GF2)
    assert r.dim == 4
    assert top_dim(r) == 2


def test_string_loewy_is_max_component():
    rng = random.Random(1)
    from loewy.verify import random_string_spec
    for _ in range(25):
        spec = random_string_spec(rng, 4)
        from loewy.words import directed_components
        h = max(c.length for c in directed_components(spec.word))
        assert loewy_length(string_rep(spec.word, GF2)) == h + 1


def test_band_rep_simple_top_socle():
    for l in range(1, 6):
        word = a_word(l) + b_word(l).swapcase()[::-1]
        for rho in (1, 2, 3):
            r = band_rep(word, rho, 1, GF4)
            assert r.dim == 2 * l
            assert loewy_length(r) == l + 1
            assert top_dim(r) == 1
            assert socle_dim(r) == 1


def test_band_rep_basics():
    r = band_rep("Yx", 2, 1, GF4)
    assert r.dim == 2
    assert loewy_length(r) == 2
    with pytest.raises(ValueError):
        band_rep("Yx", 0, 1, GF4)
    with pytest.raises(ValueError):
        band_rep("XYXY", 1, 1, GF2)


def test_band_rep_jordan_block():
    r = band_rep("XYxy", 1, 2, GF2)
    assert r.dim == 8
    assert loewy_length(r) == 3


def test_regular_rep():
    for q in (2, 4, 8):
        r = regular_rep(q, GF2)
        assert r.dim == 4 * q
        assert loewy_length(r) == 2 * q + 1
        assert top_dim(r) == 1
        assert check_dihedral(r, q)
    assert radical_series(regular_rep(2, GF2)) == [8, 7, 5, 3, 1, 0]
    with pytest.raises(ValueError):
        regular_rep(3, GF2)


def test_check_dihedral():
    # valid at q=2: every module of Loewy length at most 2q
    assert check_dihedral(string_rep(a_word(3), GF2), 2)
    assert check_dihedral(string_rep("XYxYX", GF2), 2)
    # the only module of length 2q+1 is the regular band, not A_{2q}
    assert not check_dihedral(string_rep(a_word(4), GF2), 2)
    assert not check_dihedral(string_rep(a_word(5), GF2), 2)


def test_tensor_rep():
    trivial = string_rep("", GF2)
    for w in ("Y", "XYx", "YXY"):
        s = string_rep(w, GF2)
        assert loewy_length(tensor_rep(trivial, s)) == loewy_length(s)
    a1, b1 = string_rep(a_word(1), GF2), string_rep(b_word(1), GF2)
    assert loewy_length(tensor_rep(a1, b1)) == 3
    with pytest.raises(ValueError):
        tensor_rep(string_rep("Y", GF2), string_rep("Y", GF4))


def test_tensor_square_zero_and_symmetry():
    rng = random.Random(2)
    words = ["Y", "XY", "YXy", "XYxy", "xYX"]
    for _ in range(8):
        r = string_rep(rng.choice(words), GF2)
        s = string_rep(rng.choice(words), GF2)
        rs = tensor_rep(r, s)   # constructor asserts square-zero actions
        sr = tensor_rep(s, r)
        assert loewy_length(rs) == loewy_length(sr)


def test_tensor_preserves_dihedral_relation():
    q = 2
    reps = [string_rep(a_word(3), GF2), band_rep("XYxy", 1, 1, GF2)]
    for r in reps:
        for s in reps:
            assert check_dihedral(r, q) and check_dihedral(s, q)
            assert check_dihedral(tensor_rep(r, s), q)


def test_xy_swap_invariance():
    from loewy.modrep import Representation
    pairs = [("XYx", "Y"), ("YXy", "XY"), ("XYxy", "Yx")]
    for wa, wb in pairs:
        r = string_rep(wa, GF2)
        s = string_rep(wb, GF2)
        rsw = Representation(r.dim, r.ymat, r.xmat, r.field)
        ssw = Representation(s.dim, s.ymat, s.xmat, s.field)
        assert loewy_length(tensor_rep(r, s)) == loewy_length(tensor_rep(rsw, ssw))


def test_loewy_length_matches_radical_series():
    rng = random.Random(4)
    words = ["", "Y", "XY", "YXy", "XYxy", "xYXyX"]
    for w in words:
        r = string_rep(w, GF2)
        assert loewy_length(r) == len(radical_series(r)) - 1
    for _ in range(5):
        r = string_rep(rng.choice(words[1:]), GF2)
        s = string_rep(rng.choice(words[1:]), GF2)
        t = tensor_rep(r, s)
        series = radical_series(t)
        assert loewy_length(t) == len(series) - 1
        assert all(a > b for a, b in zip(series, series[1:]))


def test_dim_cap_env(monkeypatch):
    assert dim_cap() == 4096
    monkeypatch.setenv("LOEWY_MAX_DIM", "128")
    assert dim_cap() == 128
