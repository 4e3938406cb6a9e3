import random

from loewy.formulas import StringSpec, UniserialA, UniserialB
from loewy.gf2e import GF2, GF4
from loewy.verify import (band_spec, compare, grid_uniserial, oracle_loewy,
                          random_band_spec, random_string_spec, run_verify,
                          spec_dim, spec_to_rep)
from loewy.words import in_w_prime


def test_spec_to_rep_dims():
    for spec in (UniserialA(3), UniserialB(0), StringSpec("XYx"),
                 band_spec(2, 1, 1), band_spec(2, 2, 3, n=2)):
        assert spec_to_rep(spec, GF4).dim == spec_dim(spec)


def test_oracle_cache_symmetric():
    cache = {}
    a, b = UniserialA(2), UniserialB(3)
    v1 = oracle_loewy(a, b, GF2, cache)
    v2 = oracle_loewy(b, a, GF2, cache)
    assert v1 == v2
    assert len(cache) == 1


def test_compare_flags_disagreement():
    cache = {}
    assert compare(UniserialA(1), UniserialB(1), 2, GF2, cache) is None
    bad = compare(UniserialA(1), UniserialB(1), 2, GF2,
                  {tuple(sorted([repr(UniserialA(1)), repr(UniserialB(1))])) + (1,): 99})
    assert bad is not None and bad["oracle"] == 99


def test_grid_uniserial_small():
    result = grid_uniserial(2, GF2)
    assert result["cells"] == 64
    assert result["mismatches"] == []


def test_random_spec_generators():
    rng = random.Random(0)
    for _ in range(30):
        s = random_string_spec(rng, 4)
        from loewy.words import parse, directed_components
        comps = directed_components(parse(s.word))
        assert 1 <= len(comps) <= 3
        assert all(c.length <= 7 for c in comps)
        b = random_band_spec(rng, 4)
        assert in_w_prime(b.word)
        assert b.n in (1, 2) and b.rho in (1, 2, 3)


def test_run_verify_summary_shape():
    summary = run_verify(2, GF2, 2, 2)
    assert summary["mismatch_count"] == 0
    assert set(summary) == {"q", "field", "cells", "skipped",
                            "mismatch_count", "mismatches"}
