"""Cross-validation of the closed formulas against the matrix oracle.

Grids of module-spec pairs are evaluated by both engines; any disagreement
in Loewy length, or between the projective-summand predicate and the
Loewy-length criterion, is reported as a mismatch.  The oracle works with
square-zero matrix pairs only, so its results do not depend on q and are
cached across grids.
"""

from __future__ import annotations

import random

from .formulas import (BandSpec, ModuleSpec, StringSpec, UniserialA,
                       UniserialB, band_band_case, loewy_general,
                       spec_label)
from .gf2e import GF2, GF4, FieldDesc
from .modrep import band_rep, dim_cap, loewy_length, string_rep, tensor_rep
from .words import a_word, b_word, in_w_prime


def spec_to_rep(spec: ModuleSpec, f: FieldDesc):
    if isinstance(spec, UniserialA):
        return string_rep(a_word(spec.l), f)
    if isinstance(spec, UniserialB):
        return string_rep(b_word(spec.l), f)
    if isinstance(spec, StringSpec):
        return string_rep(spec.word, f)
    return band_rep(spec.word, spec.rho, spec.n, f)


def spec_dim(spec: ModuleSpec) -> int:
    if isinstance(spec, (UniserialA, UniserialB)):
        return spec.l + 1
    if isinstance(spec, StringSpec):
        return len(spec.word) + 1
    return len(spec.word) * spec.n


def oracle_loewy(a: ModuleSpec, b: ModuleSpec, f: FieldDesc,
                 cache: dict | None = None) -> int:
    """Loewy length of the tensor product, measured on explicit matrices."""
    if cache is None:
        cache = {}
    key = tuple(sorted([repr(a), repr(b)])) + (f.e,)
    if key not in cache:
        cache[key] = loewy_length(tensor_rep(spec_to_rep(a, f),
                                             spec_to_rep(b, f)))
    return cache[key]


def compare(a: ModuleSpec, b: ModuleSpec, q: int, f: FieldDesc,
            cache: dict) -> dict | None:
    """Run both engines on one cell; return a mismatch record or None."""
    report = loewy_general(a, b, q, f)
    oracle = oracle_loewy(a, b, f, cache)
    proj_ok = report.projective_summand == (oracle == 2 * q + 1)
    if report.length == oracle and proj_ok:
        return None
    return {"left": spec_label(a), "right": spec_label(b), "q": q,
            "formula": report.length, "oracle": oracle,
            "projective_summand": report.projective_summand}


def _new_result():
    return {"cells": 0, "skipped": 0, "mismatches": []}


def _run_cell(result, a, b, q, f, cache):
    if spec_dim(a) * spec_dim(b) > dim_cap():
        result["skipped"] += 1
        return
    result["cells"] += 1
    mismatch = compare(a, b, q, f, cache)
    if mismatch is not None:
        result["mismatches"].append(mismatch)


def band_spec(l1: int, l2: int, rho: int, n: int = 1) -> BandSpec:
    """The band with an A-leg of length l1 and a B-leg of length l2."""
    word = a_word(l1) + b_word(l2).swapcase()[::-1]
    return BandSpec(word, rho, n)


def grid_uniserial(q: int, f: FieldDesc = GF2, max_l: int | None = None,
                   max_m: int | None = None, cache: dict | None = None) -> dict:
    """All pairs of uniserial modules with lengths up to 2q - 1."""
    if cache is None:
        cache = {}
    lmax = min(2 * q - 1, max_l if max_l is not None else 2 * q - 1)
    mmax = min(2 * q - 1, max_m if max_m is not None else 2 * q - 1)
    result = _new_result()
    kinds = {"A": UniserialA, "B": UniserialB}
    for ka in kinds.values():
        for kb in kinds.values():
            for l in range(lmax + 1):
                for m in range(mmax + 1):
                    _run_cell(result, ka(l), kb(m), q, f, cache)
    return result


def _rhos(f: FieldDesc) -> list[int]:
    return [r for r in (1, 2, 3) if r < (1 << f.e)]


def grid_band_string(q: int, f: FieldDesc = GF4, max_l: int | None = None,
                     max_m: int | None = None,
                     cache: dict | None = None) -> dict:
    """Two-legged bands (all scalar choices) against both uniserial kinds."""
    if cache is None:
        cache = {}
    lmax = min(2 * q - 1, max_l if max_l is not None else 2 * q - 1)
    mmax = min(2 * q - 1, max_m if max_m is not None else 2 * q - 1)
    result = _new_result()
    for l1 in range(1, lmax + 1):
        for l2 in range(1, lmax + 1):
            for rho in _rhos(f):
                band = band_spec(l1, l2, rho)
                for m in range(mmax + 1):
                    for uni in (UniserialA(m), UniserialB(m)):
                        _run_cell(result, band, uni, q, f, cache)
    return result


def grid_band_band(q: int, f: FieldDesc = GF4, max_l: int | None = None,
                   max_m: int | None = None,
                   cache: dict | None = None) -> dict:
    """Two-legged bands against two-legged bands, tracking which case of
    the band-with-band formula each cell exercises."""
    if cache is None:
        cache = {}
    lmax = min(2 * q - 1, max_l if max_l is not None else 2 * q - 1)
    mmax = min(2 * q - 1, max_m if max_m is not None else 2 * q - 1)
    result = _new_result()
    result["cases_hit"] = set()
    for l1 in range(1, lmax + 1):
        for l2 in range(1, lmax + 1):
            for rho in _rhos(f):
                left = band_spec(l1, l2, rho)
                for m1 in range(1, mmax + 1):
                    for m2 in range(1, mmax + 1):
                        for sigma in _rhos(f):
                            right = band_spec(m1, m2, sigma)
                            cells = result["cells"]
                            _run_cell(result, left, right, q, f, cache)
                            if result["cells"] > cells:
                                label, _ = band_band_case(
                                    l1, l2, rho, m1, m2, sigma)
                                result["cases_hit"].add(label)
    return result


def _word_from_runs(run_lengths, run_direct, start_base) -> str:
    bases = "XY" if start_base == "X" else "YX"
    letters = []
    pos = 0
    for length, direct in zip(run_lengths, run_direct):
        for _ in range(length):
            base = bases[pos % 2]
            letters.append(base if direct else base.lower())
            pos += 1
    return "".join(letters)


def random_string_spec(rng: random.Random, q: int) -> StringSpec:
    ncomps = rng.randint(1, 3)
    lengths = [rng.randint(1, 2 * q - 1) for _ in range(ncomps)]
    direct = [rng.random() < 0.5]
    for _ in range(ncomps - 1):
        direct.append(not direct[-1])
    word = _word_from_runs(lengths, direct, rng.choice("XY"))
    return StringSpec(word)


def random_band_spec(rng: random.Random, q: int, sizes=(1, 2)) -> BandSpec:
    while True:
        ncomps = rng.choice([2, 4])
        lengths = [rng.randint(1, 2 * q - 1) for _ in range(ncomps)]
        direct = [bool(i % 2 == 0) for i in range(ncomps)]
        word = _word_from_runs(lengths, direct, rng.choice("XY"))
        if in_w_prime(word):
            return BandSpec(word, rng.choice(_rhos(GF4)), rng.choice(sizes))


def grid_random_multi(q: int = 4, count: int = 50, seed: int = 20240817,
                      f: FieldDesc = GF4, cache: dict | None = None) -> dict:
    """Pseudo-random multi-component strings and bands against uniserial
    and two-legged band partners."""
    if cache is None:
        cache = {}
    rng = random.Random(seed)
    result = _new_result()
    for i in range(count):
        spec = (random_string_spec(rng, q) if i % 2 == 0
                else random_band_spec(rng, q))
        partners = [
            rng.choice([UniserialA, UniserialB])(rng.randint(0, 2 * q - 1)),
            band_spec(rng.randint(1, 2 * q - 1), rng.randint(1, 2 * q - 1),
                      rng.choice(_rhos(f))),
        ]
        for partner in partners:
            _run_cell(result, spec, partner, q, f, cache)
    return result


def run_verify(q: int, f: FieldDesc, max_l: int, max_m: int) -> dict:
    """The CLI verification entry point: run every grid that makes sense for
    the given field, bounded by max_l and max_m."""
    cache: dict = {}
    grids = {"uniserial": grid_uniserial(q, f, max_l, max_m, cache)}
    if f.e >= 2:
        grids["band_string"] = grid_band_string(q, f, max_l, max_m, cache)
        grids["band_band"] = grid_band_band(q, f, max_l, max_m, cache)
    cells = sum(g["cells"] for g in grids.values())
    skipped = sum(g["skipped"] for g in grids.values())
    mismatches = [m for g in grids.values() for m in g["mismatches"]]
    return {"q": q, "field": f"gf:{f.e}", "cells": cells, "skipped": skipped,
            "mismatch_count": len(mismatches), "mismatches": mismatches[:10]}
