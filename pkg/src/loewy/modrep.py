"""Explicit matrix representations of string and band modules.

This is the brute-force side of the double bookkeeping: modules are built as
pairs of square-zero matrices (the actions of X and Y), tensored through the
comultiplication rule X(a o b) = Xa o b + a o Xb + Xa o Xb, and measured by
their radical series.  Everything here is independent of the closed formulas.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .gf2e import (FieldDesc, FieldMatrix, col_space_sum, f_inv, f_mul,
                   kernel_meet, kron, rank)
from .words import Word, band_admissible, parse

DEFAULT_DIM_CAP = 4096


def dim_cap() -> int:
    """Largest allowed representation dimension (LOEWY_MAX_DIM overrides)."""
    value = os.environ.get("LOEWY_MAX_DIM")
    return int(value) if value else DEFAULT_DIM_CAP


@dataclass(frozen=True)
class Representation:
    dim: int
    xmat: FieldMatrix
    ymat: FieldMatrix
    field: FieldDesc

    def __post_init__(self):
        if not (self.xmat @ self.xmat).is_zero():
            raise ValueError("X action does not square to zero")
        if not (self.ymat @ self.ymat).is_zero():
            raise ValueError("Y action does not square to zero")


def string_rep(w: Word, f: FieldDesc) -> Representation:
    """Module on basis e_0..e_m defined by the walk word w = a_1..a_m:
    a direct letter Z sends e_i to e_{i-1}, an inverse letter Z^{-1} at
    position i+1 sends e_i to e_{i+1}."""
    w = parse(w)
    m = len(w)
    xmat = FieldMatrix.zero(f, m + 1, m + 1)
    ymat = FieldMatrix.zero(f, m + 1, m + 1)
    for i, c in enumerate(w):
        mat = xmat if c in "Xx" else ymat
        if c.isupper():
            mat.set(i, i + 1, 1)
        else:
            mat.set(i + 1, i, 1)
    return Representation(m + 1, xmat, ymat, f)


def _jordan(n: int, rho: int, f: FieldDesc) -> FieldMatrix:
    m = FieldMatrix.zero(f, n, n)
    for j in range(n):
        m.set(j, j, rho)
        if j + 1 < n:
            m.set(j + 1, j, 1)
    return m


def _jordan_inv(n: int, rho: int, f: FieldDesc) -> FieldMatrix:
    # (rho I + N)^{-1} = sum_k rho^{-(k+1)} N^k in characteristic 2
    m = FieldMatrix.zero(f, n, n)
    inv = f_inv(rho, f)
    coeff = inv
    for k in range(n):
        for j in range(n - k):
            m.set(j + k, j, coeff)
        coeff = f_mul(coeff, inv, f)
    return m


def band_rep(w: Word, rho: int, n: int, f: FieldDesc) -> Representation:
    """Band module on the cyclic word w twisted by the Jordan block J_n(rho).

    Vertices V_0..V_{m-1} each carry a copy of k^n; a direct letter a_i
    moves V_i one step backwards (through J_n(rho) on the step V_1 -> V_0,
    and cyclically from V_0 to V_{m-1}), an inverse letter a_{i+1} moves V_i
    one step forwards (through the inverse Jordan block on V_0 -> V_1).
    """
    w = parse(w)
    if rho == 0 or rho >> f.e:
        raise ValueError("band scalar must be a nonzero field element")
    if n < 1:
        raise ValueError("Jordan block size must be at least 1")
    if not band_admissible(w):
        raise ValueError(f"not an admissible band word: {w!r}")
    m = len(w)
    dim = m * n
    phi = _jordan(n, rho, f)
    phi_inv = _jordan_inv(n, rho, f)
    xmat = FieldMatrix.zero(f, dim, dim)
    ymat = FieldMatrix.zero(f, dim, dim)

    def put_block(mat, bi, bj, block):
        for j in range(n):
            for jj in range(n):
                v = block.get(jj, j) if block is not None else (1 if jj == j else 0)
                if v:
                    mat.set(bi * n + jj, bj * n + j, v)

    for i in range(m):
        a_i = w[i - 1]          # a_0 is read cyclically as a_m
        if a_i.isupper():
            mat = xmat if a_i == "X" else ymat
            if i >= 2:
                put_block(mat, i - 1, i, None)
            elif i == 1:
                put_block(mat, 0, 1, phi)
            else:
                put_block(mat, m - 1, 0, None)
        a_next = w[i]
        if a_next.islower():
            mat = xmat if a_next == "x" else ymat
            if i == 0:
                put_block(mat, 1, 0, phi_inv)
            elif i == m - 1:
                put_block(mat, 0, m - 1, None)
            else:
                put_block(mat, i + 1, i, None)
    return Representation(dim, xmat, ymat, f)


def regular_rep(q: int, f: FieldDesc) -> Representation:
    """The regular module: band on (XY)^q (X^-1 Y^-1)^q with scalar 1."""
    if q < 2 or q & (q - 1):
        raise ValueError("q must be a power of 2, at least 2")
    return band_rep("XY" * q + "xy" * q, 1, 1, f)


def tensor_rep(r: Representation, s: Representation) -> Representation:
    """Tensor product module; a o b sits at index a_index * s.dim + b_index."""
    if r.field != s.field:
        raise ValueError("field mismatch in tensor product")
    f = r.field
    ir = FieldMatrix.identity(f, r.dim)
    is_ = FieldMatrix.identity(f, s.dim)
    xmat = kron(r.xmat, is_) + kron(ir, s.xmat) + kron(r.xmat, s.xmat)
    ymat = kron(r.ymat, is_) + kron(ir, s.ymat) + kron(r.ymat, s.ymat)
    return Representation(r.dim * s.dim, xmat, ymat, f)


def loewy_length(r: Representation) -> int:
    """Least n with rad^n = 0.

    Because X and Y square to zero, rad^n is spanned by the images of the
    two alternating length-n products of X and Y; the length is the first n
    at which both vanish.
    """
    p, q2 = r.xmat, r.ymat
    n = 1
    while not (p.is_zero() and q2.is_zero()):
        if not p.is_zero():
            p = (r.xmat if n % 2 == 0 else r.ymat) @ p
        if not q2.is_zero():
            q2 = (r.ymat if n % 2 == 0 else r.xmat) @ q2
        n += 1
    return n


def radical_series(r: Representation) -> list[int]:
    """Dimensions of rad^0 M, rad^1 M, ... down to 0, by rad W = XW + YW."""
    w = FieldMatrix.identity(r.field, r.dim)
    dims = [r.dim]
    while dims[-1] > 0:
        w = col_space_sum([r.xmat @ w, r.ymat @ w])
        dims.append(w.ncols)
    return dims


def socle_dim(r: Representation) -> int:
    """Dimension of ker X intersected with ker Y."""
    return kernel_meet([r.xmat, r.ymat]).ncols


def top_dim(r: Representation) -> int:
    """Dimension of M / rad M."""
    return r.dim - rank(col_space_sum([r.xmat, r.ymat]))


def check_dihedral(r: Representation, q: int) -> bool:
    """True iff (XY)^q + (YX)^q acts as zero, i.e. the module lives over the
    dihedral group algebra for this q."""
    if q < 2 or q & (q - 1):
        raise ValueError("q must be a power of 2, at least 2")
    xy = r.xmat @ r.ymat
    yx = r.ymat @ r.xmat
    k = q
    while k > 1:
        xy = xy @ xy
        yx = yx @ yx
        k //= 2
    return (xy + yx).is_zero()
