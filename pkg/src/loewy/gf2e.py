"""Exact arithmetic in GF(2^e) for small e, and dense linear algebra over it.

Field elements are encoded as integers in [0, 2^e): bit i is the coefficient
of g^i where g is a root of the fixed reduction polynomial.  Matrices keep
each row as e bit-plane integers (bit c of plane p = p-th coefficient bit of
the entry in column c), so row operations are a handful of big-int XORs.
"""

from __future__ import annotations

from dataclasses import dataclass

# Fixed irreducible reduction polynomials (bit i = coefficient of x^i).
REDUCTION_POLYS = {
    1: 0b10,         # x
    2: 0b111,        # x^2 + x + 1
    3: 0b1011,       # x^3 + x + 1
    4: 0b10011,      # x^4 + x + 1
    8: 0b100011011,  # x^8 + x^4 + x^3 + x + 1
}


@dataclass(frozen=True)
class FieldDesc:
    e: int
    poly: int

    def __repr__(self):
        return f"GF(2^{self.e})"


def gf(e: int) -> FieldDesc:
    if e not in REDUCTION_POLYS:
        raise ValueError(f"no reduction polynomial fixed for GF(2^{e})")
    return FieldDesc(e, REDUCTION_POLYS[e])


GF2 = gf(1)
GF4 = gf(2)


def f_add(a: int, b: int) -> int:
    return a ^ b


def f_mul(a: int, b: int, f: FieldDesc) -> int:
    r = 0
    top = 1 << f.e
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= f.poly
    return r


def f_pow(a: int, k: int, f: FieldDesc) -> int:
    r = 1
    while k:
        if k & 1:
            r = f_mul(r, a, f)
        a = f_mul(a, a, f)
        k >>= 1
    return r


def f_inv(a: int, f: FieldDesc) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    return f_pow(a, (1 << f.e) - 2, f)


# ---------------------------------------------------------------------------
# packed-row helpers (rows are lists of e plane ints)

def _mulg(planes, f):
    """Multiply every entry of a packed row by the field generator g."""
    e = f.e
    top = planes[e - 1]
    out = []
    for j in range(e):
        p = planes[j - 1] if j > 0 else 0
        if (f.poly >> j) & 1:
            p ^= top
        out.append(p)
    return out


def _scaled(planes, v, f):
    """Packed row times the scalar v."""
    if v == 0:
        return [0] * f.e
    if v == 1:
        return list(planes)
    acc = [0] * f.e
    tmp = list(planes)
    for i in range(f.e):
        if (v >> i) & 1:
            for j in range(f.e):
                acc[j] ^= tmp[j]
        if v >> (i + 1):
            tmp = _mulg(tmp, f)
    return acc


def _entry(planes, col, e):
    v = 0
    for p in range(e):
        v |= ((planes[p] >> col) & 1) << p
    return v


def _set_entry(planes, col, v, e):
    bit = 1 << col
    for p in range(e):
        if (v >> p) & 1:
            planes[p] |= bit
        else:
            planes[p] &= ~bit


class FieldMatrix:
    """Dense matrix over GF(2^e) with bit-plane packed rows."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [[0] * field.e for _ in range(nrows)]
        self.rows = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        m = cls(field, n, n)
        for i in range(n):
            m.rows[i][0] = 1 << i
        return m

    @classmethod
    def from_entries(cls, field, entries):
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        m = cls(field, nrows, ncols)
        for r, row in enumerate(entries):
            if len(row) != ncols:
                raise ValueError("ragged entry rows")
            for c, v in enumerate(row):
                if v:
                    _set_entry(m.rows[r], c, v, field.e)
        return m

    # -- element access -----------------------------------------------------

    def get(self, r, c):
        return _entry(self.rows[r], c, self.field.e)

    def set(self, r, c, v):
        if v >> self.field.e:
            raise ValueError("entry outside field")
        _set_entry(self.rows[r], c, v, self.field.e)

    def to_entries(self):
        e = self.field.e
        return [[_entry(row, c, e) for c in range(self.ncols)]
                for row in self.rows]

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return all(p == 0 for row in self.rows for p in row)

    def __eq__(self, other):
        return (isinstance(other, FieldMatrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __repr__(self):
        return f"FieldMatrix({self.field!r}, {self.nrows}x{self.ncols})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if (self.field != other.field or self.nrows != other.nrows
                or self.ncols != other.ncols):
            raise ValueError("shape/field mismatch in matrix sum")
        rows = [[a ^ b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)]
        return FieldMatrix(self.field, self.nrows, self.ncols, rows)

    def __matmul__(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch in matrix product")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        f = self.field
        e = f.e
        orows = other.rows
        out = []
        for planes in self.rows:
            acc = [0] * e
            support = 0
            for p in planes:
                support |= p
            while support:
                lsb = support & -support
                support ^= lsb
                j = lsb.bit_length() - 1
                v = _entry(planes, j, e)
                br = orows[j]
                if v == 1:
                    for k in range(e):
                        acc[k] ^= br[k]
                else:
                    sr = _scaled(br, v, f)
                    for k in range(e):
                        acc[k] ^= sr[k]
            out.append(acc)
        return FieldMatrix(f, self.nrows, other.ncols, out)

    def transpose(self):
        f = self.field
        e = f.e
        out = FieldMatrix(f, self.ncols, self.nrows)
        for r, planes in enumerate(self.rows):
            support = 0
            for p in planes:
                support |= p
            while support:
                lsb = support & -support
                support ^= lsb
                c = lsb.bit_length() - 1
                _set_entry(out.rows[c], r, _entry(planes, c, e), e)
        return out

    def copy(self):
        return FieldMatrix(self.field, self.nrows, self.ncols,
                           [list(r) for r in self.rows])


def kron(a: FieldMatrix, b: FieldMatrix, f: FieldDesc | None = None) -> FieldMatrix:
    """Kronecker product; pair (i, j) maps to index i * dim_b + j."""
    if f is None:
        f = a.field
    if a.field != b.field:
        raise ValueError("field mismatch in kron")
    e = f.e
    rows = []
    for pa in a.rows:
        support = 0
        for p in pa:
            support |= p
        nz = []
        s = support
        while s:
            lsb = s & -s
            s ^= lsb
            j = lsb.bit_length() - 1
            nz.append((j, _entry(pa, j, e)))
        for pb in b.rows:
            acc = [0] * e
            for j, v in nz:
                sr = _scaled(pb, v, f)
                shift = j * b.ncols
                for k in range(e):
                    acc[k] ^= sr[k] << shift
            rows.append(acc)
    return FieldMatrix(f, a.nrows * b.nrows, a.ncols * b.ncols, rows)


def _rref(rows, ncols, f):
    """Reduced row echelon form in place semantics (returns pivots, rows)."""
    e = f.e
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for ri in range(rank, len(rows)):
            if _entry(rows[ri], col, e):
                piv = ri
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        v = _entry(rows[rank], col, e)
        if v != 1:
            rows[rank] = _scaled(rows[rank], f_inv(v, f), f)
        prow = rows[rank]
        for ri in range(len(rows)):
            if ri == rank:
                continue
            w = _entry(rows[ri], col, e)
            if w:
                sr = _scaled(prow, w, f) if w != 1 else prow
                dst = rows[ri]
                for k in range(e):
                    dst[k] ^= sr[k]
        pivots.append(col)
        rank += 1
    return pivots, rows[:rank]


def rank(m: FieldMatrix, f: FieldDesc | None = None) -> int:
    if f is None:
        f = m.field
    return len(_rref(m.rows, m.ncols, f)[0])


def col_space_sum(ms, f: FieldDesc | None = None) -> FieldMatrix:
    """Reduced column-echelon basis of the sum of the column spaces."""
    if not ms:
        raise ValueError("need at least one matrix")
    if f is None:
        f = ms[0].field
    nrows = ms[0].nrows
    rows = []
    for m in ms:
        if m.nrows != nrows:
            raise ValueError("row count mismatch in column-space sum")
        rows.extend(m.transpose().rows)
    _, basis = _rref(rows, nrows, f)
    return FieldMatrix(f, len(basis), nrows, basis).transpose()


def kernel_meet(ms, f: FieldDesc | None = None) -> FieldMatrix:
    """Basis (as columns) of the intersection of the kernels."""
    if not ms:
        raise ValueError("need at least one matrix")
    if f is None:
        f = ms[0].field
    ncols = ms[0].ncols
    rows = []
    for m in ms:
        if m.ncols != ncols:
            raise ValueError("column count mismatch in kernel intersection")
        rows.extend(m.rows)
    pivots, red = _rref(rows, ncols, f)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    e = f.e
    out = FieldMatrix(f, ncols, len(free))
    for k, fc in enumerate(free):
        _set_entry(out.rows[fc], k, 1, e)
        for pi, pc in enumerate(pivots):
            v = _entry(red[pi], fc, e)
            if v:
                # char 2: x_pc = v * x_fc
                _set_entry(out.rows[pc], k, v, e)
    return out
