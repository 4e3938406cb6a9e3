"""Combinatorics of binary expansions.

Implements the disjointness relation l ⊥ m, the operation l # m, binomial
parity via Lucas' theorem, and the counts Q_t(l, m) of length-t lattice paths
from the origin to (l, m) where the allowed steps are up, right, and, from
vertices with even coordinate sum, diagonal.  tau recovers l # m purely from
parity scans and serves as an independent oracle for hash_op.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def nu(n: int) -> int:
    """Index of the least set bit of n."""
    if n <= 0:
        raise ValueError("nu is only defined for positive integers")
    return (n & -n).bit_length() - 1


def perp(l: int, m: int) -> bool:
    """True iff the binary expansions of l and m are disjoint."""
    return not l & m


def hash_op(l: int, m: int) -> int:
    """The operation l # m = lambda + mu + 2^s - 1.

    s is the least index from which the expansions of l and m are disjoint;
    lambda and mu are the parts of l and m supported on bits >= s.
    """
    s = (l & m).bit_length()
    lam = (l >> s) << s
    mu = (m >> s) << s
    return lam + mu + (1 << s) - 1


def binom_parity(r: int, s: int) -> int:
    """binomial(r, s) mod 2, by Lucas' theorem: odd iff s is bitwise below r."""
    return int(s & ~r == 0)


def q_count(t: int, l: int, m: int) -> int:
    """Exact number of length-t paths from (0,0) to (l,m)."""
    if max(l, m) > t or t > l + m:
        return 0
    return comb(2 * t - l - m, t - m) * comb((l + m) // 2, l + m - t)


def q_parity(t: int, l: int, m: int) -> int:
    """q_count(t, l, m) mod 2, computed purely by bit operations."""
    if max(l, m) > t or t > l + m:
        return 0
    j = l + m - t
    return binom_parity(t + j, l + j) & binom_parity(l + j, 2 * j)


def back_diag_witness(t: int, l: int, m: int) -> tuple[int, int] | None:
    """A point (l', m') with l' <= l, m' <= m, l' + m' = t and odd count.

    Searches in descending l'.  Requires q_parity(t, l, m) = 1; existence of
    a witness is then guaranteed.
    """
    if not q_parity(t, l, m):
        raise ValueError("back_diag_witness requires q_parity(t, l, m) = 1")
    for lp in range(min(l, t), -1, -1):
        mp = t - lp
        if 0 <= mp <= m and q_parity(t, lp, mp):
            return (lp, mp)
    return None


_NO_MU = 1 << 62


@lru_cache(maxsize=None)
def _min_mu(t: int, lam: int) -> int:
    """Least mu with q_parity(t, lam, mu) = 1, or a large sentinel."""
    if lam > t:
        return _NO_MU
    for j in range(0, lam + 1):
        mu = t - lam + j
        if mu >= 0 and q_parity(t, lam, mu):
            return mu
    return _NO_MU


@lru_cache(maxsize=None)
def _min_mu_upto(t: int, lam: int) -> int:
    """Least mu with q_parity(t, lam', mu) = 1 over all lam' <= lam."""
    best = _min_mu(t, lam)
    if lam > 0:
        best = min(best, _min_mu_upto(t, lam - 1))
    return best


def tau(l: int, m: int) -> int:
    """Largest t such that some (lam, mu) with lam <= l, mu <= m has an odd
    path count q_parity(t, lam, mu); independent oracle for hash_op."""
    for t in range(l + m, 0, -1):
        if _min_mu_upto(t, min(l, t)) <= m:
            return t
    return 0
