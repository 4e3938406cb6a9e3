"""Alternating words over the letters X, Y and their inverses.

A word is a string over "XYxy": uppercase letters are direct, lowercase are
inverse, and the underlying base letter must alternate between X and Y.
Words carry the combinatorics behind string and band modules: inverses,
directed components, the uniserial constructors A_t / B_t, the admissible
band words, and a canonical representative of each band word class.
"""

from __future__ import annotations

from dataclasses import dataclass

Word = str

_BASES = {"X": "X", "x": "X", "Y": "Y", "y": "Y"}


class WordError(ValueError):
    pass


def parse(text: str) -> Word:
    """Validate a word over X/Y/x/y (uppercase direct, lowercase inverse)."""
    prev = None
    for pos, c in enumerate(text):
        base = _BASES.get(c)
        if base is None:
            raise WordError(f"invalid character {c!r} at position {pos}")
        if base == prev:
            raise WordError(f"alternation violated at position {pos}")
        prev = base
    return text


def inverse(w: Word) -> Word:
    """Reverse the word and toggle every letter's inverted flag."""
    return w.swapcase()[::-1]


def a_word(t: int) -> Word:
    """The directed word A_t (A_0 = 1, A_{t+1} = B_t Y)."""
    a, b = "", ""
    for _ in range(t):
        a, b = b + "Y", a + "X"
    return a


def b_word(t: int) -> Word:
    """The directed word B_t (B_0 = 1, B_{t+1} = A_t X)."""
    a, b = "", ""
    for _ in range(t):
        a, b = b + "Y", a + "X"
    return b


@dataclass(frozen=True)
class DirectedComponent:
    kind: str       # "A" or "B"
    length: int
    inverted: bool


def directed_components(w: Word) -> list[DirectedComponent]:
    """Factor w into maximal runs of direct or inverse letters.

    A direct run of length t equals A_t or B_t outright; an inverse run is
    classified by its inverse.  Either way the run's class is read off from
    a single letter: A_t ends with Y, B_t ends with X.
    """
    comps = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j].isupper() == w[i].isupper():
            j += 1
        run = w[i:j]
        if run[0].isupper():
            kind = "A" if run[-1] == "Y" else "B"
            comps.append(DirectedComponent(kind, len(run), False))
        else:
            # inverse(run) ends with run[0].swapcase()
            kind = "A" if run[0] == "y" else "B"
            comps.append(DirectedComponent(kind, len(run), True))
        i = j
    return comps


def eq_string(w: Word, w2: Word) -> bool:
    """Equality of words up to inversion (same string module)."""
    return w == w2 or w == inverse(w2)


def _primitive(w: Word) -> bool:
    return (w + w).find(w, 1) == len(w)


def in_w_prime(w: Word) -> bool:
    """Admissibility as a band word: even positive length, primitive, both
    direct and inverse letters present, and cyclically alternating."""
    if not w or len(w) % 2:
        return False
    if w.islower() or w.isupper():
        return False
    if _BASES[w[0]] == _BASES[w[-1]]:
        return False
    return _primitive(w)


def band_admissible(w: Word) -> bool:
    """Words on which the cyclic band action is well defined.

    Wider than in_w_prime: odd length and imprimitivity are tolerated.  The
    only genuine obstruction is a direct last letter followed cyclically by
    an inverse first letter of the same base, which would assign two images
    to the same generator on the wraparound.
    """
    if not w:
        return False
    if w.islower() or w.isupper():
        return False
    if w[-1].isupper() and w[0].islower() and _BASES[w[0]] == _BASES[w[-1]]:
        return False
    return True


@dataclass(frozen=True)
class BandShape:
    word: Word
    components: tuple[DirectedComponent, ...]
    two_component_scalar: tuple[int, int, str] | None
    rho_inverted: bool


def _rotations(w: Word) -> list[Word]:
    return [w[i:] + w[:i] for i in range(len(w))]


def band_canonical(w: Word, relaxed: bool = False) -> BandShape:
    """Canonical representative of the band class of w.

    Considers all rotations of w and of inverse(w) that start at a
    directed-component boundary with a direct first letter, preferring a
    first component of kind A, then the lexicographically least letters,
    then representatives taken from w itself rather than its inverse.
    rho_inverted records whether the chosen representative comes from the
    inverse, in which case the band scalar must be inverted.
    """
    ok = band_admissible(w) if relaxed else in_w_prime(w)
    if not ok:
        raise WordError(f"not an admissible band word: {w!r}")
    candidates = []
    for from_inverse, base_word in ((False, w), (True, inverse(w))):
        for rot in _rotations(base_word):
            if not (rot[0].isupper() and rot[-1].islower()):
                continue
            if relaxed and not band_admissible(rot):
                continue
            kind0 = directed_components(rot)[0].kind
            candidates.append((0 if kind0 == "A" else 1, rot, from_inverse))
    if not candidates:
        raise WordError(f"no admissible rotation of band word: {w!r}")
    _, word, from_inverse = min(candidates)
    comps = directed_components(word)
    scalar = None
    if len(comps) == 2:
        scalar = (comps[0].length, comps[1].length, comps[0].kind)
    return BandShape(word, tuple(comps), scalar, from_inverse)
