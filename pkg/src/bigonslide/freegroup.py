"""Words in the free group on ``a, b`` (``A = a^-1``, ``B = b^-1``) and
primitivity tests.

``is_primitive`` runs Whitehead's length reduction; ``primitivity_oracle`` is
an independent breadth-first search over elementary Nielsen moves.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

LETTERS = "aAbB"
_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}


class Word(str):
    """A freely reduced word, stored as a plain string."""

    def __new__(cls, letters=""):
        return super().__new__(cls, _free_reduce(letters))

    def inverse(self):
        return Word("".join(_INV[c] for c in reversed(self)))


def _free_reduce(letters):
    out = []
    for c in letters:
        if c not in _INV:
            raise ValueError(f"invalid letter {c!r}")
        if out and out[-1] == _INV[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def reduce(letters) -> Word:
    """Freely reduce a letter sequence.

    >>> reduce("abBA")
    ''
    """
    return Word(letters)


def cyclic_reduce(w) -> Word:
    w = str(Word(w))
    i, j = 0, len(w) - 1
    while i < j and w[i] == _INV[w[j]]:
        i += 1
        j -= 1
    return Word(w[i:j + 1])


def cyclic_canonical(w) -> str:
    """Lexicographically least rotation of the cyclic reduction."""
    w = str(cyclic_reduce(w))
    if not w:
        return w
    return min(w[k:] + w[:k] for k in range(len(w)))


def abelianize(w) -> tuple:
    w = Word(w)
    return (w.count("a") - w.count("A"), w.count("b") - w.count("B"))


def apply_map(w, images: dict) -> Word:
    """Image of ``w`` under the endomorphism sending ``a`` and ``b`` to the
    given words (inverse letters follow)."""
    full = dict(images)
    full["A"] = Word(images["a"]).inverse()
    full["B"] = Word(images["b"]).inverse()
    return Word("".join(full[c] for c in w))


def _whitehead_moves():
    """Nontrivial Whitehead automorphisms of rank 2 (type 2); each fixes the
    multiplier's generator and multiplies the other one by it."""
    moves = []
    for m in LETTERS:
        x = "b" if m in "aA" else "a"
        mi = _INV[m]
        for img in (x + m, mi + x, mi + x + m):
            moves.append({m.lower(): m.lower(), x: img})
    return moves


_WH = _whitehead_moves()


def minimize(w) -> Word:
    """Cyclic word of minimal length in the automorphic orbit of ``w``."""
    w = cyclic_reduce(w)
    while True:
        best = w
        for phi in _WH:
            u = cyclic_reduce(apply_map(w, phi))
            if len(u) < len(best):
                best = u
        if best == w:
            return w
        w = best


def is_primitive(w) -> bool:
    """True when ``w`` belongs to a free basis of F(a, b).

    >>> is_primitive("a"), is_primitive("babab" "b")
    (True, False)
    """
    w = cyclic_reduce(w)
    if not w:
        return False
    ea, eb = abelianize(w)
    if gcd(abs(ea), abs(eb)) != 1:
        return False
    return len(minimize(w)) == 1


# -- brute-force oracle ----------------------------------------------------------

_NIELSEN = [
    {"a": "ab", "b": "b"}, {"a": "aB", "b": "b"}, {"a": "ba", "b": "b"}, {"a": "Ba", "b": "b"},
    {"a": "a", "b": "ba"}, {"a": "a", "b": "bA"}, {"a": "a", "b": "ab"}, {"a": "a", "b": "Ab"},
    {"a": "A", "b": "b"}, {"a": "a", "b": "B"}, {"a": "b", "b": "a"},
]


@lru_cache(maxsize=None)
def _letter_orbit(cap: int, depth: int | None) -> frozenset:
    """Cyclic classes of length <= ``cap`` reachable from ``a`` by Nielsen
    moves without leaving that length bound (``depth`` layers, or until
    exhausted when ``None``)."""
    start = cyclic_canonical("a")
    seen = {start}
    frontier = [start]
    layer = 0
    while frontier and (depth is None or layer < depth):
        nxt = []
        for w in frontier:
            for phi in _NIELSEN:
                u = cyclic_canonical(apply_map(w, phi))
                if len(u) <= cap and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
        layer += 1
    return frozenset(seen)


def primitivity_oracle(w, depth: int | None = None) -> bool:
    """Brute-force primitivity by orbit search.

    Nielsen moves are invertible, so ``w`` is primitive iff its cyclic class
    is joined to a single letter.  Lengths are capped at ``2 * |w|``: a
    length-reducing Whitehead move factors into two Nielsen moves whose
    intermediate word is at most twice as long, so with ``depth=None`` the
    search is complete for every input length.
    """
    c = cyclic_canonical(w)
    if not c:
        return False
    if depth is not None and depth < 1:
        raise ValueError("depth must be positive")
    return c in _letter_orbit(max(2 * len(c), 2), depth)


def reduced_words(max_len: int):
    """All nonempty freely reduced words up to ``max_len``."""
    layer = list(LETTERS)
    for _ in range(max_len):
        yield from layer
        layer = [w + c for w in layer for c in LETTERS if c != _INV[w[-1]]]
