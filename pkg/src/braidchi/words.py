"""Artin braid words and their Garside left normal form.

A word in the braid group B_k is a sequence of nonzero signed generator
indices: the letter ``g`` with ``1 <= |g| <= k-1`` is the generator
sigma_|g| (positive crossing) or its inverse when ``g < 0``.  Letters act
left to right on strand *positions* 0..k-1, letter ``g`` swapping the
strands at positions |g|-1 and |g|.

Elements are normalised as ``Delta^inf . F_1 ... F_r`` where Delta is the
half twist and every factor F_i is a permutation braid (a positive braid
in which any two strands cross at most once, so F_i is determined by a
permutation of the positions).  Adjacent factors are kept left-weighted:
every generator that starts F_{i+1} also finishes F_i.  The leading power
``inf`` is then the maximal t with ``Delta^-t w`` positive, which is how
positivity of a word is decided at the group-element level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


class WordSyntaxError(ValueError):
    """Malformed token in a braid word."""


class GeneratorRangeError(ValueError):
    """Generator index out of range for the strand count."""


class FreeLabelError(ValueError):
    """Free strand labels are inconsistent with the word's closure."""


Perm = tuple[int, ...]


def _identity(k: int) -> Perm:
    return tuple(range(k))


def _transposition(k: int, i: int) -> Perm:
    p = list(range(k))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _longest(k: int) -> Perm:
    return tuple(k - 1 - i for i in range(k))


def _compose(a: Perm, b: Perm) -> Perm:
    """Permutation of 'apply a, then b' (left-to-right composition)."""
    return tuple(b[a[i]] for i in range(len(a)))


def _inversions(p: Perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


def _starting_set(p: Perm) -> set[int]:
    """Generators sigma_{i+1} that can occur first in the permutation braid of p."""
    return {i for i in range(len(p) - 1) if p[i] > p[i + 1]}


def _finishing_set(p: Perm) -> set[int]:
    """Generators sigma_{i+1} that can occur last in the permutation braid of p."""
    inv = [0] * len(p)
    for s, t in enumerate(p):
        inv[t] = s
    return {i for i in range(len(p) - 1) if inv[i] > inv[i + 1]}


def _append_gen(p: Perm, i: int) -> Perm:
    """Permutation of the braid P_p . sigma_{i+1} (swap values i, i+1)."""
    t = _transposition(len(p), i)
    return tuple(t[v] for v in p)


def _strip_gen_front(p: Perm, i: int) -> Perm:
    """Permutation q with P_p = sigma_{i+1} . P_q (requires i in starting set)."""
    t = _transposition(len(p), i)
    return tuple(p[t[s]] for s in range(len(p)))


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta, an involution on permutation braids."""
    w = _longest(len(p))
    return _compose(_compose(w, p), w)


def perm_braid_word(p: Perm) -> tuple[int, ...]:
    """A reduced positive word for the permutation braid of p (canonical peel)."""
    letters: list[int] = []
    cur = p
    while cur != _identity(len(p)):
        i = min(_finishing_set(cur))
        letters.append(i + 1)
        # remove the final crossing sigma_{i+1}: cur = next . sigma
        t = _transposition(len(p), i)
        cur = tuple(t[v] for v in cur)
    letters.reverse()
    return tuple(letters)


@dataclass(frozen=True)
class BraidWord:
    """A braid word with its strand count and free/skeleton strand labelling.

    ``free_labels`` marks the strand positions that belong to the moving
    part of a relative braid; the complement is the skeleton.  The label
    set must be closed under the word's closure permutation, otherwise the
    closure would match a free strand with a skeleton strand.
    """

    strands: int
    letters: tuple[int, ...] = ()
    free_labels: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "free_labels", frozenset(self.free_labels))
        for g in self.letters:
            if g == 0:
                raise WordSyntaxError("0 is not a generator index")
            if abs(g) > self.strands - 1:
                raise GeneratorRangeError(
                    f"generator {g} out of range for {self.strands} strands"
                )
        if not self.free_labels <= set(range(self.strands)):
            raise FreeLabelError("free labels outside 0..k-1")
        perm = permutation_of(self)
        if any(perm[a] not in self.free_labels for a in self.free_labels):
            raise FreeLabelError(
                "free labels are not closed under the word's closure permutation"
            )

    @property
    def skeleton_labels(self) -> frozenset[int]:
        return frozenset(range(self.strands)) - self.free_labels


def parse_word(text: str, strands: int, free_labels: Iterable[int] = ()) -> BraidWord:
    """Parse a whitespace-separated signed-integer word, e.g. ``"1 2 -1"``."""
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise WordSyntaxError(f"malformed generator token {tok!r}") from None
    return BraidWord(strands=strands, letters=tuple(letters), free_labels=frozenset(free_labels))


def permutation_of(w: BraidWord) -> Perm:
    """Closure permutation: start position -> end position, letters composed left to right."""
    pos = list(range(w.strands))  # pos[p] = strand currently at position p
    for g in w.letters:
        i = abs(g) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * w.strands
    for p, a in enumerate(pos):
        perm[a] = p
    return tuple(perm)


def exponent_sum(w: BraidWord) -> int:
    """Signed letter count; the word-level crossing number with signs."""
    return sum(1 if g > 0 else -1 for g in w.letters)


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy normal form Delta^inf . factors, factors as permutations."""

    strands: int
    inf: int
    factors: tuple[Perm, ...]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def is_positive(self) -> bool:
        return self.inf >= 0

    def to_word(self, free_labels: Iterable[int] = ()) -> BraidWord:
        """A word equal in B_k to this element (positive when inf >= 0)."""
        k = self.strands
        delta = perm_braid_word(_longest(k))
        letters: list[int] = []
        if self.inf >= 0:
            letters.extend(delta * self.inf)
        else:
            inv_delta = tuple(-g for g in reversed(delta))
            letters.extend(inv_delta * (-self.inf))
        for f in self.factors:
            letters.extend(perm_braid_word(f))
        return BraidWord(strands=k, letters=tuple(letters), free_labels=frozenset(free_labels))


def _normalise_factors(k: int, power: int, raw: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    ident = _identity(k)
    longest = _longest(k)
    factors = [f for f in raw if f != ident]
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = factors[j], factors[j + 1]
            move = _starting_set(b) - _finishing_set(a)
            while move:
                i = min(move)
                a = _append_gen(a, i)
                b = _strip_gen_front(b, i)
                move = _starting_set(b) - _finishing_set(a) if b != ident else set()
                changed = True
            factors[j], factors[j + 1] = a, b
        factors = [f for f in factors if f != ident]
    while factors and factors[0] == longest:
        power += 1
        factors.pop(0)
    return power, tuple(factors)


def left_normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy normal form; ``inf`` is maximal with Delta^-inf w positive."""
    k = w.strands
    power = 0
    factors: list[Perm] = []
    for g in w.letters:
        i = abs(g) - 1
        if g > 0:
            factors.append(_transposition(k, i))
        else:
            # sigma^-1 = Delta^-1 . (Delta sigma^-1), and pulling Delta^-1 to
            # the front twists every accumulated factor by tau.
            power -= 1
            factors = [_tau(f) for f in factors]
            factors.append(_append_gen(_longest(k), i))
    inf, fs = _normalise_factors(k, power, factors)
    return NormalForm(strands=k, inf=inf, factors=fs)


def minimal_positive_twists(w: BraidWord) -> tuple[int, BraidWord]:
    """Least number of full twists Delta^2 making the element positive.

    Returns ``(l, p)`` with ``l = ceil(max(0, -inf(w)) / 2)`` and ``p`` an
    all-positive word equal in B_k to ``w . Delta^(2l)``.  Full twists are
    pure braids, so the closure permutation and the free labelling carry
    over unchanged.
    """
    nf = left_normal_form(w)
    twists = (max(0, -nf.inf) + 1) // 2
    lifted = NormalForm(strands=w.strands, inf=nf.inf + 2 * twists, factors=nf.factors)
    return twists, lifted.to_word(free_labels=w.free_labels)


def _cycle_type(perm: Perm, labels: frozenset[int]) -> tuple[int, ...]:
    seen: set[int] = set()
    lengths = []
    for a in sorted(labels):
        if a in seen:
            continue
        n, b = 0, a
        while b not in seen:
            seen.add(b)
            b = perm[b]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))


def _cyclic_reduce(w: BraidWord) -> BraidWord:
    """Remove cyclically adjacent inverse letter pairs until none remain.

    Cancelling a pair conjugates the closed braid by nothing: the cyclic
    word is unchanged, but the cut point may move, so the free labels are
    transported by the permutation of the removed prefix.
    """
    letters = list(w.letters)
    labels = set(w.free_labels)
    changed = True
    while changed and letters:
        changed = False
        n = len(letters)
        for i in range(n):
            j = (i + 1) % n
            if letters[i] == -letters[j]:
                if j == 0:
                    # wrap pair: letters[-1] and letters[0]; dropping them
                    # conjugates by the old first letter
                    t = _transposition(w.strands, abs(letters[0]) - 1)
                    labels = {t[a] for a in labels}
                    letters = letters[1:-1]
                else:
                    letters = letters[:i] + letters[i + 2:]
                changed = True
                break
    return BraidWord(w.strands, tuple(letters), frozenset(labels))


def conjugacy_certificate(w: BraidWord) -> str:
    """Canonical token, equal for cyclic rotations of a word, sound for inequality.

    Distinct tokens prove the closed braids differ; equal tokens prove
    nothing (no conjugacy search is attempted).  The word is cyclically
    reduced first, then the token records the strand count, the exponent
    sum, the cycle types of the closure permutation restricted to free and
    to skeleton labels, and the normal form of a cyclically minimal
    rotation together with its transported free labels.
    """
    perm = permutation_of(w)
    free_cycles = _cycle_type(perm, w.free_labels)
    skel_cycles = _cycle_type(perm, w.skeleton_labels)
    reduced = _cyclic_reduce(w)
    rotations = max(1, len(reduced.letters))
    best = None
    prefix = _identity(w.strands)
    for r in range(rotations):
        rotated = reduced.letters[r:] + reduced.letters[:r]
        moved = frozenset(prefix[a] for a in reduced.free_labels)
        nf = left_normal_form(BraidWord(w.strands, rotated, moved))
        key = (nf.inf, nf.factors, tuple(sorted(moved)))
        if best is None or key < best:
            best = key
        if r < len(reduced.letters):
            i = abs(reduced.letters[r]) - 1
            prefix = _compose(prefix, _transposition(w.strands, i))
    inf, factors, freeset = best
    return (
        f"B{w.strands}|e={exponent_sum(w)}|free={free_cycles}|skel={skel_cycles}"
        f"|nf=({inf},{factors})|labels={freeset}"
    )
