"""Discrete relative braid diagrams over exact rationals.

A diagram stores, for every strand, its anchor values at the times
``i/d`` for ``i = 0..d`` together with the split of strands into a moving
(free) group and a fixed skeleton.  The closed braid is the piecewise
linear interpolation of the anchors on the time circle; the value at
index d of each strand must reproduce the index-0 value of exactly one
strand of the same group, which induces the closure permutations.

All anchor values are ``fractions.Fraction``; every decision made here is
a sign or order comparison, so no tolerances exist anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .words import BraidWord, permutation_of

Strand = tuple[Fraction, ...]


class DiagramError(ValueError):
    """Structurally invalid diagram data."""


class SingularDiagramError(ValueError):
    """The diagram has a tangency between strands."""

    def __init__(self, message: str, witnesses: tuple = ()):  # pragma: no cover - trivial
        super().__init__(message)
        self.witnesses = witnesses


_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise DiagramError(f"anchor value {x!r} is not an exact rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x):
        return Fraction(x)
    raise DiagramError(f"anchor value {x!r} is not an exact rational (use int or 'p/q')")


def _closure_permutation(group: Sequence[Strand], what: str) -> tuple[int, ...]:
    starts = {s[0]: j for j, s in enumerate(group)}
    if len(starts) != len(group):
        raise DiagramError(f"coincident {what} start values prevent closure matching")
    perm = []
    for s in group:
        if s[-1] not in starts:
            raise DiagramError(f"{what} strand end value {s[-1]} matches no start value")
        perm.append(starts[s[-1]])
    if len(set(perm)) != len(perm):
        raise DiagramError(f"{what} closure matching is not a bijection")
    return tuple(perm)


@dataclass(frozen=True)
class DiscreteRelativeBraid:
    """Anchor sequences of a relative braid: free strands against a skeleton."""

    d: int
    skeleton: tuple[Strand, ...]
    free: tuple[Strand, ...]
    augmented: bool = False

    def __post_init__(self) -> None:
        if self.d < 2:
            raise DiagramError("period d must be at least 2")
        if not self.free:
            raise DiagramError("at least one free strand is required")
        skeleton = tuple(tuple(_as_fraction(v) for v in s) for s in self.skeleton)
        free = tuple(tuple(_as_fraction(v) for v in s) for s in self.free)
        object.__setattr__(self, "skeleton", skeleton)
        object.__setattr__(self, "free", free)
        for s in skeleton + free:
            if len(s) != self.d + 1:
                raise DiagramError("every strand needs d+1 anchor values")
        for i in range(self.d + 1):
            col = [s[i] for s in skeleton]
            if len(set(col)) != len(col):
                raise DiagramError(f"coincident skeleton values at slice {i}")
            fcol = [s[i] for s in free]
            if len(set(fcol)) != len(fcol):
                raise DiagramError(f"coincident free strand values at slice {i}")
        if skeleton:
            _closure_permutation(skeleton, "skeleton")
        _closure_permutation(free, "free")
        if self.augmented:
            lo, hi = self.bounds()
            inner = [v for s in skeleton + free for v in s if v not in (lo, hi)]
            if any(not lo < v < hi for v in inner):
                raise DiagramError("augmented diagram must be bounded by its constant strands")
            for f in free:
                if any(not lo < v < hi for v in f):
                    raise DiagramError("free anchors must lie strictly between the constant strands")

    @property
    def m(self) -> int:
        return len(self.skeleton)

    @property
    def n(self) -> int:
        return len(self.free)

    def bounds(self) -> tuple[Fraction, Fraction]:
        values = [v for s in self.skeleton + self.free for v in s]
        return min(values), max(values)

    def skeleton_closure(self) -> tuple[int, ...]:
        return _closure_permutation(self.skeleton, "skeleton") if self.skeleton else ()

    def free_closure(self) -> tuple[int, ...]:
        return _closure_permutation(self.free, "free")

    def all_strands(self) -> tuple[Strand, ...]:
        return self.skeleton + self.free

    def to_json_dict(self) -> dict:
        def enc(v: Fraction):
            return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

        return {
            "d": self.d,
            "skeleton": [[enc(v) for v in s] for s in self.skeleton],
            "free": [[enc(v) for v in s] for s in self.free],
            "augmented": self.augmented,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def diagram_from_json_dict(data: dict) -> DiscreteRelativeBraid:
    try:
        d = data["d"]
        skeleton = data["skeleton"]
        free = data["free"]
    except (TypeError, KeyError) as exc:
        raise DiagramError(f"missing diagram field: {exc}") from None
    if not isinstance(d, int):
        raise DiagramError("field 'd' must be an integer")
    return DiscreteRelativeBraid(
        d=d,
        skeleton=tuple(tuple(_as_fraction(v) for v in s) for s in skeleton),
        free=tuple(tuple(_as_fraction(v) for v in s) for s in free),
        augmented=bool(data.get("augmented", False)),
    )


def word_to_diagram(w: BraidWord) -> DiscreteRelativeBraid:
    """Realise a positive word as a transverse piecewise linear diagram.

    Strand a starts at integer level a; the letter at step i swaps the two
    strands occupying levels |g|-1 and |g| across the segment [i, i+1].
    One trailing constant step pads the period so that d exceeds the
    crossing total (equal to the letter count), with d at least 2.
    """
    if any(g < 0 for g in w.letters):
        raise DiagramError("word_to_diagram needs an all-positive word")
    if not w.free_labels or w.free_labels == frozenset(range(w.strands)):
        raise DiagramError("free labels must be a nonempty proper subset of the strands")
    k = w.strands
    d = max(2, len(w.letters) + 1)
    level_of = list(range(k))  # strand -> current level
    tracks = [[Fraction(a)] for a in range(k)]
    for step in range(d):
        if step < len(w.letters):
            g = w.letters[step]
            at = {lv: a for a, lv in enumerate(level_of)}
            lo, hi = at[g - 1], at[g]
            level_of[lo], level_of[hi] = g, g - 1
        for a in range(k):
            tracks[a].append(Fraction(level_of[a]))
    free = tuple(tuple(tracks[a]) for a in sorted(w.free_labels))
    skeleton = tuple(tuple(tracks[a]) for a in sorted(set(range(k)) - w.free_labels))
    return DiscreteRelativeBraid(d=d, skeleton=skeleton, free=free)


def augment(b: DiscreteRelativeBraid) -> DiscreteRelativeBraid:
    """Append constant skeleton strands strictly below and above the diagram.

    The constants are placed at min-1 and max+1.  A diagram already bounded
    by two constant extremal skeleton strands is returned unchanged, which
    makes augmentation idempotent.
    """
    lo, hi = b.bounds()
    has_lo = any(set(s) == {lo} for s in b.skeleton)
    has_hi = any(set(s) == {hi} for s in b.skeleton)
    if has_lo and has_hi:
        return b if b.augmented else replace(b, augmented=True)
    length = b.d + 1
    skeleton = b.skeleton + ((lo - 1,) * length, (hi + 1,) * length)
    return DiscreteRelativeBraid(d=b.d, skeleton=skeleton, free=b.free, augmented=True)


@dataclass(frozen=True)
class CrossingReport:
    total: int
    pairwise: dict  # unordered tag pair -> crossings, tags like ('free', 0), ('skel', 2)


def _strand_values(b: DiscreteRelativeBraid, tag) -> Strand:
    grp, idx = tag
    return b.skeleton[idx] if grp == "skel" else b.free[idx]


def _pair_windows(b: DiscreteRelativeBraid):
    """Per unordered strand pair: its difference rows and the predecessor context.

    Yields ``(pair, diffs, pred_last)`` where ``diffs`` are the d+1 anchor
    differences of the pair and ``pred_last`` is the difference at slice
    d-1 of the closure-predecessor pair.  The predecessor context supplies
    the flanking sign for an anchor equality at slice 0, whose crossing is
    attributed to this pair; equalities at slice d belong to the successor
    pair and are skipped by the callers.
    """
    sk_inv = {j2: j for j, j2 in enumerate(b.skeleton_closure())}
    fr_inv = {a2: a for a, a2 in enumerate(b.free_closure())}

    def pred(tag):
        grp, idx = tag
        return (grp, sk_inv[idx] if grp == "skel" else fr_inv[idx])

    tags = [("skel", j) for j in range(b.m)] + [("free", a) for a in range(b.n)]
    for pos, x in enumerate(tags):
        for y in tags[pos + 1:]:
            vx, vy = _strand_values(b, x), _strand_values(b, y)
            diffs = tuple(vx[i] - vy[i] for i in range(b.d + 1))
            px, py = pred(x), pred(y)
            pred_last = _strand_values(b, px)[b.d - 1] - _strand_values(b, py)[b.d - 1]
            yield (x, y), diffs, pred_last


def crossing_report(b: DiscreteRelativeBraid) -> CrossingReport:
    """Count crossings as sign changes of pairwise differences over one period.

    Crossings strictly inside a segment show up as opposite nonzero anchor
    signs at the segment ends; a transverse anchor equality contributes
    the single sign change between its flanking nonzero signs and is
    attributed to the period window starting at that anchor.
    """
    validate_nonsingular(b)
    pairwise: dict = {}
    total = 0
    for pair, diffs, pred_last in _pair_windows(b):
        count = 0
        for i in range(b.d):
            lo, hi = diffs[i], diffs[i + 1]
            if lo != 0 and hi != 0 and (lo > 0) != (hi > 0):
                count += 1
        for i in range(b.d):
            if diffs[i] == 0:
                before = diffs[i - 1] if i >= 1 else pred_last
                after = diffs[i + 1]
                if (before > 0) != (after > 0):
                    count += 1
        pairwise[pair] = count
        total += count
    return CrossingReport(total=total, pairwise=pairwise)


def validate_nonsingular(b: DiscreteRelativeBraid) -> None:
    """Raise if any free strand is tangent to a skeleton strand or a free strand.

    A tangency is an anchor equality whose flanking nonzero signs agree,
    or two consecutive anchor equalities of the same pair.  Skeleton
    against skeleton equalities are already excluded by slice genericity,
    and free against free equalities by construction.
    """
    witnesses = []
    for pair, diffs, pred_last in _pair_windows(b):
        for i in range(b.d):
            if diffs[i] != 0:
                continue
            before = diffs[i - 1] if i >= 1 else pred_last
            after = diffs[i + 1]
            if before == 0 or after == 0:
                witnesses.append((pair, i, "consecutive anchor equalities"))
            elif (before > 0) == (after > 0):
                witnesses.append((pair, i, "tangency"))
    if witnesses:
        pair, i, kind = witnesses[0]
        raise SingularDiagramError(f"singular diagram: {kind} of {pair} at slice {i}", tuple(witnesses))


def connectivity_bound_ok(b: DiscreteRelativeBraid) -> bool:
    """True when d exceeds the crossing total, which guarantees a connected class."""
    return b.d > crossing_report(b).total


def refine(b: DiscreteRelativeBraid, factor: int) -> DiscreteRelativeBraid:
    """Insert factor-1 evenly spaced anchors into every segment.

    The interpolated curves are pointwise identical to the original ones,
    so the braid class is unchanged while d becomes factor * d.
    """
    if factor < 2:
        raise ValueError("refinement factor must be at least 2")
    validate_nonsingular(b)

    def refined(s: Strand) -> Strand:
        out = []
        for i in range(len(s) - 1):
            for t in range(factor):
                out.append(s[i] + (s[i + 1] - s[i]) * Fraction(t, factor))
        out.append(s[-1])
        return tuple(out)

    return DiscreteRelativeBraid(
        d=b.d * factor,
        skeleton=tuple(refined(s) for s in b.skeleton),
        free=tuple(refined(s) for s in b.free),
        augmented=b.augmented,
    )
