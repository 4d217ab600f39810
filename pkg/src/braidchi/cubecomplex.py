"""Cube-complex model of a discrete relative braid class fiber.

Anchor values only matter through their order against the skeleton, so a
free strand's position at a slice is coded by an integer: the even code
``2r`` means it sits exactly on the rank-r skeleton value of that slice,
the odd code ``2r+1`` that it sits in the open gap between ranks r and
r+1.  A cell of the configuration complex is one code per (free strand,
slice); its dimension is the number of odd entries, and codim-1 faces are
obtained by snapping one odd entry to an adjacent even one.

An even entry is transverse when the free strand sits on opposite sides
of that skeleton strand at the two neighbouring slices, and tangent
otherwise; cells whose equalities are all transverse are the interior of
the braid class fiber, tangent cells form its boundary.  Components of
the interior under single-entry moves are closed up into pairs
``(N, N^-)``: N is the face closure, and the exit set N^- collects the
closures of the codim-1 tangent faces across which the diagram loses two
crossings.  Wraparound is periodic through the closure permutations of
both strand groups.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .diagrams import DiscreteRelativeBraid, validate_nonsingular

Codes = tuple[tuple[int, ...], ...]


class GapSeparationError(ValueError):
    """Two free strands would share a gap or a value at some slice."""


class NotAugmentedError(ValueError):
    """The complex needs the bounding constant strands; augment first."""


class ExitConsistencyError(AssertionError):
    """A face received an exit verdict from one side and an entrance verdict
    from the other; this signals an improper class or an internal bug."""


class CrossingDriftError(AssertionError):
    """Interior cells of one component disagree on the crossing number."""


class ComponentBudgetError(RuntimeError):
    """A component enumeration exceeded the requested cell budget."""


@lru_cache(maxsize=None)
def _inv_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(inv)


class Classification(Enum):
    INTERIOR = "interior"
    TANGENT = "tangent"
    OUT = "out"


@dataclass(frozen=True)
class RankedSkeleton:
    """Per-slice value ranks of the skeleton plus its closure permutation.

    ``values[i]`` is the strictly increasing tuple of skeleton values at
    slice i (i = 0..d-1), ``rank_of[i][j]`` the rank of skeleton strand j
    there, and ``closure[j]`` the strand whose index-0 value strand j
    reproduces at index d.
    """

    d: int
    m: int
    values: tuple[tuple[Fraction, ...], ...]
    rank_of: tuple[tuple[int, ...], ...]
    closure: tuple[int, ...]

    def strand_at(self, i: int, rank: int) -> int:
        return self.rank_of[i].index(rank)

    def closure_inverse(self) -> tuple[int, ...]:
        return _inv_perm(self.closure)


class CodeCell:
    """Codes of every free strand at every slice, an abstract cube cell."""

    __slots__ = ("codes", "dim", "_hash")

    def __init__(self, codes: Codes):
        if not isinstance(codes, tuple) or (codes and not isinstance(codes[0], tuple)):
            codes = tuple(tuple(row) for row in codes)
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "dim", sum(1 for row in codes for c in row if c & 1))
        object.__setattr__(self, "_hash", hash(codes))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("CodeCell is immutable")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, CodeCell) and self.codes == other.codes

    def __repr__(self) -> str:
        return f"CodeCell({self.codes!r})"

    @property
    def n(self) -> int:
        return len(self.codes)

    @property
    def d(self) -> int:
        return len(self.codes[0])

    def replaced(self, a: int, i: int, code: int) -> "CodeCell":
        row = self.codes[a]
        new_row = row[:i] + (code,) + row[i + 1:]
        return CodeCell(self.codes[:a] + (new_row,) + self.codes[a + 1:])


def _check_cell(cell: CodeCell, sk: RankedSkeleton) -> None:
    top = 2 * sk.m - 2
    for row in cell.codes:
        if len(row) != sk.d:
            raise ValueError("cell row length must equal the period d")
        for c in row:
            if not 0 <= c <= top:
                raise ValueError(f"code {c} out of range 0..{top}")
    if len(cell.codes) > 1:
        for i in range(sk.d):
            col = [row[i] for row in cell.codes]
            if len(set(col)) != len(col):
                raise GapSeparationError(f"two free strands share a position at slice {i}")


@dataclass(frozen=True)
class ComplexPair:
    """One component's closure N with exit marking and face incidence."""

    component: int
    sk: RankedSkeleton
    free_closure: tuple[int, ...]
    interior: tuple[CodeCell, ...]
    cells: tuple[CodeCell, ...] = ()
    faces: dict = None  # cell -> tuple of codim-1 faces inside N
    exit_cells: frozenset = frozenset()
    crossing_number: int = -1

    def top_dimension(self) -> int:
        return max(c.dim for c in self.cells) if self.cells else max(c.dim for c in self.interior)


def normalize(b: DiscreteRelativeBraid) -> tuple[RankedSkeleton, CodeCell]:
    """Rank-code an augmented non-singular diagram.

    Every free anchor must sit strictly between the extremal constant
    strands, either inside a gap (odd code) or exactly on a skeleton value
    (even code, transversality checked separately by ``is_singular``).
    """
    if not b.augmented:
        raise NotAugmentedError("augment the diagram before building the complex")
    validate_nonsingular(b)
    values = []
    rank_of = []
    for i in range(b.d):
        col = sorted((s[i], j) for j, s in enumerate(b.skeleton))
        values.append(tuple(v for v, _ in col))
        ranks = [0] * b.m
        for r, (_, j) in enumerate(col):
            ranks[j] = r
        rank_of.append(tuple(ranks))
    sk = RankedSkeleton(
        d=b.d,
        m=b.m,
        values=tuple(values),
        rank_of=tuple(rank_of),
        closure=b.skeleton_closure(),
    )
    rows = []
    for f in b.free:
        row = []
        for i in range(b.d):
            vs = values[i]
            if not vs[0] < f[i] < vs[-1]:
                raise ValueError(f"free anchor {f[i]} outside the constant strands at slice {i}")
            lo = max(r for r in range(b.m) if vs[r] <= f[i])
            row.append(2 * lo if vs[lo] == f[i] else 2 * lo + 1)
        rows.append(tuple(row))
    cell = CodeCell(tuple(rows))
    _check_cell(cell, sk)
    return sk, cell


def _flank_sign(cell: CodeCell, sk: RankedSkeleton, free_cl: tuple[int, ...],
                a: int, i: int, j: int, step: int) -> int:
    """Sign of (free strand a) - (skeleton strand j) at slice i+step, step in {-1, +1}.

    Wraps through both closure permutations: past slice d-1 the free strand
    continues as its closure image and the skeleton strand as its own, and
    symmetrically through slice 0 via the inverses.
    """
    d = sk.d
    i2 = i + step
    if i2 == d:
        code = cell.codes[free_cl[a]][0]
        rank = sk.rank_of[0][sk.closure[j]]
    elif i2 == -1:
        code = cell.codes[_inv_perm(free_cl)[a]][d - 1]
        rank = sk.rank_of[d - 1][sk.closure_inverse()[j]]
    else:
        code = cell.codes[a][i2]
        rank = sk.rank_of[i2][j]
    return (code > 2 * rank) - (code < 2 * rank)


def is_singular(cell: CodeCell, sk: RankedSkeleton,
                free_cl: tuple[int, ...]) -> Classification:
    """Classify a cell: interior when every even entry is strictly transverse."""
    _check_cell(cell, sk)
    for a, row in enumerate(cell.codes):
        for i, c in enumerate(row):
            if c % 2 == 0:
                j = sk.strand_at(i, c // 2)
                before = _flank_sign(cell, sk, free_cl, a, i, j, -1)
                after = _flank_sign(cell, sk, free_cl, a, i, j, +1)
                if before * after >= 0:
                    return Classification.TANGENT
    return Classification.INTERIOR


def _neighbours(cell: CodeCell, sk: RankedSkeleton):
    """Single-entry odd<->even moves, gap separation respected."""
    top = 2 * sk.m - 2
    for a, row in enumerate(cell.codes):
        for i, c in enumerate(row):
            occupied = {r2[i] for a2, r2 in enumerate(cell.codes) if a2 != a}
            for c2 in (c - 1, c + 1):
                if 0 <= c2 <= top and c2 not in occupied:
                    yield cell.replaced(a, i, c2)


def enumerate_component(start: CodeCell, sk: RankedSkeleton,
                        free_cl: tuple[int, ...],
                        max_cells: int | None = None) -> tuple[CodeCell, ...]:
    """Breadth-first closure of an interior cell under interior adjacency.

    ``max_cells`` aborts with ``ComponentBudgetError`` on components larger
    than the caller cares to process.
    """
    if is_singular(start, sk, free_cl) is not Classification.INTERIOR:
        raise ValueError("enumeration must start from an interior (non-singular) cell")
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbours(cur, sk):
            if nxt in seen:
                continue
            if is_singular(nxt, sk, free_cl) is Classification.INTERIOR:
                seen.add(nxt)
                if max_cells is not None and len(seen) > max_cells:
                    raise ComponentBudgetError(f"component exceeds {max_cells} cells")
                queue.append(nxt)
    return tuple(sorted(seen, key=lambda c: c.codes))


def _cell_faces(cell: CodeCell, sk: RankedSkeleton):
    """Codim-1 faces: snap one odd entry to an adjacent even code.

    A snap landing on another free strand's position would be a free-free
    collision cell; those are outside the product model and are omitted.
    Collisions persist under further snapping, so the omitted set is
    face-closed and boundaries still square to zero without them.
    """
    faces = []
    single = cell.n == 1
    for a, row in enumerate(cell.codes):
        for i, c in enumerate(row):
            if c % 2 == 1:
                for c2 in (c - 1, c + 1):
                    if not single and any(
                        r2[i] == c2 for a2, r2 in enumerate(cell.codes) if a2 != a
                    ):
                        continue
                    faces.append(cell.replaced(a, i, c2))
    return faces


def _count_signs(d: int, diffs, pred_last) -> int:
    c = 0
    for i in range(d):
        lo, hi = diffs[i], diffs[i + 1]
        if lo != 0 and hi != 0 and (lo > 0) != (hi > 0):
            c += 1
    for i in range(d):
        if diffs[i] == 0:
            before = diffs[i - 1] if i >= 1 else pred_last
            after = diffs[i + 1]
            c += 1 if (before > 0) != (after > 0) else 0
    return c


@lru_cache(maxsize=None)
def _skeleton_crossings(sk: RankedSkeleton) -> int:
    total = 0
    for j in range(sk.m):
        for j2 in range(j + 1, sk.m):
            diffs = [
                (sk.rank_of[i][j] > sk.rank_of[i][j2]) - (sk.rank_of[i][j] < sk.rank_of[i][j2])
                for i in range(sk.d)
            ]
            diffs.append(
                (sk.rank_of[0][sk.closure[j]] > sk.rank_of[0][sk.closure[j2]])
                - (sk.rank_of[0][sk.closure[j]] < sk.rank_of[0][sk.closure[j2]])
            )
            total += _count_signs(sk.d, diffs, 0)
    return total


def crossing_number_of(cell: CodeCell, sk: RankedSkeleton,
                       free_cl: tuple[int, ...]) -> int:
    """Total crossing count of any diagram realising the cell.

    Counted per fundamental period from code/rank comparisons: transverse
    zeros contribute the sign change between their flanking slices, and
    the skeleton's own crossings are included.
    """
    d, m, n = sk.d, sk.m, cell.n
    fr_inv = _inv_perm(free_cl)
    sk_inv = sk.closure_inverse()
    total = _skeleton_crossings(sk)
    for a in range(n):
        row = cell.codes[a]
        wrap = cell.codes[free_cl[a]][0]
        pred_row = cell.codes[fr_inv[a]]
        for j in range(m):
            diffs = [
                (row[i] > 2 * sk.rank_of[i][j]) - (row[i] < 2 * sk.rank_of[i][j])
                for i in range(d)
            ]
            r_wrap = 2 * sk.rank_of[0][sk.closure[j]]
            diffs.append((wrap > r_wrap) - (wrap < r_wrap))
            r_pred = 2 * sk.rank_of[d - 1][sk_inv[j]]
            pred = (pred_row[d - 1] > r_pred) - (pred_row[d - 1] < r_pred)
            total += _count_signs(d, diffs, pred)
        for b in range(a + 1, n):
            diffs = [
                (row[i] > cell.codes[b][i]) - (row[i] < cell.codes[b][i])
                for i in range(d)
            ]
            bw = cell.codes[free_cl[b]][0]
            diffs.append((wrap > bw) - (wrap < bw))
            bp = cell.codes[fr_inv[b]][d - 1]
            pred = (pred_row[d - 1] > bp) - (pred_row[d - 1] < bp)
            total += _count_signs(d, diffs, pred)
    return total


def close(component: tuple[CodeCell, ...], sk: RankedSkeleton,
          free_cl: tuple[int, ...], component_id: int = 0,
          max_cells: int | None = None) -> ComplexPair:
    """Face closure N of a component, with incidence and the crossing certificate."""
    crossings = {crossing_number_of(c, sk, free_cl) for c in component}
    if len(crossings) != 1:
        raise CrossingDriftError(f"crossing numbers {sorted(crossings)} inside one component")
    cells = set(component)
    queue = deque(component)
    faces: dict[CodeCell, tuple[CodeCell, ...]] = {}
    while queue:
        cur = queue.popleft()
        fs = tuple(_cell_faces(cur, sk))
        faces[cur] = fs
        for f in fs:
            if f not in cells:
                cells.add(f)
                if max_cells is not None and len(cells) > max_cells:
                    raise ComponentBudgetError(f"closure exceeds {max_cells} cells")
                queue.append(f)
    return ComplexPair(
        component=component_id,
        sk=sk,
        free_closure=free_cl,
        interior=tuple(sorted(component, key=lambda c: c.codes)),
        cells=tuple(sorted(cells, key=lambda c: c.codes)),
        faces=faces,
        crossing_number=crossings.pop(),
    )


def exit_set(pair: ComplexPair) -> ComplexPair:
    """Mark N^-: the face closure of the codim-1 faces losing two crossings.

    For a codim-1 tangent face with a single tangency entry, the flanking
    signs of the free strand against the touched skeleton strand agree;
    the interior cell loses its two local crossings with that strand when
    the entry moves across, exactly when the interior side's sign opposes
    the flanks.  A face adjacent to two interior cells must get the same
    verdict from both, otherwise the class is not suitable for the index.
    """
    sk, free_cl = pair.sk, pair.free_closure
    verdicts: dict[CodeCell, bool] = {}
    for cell in pair.interior:
        for a, row in enumerate(cell.codes):
            for i, c in enumerate(row):
                if c % 2 == 0:
                    continue
                for c2 in (c - 1, c + 1):
                    if cell.n > 1 and any(
                        r2[i] == c2 for a2, r2 in enumerate(cell.codes) if a2 != a
                    ):
                        continue  # collision face, not part of the model
                    # the interior cell's own equalities are transverse, so a
                    # codim-1 face has exactly one tangency entry iff the new
                    # equality is tangent with nonzero flanks
                    j = sk.strand_at(i, c2 // 2)
                    before = _flank_sign(cell, sk, free_cl, a, i, j, -1)
                    after = _flank_sign(cell, sk, free_cl, a, i, j, +1)
                    if before * after < 0 or before == 0 or after == 0:
                        continue
                    face = cell.replaced(a, i, c2)
                    interior_side = 1 if c > c2 else -1
                    is_exit = interior_side * after < 0
                    if face in verdicts and verdicts[face] != is_exit:
                        raise ExitConsistencyError(
                            f"face {face.codes} is an exit from one side only"
                        )
                    verdicts[face] = is_exit
    exit_faces = [f for f, v in verdicts.items() if v]
    marked: set[CodeCell] = set()
    queue = deque(exit_faces)
    while queue:
        cur = queue.popleft()
        if cur in marked:
            continue
        marked.add(cur)
        queue.extend(_cell_faces(cur, sk))
    return replace(pair, exit_cells=frozenset(marked))


def _tangency_entries(cell: CodeCell, sk: RankedSkeleton,
                      free_cl: tuple[int, ...]) -> list[tuple[int, int]]:
    out = []
    for a, row in enumerate(cell.codes):
        for i, c in enumerate(row):
            if c % 2 == 0:
                j = sk.strand_at(i, c // 2)
                before = _flank_sign(cell, sk, free_cl, a, i, j, -1)
                after = _flank_sign(cell, sk, free_cl, a, i, j, +1)
                if before * after >= 0:
                    out.append((a, i))
    return out


def _free_cycles(free_cl: tuple[int, ...]) -> list[list[int]]:
    cycles, seen = [], set()
    for a in range(len(free_cl)):
        if a in seen:
            continue
        cyc, x = [], a
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = free_cl[x]
        cycles.append(cyc)
    return cycles


@dataclass(frozen=True)
class PropernessReport:
    proper: bool
    witness: CodeCell | None = None
    reason: str = ""


def properness_check(pair: ComplexPair) -> PropernessReport:
    """Fail when N contains a complete collapse of a free component.

    Two witness shapes: the free component's codes track one closed
    skeleton trajectory (even codes on the same strand segment by
    segment, consistent through both closures), or the free strand rides
    the extremal constant strands at every slice.  Collapse targets are
    searched through the even codes reachable from each interior cell,
    since every cell of N is a face of an interior cell.
    """
    sk, free_cl = pair.sk, pair.free_closure
    d = sk.d

    def reach(code: int) -> set[int]:
        return {code} if code % 2 == 0 else {code - 1, code + 1}

    def separated(cell: CodeCell) -> bool:
        if cell.n == 1:
            return True
        return all(
            len({row[i] for row in cell.codes}) == cell.n for i in range(d)
        )

    bottom, top = 0, 2 * sk.m - 2
    for cycle in _free_cycles(free_cl):
        p = len(cycle)
        # collapse onto one closed skeleton trajectory; the trajectory must
        # consist of p distinct strand lines, otherwise the strands of the
        # free component would have to stack onto the same curve
        for j0 in range(sk.m):
            lines, j = [], j0
            for _ in range(p):
                lines.append(j)
                j = sk.closure[j]
            if j != j0 or len(set(lines)) != p:
                continue
            traj = [tuple(2 * sk.rank_of[i][jt] for i in range(d)) for jt in lines]
            for cell in pair.interior:
                if not all(
                    traj[t][i] in reach(cell.codes[a][i])
                    for t, a in enumerate(cycle)
                    for i in range(d)
                ):
                    continue
                witness = cell
                for t, a in enumerate(cycle):
                    for i in range(d):
                        witness = witness.replaced(a, i, traj[t][i])
                if separated(witness):
                    return PropernessReport(
                        proper=False, witness=witness,
                        reason=f"free component {cycle} collapses onto skeleton strand {j0}",
                    )
        # riding the extremal constant strands at every slice; at most the
        # two constants are available, so components of three or more
        # strands cannot ride them
        if p > 2:
            continue
        for cell in pair.interior:
            options = [
                [[c for c in (bottom, top) if c in reach(cell.codes[a][i])] for a in cycle]
                for i in range(d)
            ]
            if any(not opt for per_slice in options for opt in per_slice):
                continue
            assignment = []
            feasible = True
            for per_slice in options:
                if p == 1:
                    assignment.append((per_slice[0][0],))
                else:
                    pick = next(
                        ((x, y) for x in per_slice[0] for y in per_slice[1] if x != y),
                        None,
                    )
                    if pick is None:
                        feasible = False
                        break
                    assignment.append(pick)
            if not feasible:
                continue
            witness = cell
            for i in range(d):
                for t, a in enumerate(cycle):
                    witness = witness.replaced(a, i, assignment[i][t])
            if separated(witness):
                return PropernessReport(
                    proper=False, witness=witness,
                    reason=f"free component {cycle} meets the boundary constants at every slice",
                )
    return PropernessReport(proper=True)


_GAP_WEIGHTS = (
    Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(1, 7),
    Fraction(3, 7), Fraction(2, 11), Fraction(5, 11), Fraction(3, 13),
    Fraction(7, 13), Fraction(4, 17), Fraction(9, 17), Fraction(5, 19),
)


def induced_word(cell: CodeCell, sk: RankedSkeleton,
                 free_cl: tuple[int, ...]):
    """Braid word of a representative diagram of an all-odd cell.

    Free strands are placed at a generic point of their gap; if that point
    runs through a skeleton crossing (a triple point), other gap fractions
    are tried.  Segments are scanned for exact crossing times and
    simultaneous crossings, always at disjoint position pairs, are emitted
    bottom first.  Used for conjugacy certificates of components.
    """
    if any(c % 2 == 0 for row in cell.codes for c in row):
        raise ValueError("induced words are extracted from top (all-odd) cells")
    last = None
    for weight in _GAP_WEIGHTS:
        try:
            return _induced_word_at(cell, sk, free_cl, weight)
        except _TriplePoint as exc:
            last = exc
    raise ValueError(f"no generic representative found: {last}")


class _TriplePoint(Exception):
    pass


def _induced_word_at(cell: CodeCell, sk: RankedSkeleton,
                     free_cl: tuple[int, ...], weight: Fraction):
    from .words import BraidWord

    d, m, n = sk.d, sk.m, cell.n
    rows = []
    for j in range(m):
        vals = [sk.values[i][sk.rank_of[i][j]] for i in range(d)]
        vals.append(sk.values[0][sk.rank_of[0][sk.closure[j]]])
        rows.append(vals)

    def spot(i: int, code: int) -> Fraction:
        r = code // 2
        return sk.values[i][r] + (sk.values[i][r + 1] - sk.values[i][r]) * weight

    for a in range(n):
        vals = [spot(i, cell.codes[a][i]) for i in range(d)]
        vals.append(spot(0, cell.codes[free_cl[a]][0]))
        rows.append(vals)
    order0 = sorted(range(m + n), key=lambda s: rows[s][0])
    position = {s: p for p, s in enumerate(order0)}
    events = []
    for i in range(d):
        for x in range(m + n):
            for y in range(x + 1, m + n):
                lo = rows[x][i] - rows[y][i]
                hi = rows[x][i + 1] - rows[y][i + 1]
                if lo != 0 and hi != 0 and (lo > 0) != (hi > 0):
                    t = Fraction(lo, lo - hi)
                    value = rows[x][i] + (rows[x][i + 1] - rows[x][i]) * t
                    others = [
                        rows[s][i] + (rows[s][i + 1] - rows[s][i]) * t
                        for s in range(m + n) if s not in (x, y)
                    ]
                    if value in others:
                        raise _TriplePoint(f"triple point in segment {i}")
                    events.append((i + t, sum(1 for v in others if v < value)))
    events.sort()
    for (t1, l1), (t2, l2) in zip(events, events[1:]):
        if t1 == t2 and abs(l1 - l2) <= 1:
            raise _TriplePoint("coincident crossings at adjacent levels")
    letters = tuple(level + 1 for _, level in events)
    free_positions = frozenset(position[m + a] for a in range(n))
    return BraidWord(strands=m + n, letters=letters, free_labels=free_positions)


def component_certificate(pair: ComplexPair) -> str:
    """Conjugacy certificate of the component, from a top-cell representative."""
    from .words import conjugacy_certificate

    top = max(pair.interior, key=lambda c: (c.dim, c.codes))
    return conjugacy_certificate(induced_word(top, pair.sk, pair.free_closure))


def _top_cells(sk: RankedSkeleton, n: int):
    """All gap-separated all-odd cells over the code grid."""
    import itertools

    gaps = [2 * g + 1 for g in range(sk.m - 1)]
    columns = list(itertools.permutations(gaps, n))
    for combo in itertools.product(columns, repeat=sk.d):
        yield CodeCell(tuple(tuple(combo[i][a] for i in range(sk.d)) for a in range(n)))


def enumerate_all(sk: RankedSkeleton, n: int,
                  free_cl: tuple[int, ...] | None = None) -> list[ComplexPair]:
    """All interior cells over the code grid, partitioned into components.

    Components are found by sweeping every top-dimensional cell; with one
    or two free strands every interior cell is reachable from a top cell
    through interior moves, so the sweep is exhaustive.
    """
    if n > sk.m - 1:
        raise GapSeparationError(
            f"{n} free strands cannot be separated by {sk.m - 1} gaps"
        )
    if free_cl is None:
        free_cl = tuple(range(n))
    seen: set[CodeCell] = set()
    pairs = []
    for cell in _top_cells(sk, n):
        if cell in seen:
            continue
        component = enumerate_component(cell, sk, free_cl)
        seen.update(component)
        pairs.append(component)
    pairs.sort(key=lambda comp: comp[0].codes)
    out = []
    for idx, comp in enumerate(pairs):
        out.append(exit_set(close(comp, sk, free_cl, component_id=idx)))
    return out
