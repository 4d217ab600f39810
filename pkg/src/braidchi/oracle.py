"""Independent brute-force references used by the test suite.

Nothing here touches the rank-coding, Garside, or homology machinery of
the main modules.  Configurations are judged by direct sign computations
on exact anchor values; braid positivity is decided by subword reversing
on the raw letters.  The point of the duplication is anti-correlated
failure modes, so the implementations deliberately stay naive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .diagrams import DiscreteRelativeBraid
from .words import BraidWord


class OracleCapError(ValueError):
    """Instance outside the enforced brute-force caps."""


# ---------------------------------------------------------------------------
# configuration-space enumeration on the value ladder


@dataclass(frozen=True)
class OracleComponent:
    cells: tuple  # sorted rung arrays, one rung per (free strand, slice)
    euler: int
    proper: bool


def _ladders(b: DiscreteRelativeBraid):
    """Skeleton values interleaved with gap midpoints, per slice."""
    ladders = []
    for i in range(b.d):
        vals = sorted(s[i] for s in b.skeleton)
        rungs = []
        for r, v in enumerate(vals):
            rungs.append(v)
            if r + 1 < len(vals):
                rungs.append((v + vals[r + 1]) / 2)
        ladders.append(rungs)
    return ladders


def _config_curves(b, ladders, config):
    """Anchor values (length d+1) of every free strand in a configuration."""
    fcl = b.free_closure()
    curves = []
    for a, row in enumerate(config):
        vals = [ladders[i][row[i]] for i in range(b.d)]
        vals.append(ladders[0][config[fcl[a]][0]])
        curves.append(vals)
    return curves


def _skeleton_curves(b):
    return [list(s) for s in b.skeleton]


def _pred_diff(b, curves, skels, a, j):
    """free_a - skeleton_j at slice d-1 of the closure-predecessor pair."""
    fr_inv = {y: x for x, y in enumerate(b.free_closure())}
    sk_inv = {y: x for x, y in enumerate(b.skeleton_closure())}
    return curves[fr_inv[a]][b.d - 1] - skels[sk_inv[j]][b.d - 1]


def _is_interior(b, curves, skels) -> bool:
    for a, cu in enumerate(curves):
        for j, sj in enumerate(skels):
            for i in range(b.d):
                if cu[i] == sj[i]:
                    before = cu[i - 1] - sj[i - 1] if i >= 1 else _pred_diff(b, curves, skels, a, j)
                    after = cu[i + 1] - sj[i + 1]
                    if before == 0 or after == 0 or (before > 0) == (after > 0):
                        return False
    return True


def _local_crossings(b, curves, skels, a, j, i) -> int:
    """Sign changes of free_a - skeleton_j around slice i (slices i-1, i, i+1)."""
    diffs = []
    for off in (-1, 0, 1):
        i2 = i + off
        if i2 == -1:
            diffs.append(_pred_diff(b, curves, skels, a, j))
        else:
            diffs.append(curves[a][i2] - skels[j][i2])
    count = 0
    signs = [x for x in diffs if x != 0]
    for lo, hi in zip(signs, signs[1:]):
        if (lo > 0) != (hi > 0):
            count += 1
    return count


def brute_force_components(b: DiscreteRelativeBraid) -> list[OracleComponent]:
    """Exhaustive value-level enumeration of components with their Euler counts.

    Every assignment of one ladder rung per (free strand, slice) is tried;
    interior configurations are grouped by single-rung moves, closed by
    snapping rungs onto skeleton values, and exit faces are detected by
    comparing local crossing counts on both sides of a tangency.  The
    Euler count per component is the alternating cell count of (N, N^-),
    a midpoint rung counting as one odd direction.
    """
    n, d, m = b.n, b.d, b.m
    if n > 2 or d > 4 or m > 6:
        raise OracleCapError(f"oracle caps exceeded: n={n}, d={d}, m={m}")
    width = 2 * m - 1
    if width ** (n * d) > 4_000_000:
        raise OracleCapError("configuration grid too large for brute force")
    ladders = _ladders(b)
    skels = _skeleton_curves(b)

    configs = {}
    for flat in itertools.product(range(width), repeat=n * d):
        config = tuple(tuple(flat[a * d:(a + 1) * d]) for a in range(n))
        if any(len({row[i] for row in config}) != n for i in range(d)):
            continue
        curves = _config_curves(b, ladders, config)
        configs[config] = _is_interior(b, curves, skels)

    def neighbours(config):
        for a in range(n):
            for i in range(d):
                for delta in (-1, 1):
                    r = config[a][i] + delta
                    if 0 <= r < width:
                        rows = [list(x) for x in config]
                        rows[a][i] = r
                        yield tuple(tuple(x) for x in rows)

    seen: set = set()
    components = []
    for config, interior in sorted(configs.items()):
        if not interior or config in seen:
            continue
        stack, comp = [config], {config}
        seen.add(config)
        while stack:
            cur = stack.pop()
            for nxt in neighbours(cur):
                if nxt in comp or not configs.get(nxt, False):
                    continue
                comp.add(nxt)
                seen.add(nxt)
                stack.append(nxt)
        components.append(tuple(sorted(comp)))

    out = []
    for comp in components:
        closure: set = set()
        stack = list(comp)
        while stack:
            cur = stack.pop()
            if cur in closure:
                continue
            closure.add(cur)
            for a in range(n):
                for i in range(d):
                    r = cur[a][i]
                    if r % 2 == 1:
                        for r2 in (r - 1, r + 1):
                            rows = [list(x) for x in cur]
                            rows[a][i] = r2
                            cand = tuple(tuple(x) for x in rows)
                            if all(len({row[k] for row in cand}) == n for k in range(d)):
                                stack.append(cand)
        exit_faces = set()
        for config in comp:
            curves = _config_curves(b, ladders, config)
            for a in range(n):
                for i in range(d):
                    r = config[a][i]
                    if r % 2 == 0:
                        continue
                    for r2 in (r - 1, r + 1):
                        beyond_rung = 2 * r2 - r
                        if not 0 <= beyond_rung < width:
                            continue  # face on an extremal constant, never an exit
                        rows = [list(x) for x in config]
                        rows[a][i] = r2
                        face = tuple(tuple(x) for x in rows)
                        if len({row[i] for row in face}) != n:
                            continue
                        fcurves = _config_curves(b, ladders, face)
                        j = next(
                            jj for jj, sj in enumerate(skels) if sj[i] == fcurves[a][i]
                        )
                        before = (
                            curves[a][i - 1] - skels[j][i - 1]
                            if i >= 1 else _pred_diff(b, curves, skels, a, j)
                        )
                        after = curves[a][i + 1] - skels[j][i + 1]
                        if before == 0 or after == 0:
                            continue  # more than one tangency on this face
                        inside = _local_crossings(b, curves, skels, a, j, i)
                        rows[a][i] = beyond_rung
                        beyond = tuple(tuple(x) for x in rows)
                        bcurves = _config_curves(b, ladders, beyond)
                        outside = _local_crossings(b, bcurves, skels, a, j, i)
                        if outside < inside:
                            exit_faces.add(face)
        exit_closure: set = set()
        stack = list(exit_faces)
        while stack:
            cur = stack.pop()
            if cur in exit_closure:
                continue
            exit_closure.add(cur)
            for a in range(n):
                for i in range(d):
                    r = cur[a][i]
                    if r % 2 == 1:
                        for r2 in (r - 1, r + 1):
                            rows = [list(x) for x in cur]
                            rows[a][i] = r2
                            cand = tuple(tuple(x) for x in rows)
                            if all(len({row[k] for row in cand}) == n for k in range(d)):
                                stack.append(cand)
        euler = 0
        for config in closure:
            odd = sum(1 for row in config for r in row if r % 2 == 1)
            euler += (-1) ** odd
        for config in exit_closure & closure:
            odd = sum(1 for row in config for r in row if r % 2 == 1)
            euler -= (-1) ** odd
        out.append(OracleComponent(
            cells=tuple(sorted(comp)),
            euler=euler,
            proper=_oracle_proper(b, ladders, skels, closure),
        ))
    return out


def _oracle_proper(b, ladders, skels, closure) -> bool:
    """No closure configuration rides a single closed skeleton curve or the constants."""
    fcl = b.free_closure()
    lo = min(v for s in b.skeleton for v in s)
    hi = max(v for s in b.skeleton for v in s)
    cycles, seen = [], set()
    for a in range(b.n):
        if a in seen:
            continue
        cyc, x = [], a
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = fcl[x]
        cycles.append(cyc)
    for config in closure:
        curves = _config_curves(b, ladders, config)
        for cyc in cycles:
            values = []
            for a in cyc:
                values.extend(curves[a][:b.d])
            values.append(curves[cyc[0]][0])
            for j0 in range(b.m):
                skvals, j = [], j0
                for _ in cyc:
                    skvals.extend(skels[j][:b.d])
                    j = next(
                        jj for jj, s in enumerate(b.skeleton) if s[0] == skels[j][b.d]
                    )
                skvals.append(skels[j0][0] if j == j0 else None)
                if skvals[-1] is not None and values == skvals:
                    return False
            if all(v in (lo, hi) for v in values):
                return False
    return True


# ---------------------------------------------------------------------------
# Garside infimum by subword reversing


def _right_reverse(letters: list[int], cap: int = 2_000_000) -> tuple[list[int], list[int]]:
    """Rewrite a signed word into positive . negative, returning (N, D).

    Uses the braid lcm rules on adjacent factors: -i +i vanishes,
    -i +j -> +j -i for distant generators, and -i +j -> +j +i -j -i for
    neighbouring ones.  Terminates on braid input; the step cap guards
    against runaway growth on unexpected input.
    """
    word = list(letters)
    steps = 0
    pos = 0
    while True:
        spot = -1
        for k in range(max(0, pos - 1), len(word) - 1):
            if word[k] < 0 < word[k + 1]:
                spot = k
                break
        if spot < 0:
            spot = next((k for k in range(len(word) - 1) if word[k] < 0 < word[k + 1]), -1)
        if spot < 0:
            break
        steps += 1
        if steps > cap:
            raise OracleCapError("subword reversing exceeded the step cap")
        i, j = -word[spot], word[spot + 1]
        if i == j:
            word[spot:spot + 2] = []
        elif abs(i - j) >= 2:
            word[spot:spot + 2] = [j, -i]
        else:
            word[spot:spot + 2] = [j, i, -j, -i]
        pos = max(spot, 0)
    cut = next((k for k, g in enumerate(word) if g < 0), len(word))
    return word[:cut], [-g for g in word[cut:]][::-1]


def _left_divides(u: list[int], v: list[int]) -> bool:
    """Whether the positive word u left-divides the positive word v in the monoid."""
    n, dd = _right_reverse([-g for g in reversed(u)] + list(v))
    return not dd


def is_positive_element(w: BraidWord) -> bool:
    """Whether the word represents an element of the positive braid monoid."""
    n, dd = _right_reverse(list(w.letters))
    if not dd:
        return True
    return _left_divides(list(reversed(dd)), list(reversed(n)))


def _delta_word(k: int) -> list[int]:
    out = []
    for row in range(1, k):
        out.extend(range(row, 0, -1))
    return out


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Group equality through the reversing positivity test."""
    if u.strands != v.strands:
        return False
    su = sum(1 if g > 0 else -1 for g in u.letters)
    sv = sum(1 if g > 0 else -1 for g in v.letters)
    if su != sv:
        return False
    inv_u = [-g for g in reversed(u.letters)]
    return is_positive_element(BraidWord(u.strands, tuple(inv_u) + v.letters))


def brute_force_inf(w: BraidWord) -> int:
    """Maximal t with Delta^-t w positive, found by downward search.

    Positivity of each candidate is decided by subword reversing, with no
    Garside normal form anywhere in the loop.  The exponent sum bounds the
    search from above and the negative letter count from below.
    """
    if w.strands > 4 or len(w.letters) > 6:
        raise OracleCapError("brute_force_inf caps: strands <= 4 and length <= 6")
    k = w.strands
    if k == 1:
        return 0
    delta = _delta_word(k)
    e_delta = len(delta)
    e = sum(1 if g > 0 else -1 for g in w.letters)
    neg = sum(1 for g in w.letters if g < 0)
    t = e // e_delta
    floor = -neg - 1
    while t > floor:
        candidate = [-g for g in reversed(delta)] * t if t >= 0 else list(delta) * (-t)
        if is_positive_element(BraidWord(k, tuple(candidate) + w.letters)):
            return t
        t -= 1
    raise AssertionError("infimum search fell through its lower bound")
