"""Relative cellular homology of (N, N^-) over GF(2).

The relative chain complex has one generator per cell of N outside N^-;
the boundary of a cube cell is the mod-2 sum of its codim-1 faces, with
faces landing in N^- dropped.  Columns of the boundary matrices are kept
as Python integers used as bit vectors, and ranks come from plain exact
elimination, so every number here is exact.

Two independent counts of the Euler characteristic are kept as a
certificate: the alternating sum of GF(2) Betti numbers must equal the
alternating relative cell count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubecomplex import CodeCell, ComplexPair


class CertificateError(AssertionError):
    """An internal consistency certificate failed."""


@dataclass(frozen=True)
class ChainComplexGF2:
    """Relative basis per dimension and boundary columns as bit vectors."""

    basis: tuple[tuple[CodeCell, ...], ...]
    boundary: tuple[tuple[int, ...], ...]  # boundary[k][c] maps dim k -> k-1

    @property
    def top(self) -> int:
        return len(self.basis) - 1


def build_chain_complex(pair: ComplexPair) -> ChainComplexGF2:
    if pair.faces is None:
        raise ValueError("pair needs its closure filled before homology")
    rel = [c for c in pair.cells if c not in pair.exit_cells]
    top = max((c.dim for c in rel), default=0)
    basis = [tuple(sorted((c for c in rel if c.dim == k), key=lambda c: c.codes))
             for k in range(top + 1)]
    index = [{c: i for i, c in enumerate(cells)} for cells in basis]
    boundary = []
    for k in range(top + 1):
        cols = []
        lower = index[k - 1] if k >= 1 else {}
        for cell in basis[k]:
            col = 0
            for f in pair.faces.get(cell, ()):
                if f in lower:
                    col ^= 1 << lower[f]
            cols.append(col)
        boundary.append(tuple(cols))
    complex_ = ChainComplexGF2(basis=tuple(basis), boundary=tuple(boundary))
    _assert_d_squared_zero(complex_)
    return complex_


def _assert_d_squared_zero(c: ChainComplexGF2) -> None:
    for k in range(1, c.top + 1):
        lower = c.boundary[k - 1]
        for col in c.boundary[k]:
            acc = 0
            bits = col
            while bits:
                low = bits & -bits
                acc ^= lower[low.bit_length() - 1]
                bits ^= low
            if acc:
                raise CertificateError(f"boundary squared is nonzero in dimension {k}")


def _rank_gf2(columns: tuple[int, ...]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            p = col.bit_length() - 1
            if p in pivots:
                col ^= pivots[p]
            else:
                pivots[p] = col
                rank += 1
                break
    return rank


def betti_numbers(c: ChainComplexGF2) -> tuple[int, ...]:
    """GF(2) dimensions per degree, 0 through the top cell dimension."""
    ranks = [_rank_gf2(c.boundary[k]) for k in range(c.top + 1)]
    out = []
    for k in range(c.top + 1):
        kernel = len(c.basis[k]) - ranks[k]
        image_above = ranks[k + 1] if k + 1 <= c.top else 0
        out.append(kernel - image_above)
    return tuple(out)


@dataclass(frozen=True)
class ComponentHomology:
    component: int
    betti: tuple[int, ...]
    euler: int
    cell_euler: int
    crossing_number: int
    cell_count: int
    exit_count: int


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers (trailing zeros trimmed), Euler characteristic, certificates."""

    betti_gf2: tuple[int, ...]
    euler: int
    cell_euler: int
    components: tuple[ComponentHomology, ...]

    def to_json_dict(self) -> dict:
        return {
            "betti_gf2": list(self.betti_gf2),
            "euler": self.euler,
            "cell_euler": self.cell_euler,
            "per_component": [
                {"id": c.component, "betti_gf2": list(_trim(c.betti))}
                for c in self.components
            ],
        }


def _trim(betti: tuple[int, ...]) -> tuple[int, ...]:
    out = list(betti)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def component_homology(pair: ComplexPair) -> ComponentHomology:
    complex_ = build_chain_complex(pair)
    betti = betti_numbers(complex_)
    euler = sum((-1) ** k * b for k, b in enumerate(betti))
    cell_euler = sum((-1) ** c.dim for c in pair.cells) - sum(
        (-1) ** c.dim for c in pair.exit_cells
    )
    if euler != cell_euler:
        raise CertificateError(
            f"euler {euler} disagrees with the alternating cell count {cell_euler}"
        )
    return ComponentHomology(
        component=pair.component,
        betti=betti,
        euler=euler,
        cell_euler=cell_euler,
        crossing_number=pair.crossing_number,
        cell_count=len(pair.cells),
        exit_count=len(pair.exit_cells),
    )


def euler_characteristic(pairs) -> HomologyResult:
    """Homology of one or more pairs, summed degreewise, with certificates."""
    comps = tuple(component_homology(p) for p in pairs)
    width = max((len(c.betti) for c in comps), default=0)
    total = [0] * width
    for c in comps:
        for k, b in enumerate(c.betti):
            total[k] += b
    euler = sum(c.euler for c in comps)
    cell_euler = sum(c.cell_euler for c in comps)
    if euler != cell_euler:
        raise CertificateError("aggregate euler certificate mismatch")
    return HomologyResult(
        betti_gf2=_trim(tuple(total)),
        euler=euler,
        cell_euler=cell_euler,
        components=comps,
    )
