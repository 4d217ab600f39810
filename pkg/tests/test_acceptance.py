"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Every tolerance here is exact; there are no floats anywhere in
the library.
"""

import itertools
import random
import time

from braidchi.cubecomplex import (
    Classification,
    ComponentBudgetError,
    GapSeparationError,
    close,
    crossing_number_of,
    enumerate_all,
    enumerate_component,
    exit_set,
    is_singular,
    normalize,
    properness_check,
)
from braidchi.diagrams import (
    DiagramError,
    SingularDiagramError,
    augment,
    crossing_report,
    refine,
    validate_nonsingular,
)
from braidchi.fixtures import family_diagram, rectangle_diagram, stacked_diagram
from braidchi.homology import build_chain_complex, component_homology, euler_characteristic
from braidchi.oracle import OracleCapError, brute_force_components, brute_force_inf
from braidchi.words import BraidWord, left_normal_form, minimal_positive_twists, permutation_of
from braidchi.oracle import words_equal
from conftest import random_one_strand, random_two_strand


def run_pair(diagram, component_budget=None, closure_budget=None):
    b = augment(diagram)
    sk, cell = normalize(b)
    fcl = b.free_closure()
    if is_singular(cell, sk, fcl) is not Classification.INTERIOR:
        raise SingularDiagramError("tangent representative")
    component = enumerate_component(cell, sk, fcl, max_cells=component_budget)
    pair = exit_set(close(component, sk, fcl, max_cells=closure_budget))
    return b, sk, fcl, pair


def test_criterion_1_rectangle_class():
    """Single rectangle, exit on the two extremal faces of the second anchor."""
    start = time.time()
    b, sk, fcl, pair = run_pair(rectangle_diagram())
    # fixture validity gate: one 2-cell, a 9-cell closure, exit set exactly
    # the two opposite edges in the second coordinate plus their corners
    assert len(pair.interior) == 1 and pair.interior[0].codes == ((5, 5),)
    assert len(pair.cells) == 9
    exit_edges = {c.codes for c in pair.exit_cells if c.dim == 1}
    assert exit_edges == {((5, 4),), ((5, 6),)}
    assert len(pair.exit_cells) == 6
    assert properness_check(pair).proper
    result = euler_characteristic([pair])
    assert result.betti_gf2 == (0, 1)
    assert result.euler == -1
    elapsed = time.time() - start
    assert elapsed < 1.0
    print(f"\nACCEPTANCE 1 rectangle class: betti=(0,1), euler=-1 in {elapsed:.3f}s: PASS")


def test_criterion_2_concatenated_family():
    """3^r - 2 proper classes per concatenation depth, homology in degree mu."""
    start = time.time()
    for copies in (1, 2, 3, 4):
        proper = 0
        interiors = set()
        for combo in itertools.product("bmt", repeat=copies):
            choices = "".join(combo)
            b, sk, fcl, pair = run_pair(family_diagram(copies, choices))
            report = properness_check(pair)
            mu = choices.count("m")
            if not report.proper:
                assert choices in ("b" * copies, "t" * copies)
                continue
            proper += 1
            interiors.add(pair.interior)
            result = euler_characteristic([pair])
            assert result.euler == (-1) ** mu
            assert result.betti_gf2 == tuple([0] * mu + [1])
        assert proper == 3 ** copies - 2
        assert len(interiors) == proper  # all distinct components
    elapsed = time.time() - start
    assert elapsed < 30.0
    print(f"\nACCEPTANCE 2 family classes r=1..4: 3^r-2 proper, chi=(-1)^mu in {elapsed:.1f}s: PASS")


def test_criterion_3_three_strand_six_cube():
    start = time.time()
    b, sk, fcl, pair = run_pair(stacked_diagram())
    assert len(pair.interior) == 1
    assert len(pair.cells) == 3 ** 6
    assert pair.top_dimension() == 6
    assert properness_check(pair).proper
    result = euler_characteristic([pair])
    assert result.euler == 1
    assert result.betti_gf2 == (0, 0, 1)
    elapsed = time.time() - start
    assert elapsed < 10.0
    print(f"\nACCEPTANCE 3 three-strand 6-cube: euler=+1 in {elapsed:.2f}s: PASS")


def test_criterion_4_invariance_suite():
    """Refinement and restart invariance over at least 100 random proper classes.

    Base periods are 3 or 4: with only two anchor slices both flanking
    slices of an equality coincide, so period-2 discretizations of rich
    classes are stuck single cells and are not admissible discretizations
    of their own curves (the invariant is only claimed across admissible
    discretizations).
    """
    rng = random.Random(20260401)
    checked = refined_checked = 0
    while checked < 100:
        try:
            diagram = random_one_strand(
                rng, inner_gaps_only=rng.random() < 0.7, d_min=3
            )
            refined = refine(diagram, 2)
            validate_nonsingular(refined)
            augment(refined)
            b, sk, fcl, pair = run_pair(diagram, 400, 8000)
        except (DiagramError, SingularDiagramError, ComponentBudgetError, ValueError):
            continue
        if not properness_check(pair).proper:
            continue
        base = euler_characteristic([pair])
        try:
            _, sk2, fcl2, pair2 = run_pair(refined, 2500, 16000)
        except ComponentBudgetError:
            continue
        fine = euler_characteristic([pair2])
        assert fine.betti_gf2 == base.betti_gf2
        assert fine.euler == base.euler
        refined_checked += 1
        # restarting from any other interior cell reproduces the component
        component = pair.interior
        starts = component if len(component) <= 40 else component[::len(component) // 20]
        for cell in starts:
            assert enumerate_component(cell, sk, fcl) == component
        checked += 1
    assert checked >= 100 and refined_checked >= 100
    print(f"\nACCEPTANCE 4 invariance on {checked} fixtures: PASS")


def test_criterion_5_oracle_equivalence():
    """Component counts and per-component euler numbers match the value oracle."""
    rng = random.Random(20260402)
    compared = 0
    while compared < 100:
        try:
            r = rng.random()
            if r < 0.3:
                diagram = random_two_strand(rng)
            elif r < 0.65:
                diagram = random_one_strand(rng, m_max=2, d_max=4, inner_gaps_only=False)
            else:
                diagram = random_one_strand(rng, m_max=4, d_max=2, inner_gaps_only=False)
            b = augment(diagram)
            oracle = brute_force_components(b)
            sk, cell = normalize(b)
            fcl = b.free_closure()
            pairs = enumerate_all(sk, b.n, fcl)
        except (DiagramError, SingularDiagramError, OracleCapError, GapSeparationError):
            continue
        main = {}
        for p in pairs:
            hom = component_homology(p)
            main[tuple(c.codes for c in p.interior)] = (hom.euler, properness_check(p).proper)
        reference = {c.cells: (c.euler, c.proper) for c in oracle}
        assert set(main) == set(reference)
        for key, value in main.items():
            assert value == reference[key]
        compared += 1
    print(f"\nACCEPTANCE 5 oracle equivalence on {compared} fixtures: PASS")


def test_criterion_6_garside_against_oracle():
    """Every word of length up to 6 in B_3 and B_4, exact."""
    start = time.time()
    count = 0
    for k in (3, 4):
        generators = [g for g in range(-(k - 1), k) if g != 0]
        for length in range(0, 7):
            for letters in itertools.product(generators, repeat=length):
                w = BraidWord(k, letters)
                nf = left_normal_form(w)
                assert nf.inf == brute_force_inf(w), (k, letters)
                twists, positive = minimal_positive_twists(w)
                assert twists == (max(0, -nf.inf) + 1) // 2
                assert nf.inf + 2 * twists >= 0
                assert twists == 0 or nf.inf + 2 * (twists - 1) < 0
                assert all(g > 0 for g in positive.letters)
                count += 1
    # group equality of the positive representative, spot-checked through
    # the independent reversing-based word problem
    rng = random.Random(20260403)
    for _ in range(300):
        k = rng.choice((3, 4))
        letters = tuple(rng.choice([g for g in range(-(k - 1), k) if g]) for _ in range(rng.randrange(0, 7)))
        w = BraidWord(k, letters)
        twists, positive = minimal_positive_twists(w)
        lifted = BraidWord(k, letters + _delta_squared(k) * twists)
        assert words_equal(positive, lifted)
        assert permutation_of(positive) == permutation_of(w)
    elapsed = time.time() - start
    print(f"\nACCEPTANCE 6 garside vs oracle on {count} words in {elapsed:.1f}s: PASS")


def _delta_squared(k: int) -> tuple[int, ...]:
    row = tuple(range(1, k))
    return row * k


def test_criterion_7_structural_certificates():
    """Boundary squared, euler counts, exit consistency, crossing constancy."""
    fixtures = [rectangle_diagram(), stacked_diagram(), family_diagram(2, "mm"),
                family_diagram(3, "mbt")]
    rng = random.Random(20260404)
    attempts = 0
    while len(fixtures) < 34 and attempts < 500:
        attempts += 1
        try:
            diagram = random_one_strand(rng)
            augment(diagram)
            fixtures.append(diagram)
        except (DiagramError, SingularDiagramError):
            continue
    checked = 0
    for diagram in fixtures:
        try:
            b, sk, fcl, pair = run_pair(diagram, 400, 8000)
        except (ComponentBudgetError, SingularDiagramError):
            continue
        # exit-face two-sided consistency and crossing constancy are live
        # assertions inside exit_set and close; recompute the remaining
        # certificates here from scratch
        complex_ = build_chain_complex(pair)  # raises unless boundary^2 = 0
        hom = component_homology(pair)
        alt = sum((-1) ** c.dim for c in pair.cells) - sum(
            (-1) ** c.dim for c in pair.exit_cells
        )
        assert hom.euler == alt == sum(
            (-1) ** k * v for k, v in enumerate(hom.betti)
        )
        # every codim-1 exit face loses exactly two crossings outward
        from braidchi.cubecomplex import _flank_sign

        for cell in pair.interior:
            for a, row in enumerate(cell.codes):
                for i, code in enumerate(row):
                    if code % 2 == 0:
                        continue
                    for snapped in (code - 1, code + 1):
                        strand = sk.strand_at(i, snapped // 2)
                        before = _flank_sign(cell, sk, fcl, a, i, strand, -1)
                        after = _flank_sign(cell, sk, fcl, a, i, strand, +1)
                        if before == 0 or after == 0 or before * after < 0:
                            continue
                        side = 1 if code > snapped else -1
                        if side * after < 0:  # exit verdict
                            face = cell.replaced(a, i, snapped)
                            assert face in pair.exit_cells
                            outward = cell.replaced(a, i, 2 * snapped - code)
                            assert (
                                crossing_number_of(outward, sk, fcl)
                                == pair.crossing_number - 2
                            )
        assert pair.crossing_number == crossing_report(b).total
        checked += 1
    assert checked >= 25
    print(f"\nACCEPTANCE 7 structural certificates on {checked} runs: PASS")
