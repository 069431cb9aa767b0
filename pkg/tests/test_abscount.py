import numpy as np
import pytest

from helpers import bmSpec, cuttingVectorSpec, randomGrid
from SCLdpc import Coupler
from SCLdpc.ABBase import ABBase
from SCLdpc.AbsCounter import countAbs, hasDisagreement
from SCLdpc.AbsorbingSet import isAbsorbingSet
from SCLdpc.BinaryMatrix import BinaryMatrix
from SCLdpc.BruteForceCounter import countSixCyclesBitLevel, countSixCyclesBruteforce, enumerateSixCycles
from SCLdpc.CodeFactory import CodeFactory
from SCLdpc.CountReport import uncoupledCount
from SCLdpc.CuttingVector import CuttingVector
from SCLdpc.Exceptions import InvalidRegionException, ValidationException
from SCLdpc.ExitCodes import AssignmentKind, CountMethod, CouplingMode
from SCLdpc.LineCounter import countAbsCuttingVector, countLine, countRuns
from SCLdpc.Optimizer import bestCuttingVector
from SCLdpc.RegionSpec import RegionSpec

def _matrix(rows, cols, checks):
    return BinaryMatrix(rows, cols, [(r, c) for r, members in enumerate(checks) for c in members])

def test_triangle_is_a_3_3_absorbing_set():
    binary = _matrix(6, 3, [(0, 1), (1, 2), (2, 0), (0,), (1,), (2,)])
    witness = isAbsorbingSet(binary, [2, 0, 1])
    assert (witness.a, witness.b) == (3, 3)
    assert witness.variables == (0, 1, 2)
    assert witness.oddChecks == (3, 4, 5)

def test_four_two_configuration():
    # checks ab, ac, bc, ad, bd, c only, d only
    binary = _matrix(7, 4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2,), (3,)])
    witness = isAbsorbingSet(binary, range(4))
    assert (witness.a, witness.b) == (4, 2)
    assert witness.toDict()["odd_checks"] == [5, 6]

def test_not_absorbing():
    binary = _matrix(3, 1, [(0,), (0,), (0,)])
    assert isAbsorbingSet(binary, [0]) is None
    with pytest.raises(ValidationException):
        isAbsorbingSet(binary, [])
    with pytest.raises(ValidationException):
        isAbsorbingSet(binary, [1])

def test_uncoupled_count():
    spec = bmSpec(np.zeros((3, 17), dtype=int), 0, 1)
    assert uncoupledCount(17) == 4624
    assert countAbs(spec, CountMethod.Line).getTotal() == 4624
    assert countAbs(spec, CountMethod.Line).getR1() == 1
    assert countAbs(spec, CountMethod.Brute, validate=False).getTotal() == 4624

def test_validated_brute_force_finds_only_absorbing_cycles():
    brute = countAbs(bmSpec(np.zeros((3, 7), dtype=int), 0, 1), CountMethod.Brute)
    assert brute.getTotal() == uncoupledCount(7)
    assert brute.getDiscrepancies() == []

def test_bit_level_count_of_h35():
    assert countSixCyclesBitLevel(ABBase(3, 5).expand()) == 100
    assert countSixCyclesBruteforce(ABBase(3, 5).toBlockMatrix()).getTotal() == 100

def test_enumerated_cycles_walk_ones_of_the_matrix():
    blocks = ABBase(3, 7).toBlockMatrix()
    ones = set(blocks.expand().getPositions())
    cycles = enumerateSixCycles(blocks)
    assert len(cycles) == uncoupledCount(7)
    assert all(set(cycle.incidences()) <= ones for cycle in cycles)
    assert len({cycle.cols for cycle in cycles}) == len(cycles)

def test_full_region_holds_every_cycle():
    for p in (3, 5, 7, 11):
        full = ((0, p),)
        assert countRuns(p, full, full, full, (1, 2)) + countRuns(p, full, full, full, (3, 4)) == p * p * (p - 1)

def test_region_validation_and_empty_region():
    assert countLine(RegionSpec(1, 0, 1, 0, 1, 1, 2, 5)) == 0
    with pytest.raises(InvalidRegionException):
        RegionSpec(5, 0, 1, 0, 1, 1, 2, 5)
    with pytest.raises(InvalidRegionException):
        RegionSpec(1, 2, 2, 0, 1, 1, 2, 5)
    with pytest.raises(InvalidRegionException):
        RegionSpec(1, 0, 1, 1, 1, 1, 2, 5)

def _coupledVectors(p):
    return [xi.getXi() for xi in CuttingVector.enumerate(3, p) if xi.offsets().max() == 1]

@pytest.mark.parametrize("p, L", [(p, L) for p in (5, 7) for L in range(2, 6)])
def test_cutting_vector_line_count_matches_bit_level(p, L):
    for xi in _coupledVectors(p):
        spec = cuttingVectorSpec(xi, p, L)
        line = countAbs(spec, CountMethod.Line)
        assert line.getMu() == line.toDict()["mu"]
        assert line.getTotal() == countSixCyclesBitLevel(Coupler.build(spec).expand()), xi

@pytest.mark.slow
@pytest.mark.parametrize("L", range(2, 6))
def test_cutting_vector_line_count_matches_brute_force_p11(L):
    for xi in _coupledVectors(11):
        report = countAbs(cuttingVectorSpec(xi, 11, L), CountMethod.Both)
        assert not hasDisagreement(report), xi

@pytest.mark.parametrize("p, m", [(5, 1), (5, 2), (7, 1), (7, 2)])
def test_random_bm_line_count_matches_bit_level(rng, p, m):
    for L in range(2, 6):
        for _ in range(13):
            spec = bmSpec(randomGrid(rng, p, m), m, max(L, m + 1))
            assert countAbs(spec, CountMethod.Line).getTotal() == countSixCyclesBitLevel(Coupler.build(spec).expand())

@pytest.mark.slow
def test_random_bm_line_count_matches_bit_level_p7(rng):
    for m in (1, 2, 3):
        spec = bmSpec(randomGrid(rng, 7, m), m, m + 3)
        report = countAbs(spec, CountMethod.Both)
        assert not hasDisagreement(report)
        assert report.getTotal() == countSixCyclesBitLevel(Coupler.build(spec).expand())

def test_cutting_vector_count_is_linear_in_L():
    xi = CuttingVector((2, 5, 9), 11)
    reports = [countAbsCuttingVector(xi, 11, L) for L in (2, 3, 4, 7)]
    mu1, mu2 = reports[0].getMu()
    assert [r.getTotal() for r in reports] == [L * mu1 + (L - 1) * mu2 for L in (2, 3, 4, 7)]
    assert all(r.getMu() == [mu1, mu2] for r in reports)
    assert [entry["region"] for entry in reports[0].getPerRegion()] == list(range(1, 8))

def test_reference_cutting_vector_at_17():
    for xi in ((4, 8, 12), (5, 9, 13)):
        report = countAbsCuttingVector(CuttingVector(xi, 17), 17, 10)
        assert report.getTotal() == 19108
        assert report.getMu() == [748, 1292]

@pytest.mark.parametrize("L, xi, total", [(2, (4, 8, 12), 2788), (3, (4, 8, 12), 4828), (4, (4, 8, 12), 6868),
                                          (5, (4, 8, 13), 8874), (10, (4, 8, 13), 18904)])
def test_best_cutting_vector_at_17(L, xi, total):
    best, report = bestCuttingVector(17, L)
    assert best.getXi() == xi
    assert report.getTotal() == total
    assert report.getL() == L and report.getM() == 1

def test_best_cutting_vector_multiplicities_at_17():
    _, report = bestCuttingVector(17, 10)
    assert report.getMu() == [850, 1156]
    assert countAbsCuttingVector(CuttingVector((4, 9, 13), 17), 17, 10).getTotal() == 18904

@pytest.mark.slow
def test_cutting_vector_counts_across_lengths():
    reference = CuttingVector((4, 8, 12), 17)
    expected = {20: 39508, 30: 59908, 40: 80308, 50: 100708}
    assert {L: countAbsCuttingVector(reference, 17, L).getTotal() for L in expected} == expected
    expected = {20: 38964, 30: 59024, 40: 79084, 50: 99144}
    assert {L: bestCuttingVector(17, L)[1].getTotal() for L in expected} == expected

@pytest.mark.parametrize("xi, mu", [((4, 8, 12), (748, 1292)), ((4, 8, 13), (850, 1156))])
def test_cutting_vector_count_is_linear_in_L_at_17(xi, mu):
    totals = [countAbsCuttingVector(CuttingVector(xi, 17), 17, L).getTotal() for L in range(2, 8)]
    assert {b - a for a, b in zip(totals, totals[1:])} == {sum(mu)}
    assert totals[0] == 2 * mu[0] + mu[1]

def test_tailbiting_counts_agree(rng):
    for m in (1, 2):
        spec = bmSpec(randomGrid(rng, 5, m), m, 3 * m + 1, CouplingMode.Tailbiting)
        report = countAbs(spec, CountMethod.Both)
        assert not hasDisagreement(report)
        assert report.getTotal() == spec.getL() * sum(report.getMu())
        assert report.getTotal() == countSixCyclesBitLevel(Coupler.build(spec).expand())

def test_tailbiting_never_counts_fewer_than_terminated(rng):
    grid = randomGrid(rng, 5, 2)
    tailbiting = countAbs(bmSpec(grid, 2, 7, CouplingMode.Tailbiting), CountMethod.Line).getTotal()
    terminated = countAbs(bmSpec(grid, 2, 7), CountMethod.Line).getTotal()
    assert tailbiting >= terminated

def test_bit_level_count_ignores_row_and_column_order():
    spec = cuttingVectorSpec((1, 3, 4), 5, 4, CouplingMode.Tailbiting)
    lifted = Coupler.liftTailbiting(spec)
    reordered = Coupler.reorder(lifted, 4, 1)
    assert countSixCyclesBitLevel(lifted.expand()) == countSixCyclesBitLevel(reordered.expand())

@pytest.mark.parametrize("p", [5, 7])
def test_counts_survive_reorder_and_termination(rng, p):
    for _ in range(25):
        m = int(rng.integers(1, 3))
        L = int(rng.integers(m + 2, 6))
        grid = randomGrid(rng, p, m)
        lifted = Coupler.liftTailbiting(bmSpec(grid, m, L, CouplingMode.Tailbiting))
        reordered = Coupler.reorder(lifted, L, 1)
        assert countSixCyclesBitLevel(lifted.expand()) == countSixCyclesBitLevel(reordered.expand())
        terminated = Coupler.terminate(reordered, L, m).expand()
        assert countSixCyclesBitLevel(terminated) == countAbs(bmSpec(grid, m, L), CountMethod.Line).getTotal()

def test_random_spec_falls_back_to_brute_force():
    spec = bmSpec([[0, 1, 0, 1, 0], [1, 0, 1, 0, 1], [0, 0, 1, 1, 0]], 1, 3)
    random = CodeFactory.createInstance(AssignmentKind.RandomI, ABBase(3, 5), 3, 1, CouplingMode.Terminated, seed=5)
    report = countAbs(random, CountMethod.Line)
    assert [d.kind for d in report.getDiscrepancies()] == ["fallback"]
    assert report.getTotal() == countSixCyclesBitLevel(Coupler.build(random).expand())
    assert countAbs(spec, CountMethod.Line).getDiscrepancies() == []
