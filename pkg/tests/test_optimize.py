import itertools

import numpy as np
import pytest

from helpers import cuttingVectorSpec, randomGrid
from SCLdpc.AbsCounter import countAbs
from SCLdpc.CuttingVector import CuttingVector
from SCLdpc.Exceptions import SearchConfigException, ValidationException
from SCLdpc.ExitCodes import CountMethod
from SCLdpc.LineCounter import countAbsCuttingVector, countAbsGeneral
from SCLdpc.Objective import Objective, cycleFamilies
from SCLdpc.Optimizer import bestCuttingVector, optimizeBm
from SCLdpc.SearchConfig import ColumnOrder, SearchConfig
from SCLdpc.WindowSpec import WindowSpec
from SCLdpc.WindowedCounter import countAbsWindowed

def test_cycle_families():
    families = cycleFamilies(7)
    assert families.shape == (42, 5)
    assert all(j1 < j2 for j1, j2 in families[:, :2])

def test_full_objective_matches_counters(rng):
    for m in (1, 2, 3):
        objective = Objective(5, 6, m)
        for _ in range(4):
            grid = randomGrid(rng, 5, m)
            value = objective.evaluate(grid)
            assert value == countAbs(objective.spec(grid), CountMethod.Line).getTotal()
            assert value == objective.report(grid, backend=CountMethod.Brute).getTotal()

def test_windowed_objective_matches_counter(rng):
    for m, S in ((1, 2), (1, 3), (2, 4), (2, 5)):
        objective = Objective(7, 8, m, window=WindowSpec(S, m))
        assert objective.describe() == "window:%d" % S
        for _ in range(3):
            grid = randomGrid(rng, 7, m)
            assert objective.evaluate(grid) == countAbsWindowed(objective.spec(grid), WindowSpec(S, m)).getTotal()

def test_prefix_bound_never_exceeds_value(rng):
    objective = Objective(7, 5, 2)
    grids = np.stack([randomGrid(rng, 7, 2) for _ in range(20)])
    assigned = rng.random((20, 7)) < 0.6
    assert (objective.evaluateMany(grids, assigned) <= objective.evaluateMany(grids)).all()
    assert (objective.evaluateMany(grids, np.ones((20, 7), dtype=bool)) == objective.evaluateMany(grids)).all()

def test_objective_validation():
    with pytest.raises(ValidationException):
        Objective(5, 3, 3)
    with pytest.raises(ValidationException):
        Objective(5, 3, 1, backend=CountMethod.Both)

def test_best_cutting_vector_is_the_sweep_minimum():
    xi, report = bestCuttingVector(5, 3)
    totals = {v.getXi(): countAbsCuttingVector(v, 5, 3).getTotal()
              for v in CuttingVector.enumerate(3, 5) if v.offsets().max() == 1}
    assert report.getTotal() == min(totals.values())
    assert xi.getXi() == min(k for k, v in totals.items() if v == report.getTotal())

def test_best_cutting_vector_needs_memory_one():
    with pytest.raises(ValidationException):
        bestCuttingVector(5, 3, Objective(5, 3, 2))

def test_search_improves_on_cutting_vectors():
    result = optimizeBm(5, 1, 3)
    _, report = bestCuttingVector(5, 3)
    assert result.value <= report.getTotal()
    assert result.assignmentMatrix.getEntries().max() == 1
    assert result.verification == {"method": CountMethod.Brute, "total": result.value, "agrees": True}
    values = [value for _, value in result.trace]
    assert values == sorted(values, reverse=True) and len(set(values)) == len(values)
    assert not result.budgetExhausted

def test_search_is_deterministic():
    config = SearchConfig(beam=8, backtrack=1, columnOrder=ColumnOrder.Seeded, seed=3)
    first = optimizeBm(7, 2, 5, config=config)
    second = optimizeBm(7, 2, 5, config=config)
    assert first.toDict() == second.toDict()
    assert first.assignmentMatrix.getM() == 2

def test_exhaustive_search_finds_the_optimum():
    objective = Objective(5, 3, 1)
    grids = np.array(list(itertools.product((0, 1), repeat=15)), dtype=np.int64).reshape(-1, 3, 5)
    grids = grids[grids.reshape(len(grids), -1).max(axis=1) == 1]
    best = int(objective.evaluateMany(grids).min())
    result = optimizeBm(5, 1, 3, objective, SearchConfig(beam=0, backtrack=0))
    assert result.value == best

def test_windowed_search():
    objective = Objective(5, 6, 1, window=WindowSpec(3, 1))
    result = optimizeBm(5, 1, 6, objective, SearchConfig(beam=4, backtrack=1))
    _, report = bestCuttingVector(5, 6, objective)
    assert result.value <= report.getTotal()
    assert result.report.getTotal() == result.value

def test_symmetry_only_for_full_objective():
    objective = Objective(5, 4, 1, window=WindowSpec(2, 1))
    with pytest.raises(SearchConfigException):
        optimizeBm(5, 1, 4, objective, SearchConfig(symmetry=True))
    assert optimizeBm(5, 1, 4, config=SearchConfig(beam=4, symmetry=True)).value is not None

def test_budget_stops_the_search():
    result = optimizeBm(5, 1, 3, config=SearchConfig(budget=1))
    assert result.budgetExhausted
    assert result.evaluations == 1

def test_search_config_validation():
    for kwargs in ({"beam": -1}, {"backtrack": 1.5}, {"budget": 0}, {"threads": 0},
                   {"columnOrder": "random"}, {"seed": -2}, {"restarts": -1}, {"steps": "60"}, {"tenure": -1}):
        with pytest.raises(SearchConfigException):
            SearchConfig(**kwargs)
    assert SearchConfig(beam=0).isExhaustive()
    assert "column_order=left-to-right\n" in SearchConfig().toText()
    with pytest.raises(ValidationException):
        optimizeBm(5, 0, 3)
    with pytest.raises(ValidationException):
        optimizeBm(5, 1, 3, Objective(5, 4, 1))

@pytest.mark.parametrize("m, L", [(1, 4), (1, 10), (2, 5), (2, 10), (3, 10)])
def test_search_scores_match_line_counts_at_17(rng, m, L):
    objective = Objective(17, L, m)
    grids = np.stack([randomGrid(rng, 17, m) for _ in range(16)])
    for grid, value in zip(grids, objective.evaluateMany(grids)):
        assert value == countAbsGeneral(objective.spec(grid)).getTotal()

def test_known_memory_two_grid_at_17():
    grid = [[int(c) for c in row] for row in ("22202002001012202", "01122110212100110", "00020222120222022")]
    assert [Objective(17, L, 2).evaluate(grid) for L in (4, 10, 20)] == [68, 272, 612]
    assert countAbs(Objective(17, 10, 2).spec(grid), CountMethod.Line).getTotal() == 272

def test_tabu_runs_improve_a_narrow_beam():
    narrow = SearchConfig(beam=1, backtrack=0, steps=0)
    plain = optimizeBm(7, 2, 5, config=narrow)
    tabu = optimizeBm(7, 2, 5, config=SearchConfig(beam=1, backtrack=0, restarts=4, steps=20))
    assert tabu.value <= plain.value
    assert tabu.trace[:len(plain.trace)] == plain.trace
    assert tabu.evaluations >= plain.evaluations
    assert tabu.verification["agrees"]

@pytest.mark.slow
def test_memory_one_search_at_17():
    result = optimizeBm(17, 1, 10)
    assert result.value <= 5644
    assert result.verification["agrees"]
    assert result.evaluations <= 10**6

@pytest.mark.slow
def test_memory_two_search_at_17():
    result = optimizeBm(17, 2, 10)
    assert result.value <= 646
    assert result.verification["agrees"]
    assert result.evaluations <= 10**6
