import heapq
import itertools
import logging
from dataclasses import dataclass, field

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from .ABBase import ABBase
from .AssignmentMatrix import AssignmentMatrixBm
from .CodeFactory import CodeFactory
from .CuttingVector import CuttingVector
from .EdgeSpreader import generatorFor
from .Exceptions import SearchConfigException, ValidationException
from .ExitCodes import AssignmentKind, CountMethod, CouplingMode
from .Objective import Objective
from .SearchConfig import ColumnOrder, SearchConfig

log = logging.getLogger(__name__)

# Largest circulant size whose optimum is re-counted by brute force
BruteVerifyLimit = 13
BatchSize = 2048

def _scoreBatches(objective, grids, assigned=None, threads=1):
    starts = range(0, len(grids), BatchSize)
    def part(i):
        return objective.evaluateMany(grids[i:i + BatchSize], None if assigned is None else assigned[i:i + BatchSize])
    if threads > 1 and len(starts) > 1:
        parts = Parallel(n_jobs=threads, prefer="threads")(delayed(part)(i) for i in starts)
    else:
        parts = [part(i) for i in starts]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

def _cuttingVectorGrids(p, strict=False):
    vectors = [xi for xi in CuttingVector.enumerate(3, p, strict) if xi.offsets().max() == 1]
    return vectors, np.stack([xi.offsets() for xi in vectors]) if vectors else np.zeros((0, 3, p), dtype=np.int64)

def bestCuttingVector(p, L, objective=None, strict=False, progress=False, threads=1):
    """
    Description:
        Sweeps every cutting vector of H(3, p) and returns
        the one whose code scores lowest.  Ties go to the
        lexicographically first vector
    Arguments:
        p (in, int)                    Prime circulant size
        L (in, int)                    Coupling length
        objective (in, Objective)      Memory-1 objective, full by default
        strict (in, bool)              Only strictly increasing vectors
        progress (in, bool)            Show a progress bar
        threads (in, int)              Parallel jobs
    Exceptions:
        ValidationException
    Returns:
        (tuple)    (CuttingVector, CountReport or WindowReport)
    """
    objective = objective or Objective(p, L, 1)
    if objective.getM() != 1 or (objective.getP(), objective.getL()) != (p, L):
        raise ValidationException("cutting vectors need a memory-1 objective for p=%d, L=%d" % (p, L))
    vectors, grids = _cuttingVectorGrids(p, strict)
    if not vectors:
        raise ValidationException("no coupled cutting vector exists for p=%d" % p)
    values = []
    for i in tqdm(range(0, len(grids), BatchSize), disable=not progress, desc="cutting vectors"):
        values.append(_scoreBatches(objective, grids[i:i + BatchSize], threads=threads))
    values = np.concatenate(values)
    best = int(np.argmin(values))
    xi = vectors[best]
    log.info("best of %d cutting vectors: %s with %s value %d", len(vectors), list(xi.getXi()),
             objective.describe(), int(values[best]))
    spec = CodeFactory.createInstance(AssignmentKind.CuttingVector, ABBase(3, p), L, 1, CouplingMode.Terminated,
                                      cuttingVector=xi)
    report = objective.reportFor(spec, validate=False, threads=threads)
    if report.getTotal() != values[best]:
        log.warning("cutting vector %s scored %d but counts %d", list(xi.getXi()), values[best], report.getTotal())
    return xi, report

@dataclass
class SearchResult:
    """Outcome of a B_m search; assignmentMatrix is None when the budget ran out first."""
    assignmentMatrix: object
    value: object
    report: object
    trace: list = field(default_factory=list)
    evaluations: int = 0
    budgetExhausted: bool = False
    verification: dict = field(default_factory=dict)

    def toDict(self):
        return {"bm": None if self.assignmentMatrix is None else self.assignmentMatrix.toRows(),
                "value": self.value, "evaluations": self.evaluations, "budget_exhausted": self.budgetExhausted,
                "trace": [{"evaluations": e, "value": v} for e, v in self.trace],
                "verification": dict(self.verification),
                "report": None if self.report is None else self.report.toDict()}

class BmSearch(object):
    """
    Description:
        Beam search over the columns of a 3 x p B_m grid
        followed by backtracking sweeps and tabu runs.  A
        prefix is scored by the families whose three columns
        are assigned, which never exceeds the score of any
        completion
    """
    def __init__(self, objective, config):
        """
        Description:
            Initializes this instance
        Arguments:
            objective (in, Objective)     What to minimize
            config (in, SearchConfig)     Search settings
        Return:
            none
        """
        self.__objective = objective
        self.__config = config
        self.__p = objective.getP()
        self.__m = objective.getM()
        if config.getColumnOrder() == ColumnOrder.Seeded:
            self.__order = [int(j) for j in generatorFor(config.getSeed(), 0).permutation(self.__p)]
        else:
            self.__order = list(range(self.__p))
        self.__profiles = np.array(list(itertools.product(range(self.__m + 1), repeat=3)), dtype=np.int64)
        self.__evaluations = 0
        self.__exhausted = False
        self.__best = None
        self.__bestValue = None
        self.__trace = []
    def getOrder(self):
        return list(self.__order)
    def getEvaluations(self):
        return self.__evaluations
    def isExhausted(self):
        return self.__exhausted
    def getBest(self):
        return self.__best
    def getBestValue(self):
        return self.__bestValue
    def getTrace(self):
        return list(self.__trace)
    def _score(self, grids, assigned=None):
        remaining = self.__config.getBudget() - self.__evaluations
        if remaining < len(grids):
            self.__exhausted = True
            grids = grids[:max(remaining, 0)]
            assigned = None if assigned is None else assigned[:len(grids)]
        self.__evaluations += len(grids)
        return _scoreBatches(self.__objective, grids, assigned, self.__config.getThreads())
    def _offer(self, grids, values):
        """Takes the first lowest complete grid with max entry m as incumbent if it improves."""
        if not len(values):
            return False
        valid = grids.reshape(len(grids), -1).max(axis=1) == self.__m
        if not valid.any():
            return False
        index = int(np.flatnonzero(valid)[np.argmin(values[valid])])
        value = int(values[index])
        if self.__bestValue is not None and value >= self.__bestValue:
            return False
        self.__best = grids[index].copy()
        self.__bestValue = value
        self.__trace.append((self.__evaluations, value))
        log.info("incumbent %d after %d evaluations", value, self.__evaluations)
        return True
    def seed(self):
        """Scores every cutting vector scaled to offsets {0, m} and takes the best."""
        _, grids = _cuttingVectorGrids(self.__p)
        grids = grids * self.__m
        values = self._score(grids)
        self._offer(grids[:len(values)], values)
    def _canonical(self, grid, columns):
        part = grid[:, columns]
        return (part - part.min(axis=1, keepdims=True)).tobytes()
    def _select(self, children, bounds, columns):
        limit = self.__bestValue
        candidates = [i for i in range(len(bounds)) if limit is None or bounds[i] < limit]
        if self.__config.getSymmetry():
            seen = set()
            unique = []
            for i in sorted(candidates, key=lambda i: (bounds[i], i)):
                key = self._canonical(children[i], columns)
                if key not in seen:
                    seen.add(key)
                    unique.append(i)
            candidates = unique
        beam = self.__config.getBeam()
        if beam:
            chosen = heapq.nsmallest(beam, candidates, key=lambda i: (bounds[i], i))
        else:
            chosen = sorted(candidates, key=lambda i: (bounds[i], i))
        return children[chosen]
    def beamPhase(self):
        """
        Description:
            Assigns the columns in order, keeping the best
            prefixes whose bound is below the incumbent
        Arguments:
            none
        Returns:
            none
        """
        p, K = self.__p, len(self.__profiles)
        states = np.zeros((1, 3, p), dtype=np.int64)
        assigned = np.zeros(p, dtype=bool)
        columns = []
        for step, column in enumerate(tqdm(self.__order, disable=not self.__config.getProgress(), desc="columns")):
            children = np.repeat(states, K, axis=0)
            children[:, :, column] = np.tile(self.__profiles, (len(states), 1))
            assigned[column] = True
            columns.append(column)
            bounds = self._score(children, np.broadcast_to(assigned, (len(children), p)))
            children = children[:len(bounds)]
            if step == p - 1:
                self._offer(children, bounds)
                return
            states = self._select(children, bounds, columns)
            log.debug("column %d: %d children, %d kept", column, len(children), len(states))
            if self.__exhausted or not len(states):
                return
    def backtrackPhase(self):
        """
        Description:
            Reassigns every window of up to the backtrack
            depth consecutive columns of the incumbent,
            sweeping again while a sweep improves
        Arguments:
            none
        Returns:
            none
        """
        depth = self.__config.getBacktrack()
        improved = self.__best is not None
        while improved and not self.__exhausted:
            improved = False
            for d in range(1, depth + 1):
                choices = np.array(list(itertools.product(self.__profiles, repeat=d)), dtype=np.int64)
                for start in range(self.__p - d + 1):
                    columns = self.__order[start:start + d]
                    grids = np.repeat(self.__best[None, :, :], len(choices), axis=0)
                    grids[:, :, columns] = choices.transpose(0, 2, 1)
                    values = self._score(grids)
                    improved = self._offer(grids[:len(values)], values) or improved
                    if self.__exhausted:
                        return
    def _moves(self, grid):
        """Returns every grid one column profile away from grid, with the changed column."""
        p, K = self.__p, len(self.__profiles)
        columns = np.repeat(np.arange(p), K)
        grids = np.repeat(grid[None, :, :], p * K, axis=0)
        grids[np.arange(p * K), :, columns] = np.tile(self.__profiles, (p, 1))
        keep = (grids != grid[None, :, :]).any(axis=(1, 2))
        return grids[keep], columns[keep]
    def _floor(self):
        return self.__objective.getKind() == Objective.Full and self.__bestValue == 0
    def tabuPhase(self):
        """
        Description:
            Tabu search over single-column moves.  The first
            run starts from the incumbent and the others from
            seeded random grids.  Each step takes the lowest
            move whose column is not fixed; a changed column
            stays fixed for the tenure unless a move through it
            beats the incumbent
        Arguments:
            none
        Returns:
            none
        """
        steps, tenure = self.__config.getSteps(), self.__config.getTenure()
        if not steps:
            return
        for run in tqdm(range(self.__config.getRestarts() + 1), disable=not self.__config.getProgress(),
                        desc="tabu runs"):
            rng = generatorFor(self.__config.getSeed(), run + 1)
            if run == 0:
                if self.__best is None:
                    continue
                grid = self.__best.copy()
            else:
                grid = rng.integers(0, self.__m + 1, size=(3, self.__p)).astype(np.int64)
            fixedUntil = np.full(self.__p, -1)
            for step in range(steps):
                if self._floor():
                    return
                grids, columns = self._moves(grid)
                limit = self.__bestValue
                values = self._score(grids)
                grids, columns = grids[:len(values)], columns[:len(values)]
                self._offer(grids, values)
                if self.__exhausted or not len(values):
                    return
                allowed = fixedUntil[columns] < step
                if limit is not None:
                    allowed |= values < limit
                if not allowed.any():
                    allowed[:] = True
                candidates = np.flatnonzero(allowed)
                ties = candidates[values[candidates] == values[candidates].min()]
                choice = int(ties[rng.integers(len(ties))])
                grid = grids[choice]
                fixedUntil[columns[choice]] = step + tenure
            log.info("tabu run %d done, incumbent %s after %d evaluations", run, self.__bestValue,
                     self.__evaluations)
    def run(self):
        self.seed()
        if not self.__exhausted:
            self.beamPhase()
        if not self.__exhausted:
            self.backtrackPhase()
        if not self.__exhausted and not self.__config.isExhaustive():
            self.tabuPhase()
        if self.__exhausted:
            log.warning("evaluation budget of %d exhausted", self.__config.getBudget())

def _verify(objective, grid, value, threads):
    method = CountMethod.Brute if objective.getP() <= BruteVerifyLimit else CountMethod.Line
    report = objective.report(grid, validate=method == CountMethod.Brute, threads=threads, backend=method)
    agrees = report.getTotal() == value
    if not agrees:
        log.warning("search value %d but %s recount %d", value, method, report.getTotal())
    return report, {"method": method, "total": report.getTotal(), "agrees": agrees}

def optimizeBm(p, m, L, objective=None, config=None):
    """
    Description:
        Searches B_m grids of H(3, p) for the lowest
        objective.  The search starts from the best scaled
        cutting vector, so with m = 1 it never does worse
        than bestCuttingVector.  The result is recounted
        independently
    Arguments:
        p (in, int)                   Prime circulant size
        m (in, int)                   Memory, at least 1
        L (in, int)                   Coupling length
        objective (in, Objective)     Defaults to the full count
        config (in, SearchConfig)     Defaults to SearchConfig()
    Exceptions:
        ValidationException
        SearchConfigException
    Returns:
        (SearchResult)    The value
    """
    if m < 1:
        raise ValidationException("B_m search needs m >= 1, got %d" % m)
    config = config or SearchConfig()
    objective = objective or Objective(p, L, m)
    if (objective.getP(), objective.getL(), objective.getM()) != (p, L, m):
        raise ValidationException("objective is for p=%d, L=%d, m=%d" % (objective.getP(), objective.getL(),
                                                                         objective.getM()))
    if config.getSymmetry() and objective.getKind() != Objective.Full:
        raise SearchConfigException("row-shift symmetry only holds for the full objective")
    log.info("B_%d search p=%d L=%d objective %s %r", m, p, L, objective.describe(), config)
    search = BmSearch(objective, config)
    search.run()
    grid = search.getBest()
    if grid is None:
        return SearchResult(None, None, None, search.getTrace(), search.getEvaluations(), True, {})
    report, verification = _verify(objective, grid, search.getBestValue(), config.getThreads())
    return SearchResult(AssignmentMatrixBm(grid, m), search.getBestValue(), report, search.getTrace(),
                        search.getEvaluations(), search.isExhausted(), verification)
