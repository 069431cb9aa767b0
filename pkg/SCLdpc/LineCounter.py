import functools
import itertools
import logging

import numpy as np

from .CountReport import CountReport, Discrepancy
from .Exceptions import UnsupportedStructureException, ValidationException
from .ExitCodes import CountMethod, CouplingMode
from .RegionSpec import RegionSpec

log = logging.getLogger(__name__)

# A cycle of H(3,p) joins its first two block columns j1 < j2 through the
# type-0 row.  In group A the first column meets the third through the
# type-1 row and j3 = 2*j2 - j1 (mod p), in group B through the type-2 row
# and j3 = 2*j1 - j2 (mod p).
GroupA = "A"
GroupB = "B"
Groups = ((GroupA, 1, 2, (1, 2)), (GroupB, 2, 1, (3, 4)))

# label -> (row positions of types 0, 1, 2, allowed column positions)
RegionLayout = {1: ((0, 0, 0), (0,)),
                2: ((1, 0, 0), (0,)),
                3: ((1, 1, 0), (0,)),
                4: ((1, 1, 1), (0,)),
                5: ((1, 1, 0), (0, 1)),
                6: ((1, 1, 1), (0, 1)),
                7: ((2, 1, 1), (0, 1))}

def _caseBounds(region, n):
    p = region.p
    if region.case == 1:
        return region.alpha * p - 2 * n * p, region.beta * p - 1 - 2 * n * p
    if region.case == 2:
        return p * p + region.alpha * p - 2 * n * p, p * p + region.beta * p - 1 - 2 * n * p
    if region.case == 3:
        return n * p - p * p + region.alpha * p, n * p - p * p + region.beta * p - 1
    return n * p + region.alpha * p, n * p + region.beta * p - 1

@functools.lru_cache(maxsize=None)
def countLine(region):
    """
    Description:
        Counts the integer points (c1, c2 = c1 + n p) with
        n in [1, w4-w1-1], w1 p <= c1 < w2 p, w3 p <= c2 < w4 p
        and the third column of the case inside
        [alpha p, beta p).  Every point is one 6-cycle
    Arguments:
        region (in, RegionSpec)    The region
    Returns:
        (int)    The value
    """
    p = region.p
    total = 0
    for n in range(1, region.w4 - region.w1):
        low, high = _caseBounds(region, n)
        low = max(low, region.w1 * p, region.w3 * p - n * p)
        high = min(high, region.w2 * p - 1, region.w4 * p - 1 - n * p)
        if high >= low:
            total += high - low + 1
    return total

def runs(columns):
    """
    Description:
        Splits ascending block columns into maximal runs
        of consecutive ones
    Arguments:
        columns (in, sequence of int)    Ascending columns
    Returns:
        (tuple)    (start, stop) pairs, stop excluded
    """
    found = []
    for j in columns:
        if found and found[-1][1] == j:
            found[-1][1] = j + 1
        else:
            found.append([j, j + 1])
    return tuple((a, b) for a, b in found)

def clippedRegions(p, run1, run2, run3, cases):
    """
    Description:
        Builds the regions of first columns in run1,
        second columns in run2 (j1 < j2) and third columns
        in run3, one per case.  Empty boxes give nothing
    Arguments:
        p (in, int)          Circulant size
        run1, run2, run3 (in, tuple)    (start, stop) runs
        cases (in, tuple)    Cases of the group
    Returns:
        (list of RegionSpec)    The value
    """
    (a1, b1), (a2, b2), (alpha, beta) = run1, run2, run3
    w1, w4 = a1, b2
    w2 = min(b1, b2 - 1, p - 1)
    w3 = max(a2, a1 + 1)
    if w2 <= w1 or w4 <= w3:
        return []
    return [RegionSpec(case, alpha, beta, w1, w2, w3, w4, p) for case in cases]

@functools.lru_cache(maxsize=None)
def countRuns(p, runs1, runs2, runs3, cases):
    """Total of countLine over every run triple and case."""
    return sum(countLine(region) for run1 in runs1 for run2 in runs2 for run3 in runs3
               for region in clippedRegions(p, run1, run2, run3, cases))

def _profileRuns(grid, types):
    members = {}
    for j in range(grid.shape[1]):
        key = tuple(int(grid[t, j]) if t in types else None for t in range(grid.shape[0]))
        members.setdefault(key, []).append(j)
    return {key: runs(cols) for key, cols in members.items()}

@functools.lru_cache(maxsize=4096)
def _familyTable(rows, full):
    grid = np.array(rows, dtype=np.int64)
    p = grid.shape[1]
    table = []
    for group, t1, t2, cases in Groups:
        if full:
            needs = ({0, 1, 2},) * 3
        else:
            needs = ({0, t1}, {0, t2}, {t1, t2})
        classes = [_profileRuns(grid, need) for need in needs]
        for (prof1, runs1), (prof2, runs2), (prof3, runs3) in itertools.product(*(c.items() for c in classes)):
            cycles = countRuns(p, runs1, runs2, runs3, cases)
            if cycles:
                table.append((group, prof1, prof2, prof3, cycles))
    return tuple(table)

def familyTable(grid, full=False):
    """
    Description:
        Groups the cycles of H(3, p) by the coupling
        offsets of their block columns.  With full the
        profile of every column is its whole column of B_m,
        otherwise only the entries of the two rows the
        column uses in the cycle
    Arguments:
        grid (in, array-like)    3 x p B_m grid
        full (in, bool)          Keep whole column profiles
    Returns:
        (tuple)    (group, profile1, profile2, profile3, cycles) records
    """
    return _familyTable(tuple(tuple(int(v) for v in row) for row in np.asarray(grid)), bool(full))

def groupTypes(group):
    """(t1, t2): the row types joining the third column to the first and second."""
    for name, t1, t2, _ in Groups:
        if name == group:
            return t1, t2
    raise ValidationException("unknown group %r" % group)

def familyOffsets(record):
    """
    Description:
        Returns the coupling positions of the three block
        columns relative to the first, and the closing gap
        that must vanish for the cycle to exist
    Arguments:
        record (in, tuple)    A familyTable record
    Returns:
        (tuple)    ((0, x2, x3), gap)
    """
    group, prof1, prof2, prof3, _ = record
    t1, t2 = groupTypes(group)
    x2 = prof1[0] - prof2[0]
    x3 = prof1[t1] - prof3[t1]
    return (0, x2, x3), (x2 + prof2[t2]) - (x3 + prof3[t2])

def _span(offsets):
    return max(offsets) - min(offsets)

def _requireThreeRows(gamma):
    if gamma != 3:
        raise UnsupportedStructureException("line counting needs gamma = 3, got %d" % gamma)

def regionsForCuttingVector(xi, p=None):
    """
    Description:
        Derives the regions R1..R7 of a cutting vector.
        R1-R4 hold cycles inside one column position with
        row positions (0,0,0), (1,0,0), (1,1,0), (1,1,1);
        R5-R7 let the columns use two consecutive
        positions with row positions (1,1,0), (1,1,1),
        (2,1,1)
    Arguments:
        xi (in, CuttingVector)    The cutting vector
        p (in, int)               Circulant size, defaults to the one of xi
    Exceptions:
        UnsupportedStructureException
        ValidationException
    Returns:
        (dict)    label -> list of RegionSpec
    """
    p = xi.getP() if p is None else p
    if p != xi.getP():
        raise ValidationException("cutting vector built for p=%d, not %d" % (xi.getP(), p))
    _requireThreeRows(xi.getGamma())
    cuts = xi.getXi()

    def interval(t, value):
        if value == 0:
            return (0, cuts[t])
        if value == 1:
            return (cuts[t], p)
        return None

    def both(first, second):
        if first is None or second is None:
            return None
        low, high = max(first[0], second[0]), min(first[1], second[1])
        return (low, high) if low < high else None

    regions = {}
    for label, (rows, positions) in RegionLayout.items():
        found = []
        for group, t1, t2, cases in Groups:
            for g1, g2, g3 in itertools.product(positions, repeat=3):
                run1 = both(interval(0, rows[0] - g1), interval(t1, rows[t1] - g1))
                run2 = both(interval(0, rows[0] - g2), interval(t2, rows[t2] - g2))
                run3 = both(interval(t1, rows[t1] - g3), interval(t2, rows[t2] - g3))
                if run1 and run2 and run3:
                    found.extend(clippedRegions(p, run1, run2, run3, cases))
        regions[label] = found
    return regions

def countAbsCuttingVector(xi, p, L):
    """
    Description:
        Counts the (3,3) absorbing sets of the terminated
        code of a cutting vector as L mu_1 + (L-1) mu_2,
        mu_1 = N1+N2+N3+N4 and
        mu_2 = (N5-N3) + (N6-N4-N1) + (N7-N2)
    Arguments:
        xi (in, CuttingVector)    The cutting vector
        p (in, int)               Circulant size
        L (in, int)               Coupling length, at least 2
    Exceptions:
        UnsupportedStructureException
        ValidationException
    Returns:
        (CountReport)    The value
    """
    if L < 2:
        raise ValidationException("cutting vector codes need L >= 2, got %d" % L)
    regions = regionsForCuttingVector(xi, p)
    N = {label: sum(countLine(region) for region in found) for label, found in regions.items()}
    mu1 = N[1] + N[2] + N[3] + N[4]
    mu2 = (N[5] - N[3]) + (N[6] - N[4] - N[1]) + (N[7] - N[2])
    perRegion = [{"region": label, "count": N[label],
                  "by_case": {str(case): sum(countLine(r) for r in regions[label] if r.case == case)
                              for case in (1, 2, 3, 4)}}
                 for label in sorted(N)]
    log.debug("xi=%s: N=%s", list(xi.getXi()), N)
    return CountReport(CountMethod.Line, L * mu1 + (L - 1) * mu2, p=p, gamma=3, L=L, m=1, mu=[mu1, mu2],
                       perRegion=perRegion, mode=CouplingMode.Terminated)

def countGrid(grid, L, mode=CouplingMode.Terminated):
    """
    Description:
        Piecewise line count of the code lifted from a
        3 x p B_m grid.  Every closing family of cycles is
        worth L - span copies when terminated and L when
        tailbiting
    Arguments:
        grid (in, array-like)    3 x p B_m grid
        L (in, int)              Coupling length
        mode (in, str)           CouplingMode value
    Exceptions:
        UnsupportedStructureException
    Returns:
        (tuple)    (total, mu by span, closing records)
    """
    grid = np.asarray(grid)
    _requireThreeRows(grid.shape[0])
    m = int(grid.max())
    mu = [0] * (m + 1)
    records = []
    for record in familyTable(grid):
        offsets, gap = familyOffsets(record)
        closes = gap == 0 if mode == CouplingMode.Terminated else gap % L == 0
        if not closes:
            continue
        d = _span(offsets)
        mu[d] += record[-1]
        records.append({"group": record[0], "profiles": [list(record[1]), list(record[2]), list(record[3])],
                        "offsets": list(offsets), "span": d, "cycles": record[-1]})
    if mode == CouplingMode.Terminated:
        total = sum(max(L - d, 0) * count for d, count in enumerate(mu))
    else:
        total = L * sum(mu)
    return total, mu, records

def countAbsGeneral(spec, bruteFallback=None):
    """
    Description:
        Counts the (3,3) absorbing sets of a block-constant
        B_m spec by piecewise line counting.  Other specs go
        to bruteFallback and the report carries a fallback
        record
    Arguments:
        spec (in, SCCodeSpec)          The code description
        bruteFallback (in, callable)   spec -> CountReport
    Exceptions:
        UnsupportedStructureException
    Returns:
        (CountReport)    The value
    """
    grid = spec.getBlockGrid()
    if grid is None or grid.shape[0] != 3:
        reason = "gamma != 3" if grid is not None else "assignment is not one shift per AB block with J = 1"
        if bruteFallback is None:
            raise UnsupportedStructureException(reason)
        log.warning("line counting unavailable (%s), falling back to brute force", reason)
        report = bruteFallback(spec)
        return report.withDiscrepancies([Discrepancy("fallback", "line counting unavailable: %s" % reason)])
    total, mu, records = countGrid(grid, spec.getL(), spec.getMode())
    mu = mu + [0] * (spec.getM() + 1 - len(mu))
    return CountReport(CountMethod.Line, total, p=spec.getBase().getP(), gamma=3, L=spec.getL(), m=spec.getM(),
                       mu=mu, perRegion=records, mode=spec.getMode())
