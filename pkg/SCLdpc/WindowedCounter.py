import logging

from joblib import Parallel, delayed

from .AbsCounter import blockView, countAbs
from .BruteForceCounter import familyCycles, sixCycleFamilies
from .CountReport import Discrepancy
from .Exceptions import UnsupportedStructureException, WindowSpecException
from .ExitCodes import CountMethod, CouplingMode
from .LineCounter import familyOffsets, familyTable
from .WindowReport import WindowReport
from .WindowSpec import WindowPosition

log = logging.getLogger(__name__)

def _terminated(spec):
    if spec.getMode() == CouplingMode.Terminated:
        return spec
    log.info("windows slide over the terminated form of %r", spec)
    return spec.withMode(CouplingMode.Terminated)

def windowPositions(spec, window):
    """
    Description:
        Lists the placements of a window over the
        terminated matrix.  A window as wide as the code
        sees every block row; narrower ones start at group 0
        and slide by the window step while they fit
    Arguments:
        spec (in, SCCodeSpec)      The code description
        window (in, WindowSpec)    The window
    Exceptions:
        WindowSpecException
        UnsupportedStructureException
    Returns:
        (list of WindowPosition)    The value
    """
    if not spec.isAB():
        raise UnsupportedStructureException("windows need an AB base")
    return windowPlacements(spec.getL(), spec.getM(), spec.getBase().getGamma(), window)

def windowPlacements(L, m, gamma, window):
    """
    Description:
        Window placements over a terminated code of length
        L, memory m and gamma block rows per position
    Arguments:
        L, m, gamma (in, int)      Code shape
        window (in, WindowSpec)    The window
    Exceptions:
        WindowSpecException
    Returns:
        (list of WindowPosition)    The value
    """
    if window.getMemory() != m:
        raise WindowSpecException("memory-%d window on a code of memory %d" % (window.getMemory(), m))
    S, M = window.getS(), window.getMemory()
    if S > L:
        raise WindowSpecException("window of %d groups is wider than L=%d" % (S, L))
    if S == L:
        return [WindowPosition(0, 0, L, 0, gamma * (L + m))]
    positions = []
    first = 0
    while first + S <= L:
        row = gamma * (first + M)
        positions.append(WindowPosition(len(positions), first, first + S, row, row + window.rowCount(gamma)))
        first += window.getStep()
    return positions

def _placements(offsets, profiles, position, L, gamma):
    count = 0
    for g in range(position.firstGroup - min(offsets), position.stopGroup - max(offsets)):
        if g + min(offsets) < 0 or g + max(offsets) >= L:
            continue
        if all(position.firstRow <= gamma * (g + x + profile[t]) + t < position.stopRow
               for x, profile in zip(offsets, profiles) for t in range(gamma)):
            count += 1
    return count

def _lineCount(table, position, L, gamma):
    total = 0
    for record in table:
        offsets, gap = familyOffsets(record)
        if gap == 0:
            total += record[-1] * _placements(offsets, record[1:4], position, L, gamma)
    return total

def _bruteCount(view, families, position):
    p = view.getBlockSize()
    support = view.columnSupport()
    total = 0
    for rows, cols in families:
        if not all(position.firstGroup * p <= j < position.stopGroup * p for j in cols):
            continue
        if all(position.firstRow <= q < position.stopRow for j in cols for q in support[j]):
            total += len(familyCycles(view, rows, cols))
    return total

def countAbsWindowed(spec, window, method=CountMethod.Line, threads=1):
    """
    Description:
        Counts, for every window placement, the (3,3)
        absorbing sets whose variables lie in the window
        columns and whose neighbouring checks all lie in the
        window rows, and compares their sum with the
        standard count of the whole code
    Arguments:
        spec (in, SCCodeSpec)      The code description
        window (in, WindowSpec)    The window
        method (in, str)           CountMethod.Line or CountMethod.Brute
        threads (in, int)          Parallel jobs over placements
    Exceptions:
        WindowSpecException
        UnsupportedStructureException
    Returns:
        (WindowReport)    The value
    """
    spec = _terminated(spec)
    positions = windowPositions(spec, window)
    gamma, L = spec.getBase().getGamma(), spec.getL()
    discrepancies = []
    grid = spec.getBlockGrid()
    if method != CountMethod.Brute and (grid is None or gamma != 3):
        log.warning("line counting unavailable for windows of %r, using brute force", spec)
        discrepancies.append(Discrepancy("fallback", "window line counting needs a block-constant gamma = 3 spec"))
        method = CountMethod.Brute
    if method == CountMethod.Brute:
        view = blockView(spec)
        if view is None:
            raise UnsupportedStructureException("windowed brute force needs circulant blocks")
        families = list(sixCycleFamilies(view))
        counts = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_bruteCount)(view, families, position) for position in positions)
    else:
        method = CountMethod.Line
        table = familyTable(grid, full=True)
        counts = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_lineCount)(table, position, L, gamma) for position in positions)
    standard = countAbs(spec, method, validate=False).getTotal()
    report = WindowReport(window, positions, counts, standard, method, discrepancies)
    log.info("%r: %d positions, total %d, standard %d", window, len(positions), report.getTotal(), standard)
    return report
