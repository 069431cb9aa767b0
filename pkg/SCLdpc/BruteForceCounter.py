import logging

from .AbsorbingSet import isAbsorbingSet
from .BlockEntry import CirculantShift
from .CountReport import CountReport, Discrepancy
from .Exceptions import NonCirculantBlockException
from .ExitCodes import CountMethod
from .SixCycle import SixCycle, closingOffsets

log = logging.getLogger(__name__)

def _exponents(blockMatrix):
    exponents = {}
    for key, entry in blockMatrix.getEntries().items():
        if not isinstance(entry, CirculantShift):
            raise NonCirculantBlockException(*key)
        exponents[key] = entry.getExponent() % blockMatrix.getBlockSize()
    return exponents

def sixCycleFamilies(blockMatrix):
    """
    Description:
        Yields every block pattern carrying 6-cycles.  For
        block columns j1 < j2 < j3 and distinct block rows
        q1, q2, q3 joining (j1,j2), (j2,j3), (j3,j1), the
        pattern carries p cycles exactly when
        e(q1,j1)-e(q1,j2)+e(q2,j2)-e(q2,j3)+e(q3,j3)-e(q3,j1) = 0 mod p
    Arguments:
        blockMatrix (in, BlockMatrix)    Circulant blocks only
    Exceptions:
        NonCirculantBlockException
    Returns:
        (generator of tuple)    ((q1, q2, q3), (j1, j2, j3))
    """
    e = _exponents(blockMatrix)
    p = blockMatrix.getBlockSize()
    support = [set(rows) for rows in blockMatrix.columnSupport()]
    rowCols = {}
    for r, c in e:
        rowCols.setdefault(r, set()).add(c)

    def later(j):
        return {c for r in support[j] for c in rowCols[r] if c > j}

    for j1 in range(blockMatrix.getBlockCols()):
        near1 = later(j1)
        for j2 in sorted(near1):
            near2 = later(j2)
            for j3 in sorted(near1 & near2):
                for q1 in sorted(support[j1] & support[j2]):
                    for q2 in sorted(support[j2] & support[j3]):
                        if q2 == q1:
                            continue
                        for q3 in sorted(support[j3] & support[j1]):
                            if q3 in (q1, q2):
                                continue
                            total = (e[(q1, j1)] - e[(q1, j2)] + e[(q2, j2)] - e[(q2, j3)]
                                     + e[(q3, j3)] - e[(q3, j1)])
                            if total % p == 0:
                                yield (q1, q2, q3), (j1, j2, j3)

def familyCycles(blockMatrix, rows, cols):
    """
    Description:
        Expands one block pattern into its p cycles
    Arguments:
        blockMatrix (in, BlockMatrix)    Circulant blocks only
        rows (in, tuple)                 (q1, q2, q3)
        cols (in, tuple)                 (j1, j2, j3)
    Returns:
        (list of SixCycle)    The value
    """
    p = blockMatrix.getBlockSize()
    exponents = {}
    for t in range(3):
        for l in (t, (t + 1) % 3):
            exponents[(t, l)] = blockMatrix.getEntry(rows[t], cols[l]).getExponent() % p
    cycles = []
    for k1 in range(p):
        offsets = closingOffsets(exponents, k1, p)
        if offsets is not None:
            cycles.append(SixCycle(rows, offsets[0], cols, offsets[1], p))
    return cycles

def enumerateSixCycles(blockMatrix):
    """
    Description:
        Lists every 6-cycle of a circulant block matrix
    Arguments:
        blockMatrix (in, BlockMatrix)    Circulant blocks only
    Returns:
        (list of SixCycle)    The value
    """
    cycles = []
    for rows, cols in sixCycleFamilies(blockMatrix):
        cycles.extend(familyCycles(blockMatrix, rows, cols))
    return cycles

def countSixCyclesBruteforce(blockMatrix, validate=True, columnGroup=None):
    """
    Description:
        Counts the (3,3) absorbing sets of a circulant
        block matrix through its 6-cycles.  Each pattern is
        worth p cycles; with validate every cycle is checked
        against the absorbing set definition and a failing
        one is reported instead of counted.  columnGroup,
        when given, maps a block column to its coupling
        position so mu can be split by column span
    Arguments:
        blockMatrix (in, BlockMatrix)    Circulant blocks only
        validate (in, bool)              Check every cycle
        columnGroup (in, callable)       Block column -> position
    Exceptions:
        NonCirculantBlockException
    Returns:
        (CountReport)    total, cycles per span and discrepancies
    """
    p = blockMatrix.getBlockSize()
    binary = blockMatrix.expand() if validate else None
    total = 0
    families = 0
    bySpan = {}
    discrepancies = []
    for rows, cols in sixCycleFamilies(blockMatrix):
        families += 1
        cycles = familyCycles(blockMatrix, rows, cols)
        if len(cycles) != p:
            discrepancies.append(Discrepancy("family-multiplicity", "pattern closes for %d offsets, not %d"
                                             % (len(cycles), p), {"block_rows": list(rows), "block_cols": list(cols)}))
        counted = 0
        for cycle in cycles:
            if binary is not None:
                witness = isAbsorbingSet(binary, cycle.cols)
                if witness is None or (witness.a, witness.b) != (3, 3):
                    discrepancies.append(Discrepancy("non-absorbing-cycle", "6-cycle is not a (3,3) absorbing set",
                                                     {"cols": list(cycle.cols), "rows": list(cycle.rows)}))
                    continue
            counted += 1
        total += counted
        if columnGroup is not None:
            groups = [columnGroup(j) for j in cols]
            span = max(groups) - min(groups)
            bySpan[span] = bySpan.get(span, 0) + counted
    log.info("block-level search: %d patterns, %d absorbing sets", families, total)
    mu = [bySpan.get(d, 0) for d in range(max(bySpan) + 1)] if bySpan else []
    return CountReport(CountMethod.Brute, total, mu=mu, discrepancies=discrepancies)

def countSixCyclesBitLevel(binary):
    """
    Description:
        Generic 6-cycle count over column triples.  For
        columns c1 < c2 < c3 sharing checks pairwise, every
        choice of three distinct shared checks is a cycle
    Arguments:
        binary (in, BinaryMatrix)    Any parity-check matrix
    Returns:
        (int)    Number of 6-cycles
    """
    columns = [set(rows) for rows in binary.columnNeighbors()]
    rows = binary.rowNeighbors()

    def later(c):
        return {d for r in columns[c] for d in rows[r] if d > c}

    total = 0
    for c1 in range(binary.getCols()):
        near1 = later(c1)
        for c2 in near1:
            shared12 = columns[c1] & columns[c2]
            for c3 in near1 & later(c2):
                shared23 = columns[c2] & columns[c3]
                shared31 = columns[c3] & columns[c1]
                total += sum(1 for a in shared12 for b in shared23 if b != a
                             for c in shared31 if c != a and c != b)
    return total
