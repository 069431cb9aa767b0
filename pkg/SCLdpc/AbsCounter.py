import logging
import time

from . import Coupler
from .BlockMatrix import BlockMatrix
from .BruteForceCounter import countSixCyclesBitLevel, countSixCyclesBruteforce
from .CountReport import CountReport, Discrepancy
from .Exceptions import NonCirculantBlockException, UsageException
from .ExitCodes import AssignmentKind, CountMethod, CouplingMode
from .LineCounter import countAbsCuttingVector, countAbsGeneral

log = logging.getLogger(__name__)

def blockView(spec):
    """
    Description:
        Returns the banded matrix of an AB spec with p x p
        circulant blocks, or None when the lift breaks the
        circulant structure
    Arguments:
        spec (in, SCCodeSpec)    The code description
    Returns:
        (BlockMatrix)    The value
    """
    if not spec.isAB() or spec.getJ() != 1:
        return None
    if spec.getBlockGrid() is not None:
        return Coupler.circulantForm(spec)
    try:
        return BlockMatrix.fromBinary(Coupler.build(spec, banded=True).expand(), spec.getBase().getP())
    except NonCirculantBlockException:
        return None

def countBrute(spec, validate=True):
    """
    Description:
        Brute force count: the block-level search when the
        spec keeps circulant blocks, the bit-level search
        otherwise
    Arguments:
        spec (in, SCCodeSpec)    The code description
        validate (in, bool)      Check every cycle is a (3,3) absorbing set
    Returns:
        (CountReport)    The value
    """
    L, m = spec.getL(), spec.getM()
    terminated = spec.getMode() == CouplingMode.Terminated
    view = blockView(spec)
    mu = []
    discrepancies = []
    if view is not None:
        p = view.getBlockSize()
        raw = countSixCyclesBruteforce(view, validate, (lambda j: j // p) if terminated else None)
        total = raw.getTotal()
        discrepancies = raw.getDiscrepancies()
        if terminated:
            cycles = raw.getMu() + [0] * (m + 1 - len(raw.getMu()))
            mu = [cycles[d] // (L - d) for d in range(m + 1)]
    else:
        log.info("no circulant block view, using the bit-level search")
        total = countSixCyclesBitLevel(Coupler.build(spec, banded=True).expand())
    base = spec.getBase() if spec.isAB() else None
    return CountReport(CountMethod.Brute, total, p=base.getP() if base else None,
                       gamma=base.getGamma() if base else None, L=L, m=m, mu=mu,
                       discrepancies=discrepancies, mode=spec.getMode())

def countLineMethod(spec):
    """
    Description:
        Line count: the region formulas for a terminated
        cutting-vector spec, piecewise counting for other
        block-constant specs, brute force for the rest
    Arguments:
        spec (in, SCCodeSpec)    The code description
    Returns:
        (CountReport)    The value
    """
    xi = spec.getCuttingVector()
    if (spec.getKind() == AssignmentKind.CuttingVector and xi is not None and xi.getGamma() == 3
            and spec.getMode() == CouplingMode.Terminated and spec.getM() == 1):
        return countAbsCuttingVector(xi, xi.getP(), spec.getL())
    return countAbsGeneral(spec, bruteFallback=countBrute)

def countAbs(spec, method=CountMethod.Line, validate=True):
    """
    Description:
        Counts the (3,3) absorbing sets of a spec.  With
        method both the two counts are compared and a
        disagreement is recorded on the line report
    Arguments:
        spec (in, SCCodeSpec)    The code description
        method (in, str)         CountMethod value
        validate (in, bool)      Check brute force cycles
    Exceptions:
        UsageException
    Returns:
        (CountReport)    The value
    """
    if method not in CountMethod.All:
        raise UsageException("unknown count method %r" % method)
    start = time.perf_counter()
    if method == CountMethod.Brute:
        report = countBrute(spec, validate)
    else:
        report = countLineMethod(spec)
        if method == CountMethod.Both:
            brute = countBrute(spec, validate)
            extra = list(brute.getDiscrepancies())
            if brute.getTotal() != report.getTotal():
                log.warning("line count %d disagrees with brute force %d", report.getTotal(), brute.getTotal())
                extra.append(Discrepancy("method-disagreement", "line and brute force totals differ",
                                         {"line": report.getTotal(), "brute": brute.getTotal()}))
            report = CountReport(CountMethod.Both, report.getTotal(), report.getP(), report.getGamma(),
                                 report.getL(), report.getM(), report.getMu(), report.getPerRegion(),
                                 report.getDiscrepancies() + extra, mode=report.getMode())
    elapsed = time.perf_counter() - start
    log.info("%s count of %r: %d in %.3fs", method, spec, report.getTotal(), elapsed)
    return report.withElapsed(elapsed)

def hasDisagreement(report):
    return any(d.kind == "method-disagreement" for d in report.getDiscrepancies())
