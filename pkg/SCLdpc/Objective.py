import logging

import numpy as np

from .ABBase import ABBase
from .AbsCounter import countAbs
from .AssignmentMatrix import AssignmentMatrixBm
from .CodeFactory import CodeFactory
from .Exceptions import ValidationException
from .ExitCodes import AssignmentKind, CountMethod, CouplingMode
from .WindowedCounter import countAbsWindowed, windowPlacements

log = logging.getLogger(__name__)

def cycleFamilies(p):
    """
    Description:
        Lists the 2*C(p,2) cycle families of H(3, p) as
        (j1, j2, j3, t1, t2): j1 < j2 share the type-0 row,
        the third column meets j1 through type t1 and j2
        through type t2
    Arguments:
        p (in, int)    Prime circulant size
    Returns:
        (numpy.ndarray)    F x 5 integer array
    """
    rows = []
    for j1 in range(p):
        for j2 in range(j1 + 1, p):
            rows.append((j1, j2, (2 * j2 - j1) % p, 1, 2))
            rows.append((j1, j2, (2 * j1 - j2) % p, 2, 1))
    return np.array(rows, dtype=np.int64).reshape(-1, 5)

class Objective(object):
    """
    Description:
        The quantity the optimizer minimizes for 3 x p B_m
        grids: the (3,3) absorbing sets of the terminated
        code, or their sum over the placements of a window.
        Grids are scored in batches straight from the cycle
        families; report() recounts one grid with the
        counting modules
    """
    Full='full'
    Windowed='windowed'

    def __init__(self, p, L, m, window=None, backend=CountMethod.Line):
        """
        Description:
            Initializes this instance
        Arguments:
            p (in, int)                Prime circulant size
            L (in, int)                Coupling length
            m (in, int)                Memory
            window (in, WindowSpec)    Window for the windowed kind
            backend (in, str)          CountMethod.Line or CountMethod.Brute for report()
        Exceptions:
            ValidationException
            WindowSpecException
        Return:
            none
        """
        if m < 0 or m > L - 1:
            raise ValidationException("memory m=%d needs 0 <= m <= L-1 = %d" % (m, L - 1))
        if backend not in (CountMethod.Line, CountMethod.Brute):
            raise ValidationException("objective backend must be line or brute, got %r" % backend)
        self.__base = ABBase(3, p)
        self.__L = L
        self.__m = m
        self.__window = window
        self.__backend = backend
        self.__families = cycleFamilies(p)
        self.__positions = windowPlacements(L, m, 3, window) if window is not None else []
    def getKind(self):
        return self.Full if self.__window is None else self.Windowed
    def getP(self):
        return self.__base.getP()
    def getGamma(self):
        return 3
    def getL(self):
        return self.__L
    def getM(self):
        return self.__m
    def getWindow(self):
        return self.__window
    def getBackend(self):
        return self.__backend
    def describe(self):
        if self.__window is None:
            return "full"
        return "window:%d" % self.__window.getS()
    def evaluateMany(self, grids, assigned=None):
        """
        Description:
            Scores a batch of grids.  With assigned, only the
            families whose three block columns are assigned
            are scored, which bounds every completion from below
        Arguments:
            grids (in, array-like)      N x 3 x p grids
            assigned (in, array-like)   N x p booleans, optional
        Returns:
            (numpy.ndarray)    N integer scores
        """
        B = np.asarray(grids, dtype=np.int64)
        F = self.__families
        j1, j2, j3, t1, t2 = F[:, 0], F[:, 1], F[:, 2], F[:, 3], F[:, 4]
        x2 = B[:, 0, j1] - B[:, 0, j2]
        x3 = B[:, t1, j1] - B[:, t1, j3]
        closes = x2 + B[:, t2, j2] == x3 + B[:, t2, j3]
        if self.__window is None:
            span = np.maximum(np.maximum(x2, x3), 0) - np.minimum(np.minimum(x2, x3), 0)
            weight = np.where(closes, np.maximum(self.__L - span, 0), 0)
        else:
            weight = np.where(closes, self._windowPlacements(B, x2, x3), 0)
        if assigned is not None:
            mask = np.asarray(assigned, dtype=bool)
            weight = weight * (mask[:, j1] & mask[:, j2] & mask[:, j3])
        return self.getP() * weight.sum(axis=1)
    def _windowPlacements(self, B, x2, x3):
        F = self.__families
        L, m = self.__L, self.__m
        g = np.arange(-m, L + m).reshape(1, 1, -1)
        columns = ((np.zeros_like(x2), F[:, 0]), (x2, F[:, 1]), (x3, F[:, 2]))
        total = np.zeros(x2.shape, dtype=np.int64)
        for position in self.__positions:
            inside = np.ones(x2.shape + (g.shape[-1],), dtype=bool)
            for offset, j in columns:
                group = g + offset[:, :, None]
                inside &= (group >= max(position.firstGroup, 0)) & (group < min(position.stopGroup, L))
                for t in range(3):
                    row = 3 * (group + B[:, t, j][:, :, None]) + t
                    inside &= (row >= position.firstRow) & (row < position.stopRow)
            total += inside.sum(axis=2)
        return total
    def evaluate(self, grid):
        return int(self.evaluateMany(np.asarray(grid)[None, :, :])[0])
    def spec(self, grid):
        """
        Description:
            Returns the terminated bm spec of a grid
        Arguments:
            grid (in, array-like)    3 x p grid with max entry m
        Returns:
            (SCCodeSpec)    The value
        """
        return CodeFactory.createInstance(AssignmentKind.Bm, self.__base, self.__L, self.__m,
                                          CouplingMode.Terminated, assignmentMatrix=AssignmentMatrixBm(grid, self.__m))
    def report(self, grid, validate=False, threads=1, backend=None):
        """
        Description:
            Recounts one grid with the counting modules and
            the configured backend
        Arguments:
            grid (in, array-like)    3 x p grid
            validate (in, bool)      Check brute force cycles
            threads (in, int)        Parallel jobs for windows
        Returns:
            (CountReport or WindowReport)    The value
        """
        return self.reportFor(self.spec(grid), validate, threads, backend)
    def reportFor(self, spec, validate=False, threads=1, backend=None):
        """Counts a spec the way this objective scores it."""
        backend = backend or self.__backend
        if self.__window is None:
            return countAbs(spec, backend, validate)
        return countAbsWindowed(spec, self.__window, backend, threads)
