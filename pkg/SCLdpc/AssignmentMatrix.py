import numpy as np

from .Exceptions import InvalidAssignmentException, SpecFormatException

class AssignmentMatrixBm(object):
    """
    Description:
        The (m+1)-ary permutation assignment matrix B_m.
        Entry M in position (i, j) lifts every edge of block
        (i, j) of the base by tau_L^M
    """
    def __init__(self, entries, m=None):
        """
        Description:
            Initializes this instance
        Arguments:
            entries (in, array-like)    gamma x p integer grid
            m (in, int)                 Memory, defaults to the largest entry
        Exceptions:
            InvalidAssignmentException
        Return:
            none
        """
        grid = np.array(entries, dtype=np.int64)
        if grid.ndim != 2 or grid.size == 0:
            raise InvalidAssignmentException("B_m must be a non-empty two-dimensional grid")
        m = int(grid.max()) if m is None else int(m)
        if grid.min() < 0 or grid.max() > m:
            raise InvalidAssignmentException("entries must lie in [0, %d]" % m)
        if grid.max() != m:
            raise InvalidAssignmentException("no entry equals the memory %d" % m)
        grid.setflags(write=False)
        self.__grid = grid
        self.__m = m
    def getM(self):
        """
        Description:
            Returns the memory m
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__m
    def getEntries(self):
        """
        Description:
            Returns the read-only gamma x p grid
        Arguments:
            none
        Return:
            (numpy.ndarray)    The value
        """
        return self.__grid
    def getEntry(self, i, j):
        return int(self.__grid[i, j])
    def getGamma(self):
        return self.__grid.shape[0]
    def getP(self):
        return self.__grid.shape[1]
    def toRows(self):
        return self.__grid.tolist()
    def toText(self):
        """
        Description:
            Returns the grid as text, one row per line with
            space separated entries
        Arguments:
            none
        Return:
            (str)    The value
        """
        return "".join(" ".join(str(v) for v in row) + "\n" for row in self.toRows())
    def __eq__(self, other):
        return (isinstance(other, AssignmentMatrixBm) and self.__m == other.__m
                and np.array_equal(self.__grid, other.__grid))
    def __hash__(self):
        return hash((self.__m, tuple(map(tuple, self.toRows()))))
    def __repr__(self):
        return "AssignmentMatrixBm(m=%d, %s)" % (self.__m, self.toRows())

    def _fromText(cls, text, m=None):
        """
        Description:
            Parses a grid written by toText
        Arguments:
            text (in, str)    The grid text
            m (in, int)       Optional memory
        Exceptions:
            SpecFormatException
            InvalidAssignmentException
        Return:
            (AssignmentMatrixBm)    The value
        """
        rows = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                rows.append([int(word) for word in line.split()])
            except ValueError:
                raise SpecFormatException(number, "non-integer entry")
            if len(rows[-1]) != len(rows[0]):
                raise SpecFormatException(number, "ragged row")
        return cls(rows, m)
    fromText = classmethod(_fromText)
