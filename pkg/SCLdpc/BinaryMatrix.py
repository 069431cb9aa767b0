import numpy as np

from .Exceptions import ValidationException

class BinaryMatrix(object):
    """
    Description:
        An immutable sparse 0/1 matrix stored as the set of
        its nonzero (row, column) positions.  This is the
        Tanner graph every brute force count runs on
    """
    def __init__(self, rows, cols, positions):
        """
        Description:
            Initializes this instance
        Arguments:
            rows (in, int)                  Number of rows (check nodes)
            cols (in, int)                  Number of columns (variable nodes)
            positions (in, iterable)        (row, column) pairs of the ones
        Exceptions:
            ValidationException
        Return:
            none
        """
        if rows < 0 or cols < 0:
            raise ValidationException("negative dimensions")
        positions = [(int(r), int(c)) for r, c in positions]
        for r, c in positions:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValidationException("position (%d, %d) outside %dx%d" % (r, c, rows, cols))
        unique = frozenset(positions)
        if len(unique) != len(positions):
            raise ValidationException("duplicate positions")
        self.__rows = rows
        self.__cols = cols
        self.__positions = unique
        self.__columnNeighbors = None
        self.__rowNeighbors = None
    def getRows(self):
        """
        Description:
            Returns the number of rows
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__rows
    def getCols(self):
        """
        Description:
            Returns the number of columns
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__cols
    def getPositions(self):
        """
        Description:
            Returns the nonzero positions in row-major order
        Arguments:
            none
        Return:
            (list of tuple)    The value
        """
        return sorted(self.__positions)
    def columnNeighbors(self):
        """
        Description:
            Returns, for every column, the ascending tuple
            of rows holding a one
        Arguments:
            none
        Return:
            (list of tuple)    One entry per column
        """
        if self.__columnNeighbors is None:
            lists = [[] for _ in range(self.__cols)]
            for r, c in self.__positions:
                lists[c].append(r)
            self.__columnNeighbors = [tuple(sorted(x)) for x in lists]
        return self.__columnNeighbors
    def rowNeighbors(self):
        if self.__rowNeighbors is None:
            lists = [[] for _ in range(self.__rows)]
            for r, c in self.__positions:
                lists[r].append(c)
            self.__rowNeighbors = [tuple(sorted(x)) for x in lists]
        return self.__rowNeighbors
    def columnWeights(self):
        return [len(x) for x in self.columnNeighbors()]
    def rowWeights(self):
        return [len(x) for x in self.rowNeighbors()]
    def submatrix(self, rows, cols):
        """
        Description:
            Returns the submatrix on the given rows and columns,
            reindexed in the order supplied
        Arguments:
            rows (in, sequence of int)    Rows to keep
            cols (in, sequence of int)    Columns to keep
        Return:
            (BinaryMatrix)    The value
        """
        rowIndex = {r: i for i, r in enumerate(rows)}
        colIndex = {c: i for i, c in enumerate(cols)}
        return BinaryMatrix(len(rowIndex), len(colIndex),
                            [(rowIndex[r], colIndex[c]) for r, c in self.__positions
                             if r in rowIndex and c in colIndex])
    def toDense(self):
        dense = np.zeros((self.__rows, self.__cols), dtype=np.uint8)
        if self.__positions:
            rows, cols = zip(*self.__positions)
            dense[list(rows), list(cols)] = 1
        return dense
    def __eq__(self, other):
        return (isinstance(other, BinaryMatrix) and self.__rows == other.__rows
                and self.__cols == other.__cols and self.__positions == other.__positions)
    def __hash__(self):
        return hash((self.__rows, self.__cols, self.__positions))
    def __repr__(self):
        return "BinaryMatrix(%dx%d, nnz=%d)" % (self.__rows, self.__cols, len(self.__positions))

    def _fromDense(cls, dense):
        """
        Description:
            Builds a matrix from a dense 0/1 array
        Arguments:
            dense (in, array-like)    Two-dimensional array
        Exceptions:
            ValidationException
        Return:
            (BinaryMatrix)    The value
        """
        dense = np.asarray(dense)
        if dense.ndim != 2:
            raise ValidationException("expected a two-dimensional array")
        if not np.isin(dense, (0, 1)).all():
            raise ValidationException("entries must be 0 or 1")
        rows, cols = np.nonzero(dense)
        return cls(dense.shape[0], dense.shape[1], zip(rows.tolist(), cols.tolist()))
    fromDense = classmethod(_fromDense)

def hasFourCycle(binary):
    """
    Description:
        Returns True iff two columns share two or more rows
    Arguments:
        binary (in, BinaryMatrix)    The matrix
    Return:
        (bool)    The value
    """
    seen = set()
    for neighbors in binary.columnNeighbors():
        for i in range(len(neighbors)):
            for j in range(i + 1, len(neighbors)):
                pair = (neighbors[i], neighbors[j])
                if pair in seen:
                    return True
                seen.add(pair)
    return False
