import numpy as np

from .BinaryMatrix import BinaryMatrix
from .Exceptions import DegreeMismatchException, InvalidAssignmentException, LabelRangeException

class EdgeAssignment(object):
    """
    Description:
        Maps every edge (nonzero position) of a base matrix
        to its LiftLabel (k, lambda)
    """
    def __init__(self, base, labels, m, J=1):
        """
        Description:
            Initializes this instance
        Arguments:
            base (in, BinaryMatrix)    The base matrix
            labels (in, dict)          (row, col) -> LiftLabel
            m (in, int)                Memory, every k must be <= m
            J (in, int)                Degree of every lambda
        Exceptions:
            InvalidAssignmentException
            LabelRangeException
            DegreeMismatchException
        Return:
            none
        """
        edges = set(base.getPositions())
        if set(labels) != edges:
            missing = len(edges - set(labels))
            extra = len(set(labels) - edges)
            raise InvalidAssignmentException("%d edges unlabelled, %d labels off the base" % (missing, extra))
        for edge, label in labels.items():
            if label.getK() > m:
                raise LabelRangeException("edge %s has k=%d > m=%d" % (edge, label.getK(), m))
            if label.getJ() != J:
                raise DegreeMismatchException("edge %s has lambda of degree %d, expected %d"
                                              % (edge, label.getJ(), J))
        self.__base = base
        self.__labels = dict(labels)
        self.__m = m
        self.__J = J
    def getBase(self):
        return self.__base
    def getLabels(self):
        """
        Description:
            Returns a copy of the label map
        Arguments:
            none
        Return:
            (dict)    (row, col) -> LiftLabel
        """
        return dict(self.__labels)
    def getLabel(self, row, col):
        return self.__labels[(row, col)]
    def getM(self):
        return self.__m
    def getJ(self):
        return self.__J
    def layers(self):
        """
        Description:
            Splits the base into H_0,...,H_m by the shift
            exponent of each edge
        Arguments:
            none
        Return:
            (list of BinaryMatrix)    m+1 matrices summing to the base
        """
        parts = [[] for _ in range(self.__m + 1)]
        for edge, label in self.__labels.items():
            parts[label.getK()].append(edge)
        return [BinaryMatrix(self.__base.getRows(), self.__base.getCols(), edges) for edges in parts]
    def blockGrid(self, p):
        """
        Description:
            Recovers B_m when every p x p block carries one
            shift and J = 1
        Arguments:
            p (in, int)    Block size of the base
        Return:
            (numpy.ndarray)    The grid, or None when not block constant
        """
        if self.__J != 1 or self.__base.getRows() % p or self.__base.getCols() % p:
            return None
        grid = np.full((self.__base.getRows() // p, self.__base.getCols() // p), -1, dtype=np.int64)
        for (r, c), label in self.__labels.items():
            seen = grid[r // p, c // p]
            if seen >= 0 and seen != label.getK():
                return None
            grid[r // p, c // p] = label.getK()
        if (grid < 0).any():
            return None
        return grid
    def __eq__(self, other):
        return (isinstance(other, EdgeAssignment) and self.__m == other.__m and self.__J == other.__J
                and self.__base == other.__base and self.__labels == other.__labels)
    def __repr__(self):
        return "EdgeAssignment(%d edges, m=%d, J=%d)" % (len(self.__labels), self.__m, self.__J)
