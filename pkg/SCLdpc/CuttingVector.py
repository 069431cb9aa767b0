import numpy as np

from .AssignmentMatrix import AssignmentMatrixBm
from .Exceptions import InvalidCuttingVectorException

class CuttingVector(object):
    """
    Description:
        The cutting vector xi = (xi_0,...,xi_{gamma-1}).  Block
        (i, j) goes to H_0 when j < xi_i and to H_1 otherwise
    """
    def __init__(self, xi, p, strict=False):
        """
        Description:
            Initializes this instance
        Arguments:
            xi (in, sequence of int)    The cut positions, each in [0, p]
            p (in, int)                 Number of block columns
            strict (in, bool)           Require strictly increasing entries
        Exceptions:
            InvalidCuttingVectorException
        Return:
            none
        """
        xi = tuple(int(x) for x in xi)
        if not xi:
            raise InvalidCuttingVectorException("empty cutting vector")
        if any(x < 0 or x > p for x in xi):
            raise InvalidCuttingVectorException("entries of %s outside [0, %d]" % (xi, p))
        for a, b in zip(xi, xi[1:]):
            if b < a or (strict and b == a):
                raise InvalidCuttingVectorException("%s is not %s" % (xi, "increasing" if strict else "nondecreasing"))
        self.__xi = xi
        self.__p = p
    def getXi(self):
        """
        Description:
            Returns the cut positions
        Arguments:
            none
        Return:
            (tuple)    The value
        """
        return self.__xi
    def getP(self):
        return self.__p
    def getGamma(self):
        return len(self.__xi)
    def offsets(self):
        """
        Description:
            Returns the 0/1 grid of coupling offsets, 1 where
            the block belongs to H_1
        Arguments:
            none
        Return:
            (numpy.ndarray)    gamma x p grid
        """
        return (np.arange(self.__p)[None, :] >= np.array(self.__xi)[:, None]).astype(np.int64)
    def toAssignmentMatrix(self):
        """
        Description:
            Returns the same spreading as a B_m matrix.  The
            memory is 1 unless every block stays in H_0
        Arguments:
            none
        Return:
            (AssignmentMatrixBm)    The value
        """
        grid = self.offsets()
        return AssignmentMatrixBm(grid, int(grid.max()))
    def __eq__(self, other):
        return isinstance(other, CuttingVector) and (self.__xi, self.__p) == (other.__xi, other.__p)
    def __hash__(self):
        return hash((self.__xi, self.__p))
    def __repr__(self):
        return "CuttingVector(%s, p=%d)" % (list(self.__xi), self.__p)

    def _parse(cls, text, p, strict=False):
        try:
            xi = [int(x) for x in text.replace(" ", "").split(",") if x]
        except ValueError:
            raise InvalidCuttingVectorException("cannot parse %r" % text)
        return cls(xi, p, strict)
    parse = classmethod(_parse)

    def _enumerate(cls, gamma, p, strict=False):
        """
        Description:
            Yields every valid cutting vector in lexicographic
            order
        Arguments:
            gamma (in, int)      Length of the vector
            p (in, int)          Number of block columns
            strict (in, bool)    Only strictly increasing vectors
        Return:
            (generator of CuttingVector)    The vectors
        """
        def extend(prefix):
            if len(prefix) == gamma:
                yield cls(prefix, p, strict)
                return
            low = 0 if not prefix else prefix[-1] + (1 if strict else 0)
            for x in range(low, p + 1):
                yield from extend(prefix + [x])
        yield from extend([])
    enumerate = classmethod(_enumerate)
