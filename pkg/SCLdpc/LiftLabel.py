from .Exceptions import LabelRangeException
from .Permutation import Permutation

class LiftLabel(object):
    """
    Description:
        The label (k, lambda) of one base edge.  It stands
        for the permutation tau_L^k (x) lambda of degree J*L
    """
    def __init__(self, k, lam, m=None):
        """
        Description:
            Initializes this instance
        Arguments:
            k (in, int)              Shift exponent, 0 <= k <= m
            lam (in, Permutation)    The terminal lift permutation, degree J
            m (in, int)              Optional memory used to bound k
        Exceptions:
            LabelRangeException
        Return:
            none
        """
        if k < 0 or (m is not None and k > m):
            raise LabelRangeException("k=%d outside [0, %s]" % (k, m))
        self.__k = int(k)
        self.__lambda = lam
    def getK(self):
        """
        Description:
            Returns the shift exponent
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__k
    def getLambda(self):
        """
        Description:
            Returns the terminal lift permutation
        Arguments:
            none
        Return:
            (Permutation)    The value
        """
        return self.__lambda
    def getJ(self):
        return self.__lambda.getDegree()
    def __eq__(self, other):
        return isinstance(other, LiftLabel) and self.__k == other.__k and self.__lambda == other.__lambda
    def __hash__(self):
        return hash((self.__k, self.__lambda))
    def __repr__(self):
        return "LiftLabel(k=%d, lambda=%s)" % (self.__k, list(self.__lambda.getImages()))

    def _plain(cls, k, J=1):
        return cls(k, Permutation.identity(J))
    plain = classmethod(_plain)
