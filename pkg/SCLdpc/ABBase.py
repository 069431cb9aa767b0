import numpy as np

from .BlockEntry import CirculantShift
from .BlockMatrix import BlockMatrix
from .Exceptions import NotPrimeException, ValidationException

def isPrime(n):
    """
    Description:
        Trial division primality test, enough for the
        small moduli used here
    Arguments:
        n (in, int)    The candidate
    Returns:
        (bool)    The value
    """
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True

class ABBase(object):
    """
    Description:
        The array-based base matrix H(gamma, p): block (i, j)
        is sigma^{(i*j) mod p} for a prime p
    """
    def __init__(self, gamma, p):
        """
        Description:
            Initializes this instance
        Arguments:
            gamma (in, int)    Number of block rows, 1 <= gamma <= p
            p (in, int)        Prime circulant size
        Exceptions:
            NotPrimeException
            ValidationException
        Return:
            none
        """
        if not isPrime(p):
            raise NotPrimeException(p)
        if not 1 <= gamma <= p:
            raise ValidationException("gamma=%d outside [1, %d]" % (gamma, p))
        self.__gamma = gamma
        self.__p = p
        exponents = np.outer(np.arange(gamma), np.arange(p)) % p
        exponents.setflags(write=False)
        self.__exponents = exponents
    def getGamma(self):
        """
        Description:
            Returns the number of block rows
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__gamma
    def getP(self):
        """
        Description:
            Returns the circulant size
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__p
    def getExponents(self):
        """
        Description:
            Returns the read-only gamma x p exponent table
        Arguments:
            none
        Return:
            (numpy.ndarray)    e(i, j) = i*j mod p
        """
        return self.__exponents
    def getExponent(self, i, j):
        return int(self.__exponents[i, j])
    def toBlockMatrix(self):
        return BlockMatrix(self.__gamma, self.__p, self.__p,
                           {(i, j): CirculantShift(self.getExponent(i, j))
                            for i in range(self.__gamma) for j in range(self.__p)})
    def expand(self):
        """
        Description:
            Returns the gamma*p x p^2 binary matrix
        Arguments:
            none
        Return:
            (BinaryMatrix)    The value
        """
        return self.toBlockMatrix().expand()
    def __eq__(self, other):
        return isinstance(other, ABBase) and (self.__gamma, self.__p) == (other.__gamma, other.__p)
    def __hash__(self):
        return hash((self.__gamma, self.__p))
    def __repr__(self):
        return "ABBase(gamma=%d, p=%d)" % (self.__gamma, self.__p)
