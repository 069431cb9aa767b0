import math

import numpy as np

from .CycleStructure import CycleStructure
from .Exceptions import DegreeMismatchException, InvalidPermutationException

class Permutation(object):
    """
    Description:
        An immutable bijection on {0,...,n-1}.  The matrix
        of a permutation has a one in (i,j) iff j maps to i,
        and composition is function application: the right
        operand acts first
    """
    def __init__(self, images):
        """
        Description:
            Initializes this instance
        Arguments:
            images (in, sequence of int)    images[j] is the image of j
        Exceptions:
            InvalidPermutationException
        Return:
            none
        """
        images = tuple(int(x) for x in images)
        if len(images) < 1:
            raise InvalidPermutationException("degree must be positive")
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutationException("images %s are not a bijection" % (images,))
        self.__images = images
    def getDegree(self):
        """
        Description:
            Returns the degree n
        Arguments:
            none
        Return:
            (int)    The value
        """
        return len(self.__images)
    def getImages(self):
        """
        Description:
            Returns the image tuple
        Arguments:
            none
        Return:
            (tuple)    The value
        """
        return self.__images
    def __call__(self, x):
        return self.__images[x]
    def __eq__(self, other):
        return isinstance(other, Permutation) and self.__images == other.__images
    def __hash__(self):
        return hash(self.__images)
    def __repr__(self):
        return "Permutation(%s)" % (list(self.__images),)
    def isIdentity(self):
        return all(i == x for i, x in enumerate(self.__images))
    def compose(self, other):
        """
        Description:
            Returns self o other, so other acts first
        Arguments:
            other (in, Permutation)    The right operand
        Exceptions:
            DegreeMismatchException
        Return:
            (Permutation)    x -> self(other(x))
        """
        if other.getDegree() != self.getDegree():
            raise DegreeMismatchException("%d != %d" % (self.getDegree(), other.getDegree()))
        return Permutation([self.__images[y] for y in other.getImages()])
    def inverse(self):
        inv = [0] * len(self.__images)
        for j, i in enumerate(self.__images):
            inv[i] = j
        return Permutation(inv)
    def power(self, t):
        """
        Description:
            Returns self^t for any integer t
        Arguments:
            t (in, int)    The exponent, may be negative
        Return:
            (Permutation)    The value
        """
        base = self if t >= 0 else self.inverse()
        result = Permutation.identity(self.getDegree())
        for _ in range(abs(t) % max(1, self.order())):
            result = base.compose(result)
        return result
    def cycles(self):
        """
        Description:
            Returns the disjoint cycles, each starting at its
            smallest element, ordered by that element
        Arguments:
            none
        Return:
            (list of tuple)    The cycles
        """
        seen = [False] * len(self.__images)
        result = []
        for start in range(len(self.__images)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.__images[x]
            result.append(tuple(cycle))
        return result
    def cycleStructure(self):
        counts = [0] * len(self.__images)
        for cycle in self.cycles():
            counts[len(cycle) - 1] += 1
        return CycleStructure(counts)
    def order(self):
        """
        Description:
            Returns the order, the lcm of the cycle lengths
        Arguments:
            none
        Return:
            (int)    The value
        """
        return math.lcm(*[len(c) for c in self.cycles()])
    def toMatrix(self):
        """
        Description:
            Returns the n x n permutation matrix with
            M[self(j), j] = 1
        Arguments:
            none
        Return:
            (numpy.ndarray)    uint8 matrix
        """
        n = len(self.__images)
        matrix = np.zeros((n, n), dtype=np.uint8)
        matrix[list(self.__images), np.arange(n)] = 1
        return matrix

    def _identity(cls, n):
        return cls(range(n))
    identity = classmethod(_identity)

    def _shift(cls, n, k=1):
        """
        Description:
            Returns tau_n^k where tau_n(j) = (j-1) mod n, the
            identity matrix left-shifted by one
        Arguments:
            n (in, int)    The degree, n >= 1
            k (in, int)    The exponent, reduced mod n
        Exceptions:
            InvalidPermutationException
        Return:
            (Permutation)    The value
        """
        if n < 1:
            raise InvalidPermutationException("degree must be positive")
        return cls([(j - k) % n for j in range(n)])
    shift = classmethod(_shift)

    def _kronecker(cls, p, q):
        """
        Description:
            Returns p (x) q: index i*J+u maps to p(i)*J+q(u),
            whose matrix is the Kronecker product of the two
            permutation matrices
        Arguments:
            p (in, Permutation)    Outer factor, degree L
            q (in, Permutation)    Inner factor, degree J
        Return:
            (Permutation)    Degree J*L
        """
        J = q.getDegree()
        outer = p.getImages()
        inner = q.getImages()
        return cls([outer[i] * J + inner[u] for i in range(p.getDegree()) for u in range(J)])
    kronecker = classmethod(_kronecker)
