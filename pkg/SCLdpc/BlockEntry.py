from .Permutation import Permutation

class BlockEntry(object):
    """
    Description:
        This is an abstract class for the content of one
        block of a BlockMatrix
    """
    def toPermutation(self, size):
        """
        Description:
            Returns the block as a permutation of degree size,
            or None for a zero block
        Arguments:
            size (in, int)    The block size
        Return:
            (Permutation)    The value
        """
        pass
    def positions(self, size):
        """
        Description:
            Returns the local (row, column) ones of the block
        Arguments:
            size (in, int)    The block size
        Return:
            (list of tuple)    The value
        """
        perm = self.toPermutation(size)
        if perm is None:
            return []
        return [(i, j) for j, i in enumerate(perm.getImages())]

class ZeroBlock(BlockEntry):
    def toPermutation(self, size):
        return None
    def __eq__(self, other):
        return isinstance(other, ZeroBlock)
    def __hash__(self):
        return hash("zero")
    def __repr__(self):
        return "ZeroBlock()"

class CirculantShift(BlockEntry):
    """
    Description:
        The circulant block sigma^e, where sigma is the
        identity left-shifted by one.  Column j holds its
        one in row (j - e) mod size
    """
    def __init__(self, exponent):
        self.__exponent = int(exponent)
    def getExponent(self):
        """
        Description:
            Returns the exponent e
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__exponent
    def toPermutation(self, size):
        return Permutation.shift(size, self.__exponent)
    def __eq__(self, other):
        return isinstance(other, CirculantShift) and self.__exponent == other.__exponent
    def __hash__(self):
        return hash(("circulant", self.__exponent))
    def __repr__(self):
        return "CirculantShift(%d)" % self.__exponent

class ExplicitPermutation(BlockEntry):
    def __init__(self, permutation):
        self.__permutation = permutation
    def getPermutation(self):
        return self.__permutation
    def toPermutation(self, size):
        return self.__permutation
    def __eq__(self, other):
        return isinstance(other, ExplicitPermutation) and self.__permutation == other.__permutation
    def __hash__(self):
        return hash(("explicit", self.__permutation))
    def __repr__(self):
        return "ExplicitPermutation(%s)" % (list(self.__permutation.getImages()),)
