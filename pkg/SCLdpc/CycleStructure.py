from .Exceptions import ValidationException

class CycleStructure(object):
    """
    Description:
        An instance of this class holds the cycle type
        (c_1,...,c_n) of a permutation of degree n, where
        c_i is the number of cycles of length i
    """
    def __init__(self, counts):
        """
        Description:
            Initializes this instance
        Arguments:
            counts (in, sequence of int)    c_1..c_n
        Exceptions:
            ValidationException
        Return:
            none
        """
        counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in counts):
            raise ValidationException("negative cycle count")
        self.__counts = counts
        if sum((i + 1) * c for i, c in enumerate(counts)) != len(counts):
            raise ValidationException("cycle counts %s do not sum to the degree" % (counts,))
    def getCounts(self):
        """
        Description:
            Returns the cycle counts
        Arguments:
            none
        Return:
            (tuple)    (c_1,...,c_n)
        """
        return self.__counts
    def getDegree(self):
        return len(self.__counts)
    def getLengths(self):
        """
        Description:
            Returns one entry per cycle, ascending
        Arguments:
            none
        Return:
            (list of int)    The cycle lengths
        """
        lengths = []
        for i, c in enumerate(self.__counts):
            lengths.extend([i + 1] * c)
        return lengths
    def __eq__(self, other):
        return isinstance(other, CycleStructure) and self.__counts == other.__counts
    def __hash__(self):
        return hash(self.__counts)
    def __repr__(self):
        return "CycleStructure(%s)" % (self.__counts,)
