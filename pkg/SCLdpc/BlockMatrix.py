from .BinaryMatrix import BinaryMatrix
from .BlockEntry import CirculantShift, ExplicitPermutation, ZeroBlock
from .Exceptions import DimensionMismatchException, NonCirculantBlockException, ValidationException
from .Permutation import Permutation

class BlockMatrix(object):
    """
    Description:
        An immutable parity-check matrix made of square
        blocks.  Circulant exponents are kept symbolically so
        counters can read them without expanding; zero
        blocks are absent from the entry map
    """
    def __init__(self, blockRows, blockCols, blockSize, entries):
        """
        Description:
            Initializes this instance
        Arguments:
            blockRows (in, int)    Number of block rows
            blockCols (in, int)    Number of block columns
            blockSize (in, int)    Size of every block
            entries (in, dict)     (block row, block col) -> BlockEntry
        Exceptions:
            ValidationException
        Return:
            none
        """
        if blockSize < 1:
            raise ValidationException("block size must be positive")
        kept = {}
        for (r, c), entry in entries.items():
            if not (0 <= r < blockRows and 0 <= c < blockCols):
                raise ValidationException("block (%d, %d) outside %dx%d" % (r, c, blockRows, blockCols))
            if isinstance(entry, ZeroBlock):
                continue
            if isinstance(entry, ExplicitPermutation) and entry.getPermutation().getDegree() != blockSize:
                raise ValidationException("block (%d, %d) has degree %d, expected %d"
                                          % (r, c, entry.getPermutation().getDegree(), blockSize))
            kept[(r, c)] = entry
        self.__blockRows = blockRows
        self.__blockCols = blockCols
        self.__blockSize = blockSize
        self.__entries = kept
    def getBlockRows(self):
        """
        Description:
            Returns the number of block rows
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__blockRows
    def getBlockCols(self):
        """
        Description:
            Returns the number of block columns
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__blockCols
    def getBlockSize(self):
        """
        Description:
            Returns the block size
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__blockSize
    def getEntries(self):
        """
        Description:
            Returns a copy of the nonzero entry map
        Arguments:
            none
        Return:
            (dict)    (block row, block col) -> BlockEntry
        """
        return dict(self.__entries)
    def getEntry(self, blockRow, blockCol):
        return self.__entries.get((blockRow, blockCol), ZeroBlock())
    def columnSupport(self):
        """
        Description:
            Returns, for every block column, the ascending
            block rows holding a nonzero block
        Arguments:
            none
        Return:
            (list of tuple)    One entry per block column
        """
        support = [[] for _ in range(self.__blockCols)]
        for r, c in self.__entries:
            support[c].append(r)
        return [tuple(sorted(rows)) for rows in support]
    def expand(self):
        """
        Description:
            Expands every block to its bits: a circulant
            sigma^e becomes the matrix of tau^e, an explicit
            permutation its permutation matrix, zero blocks
            nothing
        Arguments:
            none
        Return:
            (BinaryMatrix)    The value
        """
        b = self.__blockSize
        positions = []
        for (r, c), entry in self.__entries.items():
            positions.extend((r * b + i, c * b + j) for i, j in entry.positions(b))
        return BinaryMatrix(self.__blockRows * b, self.__blockCols * b, positions)
    def __eq__(self, other):
        return (isinstance(other, BlockMatrix) and self.__blockRows == other.__blockRows
                and self.__blockCols == other.__blockCols and self.__blockSize == other.__blockSize
                and self.__entries == other.__entries)
    def __repr__(self):
        return "BlockMatrix(%dx%d blocks of %d, %d nonzero)" % (
            self.__blockRows, self.__blockCols, self.__blockSize, len(self.__entries))

    def _fromBinary(cls, binary, blockSize):
        """
        Description:
            Recovers the block structure of a binary matrix.
            Circulant permutation blocks become CirculantShift,
            other permutation blocks ExplicitPermutation
        Arguments:
            binary (in, BinaryMatrix)    The matrix
            blockSize (in, int)          The block size
        Exceptions:
            DimensionMismatchException
            NonCirculantBlockException
        Return:
            (BlockMatrix)    The value
        """
        b = blockSize
        if binary.getRows() % b or binary.getCols() % b:
            raise DimensionMismatchException("%dx%d is not divisible by %d" % (binary.getRows(), binary.getCols(), b))
        blocks = {}
        for r, c in binary.getPositions():
            blocks.setdefault((r // b, c // b), {})
            local = blocks[(r // b, c // b)]
            if c % b in local:
                raise NonCirculantBlockException(r // b, c // b)
            local[c % b] = r % b
        entries = {}
        for key, local in blocks.items():
            if len(local) != b or len(set(local.values())) != b:
                raise NonCirculantBlockException(*key)
            offsets = {(j - i) % b for j, i in local.items()}
            if len(offsets) == 1:
                entries[key] = CirculantShift(offsets.pop())
            else:
                entries[key] = ExplicitPermutation(Permutation([local[j] for j in range(b)]))
        return cls(binary.getRows() // b, binary.getCols() // b, b, entries)
    fromBinary = classmethod(_fromBinary)
