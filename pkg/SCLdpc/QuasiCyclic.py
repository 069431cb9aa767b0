from .Exceptions import DimensionMismatchException

def isQuasiCyclic(binary, blockSize):
    """
    Description:
        Tells whether every blockSize x blockSize block is
        zero or circulant, each row being the cyclic right
        shift of the row above
    Arguments:
        binary (in, BinaryMatrix)    The matrix
        blockSize (in, int)          The block size
    Exceptions:
        DimensionMismatchException
    Returns:
        (bool)    The value
    """
    b = blockSize
    if b < 1 or binary.getRows() % b or binary.getCols() % b:
        raise DimensionMismatchException("%dx%d is not divisible by %d" % (binary.getRows(), binary.getCols(), b))
    blocks = {}
    for r, c in binary.getPositions():
        blocks.setdefault((r // b, c // b), set()).add((r % b, c % b))
    for ones in blocks.values():
        if any(((i + 1) % b, (j + 1) % b) not in ones for i, j in ones):
            return False
    return True
