import logging

from .BlockEntry import CirculantShift, ExplicitPermutation
from .BlockMatrix import BlockMatrix
from .Exceptions import (BandStructureException, DimensionMismatchException, UnsupportedStructureException,
                         ValidationException)
from .ExitCodes import CouplingMode
from .Permutation import Permutation

log = logging.getLogger(__name__)

def _position(i, L):
    # copy i of the lift sits at band position -i, so H_k lands k block rows below H_0
    return (-i) % L

def _entryFor(perm):
    size = perm.getDegree()
    e = (-perm(0)) % size
    if perm == Permutation.shift(size, e):
        return CirculantShift(e)
    return ExplicitPermutation(perm)

def _collect(local, expected, where):
    perms = {}
    for key, images in local.items():
        if len(images) != expected or len(set(images.values())) != expected:
            raise ValidationException("%s block %s is not a full permutation" % (where, key))
        perms[key] = Permutation([images[u] for u in range(expected)])
    return perms

def liftTailbiting(spec):
    """
    Description:
        Replaces every base edge labelled (k, lambda) by the
        JL x JL permutation tau_L^k (x) lambda.  This is the
        single graph lift giving the tailbiting code
    Arguments:
        spec (in, SCCodeSpec)    The code description
    Return:
        (BlockMatrix)    Base-shaped, block size J*L
    """
    L = spec.getL()
    base = spec.getBaseMatrix()
    entries = {}
    for edge, label in spec.getAssignment().getLabels().items():
        entries[edge] = ExplicitPermutation(Permutation.kronecker(Permutation.shift(L, label.getK()),
                                                                  label.getLambda()))
    return BlockMatrix(base.getRows(), base.getCols(), L * spec.getJ(), entries)

def reorder(lifted, L, J):
    """
    Description:
        Orders rows and columns by lift copy first and base
        index second, which gives the banded circulant form.
        J x J lambda blocks move intact
    Arguments:
        lifted (in, BlockMatrix)    Output of liftTailbiting
        L (in, int)                 Coupling length
        J (in, int)                 Terminal lift degree
    Exceptions:
        DimensionMismatchException
        ValidationException
    Return:
        (BlockMatrix)    L*rows x L*cols blocks of size J
    """
    if lifted.getBlockSize() != J * L:
        raise DimensionMismatchException("block size %d is not J*L = %d" % (lifted.getBlockSize(), J * L))
    R, C = lifted.getBlockRows(), lifted.getBlockCols()
    local = {}
    for (r, c), entry in lifted.getEntries().items():
        perm = entry.toPermutation(J * L)
        for a in range(J * L):
            i, u = divmod(a, J)
            i2, u2 = divmod(perm(a), J)
            local.setdefault((_position(i2, L) * R + r, _position(i, L) * C + c), {})[u] = u2
    entries = {key: _entryFor(perm) for key, perm in _collect(local, J, "reordered").items()}
    return BlockMatrix(L * R, L * C, J, entries)

def unreorder(reordered, L, J):
    """
    Description:
        Inverse of reorder
    Arguments:
        reordered (in, BlockMatrix)    Output of reorder
        L (in, int)                    Coupling length
        J (in, int)                    Terminal lift degree
    Exceptions:
        DimensionMismatchException
        ValidationException
    Return:
        (BlockMatrix)    Base-shaped, block size J*L
    """
    if reordered.getBlockSize() != J or reordered.getBlockRows() % L or reordered.getBlockCols() % L:
        raise DimensionMismatchException("%r is not a reordered matrix for L=%d, J=%d" % (reordered, L, J))
    R, C = reordered.getBlockRows() // L, reordered.getBlockCols() // L
    local = {}
    for (row, col), entry in reordered.getEntries().items():
        pr, r = divmod(row, R)
        pc, c = divmod(col, C)
        i2, i = _position(pr, L), _position(pc, L)
        perm = entry.toPermutation(J)
        images = local.setdefault((r, c), {})
        for u in range(J):
            images[i * J + u] = i2 * J + perm(u)
    entries = {key: ExplicitPermutation(perm) for key, perm in _collect(local, J * L, "lifted").items()}
    return BlockMatrix(R, C, J * L, entries)

def terminate(reordered, L, m):
    """
    Description:
        Unwraps the reordered tailbiting matrix: blocks
        that wrapped past the last block row move below it,
        giving L+m block rows per base row group
    Arguments:
        reordered (in, BlockMatrix)    Output of reorder
        L (in, int)                    Coupling length
        m (in, int)                    Memory, m < L
    Exceptions:
        BandStructureException
    Return:
        (BlockMatrix)    The terminated matrix
    """
    if reordered.getBlockRows() % L or reordered.getBlockCols() % L:
        raise BandStructureException("%r is not divisible into %d positions" % (reordered, L))
    if not 0 <= m < L:
        raise BandStructureException("memory %d needs 0 <= m < L = %d" % (m, L))
    R, C = reordered.getBlockRows() // L, reordered.getBlockCols() // L
    entries = {}
    for (row, col), entry in reordered.getEntries().items():
        pr, r = divmod(row, R)
        pc, c = divmod(col, C)
        if (pr - pc) % L > m:
            raise BandStructureException("block (%d, %d) lies %d positions off the band"
                                         % (row, col, (pr - pc) % L))
        if pr < pc:
            pr += L
        entries[(pr * R + r, col)] = entry
    return BlockMatrix((L + m) * R, L * C, reordered.getBlockSize(), entries)

def build(spec, banded=False):
    """
    Description:
        Lifts, reorders and, for terminated specs,
        terminates.  A tailbiting spec with reordered false
        comes back in lift order; terminated specs always
        come back banded
    Arguments:
        spec (in, SCCodeSpec)    The code description
        banded (in, bool)        Reorder even when the spec says not to
    Return:
        (BlockMatrix)    The parity-check matrix
    """
    lifted = liftTailbiting(spec)
    if spec.getMode() == CouplingMode.Tailbiting and not (spec.isReordered() or banded):
        return lifted
    matrix = reorder(lifted, spec.getL(), spec.getJ())
    if spec.getMode() == CouplingMode.Terminated:
        matrix = terminate(matrix, spec.getL(), spec.getM())
    log.debug("built %r", matrix)
    return matrix

def circulantForm(spec):
    """
    Description:
        Builds the banded matrix of a block-constant AB spec
        straight from B_m, with p x p circulant blocks.  Its
        expansion equals build(spec).expand()
    Arguments:
        spec (in, SCCodeSpec)    The code description
    Exceptions:
        UnsupportedStructureException
    Return:
        (BlockMatrix)    gamma*(L+m) x p*L blocks, gamma*L rows when tailbiting
    """
    grid = spec.getBlockGrid()
    if grid is None:
        raise UnsupportedStructureException("circulant form needs an AB base with one shift per block and J = 1")
    base = spec.getBase()
    gamma, p, L = base.getGamma(), base.getP(), spec.getL()
    tailbiting = spec.getMode() == CouplingMode.Tailbiting
    rows = gamma * (L if tailbiting else L + spec.getM())
    entries = {}
    for x in range(L):
        for t in range(gamma):
            for j in range(p):
                position = x + int(grid[t, j])
                if tailbiting:
                    position %= L
                entries[(position * gamma + t, x * p + j)] = CirculantShift(base.getExponent(t, j))
    return BlockMatrix(rows, p * L, p, entries)
