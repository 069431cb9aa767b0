import logging

import numpy as np

from .ABBase import ABBase
from .EdgeAssignment import EdgeAssignment
from .Exceptions import DimensionMismatchException, ValidationException
from .LambdaPolicy import LambdaPolicy
from .LiftLabel import LiftLabel
from .Permutation import Permutation

log = logging.getLogger(__name__)

# Stream splitting: stream s of seed x is PCG64(SeedSequence([x, s])).
# Method i draws stream e for the e-th edge in row-major order,
# method ii draws stream c for block column c.  Bump on any change.
RandomStream = "PCG64/SeedSequence-v1"

def generatorFor(seed, stream):
    """
    Description:
        Returns the generator of one stream of a seed
    Arguments:
        seed (in, int)      The user seed
        stream (in, int)    Edge or column index
    Return:
        (numpy.random.Generator)    The value
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), int(stream)])))

def _baseMatrix(base):
    return base.expand() if isinstance(base, ABBase) else base

def spreadCuttingVector(base, xi):
    """
    Description:
        Places block (i, j) in H_0 when j < xi_i and in H_1
        otherwise
    Arguments:
        base (in, ABBase)          The array-based base
        xi (in, CuttingVector)     The cutting vector
    Exceptions:
        DimensionMismatchException
    Return:
        (EdgeAssignment)    The value, with m = 1 (0 if xi_i = p for all i)
    """
    if (xi.getGamma(), xi.getP()) != (base.getGamma(), base.getP()):
        raise DimensionMismatchException("cutting vector for (%d, %d) used on %r"
                                         % (xi.getGamma(), xi.getP(), base))
    return assignmentFromBm(base, xi.toAssignmentMatrix())

def assignmentFromBm(base, bm, lambdaPolicy=None):
    """
    Description:
        Labels every edge of block (i, j) with k = B_m(i, j)
        and the lambda chosen by the policy
    Arguments:
        base (in, ABBase)                  The array-based base
        bm (in, AssignmentMatrixBm)        The assignment matrix
        lambdaPolicy (in, LambdaPolicy)    Defaults to identity, J = 1
    Exceptions:
        DimensionMismatchException
    Return:
        (EdgeAssignment)    The value
    """
    if (bm.getGamma(), bm.getP()) != (base.getGamma(), base.getP()):
        raise DimensionMismatchException("B_m is %dx%d, base has %dx%d blocks"
                                         % (bm.getGamma(), bm.getP(), base.getGamma(), base.getP()))
    policy = lambdaPolicy or LambdaPolicy(LambdaPolicy.Identity, 1)
    binary = base.expand()
    p = base.getP()
    labels = {}
    for r, c in binary.getPositions():
        i, j = r // p, c // p
        labels[(r, c)] = LiftLabel(bm.getEntry(i, j), policy.lambdaFor(i, j))
    return EdgeAssignment(binary, labels, bm.getM(), policy.getJ())

def spreadRandomMethodI(base, m, seed):
    """
    Description:
        Gives every edge an independent uniform shift in
        {0,...,m}
    Arguments:
        base (in, ABBase or BinaryMatrix)    The base
        m (in, int)                          Memory
        seed (in, int)                       The seed
    Return:
        (EdgeAssignment)    The value
    """
    binary = _baseMatrix(base)
    identity = Permutation.identity(1)
    labels = {edge: LiftLabel(int(generatorFor(seed, e).integers(0, m + 1)), identity)
              for e, edge in enumerate(binary.getPositions())}
    log.debug("method i spread %d edges over %d positions", len(labels), m + 1)
    return EdgeAssignment(binary, labels, m)

def spreadRandomMethodII(base, m, seed):
    """
    Description:
        For every variable node of degree d chooses d
        distinct positions among {0,...,m} uniformly and
        gives one to each of its edges, in row order
    Arguments:
        base (in, ABBase or BinaryMatrix)    The base
        m (in, int)                          Memory
        seed (in, int)                       The seed
    Exceptions:
        ValidationException
    Return:
        (EdgeAssignment)    The value
    """
    binary = _baseMatrix(base)
    identity = Permutation.identity(1)
    labels = {}
    for c, rows in enumerate(binary.columnNeighbors()):
        if len(rows) > m + 1:
            raise ValidationException("column %d has degree %d > m+1 = %d" % (c, len(rows), m + 1))
        if not rows:
            continue
        chosen = generatorFor(seed, c).choice(m + 1, size=len(rows), replace=False)
        for r, k in zip(rows, chosen):
            labels[(r, c)] = LiftLabel(int(k), identity)
    return EdgeAssignment(binary, labels, m)
