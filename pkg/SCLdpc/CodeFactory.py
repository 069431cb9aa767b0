from . import EdgeSpreader
from .ABBase import ABBase
from .Exceptions import UsageException
from .ExitCodes import AssignmentKind, CouplingMode
from .LambdaPolicy import LambdaPolicy
from .SCCodeSpec import SCCodeSpec

class CodeFactory(object):
    """
    Description:
        This is a class factory for creating SCCodeSpec
        instances from one of the assignment kinds
    """
    def _createInstance(cls, kind, base, L, m=None, mode=CouplingMode.Terminated, cuttingVector=None,
                        assignmentMatrix=None, seed=None, lambdaPolicy=None, reordered=True, baseSource="ab"):
        """
        Description:
            Spreads the base edges with the requested kind and
            wraps the result in a spec
        Arguments:
            kind (in, str)                  AssignmentKind value
            base (in, ABBase or BinaryMatrix)    The base
            L (in, int)                     Coupling length
            m (in, int)                     Memory; implied by xi or B_m when omitted
            mode (in, str)                  CouplingMode value
            cuttingVector (in, CuttingVector)          Needed by the cutting-vector kind
            assignmentMatrix (in, AssignmentMatrixBm)  Needed by the bm kind
            seed (in, int)                  Needed by the random kinds
            lambdaPolicy (in, LambdaPolicy)    Lambdas of the bm kind
            reordered (in, bool)            Emit the banded form
            baseSource (in, str)            "ab" or "alist:PATH"
        Exceptions:
            UsageException
            ValidationException
        Returns:
            (SCCodeSpec)    The value
        """
        needsAB = kind in (AssignmentKind.CuttingVector, AssignmentKind.Bm)
        if needsAB and not isinstance(base, ABBase):
            raise UsageException("assignment %s needs an ab base" % kind)
        if kind == AssignmentKind.CuttingVector:
            if cuttingVector is None:
                raise UsageException("cutting-vector assignment needs xi")
            assignment = EdgeSpreader.spreadCuttingVector(base, cuttingVector)
            lambdaPolicy = None
        elif kind == AssignmentKind.Bm:
            if assignmentMatrix is None:
                raise UsageException("bm assignment needs a B_m grid")
            lambdaPolicy = lambdaPolicy or LambdaPolicy(LambdaPolicy.Identity, 1)
            assignment = EdgeSpreader.assignmentFromBm(base, assignmentMatrix, lambdaPolicy)
        elif kind in (AssignmentKind.RandomI, AssignmentKind.RandomII):
            if m is None or seed is None:
                raise UsageException("%s assignment needs m and a seed" % kind)
            spread = (EdgeSpreader.spreadRandomMethodI if kind == AssignmentKind.RandomI
                      else EdgeSpreader.spreadRandomMethodII)
            assignment = spread(base, m, seed)
            lambdaPolicy = None
        else:
            raise UsageException("unknown assignment kind %r" % kind)
        if m is not None and m != assignment.getM():
            raise UsageException("m=%d conflicts with the memory %d implied by the assignment"
                                 % (m, assignment.getM()))
        return SCCodeSpec(base, L, assignment.getM(), assignment.getJ(), assignment, mode, reordered, kind,
                          cuttingVector if kind == AssignmentKind.CuttingVector else None,
                          assignmentMatrix if kind == AssignmentKind.Bm else None,
                          seed if kind in (AssignmentKind.RandomI, AssignmentKind.RandomII) else None,
                          lambdaPolicy, baseSource)
    createInstance = classmethod(_createInstance)
