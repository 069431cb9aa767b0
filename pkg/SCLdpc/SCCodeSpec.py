from .ABBase import ABBase
from .Exceptions import DegreeMismatchException, UsageException, ValidationException
from .ExitCodes import AssignmentKind, CouplingMode

class SCCodeSpec(object):
    """
    Description:
        Everything needed to build one spatially coupled
        code: the base, the coupling length L, the memory
        m, the terminal lift degree J, the edge labels and
        the coupling mode.  The way the labels were made
        (kind, xi, B_m, seed, lambda policy) is kept so the
        spec can be written back out
    """
    def __init__(self, base, L, m, J, assignment, mode, reordered=True, kind=None,
                 cuttingVector=None, assignmentMatrix=None, seed=None, lambdaPolicy=None, baseSource="ab"):
        """
        Description:
            Initializes this instance
        Arguments:
            base (in, ABBase or BinaryMatrix)      The base
            L (in, int)                            Coupling length
            m (in, int)                            Memory, m < L
            J (in, int)                            Terminal lift degree
            assignment (in, EdgeAssignment)        The edge labels
            mode (in, str)                         CouplingMode value
            reordered (in, bool)                   Emit the banded form
            kind (in, str)                         AssignmentKind value
            cuttingVector (in, CuttingVector)      Source of a cutting-vector spec
            assignmentMatrix (in, AssignmentMatrixBm)    Source of a B_m spec
            seed (in, int)                         Seed of a random spec
            lambdaPolicy (in, LambdaPolicy)        Source of the lambdas
            baseSource (in, str)                   "ab" or "alist:PATH"
        Exceptions:
            UsageException
            ValidationException
            DegreeMismatchException
        Return:
            none
        """
        if mode not in CouplingMode.All:
            raise UsageException("unknown mode %r" % mode)
        if kind is not None and kind not in AssignmentKind.All:
            raise UsageException("unknown assignment kind %r" % kind)
        if L < 1 or J < 1:
            raise ValidationException("L=%d and J=%d must be positive" % (L, J))
        if m < 0 or m > L - 1:
            raise ValidationException("memory m=%d needs 0 <= m <= L-1 = %d" % (m, L - 1))
        if assignment.getM() != m:
            raise ValidationException("assignment memory %d differs from m=%d" % (assignment.getM(), m))
        if assignment.getJ() != J:
            raise DegreeMismatchException("assignment has J=%d, spec has J=%d" % (assignment.getJ(), J))
        self.__base = base
        self.__L = L
        self.__m = m
        self.__J = J
        self.__assignment = assignment
        self.__mode = mode
        self.__reordered = bool(reordered)
        self.__kind = kind
        self.__cuttingVector = cuttingVector
        self.__assignmentMatrix = assignmentMatrix
        self.__seed = seed
        self.__lambdaPolicy = lambdaPolicy
        self.__baseSource = baseSource
    def getBase(self):
        return self.__base
    def getBaseMatrix(self):
        """
        Description:
            Returns the base as a binary matrix
        Arguments:
            none
        Return:
            (BinaryMatrix)    The value
        """
        return self.__assignment.getBase()
    def isAB(self):
        return isinstance(self.__base, ABBase)
    def getL(self):
        return self.__L
    def getM(self):
        return self.__m
    def getJ(self):
        return self.__J
    def getAssignment(self):
        return self.__assignment
    def getMode(self):
        return self.__mode
    def isReordered(self):
        return self.__reordered
    def getKind(self):
        return self.__kind
    def getCuttingVector(self):
        return self.__cuttingVector
    def getAssignmentMatrix(self):
        return self.__assignmentMatrix
    def getSeed(self):
        return self.__seed
    def getLambdaPolicy(self):
        return self.__lambdaPolicy
    def getBaseSource(self):
        return self.__baseSource
    def getBlockGrid(self):
        """
        Description:
            Returns B_m when the spec has an AB base with one
            shift per block and J = 1
        Arguments:
            none
        Return:
            (numpy.ndarray)    gamma x p grid, or None
        """
        if not self.isAB():
            return None
        return self.__assignment.blockGrid(self.__base.getP())
    def withMode(self, mode):
        """
        Description:
            Returns a copy with another coupling mode
        Arguments:
            mode (in, str)    CouplingMode value
        Return:
            (SCCodeSpec)    The value
        """
        return SCCodeSpec(self.__base, self.__L, self.__m, self.__J, self.__assignment, mode, self.__reordered,
                          self.__kind, self.__cuttingVector, self.__assignmentMatrix, self.__seed,
                          self.__lambdaPolicy, self.__baseSource)
    def __repr__(self):
        return "SCCodeSpec(%r, L=%d, m=%d, J=%d, %s, %s)" % (
            self.__base, self.__L, self.__m, self.__J, self.__kind, self.__mode)
