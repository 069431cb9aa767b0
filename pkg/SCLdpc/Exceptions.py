class SCLdpcException(Exception):
    """
    Description:
        Base class for every error raised by this package
    """
    def __init__(self, details=""):
        """
        Description:
            Initializes this instance with the supplied info
        Arguments:
            details (in, str)    Additional information about the error
        Return:
            none
        """
        Exception.__init__(self, details)
        self.__details = details
    def getDetails(self):
        """
        Description:
            Returns the details of the error
        Arguments:
            none
        Return:
            (str)    The value
        """
        return self.__details
    def __str__(self):
        if self.__details:
            return "%s-%s" % (type(self).__name__, self.__details)
        return type(self).__name__

class UsageException(SCLdpcException):
    """
    Description:
        Defines a usage error.  This is thrown when
        command line flags conflict or are missing
    """

class ValidationException(SCLdpcException):
    """
    Description:
        Defines a validation error.  This is thrown when
        an input value violates a structural invariant
    """

class DegreeMismatchException(ValidationException):
    """
    Description:
        Thrown when permutations of different degrees
        are combined
    """

class InvalidPermutationException(ValidationException):
    """
    Description:
        Thrown when an image list is not a bijection
    """

class LabelRangeException(ValidationException):
    """
    Description:
        Thrown when a shift exponent lies outside [0, m]
        or the memory is out of range for the coupling length
    """

class NotPrimeException(ValidationException):
    """
    Description:
        Thrown when the circulant size of an array-based
        base matrix is not prime
    """
    def __init__(self, p):
        ValidationException.__init__(self, "p=%d is not prime" % p)
        self.__p = p
    def getValue(self):
        """
        Description:
            Returns the rejected modulus
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__p

class AlistFormatException(ValidationException):
    """
    Description:
        Thrown when an alist stream is malformed.  The
        offending line number (1-indexed) is kept
    """
    def __init__(self, line, details):
        """
        Description:
            Initializes this instance with the supplied info
        Arguments:
            line (in, int)       The line number
            details (in, str)    What is wrong with the line
        Return:
            none
        """
        ValidationException.__init__(self, "line %d: %s" % (line, details))
        self.__line = line
    def getLine(self):
        """
        Description:
            Returns the offending line number
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__line

class DimensionMismatchException(ValidationException):
    """
    Description:
        Thrown when matrix or grid dimensions do not agree
    """

class InvalidCuttingVectorException(ValidationException):
    """
    Description:
        Thrown when a cutting vector is out of range or
        not ordered as required
    """

class InvalidAssignmentException(ValidationException):
    """
    Description:
        Thrown when an edge assignment or B_m grid breaks
        its invariants
    """

class BandStructureException(ValidationException):
    """
    Description:
        Thrown when a matrix handed to terminate is not in
        the reordered banded form
    """

class NonCirculantBlockException(ValidationException):
    """
    Description:
        Thrown by the block-level enumerator when a block is
        neither zero nor a circulant permutation
    """
    def __init__(self, blockRow, blockCol):
        ValidationException.__init__(self, "block (%d, %d)" % (blockRow, blockCol))
        self.__position = (blockRow, blockCol)
    def getPosition(self):
        """
        Description:
            Returns the offending block position
        Arguments:
            none
        Return:
            (tuple)    The (block row, block column) pair
        """
        return self.__position

class InvalidRegionException(ValidationException):
    """
    Description:
        Thrown when line counting parameters violate the
        region invariants
    """

class UnsupportedStructureException(ValidationException):
    """
    Description:
        Thrown when line counting is asked to handle a code
        it does not cover (gamma != 3, J != 1 or per-edge labels)
    """

class WindowSpecException(ValidationException):
    """
    Description:
        Thrown when a window does not fit the code or its
        memory mode does not match the code memory
    """

class SpecFormatException(ValidationException):
    """
    Description:
        Thrown when an SCCodeSpec or B_m grid file cannot
        be parsed
    """
    def __init__(self, line, details):
        ValidationException.__init__(self, "line %d: %s" % (line, details))
        self.__line = line
    def getLine(self):
        """
        Description:
            Returns the offending line number
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__line

class SearchConfigException(ValidationException):
    """
    Description:
        Thrown when optimizer settings are invalid
    """
