import logging

from .Exceptions import DegreeMismatchException, SpecFormatException, UsageException
from .Permutation import Permutation

log = logging.getLogger(__name__)

class LambdaPolicy(object):
    """
    Description:
        Chooses the terminal lift permutation lambda of
        every block.  Three kinds exist: identity, cyclic
        (tau_J^l on every block) and an explicit table read
        from a file whose lines are "i j a_0 ... a_{J-1}".
        Blocks missing from the table get the identity
    """
    Identity='identity'
    Cyclic='cyclic'
    Table='file'

    def __init__(self, kind, J, shift=0, table=None, path=None):
        """
        Description:
            Initializes this instance
        Arguments:
            kind (in, str)      One of Identity, Cyclic, Table
            J (in, int)         Terminal lift degree
            shift (in, int)     l for the cyclic kind
            table (in, dict)    (i, j) -> Permutation for the table kind
            path (in, str)      Source of the table, kept for serialization
        Exceptions:
            UsageException
            DegreeMismatchException
        Return:
            none
        """
        if kind not in (self.Identity, self.Cyclic, self.Table):
            raise UsageException("unknown lambda policy %r" % kind)
        if J < 1:
            raise UsageException("J must be positive")
        table = dict(table or {})
        for key, perm in table.items():
            if perm.getDegree() != J:
                raise DegreeMismatchException("lambda for block %s has degree %d, expected %d"
                                              % (key, perm.getDegree(), J))
        self.__kind = kind
        self.__J = J
        self.__shift = int(shift)
        self.__table = table
        self.__path = path
        self.__cyclic = Permutation.shift(J, self.__shift)
    def getKind(self):
        return self.__kind
    def getJ(self):
        return self.__J
    def getShift(self):
        return self.__shift
    def lambdaFor(self, i, j):
        """
        Description:
            Returns lambda for block (i, j)
        Arguments:
            i (in, int)    Block row of the base
            j (in, int)    Block column of the base
        Return:
            (Permutation)    The value
        """
        if self.__kind == self.Cyclic:
            return self.__cyclic
        if self.__kind == self.Table:
            return self.__table.get((i, j), Permutation.identity(self.__J))
        return Permutation.identity(self.__J)
    def toText(self):
        if self.__kind == self.Cyclic:
            return "cyclic:%d" % self.__shift
        if self.__kind == self.Table:
            return "file:%s" % self.__path
        return self.Identity
    def __repr__(self):
        return "LambdaPolicy(%s, J=%d)" % (self.toText(), self.__J)

    def _parse(cls, text, J):
        """
        Description:
            Builds a policy from its text form: "identity",
            "cyclic:l" or "file:PATH"
        Arguments:
            text (in, str)    The policy text
            J (in, int)       Terminal lift degree
        Exceptions:
            UsageException
            SpecFormatException
        Return:
            (LambdaPolicy)    The value
        """
        text = (text or cls.Identity).strip()
        if text == cls.Identity:
            return cls(cls.Identity, J)
        kind, _, value = text.partition(":")
        if kind == cls.Cyclic:
            try:
                return cls(cls.Cyclic, J, shift=int(value))
            except ValueError:
                raise UsageException("bad cyclic shift in %r" % text)
        if kind == cls.Table and value:
            with open(value) as f:
                table = cls.readTable(f, J)
            return cls(cls.Table, J, table=table, path=value)
        raise UsageException("unknown lambda policy %r" % text)
    parse = classmethod(_parse)

    def _readTable(cls, source, J):
        table = {}
        for number, line in enumerate(source, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values = [int(word) for word in line.split()]
            except ValueError:
                raise SpecFormatException(number, "non-integer token in lambda table")
            if len(values) != J + 2:
                raise SpecFormatException(number, "expected %d values, found %d" % (J + 2, len(values)))
            key = (values[0], values[1])
            if key in table:
                raise SpecFormatException(number, "block %s listed twice" % (key,))
            table[key] = Permutation(values[2:])
        log.debug("read %d lambda table entries", len(table))
        return table
    readTable = classmethod(_readTable)
