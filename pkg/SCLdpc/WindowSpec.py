from dataclasses import dataclass

from .Exceptions import WindowSpecException
from .ExitCodes import MemoryMode

class WindowSpec(object):
    """
    Description:
        A decoding window of S block-column groups for a
        code of memory M.  It holds gamma(S-2M+1)+1 block
        rows, starting M positions below its first column
        group, and by default slides S-2M+1 groups so that
        consecutive windows share exactly one block row
    """
    def __init__(self, S, memory, step=None):
        """
        Description:
            Initializes this instance
        Arguments:
            S (in, int)         Window size in block-column groups
            memory (in, int)    MemoryMode value
            step (in, int)      Slide in groups, default S-2M+1
        Exceptions:
            WindowSpecException
        Return:
            none
        """
        if memory not in MemoryMode.All:
            raise WindowSpecException("memory %r is not one of %s" % (memory, MemoryMode.All))
        if S < 2 * memory:
            raise WindowSpecException("memory-%d windows need S >= %d, got %d" % (memory, 2 * memory, S))
        if step is not None and step < 1:
            raise WindowSpecException("step must be positive, got %d" % step)
        self.__S = S
        self.__memory = memory
        self.__step = step
    def getS(self):
        """
        Description:
            Returns the window size in block-column groups
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__S
    def getMemory(self):
        return self.__memory
    def getStep(self):
        """
        Description:
            Returns the slide in block-column groups
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.defaultStep() if self.__step is None else self.__step
    def defaultStep(self):
        return self.__S - 2 * self.__memory + 1
    def rowCount(self, gamma):
        return gamma * (self.__S - 2 * self.__memory + 1) + 1
    def __eq__(self, other):
        return isinstance(other, WindowSpec) and (self.__S, self.__memory, self.getStep()) == \
            (other.__S, other.__memory, other.getStep())
    def __repr__(self):
        return "WindowSpec(S=%d, memory=%d, step=%d)" % (self.__S, self.__memory, self.getStep())

@dataclass(frozen=True)
class WindowPosition:
    """One window: column groups [firstGroup, stopGroup) and linear block rows [firstRow, stopRow)."""
    index: int
    firstGroup: int
    stopGroup: int
    firstRow: int
    stopRow: int

    def toDict(self):
        return {"index": self.index, "groups": [self.firstGroup, self.stopGroup],
                "block_rows": [self.firstRow, self.stopRow]}
