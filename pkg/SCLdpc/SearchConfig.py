from .Exceptions import SearchConfigException

class ColumnOrder(object):
        """
        Description:
            This class defines the orders in which the
            optimizer assigns block columns
        """
        LeftToRight='left-to-right'
        Seeded='seeded'                #PCG64 permutation of the columns
        All=(LeftToRight, Seeded)

DefaultSeed = 20240917

class SearchConfig(object):
    """
    Description:
        Settings of the B_m search.  A beam of 0 keeps every
        prefix that survives the bound, which makes the
        search exhaustive and skips the tabu phase
    """
    def __init__(self, beam=64, backtrack=2, columnOrder=ColumnOrder.LeftToRight, seed=DefaultSeed,
                 budget=10**6, symmetry=False, threads=1, progress=False, restarts=24, steps=60, tenure=5):
        """
        Description:
            Initializes this instance
        Arguments:
            beam (in, int)           Prefixes kept per column, 0 for all
            backtrack (in, int)      Widest window of columns reassigned per sweep
            columnOrder (in, str)    ColumnOrder value
            seed (in, int)           Seed of the column order and tabu restarts
            budget (in, int)         Maximum number of candidate evaluations
            symmetry (in, bool)      Collapse grids equal up to row shifts
            threads (in, int)        Parallel jobs for bound evaluation
            progress (in, bool)      Show progress bars
            restarts (in, int)       Tabu runs from seeded random grids
            steps (in, int)          Moves per tabu run, 0 skips the tabu phase
            tenure (in, int)         Moves a changed column stays fixed
        Exceptions:
            SearchConfigException
        Return:
            none
        """
        for name, value, low in (("beam", beam, 0), ("backtrack", backtrack, 0),
                                 ("budget", budget, 1), ("threads", threads, 1),
                                 ("restarts", restarts, 0), ("steps", steps, 0), ("tenure", tenure, 0)):
            if not isinstance(value, int) or value < low:
                raise SearchConfigException("%s must be an integer >= %d, got %r" % (name, low, value))
        if columnOrder not in ColumnOrder.All:
            raise SearchConfigException("column order %r is not one of %s" % (columnOrder, ColumnOrder.All))
        if not isinstance(seed, int) or seed < 0:
            raise SearchConfigException("seed must be a nonnegative integer, got %r" % (seed,))
        self.__beam = beam
        self.__backtrack = backtrack
        self.__columnOrder = columnOrder
        self.__seed = seed
        self.__budget = budget
        self.__symmetry = bool(symmetry)
        self.__threads = threads
        self.__progress = bool(progress)
        self.__restarts = restarts
        self.__steps = steps
        self.__tenure = tenure
    def getBeam(self):
        return self.__beam
    def getBacktrack(self):
        return self.__backtrack
    def getColumnOrder(self):
        return self.__columnOrder
    def getSeed(self):
        return self.__seed
    def getBudget(self):
        return self.__budget
    def getSymmetry(self):
        return self.__symmetry
    def getThreads(self):
        return self.__threads
    def getProgress(self):
        return self.__progress
    def getRestarts(self):
        return self.__restarts
    def getSteps(self):
        return self.__steps
    def getTenure(self):
        return self.__tenure
    def isExhaustive(self):
        return self.__beam == 0
    def toDict(self):
        """
        Description:
            Returns the settings that change the result.
            Threads and progress bars do not
        Arguments:
            none
        Return:
            (dict)    The value
        """
        return {"beam": self.__beam, "backtrack": self.__backtrack, "column_order": self.__columnOrder,
                "seed": self.__seed, "budget": self.__budget, "symmetry": self.__symmetry,
                "restarts": self.__restarts, "steps": self.__steps, "tenure": self.__tenure}
    def toText(self):
        return "".join("%s=%s\n" % (key, str(value).lower() if isinstance(value, bool) else value)
                       for key, value in self.toDict().items())
    def __repr__(self):
        return "SearchConfig(%s)" % ", ".join("%s=%r" % item for item in self.toDict().items())
