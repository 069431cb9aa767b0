import csv
from fractions import Fraction

class WindowReport(object):
    """
    Description:
        Per-position (3,3) absorbing set counts of a
        sliding window, their total and the ratio r_2 of
        that total to the count seen by the standard decoder
    """
    def __init__(self, window, positions, counts, standardTotal, method, discrepancies=None):
        """
        Description:
            Initializes this instance
        Arguments:
            window (in, WindowSpec)         The window
            positions (in, list)            WindowPosition per placement
            counts (in, list of int)        Count per placement
            standardTotal (in, int)         Count of the whole terminated code
            method (in, str)                CountMethod value
            discrepancies (in, list)        Discrepancy records
        Return:
            none
        """
        self.__window = window
        self.__positions = list(positions)
        self.__counts = [int(c) for c in counts]
        self.__standardTotal = int(standardTotal)
        self.__method = method
        self.__discrepancies = list(discrepancies or [])
    def getWindow(self):
        return self.__window
    def getPositions(self):
        return list(self.__positions)
    def getCounts(self):
        return list(self.__counts)
    def getTotal(self):
        return sum(self.__counts)
    def getStandardTotal(self):
        return self.__standardTotal
    def getMethod(self):
        return self.__method
    def getDiscrepancies(self):
        return list(self.__discrepancies)
    def getR2(self):
        """
        Description:
            Returns total over positions / standard total
        Arguments:
            none
        Return:
            (Fraction)    The value, None when the standard total is 0
        """
        if not self.__standardTotal:
            return None
        return Fraction(self.getTotal(), self.__standardTotal)
    def toDict(self):
        r2 = self.getR2()
        return {"method": self.__method, "S": self.__window.getS(), "memory": self.__window.getMemory(),
                "step": self.__window.getStep(), "default_step": self.__window.getStep() == self.__window.defaultStep(),
                "positions": [dict(position.toDict(), count=count)
                              for position, count in zip(self.__positions, self.__counts)],
                "total": self.getTotal(), "standard_total": self.__standardTotal,
                "r2": None if r2 is None else "%d/%d" % (r2.numerator, r2.denominator),
                "r2_float": None if r2 is None else float(r2),
                "discrepancies": [d.toDict() for d in self.__discrepancies]}
    def writeCsv(self, sink):
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(["position", "first_group", "first_row", "count"])
        for position, count in zip(self.__positions, self.__counts):
            writer.writerow([position.index, position.firstGroup, position.firstRow, count])
    def __repr__(self):
        return "WindowReport(%r, total=%d, standard=%d)" % (self.__window, self.getTotal(), self.__standardTotal)
