import csv
from dataclasses import dataclass, field
from fractions import Fraction

from .ExitCodes import CouplingMode

def uncoupledCount(p):
    """
    Description:
        (3,3) absorbing sets of the uncoupled AB code
        H(3, p): 2*C(p,2) families of p cycles each
    Arguments:
        p (in, int)    Prime circulant size
    Returns:
        (int)    p^2 (p-1)
    """
    return p * p * (p - 1)

@dataclass(frozen=True)
class Discrepancy:
    """A non-fatal anomaly met while counting."""
    kind: str
    message: str
    data: dict = field(default_factory=dict)

    def toDict(self):
        return {"kind": self.kind, "message": self.message, "data": self.data}

class CountReport(object):
    """
    Description:
        Result of one (3,3) absorbing set count.  mu[d]
        holds the cycles whose three block columns span d
        coupling positions, so a terminated code of length
        L has sum (L-d) mu[d] of them.  For cutting vectors
        (mu[0], mu[1]) is the (mu_1, mu_2) pair of the
        L mu_1 + (L-1) mu_2 count
    """
    def __init__(self, method, total, p=None, gamma=None, L=None, m=None, mu=None, perRegion=None,
                 discrepancies=None, elapsed=None, mode=None):
        """
        Description:
            Initializes this instance
        Arguments:
            method (in, str)          CountMethod value
            total (in, int)           Number of (3,3) absorbing sets
            p, gamma, L, m (in, int)  Code parameters, None when unknown
            mu (in, list of int)      Cycles per column span
            perRegion (in, list)      Breakdown records (dicts)
            discrepancies (in, list)  Discrepancy records
            elapsed (in, float)       Wall time in seconds
            mode (in, str)            CouplingMode value; tailbiting repeats every span L times
        Return:
            none
        """
        self.__method = method
        self.__total = int(total)
        self.__p = p
        self.__gamma = gamma
        self.__L = L
        self.__m = m
        self.__mu = list(mu or [])
        self.__perRegion = list(perRegion or [])
        self.__discrepancies = list(discrepancies or [])
        self.__elapsed = elapsed
        self.__mode = mode
    def getMethod(self):
        return self.__method
    def getTotal(self):
        """
        Description:
            Returns the number of (3,3) absorbing sets
        Arguments:
            none
        Return:
            (int)    The value
        """
        return self.__total
    def getP(self):
        return self.__p
    def getGamma(self):
        return self.__gamma
    def getL(self):
        return self.__L
    def getM(self):
        return self.__m
    def getMu(self):
        return list(self.__mu)
    def getPerRegion(self):
        return list(self.__perRegion)
    def getDiscrepancies(self):
        return list(self.__discrepancies)
    def getElapsed(self):
        return self.__elapsed
    def getMode(self):
        return self.__mode
    def multiplicity(self, d):
        if self.__L is None:
            return None
        if self.__mode == CouplingMode.Tailbiting:
            return self.__L
        return max(self.__L - d, 0)
    def getR1(self):
        """
        Description:
            Returns total / (L * uncoupled count), the ratio
            against L uncoupled copies of an AB code
        Arguments:
            none
        Return:
            (Fraction)    The value, None without p and L
        """
        if self.__p is None or not self.__L:
            return None
        return Fraction(self.__total, self.__L * uncoupledCount(self.__p))
    def withDiscrepancies(self, extra):
        return CountReport(self.__method, self.__total, self.__p, self.__gamma, self.__L, self.__m, self.__mu,
                           self.__perRegion, self.__discrepancies + list(extra), self.__elapsed, self.__mode)
    def withElapsed(self, seconds):
        return CountReport(self.__method, self.__total, self.__p, self.__gamma, self.__L, self.__m, self.__mu,
                           self.__perRegion, self.__discrepancies, seconds, self.__mode)
    def toDict(self, includeTiming=False):
        """
        Description:
            Returns the JSON document of this report
        Arguments:
            includeTiming (in, bool)    Add the wall time
        Return:
            (dict)    The value
        """
        r1 = self.getR1()
        doc = {"method": self.__method, "p": self.__p, "gamma": self.__gamma, "L": self.__L, "m": self.__m,
               "mode": self.__mode, "total": self.__total, "mu": self.__mu, "per_region": self.__perRegion,
               "discrepancies": [d.toDict() for d in self.__discrepancies],
               "r1": None if r1 is None else "%d/%d" % (r1.numerator, r1.denominator)}
        if includeTiming:
            doc["elapsed_seconds"] = self.__elapsed
        return doc
    def writeCsv(self, sink):
        """
        Description:
            Writes one row per column span class
        Arguments:
            sink (in, text stream)    Receives the CSV
        Return:
            none
        """
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(["span", "mu", "multiplicity", "cycles"])
        for d, mu in enumerate(self.__mu):
            multiplicity = self.multiplicity(d)
            writer.writerow([d, mu, multiplicity, None if multiplicity is None else multiplicity * mu])
    def __repr__(self):
        return "CountReport(%s, total=%d, mu=%s)" % (self.__method, self.__total, self.__mu)
