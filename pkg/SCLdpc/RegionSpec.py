from dataclasses import dataclass

from .Exceptions import InvalidRegionException

@dataclass(frozen=True)
class RegionSpec:
    """
    Description:
        Input of one line count.  The first column of a
        cycle ranges over block columns [w1, w2), the second
        over [w3, w4) and the third over [alpha, beta).
        case selects where the third column falls:
          1  2*j2 - j1, no wrap
          2  2*j2 - j1 - p
          3  2*j1 - j2 + p
          4  2*j1 - j2, no wrap
    """
    case: int
    alpha: int
    beta: int
    w1: int
    w2: int
    w3: int
    w4: int
    p: int

    def __post_init__(self):
        p = self.p
        if self.case not in (1, 2, 3, 4):
            raise InvalidRegionException("case %d outside [1, 4]" % self.case)
        checks = ((0 <= self.alpha <= p - 1, "0 <= alpha <= p-1"),
                  (1 <= self.beta <= p, "1 <= beta <= p"),
                  (self.alpha < self.beta, "alpha < beta"),
                  (0 <= self.w1 <= p - 2, "0 <= w1 <= p-2"),
                  (1 <= self.w2 <= p - 1, "1 <= w2 <= p-1"),
                  (self.w1 + 1 <= self.w3 <= p - 1, "w1+1 <= w3 <= p-1"),
                  (self.w2 + 1 <= self.w4 <= p, "w2+1 <= w4 <= p"))
        for ok, rule in checks:
            if not ok:
                raise InvalidRegionException("%s violated by %r" % (rule, self))

    def toDict(self):
        return {"case": self.case, "alpha": self.alpha, "beta": self.beta,
                "w": [self.w1, self.w2, self.w3, self.w4], "p": self.p}
