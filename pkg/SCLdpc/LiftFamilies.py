import itertools
import logging
import math
from dataclasses import dataclass, asdict
from fractions import Fraction

from .Exceptions import LabelRangeException
from .Permutation import Permutation

log = logging.getLogger(__name__)

@dataclass(frozen=True)
class OrderCheck:
    """One comparison of a closed-form order against direct computation."""
    L: int
    k: int
    lambdaOrder: int
    formula: object
    direct: int

    @property
    def agrees(self):
        return self.formula == self.direct

    def toDict(self):
        record = asdict(self)
        record["formula"] = str(self.formula)
        record["agrees"] = self.agrees
        return record

def enumerateA(L, m):
    """
    Description:
        Returns the restricted assignment family A_{L,m},
        the shifts tau_L^0..tau_L^m
    Arguments:
        L (in, int)    Coupling length
        m (in, int)    Memory, 0 <= m <= L-1
    Exceptions:
        LabelRangeException
    Returns:
        (list of Permutation)    Ordered by exponent
    """
    if m < 0 or m >= L:
        raise LabelRangeException("memory %d outside [0, %d]" % (m, L - 1))
    return [Permutation.shift(L, k) for k in range(m + 1)]

def realizeLabel(label, L, m=None):
    """
    Description:
        Returns tau_L^k (x) lambda for a label (k, lambda)
    Arguments:
        label (in, LiftLabel)    The edge label
        L (in, int)              Coupling length
        m (in, int)              Optional memory bound on k
    Exceptions:
        LabelRangeException
    Returns:
        (Permutation)    Degree J*L
    """
    bound = L - 1 if m is None else min(m, L - 1)
    if label.getK() > bound:
        raise LabelRangeException("k=%d outside [0, %d]" % (label.getK(), bound))
    return Permutation.kronecker(Permutation.shift(L, label.getK()), label.getLambda())

def enumerateRealizable(L, m, J):
    """
    Description:
        Returns every realizable permutation tau_L^k (x) lambda
        with 0 <= k <= m and lambda in S_J
    Arguments:
        L (in, int)    Coupling length
        m (in, int)    Memory
        J (in, int)    Terminal lift degree
    Returns:
        (list of Permutation)    (m+1)*J! entries
    """
    shifts = enumerateA(L, m)
    return [Permutation.kronecker(shift, Permutation(images))
            for shift in shifts for images in itertools.permutations(range(J))]

def _integral(numerator, denominator):
    value = Fraction(numerator, denominator)
    return value.numerator if value.denominator == 1 else value

def orderFormula(L, k, lam):
    """
    Description:
        Evaluates the published closed form
        L*o*gcd(k,L,o) / (gcd(k,L)*gcd(L,o)) for the order of
        tau_L^k (x) lambda, where o is the order of lambda.
        The direct order is the ground truth; use
        checkOrder to compare
    Arguments:
        L (in, int)              Coupling length
        k (in, int)              Shift exponent
        lam (in, Permutation)    Terminal lift permutation
    Returns:
        (int)    The formula value
    """
    o = lam.order()
    return _integral(L * o * math.gcd(k, L, o), math.gcd(k, L) * math.gcd(L, o))

def corollaryOrder(L, k, J, l):
    """
    Description:
        Evaluates the closed form for the order of
        tau_L^k (x) tau_J^l
    Arguments:
        L (in, int)    Coupling length
        k (in, int)    Outer shift exponent
        J (in, int)    Terminal lift degree
        l (in, int)    Inner shift exponent
    Returns:
        (int or Fraction)    The formula value
    """
    numerator = J * L * math.gcd(k, J, L) * math.gcd(l, J, L)
    denominator = math.gcd(l, J) * math.gcd(k, L) * math.gcd(J, L) * math.gcd(k, l, J, L)
    return _integral(numerator, denominator)

def checkOrder(L, k, lam):
    """
    Description:
        Compares orderFormula against the order of the
        realized permutation.  Never raises on disagreement
    Arguments:
        L (in, int)              Coupling length
        k (in, int)              Shift exponent
        lam (in, Permutation)    Terminal lift permutation
    Returns:
        (OrderCheck)    The comparison record
    """
    direct = Permutation.kronecker(Permutation.shift(L, k), lam).order()
    record = OrderCheck(L, k, lam.order(), orderFormula(L, k, lam), direct)
    if not record.agrees:
        log.info("order formula disagrees at (L=%d, k=%d, o=%d): formula %s, direct %d",
                 L, k, record.lambdaOrder, record.formula, direct)
    return record

def checkCorollaryOrder(L, k, J, l):
    direct = Permutation.kronecker(Permutation.shift(L, k), Permutation.shift(J, l)).order()
    return OrderCheck(L, k, Permutation.shift(J, l).order(), corollaryOrder(L, k, J, l), direct)

def verifyOrderFormula(maxL, maxOrder=None):
    """
    Description:
        Sweeps every (L, k, o) with 1 <= L <= maxL, 0 <= k < L
        and 1 <= o <= maxOrder, using lambda = tau_o
    Arguments:
        maxL (in, int)        Largest coupling length
        maxOrder (in, int)    Largest lambda order, defaults to maxL
    Returns:
        (list of OrderCheck)    Agreements and discrepancies
    """
    maxOrder = maxL if maxOrder is None else maxOrder
    records = []
    for L in range(1, maxL + 1):
        for k in range(L):
            for o in range(1, maxOrder + 1):
                records.append(checkOrder(L, k, Permutation.shift(o, 1)))
    return records