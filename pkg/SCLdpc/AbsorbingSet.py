from dataclasses import dataclass

from .Exceptions import ValidationException

@dataclass(frozen=True)
class AbsorbingSetWitness:
    """An (a,b) absorbing set D with its neighbouring checks N(D) and odd checks O(D)."""
    variables: tuple
    neighborChecks: tuple
    oddChecks: tuple

    @property
    def a(self):
        return len(self.variables)

    @property
    def b(self):
        return len(self.oddChecks)

    def toDict(self):
        return {"variables": list(self.variables), "a": self.a, "b": self.b, "odd_checks": list(self.oddChecks)}

def isAbsorbingSet(binary, variables):
    """
    Description:
        Checks whether every variable of D has strictly
        fewer neighbours among the odd checks O(D) than
        among the even checks N(D) - O(D)
    Arguments:
        binary (in, BinaryMatrix)      The parity-check matrix
        variables (in, iterable)       Column indices of D
    Exceptions:
        ValidationException
    Returns:
        (AbsorbingSetWitness)    The witness, or None when D is not absorbing
    """
    D = tuple(sorted(set(variables)))
    if not D:
        raise ValidationException("empty variable set")
    if D[0] < 0 or D[-1] >= binary.getCols():
        raise ValidationException("column outside [0, %d)" % binary.getCols())
    columns = binary.columnNeighbors()
    degree = {}
    for v in D:
        for r in columns[v]:
            degree[r] = degree.get(r, 0) + 1
    odd = {r for r, d in degree.items() if d % 2}
    for v in D:
        inOdd = sum(1 for r in columns[v] if r in odd)
        if inOdd >= len(columns[v]) - inOdd:
            return None
    return AbsorbingSetWitness(D, tuple(sorted(degree)), tuple(sorted(odd)))
