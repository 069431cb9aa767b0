from .Exceptions import DegreeMismatchException, ValidationException
from .Permutation import Permutation

Forward = 1
Reverse = -1

def netPermutation(path):
    """
    Description:
        Returns the net permutation of an oriented path: the
        product of its edge labels in traversal order, with
        reverse-oriented edges contributing their inverse
    Arguments:
        path (in, list)    (Permutation, orientation) pairs, orientation
                           Forward or Reverse
    Exceptions:
        DegreeMismatchException
        ValidationException
    Returns:
        (Permutation)    The first edge acts first
    """
    if not path:
        raise ValidationException("empty path")
    degree = path[0][0].getDegree()
    net = Permutation.identity(degree)
    for label, orientation in path:
        if label.getDegree() != degree:
            raise DegreeMismatchException("%d != %d" % (label.getDegree(), degree))
        if orientation not in (Forward, Reverse):
            raise ValidationException("orientation must be +1 or -1")
        step = label if orientation == Forward else label.inverse()
        net = step.compose(net)
    return net

def liftedCycleComponents(k, net):
    """
    Description:
        Returns the cycle lengths a k-cycle lifts to: c_i
        cycles of length k*i for cycle type (c_1,...,c_J)
        of the net permutation
    Arguments:
        k (in, int)              Length of the base cycle
        net (in, Permutation)    Net permutation around the cycle
    Returns:
        (list of int)    Ascending lengths summing to k*J
    """
    return [k * length for length in net.cycleStructure().getLengths()]

def traceLiftedCycle(labels):
    """
    Description:
        Builds the lift of a k-cycle whose i-th edge joins
        vertex i to vertex i+1 (mod k) with label labels[i],
        and returns the component lengths by walking it
    Arguments:
        labels (in, list of Permutation)    Forward edge labels, equal degree
    Exceptions:
        DegreeMismatchException
    Returns:
        (list of int)    Ascending component lengths in edges
    """
    k = len(labels)
    J = labels[0].getDegree()
    if any(label.getDegree() != J for label in labels):
        raise DegreeMismatchException("labels of unequal degree")
    visited = set()
    lengths = []
    for start in range(J):
        if (0, start) in visited:
            continue
        vertex, copy, steps = 0, start, 0
        while True:
            visited.add((vertex, copy))
            copy = labels[vertex](copy)
            vertex = (vertex + 1) % k
            steps += 1
            if vertex == 0 and copy == start:
                break
        lengths.append(steps)
    return sorted(lengths)
