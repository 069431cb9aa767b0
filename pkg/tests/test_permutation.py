import itertools
import math

import numpy as np
import pytest

from SCLdpc.CycleLifting import Forward, Reverse, liftedCycleComponents, netPermutation, traceLiftedCycle
from SCLdpc.CycleStructure import CycleStructure
from SCLdpc.Exceptions import DegreeMismatchException, InvalidPermutationException, LabelRangeException
from SCLdpc.LiftFamilies import (checkCorollaryOrder, checkOrder, enumerateA, enumerateRealizable, orderFormula,
                                 realizeLabel, verifyOrderFormula)
from SCLdpc.LiftLabel import LiftLabel
from SCLdpc.Permutation import Permutation

def test_shift_convention():
    assert Permutation.shift(4, 0).isIdentity()
    assert Permutation.shift(4, 1).getImages() == (3, 0, 1, 2)
    assert Permutation.shift(6, 4).order() == 3
    assert Permutation.shift(5, 7) == Permutation.shift(5, 2)

def test_rejects_non_bijection():
    with pytest.raises(InvalidPermutationException):
        Permutation([0, 0, 1])

def test_compose_and_structure():
    assert Permutation.shift(4, 1).compose(Permutation.shift(4, 3)).isIdentity()
    assert Permutation.shift(6, 2).cycleStructure() == CycleStructure((0, 0, 2, 0, 0, 0))
    assert Permutation([1, 0, 3, 2, 4]).order() == 2
    with pytest.raises(DegreeMismatchException):
        Permutation.shift(3).compose(Permutation.shift(4))

def test_compose_applies_right_operand_first():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    assert all(p.compose(q)(x) == p(q(x)) for x in range(3))

def test_order_is_lcm_of_cycle_lengths():
    for images in itertools.permutations(range(6)):
        perm = Permutation(images)
        lengths = perm.cycleStructure().getLengths()
        assert sum(lengths) == 6
        assert perm.power(perm.order()).isIdentity()
        assert all(not perm.power(t).isIdentity() for t in range(1, perm.order()))

def test_kronecker():
    assert Permutation.kronecker(Permutation.identity(3), Permutation.identity(2)).isIdentity()
    assert Permutation.kronecker(Permutation.shift(2, 1), Permutation.identity(2)).getImages() == (2, 3, 0, 1)
    lam = Permutation([1, 2, 0, 4, 3])
    assert Permutation.kronecker(Permutation.shift(9, 3), lam).order() == 6

def test_kronecker_matrix_is_kronecker_product():
    p = Permutation([2, 0, 1])
    q = Permutation([1, 0])
    assert (Permutation.kronecker(p, q).toMatrix() == np.kron(p.toMatrix(), q.toMatrix())).all()

def test_kronecker_powers(rng):
    for L in range(1, 8):
        for J in range(1, 8):
            k = int(rng.integers(L))
            lam = Permutation(rng.permutation(J))
            t = int(rng.integers(-5, 12))
            left = Permutation.kronecker(Permutation.shift(L, k), lam).power(t)
            assert left == Permutation.kronecker(Permutation.shift(L, k * t), lam.power(t))

def test_enumerate_a():
    assert enumerateA(6, 3) == [Permutation.shift(6, k) for k in range(4)]
    assert len(enumerateA(7, 3)) == 4
    assert enumerateA(5, 0) == [Permutation.identity(5)]
    with pytest.raises(LabelRangeException):
        enumerateA(4, 4)

def test_realize_label():
    assert realizeLabel(LiftLabel.plain(0, 3), 4).isIdentity()
    assert realizeLabel(LiftLabel.plain(1), 3) == Permutation.shift(3, 1)
    with pytest.raises(LabelRangeException):
        realizeLabel(LiftLabel.plain(2), 4, m=1)

@pytest.mark.parametrize("L,J", [(2, 2), (3, 2), (2, 3), (4, 3), (3, 4), (4, 4)])
def test_realizable_labels_form_a_subgroup(L, J):
    group = set(enumerateRealizable(L, L - 1, J))
    assert len(group) == L * len(list(itertools.permutations(range(J))))
    for a in group:
        assert a.inverse() in group
        for b in group:
            assert a.compose(b) in group

def test_order_formula_examples():
    assert orderFormula(4, 1, Permutation([1, 0])) == 4
    assert orderFormula(6, 2, Permutation([1, 0])) == 6
    record = checkOrder(9, 3, Permutation([1, 2, 0, 4, 3]))
    assert (record.formula, record.direct, record.agrees) == (18, 6, False)

def test_order_verifier_reports_instead_of_raising():
    records = verifyOrderFormula(12)
    assert len(records) == sum(L * 12 for L in range(1, 13))
    assert any(not r.agrees for r in records)
    assert any((r.L, r.k, r.lambdaOrder) == (9, 3, 6) and not r.agrees for r in records)
    assert all(r.toDict()["direct"] == r.direct for r in records[:20])

def test_corollary_order_holds_for_coprime_lengths():
    for L in range(1, 7):
        for J in range(1, 7):
            for k in range(L):
                for l in range(J):
                    record = checkCorollaryOrder(L, k, J, l)
                    if math.gcd(L, J) == 1:
                        assert record.agrees, record

def test_lifted_cycle_components():
    assert liftedCycleComponents(6, Permutation.identity(4)) == [6, 6, 6, 6]
    assert liftedCycleComponents(6, Permutation([0, 2, 1])) == [6, 12]
    assert liftedCycleComponents(6, Permutation.shift(3, 1)) == [18]

def test_net_permutation_inverts_reverse_edges():
    a = Permutation([1, 2, 0])
    assert netPermutation([(a, Forward), (a, Reverse)]).isIdentity()

def test_cycle_lifting_matches_tracing(rng):
    for k in range(2, 9):
        for J in range(1, 7):
            labels = [Permutation(rng.permutation(J)) for _ in range(k)]
            net = netPermutation([(label, Forward) for label in labels])
            predicted = liftedCycleComponents(k, net)
            assert predicted == traceLiftedCycle(labels)
            assert sum(predicted) == k * J
