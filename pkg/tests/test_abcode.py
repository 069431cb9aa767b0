import numpy as np
import pytest

from SCLdpc.ABBase import ABBase, isPrime
from SCLdpc.AlistSerializer import AlistSerializer
from SCLdpc.BinaryMatrix import BinaryMatrix, hasFourCycle
from SCLdpc.BlockEntry import CirculantShift, ExplicitPermutation
from SCLdpc.BlockMatrix import BlockMatrix
from SCLdpc.Exceptions import AlistFormatException, NonCirculantBlockException, NotPrimeException
from SCLdpc.Permutation import Permutation
from SCLdpc.QuasiCyclic import isQuasiCyclic

def test_exponents():
    base = ABBase(3, 5)
    assert base.getExponent(2, 3) == 1
    assert all(base.getExponent(0, j) == 0 for j in range(5))
    assert all(base.getExponent(i, 0) == 0 for i in range(3))
    single = ABBase(1, 7).expand().toDense()
    assert (single == np.tile(np.eye(7, dtype=np.uint8), 7)).all()

def test_rejects_composite_p():
    assert not isPrime(9)
    with pytest.raises(NotPrimeException) as error:
        ABBase(3, 6)
    assert error.value.getValue() == 6
    assert error.value.getDetails() == "p=6 is not prime"

def test_expand_weights():
    binary = ABBase(3, 3).expand()
    assert (binary.getRows(), binary.getCols()) == (9, 9)
    assert set(binary.rowWeights()) == {3}
    assert set(binary.columnWeights()) == {3}

def test_block_expansion_conventions():
    identity = BlockMatrix(1, 1, 4, {(0, 0): CirculantShift(0)}).expand().toDense()
    assert (identity == np.eye(4, dtype=np.uint8)).all()
    tau = BlockMatrix(1, 1, 3, {(0, 0): ExplicitPermutation(Permutation.shift(3, 1))}).expand().toDense()
    assert (tau == Permutation.shift(3, 1).toMatrix()).all()
    assert tau[2, 0] == 1

def test_from_binary_recovers_circulants():
    blocks = ABBase(3, 5).toBlockMatrix()
    assert BlockMatrix.fromBinary(blocks.expand(), 5) == blocks

def test_from_binary_rejects_non_permutation_blocks():
    dense = np.zeros((3, 3), dtype=np.uint8)
    dense[0, 0] = dense[0, 1] = 1
    with pytest.raises(NonCirculantBlockException) as error:
        BlockMatrix.fromBinary(BinaryMatrix.fromDense(dense), 3)
    assert error.value.getPosition() == (0, 0)

def test_submatrix_reindexes():
    binary = ABBase(3, 5).expand()
    part = binary.submatrix([10, 0, 5], [0, 7])
    assert (part.getRows(), part.getCols()) == (3, 2)
    assert (part.toDense() == binary.toDense()[np.ix_([10, 0, 5], [0, 7])]).all()

@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_ab_base_has_girth_six(p):
    binary = ABBase(3, p).expand()
    assert not hasFourCycle(binary)
    assert set(binary.columnWeights()) == {3}

def test_four_cycle_detected():
    assert hasFourCycle(BinaryMatrix.fromDense(np.ones((2, 2), dtype=np.uint8)))

def test_alist_header_and_round_trip():
    text = AlistSerializer.dumps(ABBase(3, 5).expand())
    assert text.splitlines()[0] == "25 15"
    assert text.splitlines()[1] == "3 5"
    assert AlistSerializer.dumps(AlistSerializer.loads(text)) == text
    assert AlistSerializer.loads(text) == ABBase(3, 5).expand()

def test_alist_degree_mismatch_reports_line():
    text = "2 2\n1 1\n1 1\n1 1\n0\n2\n1\n2\n"
    with pytest.raises(AlistFormatException) as error:
        AlistSerializer.loads(text)
    assert error.value.getLine() == 5

def test_alist_inconsistent_row_lists():
    text = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n"
    with pytest.raises(AlistFormatException) as error:
        AlistSerializer.loads(text)
    assert error.value.getLine() == 7

def test_quasi_cyclic_ab_base():
    assert isQuasiCyclic(ABBase(3, 5).expand(), 5)
    dense = np.zeros((4, 4), dtype=np.uint8)
    dense[[0, 1, 2, 3], [0, 2, 1, 3]] = 1
    assert not isQuasiCyclic(BinaryMatrix.fromDense(dense), 4)
