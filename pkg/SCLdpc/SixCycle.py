from dataclasses import dataclass

@dataclass(frozen=True)
class SixCycle:
    """
    Description:
        A 6-cycle of a circulant block matrix.  Row t
        joins column t to column t+1 (mod 3); row t is
        blockRows[t]*p + rowOffsets[t], column l is
        blockCols[l]*p + colOffsets[l]
    """
    blockRows: tuple
    rowOffsets: tuple
    blockCols: tuple
    colOffsets: tuple
    p: int

    @property
    def rows(self):
        return tuple(q * self.p + s for q, s in zip(self.blockRows, self.rowOffsets))

    @property
    def cols(self):
        return tuple(j * self.p + k for j, k in zip(self.blockCols, self.colOffsets))

    def incidences(self):
        """The six (row, column) ones walked in cycle order."""
        r, c = self.rows, self.cols
        return [(r[0], c[0]), (r[0], c[1]), (r[1], c[1]), (r[1], c[2]), (r[2], c[2]), (r[2], c[0])]

def closingOffsets(exponents, k1, p):
    """
    Description:
        Walks one family member from column offset k1 of
        the first block column.  exponents holds e(q_t, j_l)
        as a dict keyed by (t, l)
    Arguments:
        exponents (in, dict)    (row index, column index) -> exponent
        k1 (in, int)            Offset of the first column
        p (in, int)             Circulant size
    Returns:
        (tuple)    (row offsets, column offsets), or None when the walk does not close
    """
    s1 = (k1 - exponents[(0, 0)]) % p
    k2 = (s1 + exponents[(0, 1)]) % p
    s2 = (k2 - exponents[(1, 1)]) % p
    k3 = (s2 + exponents[(1, 2)]) % p
    s3 = (k3 - exponents[(2, 2)]) % p
    if (s3 + exponents[(2, 0)]) % p != k1:
        return None
    return (s1, s2, s3), (k1, k2, k3)
