import io

from .BinaryMatrix import BinaryMatrix
from .Exceptions import AlistFormatException

def _joined(values):
    return " ".join(str(v) for v in values)

def _padded(values, width):
    return list(values) + [0] * (width - len(values))

class AlistSerializer(object):
    """
    Description:
        Reads and writes the alist sparse matrix format:
        "N M", "maxcol maxrow", the N column degrees, the M
        row degrees, then N column lists and M row lists of
        1-indexed neighbours padded with 0.  Single spaces,
        every line newline-terminated
    """
    def _write(cls, binary, sink):
        """
        Description:
            Writes the matrix to a text sink
        Arguments:
            binary (in, BinaryMatrix)    The matrix
            sink (in, text stream)       Receives the alist text
        Return:
            none
        """
        cols = binary.columnNeighbors()
        rows = binary.rowNeighbors()
        maxCol = max((len(x) for x in cols), default=0)
        maxRow = max((len(x) for x in rows), default=0)
        lines = [_joined([binary.getCols(), binary.getRows()]),
                 _joined([maxCol, maxRow]),
                 _joined(len(x) for x in cols),
                 _joined(len(x) for x in rows)]
        lines.extend(_joined(_padded([r + 1 for r in x], maxCol)) for x in cols)
        lines.extend(_joined(_padded([c + 1 for c in x], maxRow)) for x in rows)
        sink.write("".join(line + "\n" for line in lines))
    write = classmethod(_write)

    def _read(cls, source):
        """
        Description:
            Parses an alist text source
        Arguments:
            source (in, text stream)    The alist text
        Exceptions:
            AlistFormatException
        Return:
            (BinaryMatrix)    The matrix
        """
        lines = source.read().split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        reader = _LineReader(lines)
        n, m = reader.ints(count=2)
        maxCol, maxRow = reader.ints(count=2)
        colDegrees = reader.ints(count=n)
        rowDegrees = reader.ints(count=m)
        for degrees, bound, what, line in ((colDegrees, maxCol, "column", 3), (rowDegrees, maxRow, "row", 4)):
            if any(d < 0 or d > bound for d in degrees):
                raise AlistFormatException(line, "%s degree outside [0, %d]" % (what, bound))
        positions = []
        for c in range(n):
            for r in reader.neighbors(colDegrees[c], maxCol, m, "column %d" % (c + 1)):
                positions.append((r, c))
        byRow = {}
        for r, c in positions:
            byRow.setdefault(r, set()).add(c)
        for r in range(m):
            listed = reader.neighbors(rowDegrees[r], maxRow, n, "row %d" % (r + 1))
            if set(listed) != byRow.get(r, set()):
                raise AlistFormatException(reader.lineNumber(), "row %d disagrees with the column lists" % (r + 1))
        if reader.remaining():
            raise AlistFormatException(reader.lineNumber() + 1, "unexpected trailing content")
        return BinaryMatrix(m, n, positions)
    read = classmethod(_read)

    def _dumps(cls, binary):
        sink = io.StringIO()
        cls.write(binary, sink)
        return sink.getvalue()
    dumps = classmethod(_dumps)

    def _loads(cls, text):
        return cls.read(io.StringIO(text))
    loads = classmethod(_loads)

class _LineReader(object):
    """Walks alist lines while keeping the 1-indexed line number."""
    def __init__(self, lines):
        self.__lines = lines
        self.__next = 0
    def lineNumber(self):
        return self.__next
    def remaining(self):
        return any(line.strip() for line in self.__lines[self.__next:])
    def ints(self, count=None):
        if self.__next >= len(self.__lines):
            raise AlistFormatException(self.__next + 1, "unexpected end of file")
        line = self.__lines[self.__next]
        self.__next += 1
        try:
            values = [int(word) for word in line.split()]
        except ValueError:
            raise AlistFormatException(self.__next, "non-integer token")
        if count is not None and len(values) != count:
            raise AlistFormatException(self.__next, "expected %d values, found %d" % (count, len(values)))
        return values
    def neighbors(self, degree, width, bound, what):
        values = self.ints()
        if len(values) > max(width, degree):
            raise AlistFormatException(self.__next, "%s has more than %d entries" % (what, width))
        listed = [v for v in values if v != 0]
        if values[:len(listed)] != listed:
            raise AlistFormatException(self.__next, "%s has zero padding before an entry" % what)
        if len(listed) != degree:
            raise AlistFormatException(self.__next, "%s declares degree %d but lists %d" % (what, degree, len(listed)))
        if any(v < 1 or v > bound for v in listed):
            raise AlistFormatException(self.__next, "%s has an index outside [1, %d]" % (what, bound))
        if len(set(listed)) != len(listed):
            raise AlistFormatException(self.__next, "%s repeats an index" % what)
        return [v - 1 for v in listed]
