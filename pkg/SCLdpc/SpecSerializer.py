import io
import os

from .ABBase import ABBase
from .AlistSerializer import AlistSerializer
from .AssignmentMatrix import AssignmentMatrixBm
from .CodeFactory import CodeFactory
from .CuttingVector import CuttingVector
from .Exceptions import SpecFormatException
from .ExitCodes import AssignmentKind
from .LambdaPolicy import LambdaPolicy

KeyOrder = ("base", "gamma", "p", "L", "m", "J", "mode", "reordered",
            "assignment", "xi", "bm", "lambda", "seed")

def _specPairs(spec):
    base = spec.getBase()
    pairs = {"base": spec.getBaseSource(), "L": spec.getL(), "m": spec.getM(), "J": spec.getJ(),
             "mode": spec.getMode(), "reordered": "true" if spec.isReordered() else "false",
             "assignment": spec.getKind()}
    if isinstance(base, ABBase):
        pairs["gamma"] = base.getGamma()
        pairs["p"] = base.getP()
    if spec.getCuttingVector() is not None:
        pairs["xi"] = ",".join(str(x) for x in spec.getCuttingVector().getXi())
    if spec.getAssignmentMatrix() is not None:
        pairs["bm"] = ";".join(" ".join(str(v) for v in row) for row in spec.getAssignmentMatrix().toRows())
    if spec.getLambdaPolicy() is not None:
        pairs["lambda"] = spec.getLambdaPolicy().toText()
    if spec.getSeed() is not None:
        pairs["seed"] = spec.getSeed()
    return pairs

def _parsePairs(source):
    pairs = {}
    lines = {}
    for number, line in enumerate(source, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise SpecFormatException(number, "expected key=value")
        if key not in KeyOrder:
            raise SpecFormatException(number, "unknown key %r" % key)
        if key in pairs:
            raise SpecFormatException(number, "key %r repeated" % key)
        pairs[key] = value.strip()
        lines[key] = number
    return pairs, lines

class SpecSerializer(object):
    """
    Description:
        Reads and writes SCCodeSpec files.  One key=value
        pair per line, '#' starts a comment, keys are those
        of KeyOrder.  B_m rows are joined by ';' and their
        entries by spaces.  Writing is canonical: keys in
        KeyOrder, absent values skipped
    """
    def _write(cls, spec, sink):
        """
        Description:
            Writes the spec in canonical key order
        Arguments:
            spec (in, SCCodeSpec)    The spec
            sink (in, text stream)   Receives the text
        Return:
            none
        """
        pairs = _specPairs(spec)
        sink.write("".join("%s=%s\n" % (key, pairs[key]) for key in KeyOrder if pairs.get(key) is not None))
    write = classmethod(_write)

    def _read(cls, source, baseDir=None):
        """
        Description:
            Parses a spec file and rebuilds the spec
        Arguments:
            source (in, text stream)    The text
            baseDir (in, str)           Directory for relative alist paths
        Exceptions:
            SpecFormatException
            ValidationException
        Return:
            (SCCodeSpec)    The value
        """
        pairs, lines = _parsePairs(source)

        def integer(key, required=True):
            if key not in pairs:
                if required:
                    raise SpecFormatException(0, "missing key %r" % key)
                return None
            try:
                return int(pairs[key])
            except ValueError:
                raise SpecFormatException(lines[key], "%s is not an integer" % key)

        baseSource = pairs.get("base", "ab")
        if baseSource == "ab":
            base = ABBase(integer("gamma"), integer("p"))
        elif baseSource.startswith("alist:"):
            path = baseSource[len("alist:"):]
            with open(os.path.join(baseDir or "", path)) as f:
                base = AlistSerializer.read(f)
        else:
            raise SpecFormatException(lines.get("base", 0), "unknown base %r" % baseSource)
        kind = pairs.get("assignment")
        if kind not in AssignmentKind.All:
            raise SpecFormatException(lines.get("assignment", 0), "unknown assignment %r" % kind)
        reordered = pairs.get("reordered", "true")
        if reordered not in ("true", "false"):
            raise SpecFormatException(lines["reordered"], "reordered must be true or false")
        xi = bm = policy = None
        if kind == AssignmentKind.CuttingVector:
            xi = CuttingVector.parse(pairs.get("xi", ""), base.getP())
        if kind == AssignmentKind.Bm:
            try:
                rows = [[int(v) for v in row.split()] for row in pairs.get("bm", "").split(";")]
            except ValueError:
                raise SpecFormatException(lines.get("bm", 0), "non-integer B_m entry")
            bm = AssignmentMatrixBm(rows, integer("m", False))
            policy = LambdaPolicy.parse(pairs.get("lambda"), integer("J", False) or 1)
        spec = CodeFactory.createInstance(kind, base, integer("L"), integer("m", False), pairs.get("mode", "terminated"),
                                          cuttingVector=xi, assignmentMatrix=bm, seed=integer("seed", False),
                                          lambdaPolicy=policy, reordered=reordered == "true", baseSource=baseSource)
        J = integer("J", False)
        if J is not None and J != spec.getJ():
            raise SpecFormatException(lines["J"], "J=%d disagrees with the lambda policy" % J)
        return spec
    read = classmethod(_read)

    def _dumps(cls, spec):
        sink = io.StringIO()
        cls.write(spec, sink)
        return sink.getvalue()
    dumps = classmethod(_dumps)

    def _loads(cls, text, baseDir=None):
        return cls.read(io.StringIO(text), baseDir)
    loads = classmethod(_loads)
