import sys
import os
import json
import argparse
import logging

from SCLdpc import __version__
from SCLdpc.ABBase import ABBase
from SCLdpc.AbsCounter import countAbs, hasDisagreement
from SCLdpc.AlistSerializer import AlistSerializer
from SCLdpc.AssignmentMatrix import AssignmentMatrixBm
from SCLdpc.BruteForceCounter import countSixCyclesBitLevel
from SCLdpc.CodeFactory import CodeFactory
from SCLdpc.CountReport import CountReport, Discrepancy
from SCLdpc.CuttingVector import CuttingVector
from SCLdpc.Coupler import build
from SCLdpc.Exceptions import SCLdpcException, UsageException
from SCLdpc.ExitCodes import AssignmentKind, CountMethod, CouplingMode, ExitCodes, MemoryMode
from SCLdpc.LambdaPolicy import LambdaPolicy
from SCLdpc.MessageLoader import MessageLoader
from SCLdpc.Objective import Objective
from SCLdpc.Optimizer import bestCuttingVector, optimizeBm
from SCLdpc.RunManifest import RunManifest
from SCLdpc.SearchConfig import ColumnOrder, DefaultSeed, SearchConfig
from SCLdpc.SpecSerializer import SpecSerializer
from SCLdpc.WindowSpec import WindowSpec
from SCLdpc.WindowedCounter import countAbsWindowed

log = logging.getLogger("sclift")

class Config:
    FILENAME = 'sclift_cfg.json'
    DEFAULTS = {"beam": 64, "backtrack": 2, "budget": 10**6, "seed": DefaultSeed, "threads": 1,
                "restarts": 24, "steps": 60, "tenure": 5}
    def __init__(self, filename=None) -> None:
        # Optional optimizer defaults; flags win over the file
        self.config = self._read_cfg(filename or Config.FILENAME)

    def _read_cfg(self, filename):
        try:
            with open(filename, 'r') as cfg:
                config = json.load(cfg)
            if not isinstance(config, dict):
                log.warning('Config file %s is not a JSON object, ignoring it', filename)
                return None
            return config
        except FileNotFoundError:
            log.debug('Config file %s not found', filename)
        except Exception as e:
            log.warning('Config file %s unreadable: %s', filename, e)
        return None

    def get(self, key, value=None):
        # value is the explicit flag, None when the flag was not given
        if value is not None:
            return value
        if not self.empty() and key in self.config:
            return self.config[key]
        return Config.DEFAULTS[key]

    def get_dict(self):
        return self.config

    def empty(self):
        return self.config == None

class Parser(argparse.ArgumentParser):
    # usage errors leave through ExitCodes.Usage, not argparse's exit 2
    def error(self, message):
        raise UsageException(message)

def _write_json(doc, path):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w') as f:
        f.write(text)

def _write_csv(report, path):
    with open(path, 'w', newline='') as f:
        report.writeCsv(f)

def _finish(manifest, out, paths):
    for path in paths:
        manifest.addOutput(path)
    if out is not None:
        manifest.write(out + '.manifest.json')

def read_spec(path, manifest=None):
    with open(path) as f:
        spec = SpecSerializer.read(f, os.path.dirname(os.path.abspath(path)))
    if manifest is not None:
        manifest.addInput(path)
        if spec.getBaseSource().startswith('alist:'):
            manifest.addInput(os.path.join(os.path.dirname(path), spec.getBaseSource()[len('alist:'):]))
    return spec

def spec_from_args(args):
    """Builds the spec of the construct flags, rejecting flags that do not fit the method."""
    if args.xi is not None and args.method != AssignmentKind.CuttingVector:
        raise UsageException('--xi only applies to --method cutting-vector')
    if args.bm is not None and args.method != AssignmentKind.Bm:
        raise UsageException('--bm only applies to --method bm')
    if args.lambda_policy is not None and args.method != AssignmentKind.Bm:
        raise UsageException('--lambda only applies to --method bm')
    if args.J is not None and args.method != AssignmentKind.Bm:
        raise UsageException('--J only applies to --method bm, %s spreads with J = 1' % args.method)
    if args.base != 'ab' and args.method in (AssignmentKind.CuttingVector, AssignmentKind.Bm):
        raise UsageException('--method %s needs the ab base' % args.method)
    if args.base == 'ab':
        if args.p is None:
            raise UsageException('--p is required with the ab base')
        base = ABBase(args.gamma, args.p)
    elif args.base.startswith('alist:'):
        with open(args.base[len('alist:'):]) as f:
            base = AlistSerializer.read(f)
    else:
        raise UsageException('--base must be ab or alist:PATH')
    xi = bm = policy = None
    if args.method == AssignmentKind.CuttingVector:
        if args.xi is None:
            raise UsageException('--method cutting-vector needs --xi "a,b,c"')
        xi = CuttingVector.parse(args.xi, args.p)
    elif args.method == AssignmentKind.Bm:
        if args.bm is None:
            raise UsageException('--method bm needs --bm FILE')
        with open(args.bm) as f:
            bm = AssignmentMatrixBm.fromText(f.read(), args.m)
        policy = LambdaPolicy.parse(args.lambda_policy, 1 if args.J is None else args.J)
    elif args.m is None:
        raise UsageException('--method %s needs --m' % args.method)
    random = args.method in (AssignmentKind.RandomI, AssignmentKind.RandomII)
    return CodeFactory.createInstance(args.method, base, args.L, args.m, args.mode, cuttingVector=xi,
                                      assignmentMatrix=bm, seed=args.seed if random else None, lambdaPolicy=policy,
                                      reordered=not args.lift_order, baseSource=args.base)

def cmd_construct(args):
    spec = spec_from_args(args)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ('func', 'verbose')}
    manifest = RunManifest('construct', params, spec.getSeed())
    for path in (args.bm, args.base[len('alist:'):] if args.base.startswith('alist:') else None):
        if path:
            manifest.addInput(path)
    if args.lambda_policy and args.lambda_policy.startswith(LambdaPolicy.Table + ':'):
        manifest.addInput(args.lambda_policy.split(':', 1)[1])
    matrix = build(spec).expand()
    with open(args.out + '.alist', 'w') as f:
        AlistSerializer.write(matrix, f)
    with open(args.out + '.spec', 'w') as f:
        SpecSerializer.write(spec, f)
    log.info('wrote %s.alist: %d x %d', args.out, matrix.getRows(), matrix.getCols())
    _finish(manifest, args.out, [args.out + '.alist', args.out + '.spec'])
    return ExitCodes.Success

def _count_alist(path, method):
    with open(path) as f:
        matrix = AlistSerializer.read(f)
    discrepancies = []
    if method != CountMethod.Brute:
        log.warning('line counting needs a spec, counting %s by brute force', path)
        discrepancies.append(Discrepancy('fallback', 'line counting needs a spec; fallback to brute'))
    return CountReport(CountMethod.Brute, countSixCyclesBitLevel(matrix), discrepancies=discrepancies)

def cmd_count(args):
    if (args.spec is None) == (args.alist is None):
        raise UsageException('count needs exactly one of --spec and --alist')
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ('func', 'verbose')}
    manifest = RunManifest('count', params)
    if args.spec is not None:
        report = countAbs(read_spec(args.spec, manifest), args.method, validate=not args.no_validate)
    else:
        manifest.addInput(args.alist)
        report = _count_alist(args.alist, args.method)
    doc = report.toDict(includeTiming=args.timing)
    doc['diff'] = [d.toDict() for d in report.getDiscrepancies() if d.kind == 'method-disagreement']
    doc['notices'] = [d.message for d in report.getDiscrepancies() if d.kind == 'fallback']
    outputs = []
    path = None if args.out is None else args.out + '.json'
    _write_json(doc, path)
    if path:
        outputs.append(path)
    if args.csv:
        _write_csv(report, args.csv)
        outputs.append(args.csv)
    _finish(manifest, args.out, outputs)
    return ExitCodes.Disagreement if hasDisagreement(report) else ExitCodes.Success

def cmd_window(args):
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ('func', 'verbose')}
    manifest = RunManifest('window', params)
    spec = read_spec(args.spec, manifest)
    if spec.getM() != args.memory_mode:
        raise UsageException('--memory-mode %d does not match the spec memory m=%d'
                             % (args.memory_mode, spec.getM()))
    window = WindowSpec(args.S, args.memory_mode, args.step)
    report = countAbsWindowed(spec, window, args.method, args.threads)
    doc = report.toDict()
    doc['notices'] = [d.message for d in report.getDiscrepancies() if d.kind == 'fallback']
    outputs = []
    path = None if args.out is None else args.out + '.json'
    _write_json(doc, path)
    if path:
        outputs.append(path)
    if args.csv:
        _write_csv(report, args.csv)
        outputs.append(args.csv)
    _finish(manifest, args.out, outputs)
    return ExitCodes.Success

def _objective(args, m):
    if args.target == 'full':
        return Objective(args.p, args.L, m, backend=args.method)
    kind, _, size = args.target.partition(':')
    if kind != 'window' or not size.isdigit():
        raise UsageException('--target must be full or window:S')
    if m not in MemoryMode.All:
        raise UsageException('window targets need m in %s' % (MemoryMode.All,))
    return Objective(args.p, args.L, m, window=WindowSpec(int(size), m), backend=args.method)

def cmd_optimize(args):
    config = Config(args.config)
    search = SearchConfig(beam=config.get('beam', args.beam), backtrack=config.get('backtrack', args.backtrack),
                          columnOrder=args.column_order, seed=config.get('seed', args.seed),
                          budget=config.get('budget', args.budget), symmetry=args.symmetry,
                          threads=config.get('threads', args.threads), progress=args.progress,
                          restarts=config.get('restarts', args.restarts), steps=config.get('steps', args.steps),
                          tenure=config.get('tenure', args.tenure))
    params = {'p': args.p, 'L': args.L, 'm': args.m, 'target': args.target, 'family': args.family,
              'method': args.method}
    params.update(search.toDict())
    manifest = RunManifest('optimize', params, search.getSeed())
    outputs = []
    if args.family == AssignmentKind.CuttingVector:
        if args.m not in (None, 1):
            raise UsageException('--family cutting-vector has memory 1')
        xi, report = bestCuttingVector(args.p, args.L, _objective(args, 1), progress=args.progress,
                                       threads=search.getThreads())
        doc = {'family': args.family, 'xi': list(xi.getXi()), 'value': report.getTotal(), 'report': report.toDict()}
        spec = CodeFactory.createInstance(AssignmentKind.CuttingVector, ABBase(3, args.p), args.L, 1,
                                          CouplingMode.Terminated, cuttingVector=xi)
        code = ExitCodes.Success
    else:
        if args.m is None:
            raise UsageException('--family bm needs --m')
        result = optimizeBm(args.p, args.m, args.L, _objective(args, args.m), search)
        doc = dict(result.toDict(), family=args.family, config=search.toDict())
        spec = None
        if result.assignmentMatrix is not None:
            spec = CodeFactory.createInstance(AssignmentKind.Bm, ABBase(3, args.p), args.L, args.m,
                                              CouplingMode.Terminated, assignmentMatrix=result.assignmentMatrix)
        code = ExitCodes.Success if result.verification.get('agrees', True) else ExitCodes.Disagreement
        if args.out is not None:
            with open(args.out + '.config', 'w') as f:
                f.write(search.toText())
            outputs.append(args.out + '.config')
            if result.assignmentMatrix is not None:
                with open(args.out + '.bm', 'w') as f:
                    f.write(result.assignmentMatrix.toText())
                outputs.append(args.out + '.bm')
    path = None if args.out is None else args.out + '.json'
    _write_json(doc, path)
    if path:
        outputs.append(path)
        if spec is not None:
            with open(args.out + '.spec', 'w') as f:
                SpecSerializer.write(spec, f)
            outputs.append(args.out + '.spec')
    _finish(manifest, args.out, outputs)
    return code

def make_parser():
    parser = Parser(prog='sclift', description='Spatially coupled LDPC codes from algebraic lifts')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command', parser_class=Parser)
    sub.required = True

    construct = sub.add_parser('construct', help='build an SC code and write alist, spec and manifest')
    construct.add_argument('--base', default='ab', help='ab or alist:PATH')
    construct.add_argument('--gamma', type=int, default=3)
    construct.add_argument('--p', type=int)
    construct.add_argument('--L', type=int, required=True)
    construct.add_argument('--m', type=int)
    construct.add_argument('--J', type=int, help='lift degree of the bm lambdas, 1 when omitted')
    construct.add_argument('--mode', choices=CouplingMode.All, default=CouplingMode.Terminated)
    construct.add_argument('--method', choices=AssignmentKind.All, required=True)
    construct.add_argument('--xi')
    construct.add_argument('--bm')
    construct.add_argument('--lambda', dest='lambda_policy', help='identity, cyclic:l or file:PATH')
    construct.add_argument('--seed', type=int, default=DefaultSeed)
    construct.add_argument('--lift-order', action='store_true', help='keep tailbiting output in lift order')
    construct.add_argument('--out', required=True)
    construct.set_defaults(func=cmd_construct)

    count = sub.add_parser('count', help='count (3,3) absorbing sets')
    count.add_argument('--spec')
    count.add_argument('--alist')
    count.add_argument('--method', choices=CountMethod.All, default=CountMethod.Line)
    count.add_argument('--no-validate', action='store_true', help='skip the absorbing set check of cycles')
    count.add_argument('--timing', action='store_true')
    count.add_argument('--csv')
    count.add_argument('--out')
    count.set_defaults(func=cmd_count)

    window = sub.add_parser('window', help='count absorbing sets seen by a sliding window')
    window.add_argument('--spec', required=True)
    window.add_argument('--S', type=int, required=True)
    window.add_argument('--memory-mode', type=int, choices=MemoryMode.All, required=True)
    window.add_argument('--step', type=int)
    window.add_argument('--method', choices=(CountMethod.Line, CountMethod.Brute), default=CountMethod.Line)
    window.add_argument('--threads', type=int, default=1)
    window.add_argument('--csv')
    window.add_argument('--out')
    window.set_defaults(func=cmd_window)

    optimize = sub.add_parser('optimize', help='search cutting vectors or B_m grids')
    optimize.add_argument('--p', type=int, required=True)
    optimize.add_argument('--L', type=int, required=True)
    optimize.add_argument('--m', type=int)
    optimize.add_argument('--family', choices=(AssignmentKind.Bm, AssignmentKind.CuttingVector),
                          default=AssignmentKind.Bm)
    optimize.add_argument('--target', default='full', help='full or window:S')
    optimize.add_argument('--method', choices=(CountMethod.Line, CountMethod.Brute), default=CountMethod.Line)
    optimize.add_argument('--beam', type=int)
    optimize.add_argument('--backtrack', type=int)
    optimize.add_argument('--budget', type=int)
    optimize.add_argument('--seed', type=int)
    optimize.add_argument('--threads', type=int)
    optimize.add_argument('--restarts', type=int, help='tabu runs from random grids')
    optimize.add_argument('--steps', type=int, help='moves per tabu run, 0 skips tabu search')
    optimize.add_argument('--tenure', type=int)
    optimize.add_argument('--column-order', choices=ColumnOrder.All, default=ColumnOrder.LeftToRight)
    optimize.add_argument('--symmetry', action='store_true')
    optimize.add_argument('--progress', action='store_true')
    optimize.add_argument('--config', help='JSON defaults, %s when omitted' % Config.FILENAME)
    optimize.add_argument('--out')
    optimize.set_defaults(func=cmd_optimize)
    return parser

def main(argv=None):
    verbose = 0
    try:
        args = make_parser().parse_args(argv)
        verbose = args.verbose
        logging.basicConfig(level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)],
                            format='%(asctime)s %(levelname)s %(name)s: %(message)s')
        return args.func(args)
    except UsageException as e:
        code = ExitCodes.Usage
        error = e
    except SCLdpcException as e:
        code = ExitCodes.Validation
        error = e
    except OSError as e:
        code = ExitCodes.Usage
        error = e
    sys.stderr.write('%s\n%s\n' % (MessageLoader.load(code), error))
    return code

if __name__ == '__main__':
    sys.exit(main())
