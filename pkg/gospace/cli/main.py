"""Command line front end.

Every command writes one JSON report to standard output and a short
summary to standard error. Exit codes: 0 success, 1 property refuted or
violated, 2 input or validation error.
"""
import argparse
import logging
import os
import sys

import pandas

from gospace._version import __version__
from gospace.cli.analysis import analyze
from gospace.cli.analysis import go_report
from gospace.cli.analysis import invariants_report
from gospace.cli.analysis import natred_report
from gospace.cli.analysis import validation_report
from gospace.cli.catalog import Catalog
from gospace.cli.catalog import CatalogError
from gospace.cli.catalog import get_catalog_dir
from gospace.config import DEFAULT_BOUND
from gospace.config import DEFAULT_MAX_DEGREE
from gospace.config import DEFAULT_NUM_SAMPLES
from gospace.config import DEFAULT_SEED
from gospace.family.crown import complexify
from gospace.family.family import family_verify
from gospace.family.family import load_family
from gospace.geodesic.go_checker import check_omega_realform
from gospace.geodesic.go_checker import GO_MODES
from gospace.invariants.commutator import commutator_report
from gospace.liespace.space_io import dump_space
from gospace.liespace.space_io import load_space
from gospace.utils.json_utils import dumps_report

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT_ERROR = 2


class InvalidSpaceError(ValueError):

    def __init__(self, report):
        super(InvalidSpaceError, self).__init__(
            '{} fails validation: {}'.format(
                report['space'],
                ', '.join(sorted(set(f['check']
                                     for f in report['failures'])))))
        self.report = report


def _add_sampling_arguments(parser, bound=True):
    parser.add_argument('--samples', type=int, default=DEFAULT_NUM_SAMPLES,
                        help='number of random samples')
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED,
                        help='random seed')
    if bound:
        parser.add_argument('--bound', type=int, default=DEFAULT_BOUND,
                            help='random coordinates lie in [-bound, bound]')


def _add_degree_argument(parser):
    parser.add_argument('--max-degree', type=int, default=DEFAULT_MAX_DEGREE,
                        dest='max_degree', help='degree cap')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='gospace',
        description='Exact analysis of homogeneous pseudo-riemannian spaces')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='debug logging on standard error')
    parser.add_argument('--catalog', default=None,
                        help='catalog directory used to resolve names')
    parser.add_argument('--progress', action='store_true',
                        help='show progress bars')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('validate', help='check the structural invariants')
    p.add_argument('file')

    p = sub.add_parser('analyze', help='full report of a space')
    p.add_argument('file')
    p.add_argument('--mode', choices=GO_MODES, default='auto')
    _add_sampling_arguments(p)
    _add_degree_argument(p)

    p = sub.add_parser('check-go', help='geodesic orbit verdict')
    p.add_argument('file')
    p.add_argument('--mode', choices=GO_MODES, default='auto')
    _add_sampling_arguments(p)

    p = sub.add_parser('check-natred', help='natural reductivity decision')
    p.add_argument('file')

    p = sub.add_parser('invariants', help='invariants of S(m) per degree')
    p.add_argument('file')
    _add_degree_argument(p)

    p = sub.add_parser('commutators',
                       help='commutators of symmetrized invariants')
    p.add_argument('file')
    _add_degree_argument(p)

    p = sub.add_parser('complexify', help='print the crown as a space file')
    p.add_argument('file')

    p = sub.add_parser('family-verify', help='cross-check a real form family')
    p.add_argument('file')
    _add_sampling_arguments(p)
    _add_degree_argument(p)

    p = sub.add_parser('sample-omega',
                       help='compare the moduli variety with its crown')
    p.add_argument('file')
    _add_sampling_arguments(p)
    return parser


def resolve_path(path, catalog_dir=None, logger=None):
    """Resolves a file argument to a space or family file.

    Candidates are `path` itself, ``<catalog>/<path>`` and
    ``<catalog>/<path>.json``. Failing those, `path` is looked up as an
    entry name of the :class:`Catalog`, which loads and validates the whole
    directory. An unresolved `path` is returned as is.
    """
    if os.path.exists(path):
        return path
    directory = get_catalog_dir(catalog_dir)
    for candidate in (os.path.join(directory, path),
                      os.path.join(directory, path + '.json')):
        if os.path.exists(candidate):
            return candidate
    if os.path.isdir(directory):
        paths = Catalog(directory, logger=logger).paths
        if path in paths:
            return paths[path]
    return path


def _load_valid_space(path, logger):
    space = load_space(path)
    report = validation_report(space, logger=logger)
    if not report['valid']:
        raise InvalidSpaceError(report)
    return space


def _cmd_validate(args, logger):
    report = validation_report(load_space(args.path), logger=logger)
    rows = [{'check': f['check'], 'witness': f['witness']}
            for f in report['failures']]
    code = EXIT_OK if report['valid'] else EXIT_INPUT_ERROR
    return report, code, rows


def _cmd_analyze(args, logger):
    space = load_space(args.path)
    report = analyze(space, mode=args.mode, samples=args.samples,
                     seed=args.seed, bound=args.bound, d_max=args.max_degree,
                     show_progress=args.progress, logger=logger)
    if not report['validation']['valid']:
        return report, EXIT_INPUT_ERROR, []
    rows = [
        {'property': 'signature', 'value': report['signature']},
        {'property': 'symmetric pair',
         'value': report['symmetric_pair']['value']},
        {'property': 'geodesic orbit', 'value': report['go']['mode']},
        {'property': 'naturally reductive',
         'value': report['natred']['natred']},
        {'property': 'invariant dims',
         'value': report['invariants']['dims']},
        {'property': 'commutator refutations',
         'value': len(report['commutators']['refutations'])},
        {'property': 'violations', 'value': len(report['violations'])},
    ]
    code = EXIT_REFUTED if report['violations'] else EXIT_OK
    return report, code, rows


def _cmd_check_go(args, logger):
    space = _load_valid_space(args.path, logger)
    verdict = go_report(space, mode=args.mode, samples=args.samples,
                        seed=args.seed, bound=args.bound,
                        show_progress=args.progress, logger=logger)
    report = verdict.to_dict()
    rows = [{'space': space.name, 'mode': verdict.mode,
             'tested': verdict.tested, 'failed': verdict.failed}]
    return report, EXIT_REFUTED if verdict.is_refuted else EXIT_OK, rows


def _cmd_check_natred(args, logger):
    space = _load_valid_space(args.path, logger)
    report = natred_report(space, logger=logger)
    rows = [{'space': space.name, 'natred': report['natred'],
             'crown_natred': report.get('crown_natred')}]
    ok = report['natred'] and report.get('consistent', True)
    return report, EXIT_OK if ok else EXIT_REFUTED, rows


def _cmd_invariants(args, logger):
    space = _load_valid_space(args.path, logger)
    report = invariants_report(space, d_max=args.max_degree, logger=logger)
    rows = [{'degree': d, 'dim': n} for d, n in enumerate(report['dims'])]
    ok = report.get('consistent', True)
    return report, EXIT_OK if ok else EXIT_REFUTED, rows


def _cmd_commutators(args, logger):
    space = _load_valid_space(args.path, logger)
    report = commutator_report(space, d_max=args.max_degree, logger=logger)
    rows = [{'p': r['p'], 'q': r['q'], 'nonzero_term': r['nonzero_term']}
            for r in report['refutations']]
    ok = not report['refutations'] and \
        report['crown_consistent'] is not False
    return report, EXIT_OK if ok else EXIT_REFUTED, rows


def _cmd_complexify(args, logger):
    space = _load_valid_space(args.path, logger)
    crown = complexify(space)
    return dump_space(crown), EXIT_OK, [
        {'space': crown.name, 'field': crown.field,
         'signature': list(crown.signature())}]


def _cmd_family_verify(args, logger):
    family = load_family(args.path, catalog_dir=get_catalog_dir(args.catalog),
                         logger=logger)
    report = family_verify(family, samples=args.samples, seed=args.seed,
                           bound=args.bound, d_max=args.max_degree,
                           logger=logger)
    rows = [{'space': s['name'], 'signature': s['signature'],
             'go': s['go']['mode'], 'natred': s['natred'],
             'commutator_refuted': s['commutator_refuted']}
            for s in report['members'] + [report['crown']]]
    code = EXIT_REFUTED if report['violations'] else EXIT_OK
    return report, code, rows


def _cmd_sample_omega(args, logger):
    space = _load_valid_space(args.path, logger)
    report = check_omega_realform(space, n=args.samples, seed=args.seed,
                                  bound=args.bound, logger=logger)
    rows = [{'space': space.name, 'members': report['members'],
             'non_members': report['non_members'],
             'discrepancies': report['discrepancies']}]
    code = EXIT_REFUTED if report['discrepancies'] else EXIT_OK
    return report, code, rows


_commands = {
    'validate': _cmd_validate,
    'analyze': _cmd_analyze,
    'check-go': _cmd_check_go,
    'check-natred': _cmd_check_natred,
    'invariants': _cmd_invariants,
    'commutators': _cmd_commutators,
    'complexify': _cmd_complexify,
    'family-verify': _cmd_family_verify,
    'sample-omega': _cmd_sample_omega,
}


def run(argv=None, stdout=None, stderr=None):
    """Runs one command.

    Args:
        argv (list or None): arguments without the program name.
        stdout: stream for the JSON report, defaults to `sys.stdout`.
        stderr: stream for the summary, defaults to `sys.stderr`.

    Returns (int): exit code.

    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    root = logging.getLogger()
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    logger = logging.getLogger('gospace')
    try:
        args.path = resolve_path(args.file, args.catalog, logger=logger)
        try:
            report, code, rows = _commands[args.command](args, logger)
        except InvalidSpaceError as e:
            logger.error(str(e))
            report, code, rows = e.report, EXIT_INPUT_ERROR, []
        except (CatalogError, IndexError, ValueError) as e:
            logger.error(str(e))
            report = {'error': type(e).__name__, 'message': str(e)}
            code, rows = EXIT_INPUT_ERROR, []
        stdout.write(dumps_report(report) + '\n')
        if rows:
            stderr.write(pandas.DataFrame(rows).to_string(index=False) + '\n')
        return code
    finally:
        root.removeHandler(handler)


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
