"""Command line front end.

Exit status is 0 when every check agrees with the tables, 2 when an
inconsistency is found and 1 on usage or configuration errors.
"""

import argparse
import json
import logging
import sys

from . import catalog, chevalley, fq, matgrp, rootsys
from .config import Config
from .errors import (BruhatError, CertificationError,
                     NeedsLargerPrimeError, NotInGroupError, SphericalError,
                     TooLargeError)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2


class UsageError(Exception):
    pass


class RunConfig(object):
    """Validated settings of one command line run.

    The fields common to all subcommands are attributes, anything
    else the subcommand parser defines is kept in :attr:`options`.
    """

    Fields = ('command', 'family', 'rank', 'prime', 'seed', 'budget',
              'format', 'output')

    def __init__(self, **kwargs):
        for f in self.Fields:
            setattr(self, f, kwargs.pop(f, None))
        self.options = kwargs

    @classmethod
    def from_args(cls, args, config):
        kwargs = vars(args).copy()
        for k in ('log_level', 'workers'):
            kwargs.pop(k, None)
        run = cls(**kwargs)
        if run.command == 'verify' and run.seed is None:
            run.seed = config.DefaultSeed
        run.validate()
        logger.debug("%r", run)
        return run

    def validate(self):
        rootsys.check_type(self.family, self.rank)
        if self.command == 'verify' and self.family not in 'ABCD':
            raise UsageError("verify needs a classical family")
        if self.prime is not None and \
           (self.prime == 2 or not fq.is_prime(self.prime)):
            raise UsageError("%d is not an odd prime" % self.prime)
        if self.command == 'verify' and self.budget != 'exhaustive' \
           and self.seed is None:
            raise UsageError("sampling runs need a seed")

    def __repr__(self):
        l = ["%s=%r" % (f, getattr(self, f)) for f in self.Fields
             if getattr(self, f) is not None]
        return "RunConfig(%s)" % ", ".join(l)


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _budget(value):
    if value == 'exhaustive':
        return value
    try:
        b = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("budget must be an integer or "
                                         "'exhaustive'")
    if b <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return b


def _type_args(p, prime=False):
    p.add_argument('--family', required=True, choices=list("ABCDEFG"),
                   help="Dynkin family")
    p.add_argument('--rank', required=True, type=int, help="rank")
    if prime:
        p.add_argument('--prime', type=int, default=5,
                       help="odd good prime of the field (default 5)")


def _format_args(p):
    p.add_argument('--format', choices=['json', 'tsv', 'text'],
                   default='text', help="output format")
    p.add_argument('--output', help="write to this file instead of stdout")


def build_parser():
    parser = _Parser(prog="spherical-classes",
                     description="Spherical conjugacy classes of simple "
                     "algebraic groups and their Bruhat cells.")
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help="logging level (default WARNING)")
    parser.add_argument('--workers', type=int, default=None,
                        help="worker processes for sampling runs "
                        "(default from SPHERICAL_WORKERS)")
    sub = parser.add_subparsers(dest='command', required=True,
                                parser_class=_Parser)

    p = sub.add_parser('classify', help="emit the table of spherical "
                       "classes of a type")
    _type_args(p)
    _format_args(p)
    p.add_argument('--no-certify', action='store_true',
                   help="skip the certifying involution column")

    p = sub.add_parser('verify', help="check the involution criterion over "
                       "a prime field")
    _type_args(p, prime=True)
    p.add_argument('--seed', type=int, default=None,
                   help="master seed (default from SPHERICAL_SEED)")
    p.add_argument('--budget', type=_budget, default=None,
                   help="samples per class or 'exhaustive'")
    p.add_argument('--output', help="write to this file instead of stdout")

    p = sub.add_parser('candidates', help="subsets of the extended basis "
                       "within the dimension bound")
    _type_args(p)
    p.add_argument('--bound', type=int, default=None,
                   help="dimension bound (default l(w0) + rk(1 - w0))")
    p.add_argument('--all', action='store_true',
                   help="keep non maximal subsets")
    _format_args(p)

    p = sub.add_parser('bruhat', help="Bruhat cell of a matrix read as "
                       "JSON from stdin")
    _type_args(p, prime=True)
    p.add_argument('--matrix', help="JSON matrix instead of stdin")

    p = sub.add_parser('dims', help="class dimensions from the Lie algebra")
    _type_args(p, prime=True)
    _format_args(p)
    return parser


def _emit(run, text):
    if getattr(run, 'output', None):
        with open(run.output, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _text_table(rows, columns):
    if not rows:
        return ""
    widths = [max(len(c), *(len(str(r.get(c, ""))) for r in rows))
              for c in columns]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(w)
                               for c, w in zip(columns, widths)))
    return "\n".join(l.rstrip() for l in lines) + "\n"


def _render(run, rows, columns):
    if run.format == 'json':
        return json.dumps(rows, indent=2) + "\n"
    if run.format == 'tsv':
        lines = ["\t".join(columns)]
        lines += ["\t".join(str(r.get(c, "")) for c in columns) for r in rows]
        return "\n".join(lines) + "\n"
    return _text_table(rows, columns)


def cmd_classify(run, config):
    descs = catalog.spherical_classes(run.family, run.rank)
    rows = catalog.to_rows(descs)
    status = EXIT_OK
    for d, row in zip(descs, rows):
        if run.options["no_certify"]:
            continue
        try:
            w = catalog.certify_dimension_identity(d, workers=config.Workers)
            row['certificate'] = " ".join(map(str, w.word))
        except CertificationError as e:
            logger.error("%s", e)
            row['certificate'] = "FAILED"
            status = EXIT_INCONSISTENT
    if run.family == 'A' and run.rank == 1:
        rows.append({'type': "A1", 'kind': "all", 'name': "*",
                     'notes': "all classes spherical"})
    columns = list(catalog.COLUMNS)
    if not run.options["no_certify"]:
        columns.append('certificate')
    _emit(run, _render(run, rows, columns))
    return status


def cmd_verify(run, config):
    G = matgrp.make_group(run.family, run.rank, run.prime)
    out = []
    status = EXIT_OK
    for d in catalog.spherical_classes(run.family, run.rank):
        try:
            r = matgrp.verify_involution_criterion(
                G, d, run.budget, run.seed, config.Workers, config)
        except NeedsLargerPrimeError as e:
            out.append({'class': str(d), 'skipped': str(e)})
            continue
        except (BruhatError, TooLargeError) as e:
            logger.error("%s: %s", d, e)
            out.append({'class': str(d), 'ok': False, 'error': str(e)})
            status = EXIT_INCONSISTENT
            continue
        rec = r.as_dict()
        rec['ok'] = r.all_involutions and r.achieved
        if d.notes:
            rec['notes'] = list(d.notes)
        if not rec['ok']:
            status = EXIT_INCONSISTENT
        out.append(rec)
    for spec, cell in catalog.nonspherical_witness_specs(run.family,
                                                         run.rank):
        try:
            h = matgrp.find_noninvolution_witness(
                G, spec, cell, run.budget if run.budget != 'exhaustive'
                else None, run.seed)
        except NeedsLargerPrimeError as e:
            out.append({'witness': spec.label, 'skipped': str(e)})
            continue
        except BruhatError as e:
            logger.error("%s: %s", spec.label, e)
            out.append({'witness': spec.label, 'found': False,
                        'error': str(e)})
            status = EXIT_INCONSISTENT
            continue
        out.append({'witness': spec.label, 'cell': list(cell.word),
                    'found': h is not None,
                    'conjugator': h.to_list() if h is not None else None})
        if h is None:
            status = EXIT_INCONSISTENT
    _emit(run, "".join(json.dumps(o, sort_keys=True) + "\n" for o in out))
    return status


def cmd_candidates(run, config):
    rs = rootsys.build_root_system(run.family, run.rank)
    bound = run.options["bound"]
    if bound is None:
        bound = catalog.dimension_bound(rs)
    rows = []
    for k, s in enumerate(rootsys.enumerate_semisimple_candidates(
            rs, bound, maximal=not run.options["all"])):
        rows.append({'name': "Pi%d" % (k + 1), 'labels': s.label_str(),
                     'type': s.type_name,
                     'dim': chevalley.class_dim_semisimple(rs, s)})
    _emit(run, _render(run, rows, ['name', 'labels', 'type', 'dim']))
    return EXIT_OK


def cmd_bruhat(run, config):
    G = matgrp.make_group(run.family, run.rank, run.prime)
    text = run.options["matrix"]
    if text is None:
        text = sys.stdin.read()
    try:
        g = matgrp.matrix_from_json(G, text)
    except ValueError as e:
        if isinstance(e, NotInGroupError):
            raise
        raise UsageError("cannot parse matrix: %s" % e)
    w = matgrp.bruhat_cell(G, g)
    sys.stdout.write(" ".join(map(str, w.word)) + "\n")
    return EXIT_OK


def cmd_dims(run, config):
    rs = rootsys.build_root_system(run.family, run.rank)
    alg = chevalley.build_algebra(rs)
    rows = []
    status = EXIT_OK
    for d in catalog.spherical_classes(run.family, run.rank):
        if d.kind != 'unipotent':
            continue
        oracle = chevalley.class_dim_nilpotent(alg, d.unipotent, run.prime)
        row = {'label': d.unipotent.label, 'dim': d.expected_dim,
               'ad_rank': oracle}
        if d.partition is not None:
            row['formula'] = chevalley.class_dim_unipotent_partition(
                rs.family, rs.rank, d.partition)
        if oracle != d.expected_dim:
            status = EXIT_INCONSISTENT
        row['spherical'] = True
        rows.append(row)
    if rs.family in 'ABCD':
        seen = {d.partition for d in catalog.spherical_classes(
            run.family, run.rank) if d.kind == 'unipotent'}
        for lam in chevalley.valid_partitions(rs.family, rs.rank):
            if lam in seen:
                continue
            spec = chevalley.NilpotentSpec.from_partition(rs, lam)
            formula = chevalley.class_dim_unipotent_partition(
                rs.family, rs.rank, lam)
            oracle = chevalley.class_dim_nilpotent(alg, spec, run.prime)
            if oracle != formula:
                status = EXIT_INCONSISTENT
            rows.append({'label': spec.label, 'dim': formula,
                         'ad_rank': oracle, 'formula': formula,
                         'spherical': False})
    logger.info("%s: algebra of dimension %d", rs.name, alg.dim)
    _emit(run, _render(run, rows, ['label', 'dim', 'ad_rank', 'formula',
                                   'spherical']))
    return status


_commands = {
    'classify': cmd_classify,
    'verify': cmd_verify,
    'candidates': cmd_candidates,
    'bruhat': cmd_bruhat,
    'dims': cmd_dims,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = Config(Workers=args.workers)
        run = RunConfig.from_args(args, config)
        return _commands[run.command](run, config)
    except NotInGroupError as e:
        sys.stderr.write("error: %s (expected %s)\n" % (e, e.identity))
        return EXIT_USAGE
    except (UsageError, SphericalError, ValueError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
