"""
Command-line front end.

Examples:
    python -m nichegraph recognize c4c4.graph --witness witness.bt
    python -m nichegraph niche witness.bt --dot niche.dot
    python -m nichegraph verify witness.bt
    python -m nichegraph cross-check --max 6 --jobs 4
    python -m nichegraph census --left 3 --right 3 --csv census_3_3.csv
    python -m nichegraph table --family paths --min 1 --max 5 --png paths.png
    python -m nichegraph -config config.yml fuzz --trials 10000 --max-side 8 --seed 0

Decisions go to stdout with exit code 0. Exit codes: 1 usage or file problem, 2 parse or model error,
3 verification failure, 4 size limit.
"""

import argparse
import logging
import os
import sys

from nichegraph.config import DEFAULT_LIMITS, load_jobs, load_limits
from nichegraph.errors import (CertificateMismatch, InternalRoundTripFailure, NicheGraphError, SizeLimit)
from nichegraph.fileio import (decode_text, emit_certificate, emit_dot, emit_graph, emit_tournament, parse_any,
                               parse_graph, parse_tournament)
from nichegraph.graphs import BipartiteTournament
from nichegraph.niche import niche_graph, verify_relation_laws
from nichegraph.oracle import census, cross_check, fuzz_soundness, random_tournament
from nichegraph.properties import (condensation_shape_violations, verify_chordal_characterization,
                                   verify_niche_properties, verify_regular_substructure)
from nichegraph.realize import realize
from nichegraph.recognize import recognize
from nichegraph.report import LawReport
from nichegraph.tables import plot_realizability_table, realizability_table, realizable_pairs
from nichegraph.utils import expand_path, read_binary_file, write_text_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_SIZE = 4


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def get_parser():
    """
    Input argument parser function
    """
    parser = ArgumentParser(
        prog='nichegraph',
        description='Niche graphs of bipartite tournaments: compute them, recognize them, synthesize witness '
                    'tournaments and check everything against brute-force enumeration.')
    parser.add_argument('-config', default=None,
                        help='Path to a YAML file with "limits" and "jobs". Example: config.yml')
    parser.add_argument('--log-file', default=None,
                        help='Also write the log to this file (an existing file is overwritten).')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging.')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    sub = subparsers.add_parser('niche', help='Print the niche graph of a tournament file.')
    sub.add_argument('file', help='Tournament file.')
    sub.add_argument('--out', help='Write the niche graph here instead of stdout.')
    sub.add_argument('--dot', help='Also write the niche graph as DOT.')

    sub = subparsers.add_parser('recognize', help='Decide niche-realizability of a graph file.')
    sub.add_argument('file', help='Graph file.')
    sub.add_argument('--witness', help='On YES, write a witness tournament here.')

    sub = subparsers.add_parser('verify', help='Run the relation laws and the property suite.')
    sub.add_argument('file', help='Graph or tournament file.')

    sub = subparsers.add_parser('cross-check', help='Compare the recognizer with the census.')
    sub.add_argument('--max', type=int, default=6, help='Largest number of vertices. Default: 6')
    sub.add_argument('--jobs', type=int, default=None, help='Worker processes.')

    sub = subparsers.add_parser('census', help='Niche graphs of all orientations of K_{m,n}.')
    sub.add_argument('--left', type=int, required=True, help='m, size of the left side.')
    sub.add_argument('--right', type=int, required=True, help='n, size of the right side.')
    sub.add_argument('--jobs', type=int, default=None, help='Worker processes.')
    sub.add_argument('--csv', help='Write the CSV here instead of stdout.')

    sub = subparsers.add_parser('random', help='Seeded random tournament.')
    sub.add_argument('--left', type=int, required=True)
    sub.add_argument('--right', type=int, required=True)
    sub.add_argument('--seed', type=int, required=True)
    sub.add_argument('--out', help='Write the tournament here instead of stdout.')

    sub = subparsers.add_parser('table', help='Realizability of two paths or two cycles over a size range.')
    sub.add_argument('--family', choices=['paths', 'cycles'], required=True)
    sub.add_argument('--min', type=int, required=True)
    sub.add_argument('--max', type=int, required=True)
    sub.add_argument('--csv', help='Write the table as CSV.')
    sub.add_argument('--png', help='Write the table as a heatmap figure.')

    sub = subparsers.add_parser('fuzz', help='Soundness fuzz on random tournaments.')
    sub.add_argument('--trials', type=int, default=10000)
    sub.add_argument('--max-side', type=int, default=8)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--jobs', type=int, default=None, help='Worker processes.')
    return parser


def _emit(text, fname_out=None):
    if fname_out is None:
        sys.stdout.write(text)
    else:
        write_text_file(text, fname_out)
        logger.info(f'Written {fname_out}')


def _read(file_path):
    return decode_text(read_binary_file(expand_path(file_path)))


def _print_report(report):
    _emit('\n'.join(report.lines()) + '\n')


def run_niche(args, limits, jobs):
    g = niche_graph(parse_tournament(_read(args.file)))
    _emit(emit_graph(g), args.out)
    if args.dot:
        write_text_file(emit_dot(g), args.dot)
        logger.info(f'Written {args.dot}')
    return EXIT_OK


def run_recognize(args, limits, jobs):
    g = parse_graph(_read(args.file))
    cert = recognize(g)
    logger.info(f'{args.file}: {cert.decision.value} ({cert.reason.value})')
    _emit(emit_certificate(cert))
    if args.witness and cert.is_yes:
        write_text_file(emit_tournament(realize(g)), args.witness)
        logger.info(f'Witness written to {args.witness}')
    return EXIT_OK


def _graph_report(g, limits):
    report = verify_niche_properties(g, limits)
    report.add('condensation_shape', condensation_shape_violations(g))
    try:
        report.extend(verify_regular_substructure(g, limits=limits))
    except SizeLimit as e:
        report.skip('regular_substructure', f'{e.routine} supports at most {e.limit} (got {e.size})')
    cert = recognize(g)
    if cert.is_yes:
        report.add('chordal_characterization', [] if verify_chordal_characterization(g, cert) else [('disagrees',)])
    return report


def run_verify(args, limits, jobs):
    x = parse_any(_read(args.file))
    if isinstance(x, BipartiteTournament):
        g = niche_graph(x)
        report = LawReport().extend(verify_relation_laws(x, g)).extend(_graph_report(g, limits))
    else:
        report = _graph_report(x, limits)
    _print_report(report)
    logger.info(f'{len(report.failures)} law(s) failed')
    return EXIT_OK if report.passed else EXIT_VERIFY


def run_cross_check(args, limits, jobs):
    report = cross_check(args.max, jobs=jobs, limits=limits)
    _print_report(report)
    return EXIT_OK if report.passed else EXIT_VERIFY


def run_census(args, limits, jobs):
    result = census(args.left, args.right, jobs=jobs, limits=limits)
    _emit(result.to_frame().to_csv(index=False, lineterminator='\n'), args.csv)
    return EXIT_OK


def run_random(args, limits, jobs):
    _emit(emit_tournament(random_tournament(args.left, args.right, args.seed)), args.out)
    return EXIT_OK


def run_table(args, limits, jobs):
    table = realizability_table(args.family, range(args.min, args.max + 1))
    _emit(table.replace({True: 'YES', False: 'NO'}).to_string() + '\n')
    _emit('realizable: ' + ' '.join(f'({m},{n})' for m, n in realizable_pairs(table)) + '\n')
    if args.csv:
        table.to_csv(args.csv, lineterminator='\n')
        logger.info(f'Written {args.csv}')
    if args.png:
        plot_realizability_table(table, args.png, title=f'Niche-realizability of two {args.family}')
    return EXIT_OK


def run_fuzz(args, limits, jobs):
    report = fuzz_soundness(args.trials, args.max_side, args.seed, limits=limits, jobs=jobs)
    _print_report(report)
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {
    'niche': run_niche,
    'recognize': run_recognize,
    'verify': run_verify,
    'cross-check': run_cross_check,
    'census': run_census,
    'random': run_random,
    'table': run_table,
    'fuzz': run_fuzz,
}


def _setup_logging(args):
    """Handlers go to logging.root; stderr keeps stdout free for results."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if args.log_file:
        if os.path.exists(args.log_file):
            os.remove(args.log_file)
        handlers.append(logging.FileHandler(args.log_file))
    for handler in handlers:
        logging.root.addHandler(handler)
    logging.root.setLevel(logging.DEBUG if args.verbose else logging.INFO)
    return handlers


def main(argv=None):

    # Parse the command line arguments
    parser = get_parser()
    args = parser.parse_args(argv)

    handlers = _setup_logging(args)
    try:
        if args.config:
            config_path = expand_path(args.config)
            limits = load_limits(config_path)
            jobs = load_jobs(config_path)
        else:
            limits, jobs = DEFAULT_LIMITS, 1
        if getattr(args, 'jobs', None) is not None:
            jobs = args.jobs
        return COMMANDS[args.command](args, limits, jobs)
    except SizeLimit as e:
        logger.error(str(e))
        return EXIT_SIZE
    except (CertificateMismatch, InternalRoundTripFailure) as e:
        logger.error(str(e))
        return EXIT_VERIFY
    except NicheGraphError as e:
        logger.error(str(e))
        return EXIT_PARSE
    except (OSError, ValueError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    finally:
        for handler in handlers:
            logging.root.removeHandler(handler)
            handler.close()


if __name__ == "__main__":
    sys.exit(main())
