# -*- coding: utf-8 -*-

"""This file is part of the ICNC library.

ICNC is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of
the License, or (at your option) any later version.

ICNC is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with ICNC. If not, see <http://www.gnu.org/licenses/>.

"""

from __future__ import print_function
import argparse
import io
import json
import os
import sys
import tempfile

from .classifier import classify
from .config import merge_limits
from .duality import dualize_to_index_code
from .exceptions import CapExceededError, ICNCError, InfeasibleCodeError
from .generator import FINAL_CONFIGURATIONS, canonical_instance, randomized_instance
from .linalg import BinMatrix
from .netcode import NetworkCode, check_feasible, extract_coding_matrix
from .sideinfo import compute_bounds, format_sig, min_feedback_vertex_sets, read_sig
from .solver import IndexCodeSolver
from .sweeps import bounds_sweep, duality_sweep, transform_sweep
from .transform import build_ncnetwork, demand_label
from ._version import __version__


EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


def positive_integer(value):
    """Ensure that the provided value is a positive integer.

    Parameters
    ----------
    value: string
        The number to evaluate

    Returns
    -------
    value: int
        Returns a positive integer
    """
    try:
        value = int(value)
    except Exception:
        raise argparse.ArgumentTypeError('Invalid int value: \'{}\''.format(value))
    if value < 1:
        raise argparse.ArgumentTypeError('Invalid positive int value: \'{}\''.format(value))
    return value


def vertex_list(value):
    """Parse a comma-separated list of message indices such as '1,2,3'.

    Parameters
    ----------
    value: string
        The list to parse

    Returns
    -------
    value: tuple of int
    """
    try:
        vertices = tuple(int(token) for token in value.split(',') if token.strip())
    except Exception:
        raise argparse.ArgumentTypeError('Invalid vertex list: \'{}\''.format(value))
    if not vertices or any(v < 1 for v in vertices):
        raise argparse.ArgumentTypeError('Invalid vertex list: \'{}\''.format(value))
    return vertices


def _common_arguments():
    parser = argparse.ArgumentParser(add_help=False)

    parser.add_argument(
        '--path-limit',
        action='store',
        dest='PATH_LIMIT',
        default=None,
        type=positive_integer,
        help='Maximum number of paths enumerated between two vertices.'
    )

    parser.add_argument(
        '--cycle-limit',
        action='store',
        dest='CYCLE_LIMIT',
        default=None,
        type=positive_integer,
        help='Maximum number of cycles enumerated when computing nu.'
    )

    parser.add_argument(
        '--minrank-max-n',
        action='store',
        dest='MINRANK_MAX_N',
        default=None,
        type=positive_integer,
        help='Largest number of messages handed to the exhaustive minrank search.'
    )

    parser.add_argument(
        '--format',
        action='store',
        dest='FORMAT',
        default=None,
        choices=['json', 'text', 'dot'],
        help='Output format. JSON is the default except for gen, which writes .sig text.'
    )

    parser.add_argument(
        '-o',
        '--output-file',
        action='store',
        dest='OUTPUT_FILE',
        default=None,
        type=str,
        help='File to write the output to instead of stdout; written atomically.'
    )

    parser.add_argument(
        '-v',
        action='store',
        dest='VERBOSITY',
        default=1,
        choices=[0, 1, 2, 3],
        type=int,
        help=(
            'How much information ICNC communicates while it is running: '
            '0 = none, 1 = minimal, 2 = high, 3 = all. A setting of 3 '
            'adds a progress bar during sweeps.'
        )
    )

    parser.add_argument(
        '--no-update-check',
        action='store_true',
        dest='DISABLE_UPDATE_CHECK',
        default=False,
        help='Flag indicating whether the ICNC version checker should be disabled.'
    )
    return parser


def _get_arg_parser():
    """Main function that is called when ICNC is run on the command line."""
    parser = argparse.ArgumentParser(
        description=(
            'A Python tool that builds optimal linear index codes for side-information '
            'graphs through their network coding dual.'
        ),
        add_help=False
    )

    parser.add_argument(
        '-h',
        '--help',
        action='help',
        help='Show this help message and exit.'
    )

    parser.add_argument(
        '--version',
        action='version',
        version='ICNC {version}'.format(version=__version__),
        help='Show the ICNC version number and exit.'
    )

    common = _common_arguments()
    subparsers = parser.add_subparsers(dest='COMMAND', metavar='COMMAND')
    subparsers.required = True

    bounds = subparsers.add_parser('bounds', parents=[common],
                                   help='MAIS, tau, nu and minrank2 of a .sig graph.')
    bounds.add_argument('INPUT_FILE', type=str, help='Side-information graph in .sig format.')

    transform = subparsers.add_parser('transform', parents=[common],
                                      help='Coding network of a .sig graph.')
    transform.add_argument('INPUT_FILE', type=str, help='Side-information graph in .sig format.')
    transform.add_argument(
        '--vtau',
        action='store',
        dest='VTAU',
        default=None,
        type=vertex_list,
        help='Comma-separated feedback vertex set; the first minimum one by default.'
    )

    classify_parser = subparsers.add_parser('classify', parents=[common],
                                            help='Class I / Class Ia report of a .sig graph.')
    classify_parser.add_argument('INPUT_FILE', type=str, help='Side-information graph in .sig format.')
    classify_parser.add_argument(
        '--vtau',
        action='store',
        dest='VTAU',
        default=None,
        type=vertex_list,
        help='Classify only the network of this vertex set.'
    )

    solve = subparsers.add_parser('solve', parents=[common], help='Optimal index code for a .sig graph.')
    solve.add_argument('INPUT_FILE', type=str, help='Side-information graph in .sig format.')
    solve.add_argument(
        '--cross-validate',
        action='store_true',
        dest='CROSS_VALIDATE',
        default=False,
        help='Re-derive table-built network codes with the exhaustive assignment search.'
    )
    solve.add_argument(
        '--max-time-secs',
        action='store',
        dest='MAX_TIME_SECS',
        default=None,
        type=positive_integer,
        help='How many seconds solving may take.'
    )

    verify = subparsers.add_parser('verify', parents=[common], help='Check an index code against a .sig graph.')
    verify.add_argument('INPUT_FILE', type=str, help='Side-information graph in .sig format.')
    verify.add_argument(
        'CODE_FILE',
        type=str,
        help=(
            'JSON file with the code rows as bitstrings, e.g. the output of solve, or a '
            'network code as a list of {"edge": [tail, head], "vector": bits} entries.'
        )
    )
    verify.add_argument(
        '--vtau',
        action='store',
        dest='VTAU',
        default=None,
        type=vertex_list,
        help='Feedback vertex set of a network code; read from its demand vertices by default.'
    )

    gen = subparsers.add_parser('gen', parents=[common], help='Write a Class Ia instance as .sig.')
    gen.add_argument('STYLE', choices=['A', 'B'], help='Skeleton style.')
    gen.add_argument('REDUCED', choices=list(FINAL_CONFIGURATIONS), help='Final configuration.')
    gen.add_argument(
        '--seed',
        action='store',
        dest='RANDOM_STATE',
        default=None,
        type=int,
        help='Subdivide the canonical instance at random with this seed.'
    )

    sweep = subparsers.add_parser('sweep', parents=[common], help='Exhaustive sweep over all graphs on N messages.')
    sweep.add_argument('SWEEP', choices=['bounds', 'duality', 'transform'], help='Which sweep to run.')
    sweep.add_argument('N', type=positive_integer, help='Number of messages.')
    sweep.add_argument(
        '-njobs',
        action='store',
        dest='NUM_JOBS',
        default=1,
        type=int,
        help=(
            'Number of CPUs for running the sweep in parallel. Set to -1 to use '
            'all available CPUs.'
        )
    )

    return parser


def _print_args(args):
    print('\nICNC settings:')
    for arg, arg_val in sorted(args.__dict__.items()):
        if arg == 'DISABLE_UPDATE_CHECK':
            continue

        # Pad the outputs with an even amount of space
        arg = (arg + (' ') * 100)[:20]
        arg_val = ((' ') * 5 + str(arg_val))
        print('{}={}'.format(arg, arg_val))
    print('')


def _limits(args):
    return merge_limits(
        path_limit=args.PATH_LIMIT,
        cycle_limit=args.CYCLE_LIMIT,
        minrank_max_n=args.MINRANK_MAX_N
    )


def _write_output(text, output_file=None):
    """Print text, or replace output_file with it in one step."""
    if not text.endswith('\n'):
        text += '\n'
    if not output_file:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output_file))
    handle, temp_path = tempfile.mkstemp(dir=directory, prefix='.icnc-', suffix='.tmp')
    try:
        with io.open(handle, 'w', encoding='utf-8') as temp_file:
            temp_file.write(text)
        os.replace(temp_path, output_file)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _no_dot(command):
    raise ValueError('DOT output is only available for graphs, not for {}.'.format(command))


def _bounds_output(args, G):
    report = compute_bounds(G, limits=_limits(args))
    if args.FORMAT == 'dot':
        _no_dot('bounds')
    if args.FORMAT == 'text':
        return 'mais={} tau={} nu={} minrank2={}'.format(report.mais, report.tau, report.nu, report.minrank2)
    return _dump(report.to_dict())


def _transform_output(args, G):
    limits = _limits(args)
    vtau = args.VTAU
    if vtau is None:
        vtau = min_feedback_vertex_sets(G, max_n=limits['mais_max_n'])[1][0]
    network = build_ncnetwork(G, vtau)
    if args.FORMAT == 'dot':
        return network.to_dot()
    if args.FORMAT == 'text':
        return 'vtau={} vertices={} edges={} coding_edges={}'.format(
            ','.join(str(v) for v in network.vtau), network.graph.vertex_count,
            network.graph.edge_count, len(network.coding_edges))
    return _dump(network.to_dict())


def _classify_output(args, G):
    report = classify(G, limits=_limits(args), vtau=args.VTAU)
    if args.FORMAT == 'dot':
        _no_dot('classify')
    if args.FORMAT == 'text':
        lines = ['verdict={} style={} config_id={} reduced_id={}'.format(
            report.verdict, report.style, report.config_id, report.reduced_id)]
        lines.extend('  {}'.format(message) for message in report.diagnostics)
        return '\n'.join(lines)
    return _dump(report.to_dict())


def _solve_output(args, G):
    limits = _limits(args)
    solver = IndexCodeSolver(
        path_limit=limits['path_limit'],
        cycle_limit=limits['cycle_limit'],
        minrank_max_n=limits['minrank_max_n'],
        cross_validate=args.CROSS_VALIDATE,
        max_time_secs=args.MAX_TIME_SECS,
        verbosity=args.VERBOSITY,
        log_file=sys.stderr,
        disable_update_check=args.DISABLE_UPDATE_CHECK
    )
    result = solver.fit(G).result_
    if args.FORMAT == 'dot':
        _no_dot('solve')
    if args.FORMAT == 'text':
        if not result.solved:
            return 'unsolved: mais={} tau={} n={}'.format(result.bounds.mais, result.bounds.tau, result.bounds.n)
        return '\n'.join(['method={} length={} optimal={}'.format(result.method, result.length, result.optimal)] +
                         result.code.to_bitstrings())
    return _dump(result.to_dict())


def _read_code(path):
    with io.open(path, encoding='utf-8') as code_file:
        data = json.load(code_file)
    if isinstance(data, dict):
        for key in ('code_rows', 'rows', 'network_code'):
            if data.get(key) is not None:
                data = data[key]
                break
    if not isinstance(data, list):
        raise ValueError('{} holds neither code rows nor a network code.'.format(path))
    return data


def _is_network_code(entries):
    return bool(entries) and all(isinstance(entry, dict) and 'edge' in entry and 'vector' in entry
                                 for entry in entries)


def _dual_of_network_code(args, G, entries):
    """Index code of a network code given as {edge, vector} entries."""
    vtau = args.VTAU
    if vtau is None:
        # Only vertices of vtau get a demand vertex D_w.
        endpoints = set(label for entry in entries for label in entry['edge'])
        vtau = [w for w in G.vertices if demand_label(w) in endpoints]
    code = NetworkCode.from_json(build_ncnetwork(G, vtau), entries)
    report = check_feasible(code)
    if not report.feasible:
        raise InfeasibleCodeError('The network code is infeasible: {}'.format(report), report=report)
    return dualize_to_index_code(G, extract_coding_matrix(code))


def _verify_output(args, G):
    entries = _read_code(args.CODE_FILE)
    if _is_network_code(entries):
        B = _dual_of_network_code(args, G, entries)
    else:
        B = BinMatrix.from_bitstrings(entries, cols=G.n)
    limits = _limits(args)
    solver = IndexCodeSolver(
        path_limit=limits['path_limit'],
        cycle_limit=limits['cycle_limit'],
        minrank_max_n=limits['minrank_max_n'],
        disable_update_check=True
    )
    report = solver.verify(G, B)
    if args.FORMAT == 'dot':
        _no_dot('verify')
    if args.FORMAT == 'text':
        return '{} (length={} mais={} failures={})'.format(report.verdict, report.length, report.mais,
                                                           report.failures)
    return _dump(report.to_dict())


def _gen_output(args):
    if args.RANDOM_STATE is None:
        G = canonical_instance(args.STYLE, args.REDUCED)
        comment = 'style {} {}'.format(args.STYLE, args.REDUCED)
    else:
        G = randomized_instance(args.STYLE, args.REDUCED, random_state=args.RANDOM_STATE)
        comment = 'style {} {}, seed {}'.format(args.STYLE, args.REDUCED, args.RANDOM_STATE)
    if args.FORMAT == 'dot':
        return G.to_dot()
    if args.FORMAT == 'json':
        return _dump({'n': G.n, 'edges': [list(edge) for edge in G.edges]})
    return format_sig(G, comment=comment)


def _sweep_output(args):
    sweeps = {
        'bounds': lambda: bounds_sweep(args.N, n_jobs=args.NUM_JOBS, verbosity=args.VERBOSITY, limits=_limits(args)),
        'duality': lambda: duality_sweep(args.N, n_jobs=args.NUM_JOBS, verbosity=args.VERBOSITY),
        'transform': lambda: transform_sweep(args.N, n_jobs=args.NUM_JOBS, verbosity=args.VERBOSITY,
                                             limits=_limits(args)),
    }
    return sweeps[args.SWEEP]().to_csv(index=False)


def icnc_driver(args):
    """Run one ICNC command and return its exit code."""
    if args.VERBOSITY >= 2:
        _print_args(args)

    try:
        if args.COMMAND == 'gen':
            text = _gen_output(args)
        elif args.COMMAND == 'sweep':
            text = _sweep_output(args)
        else:
            G = read_sig(args.INPUT_FILE)
            handlers = {
                'bounds': _bounds_output,
                'transform': _transform_output,
                'classify': _classify_output,
                'solve': _solve_output,
                'verify': _verify_output,
            }
            text = handlers[args.COMMAND](args, G)
    except CapExceededError as error:
        print('Error: {}'.format(error), file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (ICNCError, ValueError, TypeError, IOError, OSError) as error:
        print('Error: {}'.format(error), file=sys.stderr)
        return EXIT_INPUT_ERROR

    _write_output(text, args.OUTPUT_FILE)
    return EXIT_OK


def main():
    args = _get_arg_parser().parse_args()
    sys.exit(icnc_driver(args))

if __name__ == '__main__':
    main()
