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
from multiprocessing import cpu_count
import itertools
import sys
import warnings

from sklearn.base import BaseEstimator
from joblib import Parallel, delayed
from update_checker import update_check

from ._version import __version__
from .classifier import DECOMPOSABLE, classify, find_edge_disjoint_decomposition
from .config import DEFAULT_LIMITS, assignment_tables, merge_limits
from .decorators import TIMEOUT, _time_limited
from .duality import dualize_to_index_code
from .exceptions import (
    AssignmentConflictError, CapExceededError, DualityError, InfeasibleCodeError, RoleMappingError
)
from .linalg import BinVector
from .netcode import NetworkCode, assign_along_path, check_feasible, extract_coding_matrix, merge_decomposed_codes
from .sideinfo import (
    BoundsReport, compute_bounds, index_code_failures, max_disjoint_cycles, min_feedback_vertex_sets, minrank_search
)
with warnings.catch_warnings():
    warnings.simplefilter('ignore')
    from tqdm.autonotebook import tqdm


TABLES = 'tables'
DECOMPOSITION = 'decomposition'
ORACLE_FALLBACK = 'oracle_fallback'


class SolveResult(object):
    """Outcome of solve: a verified index code with its certificate, or the bounds that were reached.

    Attributes
    ----------
    code: BinMatrix or None
        The index code; only ever a code that passed the validity check.
    method: str or None
        'tables', 'decomposition' or 'oracle_fallback'; None when unsolved.
    certificate: str or None
        'mais_matched' when the length equals MAIS, 'minrank' when the
        exhaustive oracle produced the code.
    """

    def __init__(self, bounds, code=None, method=None, certificate=None, class_report=None,
                 network_code=None, search_ok=None, diagnostics=()):
        self.bounds = bounds
        self.code = code
        self.method = method
        self.certificate = certificate
        self.class_report = class_report
        self.network_code = network_code
        self.search_ok = search_ok
        self.diagnostics = list(diagnostics)

    @property
    def solved(self):
        return self.code is not None

    @property
    def length(self):
        return self.code.rows if self.code is not None else None

    @property
    def valid(self):
        return self.code is not None

    @property
    def optimal(self):
        return self.certificate is not None

    def to_dict(self):
        return {
            'n': self.bounds.n,
            'tau': self.bounds.tau,
            'mais': self.bounds.mais,
            'method': self.method,
            'length': self.length,
            'code_rows': self.code.to_bitstrings() if self.code is not None else None,
            'valid': self.valid,
            'optimal': self.optimal,
            'certificate': self.certificate,
            'search_ok': self.search_ok,
            'bounds': self.bounds.to_dict(),
            'class_report': self.class_report.to_dict() if self.class_report is not None else None,
            'network_code': self.network_code.to_json() if self.network_code is not None else None,
            'diagnostics': list(self.diagnostics),
        }

    def __repr__(self):
        return 'SolveResult(method={}, length={}, optimal={})'.format(self.method, self.length, self.optimal)


class VerifyReport(object):
    """Validity of an index code together with the bound that certifies it."""

    def __init__(self, valid, failures, length, mais, minrank2=None):
        self.valid = valid
        self.failures = list(failures)
        self.length = length
        self.mais = mais
        self.minrank2 = minrank2

    @property
    def optimal(self):
        if not self.valid:
            return False
        return self.length == self.mais or (self.minrank2 is not None and self.length == self.minrank2)

    @property
    def verdict(self):
        if not self.valid:
            return 'invalid'
        if self.optimal:
            return 'optimal'
        if self.minrank2 is not None:
            return 'valid, not optimal'
        return 'valid, optimality unknown'

    def to_dict(self):
        return {
            'valid': self.valid,
            'failures': list(self.failures),
            'length': self.length,
            'mais': self.mais,
            'minrank2': self.minrank2,
            'optimal': self.optimal,
            'verdict': self.verdict,
        }

    def __repr__(self):
        return 'VerifyReport(verdict={!r}, length={})'.format(self.verdict, self.length)


def _role_vector(bits, skeleton, network):
    entries = [0] * network.tau
    for role, bit in enumerate(bits, 1):
        if bit == '1':
            entries[network.source_index(skeleton.source(role))] = 1
    return BinVector(entries)


def _junction(report, name):
    if name.startswith('t'):
        pair = (int(name[1]), int(name[2]))
        instance = report.reduction.identify.get(pair, pair)
        if instance not in report.crosspaths or instance in report.deleted:
            raise RoleMappingError('Junction {} has no crosspath {}{} to land on.'.format(name, *instance),
                                   junction=name)
        return report.crosspaths[instance].t
    return report.skeleton.junctions[name]


def _subgraph_edges(paths):
    edges = set()
    for path in paths:
        edges.update(path.edges())
    return edges


def _propagate(code, edges):
    """Give every unassigned edge of the subgraph the sum of the subgraph edges entering its tail."""
    network = code.network
    graph = network.graph
    values = code.assigned
    for v in graph.topological_order():
        outgoing = [edge for edge in graph.out_edges(v) if edge in edges and edge not in values]
        if not outgoing:
            continue
        if v in network.sources:
            vector = code.basis_vector(v)
        else:
            vector = BinVector.zeros(code.dim)
            for edge in graph.in_edges(v):
                if edge in edges:
                    vector = vector + values.get(edge, BinVector.zeros(code.dim))
        for edge in outgoing:
            values[edge] = vector
    return code.updated(values)


def assign_by_table(network, report):
    """Assign the global encoding vectors of the report's final configuration.

    Trunk rules of the table are laid along the role-1 unipath between their
    junctions, crosspath rules along the stretch u'_ij -> t_ij of the
    matching crosspath; the remaining edges of the reduced subgraph carry the
    sum of what enters them and every edge outside it carries zero.

    Parameters
    ----------
    network: NCNetwork
    report: ClassReport
        A legitimate Class Ia report of this network.

    Returns
    -------
    code: NetworkCode
        A feasible code.
    """
    if not report.is_class_ia or report.reduction is None:
        raise ValueError('Table assignment needs a legitimate Class Ia report, got {}.'.format(report.verdict))
    skeleton = report.skeleton
    table = assignment_tables[(skeleton.style, report.reduced_id)]
    code = NetworkCode(network)
    trunk = skeleton.unipath(1)
    for start, stop, bits in table['trunk']:
        head, tail = _junction(report, start), _junction(report, stop)
        try:
            segment = trunk.segment(head, tail)
        except ValueError:
            raise RoleMappingError('Junctions {} and {} are not in order on the role-1 unipath.'.format(
                start, stop), junction=stop)
        code = assign_along_path(code, segment, _role_vector(bits, skeleton, network))
    identify = report.reduction.identify
    for pair, bits in sorted(table['cross'].items()):
        instance = identify.get(pair, pair)
        if instance not in report.crosspaths or instance in report.deleted:
            raise RoleMappingError('Rule for crosspath {}{} has no crosspath to land on.'.format(*pair),
                                   junction='t{}{}'.format(*pair))
        info = report.crosspaths[instance]
        code = assign_along_path(code, info.path.segment(info.u, info.t), _role_vector(bits, skeleton, network))
    code = _propagate(code, _subgraph_edges(report.subgraph_paths()))
    feasibility = check_feasible(code)
    if not feasibility.feasible:
        raise InfeasibleCodeError('Style {} {} assignment is infeasible: {}'.format(
            skeleton.style, report.reduced_id, feasibility), report=feasibility)
    return code


def _span(vectors, dim):
    spanned = set([BinVector.zeros(dim)])
    for vector in vectors:
        spanned.update([existing + vector for existing in spanned])
    return sorted(spanned, key=lambda vector: vector.to_bitstring())


def search_assignment(network, H, limits=None):
    """Exhaustively search a feasible code supported on the subgraph H.

    Edges of H are grouped into chains that continue through vertices with a
    single incoming H edge; a chain carries one vector. Chains are visited in
    topological order: a source chain carries its basis vector, a chain
    starting at a merge vertex carries a vector of the span entering it, and
    a chain ending in a demand edge must carry its receiver's basis vector.

    Parameters
    ----------
    network: Network
    H: iterable of Path
        Paths whose union is the subgraph.
    limits: dict, optional
        search_max_subpaths caps the number of chains and search_max_nodes
        the number of search nodes.

    Returns
    -------
    code: NetworkCode or None
        The lexicographically first feasible assignment, None if there is none.
    """
    limits = merge_limits(limits)
    graph = network.graph
    edges = _subgraph_edges(H)
    incoming = dict((v, [edge for edge in graph.in_edges(v) if edge in edges]) for v in graph.vertices)
    chain_of = {}
    heads = []
    for v in graph.topological_order():
        for edge in graph.out_edges(v):
            if edge not in edges:
                continue
            if v not in network.sources and len(incoming[v]) == 1:
                chain_of[edge] = chain_of[incoming[v][0]]
            else:
                if v not in network.sources and not incoming[v]:
                    raise ValueError('Subgraph edge {} is not reachable from a source.'.format(edge))
                chain_of[edge] = len(heads)
                heads.append(v)
    if len(heads) > limits['search_max_subpaths']:
        raise CapExceededError('The subgraph has {} subpaths; the search handles at most {}.'.format(
            len(heads), limits['search_max_subpaths']), cap='search_max_subpaths', value=len(heads))

    dim = network.tau
    demands = [None] * len(heads)
    for source, receiver in zip(network.sources, network.receivers):
        edge = network.demand_edge(receiver)
        if edge in chain_of:
            demands[chain_of[edge]] = BinVector.basis(dim, network.source_index(source))
    chosen = [None] * len(heads)
    visited = [0]

    def candidates(index):
        head = heads[index]
        if head in network.sources:
            options = [BinVector.basis(dim, network.source_index(head))]
        else:
            options = _span([chosen[chain_of[edge]] for edge in incoming[head]], dim)
        if demands[index] is not None:
            options = [vector for vector in options if vector == demands[index]]
        return options

    def extend(index):
        if index == len(heads):
            return True
        for vector in candidates(index):
            visited[0] += 1
            if visited[0] > limits['search_max_nodes']:
                raise CapExceededError('Assignment search visited more than {} nodes.'.format(
                    limits['search_max_nodes']), cap='search_max_nodes', value=visited[0])
            chosen[index] = vector
            if extend(index + 1):
                return True
        chosen[index] = None
        return False

    if not extend(0):
        return None
    code = NetworkCode(network, dim, dict((edge, chosen[chain]) for edge, chain in chain_of.items()))
    return code if check_feasible(code).feasible else None


def _flow_paths(network, limit):
    paths = []
    for source, receiver in itertools.product(network.sources, network.receivers):
        found = network.graph.enumerate_simple_paths(source, receiver, limit)
        if found.overflow:
            raise CapExceededError('More than {} paths from {} to {}.'.format(limit, source, receiver),
                                   cap='path_limit', value=limit)
        paths.extend(found.items)
    return paths


def solve_decomposed(network, limits=None):
    """Solve a network by splitting off edge-disjoint unipaths.

    Each split source keeps its own coordinate along its unipath; a remainder
    that no longer splits is handed to search_assignment over all its
    source-to-receiver paths.

    Returns
    -------
    code: NetworkCode or None
        A code on the root network, in the basis order of network.sources.
    """
    limits = merge_limits(limits)
    if network.tau == 0:
        return NetworkCode(network)
    decomposition = find_edge_disjoint_decomposition(network, limits['path_limit'])
    if decomposition is None:
        try:
            return search_assignment(network, _flow_paths(network, limits['path_limit']), limits)
        except CapExceededError:
            return None
    split = assign_along_path(NetworkCode(decomposition.split), decomposition.unipath, BinVector.basis(1, 0))
    rest = solve_decomposed(decomposition.remainder, limits)
    if rest is None:
        return None
    return merge_decomposed_codes(split, rest).reorder(network.sources)


def _dualize(G, code, tau):
    """Coding matrix -> index code, refusing anything the validity check rejects."""
    B = dualize_to_index_code(G, extract_coding_matrix(code), tau=tau)
    failures = index_code_failures(G, B)
    if failures:
        raise DualityError('The dual of a feasible network code fails at receivers {}.'.format(failures),
                           failures=failures)
    return B


def _partial_bounds(G, limits):
    """Whatever part of the bound chain fits within the caps; None elsewhere."""
    tau, sets, nu = None, (), None
    try:
        tau, sets = min_feedback_vertex_sets(G, max_n=limits['mais_max_n'])
    except CapExceededError:
        pass
    try:
        nu = max_disjoint_cycles(G, cycle_limit=limits['cycle_limit'])
    except CapExceededError:
        pass
    return BoundsReport(G.n, None if tau is None else G.n - tau, tau, nu, sets)


def solve(G, limits=None, cross_validate=False):
    """Find an optimal linear index code for G.

    Graphs with tau = 3 are classified first: decomposable networks are
    solved piecewise and legitimate Class Ia networks by their configuration
    table, and the resulting network code is dualized. Anything else falls
    back to the exhaustive minrank search when n is small enough.
    A cap hit while computing the bounds gives an unsolved result that
    carries the part of the bound chain that was reached.

    Parameters
    ----------
    G: SIGraph
    limits: dict, optional
        Caps overriding icnc.config.DEFAULT_LIMITS.
    cross_validate: bool, default False
        Also run search_assignment on the reduced subgraph of a Class Ia
        network and record whether it found a code.

    Returns
    -------
    result: SolveResult
    """
    limits = merge_limits(limits)
    try:
        bounds = compute_bounds(G, with_minrank=False, limits=limits)
    except CapExceededError as error:
        return SolveResult(_partial_bounds(G, limits), diagnostics=['{}; unsolved'.format(error)])
    diagnostics = []
    report = None
    if bounds.tau == 3:
        report = classify(G, limits)
        diagnostics.extend(report.diagnostics)
        network = report.network
        code, method, search_ok = None, None, None
        try:
            if report.verdict == DECOMPOSABLE:
                code, method = solve_decomposed(network, limits), DECOMPOSITION
            elif report.is_class_ia and not report.illegitimate:
                code, method = assign_by_table(network, report), TABLES
                if cross_validate:
                    try:
                        search_ok = search_assignment(network, report.subgraph_paths(), limits) is not None
                    except CapExceededError as error:
                        diagnostics.append(str(error))
            if code is not None:
                B = _dualize(G, code, tau=3)
                certificate = 'mais_matched' if B.rows == bounds.mais else None
                return SolveResult(bounds, B, method, certificate, report, code, search_ok, diagnostics)
        except (AssignmentConflictError, DualityError, InfeasibleCodeError, RoleMappingError) as error:
            diagnostics.append('{}: {}'.format(type(error).__name__, error))
    else:
        diagnostics.append('tau = {}; only tau = 3 instances have a direct construction'.format(bounds.tau))

    if G.n <= limits['minrank_max_n']:
        length, B = minrank_search(G, max_n=limits['minrank_max_n'], lower_bound=bounds.mais)
        bounds.minrank2 = length
        if length > bounds.mais:
            diagnostics.append('minrank2 = {} exceeds MAIS = {}'.format(length, bounds.mais))
        return SolveResult(bounds, B, ORACLE_FALLBACK, 'minrank', report, diagnostics=diagnostics)
    diagnostics.append('n = {} is above minrank_max_n = {}; unsolved'.format(G.n, limits['minrank_max_n']))
    return SolveResult(bounds, class_report=report, diagnostics=diagnostics)


def verify(G, B, limits=None, with_minrank=False):
    """Check an index code and place its length in the bound chain.

    Parameters
    ----------
    G: SIGraph
    B: BinMatrix
        Candidate code with n columns.
    limits: dict, optional
    with_minrank: bool, default False
        Also run the exhaustive minrank search (n <= minrank_max_n), which
        settles optimality when the length is above MAIS.

    Returns
    -------
    report: VerifyReport
    """
    limits = merge_limits(limits)
    if B.cols != G.n:
        raise ValueError('The code has {} columns but the graph has {} messages.'.format(B.cols, G.n))
    failures = index_code_failures(G, B)
    bounds = compute_bounds(G, with_minrank=with_minrank, limits=limits)
    return VerifyReport(not failures, failures, B.rows, bounds.mais, bounds.minrank2)


@_time_limited
def _solve_with_cap(G, limits, cross_validate):
    return solve(G, limits=limits, cross_validate=cross_validate)


class IndexCodeSolver(BaseEstimator):
    """Builds optimal linear index codes through the network coding dual."""

    def __init__(self, path_limit=DEFAULT_LIMITS['path_limit'], cycle_limit=DEFAULT_LIMITS['cycle_limit'],
                 minrank_max_n=DEFAULT_LIMITS['minrank_max_n'], mais_max_n=DEFAULT_LIMITS['mais_max_n'],
                 cross_validate=False, max_time_secs=None, n_jobs=1, verbosity=0, log_file=None,
                 disable_update_check=False):
        """Set up the solver.

        Parameters
        ----------
        path_limit: int, optional (default: 100000)
            Maximum number of paths enumerated between two vertices.
        cycle_limit: int, optional (default: 1000000)
            Maximum number of cycles enumerated when computing nu.
        minrank_max_n: int, optional (default: 8)
            Largest graph handed to the exhaustive minrank search.
        mais_max_n: int, optional (default: 20)
            Largest graph whose feedback vertex sets are enumerated.
        cross_validate: bool, optional (default: False)
            Re-derive every table-built code with the assignment search.
        max_time_secs: int, optional (default: None)
            How many seconds one graph may take. None means no cap.
        n_jobs: int, optional (default: 1)
            Number of processes used by fit_many.
            Assigning this to -1 will use as many cores as available
            on the computer. For n_jobs below -1, (n_cpus + 1 + n_jobs) are used.
            Thus for n_jobs = -2, all CPUs but one are used.
        verbosity: int, optional (default: 0)
            How much information is printed while solving.
            0 = none, 1 = minimal, 2 = high, 3 = all.
            A setting of 3 also shows a progress bar in fit_many.
        log_file: io.TextIOWrapper or io.StringIO, optional (default: sys.stdout)
            Save progress content to a file.
        disable_update_check: bool, optional (default: False)
            Flag indicating whether the update checker should be disabled.

        Returns
        -------
        None

        """
        self.path_limit = path_limit
        self.cycle_limit = cycle_limit
        self.minrank_max_n = minrank_max_n
        self.mais_max_n = mais_max_n
        self.cross_validate = cross_validate
        self.max_time_secs = max_time_secs
        self.n_jobs = n_jobs
        self.verbosity = verbosity
        self.disable_update_check = disable_update_check
        self.log_file = log_file

    def _fit_init(self):
        # Prompt the user if their version is out of date
        if not self.disable_update_check:
            update_check('icnc', __version__)

        self._pbar = None

        if not self.log_file:
            self.log_file = sys.stdout

        self._limits = merge_limits(
            path_limit=self.path_limit,
            cycle_limit=self.cycle_limit,
            minrank_max_n=self.minrank_max_n,
            mais_max_n=self.mais_max_n
        )

        if self.max_time_secs is not None and self.max_time_secs <= 0:
            raise ValueError(
                'The value {} of max_time_secs is invalid.'.format(self.max_time_secs)
            )

        if self.n_jobs == 0:
            raise ValueError(
                'The value 0 of n_jobs is invalid.'
            )
        elif self.n_jobs < 0:
            self._n_jobs = cpu_count() + 1 + self.n_jobs
        else:
            self._n_jobs = self.n_jobs

    def _solve_one(self, G):
        result = _solve_with_cap(G, self._limits, self.cross_validate, timeout=self.max_time_secs)
        if result == TIMEOUT:
            raise CapExceededError('Solving did not finish within {} seconds.'.format(self.max_time_secs),
                                   cap='max_time_secs', value=self.max_time_secs)
        return result

    def _summary(self, result):
        if result.solved:
            return 'n={} tau={}: {} code of length {} ({})'.format(
                result.bounds.n, result.bounds.tau, result.method, result.length,
                'optimal' if result.optimal else 'optimality unknown')
        return 'n={} tau={}: unsolved'.format(result.bounds.n, result.bounds.tau)

    def fit(self, G):
        """Solve one side-information graph.

        Parameters
        ----------
        G: SIGraph

        Returns
        -------
        self: object
            The fitted solver; the outcome is in result_.
        """
        self._fit_init()
        self.result_ = self._solve_one(G)
        if self.verbosity >= 2:
            print(self._summary(self.result_), file=self.log_file)
            for message in self.result_.diagnostics:
                print('  {}'.format(message), file=self.log_file)
        return self

    def fit_many(self, graphs):
        """Solve a batch of graphs, in parallel when n_jobs > 1.

        Parameters
        ----------
        graphs: iterable of SIGraph

        Returns
        -------
        self: object
            The results are in results_, in input order.
        """
        self._fit_init()
        graphs = list(graphs)
        self._pbar = tqdm(total=len(graphs), unit='graph', leave=False, file=self.log_file,
                          disable=not (self.verbosity >= 3), desc='Solving')
        results = []
        try:
            if self._n_jobs == 1:
                for G in graphs:
                    results.append(self._solve_one(G))
                    self._update_pbar(pbar_msg=self._summary(results[-1]))
            else:
                chunk_size = self._n_jobs * 4
                for chunk_idx in range(0, len(graphs), chunk_size):
                    parallel = Parallel(n_jobs=self._n_jobs, verbose=0, pre_dispatch='2*n_jobs')
                    chunk = parallel(delayed(_solve_with_cap)(G, self._limits, self.cross_validate,
                                                              timeout=self.max_time_secs)
                                     for G in graphs[chunk_idx:chunk_idx + chunk_size])
                    for result in chunk:
                        if result == TIMEOUT:
                            raise CapExceededError('Solving did not finish within {} seconds.'.format(
                                self.max_time_secs), cap='max_time_secs', value=self.max_time_secs)
                        results.append(result)
                        self._update_pbar(pbar_msg=self._summary(result))
        finally:
            if not isinstance(self._pbar, type(None)):
                self._pbar.close()
        self.results_ = results
        return self

    def verify(self, G, B):
        """Check an index code for G with this solver's limits."""
        if not hasattr(self, '_limits'):
            self._fit_init()
        return verify(G, B, limits=self._limits, with_minrank=G.n <= self.minrank_max_n)

    def _update_pbar(self, pbar_num=1, pbar_msg=None):
        """Advance the progress bar and write pbar_msg at the highest verbosity.

        Parameters
        ----------
        pbar_num: int
            How many graphs have been processed
        pbar_msg: None or string
            Message to write

        Returns
        -------
        None
        """
        if not isinstance(self._pbar, type(None)):
            if self.verbosity > 2 and pbar_msg is not None:
                self._pbar.write(pbar_msg, file=self.log_file)
            if not self._pbar.disable:
                self._pbar.update(pbar_num)
