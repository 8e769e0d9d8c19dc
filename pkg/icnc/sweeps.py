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

from multiprocessing import cpu_count
import itertools
import warnings

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from sklearn.utils import check_random_state

from .classifier import unipaths
from .config import merge_limits
from .duality import check_dual_condition, dual_rank
from .generator import randomized_instance
from .linalg import BinMatrix, column_rank_of_subset, enumerate_row_spaces, nullspace_basis
from .sideinfo import SIGraph, compute_bounds, is_valid_index_code, min_feedback_vertex_sets, unicycles
from .solver import solve
from .transform import build_ncnetwork, dashed_label
with warnings.catch_warnings():
    warnings.simplefilter('ignore')
    from tqdm.autonotebook import tqdm


def _resolve_n_jobs(n_jobs):
    if n_jobs == 0:
        raise ValueError('The value 0 of n_jobs is invalid.')
    elif n_jobs < 0:
        return cpu_count() + 1 + n_jobs
    return n_jobs


def _run(func, jobs, n_jobs=1, verbosity=0, desc=None):
    """Apply func to every argument tuple of jobs, keeping the input order."""
    n_jobs = _resolve_n_jobs(n_jobs)
    jobs = list(jobs)
    pbar = tqdm(total=len(jobs), unit='graph', leave=False, disable=not (verbosity >= 3), desc=desc)
    rows = []
    try:
        if n_jobs == 1:
            for args in jobs:
                rows.append(func(*args))
                pbar.update(1)
        else:
            chunk_size = n_jobs * 4
            for chunk_idx in range(0, len(jobs), chunk_size):
                parallel = Parallel(n_jobs=n_jobs, verbose=0, pre_dispatch='2*n_jobs')
                chunk = parallel(delayed(func)(*args) for args in jobs[chunk_idx:chunk_idx + chunk_size])
                rows.extend(chunk)
                pbar.update(len(chunk))
    finally:
        pbar.close()
    return rows


def _possible_edges(n):
    return [(j, i) for j in range(1, n + 1) for i in range(1, n + 1) if j != i]


def _graph_of_mask(n, mask):
    edges = _possible_edges(n)
    return SIGraph.from_edges(n, [edge for bit, edge in enumerate(edges) if mask >> bit & 1])


def all_sigraphs(n):
    """Yield every side-information graph on n messages.

    Graph number m has the edges whose positions in the sorted list of all
    (j, i) pairs are the set bits of m; graphs come in increasing m.
    """
    for mask in range(2 ** (n * (n - 1))):
        yield _graph_of_mask(n, mask)


def _bounds_row(n, mask, limits):
    G = _graph_of_mask(n, mask)
    report = compute_bounds(G, limits=limits)
    return {
        'mask': mask,
        'mais': report.mais,
        'tau': report.tau,
        'nu': report.nu,
        'minrank2': report.minrank2,
        'sandwich_ok': report.holds(),
    }


def bounds_sweep(n, n_jobs=1, verbosity=0, limits=None):
    """MAIS, tau, nu and minrank2 of every graph on n messages.

    Returns
    -------
    table: pandas.DataFrame
        One row per graph, with sandwich_ok telling whether
        MAIS + tau = n and MAIS <= minrank2 <= n - nu.
    """
    limits = merge_limits(limits)
    jobs = [(n, mask, limits) for mask in range(2 ** (n * (n - 1)))]
    rows = _run(_bounds_row, jobs, n_jobs=n_jobs, verbosity=verbosity, desc='Bounds')
    return pd.DataFrame(rows, columns=['mask', 'mais', 'tau', 'nu', 'minrank2', 'sandwich_ok'])


def _duality_row(n, mask):
    G = _graph_of_mask(n, mask)
    checked = 0
    disagreements = 0
    for k in range(n + 1):
        for B in enumerate_row_spaces(n, k):
            checked += 1
            if is_valid_index_code(G, B) != check_dual_condition(G, nullspace_basis(B)).passed:
                disagreements += 1
    return {'mask': mask, 'checked': checked, 'disagreements': disagreements}


def duality_sweep(n, n_jobs=1, verbosity=0):
    """Compare the direct validity test with the dual condition on every row space.

    Returns
    -------
    table: pandas.DataFrame
        Per graph, how many codes were checked and on how many the two
        tests disagreed.
    """
    jobs = [(n, mask) for mask in range(2 ** (n * (n - 1)))]
    rows = _run(_duality_row, jobs, n_jobs=n_jobs, verbosity=verbosity, desc='Duality')
    return pd.DataFrame(rows, columns=['mask', 'checked', 'disagreements'])


def _dashed_successors(network, path):
    """True iff every undashed message vertex of path is followed by its dashed copy."""
    for position, label in enumerate(path[:-1]):
        v = network.message_of(label)
        if v is not None and path[position + 1] != dashed_label(v):
            return False
    return True


def _transform_rows(n, mask, limits):
    G = _graph_of_mask(n, mask)
    _, sets = min_feedback_vertex_sets(G, max_n=limits['mais_max_n'])
    rows = []
    for vtau in sets:
        network = build_ncnetwork(G, vtau)
        counts_ok = True
        dashed_ok = True
        for w in vtau:
            paths = unipaths(network, w, limits['path_limit']).items
            counts_ok = counts_ok and len(paths) == len(unicycles(G, vtau, w, limits['cycle_limit']))
            dashed_ok = dashed_ok and all(_dashed_successors(network, path) for path in paths)
        rows.append({
            'mask': mask,
            'vtau': ','.join(str(v) for v in vtau),
            'acyclic': network.graph.is_acyclic(),
            'counts_ok': counts_ok,
            'dashed_ok': dashed_ok,
        })
    return rows


def transform_sweep(n, n_jobs=1, verbosity=0, limits=None):
    """Check the network construction for every graph and minimum feedback vertex set.

    Returns
    -------
    table: pandas.DataFrame
        Per (graph, vertex set): the network is acyclic, each source has as
        many unipaths as unicycles, and every path leaves a message vertex
        through its coding edge.
    """
    limits = merge_limits(limits)
    jobs = [(n, mask, limits) for mask in range(2 ** (n * (n - 1)))]
    groups = _run(_transform_rows, jobs, n_jobs=n_jobs, verbosity=verbosity, desc='Transform')
    return pd.DataFrame(list(itertools.chain.from_iterable(groups)),
                        columns=['mask', 'vtau', 'acyclic', 'counts_ok', 'dashed_ok'])


def dual_rank_sweep(trials, max_cols, random_state=None):
    """Compare dual_rank with the rank of the same columns in the null space.

    Returns
    -------
    table: pandas.DataFrame
        Per random matrix, the number of column subsets where the two ranks
        differ.
    """
    rng = check_random_state(random_state)
    rows = []
    for trial in range(trials):
        cols = int(rng.randint(1, max_cols + 1))
        M = BinMatrix(rng.randint(0, 2, size=(int(rng.randint(1, cols + 1)), cols)))
        N = nullspace_basis(M)
        mismatches = 0
        subsets = 0
        for size in range(cols + 1):
            for X in itertools.combinations(range(cols), size):
                subsets += 1
                if dual_rank(M, X) != column_rank_of_subset(N, X):
                    mismatches += 1
        rows.append({'trial': trial, 'rows': M.rows, 'cols': cols, 'subsets': subsets, 'mismatches': mismatches})
    return pd.DataFrame(rows, columns=['trial', 'rows', 'cols', 'subsets', 'mismatches'])


def _variant_row(style, reduced, seed, limits):
    G = randomized_instance(style, reduced, random_state=seed)
    result = solve(G, limits=limits, cross_validate=True)
    report = result.class_report
    return {
        'seed': seed,
        'n': G.n,
        'tau': result.bounds.tau,
        'reduced_id': report.reduced_id if report is not None else None,
        'method': result.method,
        'length': result.length,
        'optimal': result.optimal,
        'search_ok': result.search_ok,
    }


def variant_sweep(style, reduced, count, random_state=None, n_jobs=1, verbosity=0, limits=None):
    """Solve randomized instances of one final configuration.

    Returns
    -------
    table: pandas.DataFrame
        Per variant: its size, the configuration it classified to, how it
        was solved and whether the assignment search agreed.
    """
    rng = check_random_state(random_state)
    limits = merge_limits(limits)
    seeds = rng.randint(np.iinfo(np.int32).max, size=count)
    jobs = [(style, reduced, int(seed), limits) for seed in seeds]
    rows = _run(_variant_row, jobs, n_jobs=n_jobs, verbosity=verbosity, desc='Variants')
    return pd.DataFrame(rows, columns=['seed', 'n', 'tau', 'reduced_id', 'method', 'length', 'optimal',
                                       'search_ok'])
