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

try:
    from StringIO import StringIO
except ImportError:
    from io import StringIO

from nose.tools import assert_equal, assert_raises, assert_true, assert_false, assert_is_none, assert_in

from icnc.classifier import classify, detect_skeleton
from icnc.exceptions import CapExceededError, RoleMappingError
from icnc.generator import FINAL_CONFIGURATIONS, canonical_instance, decomposable_instance
from icnc.linalg import BinMatrix
from icnc.netcode import check_feasible
from icnc.sideinfo import SIGraph, index_code_failures
from icnc.solver import (
    DECOMPOSITION, ORACLE_FALLBACK, TABLES, IndexCodeSolver, assign_by_table, search_assignment,
    solve, solve_decomposed, verify
)
from icnc.transform import build_ncnetwork

three_cycle = SIGraph(3, {1: [3], 2: [1], 3: [2]})
five_cycle = SIGraph(5, {1: [2, 5], 2: [1, 3], 3: [2, 4], 4: [3, 5], 5: [1, 4]})


def test_solve_canonical_instances():
    """Assert that every canonical instance is solved by its table with a code of length n - 3."""
    for style in ('A', 'B'):
        for reduced in FINAL_CONFIGURATIONS:
            G = canonical_instance(style, reduced)
            result = solve(G)
            assert_equal(result.method, TABLES)
            assert_equal(result.length, G.n - 3)
            assert_equal(result.certificate, 'mais_matched')
            assert_true(result.optimal)
            assert_equal(index_code_failures(G, result.code), [])
            assert_true(check_feasible(result.network_code).feasible)


def test_assign_by_table_s21():
    """Assert the trunk vectors of the style A S21 table on its canonical network."""
    report = classify(canonical_instance('A', 'S21'))
    code = assign_by_table(report.network, report)
    assert_equal(code.vector(('4', "4'")).to_bitstring(), '110')
    assert_equal(code.vector(('5', "5'")).to_bitstring(), '111')
    assert_equal(code.vector(("5'", 'D_3')).to_bitstring(), '111')
    assert_equal(code.vector(('D_3', "D_3'")).to_bitstring(), '001')
    assert_true(check_feasible(code).feasible)


def test_assign_by_table_refuses_other_verdicts():
    """Assert that table assignment needs a legitimate Class Ia report."""
    report = classify(decomposable_instance())
    assert_raises(ValueError, assign_by_table, report.network, report)


def test_assign_by_table_missing_crosspath():
    """Assert that a table rule without its crosspath raises RoleMappingError."""
    report = classify(canonical_instance('A', 'S21'))
    del report.crosspaths[(3, 2)]
    assert_raises(RoleMappingError, assign_by_table, report.network, report)


def test_search_assignment():
    """Assert that the search finds a code on the reduced subgraph but not on the unipaths alone."""
    report = classify(canonical_instance('A', 'S21'))
    network = report.network
    code = search_assignment(network, report.subgraph_paths())
    assert_true(code is not None)
    assert_true(check_feasible(code).feasible)
    skeleton = detect_skeleton(network)
    assert_is_none(search_assignment(network, skeleton.unipaths))
    assert_raises(CapExceededError, search_assignment, network, report.subgraph_paths(),
                  {'search_max_subpaths': 1})


def test_solve_decomposed():
    """Assert that the decomposable fixture is solved piecewise."""
    G = decomposable_instance()
    network = build_ncnetwork(G, (1, 2, 3))
    code = solve_decomposed(network)
    assert_equal(code.sources, network.sources)
    assert_true(check_feasible(code).feasible)
    assert_equal(code.vector(('4', "4'")).to_bitstring(), '100')

    result = solve(G)
    assert_equal(result.method, DECOMPOSITION)
    assert_equal(result.length, 2)
    assert_equal(result.certificate, 'mais_matched')


def test_solve_decomposed_zero_sources():
    """Assert that a network without sources gets the empty code."""
    network = build_ncnetwork(SIGraph(2), [])
    code = solve_decomposed(network)
    assert_equal(code.dim, 0)
    assert_true(check_feasible(code).feasible)


def test_solve_falls_back_to_minrank():
    """Assert that graphs outside the tau = 3 constructions are solved by the minrank search."""
    result = solve(three_cycle)
    assert_equal(result.method, ORACLE_FALLBACK)
    assert_equal(result.length, 2)
    assert_equal(result.certificate, 'minrank')
    assert_equal(index_code_failures(three_cycle, result.code), [])

    result = solve(five_cycle)
    assert_equal(result.class_report.verdict, 'Decomposable')
    assert_equal(result.method, ORACLE_FALLBACK)
    assert_equal(result.length, 3)
    assert_equal(result.bounds.minrank2, 3)
    assert_true(result.diagnostics)


def test_solve_unsolved_above_minrank_cap():
    """Assert that a graph above minrank_max_n without a construction stays unsolved."""
    result = solve(three_cycle, limits={'minrank_max_n': 2})
    assert_false(result.solved)
    assert_is_none(result.method)
    assert_false(result.optimal)
    assert_is_none(result.to_dict()['code_rows'])


def test_solve_keeps_partial_bounds_at_cycle_cap():
    """Assert that hitting the cycle cap leaves the graph unsolved with the bounds computed so far."""
    result = solve(five_cycle, limits={'cycle_limit': 3})
    assert_false(result.solved)
    assert_equal((result.bounds.tau, result.bounds.mais), (3, 2))
    assert_is_none(result.bounds.nu)
    assert_in('cycle', result.diagnostics[0])
    assert_is_none(solve(five_cycle, limits={'mais_max_n': 4}).bounds.tau)


def test_solve_cross_validate():
    """Assert that cross validation records whether the search reproduces a table code."""
    result = solve(canonical_instance('A', 'S21'), cross_validate=True)
    assert_true(result.search_ok)
    assert_is_none(solve(canonical_instance('A', 'S21')).search_ok)


def test_verify():
    """Assert the verdicts of verify on the 3-cycle and the 5-cycle."""
    report = verify(three_cycle, BinMatrix.from_bitstrings(['110', '011']))
    assert_true(report.valid)
    assert_equal(report.verdict, 'optimal')

    report = verify(three_cycle, BinMatrix.from_bitstrings(['111']))
    assert_false(report.valid)
    assert_equal(report.failures, [1, 2, 3])
    assert_equal(report.verdict, 'invalid')

    identity = BinMatrix.identity(5)
    assert_equal(verify(five_cycle, identity).verdict, 'valid, optimality unknown')
    assert_equal(verify(five_cycle, identity, with_minrank=True).verdict, 'valid, not optimal')
    assert_raises(ValueError, verify, five_cycle, BinMatrix.identity(3))


def test_solver_n_jobs_zero():
    """Assert that n_jobs = 0 is refused."""
    solver = IndexCodeSolver(n_jobs=0, disable_update_check=True)
    assert_raises(ValueError, solver.fit, three_cycle)


def test_solver_negative_max_time():
    """Assert that a non-positive time cap is refused."""
    solver = IndexCodeSolver(max_time_secs=0, disable_update_check=True)
    assert_raises(ValueError, solver.fit, three_cycle)


def test_solver_fit():
    """Assert that fit returns the solver itself, stores the result and logs a summary at verbosity 2."""
    log = StringIO()
    solver = IndexCodeSolver(verbosity=2, log_file=log, disable_update_check=True)
    assert_true(solver.fit(three_cycle) is solver)
    assert_equal(solver.result_.length, 2)
    assert_in('n=3 tau=1: oracle_fallback code of length 2 (optimal)', log.getvalue())


def test_solver_fit_many():
    """Assert that fit_many keeps the input order."""
    solver = IndexCodeSolver(disable_update_check=True)
    solver.fit_many([three_cycle, canonical_instance('B', 'S22'), SIGraph(2)])
    assert_equal([result.length for result in solver.results_], [2, 3, 2])
    assert_equal(solver.results_[1].method, TABLES)


def test_solver_verify():
    """Assert that the estimator's verify settles optimality for small graphs."""
    solver = IndexCodeSolver(disable_update_check=True)
    report = solver.verify(five_cycle, BinMatrix.identity(5))
    assert_equal(report.minrank2, 3)
    assert_false(report.optimal)


def test_solver_get_params():
    """Assert that the solver exposes its settings through get_params."""
    params = IndexCodeSolver(n_jobs=2).get_params()
    assert_equal(params['n_jobs'], 2)
    assert_equal(params['minrank_max_n'], 8)
