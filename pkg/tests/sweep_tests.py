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

from nose.plugins.attrib import attr
from nose.tools import assert_equal, assert_true

from icnc.generator import FINAL_CONFIGURATIONS
from icnc.linalg import gaussian_binomial
from icnc.sweeps import (
    all_sigraphs, bounds_sweep, dual_rank_sweep, duality_sweep, transform_sweep, variant_sweep
)


def test_all_sigraphs():
    """Assert that there are 2^(n(n-1)) graphs on n messages, starting from the empty one."""
    graphs = list(all_sigraphs(3))
    assert_equal(len(graphs), 64)
    assert_equal(graphs[0].edge_count, 0)
    assert_equal(graphs[-1].edge_count, 6)
    assert_equal(len(set(graphs)), 64)


def test_bounds_sweep():
    """Assert that the bound chain holds for every graph on 3 messages."""
    table = bounds_sweep(3)
    assert_equal(len(table), 64)
    assert_true(table['sandwich_ok'].all())
    assert_true(((table['mais'] + table['tau']) == 3).all())
    empty = table[table['mask'] == 0].iloc[0]
    assert_equal((empty['mais'], empty['tau'], empty['nu'], empty['minrank2']), (3, 0, 0, 3))


def test_duality_sweep():
    """Assert that the dual condition agrees with the direct validity test on all 16 row spaces."""
    table = duality_sweep(3)
    assert_equal(len(table), 64)
    assert_true((table['checked'] == 16).all())
    assert_equal(table['disagreements'].sum(), 0)


def test_transform_sweep():
    """Assert that every network built for a graph on 3 messages is acyclic with matching unipaths."""
    table = transform_sweep(3)
    assert_true(len(table) >= 64)
    assert_true(table['acyclic'].all())
    assert_true(table['counts_ok'].all())
    assert_true(table['dashed_ok'].all())


def test_dual_rank_sweep():
    """Assert that dual_rank matches the null space rank on random matrices."""
    table = dual_rank_sweep(6, 5, random_state=42)
    assert_equal(len(table), 6)
    assert_equal(table['mismatches'].sum(), 0)
    assert_true((table['subsets'] == 2 ** table['cols']).all())


def test_dual_rank_sweep_is_reproducible():
    """Assert that a fixed random_state gives the same matrices."""
    first = dual_rank_sweep(3, 4, random_state=7)
    second = dual_rank_sweep(3, 4, random_state=7)
    assert_true(first.equals(second))


def test_variant_sweep():
    """Assert that randomized style B S22 variants are solved by the table with length n - 3."""
    table = variant_sweep('B', 'S22', 2, random_state=0)
    assert_equal(len(table), 2)
    assert_true((table['method'] == 'tables').all())
    assert_true((table['reduced_id'] == 'S22').all())
    assert_true((table['length'] == table['n'] - 3).all())
    assert_true(table['optimal'].all())


@attr('slow')
def test_bounds_sweep_four_messages():
    """Assert that the bound chain holds for all 4096 graphs on 4 messages."""
    table = bounds_sweep(4, n_jobs=-1)
    assert_equal(len(table), 4096)
    assert_true(table['sandwich_ok'].all())
    assert_true(((table['mais'] + table['tau']) == 4).all())


@attr('slow')
def test_duality_sweep_four_messages():
    """Assert that the dual condition agrees with the validity test for every row space on 4 messages."""
    table = duality_sweep(4, n_jobs=-1)
    assert_equal(len(table), 4096)
    assert_true((table['checked'] == sum(gaussian_binomial(4, k) for k in range(5))).all())
    assert_equal(table['disagreements'].sum(), 0)


@attr('slow')
def test_transform_sweep_four_messages():
    """Assert that the network of every graph on 4 messages and minimum vertex set passes all checks."""
    table = transform_sweep(4, n_jobs=-1)
    assert_equal(table['mask'].nunique(), 4096)
    assert_true(table['acyclic'].all())
    assert_true(table['counts_ok'].all())
    assert_true(table['dashed_ok'].all())


@attr('slow')
def test_dual_rank_sweep_hundred_matrices():
    """Assert that dual_rank matches the null space rank on 100 matrices of up to 8 columns."""
    table = dual_rank_sweep(100, 8, random_state=42)
    assert_equal(len(table), 100)
    assert_equal(table['mismatches'].sum(), 0)


@attr('slow')
def test_variant_sweep_every_configuration():
    """Assert that 200 randomized variants of each final configuration are solved by the tables."""
    for style in ('A', 'B'):
        for reduced in FINAL_CONFIGURATIONS:
            table = variant_sweep(style, reduced, 200, random_state=0, n_jobs=-1)
            assert_equal(len(table), 200)
            assert_true((table['method'] == 'tables').all())
            assert_true((table['reduced_id'] == reduced).all())
            assert_true((table['length'] == table['n'] - 3).all())
            assert_true(table['optimal'].all())
            assert_true(table['search_ok'].all())
