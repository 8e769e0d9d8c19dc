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

import itertools

from nose.tools import assert_equal, assert_raises, assert_true, assert_false, assert_not_equal

from icnc.classifier import CLASS_IA_STYLE_A, CLASS_IA_STYLE_B, classify
from icnc.generator import (
    FINAL_CONFIGURATIONS, canonical_instance, decomposable_instance, randomized_instance, subdivide,
    two_source_instance
)
from icnc.sideinfo import compute_bounds, feedback_number, mais, min_feedback_vertex_sets, minrank2


def test_canonical_instances_classify_to_themselves():
    """Assert that each canonical instance has tau = 3 and classifies to its own final configuration."""
    for style in ('A', 'B'):
        for reduced in FINAL_CONFIGURATIONS:
            G = canonical_instance(style, reduced)
            assert_equal(G.n, 6)
            tau, sets = min_feedback_vertex_sets(G)
            assert_equal(tau, 3)
            assert_equal(sets[0], (1, 2, 3))
            report = classify(G)
            assert_equal(report.verdict, CLASS_IA_STYLE_A if style == 'A' else CLASS_IA_STYLE_B)
            assert_equal(report.style, style)
            assert_equal(report.reduced_id, reduced)
            assert_equal(report.vtau, (1, 2, 3))


def test_canonical_instance_rejects_unknown_configuration():
    """Assert that only the eight final configurations have canonical instances."""
    assert_raises(ValueError, canonical_instance, 'A', 'S11')
    assert_raises(ValueError, canonical_instance, 'C', 'S21')


def test_subdivide():
    """Assert that subdividing an edge inserts a path of new messages."""
    G = canonical_instance('A', 'S21')
    H = subdivide(G, (6, 1), 2)
    assert_equal(H.n, 8)
    assert_equal(H.side_information(7), frozenset([6]))
    assert_equal(H.side_information(8), frozenset([7]))
    assert_equal(set(H.side_information(1)), set([8, 2, 3]))
    assert_equal(H.edge_count, G.edge_count + 2)
    assert_equal(feedback_number(H), 3)
    assert_raises(ValueError, subdivide, G, (1, 6), 1)


def test_randomized_instance():
    """Assert that randomized instances are reproducible and keep their final configuration."""
    first = randomized_instance('B', 'S23', random_state=42)
    second = randomized_instance('B', 'S23', random_state=42)
    assert_equal(first, second)
    assert_true(6 <= first.n <= 12)
    for seed in (1, 7):
        G = randomized_instance('A', 'S24', random_state=seed, max_messages=9)
        assert_true(G.n <= 9)
        report = classify(G)
        assert_equal(report.tau, 3)
        assert_equal(report.reduced_id, 'S24')


def test_randomized_instance_without_room():
    """Assert that max_messages equal to the canonical size leaves the instance untouched."""
    assert_equal(randomized_instance('A', 'S21', random_state=0, max_messages=6), canonical_instance('A', 'S21'))


def test_fixture_instances():
    """Assert the feedback numbers of the decomposable and two-source fixtures."""
    assert_equal(feedback_number(decomposable_instance()), 3)
    bounds = compute_bounds(two_source_instance(), with_minrank=False)
    assert_equal(bounds.tau, 2)
    assert_equal(bounds.mais, 9)
    assert_not_equal(decomposable_instance(), two_source_instance())


def test_canonical_instances_meet_mais():
    """Assert that minrank2 equals n - 3 = MAIS on every canonical instance."""
    for style in ('A', 'B'):
        for reduced in FINAL_CONFIGURATIONS:
            G = canonical_instance(style, reduced)
            assert_equal(mais(G), G.n - 3)
            assert_equal(minrank2(G), G.n - 3)


def test_canonical_instances_are_distinct():
    """Assert that no two canonical final configurations are isomorphic."""
    graphs = [canonical_instance(style, reduced).to_digraph()
              for style in ('A', 'B') for reduced in FINAL_CONFIGURATIONS]
    for first, second in itertools.combinations(graphs, 2):
        assert_false(first.is_isomorphic(second))
