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

from nose.tools import assert_equal, assert_raises, assert_true, assert_false, assert_is_none

from icnc.classifier import (
    CLASS_IA_STYLE_A, CLASS_IA_STYLE_B, DECOMPOSABLE, INCONCLUSIVE, NOT_TAU3, ROLE_PAIRS, ClassReport,
    CrosspathInfo, check_class_Ia, class_I_witness, classify, classify_network, classify_types, crosspath_type,
    detect_skeleton, find_crosspaths, find_edge_disjoint_decomposition, is_contiguous,
    normalize_contiguous, reduce_configuration, unipaths
)
from icnc.digraph import Digraph, Path
from icnc.exceptions import ClassificationError
from icnc.generator import canonical_instance, decomposable_instance, illegitimate_instance
from icnc.sideinfo import SIGraph, min_feedback_vertex_sets
from icnc.transform import build_ncnetwork

three_cycle = SIGraph(3, {1: [3], 2: [1], 3: [2]})
a_s21 = build_ncnetwork(canonical_instance('A', 'S21'), (1, 2, 3))
b_s21 = build_ncnetwork(canonical_instance('B', 'S21'), (1, 2, 3))


def test_unipaths_accept_message_or_label():
    """Assert that unipaths takes a source as message index or as vertex label."""
    expected = [Path(('1', "1'", '4', "4'", '5', "5'", '6', "6'", 'D_1', "D_1'"))]
    assert_equal(unipaths(a_s21, 1).items, expected)
    assert_equal(unipaths(a_s21, '1').items, expected)
    assert_raises(ValueError, unipaths, a_s21, 4)


def test_class_I_witness():
    """Assert that the unipaths of the canonical style A network all run through (5, 5')."""
    assert_equal(class_I_witness(a_s21), frozenset(['5', "5'"]))


def test_is_contiguous_and_normalize():
    """Assert that a path meeting another twice is rerouted along the shared stretch."""
    graph = Digraph(['a', 'x', 'b', 'y', 'c', 'd', 'z'],
                    [('a', 'b'), ('b', 'c'), ('c', 'd'), ('x', 'b'), ('b', 'y'), ('y', 'c'), ('c', 'z')])
    p = Path(('a', 'b', 'c', 'd'), graph)
    q = Path(('x', 'b', 'y', 'c', 'z'), graph)
    assert_false(is_contiguous(p, q))
    rerouted = normalize_contiguous(p, q)
    assert_equal(rerouted, Path(('x', 'b', 'c', 'z')))
    assert_true(is_contiguous(p, rerouted))
    assert_true(is_contiguous(p, Path(('x', 'y'))))
    assert_raises(ValueError, normalize_contiguous, Path(('c', 'b')), Path(('b', 'c')))


def test_detect_skeleton_style_a():
    """Assert that the canonical style A network has the junctions v12 = 4, v13 = v23 = 5, w'13 = 5', w'12 = 6'."""
    skeleton = detect_skeleton(a_s21)
    assert_equal(skeleton.style, 'A')
    assert_equal(skeleton.roles, ('1', '2', '3'))
    assert_equal(skeleton.junctions, {'v12': '4', 'v13': '5', 'v23': '5',
                                      "w'12": "6'", "w'13": "5'", "w'23": "5'"})
    assert_equal(skeleton.trunk_order, ['4', '5', "5'", "6'"])
    assert_equal(skeleton.first_shared(2, 1), '4')
    assert_equal(skeleton.to_dict()['junctions']['v13'], '5')


def test_detect_skeleton_style_b():
    """Assert that the canonical style B network leaves the trunk for role 3 after role 2."""
    skeleton = detect_skeleton(b_s21)
    assert_equal(skeleton.style, 'B')
    assert_equal(skeleton.roles, ('1', '2', '3'))
    assert_equal(skeleton.trunk_order, ['4', '5', "5'", "6'"])
    assert_raises(ValueError, detect_skeleton, build_ncnetwork(three_cycle, [1]))


def test_find_crosspaths():
    """Assert that the canonical style A network has a direct crosspath of type 1 for every role pair."""
    skeleton = detect_skeleton(a_s21)
    crosspaths = find_crosspaths(a_s21, skeleton)
    assert_equal(sorted(crosspaths), sorted(ROLE_PAIRS))
    first = crosspaths[(1, 2)]
    assert_equal(first.path, Path(('1', "1'", 'D_2', "D_2'")))
    assert_equal((first.u, first.t), ("1'", 'D_2'))
    assert_true(all(info.type == 1 for info in crosspaths.values()))
    assert_equal(first.to_dict()['type'], 'T1')


def test_check_class_Ia():
    """Assert that direct crosspaths pass the class Ia test and one allowed nowhere on the skeleton fails it."""
    skeleton = detect_skeleton(a_s21)
    crosspaths = find_crosspaths(a_s21, skeleton)
    assert_true(check_class_Ia(a_s21, skeleton, crosspaths))
    original = crosspaths[(1, 2)]
    crosspaths[(1, 2)] = CrosspathInfo((1, 2), original.path, original.u, original.t, original.type, ())
    assert_false(check_class_Ia(a_s21, skeleton, crosspaths))


def test_crosspath_type():
    """Assert that a crosspath joining the receiver's unipath on the trunk has type 2."""
    skeleton = detect_skeleton(b_s21)
    assert_equal(crosspath_type(b_s21, skeleton, (2, 1), "2'", '6'), 2)
    assert_equal(crosspath_type(b_s21, skeleton, (1, 2), "1'", 'D_2'), 1)


def test_classify_canonical_style_a():
    """Assert that the canonical style A S21 instance is configuration 1, reduced through S11."""
    report = classify(canonical_instance('A', 'S21'))
    assert_equal(report.verdict, CLASS_IA_STYLE_A)
    assert_equal(report.tau, 3)
    assert_equal(report.vtau, (1, 2, 3))
    assert_equal(report.vtau_tried, [(1, 2, 3)])
    assert_equal(report.config_id, 1)
    assert_equal(report.stage_one_id, 'S11')
    assert_equal(report.reduced_id, 'S21')
    assert_false(report.illegitimate)
    assert_equal(len(report.subgraph_paths()), 9)
    data = report.to_dict()
    assert_equal(data['types'], dict((name, 'T1') for name in ('12', '13', '21', '23', '31', '32')))
    assert_equal(data['style'], 'A')


def test_classify_with_deletions():
    """Assert that a style A configuration with a type 3 crosspath drops a crosspath from the subgraph."""
    report = classify(canonical_instance('A', 'S22'))
    assert_equal(report.verdict, CLASS_IA_STYLE_A)
    assert_equal(report.reduced_id, 'S22')
    assert_equal(report.match.types[(1, 3)], 3)
    assert_equal(len(report.subgraph_paths()), 3 + 6 - len(report.deleted))
    assert_true(report.deleted)


def test_classify_not_tau3():
    """Assert that graphs with tau other than 3 are NotTau3."""
    report = classify(three_cycle)
    assert_equal(report.verdict, NOT_TAU3)
    assert_equal(report.tau, 1)
    assert_is_none(report.config_id)
    report = classify_network(build_ncnetwork(three_cycle, [1]))
    assert_equal(report.verdict, NOT_TAU3)


def test_classify_decomposable():
    """Assert that a network with an edge-disjoint unipath is Decomposable."""
    G = decomposable_instance()
    report = classify(G)
    assert_equal(report.verdict, DECOMPOSABLE)
    assert_equal(report.decomposition.source, '1')
    assert_equal(report.decomposition.unipath, Path(('1', "1'", '4', "4'", 'D_1', "D_1'")))
    assert_equal(report.to_dict()['decomposition']['source'], '1')
    decomposition = find_edge_disjoint_decomposition(build_ncnetwork(G, (1, 2, 3)))
    assert_equal(decomposition.remainder.sources, ('2', '3'))
    assert_equal(decomposition.split.sources, ('1',))
    assert_is_none(find_edge_disjoint_decomposition(a_s21))


def test_classify_illegitimate():
    """Assert that the illegitimate style B configurations are reported without a reduction."""
    for config_id in (10, 12):
        G = illegitimate_instance(config_id)
        report = classify(G, vtau=(1, 2, 3))
        assert_equal(report.verdict, CLASS_IA_STYLE_B)
        assert_equal(report.tau, 2)
        assert_equal(report.config_id, config_id)
        assert_true(report.illegitimate)
        assert_is_none(report.reduced_id)
        assert_true(report.diagnostics)
    assert_raises(ValueError, illegitimate_instance, 3)


def test_classify_inconclusive():
    """Assert that a truncated path enumeration makes the verdict Inconclusive."""
    report = classify_network(a_s21, limits={'path_limit': 1})
    assert_equal(report.verdict, INCONCLUSIVE)
    assert_true(report.diagnostics)


def test_reduce_configuration():
    """Assert the stage I form, final form and deletions of a few configurations."""
    reduction = reduce_configuration('A', 4)
    assert_equal(reduction.stage_one, 'S16')
    assert_equal(reduction.final, 'S24')
    assert_equal(reduction.delete, ((1, 3), (3, 1)))
    assert_equal(reduction.identify, {(1, 3): (2, 3), (3, 1): (3, 2)})
    assert_equal(reduce_configuration('B', 11).final, 'S24')
    assert_raises(ValueError, reduce_configuration, 'B', 10)
    assert_raises(ValueError, reduce_configuration, 'A', 17)
    assert_raises(ValueError, reduce_configuration, 'C', 1)


def test_class_report_consistency():
    """Assert that a configuration is attached exactly to Class Ia verdicts."""
    assert_raises(ValueError, ClassReport, CLASS_IA_STYLE_A, 3)
    report = ClassReport(NOT_TAU3, 2)
    assert_equal(report.to_dict()['verdict'], NOT_TAU3)
    assert_equal(report.deleted, ())


def test_classify_types_rejects_impossible_type():
    """Assert that a crosspath of a type its style forbids raises ClassificationError."""
    skeleton = detect_skeleton(a_s21)
    crosspaths = find_crosspaths(a_s21, skeleton)
    match = classify_types(skeleton, crosspaths, a_s21)
    assert_equal(match.config_id, 1)
    assert_false(match.illegitimate)
    original = crosspaths[(1, 2)]
    crosspaths[(1, 2)] = CrosspathInfo((1, 2), original.path, "5'", 'D_2', 3, original.allowed)
    with assert_raises(ClassificationError) as context:
        classify_types(skeleton, crosspaths, a_s21)
    assert_equal(context.exception.pairs, [(1, 2)])


def test_five_cycle_never_class_Ia():
    """Assert that no minimum feedback vertex set of the bidirected 5-cycle gives a Class Ia network."""
    five_cycle = SIGraph(5, {1: [2, 5], 2: [1, 3], 3: [2, 4], 4: [3, 5], 5: [1, 4]})
    tau, sets = min_feedback_vertex_sets(five_cycle)
    assert_equal((tau, len(sets)), (3, 5))
    assert_false(classify(five_cycle).is_class_ia)
    for vtau in sets:
        report = classify(five_cycle, vtau=vtau)
        assert_false(report.is_class_ia)
        assert_equal(report.verdict, DECOMPOSABLE)
