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

from collections import namedtuple
import itertools

from .config import (
    STYLE_A_PAIRS, STYLE_B_PAIRS, allowed_types_dict, illegitimate_configurations, merge_limits,
    stage_one_reductions, style_a_config_dict, style_b_config_dict
)
from .digraph import Path
from .exceptions import CapExceededError, ClassificationError
from .sideinfo import min_feedback_vertex_sets
from .transform import build_ncnetwork


NOT_TAU3 = 'NotTau3'
DECOMPOSABLE = 'Decomposable'
CLASS_IA_STYLE_A = 'ClassIaStyleA'
CLASS_IA_STYLE_B = 'ClassIaStyleB'
CLASS_I_NOT_IA = 'ClassI_not_Ia'
NOT_CLASS_I = 'NotClassI'
INCONCLUSIVE = 'Inconclusive'

# Preference when several feedback vertex sets give different verdicts.
_VERDICT_RANK = {
    NOT_TAU3: 0,
    NOT_CLASS_I: 1,
    CLASS_I_NOT_IA: 2,
    INCONCLUSIVE: 3,
    'illegitimate': 4,
    DECOMPOSABLE: 5,
    CLASS_IA_STYLE_A: 6,
    CLASS_IA_STYLE_B: 6,
}

ROLE_PAIRS = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))

_CONFIG_DICTS = {
    'A': (STYLE_A_PAIRS, style_a_config_dict),
    'B': (STYLE_B_PAIRS, style_b_config_dict),
}

Decomposition = namedtuple('Decomposition', ['source', 'unipath', 'partners', 'split', 'remainder'])
ConfigurationMatch = namedtuple('ConfigurationMatch', ['types', 'config_id', 'illegitimate'])
Reduction = namedtuple('Reduction', ['style', 'config_id', 'stage_one', 'final', 'delete', 'identify'])


def _pair_name(pair):
    return '{}{}'.format(*pair)


def _labels(path):
    return [str(v) for v in path]


def _source_label(network, w):
    if w in network.sources:
        return w
    if str(w) in network.sources:
        return str(w)
    raise ValueError('{} is not a source of the network.'.format(w))


def _exact(enumeration, what, limit):
    if enumeration.overflow:
        raise CapExceededError('More than {} {}.'.format(limit, what), cap='path_limit', value=limit)
    return enumeration.items


def unipaths(network, w, limit=None):
    """All simple paths from source w to its own receiver.

    Parameters
    ----------
    network: Network
    w: source vertex (or the message index of an NCNetwork source)
    limit: int, optional
        Enumeration cap, by default DEFAULT_LIMITS['path_limit'].

    Returns
    -------
    result: Enumeration
    """
    limit = merge_limits()['path_limit'] if limit is None else limit
    source = _source_label(network, w)
    return network.graph.enumerate_simple_paths(source, network.receiver_of(source), limit)


def class_I_witness(network, limit=None):
    """Vertices shared by every unipath of every source (empty when there is none)."""
    limit = merge_limits()['path_limit'] if limit is None else limit
    common = None
    for source in network.sources:
        for path in _exact(unipaths(network, source, limit), 'unipaths from {}'.format(source), limit):
            common = set(path) if common is None else common & set(path)
    return frozenset(common or ())


def find_edge_disjoint_decomposition(network, limit=None):
    """Look for a unipath that is edge-disjoint from one unipath of every other source.

    Returns
    -------
    decomposition: Decomposition or None
        source and unipath of the split, the partner unipaths, the
        single-source network formed by the unipath (split) and the network
        of the other sources with the unipath's edges removed (remainder).
    """
    limit = merge_limits()['path_limit'] if limit is None else limit
    paths = dict((source, _exact(unipaths(network, source, limit), 'unipaths from {}'.format(source), limit))
                 for source in network.sources)
    for source in network.sources:
        others = [other for other in network.sources if other != source]
        for path in paths[source]:
            edges = set(path.edges())
            partners = []
            for other in others:
                partner = next((q for q in paths[other] if not edges.intersection(q.edges())), None)
                if partner is None:
                    break
                partners.append(partner)
            else:
                split = network.subnetwork([source], keep_edges=path.edges())
                remainder = network.subnetwork(others, drop_edges=path.edges())
                return Decomposition(source, path, tuple(partners), split, remainder)
    return None


def is_contiguous(p, q):
    """True iff p and q share no vertex or share one stretch that both traverse."""
    in_q = set(q)
    shared = [v for v in p if v in in_q]
    if not shared:
        return True
    start = p.index(shared[0])
    if tuple(p[start:start + len(shared)]) != tuple(shared):
        return False
    start = q.index(shared[0])
    return tuple(q[start:start + len(shared)]) == tuple(shared)


def normalize_contiguous(p, q, network=None):
    """Reroute q along p between the first and the last vertex they share.

    Parameters
    ----------
    p: Path
    q: Path
    network: Network, optional
        When given, the result is checked against its edges.

    Returns
    -------
    q: Path
        Same endpoints as q; its intersection with p is one stretch of p.
    """
    in_p = set(p)
    shared = [v for v in q if v in in_p]
    if not shared:
        return Path(q)
    first, last = shared[0], shared[-1]
    start, stop = p.index(first), p.index(last)
    if start > stop:
        raise ValueError('Paths {} and {} meet in opposite orders.'.format(p, q))
    rerouted = tuple(q[:q.index(first)]) + tuple(p[start:stop + 1]) + tuple(q[q.index(last) + 1:])
    return Path(rerouted, network.graph if network is not None else None)


class SkeletonReport(object):
    """Three contiguously intersecting unipaths and the junctions of their trunk.

    Attributes
    ----------
    style: str
        'A' when the third source leaves the trunk before the second one,
        'B' when it leaves after.
    roles: tuple
        Source vertex playing role 1, 2 and 3.
    unipaths: tuple of Path
        Unipath of each role.
    junctions: dict
        'v12', 'v13', 'v23' (first shared vertex of two roles) and "w'12",
        "w'13", "w'23" (last shared vertex).
    trunk_order: list
        Junctions in the order the role-1 unipath meets them.
    """

    def __init__(self, style, roles, unipaths, junctions, trunk_order):
        self.style = style
        self.roles = tuple(roles)
        self.unipaths = tuple(unipaths)
        self.junctions = dict(junctions)
        self.trunk_order = list(trunk_order)

    def source(self, role):
        return self.roles[role - 1]

    def unipath(self, role):
        return self.unipaths[role - 1]

    def first_shared(self, i, j):
        return self.junctions['v{}{}'.format(min(i, j), max(i, j))]

    def last_shared(self, i, j):
        return self.junctions["w'{}{}".format(min(i, j), max(i, j))]

    def key(self):
        return (self.style, self.roles, self.unipaths)

    def to_dict(self):
        return {
            'style': self.style,
            'roles': [str(v) for v in self.roles],
            'unipaths': [_labels(path) for path in self.unipaths],
            'junctions': dict((name, str(v)) for name, v in sorted(self.junctions.items())),
            'trunk_order': _labels(self.trunk_order),
        }

    def __repr__(self):
        return 'SkeletonReport(style={}, roles={})'.format(self.style, list(self.roles))


def _first_and_last_shared(p, q):
    in_q = set(q)
    shared = [v for v in p if v in in_q]
    if not shared:
        return None
    return shared[0], shared[-1]


def _normalize_triple(paths, network):
    paths = list(paths)
    for _ in range(3):
        changed = False
        for a, b in ((0, 1), (0, 2), (1, 2)):
            if not is_contiguous(paths[a], paths[b]):
                paths[b] = normalize_contiguous(paths[a], paths[b], network)
                changed = True
        if not changed:
            break
    if not all(is_contiguous(paths[a], paths[b]) for a, b in ((0, 1), (0, 2), (1, 2))):
        return None
    return paths


def _skeleton_from_paths(paths, network):
    graph = network.graph
    shared = {}
    for a, b in itertools.permutations(range(3), 2):
        pair = _first_and_last_shared(paths[a], paths[b])
        if pair is None:
            return None
        shared[(a, b)] = pair
    for style in ('A', 'B'):
        for x, y, z in itertools.permutations(range(3)):
            v12, w12 = shared[(x, y)]
            v13, w13 = shared[(x, z)]
            v23, w23 = shared[(y, z)]
            if v13 != v23 or not graph.reachable(v12, v13):
                continue
            if style == 'A':
                if w13 != w23 or not graph.reachable(w13, w12):
                    continue
                trunk = [v12, v13, w13, w12]
            else:
                if w12 != w23 or not graph.reachable(w12, w13):
                    continue
                trunk = [v12, v13, w12, w13]
            junctions = {'v12': v12, 'v13': v13, 'v23': v23, "w'12": w12, "w'13": w13, "w'23": w23}
            return SkeletonReport(style, [network.sources[k] for k in (x, y, z)],
                                  [paths[k] for k in (x, y, z)], junctions, trunk)
    return None


def _skeletons(network, limits):
    path_limit = limits['path_limit']
    lists = [_exact(unipaths(network, source, path_limit), 'unipaths from {}'.format(source), path_limit)
             for source in network.sources]
    seen = set()
    triples = itertools.product(*lists)
    for triple in itertools.islice(triples, limits['crosspath_combinations']):
        paths = _normalize_triple(triple, network)
        if paths is None:
            continue
        skeleton = _skeleton_from_paths(paths, network)
        if skeleton is not None and skeleton.key() not in seen:
            seen.add(skeleton.key())
            yield skeleton


def detect_skeleton(network, limits=None):
    """Return the first skeleton formed by one unipath per source, or None.

    Unipath triples are tried in lexicographic order. Each triple is made
    pairwise contiguous, then its junctions decide between the two styles;
    style A is tried (over all role permutations) before style B.
    """
    if network.tau != 3:
        raise ValueError('Skeletons need exactly three sources, got {}.'.format(network.tau))
    return next(_skeletons(network, merge_limits(limits)), None)


class CrosspathInfo(object):
    """A crosspath from the role-i source to the role-j receiver.

    Attributes
    ----------
    pair: tuple
        Role pair (i, j).
    path: Path
    u: vertex
        Last vertex the crosspath shares with the i-unipath.
    t: vertex
        First vertex the crosspath shares with the j-unipath.
    type: int
        3 when u lies downstream of v_ik, 2 when t lies upstream of w'_jk,
        1 otherwise.
    allowed: frozenset
        Vertices of the i-unipath up to v_ij and of the j-unipath from w'_ij;
        a Class Ia crosspath meets the rest of the skeleton only there.
    """

    def __init__(self, pair, path, u, t, type, allowed):
        self.pair = tuple(pair)
        self.path = path
        self.u = u
        self.t = t
        self.type = type
        self.allowed = frozenset(allowed)

    def to_dict(self):
        return {
            'pair': _pair_name(self.pair),
            'path': _labels(self.path),
            'u': str(self.u),
            't': str(self.t),
            'type': 'T{}'.format(self.type),
        }

    def __repr__(self):
        return 'CrosspathInfo({}, T{}, {})'.format(_pair_name(self.pair), self.type, self.path)


def crosspath_type(network, skeleton, pair, u, t):
    """Type of an ij-crosspath leaving the i-unipath at u and joining the j-unipath at t.

    Returns None when u is downstream of v_ik and t is upstream of w'_jk at
    the same time, which a crosspath of a skeleton with three sources in a
    minimal feedback vertex set cannot do.
    """
    i, j = pair
    k = 6 - i - j
    graph = network.graph
    downstream = graph.reachable(skeleton.first_shared(i, k), u)
    upstream = graph.reachable(t, skeleton.last_shared(j, k))
    if downstream and upstream:
        return None
    if downstream:
        return 3
    if upstream:
        return 2
    return 1


def _crosspath_info(network, skeleton, pair, path, diagnostics):
    i, j = pair
    p_i, p_j = skeleton.unipath(i), skeleton.unipath(j)
    in_i, in_j = set(p_i), set(p_j)
    u = [v for v in path if v in in_i][-1]
    t = next(v for v in path if v in in_j)
    kind = crosspath_type(network, skeleton, pair, u, t)
    if kind is None:
        diagnostics.append('{}-crosspath {} leaves after v_{}{} and rejoins before w\'_{}{}'.format(
            _pair_name(pair), _labels(path), i, 6 - i - j, j, 6 - i - j))
        return None
    if kind not in allowed_types_dict[skeleton.style][pair]:
        diagnostics.append('{}-crosspath {} has type T{}, impossible in style {}'.format(
            _pair_name(pair), _labels(path), kind, skeleton.style))
        return None
    allowed = set(p_i.segment(p_i.source, skeleton.first_shared(i, j)))
    allowed.update(p_j.segment(skeleton.last_shared(i, j), p_j.target))
    return CrosspathInfo(pair, path, u, t, kind, allowed)


def _meets_only_allowed(info, other_path):
    return set(info.path).intersection(other_path) <= info.allowed


def crosspath_candidates(network, skeleton, limits=None, diagnostics=None):
    """Every usable crosspath of every role pair.

    Each simple path from the role-i source to the role-j receiver is made
    contiguous with the i-unipath and then with the j-unipath; paths that
    touch the shared stretch of the two unipaths, or that meet the skeleton
    outside their allowed segments, are dropped.

    Returns
    -------
    candidates: dict
        Role pair -> list of CrosspathInfo, lexicographically sorted.
    """
    limits = merge_limits(limits)
    diagnostics = [] if diagnostics is None else diagnostics
    graph = network.graph
    candidates = {}
    for pair in ROLE_PAIRS:
        i, j = pair
        p_i, p_j = skeleton.unipath(i), skeleton.unipath(j)
        overlap = set(p_i) & set(p_j)
        receiver = network.receiver_of(skeleton.source(j))
        found = _exact(graph.enumerate_simple_paths(skeleton.source(i), receiver, limits['path_limit']),
                       'paths for the {}-crosspath'.format(_pair_name(pair)), limits['path_limit'])
        seen = set()
        infos = []
        for path in found:
            path = normalize_contiguous(p_j, normalize_contiguous(p_i, path, network), network)
            if overlap.intersection(path) or path in seen:
                continue
            seen.add(path)
            info = _crosspath_info(network, skeleton, pair, path, diagnostics)
            if info is not None and all(_meets_only_allowed(info, p) for p in skeleton.unipaths):
                infos.append(info)
        infos.sort(key=lambda info: graph.sort_key(info.path))
        candidates[pair] = infos
    return candidates


def find_crosspaths(network, skeleton, limits=None):
    """The first usable crosspath of each of the six role pairs.

    Raises ClassificationError naming the role pairs without any crosspath;
    three sources of a minimal feedback vertex set always have all six.
    """
    candidates = crosspath_candidates(network, skeleton, limits)
    missing = [pair for pair in ROLE_PAIRS if not candidates[pair]]
    if missing:
        raise ClassificationError('No crosspath avoiding the shared trunk for role pairs {}.'.format(
            ', '.join(_pair_name(pair) for pair in missing)), pairs=missing)
    return dict((pair, candidates[pair][0]) for pair in ROLE_PAIRS)


def _compatible(first, second):
    shared = set(first.path).intersection(second.path)
    return shared <= first.allowed and shared <= second.allowed


def check_class_Ia(network, skeleton, crosspaths):
    """True iff every crosspath meets the rest of the skeleton subgraph only in
    the source-side stretch i -> v_ij or the receiver-side stretch w'_ij -> D_j'.

    Parameters
    ----------
    network: NCNetwork
    skeleton: SkeletonReport
    crosspaths: dict
        Role pair -> CrosspathInfo for all six pairs.
    """
    chosen = [crosspaths[pair] for pair in ROLE_PAIRS]
    for info in chosen:
        if not all(_meets_only_allowed(info, p) for p in skeleton.unipaths):
            return False
    return all(_compatible(a, b) for a, b in itertools.combinations(chosen, 2))


def _selections(candidates, chosen):
    depth = len(chosen)
    if depth == len(ROLE_PAIRS):
        yield dict((info.pair, info) for info in chosen)
        return
    for info in candidates[ROLE_PAIRS[depth]]:
        if all(_compatible(info, other) for other in chosen):
            chosen.append(info)
            for selection in _selections(candidates, chosen):
                yield selection
            chosen.pop()


def classify_types(skeleton, crosspaths, network):
    """Type every crosspath and look the combination up in the style's configuration tree.

    Returns
    -------
    match: ConfigurationMatch
        types (role pair -> 1, 2 or 3), config_id and whether the
        configuration is illegitimate.
    """
    types = {}
    for pair in ROLE_PAIRS:
        info = crosspaths[pair]
        kind = crosspath_type(network, skeleton, pair, info.u, info.t)
        if kind is None or kind not in allowed_types_dict[skeleton.style][pair]:
            raise ClassificationError('The {}-crosspath cannot have type {} in style {}.'.format(
                _pair_name(pair), kind, skeleton.style), pairs=[pair])
        types[pair] = kind
    pairs, config_dict = _CONFIG_DICTS[skeleton.style]
    signature = tuple(types[pair] for pair in pairs)
    config_id = next((key for key, value in sorted(config_dict.items()) if value == signature), None)
    if config_id is None:
        raise ClassificationError('Types {} match no style {} configuration.'.format(
            signature, skeleton.style), pairs=list(pairs))
    return ConfigurationMatch(types, config_id, config_id in illegitimate_configurations[skeleton.style])


def reduce_configuration(style, config_id):
    """Map a legitimate configuration onto its final form.

    Returns
    -------
    reduction: Reduction
        Stage-I form, final form ('S21' to 'S24'), the role pairs whose
        crosspaths are deleted, and the template -> instance role pair map.
    """
    if style not in stage_one_reductions:
        raise ValueError('Unknown skeleton style: {}'.format(style))
    if config_id in illegitimate_configurations[style]:
        raise ValueError('Style {} configuration {} is illegitimate and has no reduction.'.format(style, config_id))
    for stage_one, entry in sorted(stage_one_reductions[style].items()):
        if config_id in entry['configurations']:
            return Reduction(style, config_id, stage_one, entry['final'], tuple(entry['delete']),
                             dict(entry['identify']))
    raise ValueError('Unknown style {} configuration: {}'.format(style, config_id))


class ClassReport(object):
    """Outcome of classifying a side-information graph or one of its networks."""

    def __init__(self, verdict, tau, vtau=None, vtau_tried=(), network=None, witness=(), skeleton=None,
                 crosspaths=None, match=None, reduction=None, decomposition=None, diagnostics=()):
        self.verdict = verdict
        self.tau = tau
        self.vtau = tuple(vtau) if vtau is not None else None
        self.vtau_tried = [tuple(vertex_set) for vertex_set in vtau_tried]
        self.network = network
        self.witness = frozenset(witness)
        self.skeleton = skeleton
        self.crosspaths = dict(crosspaths or {})
        self.match = match
        self.reduction = reduction
        self.decomposition = decomposition
        self.diagnostics = list(diagnostics)
        if self.is_class_ia != (match is not None):
            raise ValueError('A configuration id is reported exactly for Class Ia verdicts.')

    @property
    def is_class_ia(self):
        return self.verdict in (CLASS_IA_STYLE_A, CLASS_IA_STYLE_B)

    @property
    def style(self):
        return self.skeleton.style if self.skeleton is not None else None

    @property
    def config_id(self):
        return self.match.config_id if self.match is not None else None

    @property
    def illegitimate(self):
        return bool(self.match is not None and self.match.illegitimate)

    @property
    def stage_one_id(self):
        return self.reduction.stage_one if self.reduction is not None else None

    @property
    def reduced_id(self):
        return self.reduction.final if self.reduction is not None else None

    @property
    def deleted(self):
        return self.reduction.delete if self.reduction is not None else ()

    def subgraph_paths(self):
        """Unipaths plus the crosspaths kept by the reduction."""
        kept = [self.crosspaths[pair].path for pair in ROLE_PAIRS
                if pair in self.crosspaths and pair not in self.deleted]
        return list(self.skeleton.unipaths) + kept

    def _rank(self):
        if self.illegitimate:
            return _VERDICT_RANK['illegitimate']
        return _VERDICT_RANK[self.verdict]

    def to_dict(self):
        data = {
            'verdict': self.verdict,
            'tau': self.tau,
            'vtau': list(self.vtau) if self.vtau is not None else None,
            'vtau_tried': [list(vertex_set) for vertex_set in self.vtau_tried],
            'witness': sorted(str(v) for v in self.witness),
            'style': self.style,
            'config_id': self.config_id,
            'illegitimate': self.illegitimate,
            'stage_one_id': self.stage_one_id,
            'reduced_id': self.reduced_id,
            'deleted': [_pair_name(pair) for pair in self.deleted],
            'types': dict((_pair_name(pair), 'T{}'.format(kind))
                          for pair, kind in sorted(self.match.types.items())) if self.match else {},
            'skeleton': self.skeleton.to_dict() if self.skeleton is not None else None,
            'crosspaths': [self.crosspaths[pair].to_dict() for pair in ROLE_PAIRS if pair in self.crosspaths],
            'diagnostics': list(self.diagnostics),
        }
        if self.decomposition is not None:
            data['decomposition'] = {
                'source': str(self.decomposition.source),
                'unipath': _labels(self.decomposition.unipath),
            }
        return data

    def __repr__(self):
        return 'ClassReport(verdict={}, config_id={}, reduced_id={})'.format(
            self.verdict, self.config_id, self.reduced_id)


def classify_network(network, limits=None):
    """Classify the coding network of one feedback vertex set of size three.

    Decomposition is tried first. Otherwise every skeleton is searched for a
    choice of six crosspaths that passes the Class Ia test and types to a
    legitimate configuration; illegitimate matches are reported only when no
    legitimate one exists. A truncated enumeration makes the verdict
    Inconclusive, never negative.

    Returns
    -------
    report: ClassReport
    """
    limits = merge_limits(limits)
    vtau = getattr(network, 'vtau', None)
    if network.tau != 3:
        return ClassReport(NOT_TAU3, network.tau, vtau, network=network)
    diagnostics = []
    try:
        decomposition = find_edge_disjoint_decomposition(network, limits['path_limit'])
        if decomposition is not None:
            return ClassReport(DECOMPOSABLE, 3, vtau, network=network, decomposition=decomposition)
        witness = class_I_witness(network, limits['path_limit'])
        if not witness:
            return ClassReport(NOT_CLASS_I, 3, vtau, network=network,
                               diagnostics=['the unipaths share no common vertex'])
        fallback = None
        found_skeleton = False
        for skeleton in _skeletons(network, limits):
            found_skeleton = True
            candidates = crosspath_candidates(network, skeleton, limits, diagnostics)
            missing = [pair for pair in ROLE_PAIRS if not candidates[pair]]
            if missing:
                diagnostics.append('style {} skeleton with roles {}: no crosspath for {}'.format(
                    skeleton.style, _labels(skeleton.roles), ', '.join(_pair_name(pair) for pair in missing)))
                continue
            selections = itertools.islice(_selections(candidates, []), limits['crosspath_combinations'])
            for selection in selections:
                match = classify_types(skeleton, selection, network)
                if match.illegitimate:
                    if fallback is None:
                        fallback = (skeleton, selection, match)
                    continue
                verdict = CLASS_IA_STYLE_A if skeleton.style == 'A' else CLASS_IA_STYLE_B
                return ClassReport(verdict, 3, vtau, network=network, witness=witness, skeleton=skeleton,
                                   crosspaths=selection, match=match,
                                   reduction=reduce_configuration(skeleton.style, match.config_id),
                                   diagnostics=diagnostics)
        if fallback is not None:
            skeleton, selection, match = fallback
            diagnostics.append('style B configuration {} cannot occur with three sources in a minimal '
                               'feedback vertex set'.format(match.config_id))
            return ClassReport(CLASS_IA_STYLE_B, 3, vtau, network=network, witness=witness, skeleton=skeleton,
                               crosspaths=selection, match=match, diagnostics=diagnostics)
        if not found_skeleton:
            diagnostics.append('no unipath triple forms a skeleton')
        return ClassReport(CLASS_I_NOT_IA, 3, vtau, network=network, witness=witness, diagnostics=diagnostics)
    except CapExceededError as error:
        diagnostics.append(str(error))
        return ClassReport(INCONCLUSIVE, 3, vtau, network=network, diagnostics=diagnostics)


def classify(G, limits=None, vtau=None):
    """Classify a side-information graph.

    Every minimum feedback vertex set is tried in lexicographic order until
    one yields a legitimate Class Ia configuration; otherwise the most
    informative verdict found is returned.

    Parameters
    ----------
    G: SIGraph
    limits: dict, optional
        Caps overriding icnc.config.DEFAULT_LIMITS.
    vtau: iterable of int, optional
        Classify only the network of this vertex set.

    Returns
    -------
    report: ClassReport
    """
    limits = merge_limits(limits)
    tau, sets = min_feedback_vertex_sets(G, max_n=limits['mais_max_n'])
    if vtau is not None:
        sets = [tuple(sorted(set(vtau)))]
    elif tau != 3:
        return ClassReport(NOT_TAU3, tau)
    best = None
    tried = []
    for vertex_set in sets:
        tried.append(vertex_set)
        report = classify_network(build_ncnetwork(G, vertex_set), limits)
        report.tau = tau
        if best is None or report._rank() > best._rank():
            best = report
        if report.is_class_ia and not report.illegitimate:
            break
    best.vtau_tried = tried
    return best
