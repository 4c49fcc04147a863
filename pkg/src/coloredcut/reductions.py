"""Generators and verifiers for hardness instances of colorful cut.

Each generator turns a CNF formula (or a graph) into an edge-colored graph
whose colorful cuts correspond to satisfying (or not-all-equal) assignments,
together with provenance describing what every color and vertex encodes:

* ``sat_to_multigraph``: clause triangles with one pair-color per
  (positive occurrence, negative occurrence) pair of a variable; parallel
  edges realize the pairing.
* ``multigraph_to_simple``: every edge becomes a three-edge path; the middle
  edge keeps the color, the end edges get fresh single-edge colors.
* ``make_k4mf_connected``: joins the clause gadgets through a binary tree and
  splits high-degree vertices into paths, yielding a connected graph with
  maximum degree three, no K4 minor, and at most two edges per color.
* ``make_oct_one``: merges one corner per triangle into a single apex, so
  deleting that vertex leaves a bipartite graph.
* ``embed_complete``: adds a universal vertex and paints all missing edges
  with one fresh color, producing a complete graph.
* ``nae_to_cliques``: monochromatic clause triangles plus per-variable
  connector vertices; every color class induces a K2 or a K3.

The provenance sidecar is line-oriented::

    color <id> pair <var> <j> <k>
    color <id> clause <j>
    color <id> fresh
    vertex <id> corner <clause> <t>
    vertex <id> a <var>            (or b <var>)
    vertex <id> tree <node>
    vertex <id> subdiv <args...>
    vertex <id> apex
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import networkx as nx

from .errors import FormatError
from .graph import ColoredGraph, Cut, is_colorful
from .sat import Assignment, CnfFormula, nae_satisfies, satisfies


class ReductionKind(Enum):
    PLANAR_MULTI = "planar-multi"
    PLANAR_SIMPLE = "planar-simple"
    K4MF = "k4mf"
    OCT_ONE = "oct1"
    COMPLETE = "complete"
    NAE_CLIQUES = "nae"


@dataclass(frozen=True)
class ReductionArtifact:
    """A generated graph plus the bookkeeping tying it back to its formula.

    literal_edge_map sends (variable, occurrence index, is_positive) to the
    0-based edge indices realizing that literal occurrence.  active_clauses
    lists the 0-based indices of the source clauses that survived
    preprocessing (all of them for the not-all-equal construction).
    """

    graph: ColoredGraph
    kind: ReductionKind
    formula: Optional[CnfFormula]
    active_clauses: tuple[int, ...] = ()
    literal_edge_map: dict[tuple[int, int, bool], tuple[int, ...]] = field(
        default_factory=dict
    )
    color_meaning: dict[int, tuple] = field(default_factory=dict)
    vertex_meaning: dict[int, tuple] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# preprocessing


def strip_single_polarity(
    f: CnfFormula,
) -> tuple[tuple[int, ...], tuple[int, ...], dict[int, bool]]:
    """Iteratively drop clauses containing a variable of a single polarity.

    Such clauses are trivially satisfiable by pointing the one-sided variable
    at its polarity.  Returns (kept clause indices, removed clause indices,
    forced values that satisfy every removed clause).
    """
    kept = list(range(len(f.clauses)))
    forced: dict[int, bool] = {}
    while True:
        polarity: dict[int, set[bool]] = defaultdict(set)
        for j in kept:
            for lit in f.clauses[j]:
                polarity[abs(lit)].add(lit > 0)
        one_sided = {v: pols for v, pols in polarity.items() if len(pols) == 1}
        if not one_sided:
            break
        for v, pols in one_sided.items():
            forced[v] = next(iter(pols))
        kept = [
            j
            for j in kept
            if not any(abs(lit) in one_sided for lit in f.clauses[j])
        ]
    removed = tuple(j for j in range(len(f.clauses)) if j not in set(kept))
    return tuple(kept), removed, forced


def _occurrences(
    clauses: list[tuple[int, ...]]
) -> tuple[dict[int, list[tuple[int, int]]], dict[int, list[tuple[int, int]]]]:
    """Positive/negative occurrence lists: var -> [(clause index, slot 1..3)]."""
    pos: dict[int, list[tuple[int, int]]] = defaultdict(list)
    neg: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for j, clause in enumerate(clauses):
        for slot, lit in enumerate(clause, start=1):
            (pos if lit > 0 else neg)[abs(lit)].append((j, slot))
    return pos, neg


# ---------------------------------------------------------------------------
# clause triangles with pair colors

_SLOT_CORNERS = {1: (1, 2), 2: (2, 3), 3: (3, 1)}  # slot -> corner offsets


def sat_to_multigraph(f: CnfFormula) -> ReductionArtifact:
    """Clause-triangle multigraph whose colorful cuts are satisfying assignments.

    Clause j becomes a triangle on vertices 3j+1..3j+3 (0-based j); its t-th
    literal owns one triangle side.  For variable i with positive occurrences
    numbered j and negative occurrences numbered k, color (i,j,k) appears on
    exactly two parallel-edge slots: the j-th positive side (one parallel
    edge per k) and the k-th negative side (one per j).  Colors are numbered
    by ascending (variable, j, k).
    """
    if any(len(cl) != 3 for cl in f.clauses):
        raise ValueError("every clause must have exactly three literals")
    kept, _, _ = strip_single_polarity(f)
    if not kept:
        raise ValueError("no clauses left after removing single-polarity variables")
    clauses = [f.clauses[j] for j in kept]
    pos, neg = _occurrences(clauses)
    occ_index: dict[tuple[int, int], tuple[int, int, bool]] = {}
    for i, occs in pos.items():
        for number, (j, slot) in enumerate(occs, start=1):
            occ_index[(j, slot)] = (i, number, True)
    for i, occs in neg.items():
        for number, (j, slot) in enumerate(occs, start=1):
            occ_index[(j, slot)] = (i, number, False)

    pair_color: dict[tuple[int, int, int], int] = {}
    color_meaning: dict[int, tuple] = {}
    for i in sorted(pos):
        for j in range(1, len(pos[i]) + 1):
            for k in range(1, len(neg[i]) + 1):
                color = len(pair_color) + 1
                pair_color[(i, j, k)] = color
                color_meaning[color] = ("pair", i, j, k)

    edges: list[tuple[int, int, int]] = []
    literal_edge_map: dict[tuple[int, int, bool], tuple[int, ...]] = {}
    for j, clause in enumerate(clauses):
        for slot in range(1, 4):
            off_a, off_b = _SLOT_CORNERS[slot]
            a, b = 3 * j + off_a, 3 * j + off_b
            var, number, positive = occ_index[(j, slot)]
            partners = len(neg[var]) if positive else len(pos[var])
            indices = []
            for other in range(1, partners + 1):
                key = (var, number, other) if positive else (var, other, number)
                indices.append(len(edges))
                edges.append((a, b, pair_color[key]))
            literal_edge_map[(var, number, positive)] = tuple(indices)

    n = 3 * len(clauses)
    vertex_meaning = {
        3 * j + t: ("corner", j + 1, t) for j in range(len(clauses)) for t in (1, 2, 3)
    }
    graph = ColoredGraph(n, tuple(edges), len(pair_color))
    return ReductionArtifact(
        graph,
        ReductionKind.PLANAR_MULTI,
        f,
        kept,
        literal_edge_map,
        color_meaning,
        vertex_meaning,
    )


# ---------------------------------------------------------------------------
# witness translation


def assignment_to_cut(a: ReductionArtifact, asg: Assignment) -> Cut:
    """Turn a satisfying (or NAE-satisfying) assignment into a colorful cut."""
    if a.formula is None:
        raise ValueError("artifact carries no source formula")
    if a.kind is ReductionKind.PLANAR_MULTI:
        if not satisfies(a.formula, asg):
            raise ValueError("assignment does not satisfy the source formula")
        clauses = [a.formula.clauses[j] for j in a.active_clauses]
        s_side: set[int] = set()
        for j, clause in enumerate(clauses):
            slot = next(
                t
                for t, lit in enumerate(clause, start=1)
                if asg[abs(lit)] == (lit > 0)
            )
            off_a, off_b = _SLOT_CORNERS[slot]
            # endpoints of the chosen true literal's side stay together
            s_side.update((3 * j + off_a, 3 * j + off_b))
        return Cut(a.graph.n, frozenset(s_side))
    if a.kind is ReductionKind.NAE_CLIQUES:
        if not nae_satisfies(a.formula, asg):
            raise ValueError("assignment does not NAE-satisfy the source formula")
        pos, neg = _occurrences(list(a.formula.clauses))
        s_side = set()
        for v, meaning in a.vertex_meaning.items():
            if meaning[0] == "corner":
                j, t = meaning[1], meaning[2]
                lit = a.formula.clauses[j - 1][t - 1]
                if asg[abs(lit)] == (lit > 0):
                    s_side.add(v)
            elif meaning[0] == "a":
                if not asg[meaning[1]]:
                    s_side.add(v)
            elif meaning[0] == "b":
                if asg[meaning[1]]:
                    s_side.add(v)
        return Cut(a.graph.n, frozenset(s_side))
    raise ValueError(f"no assignment-to-cut recipe for kind {a.kind.value}")


def cut_to_assignment(a: ReductionArtifact, cut: Cut) -> Assignment:
    """Extract a satisfying (or NAE-satisfying) assignment from a colorful cut."""
    if a.formula is None:
        raise ValueError("artifact carries no source formula")
    if not is_colorful(a.graph, cut):
        raise ValueError("cut is not colorful")
    f = a.formula
    if a.kind is ReductionKind.PLANAR_MULTI:
        _, _, forced = strip_single_polarity(f)
        asg: Assignment = {v: False for v in range(1, f.var_count + 1)}
        asg.update(forced)
        positive_keys = defaultdict(list)
        for (var, number, positive), edge_indices in a.literal_edge_map.items():
            if positive:
                positive_keys[var].append(edge_indices[0])
        for var, first_edges in positive_keys.items():
            asg[var] = any(
                not cut.crosses(a.graph.edges[e][0], a.graph.edges[e][1])
                for e in first_edges
            )
        if not satisfies(f, asg):
            raise AssertionError("colorful cut produced a non-satisfying assignment")
        return asg
    if a.kind is ReductionKind.NAE_CLIQUES:
        pos, neg = _occurrences(list(f.clauses))
        asg = {}
        for var in range(1, f.var_count + 1):
            if pos.get(var):
                j, slot = pos[var][0]
                asg[var] = (3 * j + slot) in cut.s_side
            elif neg.get(var):
                j, slot = neg[var][0]
                asg[var] = (3 * j + slot) not in cut.s_side
            else:
                asg[var] = False
        if not nae_satisfies(f, asg):
            raise AssertionError("colorful cut produced a non-NAE assignment")
        return asg
    raise ValueError(f"no cut-to-assignment recipe for kind {a.kind.value}")


# ---------------------------------------------------------------------------
# simple-graph form: replace every edge by a three-edge path


def multigraph_to_simple(a: ReductionArtifact) -> ReductionArtifact:
    """Replace edge e = {v,w} by v-x-y-w; the middle edge keeps e's color and
    the end edges get fresh single-edge colors, preserving colorful cuts."""
    if a.kind is not ReductionKind.PLANAR_MULTI:
        raise ValueError(f"expected a {ReductionKind.PLANAR_MULTI.value} artifact")
    g = a.graph
    edges: list[tuple[int, int, int]] = []
    color_meaning = dict(a.color_meaning)
    vertex_meaning = dict(a.vertex_meaning)
    for e, (u, v, c) in enumerate(g.edges):
        x = g.n + 2 * e + 1
        y = g.n + 2 * e + 2
        f1 = g.p + 2 * e + 1
        f2 = g.p + 2 * e + 2
        edges.extend([(u, x, f1), (x, y, c), (y, v, f2)])
        color_meaning[f1] = ("fresh",)
        color_meaning[f2] = ("fresh",)
        vertex_meaning[x] = ("subdiv", "edge", e + 1, 1)
        vertex_meaning[y] = ("subdiv", "edge", e + 1, 2)
    literal_edge_map = {
        key: tuple(3 * e + 1 for e in indices)
        for key, indices in a.literal_edge_map.items()
    }
    graph = ColoredGraph(g.n + 2 * g.m, tuple(edges), g.p + 2 * g.m)
    return ReductionArtifact(
        graph,
        ReductionKind.PLANAR_SIMPLE,
        a.formula,
        a.active_clauses,
        literal_edge_map,
        color_meaning,
        vertex_meaning,
    )


# ---------------------------------------------------------------------------
# connected, max degree 3, K4-minor-free form


def _component(adj: dict[int, list[int]], start: int) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def make_k4mf_connected(a: ReductionArtifact) -> ReductionArtifact:
    """Connect the clause gadgets by a binary tree and split every vertex of
    degree four or more into a path.

    The tree has one leaf per gadget (heap-ordered complete binary tree on m
    leaves; a single node when m = 1) attached to the gadget's lowest-index
    maximum-degree vertex; every added edge gets a fresh color.  A vertex of
    degree d >= 4 becomes a path on 2*max(1, d_int - 3) + 1 fresh vertices
    (d_int counts its gadget neighbors): neighbors reached through the same
    original triangle side stay contiguous, path ends adopt two neighbors,
    every other odd path position one, and a tree edge moves to the second
    path vertex.  Path edges carry fresh colors, so in any colorful cut the
    path alternates sides and all attachment points land together, which is
    what keeps the cut correspondence exact.
    """
    if a.kind is not ReductionKind.PLANAR_SIMPLE:
        raise ValueError(f"expected a {ReductionKind.PLANAR_SIMPLE.value} artifact")
    h = a.graph
    m = len(a.active_clauses)
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v, _ in h.edges:
        adj[u].append(v)
        adj[v].append(u)

    attach: list[int] = []
    for j in range(m):
        gadget = _component(adj, 3 * j + 1)
        top = max(len(adj[v]) for v in gadget)
        attach.append(min(v for v in gadget if len(adj[v]) == top))

    # binary tree on m leaves, heap order: nodes 1..2m-1, leaves m..2m-1
    new_pairs: list[tuple[int, int]] = []
    for t in range(1, m):
        new_pairs.append((h.n + t, h.n + 2 * t))
        new_pairs.append((h.n + t, h.n + 2 * t + 1))
    for j in range(m):
        new_pairs.append((attach[j], h.n + m - 1 + j + 1))

    combined: list[tuple[int, int, int]] = list(h.edges)
    color_meaning = dict(a.color_meaning)
    for u, v in new_pairs:
        color = len(color_meaning) + 1
        combined.append((u, v, color))
        color_meaning[color] = ("fresh",)
    n1 = h.n + 2 * m - 1

    vertex_meaning = dict(a.vertex_meaning)
    for t in range(1, 2 * m):
        vertex_meaning[h.n + t] = ("tree", t)

    incident: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for idx, (u, v, _) in enumerate(combined):
        incident[u].append((idx, 0, v))
        incident[v].append((idx, 1, u))

    def far_corner(corner: int, subdiv: int) -> int:
        """The corner at the other end of the 2-subdivision path from `corner`."""
        mid = next(w for w in adj[subdiv] if w != corner)
        return next(w for w in adj[mid] if w != subdiv)

    def block_fill(path: list[int], count: int, from_left: bool) -> list[int]:
        """Attachment vertices for `count` edges at one end of the path: the
        end vertex takes two, then every second vertex inward takes one."""
        if from_left:
            slots = [path[0], path[0]] + [path[i] for i in range(2, len(path), 2)]
        else:
            slots = [path[-1], path[-1]] + [
                path[i] for i in range(len(path) - 3, -1, -2)
            ]
        return slots[:count]

    endpoint_override: dict[tuple[int, int], int] = {}
    extra_pairs: list[tuple[int, int]] = []
    removed: set[int] = set()
    next_id = n1
    for v in sorted(incident):
        items = incident[v]
        if len(items) < 4:
            continue
        # only clause-gadget corners ever exceed degree three
        tree_items = [it for it in items if it[2] > h.n]
        gadget_items = [it for it in items if it[2] <= h.n]
        groups: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
        for it in gadget_items:
            groups[far_corner(v, it[2])].append(it)
        # orient the two bundles around the triangle: the one toward the
        # cyclically next corner goes to the right end of the path, the one
        # toward the previous corner to the left end.  Together with the
        # disjoint attachment blocks this keeps every repaired triangle
        # outerplanar, hence free of K4 minors.
        _, _, t = a.vertex_meaning[v]
        succ = t % 3 + 1
        left_items: list[tuple[int, int, int]] = []
        right_items: list[tuple[int, int, int]] = []
        for corner, grp in sorted(groups.items()):
            if a.vertex_meaning[corner][2] == succ:
                right_items = grp
            else:
                left_items = grp
        left_slots = max(1, len(left_items) - 1) if left_items else 0
        right_slots = max(1, len(right_items) - 1) if right_items else 0
        path_len = 2 * max(1, left_slots + right_slots - 1) + 1
        path = list(range(next_id + 1, next_id + path_len + 1))
        next_id += path_len
        for (idx, side, _), target in zip(
            left_items, block_fill(path, len(left_items), from_left=True)
        ):
            endpoint_override[(idx, side)] = target
        for (idx, side, _), target in zip(
            right_items, block_fill(path, len(right_items), from_left=False)
        ):
            endpoint_override[(idx, side)] = target
        for idx, side, _ in tree_items:
            endpoint_override[(idx, side)] = path[1]
        extra_pairs.extend((path[i], path[i + 1]) for i in range(path_len - 1))
        removed.add(v)
        old = vertex_meaning.pop(v)
        for pos, w in enumerate(path, start=1):
            vertex_meaning[w] = ("subdiv", "corner", old[1], old[2], pos)

    survivors = [v for v in range(1, n1 + 1) if v not in removed]
    survivors.extend(range(n1 + 1, next_id + 1))
    rename = {old: new for new, old in enumerate(survivors, start=1)}

    final_edges: list[tuple[int, int, int]] = []
    for idx, (u, v, c) in enumerate(combined):
        u2 = endpoint_override.get((idx, 0), u)
        v2 = endpoint_override.get((idx, 1), v)
        final_edges.append((rename[u2], rename[v2], c))
    for u, v in extra_pairs:
        color = len(color_meaning) + 1
        color_meaning[color] = ("fresh",)
        final_edges.append((rename[u], rename[v], color))

    graph = ColoredGraph(len(survivors), tuple(final_edges), len(color_meaning))
    return ReductionArtifact(
        graph,
        ReductionKind.K4MF,
        a.formula,
        a.active_clauses,
        {
            key: indices  # middle edges never touch a split vertex
            for key, indices in a.literal_edge_map.items()
        },
        color_meaning,
        {rename[v]: meaning for v, meaning in vertex_meaning.items()},
    )


# ---------------------------------------------------------------------------
# odd-cycle-transversal-number-one form


def make_oct_one(a: ReductionArtifact) -> ReductionArtifact:
    """Merge the lowest-index corner of every triangle into one apex vertex.

    The apex becomes vertex 1; deleting it leaves a bipartite graph.  Edge
    order, colors, and the cut correspondence are unchanged because the merged
    corners can always be flipped onto a common side triangle by triangle.
    """
    if a.kind is not ReductionKind.PLANAR_MULTI:
        raise ValueError(f"expected a {ReductionKind.PLANAR_MULTI.value} artifact")
    g = a.graph
    m = g.n // 3
    designated = {3 * j + 1 for j in range(m)}
    survivors = [v for v in range(1, g.n + 1) if v not in designated]
    rename = {old: new for new, old in enumerate(survivors, start=2)}
    rename.update({v: 1 for v in designated})
    edges = tuple((rename[u], rename[v], c) for u, v, c in g.edges)
    vertex_meaning: dict[int, tuple] = {1: ("apex",)}
    for v in survivors:
        vertex_meaning[rename[v]] = a.vertex_meaning[v]
    graph = ColoredGraph(2 * m + 1, edges, g.p)
    return ReductionArtifact(
        graph,
        ReductionKind.OCT_ONE,
        a.formula,
        a.active_clauses,
        dict(a.literal_edge_map),
        dict(a.color_meaning),
        vertex_meaning,
    )


# ---------------------------------------------------------------------------
# complete-graph form


def embed_complete(g: ColoredGraph) -> ColoredGraph:
    """Add a universal vertex and paint all missing edges with one fresh color.

    The input must be simple.  The new color crosses every maximum colored
    cut (the new vertex always has the whole old graph opposite it), so
    colorful cuts of the output restrict to colorful cuts of g.
    """
    if g.n < 2:
        raise ValueError(f"need at least two vertices, got {g.n}")
    pairs = {frozenset((u, v)) for u, v, _ in g.edges}
    if len(pairs) != g.m:
        raise ValueError("input has parallel edges")
    fresh = g.p + 1
    new_edges = [
        (u, v, fresh)
        for u in range(1, g.n + 2)
        for v in range(u + 1, g.n + 2)
        if frozenset((u, v)) not in pairs
    ]
    return ColoredGraph(g.n + 1, g.edges + tuple(new_edges), fresh)


def embed_complete_artifact(a: ReductionArtifact) -> ReductionArtifact:
    if a.kind is not ReductionKind.PLANAR_SIMPLE:
        raise ValueError(f"expected a {ReductionKind.PLANAR_SIMPLE.value} artifact")
    g = a.graph
    graph = embed_complete(g)
    color_meaning = dict(a.color_meaning)
    color_meaning[g.p + 1] = ("fresh",)
    vertex_meaning = dict(a.vertex_meaning)
    vertex_meaning[g.n + 1] = ("apex",)
    return ReductionArtifact(
        graph,
        ReductionKind.COMPLETE,
        a.formula,
        a.active_clauses,
        dict(a.literal_edge_map),
        color_meaning,
        vertex_meaning,
    )


# ---------------------------------------------------------------------------
# not-all-equal form


def nae_to_cliques(f: CnfFormula) -> ReductionArtifact:
    """Monochromatic clause triangles plus per-variable connector vertices.

    Clause j gets a triangle in color j.  For each occurring variable, a
    fresh-colored star from a_i covers its positive occurrence vertices and
    one from b_i its negative ones; when both polarities occur, one more
    fresh edge bridges the first positive and first negative occurrence.
    Every color class induces a K2 or K3, and colorful cuts are exactly the
    not-all-equal assignments.
    """
    if not f.clauses:
        raise ValueError("formula has no clauses")
    if any(len(cl) != 3 for cl in f.clauses):
        raise ValueError("every clause must have exactly three literals")
    m = len(f.clauses)
    pos, neg = _occurrences(list(f.clauses))
    occurring = sorted(set(pos) | set(neg))

    a_id = {var: 3 * m + 2 * r + 1 for r, var in enumerate(occurring)}
    b_id = {var: 3 * m + 2 * r + 2 for r, var in enumerate(occurring)}
    n = 3 * m + 2 * len(occurring)

    edges: list[tuple[int, int, int]] = []
    color_meaning: dict[int, tuple] = {}
    for j in range(m):
        c1, c2, c3 = 3 * j + 1, 3 * j + 2, 3 * j + 3
        edges.extend([(c1, c2, j + 1), (c1, c3, j + 1), (c2, c3, j + 1)])
        color_meaning[j + 1] = ("clause", j + 1)

    def occ_vertex(occ: tuple[int, int]) -> int:
        j, slot = occ
        return 3 * j + slot

    literal_edge_map: dict[tuple[int, int, bool], tuple[int, ...]] = {}
    fresh = m
    for var in occurring:
        for number, occ in enumerate(pos.get(var, []), start=1):
            fresh += 1
            literal_edge_map[(var, number, True)] = (len(edges),)
            edges.append((a_id[var], occ_vertex(occ), fresh))
            color_meaning[fresh] = ("fresh",)
        for number, occ in enumerate(neg.get(var, []), start=1):
            fresh += 1
            literal_edge_map[(var, number, False)] = (len(edges),)
            edges.append((b_id[var], occ_vertex(occ), fresh))
            color_meaning[fresh] = ("fresh",)
        if pos.get(var) and neg.get(var):
            fresh += 1
            edges.append((occ_vertex(pos[var][0]), occ_vertex(neg[var][0]), fresh))
            color_meaning[fresh] = ("fresh",)

    vertex_meaning: dict[int, tuple] = {}
    for j in range(m):
        for t in (1, 2, 3):
            vertex_meaning[3 * j + t] = ("corner", j + 1, t)
    for var in occurring:
        vertex_meaning[a_id[var]] = ("a", var)
        vertex_meaning[b_id[var]] = ("b", var)

    graph = ColoredGraph(n, tuple(edges), fresh)
    return ReductionArtifact(
        graph,
        ReductionKind.NAE_CLIQUES,
        f,
        tuple(range(m)),
        literal_edge_map,
        color_meaning,
        vertex_meaning,
    )


# ---------------------------------------------------------------------------
# verifiers


def verify_series_parallel(g: ColoredGraph) -> bool:
    """True iff g has no K4 minor, by exhaustive reduction: delete vertices of
    degree at most one, merge parallel edges, smooth degree-two vertices."""
    mult: dict[int, Counter[int]] = {v: Counter() for v in range(1, g.n + 1)}
    for u, v, _ in g.edges:
        if mult[u][v]:
            raise ValueError("input has parallel edges")
        mult[u][v] += 1
        mult[v][u] += 1
    alive = set(range(1, g.n + 1))
    while alive:
        degree = {v: sum(mult[v].values()) for v in alive}
        low = min((v for v in alive if degree[v] <= 1), default=None)
        if low is not None:
            for w in list(mult[low]):
                del mult[w][low]
            mult[low].clear()
            alive.discard(low)
            continue
        parallel = min(
            ((v, w) for v in alive for w, count in mult[v].items() if count >= 2),
            default=None,
        )
        if parallel is not None:
            v, w = parallel
            mult[v][w] = 1
            mult[w][v] = 1
            continue
        mid = min((v for v in alive if degree[v] == 2), default=None)
        if mid is None:
            return False
        x, y = sorted(mult[mid])
        del mult[x][mid]
        del mult[y][mid]
        mult[mid].clear()
        mult[x][y] += 1
        mult[y][x] += 1
        alive.discard(mid)
    return True


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class StructureReport:
    kind: ReductionKind
    items: tuple[CheckItem, ...]

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)


def _nx_multigraph(g: ColoredGraph) -> "nx.MultiGraph":
    out = nx.MultiGraph()
    out.add_nodes_from(range(1, g.n + 1))
    out.add_edges_from((u, v) for u, v, _ in g.edges)
    return out


def _check_connected(g: ColoredGraph) -> CheckItem:
    if g.n == 0:
        return CheckItem("connected", False, "graph has no vertices")
    ok = nx.is_connected(_nx_multigraph(g))
    return CheckItem("connected", ok, "" if ok else "graph is disconnected")


def _check_max_degree(g: ColoredGraph, limit: int) -> CheckItem:
    degree = Counter()
    for u, v, _ in g.edges:
        degree[u] += 1
        degree[v] += 1
    bad = min((v for v, d in degree.items() if d > limit), default=None)
    if bad is None:
        return CheckItem(f"max-degree-{limit}", True)
    return CheckItem(
        f"max-degree-{limit}", False, f"vertex {bad} has degree {degree[bad]}"
    )


def _check_class_sizes(g: ColoredGraph, limit: int, exact: bool) -> CheckItem:
    sizes = Counter(c for _, _, c in g.edges)
    if exact:
        bad = min((c for c in range(1, g.p + 1) if sizes[c] != limit), default=None)
        name = f"color-class-size-{limit}"
    else:
        bad = min((c for c in range(1, g.p + 1) if sizes[c] > limit), default=None)
        name = f"color-class-size-le-{limit}"
    if bad is None:
        return CheckItem(name, True)
    return CheckItem(name, False, f"color {bad} has {sizes[bad]} edges")


def _check_simple(g: ColoredGraph) -> CheckItem:
    seen: set[frozenset[int]] = set()
    for u, v, _ in g.edges:
        pair = frozenset((u, v))
        if pair in seen:
            return CheckItem("simple", False, f"parallel edges between {u} and {v}")
        seen.add(pair)
    return CheckItem("simple", True)


def _check_series_parallel(g: ColoredGraph) -> CheckItem:
    ok = verify_series_parallel(g)
    return CheckItem("series-parallel", ok, "" if ok else "a K4 minor remains")


def _check_apex_bipartite(a: ReductionArtifact) -> CheckItem:
    apexes = [v for v, meaning in a.vertex_meaning.items() if meaning[0] == "apex"]
    if len(apexes) != 1:
        return CheckItem(
            "apex-removal-bipartite", False, f"expected one apex, found {len(apexes)}"
        )
    rest = _nx_multigraph(a.graph)
    rest.remove_node(apexes[0])
    ok = nx.is_bipartite(rest)
    return CheckItem(
        "apex-removal-bipartite", ok, "" if ok else "graph minus apex has an odd cycle"
    )


def _check_complete(g: ColoredGraph) -> CheckItem:
    pairs = {frozenset((u, v)) for u, v, _ in g.edges}
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            if frozenset((u, v)) not in pairs:
                return CheckItem("complete", False, f"missing edge between {u} and {v}")
    return CheckItem("complete", True)


def _check_clique_classes(g: ColoredGraph) -> CheckItem:
    by_color: dict[int, set[frozenset[int]]] = defaultdict(set)
    touched: dict[int, set[int]] = defaultdict(set)
    for u, v, c in g.edges:
        by_color[c].add(frozenset((u, v)))
        touched[c].update((u, v))
    for c in range(1, g.p + 1):
        verts = sorted(touched[c])
        pairs = by_color[c]
        if len(verts) == 2 and len(pairs) == 1:
            continue
        if len(verts) == 3 and pairs == {
            frozenset((verts[0], verts[1])),
            frozenset((verts[0], verts[2])),
            frozenset((verts[1], verts[2])),
        }:
            continue
        return CheckItem(
            "color-class-clique", False, f"color {c} does not induce a K2 or K3"
        )
    return CheckItem("color-class-clique", True)


def verify_structural(a: ReductionArtifact) -> StructureReport:
    """Kind-specific structural checklist for a generated graph."""
    g = a.graph
    if a.kind is ReductionKind.PLANAR_MULTI:
        items = [_check_class_sizes(g, 2, exact=True)]
    elif a.kind is ReductionKind.PLANAR_SIMPLE:
        items = [_check_simple(g), _check_class_sizes(g, 2, exact=False)]
    elif a.kind is ReductionKind.K4MF:
        items = [
            _check_connected(g),
            _check_max_degree(g, 3),
            _check_class_sizes(g, 2, exact=False),
            _check_simple(g),
            _check_series_parallel(g),
        ]
    elif a.kind is ReductionKind.OCT_ONE:
        items = [_check_class_sizes(g, 2, exact=True), _check_apex_bipartite(a)]
    elif a.kind is ReductionKind.COMPLETE:
        items = [_check_complete(g)]
    elif a.kind is ReductionKind.NAE_CLIQUES:
        items = [_check_clique_classes(g)]
    else:  # pragma: no cover
        raise ValueError(f"unknown kind {a.kind}")
    return StructureReport(a.kind, tuple(items))


# ---------------------------------------------------------------------------
# provenance sidecar

_COLOR_TAGS = {"pair", "clause", "fresh"}
_VERTEX_TAGS = {"corner", "a", "b", "tree", "subdiv", "apex"}


def serialize_provenance(a: ReductionArtifact) -> str:
    lines = []
    for c in sorted(a.color_meaning):
        lines.append("color " + str(c) + " " + " ".join(str(x) for x in a.color_meaning[c]))
    for v in sorted(a.vertex_meaning):
        lines.append("vertex " + str(v) + " " + " ".join(str(x) for x in a.vertex_meaning[v]))
    return "\n".join(lines) + "\n"


def parse_provenance(text: str) -> tuple[dict[int, tuple], dict[int, tuple]]:
    """Parse a provenance sidecar into (color_meaning, vertex_meaning)."""
    color_meaning: dict[int, tuple] = {}
    vertex_meaning: dict[int, tuple] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) < 3 or tokens[0] not in ("color", "vertex"):
            raise FormatError(f"line {lineno}: malformed provenance line {raw!r}")
        try:
            ident = int(tokens[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer id in {raw!r}")
        tag = tokens[2]
        args = tuple(int(t) if t.lstrip("-").isdigit() else t for t in tokens[3:])
        if tokens[0] == "color":
            if tag not in _COLOR_TAGS:
                raise FormatError(f"line {lineno}: unknown color tag {tag!r}")
            color_meaning[ident] = (tag, *args)
        else:
            if tag not in _VERTEX_TAGS:
                raise FormatError(f"line {lineno}: unknown vertex tag {tag!r}")
            vertex_meaning[ident] = (tag, *args)
    return color_meaning, vertex_meaning
