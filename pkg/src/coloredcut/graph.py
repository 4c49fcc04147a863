"""Edge-colored multigraph model, cut evaluation, and the ECG text format.

An edge-colored graph is an undirected multigraph on vertices 1..n whose
edges each carry one color from 1..p.  Every color must be "live" (appear
on at least one edge), so p == 0 exactly when there are no edges.  Parallel
edges are allowed, self-loops are not.

ECG text format::

    c optional comment lines before the header
    p ecg <n> <m> <p>
    e <u> <v> <color>     (exactly m such lines)

A cut file is a single line ``s <v1> <v2> ... <vk>`` listing the S-side
vertices in increasing order; both sides must be nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FormatError

Edge = tuple[int, int, int]  # (u, v, color)


@dataclass(frozen=True)
class ColoredGraph:
    """Undirected edge-colored multigraph on vertices 1..n with colors 1..p."""

    n: int
    edges: tuple[Edge, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edges", tuple((int(u), int(v), int(c)) for u, v, c in self.edges)
        )
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if self.p < 0:
            raise ValueError(f"color count must be nonnegative, got {self.p}")
        seen_colors: set[int] = set()
        for u, v, c in self.edges:
            if not (1 <= u <= self.n) or not (1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= c <= self.p):
                raise ValueError(f"edge ({u},{v}) has color {c} outside 1..{self.p}")
            seen_colors.add(c)
        if len(seen_colors) != self.p:
            dead = sorted(set(range(1, self.p + 1)) - seen_colors)
            raise ValueError(f"colors {dead} are declared but appear on no edge")

    @property
    def m(self) -> int:
        return len(self.edges)

    def edges_of_color(self, color: int) -> list[int]:
        """Indices (0-based, file order) of the edges carrying `color`."""
        if not (1 <= color <= self.p):
            raise ValueError(f"color {color} outside 1..{self.p}")
        return [i for i, (_, _, c) in enumerate(self.edges) if c == color]


@dataclass(frozen=True)
class Cut:
    """A nontrivial bipartition of 1..n, stored as the S side."""

    n: int
    s_side: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s_side", frozenset(self.s_side))
        if not self.s_side:
            raise ValueError("cut is trivial: S side is empty")
        if any(not (1 <= v <= self.n) for v in self.s_side):
            raise ValueError(f"cut contains vertices outside 1..{self.n}")
        if len(self.s_side) == self.n:
            raise ValueError("cut is trivial: T side is empty")

    @property
    def t_side(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.s_side

    def crosses(self, u: int, v: int) -> bool:
        return (u in self.s_side) != (v in self.s_side)

    def complement(self) -> "Cut":
        return Cut(self.n, self.t_side)


# ---------------------------------------------------------------------------
# cut evaluation


def cut_edges(g: ColoredGraph, cut: Cut) -> list[int]:
    """Indices (0-based, file order) of the edges crossing the cut."""
    if cut.n != g.n:
        raise ValueError(f"cut is over 1..{cut.n} but graph has {g.n} vertices")
    return [i for i, (u, v, _) in enumerate(g.edges) if cut.crosses(u, v)]


def cut_colors(g: ColoredGraph, cut: Cut) -> frozenset[int]:
    """The set of colors appearing on at least one crossing edge."""
    if cut.n != g.n:
        raise ValueError(f"cut is over 1..{cut.n} but graph has {g.n} vertices")
    return frozenset(c for u, v, c in g.edges if cut.crosses(u, v))


def is_colorful(g: ColoredGraph, cut: Cut) -> bool:
    """True iff every one of the p colors crosses the cut."""
    return len(cut_colors(g, cut)) == g.p


def color_span(g: ColoredGraph, color: int) -> int:
    """Number of connected components of the subgraph formed by one color class.

    Only vertices touched by edges of that color count; isolated vertices of
    the host graph are ignored.
    """
    indices = g.edges_of_color(color)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in indices:
        u, v, _ = g.edges[i]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in parent})


def distinct_pairs_of_color(g: ColoredGraph, color: int) -> int:
    """Number of distinct endpoint pairs {u,v} carrying an edge of `color`."""
    indices = g.edges_of_color(color)
    return len({frozenset((g.edges[i][0], g.edges[i][1])) for i in indices})


def dedupe_edges(g: ColoredGraph) -> ColoredGraph:
    """Drop exact duplicates: later edges with the same endpoints and color.

    Endpoint order is ignored, so (u,v,c) and (v,u,c) are duplicates.  Edge
    order of the survivors is preserved.
    """
    seen: set[tuple[frozenset[int], int]] = set()
    kept: list[Edge] = []
    for u, v, c in g.edges:
        key = (frozenset((u, v)), c)
        if key not in seen:
            seen.add(key)
            kept.append((u, v, c))
    if len(kept) == len(g.edges):
        return g
    return ColoredGraph(g.n, tuple(kept), g.p)


# ---------------------------------------------------------------------------
# ECG text format


def parse_graph(text: str) -> ColoredGraph:
    """Parse the ECG format.  Raises FormatError naming the offending line."""
    lines = text.splitlines()
    header: list[str] | None = None
    header_lineno = 0
    edges: list[Edge] = []
    n = m = p = 0
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if header is None:
            if tokens[0] == "c":
                continue
            if tokens[0] != "p":
                raise FormatError(f"line {lineno}: expected comment or header, got {raw!r}")
            if len(tokens) != 5 or tokens[1] != "ecg":
                raise FormatError(f"line {lineno}: malformed header {raw!r}")
            try:
                n, m, p = int(tokens[2]), int(tokens[3]), int(tokens[4])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer field in header {raw!r}")
            if n < 0 or m < 0 or p < 0:
                raise FormatError(f"line {lineno}: negative count in header {raw!r}")
            header = tokens
            header_lineno = lineno
            continue
        if tokens[0] != "e":
            raise FormatError(f"line {lineno}: expected edge line, got {raw!r}")
        if len(edges) >= m:
            raise FormatError(f"line {lineno}: more than the {m} edges declared in the header")
        if len(tokens) != 4:
            raise FormatError(f"line {lineno}: malformed edge line {raw!r}")
        try:
            u, v, c = int(tokens[1]), int(tokens[2]), int(tokens[3])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in edge line {raw!r}")
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise FormatError(f"line {lineno}: vertex outside 1..{n}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= c <= p):
            raise FormatError(f"line {lineno}: color {c} outside 1..{p}")
        edges.append((u, v, c))
    if header is None:
        raise FormatError("line 1: missing 'p ecg' header")
    if len(edges) != m:
        raise FormatError(
            f"line {header_lineno}: header declares {m} edges but file has {len(edges)}"
        )
    present = {c for _, _, c in edges}
    if len(present) != p:
        dead = sorted(set(range(1, p + 1)) - present)
        raise FormatError(
            f"line {header_lineno}: colors {dead} are declared but appear on no edge"
        )
    return ColoredGraph(n, tuple(edges), p)


def serialize_graph(g: ColoredGraph) -> str:
    out = [f"p ecg {g.n} {g.m} {g.p}"]
    out.extend(f"e {u} {v} {c}" for u, v, c in g.edges)
    return "\n".join(out) + "\n"


def parse_cut(text: str, n: int) -> Cut:
    """Parse a cut file ('s <v1> ... <vk>', increasing) for a graph on n vertices."""
    lines = [ln for ln in text.splitlines() if ln.split()]
    if len(lines) != 1:
        raise FormatError(f"cut file must contain exactly one 's' line, got {len(lines)}")
    tokens = lines[0].split()
    if tokens[0] != "s" or len(tokens) < 2:
        raise FormatError(f"line 1: malformed cut line {lines[0]!r}")
    try:
        verts = [int(t) for t in tokens[1:]]
    except ValueError:
        raise FormatError(f"line 1: non-integer vertex in cut line {lines[0]!r}")
    if any(a >= b for a, b in zip(verts, verts[1:])):
        raise FormatError("line 1: cut vertices must be strictly increasing")
    if any(not (1 <= v <= n) for v in verts):
        raise FormatError(f"line 1: cut vertex outside 1..{n}")
    if len(verts) >= n:
        raise FormatError("line 1: cut lists every vertex, T side would be empty")
    return Cut(n, frozenset(verts))


def serialize_cut(cut: Cut) -> str:
    return "s " + " ".join(str(v) for v in sorted(cut.s_side)) + "\n"
