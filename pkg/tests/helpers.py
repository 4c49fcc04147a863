"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's own enumeration code so
that agreement between the two actually means something.
"""

from __future__ import annotations

import itertools
import math
import random

from coloredcut import CnfFormula, ColoredGraph


def oracle_max_cut_colors(g: ColoredGraph) -> int:
    """Maximum number of crossing colors over all bipartitions, by direct
    subset enumeration (vertex 1 fixed on the S side)."""
    best = -1
    rest = list(range(2, g.n + 1))
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            s = {1, *extra}
            if len(s) == g.n:
                continue
            crossing = {c for u, v, c in g.edges if (u in s) != (v in s)}
            best = max(best, len(crossing))
    return best


def oracle_colorful_cut(g: ColoredGraph):
    """Some S side crossing all colors, or None; independent enumeration."""
    rest = list(range(2, g.n + 1))
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            s = {1, *extra}
            if len(s) == g.n:
                continue
            crossing = {c for u, v, c in g.edges if (u in s) != (v in s)}
            if len(crossing) == g.p:
                return frozenset(s)
    return None


def oracle_has_k4_minor(n: int, pairs: list[tuple[int, int]]) -> bool:
    """Brute-force K4 minor search: try every assignment of vertices to four
    branch sets (or none); feasible up to n ~ 7."""
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)

    def connected(vs: set[int]) -> bool:
        start = min(vs)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x] & vs:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    for assign in itertools.product(range(5), repeat=n):
        sets = [set(), set(), set(), set()]
        for v, a in enumerate(assign, start=1):
            if a:
                sets[a - 1].add(v)
        if any(not s for s in sets):
            continue
        if not all(connected(s) for s in sets):
            continue
        if all(
            any(y in adj[x] for x in sets[i] for y in sets[j])
            for i in range(4)
            for j in range(i + 1, 4)
        ):
            return True
    return False


def random_multigraph(
    rng: random.Random, n_max: int = 8, p_max: int = 5, extra_max: int = 12
) -> ColoredGraph:
    """Random edge-colored multigraph; every color in 1..p gets at least one
    edge so the instance is always valid."""
    n = rng.randint(2, n_max)
    p = rng.randint(1, p_max)
    edges = []
    for c in range(1, p + 1):
        u, v = rng.sample(range(1, n + 1), 2)
        edges.append((u, v, c))
    for _ in range(rng.randint(0, extra_max)):
        u, v = rng.sample(range(1, n + 1), 2)
        edges.append((u, v, rng.randint(1, p)))
    return ColoredGraph(n, tuple(edges), p)


def random_simple_graph(
    rng: random.Random, n_max: int = 8, p_max: int = 4
) -> ColoredGraph:
    n = rng.randint(2, n_max)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    take = rng.randint(1, len(pairs))
    p = rng.randint(1, min(p_max, take))
    edges = tuple((u, v, i % p + 1) for i, (u, v) in enumerate(pairs[:take]))
    return ColoredGraph(n, edges, p)


def inflate_one_color(rng: random.Random, g: ColoredGraph) -> ColoredGraph | None:
    """Append a fresh color class with more distinct pairs than the removal
    threshold of the grown graph allows; None when n is too small."""
    p = g.p + 1
    need = 2 * math.comb(p, 2) + 1
    pairs = list(itertools.combinations(range(1, g.n + 1), 2))
    if len(pairs) < need:
        return None
    rng.shuffle(pairs)
    extra = tuple((u, v, p) for u, v in pairs[:need])
    return ColoredGraph(g.n, g.edges + extra, p)


def random_3cnf(
    rng: random.Random, var_count: int, clause_count: int
) -> CnfFormula:
    """Random 3-CNF with three distinct variables per clause."""
    clauses = []
    for _ in range(clause_count):
        vs = rng.sample(range(1, var_count + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(var_count, tuple(clauses))


def all_3var_formulas(max_clauses: int):
    """Every 3-CNF over variables 1,2,3 (slot order fixed, clauses distinct)
    with 1..max_clauses clauses."""
    sign_patterns = list(itertools.product((1, -1), repeat=3))
    clauses = [tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in sign_patterns]
    for m in range(1, max_clauses + 1):
        for combo in itertools.combinations(clauses, m):
            yield CnfFormula(3, combo)


def oracle_sat(f: CnfFormula):
    """Independent satisfiability check by direct product enumeration."""
    for bits in itertools.product((False, True), repeat=f.var_count):
        asg = {v: bits[v - 1] for v in range(1, f.var_count + 1)}
        if all(any(asg[abs(l)] == (l > 0) for l in cl) for cl in f.clauses):
            return asg
    return None


def oracle_nae(f: CnfFormula):
    for bits in itertools.product((False, True), repeat=f.var_count):
        asg = {v: bits[v - 1] for v in range(1, f.var_count + 1)}
        if all(
            any(asg[abs(l)] == (l > 0) for l in cl)
            and any(asg[abs(l)] != (l > 0) for l in cl)
            for cl in f.clauses
        ):
            return asg
    return None
