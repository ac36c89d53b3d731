"""Shared fixtures and strategies for the coverpebbling test suite."""

from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import strategies as st

from coverpebbling import Distribution, GoalDistribution, Graph, build_graph

SEED = 20260815

# connected undirected graphs on 1..4 nodes, one per isomorphism class
EXPECTED_REP_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6}


def _connected_undirected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def connected_graph_reps(max_nodes: int = 4) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on <= max_nodes nodes."""
    reps: list[Graph] = []
    for n in range(1, max_nodes + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        seen: set[tuple[tuple[int, int], ...]] = set()
        per_size = 0
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if not _connected_undirected(n, edges):
                continue
            canon = min(
                tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges))
                for p in permutations(range(n))
            )
            if canon in seen:
                continue
            seen.add(canon)
            reps.append(build_graph(n, False, list(canon)))
            per_size += 1
        assert per_size == EXPECTED_REP_COUNTS[n]
    return reps


def random_connected_graph(rng: random.Random, max_nodes: int = 6) -> Graph:
    """A random spanning tree on 1..max_nodes nodes plus random extra edges."""
    n = rng.randint(1, max_nodes)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, False, sorted(edges))


def random_strongly_connected_digraph(rng: random.Random, max_nodes: int = 4) -> Graph:
    """A directed cycle through all nodes plus random extra arcs."""
    n = rng.randint(2, max_nodes)
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            arcs.add((u, v))
    return build_graph(n, True, sorted(arcs))


def random_goal(rng: random.Random, n: int, max_entry: int = 3) -> GoalDistribution:
    return GoalDistribution([rng.randint(1, max_entry) for _ in range(n)])


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Independent all-pairs distance computation for cross-checking."""
    n = g.node_count
    inf = float("inf")
    d = [[0.0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = 1.0
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            row = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < row[j]:
                    row[j] = alt
    return d


# ---------------------------------------------------------------------------
# hypothesis strategies
# ---------------------------------------------------------------------------


@st.composite
def connected_graphs(draw: st.DrawFn, min_nodes: int = 1, max_nodes: int = 6) -> Graph:
    """Random connected undirected graph: random spanning tree plus extra edges."""
    n = draw(st.integers(min_nodes, max_nodes))
    edges: set[tuple[int, int]] = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extras = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=2 * n,
        )
    )
    for u, v in extras:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, False, sorted(edges))


@st.composite
def strongly_connected_digraphs(draw: st.DrawFn, max_nodes: int = 4) -> Graph:
    n = draw(st.integers(2, max_nodes))
    arcs = {(i, (i + 1) % n) for i in range(n)}
    extras = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=2 * n,
        )
    )
    for u, v in extras:
        if u != v:
            arcs.add((u, v))
    return build_graph(n, True, sorted(arcs))


def distributions_on(n: int, max_total: int = 12) -> st.SearchStrategy[Distribution]:
    return st.lists(st.integers(0, max_total), min_size=n, max_size=n).map(Distribution)


def goals_on(n: int, max_entry: int = 3) -> st.SearchStrategy[GoalDistribution]:
    return st.lists(st.integers(1, max_entry), min_size=n, max_size=n).map(GoalDistribution)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(scope="session")
def graph_reps4() -> list[Graph]:
    return connected_graph_reps(4)


@pytest.fixture
def two_branch_digraph() -> Graph:
    """Strongly connected 5-node digraph: a stem from node 4 that forks and loops back.

    Distances from node 4 are 0,1,2,3,3, so the cover cost from it is
    1+2+4+8+8 = 23 under unit demand.
    """
    return build_graph(5, True, [(4, 3), (3, 2), (2, 0), (2, 1), (0, 4), (1, 4)])
