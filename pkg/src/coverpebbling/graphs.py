"""Graph representation, BFS distances, Cartesian products, and family generators.

Graphs are finite, connected, and live on dense integer node ids
0..node_count-1. Undirected graphs are stored as symmetric sets of ordered
pairs so that every algorithm walks directed arcs through a single code
path. Directed graphs must be strongly connected (otherwise some distances,
and hence cover pebbling costs, would be infinite).
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Sequence

import numpy as np

from .errors import (
    BadParamsError,
    InvalidEdgeError,
    MixedDirectednessError,
    NotConnectedError,
)

MAX_NODES = 2**20

FAMILY_KINDS = (
    "path",
    "even_cycle",
    "odd_cycle",
    "hypercube",
    "complete",
    "complete_multipartite",
    "wheel",
)


class Graph:
    """Immutable connected graph (directed or undirected).

    `edges` is a frozenset of ordered pairs; for undirected graphs it is
    symmetric. Neighbor lists are precomputed in ascending node-id order,
    which makes every traversal in this package deterministic. Instances
    never mutate after construction and are safe to share across threads.
    """

    __slots__ = ("node_count", "directed", "edges", "_succ", "_pred", "_dist")

    def __init__(self, node_count: int, directed: bool, edges: Sequence[tuple[int, int]]):
        if not isinstance(node_count, int) or isinstance(node_count, bool):
            raise BadParamsError(f"node_count must be an int, got {type(node_count).__name__}")
        if node_count < 1:
            raise BadParamsError(f"node_count must be >= 1, got {node_count}")
        if node_count > MAX_NODES:
            raise BadParamsError(f"node_count {node_count} exceeds the cap {MAX_NODES}")

        arc_set: set[tuple[int, int]] = set()
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = e
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InvalidEdgeError(f"edge ({u},{v}) has an endpoint outside 0..{node_count - 1}")
            if u == v:
                raise InvalidEdgeError(f"self-loop ({u},{v}) is not allowed")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise InvalidEdgeError(f"duplicate edge ({u},{v})")
            seen.add(key)
            arc_set.add((u, v))
            if not directed:
                arc_set.add((v, u))

        succ: list[list[int]] = [[] for _ in range(node_count)]
        pred: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in arc_set:
            succ[u].append(v)
            pred[v].append(u)

        self.node_count = node_count
        self.directed = bool(directed)
        self.edges = frozenset(arc_set)
        self._succ = tuple(tuple(sorted(ns)) for ns in succ)
        self._pred = tuple(tuple(sorted(ns)) for ns in pred)
        self._dist = None

        if not _reaches_all(self._succ, node_count):
            raise NotConnectedError("every node must be reachable from node 0")
        if self.directed and not _reaches_all(self._pred, node_count):
            raise NotConnectedError("directed graphs must be strongly connected")

    # The graph is conceptually frozen; __slots__ plus convention keeps it so.

    @property
    def edge_count(self) -> int:
        """Number of edges, counting each undirected edge once."""
        return len(self.edges) if self.directed else len(self.edges) // 2

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.directed == other.directed
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.node_count, self.directed, self.edges))

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({self.node_count} nodes, {self.edge_count} edges, {kind})"


def _reaches_all(adj: tuple[tuple[int, ...], ...], n: int) -> bool:
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == n


def build_graph(node_count: int, directed: bool, edges: Sequence[tuple[int, int]]) -> Graph:
    """Validate and build a Graph; the canonical constructor.

    Raises InvalidEdgeError for bad endpoints, self-loops, or duplicates,
    and NotConnectedError when the graph is not (strongly) connected.
    """
    return Graph(node_count, directed, edges)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances d[v, u] by BFS from every source.

    Returns a read-only int64 array of shape (n, n). Entry d[v, u] is the
    length of a minimal path from v to u; all entries are finite because
    connectivity is enforced at construction. The matrix is computed once
    per graph and cached.
    """
    if g._dist is not None:
        return g._dist
    n = g.node_count
    d = np.zeros((n, n), dtype=np.int64)
    succ = g._succ
    for src in range(n):
        row = d[src]
        seen = bytearray(n)
        seen[src] = 1
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u]
            for v in succ[u]:
                if not seen[v]:
                    seen[v] = 1
                    row[v] = du + 1
                    queue.append(v)
    d.setflags(write=False)
    g._dist = d
    return d


def shortest_path(g: Graph, start: int, goal: int) -> list[int]:
    """One minimal-length path from start to goal, as a node list.

    Deterministic: breadth-first search expanding neighbors in ascending
    node-id order, so among equal-length paths the one discovered through
    the lowest-numbered nodes wins.
    """
    n = g.node_count
    if not (0 <= start < n and 0 <= goal < n):
        raise BadParamsError(f"path endpoints ({start},{goal}) outside 0..{n - 1}")
    if start == goal:
        return [start]
    parent = [-1] * n
    parent[start] = start
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g._succ[u]:
            if parent[v] < 0:
                parent[v] = u
                if v == goal:
                    path = [v]
                    while v != start:
                        v = parent[v]
                        path.append(v)
                    path.reverse()
                    return path
                queue.append(v)
    raise NotConnectedError(f"no path from {start} to {goal}")  # unreachable on valid graphs


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product: nodes are pairs, edges change one coordinate.

    Node (a, b) is encoded row-major as a * g2.node_count + b. There is an
    edge (u1,u2)->(v1,v2) iff u1 == v1 and u2->v2 in g2, or u2 == v2 and
    u1->v1 in g1. Connectivity of the factors carries over.
    """
    if g1.directed != g2.directed:
        raise MixedDirectednessError("product factors must agree on directedness")
    n1, n2 = g1.node_count, g2.node_count
    if n1 * n2 > MAX_NODES:
        raise BadParamsError(f"product size {n1 * n2} exceeds the cap {MAX_NODES}")
    edges: list[tuple[int, int]] = []
    for a in range(n1):
        base = a * n2
        for u2, v2 in _one_per_edge(g2):
            edges.append((base + u2, base + v2))
    for u1, v1 in _one_per_edge(g1):
        for b in range(n2):
            edges.append((u1 * n2 + b, v1 * n2 + b))
    return Graph(n1 * n2, g1.directed, edges)


def _one_per_edge(g: Graph) -> list[tuple[int, int]]:
    """Edges listed once each: ordered pairs if directed, else (u,v) with u < v."""
    if g.directed:
        return sorted(g.edges)
    return sorted((u, v) for u, v in g.edges if u < v)


# ---------------------------------------------------------------------------
# Family generators
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    """Path on n nodes (n >= 1); n = 1 is the single node K_1."""
    _check_int("n", n, minimum=1)
    return Graph(n, False, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle on n nodes, n >= 3, either parity."""
    _check_int("n", n, minimum=3)
    return Graph(n, False, [(i, (i + 1) % n) for i in range(n)])


def hypercube_graph(dim: int) -> Graph:
    """dim-dimensional hypercube: 2**dim nodes, edges flip one bit (dim >= 0)."""
    _check_int("dim", dim, minimum=0)
    if dim > 20:
        raise BadParamsError(f"hypercube dimension {dim} exceeds the node cap")
    n = 1 << dim
    edges = []
    for x in range(n):
        for b in range(dim):
            if not x & (1 << b):
                edges.append((x, x | (1 << b)))
    return Graph(n, False, edges)


def complete_graph(n: int) -> Graph:
    """Complete graph K_n (n >= 1)."""
    _check_int("n", n, minimum=1)
    return Graph(n, False, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite_graph(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Parts may be given in any order (they are sorted descending internally,
    so isomorphic inputs build the same graph). A single part is only
    connected when its size is 1.
    """
    sizes = _normalize_parts(parts)
    n = sum(sizes)
    bounds = []
    offset = 0
    for s in sizes:
        bounds.append((offset, offset + s))
        offset += s
    edges = []
    for i, (lo1, hi1) in enumerate(bounds):
        for lo2, hi2 in bounds[i + 1 :]:
            for u in range(lo1, hi1):
                for v in range(lo2, hi2):
                    edges.append((u, v))
    return Graph(n, False, edges)


def _normalize_parts(parts: Sequence[int]) -> list[int]:
    sizes = list(parts)
    if not sizes:
        raise BadParamsError("multipartite graph needs at least one part")
    for s in sizes:
        if not isinstance(s, int) or isinstance(s, bool) or s < 1:
            raise BadParamsError(f"part sizes must be integers >= 1, got {s!r}")
    sizes.sort(reverse=True)
    if len(sizes) == 1 and sizes[0] > 1:
        raise BadParamsError("a single part of size > 1 has no edges and is disconnected")
    return sizes


def wheel_graph(n: int) -> Graph:
    """Wheel with n rim nodes (a cycle) plus one hub, n + 1 nodes total (n >= 3)."""
    _check_int("n", n, minimum=3)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph(n + 1, False, edges)


def _check_int(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise BadParamsError(f"{name} must be an int, got {type(value).__name__}")
    if value < minimum:
        raise BadParamsError(f"{name} must be >= {minimum}, got {value}")


def family(kind: str, params: int | Sequence[int]) -> Graph:
    """Build a graph from one of the standard families by name.

    Kinds: path, even_cycle, odd_cycle, hypercube, complete,
    complete_multipartite, wheel. The extra kind "cycle" accepts any node
    count >= 3 and dispatches on parity (for callers that think in node
    counts). Cycle parameters are node counts; path(n) has n nodes;
    hypercube(n) has 2**n nodes; wheel(n) has n rim nodes plus a hub.
    """
    if kind == "complete_multipartite":
        if isinstance(params, int):
            params = [params]
        return complete_multipartite_graph(params)
    if not isinstance(params, int):
        seq = list(params)
        if len(seq) != 1:
            raise BadParamsError(f"family {kind!r} takes exactly one parameter, got {seq!r}")
        params = seq[0]
    n = params
    if kind == "path":
        return path_graph(n)
    if kind == "even_cycle":
        _check_int("n", n, minimum=3)
        if n % 2:
            raise BadParamsError(f"even_cycle needs an even node count, got {n}")
        return cycle_graph(n)
    if kind == "odd_cycle":
        _check_int("n", n, minimum=3)
        if n % 2 == 0:
            raise BadParamsError(f"odd_cycle needs an odd node count, got {n}")
        return cycle_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "hypercube":
        return hypercube_graph(n)
    if kind == "complete":
        return complete_graph(n)
    if kind == "wheel":
        return wheel_graph(n)
    raise BadParamsError(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------------------
# JSON graph files
# ---------------------------------------------------------------------------
# Format: {"nodes": int, "directed": bool, "edges": [[u, v], ...],
#          "goal": [w_0, ..., w_{n-1}]}  with "goal" optional
# (a missing goal means one pebble demanded everywhere).


def graph_to_dict(g: Graph, goal: Sequence[int] | None = None) -> dict:
    """JSON-ready dict for a graph, with each undirected edge listed once."""
    doc: dict = {
        "nodes": g.node_count,
        "directed": g.directed,
        "edges": [[u, v] for u, v in _one_per_edge(g)],
    }
    if goal is not None:
        doc["goal"] = list(goal)
    return doc


def graph_from_dict(doc: dict) -> tuple[Graph, list[int] | None]:
    """Parse the JSON graph format; returns (graph, goal-or-None)."""
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    try:
        nodes = doc["nodes"]
        directed = doc["directed"]
        raw_edges = doc["edges"]
    except KeyError as exc:
        raise ValueError(f"graph document missing key {exc.args[0]!r}") from None
    if not isinstance(directed, bool):
        raise ValueError('"directed" must be a boolean')
    if not isinstance(raw_edges, list):
        raise ValueError('"edges" must be a list of [u, v] pairs')
    edges = []
    for e in raw_edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ValueError(f"malformed edge entry {e!r}")
        edges.append((e[0], e[1]))
    g = Graph(nodes, directed, edges)
    goal = doc.get("goal")
    if goal is not None:
        if not isinstance(goal, list) or not all(isinstance(x, int) for x in goal):
            raise ValueError('"goal" must be a list of integers')
        if len(goal) != g.node_count:
            raise ValueError('"goal" must list one demand per node')
    return g, goal


def read_graph_file(path: str) -> tuple[Graph, list[int] | None]:
    """Load a graph (and optional goal) from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return graph_from_dict(doc)
