"""Cover pebbling numbers via simple-distribution costs.

Delivering one pebble to a node u from a node v costs 2**d(v,u) pebbles, so
covering a goal w from v costs sum_u w(u) * 2**d(v,u). The cover pebbling
number is the maximum of this cost over all start nodes: the worst simple
distribution is the worst distribution overall, so no search is needed.
Closed forms for the standard families are provided alongside for
cross-checking.

Costs use checked 64-bit arithmetic; 2**d outgrows the accumulator on
paths longer than 62, and that is reported, never wrapped.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .distributions import U64_MAX, GoalDistribution, product_goal
from .errors import BadParamsError, CheckedOverflowError, DimensionMismatchError
from .graphs import Graph, cartesian_product, distance_matrix

CLOSED_FORM_KINDS = (
    "path",
    "even_cycle",
    "odd_cycle",
    "hypercube",
    "complete",
    "complete_multipartite",
    "wheel",
)


@dataclass(frozen=True)
class CostProfile:
    """Cover pebbling cost from every start node.

    gamma is the maximum entry (the cover pebbling number); argmax_node is
    the least node id attaining it.
    """

    costs: tuple[int, ...]
    gamma: int
    argmax_node: int


def cost_from(g: Graph, v: int, goal: GoalDistribution | None = None) -> int:
    """Pebbles needed on v alone to cover the goal: sum_u goal(u) * 2**d(v,u)."""
    if goal is None:
        goal = GoalDistribution.ones(g.node_count)
    if len(goal) != g.node_count:
        raise DimensionMismatchError(f"goal covers {len(goal)} nodes, graph has {g.node_count}")
    if not 0 <= v < g.node_count:
        raise BadParamsError(f"node {v} outside 0..{g.node_count - 1}")
    dist = distance_matrix(g)
    row = dist[v]
    total = 0
    for u in range(g.node_count):
        d = int(row[u])
        if d > 63:
            raise CheckedOverflowError(f"cost term at node {u}: 2**{d} exceeds the 64-bit bound")
        term = goal[u] << d
        total += term
        if total > U64_MAX:
            raise CheckedOverflowError(f"cost from {v} overflows the 64-bit bound at node {u}")
    return total


def cost_profile(g: Graph, goal: GoalDistribution | None = None) -> CostProfile:
    """Costs from every node, their maximum, and the least maximizing node id."""
    if goal is None:
        goal = GoalDistribution.ones(g.node_count)
    costs = tuple(cost_from(g, v, goal) for v in range(g.node_count))
    gamma = max(costs)
    return CostProfile(costs=costs, gamma=gamma, argmax_node=costs.index(gamma))


def cover_pebbling_number(g: Graph, goal: GoalDistribution | None = None) -> int:
    """The smallest n such that every distribution of n pebbles can cover the goal.

    Equals the worst simple-distribution cost, max_v cost_from(g, v, goal).
    """
    return cost_profile(g, goal).gamma


def closed_form_cover_number(kind: str, params: int | Sequence[int]) -> int:
    """Tabulated cover pebbling numbers for the standard families (1-goal).

    Parameters follow the classical table: path(n) with n nodes gives
    2**n - 1; even_cycle takes n for the cycle on 2n nodes, 3 * (2**n - 1);
    odd_cycle takes n for the cycle on 2n - 1 nodes, 2**(n+1) - 3;
    hypercube(n) gives 3**n; complete(n) gives 2n - 1; multipartite parts
    n1 >= ... >= nk give 4*n1 + 2*n2 + ... + 2*nk - 3; wheel with n rim
    nodes gives 4n - 5. Note the cycle parameter is not the node count;
    `family()` cycles, by contrast, take node counts.
    """
    if kind == "complete_multipartite":
        sizes = sorted(params if not isinstance(params, int) else [params], reverse=True)
        if not sizes or any(not isinstance(s, int) or s < 1 for s in sizes):
            raise BadParamsError(f"bad multipartite parts {params!r}")
        if len(sizes) == 1 and sizes[0] > 1:
            raise BadParamsError("a single part of size > 1 is disconnected")
        return _checked(4 * sizes[0] + 2 * sum(sizes[1:]) - 3)
    if not isinstance(params, int):
        seq = list(params)
        if len(seq) != 1:
            raise BadParamsError(f"family {kind!r} takes exactly one parameter, got {seq!r}")
        params = seq[0]
    n = params
    if not isinstance(n, int) or isinstance(n, bool):
        raise BadParamsError(f"parameter must be an int, got {type(n).__name__}")
    if kind == "path":
        if n < 1:
            raise BadParamsError(f"path needs n >= 1, got {n}")
        return _checked(2**n - 1)
    if kind == "even_cycle":
        if n < 2:
            raise BadParamsError(f"even_cycle parameter n >= 2 (cycle on 2n nodes), got {n}")
        return _checked(3 * (2**n - 1))
    if kind == "odd_cycle":
        if n < 2:
            raise BadParamsError(f"odd_cycle parameter n >= 2 (cycle on 2n - 1 nodes), got {n}")
        return _checked(2 ** (n + 1) - 3)
    if kind == "hypercube":
        if n < 0:
            raise BadParamsError(f"hypercube needs n >= 0, got {n}")
        return _checked(3**n)
    if kind == "complete":
        if n < 1:
            raise BadParamsError(f"complete needs n >= 1, got {n}")
        return _checked(2 * n - 1)
    if kind == "wheel":
        if n < 3:
            raise BadParamsError(f"wheel needs n >= 3, got {n}")
        return _checked(4 * n - 5)
    raise BadParamsError(f"unknown family kind {kind!r}")


def _checked(value: int) -> int:
    if value > U64_MAX:
        raise CheckedOverflowError(f"closed form value {value} exceeds the 64-bit bound")
    return value


@dataclass(frozen=True)
class ProductLawResult:
    """Both sides of the product identity, plus the materials used to compute it."""

    lhs: int
    rhs: int
    equal: bool
    product_graph: Graph
    goal: GoalDistribution


def product_law_check(
    g1: Graph,
    g2: Graph,
    goal1: GoalDistribution | None = None,
    goal2: GoalDistribution | None = None,
) -> ProductLawResult:
    """Compare the product graph's cover number against the product of the factors'.

    lhs is computed directly on the Cartesian product with the pointwise
    product goal; rhs is the product of the factor cover numbers. The two
    are provably equal for positive goals, so `equal` doubles as a
    self-check of the whole pipeline.
    """
    if goal1 is None:
        goal1 = GoalDistribution.ones(g1.node_count)
    if goal2 is None:
        goal2 = GoalDistribution.ones(g2.node_count)
    pg = cartesian_product(g1, g2)
    pw = product_goal(goal1, goal2)
    lhs = cover_pebbling_number(pg, pw)
    r1 = cover_pebbling_number(g1, goal1)
    r2 = cover_pebbling_number(g2, goal2)
    if r1 * r2 > U64_MAX:
        raise CheckedOverflowError("product of factor cover numbers exceeds the 64-bit bound")
    rhs = r1 * r2
    return ProductLawResult(lhs=lhs, rhs=rhs, equal=lhs == rhs, product_graph=pg, goal=pw)
