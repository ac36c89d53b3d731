"""Exhaustive ground truth for cover pebbling on small instances.

Decides coverability of an arbitrary starting distribution by searching the
move graph of count vectors. Every move loses one pebble, so the state
space is a DAG and depth-first search with memoization is exact. This is
deliberately a plain oracle: no bounds, no heuristics, just complete
enumeration guarded by a state budget.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .distributions import Distribution, GoalDistribution
from .errors import BadParamsError, BudgetExceededError, DimensionMismatchError
from .graphs import Graph
from .solver import cost_profile

DEFAULT_MAX_STATES = 1_000_000


@dataclass
class SearchBudget:
    """Cap on distinct states a search may expand; shared across calls if reused."""

    max_states: int = DEFAULT_MAX_STATES
    states_visited: int = 0

    def spend(self) -> None:
        if self.states_visited >= self.max_states:
            raise BudgetExceededError(
                f"search exceeded {self.max_states} states; instance too large, result unknown"
            )
        self.states_visited += 1


@dataclass(frozen=True)
class CoverDecision:
    """Outcome of a coverability search.

    When coverable, witness_moves replayed in order with apply_move turn the
    starting distribution into a cover.
    """

    coverable: bool
    witness_moves: list[tuple[int, int]] | None
    states_visited: int


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` non-negative ints summing to `total`.

    Ordered with the first coordinate descending, so fully concentrated
    distributions (the usual worst cases) come out first.
    """
    if parts < 1:
        raise BadParamsError(f"parts must be >= 1, got {parts}")
    if total < 0:
        raise BadParamsError(f"total must be >= 0, got {total}")
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _check_inputs(g: Graph, dist: Distribution | None, goal: GoalDistribution) -> None:
    if len(goal) != g.node_count:
        raise DimensionMismatchError(f"goal covers {len(goal)} nodes, graph has {g.node_count}")
    if dist is not None and len(dist) != g.node_count:
        raise DimensionMismatchError(f"distribution has {len(dist)} nodes, graph has {g.node_count}")


def _children(state: tuple[int, ...], succ: tuple[tuple[int, ...], ...]) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    # Moves from nodes in ascending id, targets in ascending id: deterministic.
    for f, c in enumerate(state):
        if c >= 2:
            base = list(state)
            base[f] = c - 2
            for t in succ[f]:
                child = base.copy()
                child[t] += 1
                yield f, t, tuple(child)


def can_cover(
    g: Graph,
    dist: Distribution,
    goal: GoalDistribution | None = None,
    budget: SearchBudget | None = None,
) -> CoverDecision:
    """Exact coverability decision with a witness move sequence.

    Depth-first search over reachable distributions; states proven
    non-coverable are memoized (only after their full subtree is explored,
    which is sound because every move strictly shrinks the total). Returns
    the first witness in deterministic move order, or coverable=False after
    exhausting the reachable space. Raises BudgetExceededError when the
    budget runs out, in which case nothing is known.
    """
    if goal is None:
        goal = GoalDistribution.ones(g.node_count)
    _check_inputs(g, dist, goal)
    if budget is None:
        budget = SearchBudget()
    before = budget.states_visited
    w = goal.demand
    succ = g._succ

    def covers(state: tuple[int, ...]) -> bool:
        return all(c >= wi for c, wi in zip(state, w))

    start = dist.counts
    if covers(start):
        return CoverDecision(True, [], budget.states_visited - before)

    failed: set[tuple[int, ...]] = set()
    budget.spend()
    frames: list[tuple[tuple[int, ...], Iterator]] = [(start, _children(start, succ))]
    trail: list[tuple[int, int]] = []
    while frames:
        state, it = frames[-1]
        pushed = False
        for f, t, child in it:
            if child in failed:
                continue
            if covers(child):
                trail.append((f, t))
                return CoverDecision(True, trail, budget.states_visited - before)
            budget.spend()
            frames.append((child, _children(child, succ)))
            trail.append((f, t))
            pushed = True
            break
        if not pushed:
            failed.add(state)
            frames.pop()
            if trail:
                trail.pop()
    return CoverDecision(False, None, budget.states_visited - before)


def _decide(
    start: tuple[int, ...],
    w: tuple[int, ...],
    succ: tuple[tuple[int, ...], ...],
    memo: dict[tuple[int, ...], bool],
    budget: SearchBudget,
) -> bool:
    """Boolean coverability with a caller-owned memo of decided states.

    Coverability of a count vector depends only on the graph and goal, so
    one memo may serve many starting distributions. When a cover is found,
    every state on the DFS stack reaches it and is marked coverable.
    """
    known = memo.get(start)
    if known is not None:
        return known
    if all(c >= wi for c, wi in zip(start, w)):
        memo[start] = True
        return True
    budget.spend()
    frames: list[tuple[tuple[int, ...], Iterator]] = [(start, _children(start, succ))]
    while frames:
        state, it = frames[-1]
        pushed = False
        for _f, _t, child in it:
            known = memo.get(child)
            if known is False:
                continue
            if known is True or all(c >= wi for c, wi in zip(child, w)):
                memo[child] = True
                for s, _ in frames:
                    memo[s] = True
                return True
            budget.spend()
            frames.append((child, _children(child, succ)))
            pushed = True
            break
        if not pushed:
            memo[state] = False
            frames.pop()
    return False


@dataclass(frozen=True)
class BruteForceResult:
    """Cover pebbling number by enumeration, with a tightness certificate.

    `certificate` is one distribution of gamma - 1 pebbles that cannot be
    pebbled into a cover (evidence that gamma is not smaller).
    """

    gamma: int
    certificate: Distribution
    states_visited: int


def brute_force_search(
    g: Graph,
    goal: GoalDistribution | None = None,
    budget: SearchBudget | None = None,
) -> BruteForceResult:
    """Find the cover pebbling number by exhausting every distribution.

    Scans n upward from the goal total (no lighter distribution can cover)
    and returns the first n for which every composition of n pebbles over
    the nodes is coverable. Never consults the cost formula, so it is an
    independent check of it.
    """
    if goal is None:
        goal = GoalDistribution.ones(g.node_count)
    _check_inputs(g, None, goal)
    if budget is None:
        budget = SearchBudget()
    w = goal.demand
    succ = g._succ
    k = g.node_count
    memo: dict[tuple[int, ...], bool] = {}
    n = goal.total
    last_failure: tuple[int, ...] | None = None
    while True:
        failure = None
        for comp in compositions(n, k):
            if not _decide(comp, w, succ, memo, budget):
                failure = comp
                break
        if failure is None:
            if last_failure is None:
                # n == goal total and everything covers; any lighter
                # distribution is short of pebbles, hence a certificate.
                last_failure = (n - 1,) + (0,) * (k - 1)
            return BruteForceResult(n, Distribution(last_failure), budget.states_visited)
        last_failure = failure
        n += 1


def brute_force_cover_number(
    g: Graph,
    goal: GoalDistribution | None = None,
    budget: SearchBudget | None = None,
) -> int:
    """The enumerated cover pebbling number (see brute_force_search)."""
    return brute_force_search(g, goal, budget).gamma


def worst_simple_check(
    g: Graph,
    goal: GoalDistribution | None = None,
    budget: SearchBudget | None = None,
) -> bool:
    """Oracle-verified tightness of the cost formula on one graph.

    True iff gamma - 1 pebbles on the cost-maximizing node cannot cover,
    while gamma pebbles on any single node can.
    """
    if goal is None:
        goal = GoalDistribution.ones(g.node_count)
    _check_inputs(g, None, goal)
    if budget is None:
        budget = SearchBudget()
    profile = cost_profile(g, goal)
    n = g.node_count
    worst = Distribution.simple(n, profile.argmax_node, profile.gamma - 1)
    if can_cover(g, worst, goal, budget).coverable:
        return False
    return all(
        can_cover(g, Distribution.simple(n, v, profile.gamma), goal, budget).coverable
        for v in range(n)
    )
