"""Constructive concentration of a non-coverable distribution onto one node.

The procedure repeatedly picks a closest (fat, thin) node pair and chains a
pebble from the fat node along a minimal path to the thin one, merging with
one resident pebble at every inner node. Inner nodes of such a path are
necessarily perfect (a fat or thin inner node would yield a closer pair),
and value accounting keeps every pebble's value at most the cost from its
nearest fat node. When no fat node is left, the last fat node to act is a
witness: putting all the original pebbles there is still not enough to
cover, which is what makes worst-case analysis of simple distributions
sufficient.

Every step the argument guarantees is asserted at runtime; a failed
assertion raises ProofViolationError and means a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distributions import (
    Distribution,
    GoalDistribution,
    NodeStatus,
    ValuedDistribution,
    apply_move_valued,
    classify,
)
from .errors import DimensionMismatchError, ProofViolationError
from .graphs import Graph, distance_matrix, shortest_path

AUDIT_FLAGS = (
    "efficiency_condition",
    "fat_pebble_total_decreased",
    "inner_nodes_perfect",
    "total_value_conserved",
)


@dataclass(frozen=True)
class ChainMove:
    """Result of one fat-to-thin chain: the new configuration plus its audit trail."""

    distribution: ValuedDistribution
    path: tuple[int, ...]
    arrival_value: int


@dataclass(frozen=True)
class CollapseIteration:
    pair: tuple[int, int]
    path: tuple[int, ...]
    new_pebble_value: int
    fat_pebble_total_before: int
    fat_pebble_total_after: int


@dataclass(frozen=True)
class CollapseReport:
    """Full trace of a collapse run.

    `audit` holds one flag dict per iteration (keys AUDIT_FLAGS), checked
    as the run happened; `witness` is the fat node that survived longest,
    or the least node id if nothing was ever fat.
    """

    witness: int
    iterations: tuple[CollapseIteration, ...]
    final_distribution: ValuedDistribution
    audit: tuple[dict[str, bool], ...]

    @property
    def audit_passed(self) -> bool:
        return all(all(flags.values()) for flags in self.audit)

    def as_dict(self) -> dict:
        """JSON-ready form of the report."""
        return {
            "witness": self.witness,
            "iterations": [
                {
                    "pair": list(it.pair),
                    "path": list(it.path),
                    "new_pebble_value": it.new_pebble_value,
                    "fat_pebble_total_before": it.fat_pebble_total_before,
                    "fat_pebble_total_after": it.fat_pebble_total_after,
                }
                for it in self.iterations
            ],
            "final_distribution": [list(vs) for vs in self.final_distribution.values],
            "audit": [dict(flags) for flags in self.audit],
        }


def _statuses(vd: ValuedDistribution, goal: GoalDistribution) -> tuple[list[int], list[int]]:
    fats, thins = [], []
    for v, vs in enumerate(vd.values):
        c, w = len(vs), goal[v]
        if c > w:
            fats.append(v)
        elif c < w:
            thins.append(v)
    return fats, thins


def _fat_total(vd: ValuedDistribution, goal: GoalDistribution) -> int:
    return sum(len(vs) for v, vs in enumerate(vd.values) if len(vs) > goal[v])


def select_fat_thin_pair(
    g: Graph, vd: ValuedDistribution, goal: GoalDistribution
) -> tuple[int, int] | None:
    """A (fat, thin) pair minimizing d(fat, thin); ties to least fat id, then thin id.

    None when there is no fat node or no thin node.
    """
    if len(vd) != g.node_count or len(goal) != g.node_count:
        raise DimensionMismatchError("graph, configuration, and goal sizes must agree")
    fats, thins = _statuses(vd, goal)
    if not fats or not thins:
        return None
    dist = distance_matrix(g)
    best = None
    for f in fats:
        row = dist[f]
        for t in thins:
            key = (int(row[t]), f, t)
            if best is None or key < best:
                best = key
    return best[1], best[2]


def chain_move(
    g: Graph, vd: ValuedDistribution, goal: GoalDistribution, f: int, t: int
) -> ChainMove:
    """Push one pebble from fat node f along a minimal path to thin node t.

    Two minimal-value pebbles leave f as one pebble on the first path node;
    at every inner node the traveling pebble merges with a resident pebble
    of minimal value and moves on. Net effect: f loses two pebbles, every
    inner node loses one (perfect to thin), t gains one, and the arriving
    value is at most 2**d(f,t).

    Everything the argument guarantees about this step is asserted;
    ProofViolationError signals a bug or a caller-picked pair that the
    selection rule would never produce.
    """
    counts = vd.counts()
    if classify(counts, goal, f) is not NodeStatus.FAT:
        raise ProofViolationError(f"chain source {f} is not fat")
    if classify(counts, goal, t) is not NodeStatus.THIN:
        raise ProofViolationError(f"chain target {t} is not thin")
    path = shortest_path(g, f, t)
    for p in path[1:-1]:
        if classify(counts, goal, p) is not NodeStatus.PERFECT:
            raise ProofViolationError(f"inner path node {p} is not perfect")

    first_two = vd.values[f][:2]
    if first_two[1] > 1:
        raise ProofViolationError(f"pebbles leaving fat node {f} must be unit valued, got {first_two}")
    current = apply_move_valued(vd, g, f, path[1], (first_two[0], first_two[1]))
    moving = first_two[0] + first_two[1]
    for i in range(1, len(path) - 1):
        p, nxt = path[i], path[i + 1]
        resident = vd.values[p][0]  # minimal value present before the chain touched p
        current = apply_move_valued(current, g, p, nxt, (moving, resident))
        moving += resident

    hops = len(path) - 1
    if moving > (1 << hops):
        raise ProofViolationError(
            f"arriving value {moving} exceeds 2**{hops} on path {path}"
        )
    after = current.counts()
    deltas = [after[v] - counts[v] for v in range(g.node_count)]
    expected = [0] * g.node_count
    expected[f] -= 2
    for p in path[1:-1]:
        expected[p] -= 1
    expected[t] += 1
    if deltas != expected:
        raise ProofViolationError(f"chain changed counts by {deltas}, expected {expected}")
    return ChainMove(distribution=current, path=tuple(path), arrival_value=moving)


def efficiency_audit(g: Graph, vd: ValuedDistribution, goal: GoalDistribution) -> bool:
    """Check that every pebble's value is at most the cost from its nearest fat node.

    The cost from f of a pebble on u is 2**d(f,u), so the bound at u is
    2**min_f d(f,u) over fat nodes f. Vacuously true with no fat node.
    On a fat node itself the bound is 1, so surplus pebbles must all be
    unit valued.
    """
    if len(vd) != g.node_count or len(goal) != g.node_count:
        raise DimensionMismatchError("graph, configuration, and goal sizes must agree")
    fats = [v for v, vs in enumerate(vd.values) if len(vs) > goal[v]]
    if not fats:
        return True
    dist = distance_matrix(g)
    for u in range(g.node_count):
        vs = vd.values[u]
        if not vs:
            continue
        nearest = min(int(dist[f][u]) for f in fats)
        if vs[-1] > (1 << nearest):
            return False
    return True


def collapse_witness(
    g: Graph, dist: Distribution, goal: GoalDistribution | None = None
) -> CollapseReport:
    """Run the concentration procedure to completion and report the witness.

    Lifts the distribution to unit values and alternates pair selection and
    chain moves until no fat node remains. For a distribution that cannot
    cover the goal, putting dist.total pebbles on the witness still cannot
    cover it (cost_from(witness) > dist.total); on coverable inputs the run
    still terminates but the witness carries no such guarantee.
    """
    if goal is None:
        goal = GoalDistribution.ones(g.node_count)
    if len(dist) != g.node_count or len(goal) != g.node_count:
        raise DimensionMismatchError("graph, distribution, and goal sizes must agree")
    vd = ValuedDistribution.unit(dist)
    initial_total = dist.total
    iterations: list[CollapseIteration] = []
    audits: list[dict[str, bool]] = []
    started_with_fat = _fat_total(vd, goal) > 0
    last_f = None
    while True:
        pair = select_fat_thin_pair(g, vd, goal)
        if pair is None:
            break
        if len(iterations) >= initial_total // 2:
            # each iteration removes two pebbles from the acting fat node,
            # so more than total/2 iterations is impossible
            raise ProofViolationError("collapse failed to terminate within total/2 iterations")
        f, t = pair
        before = _fat_total(vd, goal)
        step = chain_move(g, vd, goal, f, t)
        vd = step.distribution
        after = _fat_total(vd, goal)
        audits.append(
            {
                "efficiency_condition": efficiency_audit(g, vd, goal),
                "fat_pebble_total_decreased": after < before,
                "inner_nodes_perfect": True,  # asserted inside chain_move
                "total_value_conserved": vd.total_value == initial_total,
            }
        )
        iterations.append(
            CollapseIteration(
                pair=(f, t),
                path=step.path,
                new_pebble_value=step.arrival_value,
                fat_pebble_total_before=before,
                fat_pebble_total_after=after,
            )
        )
        last_f = f
    if last_f is not None:
        witness = last_f
    elif started_with_fat:
        # already a cover with surplus: no pair was ever selected
        witness = next(v for v, vs in enumerate(vd.values) if len(vs) > goal[v])
    else:
        witness = 0  # nothing fat anywhere: any node serves
    return CollapseReport(
        witness=witness,
        iterations=tuple(iterations),
        final_distribution=vd,
        audit=tuple(audits),
    )
