"""Pebble distributions, goal distributions, and the pebbling move.

A move removes two pebbles from a node and puts one on an adjacent node
(along an arc, when directed), so each move costs one pebble. Valued
distributions additionally tag every pebble with the number of original
pebbles merged into it; moves conserve total value, which is the accounting
the collapse procedure runs on.

All counts and values live in the unsigned 64-bit domain with checked
arithmetic: leaving it raises CheckedOverflowError instead of wrapping.
"""

from __future__ import annotations

import enum
from bisect import insort
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import (
    BadParamsError,
    CheckedOverflowError,
    DimensionMismatchError,
    InsufficientPebblesError,
    NotAnEdgeError,
    ValueNotPresentError,
)
from .graphs import Graph

U64_MAX = 2**64 - 1


class NodeStatus(enum.Enum):
    """Trichotomy of a node against the goal: more, fewer, or exactly as demanded."""

    FAT = "fat"
    THIN = "thin"
    PERFECT = "perfect"


def _check_u64(value: int, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise BadParamsError(f"{what} must be an int, got {type(value).__name__}")
    if value > U64_MAX:
        raise CheckedOverflowError(f"{what} {value} exceeds the 64-bit bound")
    return value


@dataclass(frozen=True)
class GoalDistribution:
    """Positive pebble demand per node (how many pebbles each node must end with)."""

    demand: tuple[int, ...]

    def __init__(self, demand: Iterable[int]):
        entries = tuple(demand)
        for w in entries:
            _check_u64(w, "goal entry")
            if w < 1:
                raise BadParamsError(f"goal entries must be >= 1, got {w}")
        if not entries:
            raise BadParamsError("goal must cover at least one node")
        _check_u64(sum(entries), "goal total")
        object.__setattr__(self, "demand", entries)

    @classmethod
    def ones(cls, node_count: int) -> GoalDistribution:
        """The usual cover target: one pebble demanded on every node."""
        return cls((1,) * node_count)

    @property
    def total(self) -> int:
        return sum(self.demand)

    def __len__(self) -> int:
        return len(self.demand)

    def __getitem__(self, v: int) -> int:
        return self.demand[v]


@dataclass(frozen=True)
class Distribution:
    """Non-negative pebble counts per node, with the total cached."""

    counts: tuple[int, ...]
    total: int = field(init=False, compare=False)

    def __init__(self, counts: Iterable[int]):
        entries = tuple(counts)
        for c in entries:
            _check_u64(c, "pebble count")
            if c < 0:
                raise BadParamsError(f"pebble counts must be >= 0, got {c}")
        if not entries:
            raise BadParamsError("distribution must cover at least one node")
        total = _check_u64(sum(entries), "pebble total")
        object.__setattr__(self, "counts", entries)
        object.__setattr__(self, "total", total)

    @classmethod
    def simple(cls, node_count: int, node: int, pebbles: int) -> Distribution:
        """All `pebbles` on one single node."""
        if not 0 <= node < node_count:
            raise BadParamsError(f"node {node} outside 0..{node_count - 1}")
        counts = [0] * node_count
        counts[node] = pebbles
        return cls(counts)

    def is_simple(self) -> bool:
        return sum(1 for c in self.counts if c) <= 1

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]


@dataclass(frozen=True)
class ValuedDistribution:
    """Per-node multisets of pebble values, each multiset kept sorted ascending.

    Sorted storage makes "take a pebble of minimal value" deterministic,
    which the collapse procedure relies on.
    """

    values: tuple[tuple[int, ...], ...]

    def __init__(self, values: Iterable[Iterable[int]]):
        nodes = tuple(tuple(sorted(vs)) for vs in values)
        if not nodes:
            raise BadParamsError("valued distribution must cover at least one node")
        total = 0
        for vs in nodes:
            for value in vs:
                _check_u64(value, "pebble value")
                if value < 1:
                    raise BadParamsError(f"pebble values must be >= 1, got {value}")
                total += value
        _check_u64(total, "total pebble value")
        object.__setattr__(self, "values", nodes)

    @classmethod
    def unit(cls, dist: Distribution) -> ValuedDistribution:
        """Lift plain counts to unit-valued pebbles (value 1 each)."""
        return cls(tuple((1,) * c for c in dist.counts))

    def counts(self) -> Distribution:
        return Distribution(len(vs) for vs in self.values)

    @property
    def total_value(self) -> int:
        return sum(sum(vs) for vs in self.values)

    def __len__(self) -> int:
        return len(self.values)


def _check_dims(n: int, m: int) -> None:
    if n != m:
        raise DimensionMismatchError(f"size {n} does not match size {m}")


def classify(dist: Distribution, goal: GoalDistribution, v: int) -> NodeStatus:
    """Fat, thin, or perfect: count above, below, or equal to the demand at v."""
    _check_dims(len(dist), len(goal))
    c, w = dist[v], goal[v]
    if c > w:
        return NodeStatus.FAT
    if c < w:
        return NodeStatus.THIN
    return NodeStatus.PERFECT


def is_cover(dist: Distribution, goal: GoalDistribution | None = None) -> bool:
    """True iff every node holds at least as many pebbles as the goal demands."""
    if goal is None:
        goal = GoalDistribution.ones(len(dist))
    _check_dims(len(dist), len(goal))
    return all(c >= w for c, w in zip(dist.counts, goal.demand))


def apply_move(dist: Distribution, g: Graph, frm: int, to: int) -> Distribution:
    """Play one pebbling move: two pebbles leave `frm`, one lands on `to`.

    The total strictly decreases by exactly one.
    """
    _check_dims(len(dist), g.node_count)
    if not g.has_edge(frm, to):
        raise NotAnEdgeError(f"({frm},{to}) is not an edge")
    if dist[frm] < 2:
        raise InsufficientPebblesError(f"node {frm} holds {dist[frm]} pebbles, need 2")
    counts = list(dist.counts)
    counts[frm] -= 2
    counts[to] += 1
    return Distribution(counts)


def apply_move_valued(
    vd: ValuedDistribution, g: Graph, frm: int, to: int, parents: tuple[int, int]
) -> ValuedDistribution:
    """Valued move: the two parent values at `frm` merge into one pebble at `to`.

    The newborn pebble's value is the sum of its demised parents, so the
    total value is invariant.
    """
    _check_dims(len(vd), g.node_count)
    if not g.has_edge(frm, to):
        raise NotAnEdgeError(f"({frm},{to}) is not an edge")
    a, b = parents
    source = list(vd.values[frm])
    for p in (a, b):
        try:
            source.remove(p)
        except ValueError:
            raise ValueNotPresentError(f"no pebble of value {p} on node {frm}") from None
    newborn = _check_u64(a + b, "merged pebble value")
    target = list(vd.values[to])
    insort(target, newborn)
    nodes = list(vd.values)
    nodes[frm] = tuple(source)
    nodes[to] = tuple(target)
    return ValuedDistribution(nodes)


def product_goal(w1: GoalDistribution, w2: GoalDistribution) -> GoalDistribution:
    """Goal on a product graph: demand at (v1, v2) is w1(v1) * w2(v2), row-major."""
    out = []
    for a in w1.demand:
        for b in w2.demand:
            out.append(_check_u64(a * b, "product goal entry"))
    return GoalDistribution(out)


def parse_distribution(text: str) -> Distribution:
    """Parse "23,0,0,0,0" (one count per node id, ascending) into a Distribution."""
    return Distribution(_parse_ints(text))


def parse_goal(text: str) -> GoalDistribution:
    """Parse "1,1,2" into a GoalDistribution."""
    return GoalDistribution(_parse_ints(text))


def _parse_ints(text: str) -> list[int]:
    items = [part.strip() for part in text.split(",")]
    if not items or any(not item for item in items):
        raise ValueError(f"malformed count list {text!r}")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ValueError(f"malformed count list {text!r}") from None
