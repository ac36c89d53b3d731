"""Command-line front end for cover pebbling computations.

Subcommands:

    gamma       cover pebbling number and the per-node cost profile
    coverable   decide whether a distribution can reach a cover (exhaustive)
    collapse    run the concentration procedure and print its full report
    verify      cross-check the enumerated number against the formula
    product     check the product identity on two factor graphs

Graphs come from JSON files ({"nodes": n, "directed": bool, "edges":
[[u,v],...], "goal": [...] optional}) or from --family generators.
Results are JSON on stdout; diagnostics go to stderr. Exit codes:
0 success, 1 negative answer (not coverable / mismatch), 2 usage or
input error, 3 search budget exceeded or arithmetic overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .collapse import collapse_witness
from .distributions import GoalDistribution, parse_distribution, parse_goal
from .errors import BudgetExceededError, CheckedOverflowError, PebblingError
from .graphs import FAMILY_KINDS, Graph, family, graph_to_dict, read_graph_file
from .oracle import DEFAULT_MAX_STATES, SearchBudget, brute_force_cover_number, can_cover
from .solver import cost_profile, cover_pebbling_number, product_law_check

CLI_FAMILIES = FAMILY_KINDS + ("cycle",)


def _add_graph_source(p: argparse.ArgumentParser, tag: str = "") -> None:
    which = f"factor {tag} " if tag else ""
    p.add_argument(
        f"graph{tag}",
        nargs="?",
        metavar=f"GRAPH{tag}",
        help=f"path to a JSON {which}graph file",
    )
    p.add_argument(
        f"--family{tag}",
        choices=CLI_FAMILIES,
        help=f"generate the {which}graph from a named family instead of a file",
    )
    p.add_argument(
        f"--n{tag}",
        type=int,
        help="family size parameter (node count; dimension for hypercube, rim size for wheel)",
    )
    p.add_argument(
        f"--parts{tag}",
        help="comma-separated part sizes, for --family complete_multipartite",
    )
    p.add_argument(
        f"--goal{tag}",
        help=f"comma-separated demand per {which}node (default: 1 everywhere)",
    )


def _parse_part_sizes(text: str) -> list[int]:
    try:
        return [int(item.strip()) for item in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed part sizes {text!r}") from None


def _resolve_graph(args: argparse.Namespace, tag: str = "") -> tuple[Graph, GoalDistribution]:
    """Build the graph and goal a subcommand should work on.

    Goal precedence: --goal flag, then the file's "goal" field, then all ones.
    """
    path = getattr(args, f"graph{tag}")
    kind = getattr(args, f"family{tag}")
    n = getattr(args, f"n{tag}")
    parts = getattr(args, f"parts{tag}")
    goal_text = getattr(args, f"goal{tag}")

    file_goal = None
    if kind is not None:
        if path is not None:
            raise ValueError(f"give a graph{tag} file or --family{tag}, not both")
        if kind == "complete_multipartite":
            if parts is None:
                raise ValueError(f"--parts{tag} is required for complete_multipartite")
            g = family(kind, _parse_part_sizes(parts))
        else:
            if n is None:
                raise ValueError(f"--n{tag} is required for family {kind!r}")
            g = family(kind, n)
    elif path is not None:
        g, file_goal = read_graph_file(path)
    else:
        raise ValueError(f"a graph{tag} file or --family{tag} is required")

    if goal_text is not None:
        goal = parse_goal(goal_text)
    elif file_goal is not None:
        goal = GoalDistribution(file_goal)
    else:
        goal = GoalDistribution.ones(g.node_count)
    return g, goal


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_gamma(args: argparse.Namespace) -> int:
    g, goal = _resolve_graph(args)
    prof = cost_profile(g, goal)
    _emit({"gamma": prof.gamma, "argmax_node": prof.argmax_node, "costs": list(prof.costs)})
    return 0


def _cmd_coverable(args: argparse.Namespace) -> int:
    g, goal = _resolve_graph(args)
    dist = parse_distribution(args.dist)
    decision = can_cover(g, dist, goal, SearchBudget(max_states=args.max_states))
    if decision.coverable:
        _emit(
            {
                "coverable": True,
                "witness_moves": [list(move) for move in decision.witness_moves],
                "states_visited": decision.states_visited,
            }
        )
        return 0
    _emit({"coverable": False, "states_visited": decision.states_visited})
    return 1


def _cmd_collapse(args: argparse.Namespace) -> int:
    g, goal = _resolve_graph(args)
    dist = parse_distribution(args.dist)
    _emit(collapse_witness(g, dist, goal).as_dict())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g, goal = _resolve_graph(args)
    brute = brute_force_cover_number(g, goal, SearchBudget(max_states=args.max_states))
    formula = cover_pebbling_number(g, goal)
    match = brute == formula
    _emit({"brute": brute, "formula": formula, "match": match})
    return 0 if match else 1


def _cmd_product(args: argparse.Namespace) -> int:
    g1, goal1 = _resolve_graph(args, "1")
    g2, goal2 = _resolve_graph(args, "2")
    res = product_law_check(g1, g2, goal1, goal2)
    _emit(
        {
            "graph": graph_to_dict(res.product_graph, goal=res.goal.demand),
            "goal": list(res.goal.demand),
            "lhs": res.lhs,
            "rhs": res.rhs,
            "match": res.equal,
        }
    )
    return 0 if res.equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverpebble",
        description="Cover pebbling numbers, coverability search, and the concentration procedure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="cover pebbling number and per-node costs")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("coverable", help="decide whether a distribution can reach a cover")
    _add_graph_source(p)
    p.add_argument("--dist", required=True, help="comma-separated pebble counts per node")
    p.add_argument(
        "--max-states",
        type=int,
        default=DEFAULT_MAX_STATES,
        help="search budget in distinct states (default %(default)s)",
    )
    p.set_defaults(func=_cmd_coverable)

    p = sub.add_parser("collapse", help="run the concentration procedure and report the witness")
    _add_graph_source(p)
    p.add_argument("--dist", required=True, help="comma-separated pebble counts per node")
    p.set_defaults(func=_cmd_collapse)

    p = sub.add_parser("verify", help="cross-check the enumerated cover number against the formula")
    _add_graph_source(p)
    p.add_argument(
        "--max-states",
        type=int,
        default=DEFAULT_MAX_STATES,
        help="search budget in distinct states (default %(default)s)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("product", help="check the product identity on two factor graphs")
    _add_graph_source(p, "1")
    _add_graph_source(p, "2")
    p.set_defaults(func=_cmd_product)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, CheckedOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PebblingError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
