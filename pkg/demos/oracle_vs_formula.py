"""
Brute force search against the closed formula
=============================================

The cover pebbling number has a short formula: concentrate all pebbles
on the most expensive source node v and charge 2 ** d(v, u) per unit of
demand at u. The oracle module ignores the formula and simply plays the
game: it enumerates every distribution of a given size and searches the
move graph for a covering sequence.

This script runs both on a few small graphs and shows they agree, then
inspects the certificate the search produces.
"""

from coverpebbling import (
    Distribution,
    brute_force_search,
    build_graph,
    can_cover,
    complete_graph,
    cost_profile,
    cover_pebbling_number,
    cycle_graph,
    path_graph,
)

for name, g in [
    ("path(3)", path_graph(3)),
    ("cycle(5)", cycle_graph(5)),
    ("complete(4)", complete_graph(4)),
]:
    result = brute_force_search(g)
    formula = cover_pebbling_number(g)
    print(f"{name:<14} brute={result.gamma:<4} formula={formula:<4} "
          f"states visited={result.states_visited}")
    assert result.gamma == formula

# The search returns a certificate: a distribution with gamma - 1
# pebbles that no play can turn into a cover. For path(3) that is all
# six pebbles stacked on one end.
g = path_graph(3)
result = brute_force_search(g)
cert = result.certificate
print(f"\npath(3) certificate: {tuple(cert.counts)} "
      f"(total {cert.total} = gamma - 1)")
print(f"oracle says coverable: {can_cover(g, cert).coverable}")

# One more pebble in the right place flips the answer, and the oracle
# hands back the exact move sequence as (from, to) pairs.
full = Distribution((7, 0, 0))
verdict = can_cover(g, full)
print(f"with 7 pebbles on the end: coverable={verdict.coverable}, "
      f"moves={verdict.witness_moves}")

# Everything above also holds on directed graphs, as long as every node
# can reach every other. Here the two-branch digraph needs 23 pebbles
# on node 4 but 31 on node 0, and gamma is the worse of the two.
digraph = build_graph(
    5, True, [(4, 3), (3, 2), (2, 0), (2, 1), (0, 4), (1, 4)]
)
print(f"\ndigraph cover costs per source: {cost_profile(digraph).costs}")
print(f"digraph gamma: {cover_pebbling_number(digraph)}")
print(f"digraph brute force: {brute_force_search(digraph).gamma}")
