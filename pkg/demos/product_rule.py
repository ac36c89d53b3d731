"""
The cover pebbling number of a product is the product
=====================================================

The cartesian product G1 x G2 places a copy of G2 at every node of G1;
distances add coordinatewise. Goals multiply the same way: the demand
at (a, b) is the product of the factor demands. Under that pairing,

    gamma(G1 x G2) = gamma(G1) * gamma(G2).

This script checks the identity on a grid, a prism, and weighted
factors, then looks at which corner realises the maximum.
"""

from coverpebbling import (
    GoalDistribution,
    cost_profile,
    cycle_graph,
    path_graph,
    product_law_check,
)

# A 2 x 3 grid is the product of two paths. gamma(P2) = 3, gamma(P3) = 7.
check = product_law_check(path_graph(2), path_graph(3))
print(f"grid 2x3: gamma = {check.lhs} = {check.rhs} "
      f"= gamma(P2) * gamma(P3), equal = {check.equal}")

# A triangular prism is K3 x P2.
check = product_law_check(cycle_graph(3), path_graph(2))
print(f"prism:    gamma = {check.lhs} = {check.rhs} "
      f"= gamma(K3) * gamma(P2), equal = {check.equal}")

# Weighted goals multiply entry by entry in row-major order.
w1 = GoalDistribution((2, 1))
w2 = GoalDistribution((1, 3, 1))
check = product_law_check(path_graph(2), path_graph(3), w1, w2)
print(f"weighted: gamma = {check.lhs} = {check.rhs}, "
      f"product goal = {tuple(check.goal.demand)}")

# The worst source of the product is the pair of worst factor sources:
# node (a, b) is encoded a * n2 + b, and costs multiply coordinatewise.
prof1 = cost_profile(path_graph(2), w1)
prof2 = cost_profile(path_graph(3), w2)
prod = cost_profile(check.product_graph, check.goal)
expected = prof1.argmax_node * 3 + prof2.argmax_node
print(f"\nworst sources: {prof1.argmax_node} in P2, {prof2.argmax_node} "
      f"in P3, {prod.argmax_node} in the grid (expected {expected})")
assert prod.argmax_node == expected
assert prod.gamma == prof1.gamma * prof2.gamma
