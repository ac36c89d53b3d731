"""
Watching a non-coverable distribution collapse
==============================================

Why does concentrating all pebbles on one node describe the worst case?
The collapse procedure makes that concrete. Give every pebble of a
non-coverable distribution the value 1, then repeatedly pick a fat node
f (more pebbles than its demand) and a thin node t (fewer), and sweep a
chain of moves from f to t. Merged pebbles add their values, so value is
never lost, and a pebble arriving over distance d is worth at most 2**d.

When no fat node remains, the last sweeping node f is a witness: the
surviving values show total pebbles < cost_from(f), so the same total
concentrated on f would not cover either.
"""

from coverpebbling import (
    Distribution,
    can_cover,
    collapse_witness,
    cost_from,
    path_graph,
)

g = path_graph(4)
start = Distribution((10, 0, 1, 0))
print(f"graph: path(4), start counts: {tuple(start.counts)} "
      f"(total {start.total})")
print(f"oracle: coverable = {can_cover(g, start).coverable}\n")

report = collapse_witness(g, start)

for k, it in enumerate(report.iterations, start=1):
    f, t = it.pair
    print(f"iteration {k}: fat node {f} sweeps to thin node {t} "
          f"along {it.path}")
    print(f"  arriving pebble value {it.new_pebble_value}, "
          f"fat-node pebble total {it.fat_pebble_total_before} -> "
          f"{it.fat_pebble_total_after}")

final = report.final_distribution
print(f"\nfinal values per node: {[list(vs) for vs in final.values]}")
print(f"total value still {final.total_value} (conserved)")
print(f"audit flags all pass: {report.audit_passed}")

# The witness inequality: cost_from(witness) exceeds the pebble total,
# so this distribution size cannot be forced to cover from anywhere.
w = report.witness
print(f"\nwitness node: {w}")
print(f"cost_from({w}) = {cost_from(g, w)} > {start.total} pebbles")
assert cost_from(g, w) > start.total
