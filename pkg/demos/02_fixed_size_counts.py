"""Counting models of a fixed size: strategies and the per-size vector.

The independent sets of a graph are the models of one negative clause per
edge, so their per-size counts (the independence polynomial coefficients)
drop out of the row cover directly.  Size-exactly-k counts can also be
computed by subtracting two bounded counts, by noncover pruning (pure
negative-clause instances with h <= w and k <= w - h), or by
inclusion-exclusion pruning; all agree.
"""

from hornrows import KSpec, count, f_vector, nc, normalize

# independence counts of the 8-cycle
w = 8
cycle = normalize([nc((i, i % w + 1)) for i in range(1, w + 1)], w)
vec = f_vector(cycle)
print(f"independent sets of the {w}-cycle, by size: {vec}")
print(f"total: {sum(vec)}")

# a perfect matching on 8 vertices keeps every strategy applicable
matching = normalize([nc((1, 2)), nc((3, 4)), nc((5, 6)), nc((7, 8))], w)
k = 3
print(f"\nsize-{k} independent sets of a 4-edge matching, per strategy:")
for strategy in ("direct", "difference", "noncover-eq", "ie-eq"):
    report = count(matching, KSpec.eq(k), strategy)
    print(
        f"  {strategy:12} -> {report.n}   "
        f"(rows {report.stats.final_rows}, impositions {report.stats.impositions})"
    )

report = count(cycle, KSpec.ge(2))
print(f"\ncycle independent sets with at least 2 vertices: {report.n}")
