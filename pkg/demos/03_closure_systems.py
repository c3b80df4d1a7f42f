"""Generating a whole closure system from its implications.

A family of implications describes the closed sets of a closure system:
X is closed iff every premise inside X drags its conclusion in.  Example:
the subsemigroups of Z6 under addition are exactly the models of the
implications {a, b} -> {a+b} (one per unordered pair, self-pairs
included).  The row cover yields them chunk-wise rather than one by one.
"""

from hornrows import collect_rows, count, imp, normalize
from hornrows.oracle import oracle_count

n = 6  # Z6 = {0..5}; variable i+1 stands for element i


def var(element: int) -> int:
    return element % n + 1


constraints = []
for a in range(n):
    for b in range(a, n):
        premise = {var(a), var(b)}
        conclusion = {var(a + b)} - premise
        if conclusion:
            constraints.append(imp(premise, conclusion))

inst = normalize(constraints, n)
rows, stats = collect_rows(inst)

print(f"subsemigroups of (Z{n}, +): {count(inst).n}")
print(f"covered by {stats.final_rows} rows ({stats.impositions} impositions)")
print(f"brute-force cross-check: {oracle_count(inst)}")

print("\nthe subsemigroups, decoded from the rows:")
for r in rows:
    for x in r.members():
        print("  {" + ", ".join(str(v - 1) for v in sorted(x)) + "}")
