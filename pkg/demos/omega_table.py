"""Print which center sizes are achievable for each radius at a fixed order.

    python demos/omega_table.py 14

A dot marks an achievable size; a dash marks one that no graph reaches.
"""

import sys

from centerset import gap, omega_set

n = int(sys.argv[1]) if len(sys.argv) > 1 else 14

print(f"order {n}")
print("  r | " + "".join(f"{s % 10}" for s in range(1, n + 1)))
print("----+" + "-" * n)
for r in range(1, n // 2 + 1):
    achievable = set(omega_set(n, r))
    row = "".join("." if s in achievable else "-" for s in range(1, n + 1))
    missing = gap(n, r)
    note = f"  gap {missing[0]}..{missing[-1]}" if missing else ""
    print(f"{r:3d} | {row}{note}")

# n - 1 is never a center size: if every vertex but one were central, the
# odd one out would have to be farther from something than the rest.
