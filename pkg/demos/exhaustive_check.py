"""Compare every labeled graph of small order against the closed form.

    python demos/exhaustive_check.py 7

Order 8 works too (2^28 graphs) but takes a couple of minutes per core.
"""

import sys
import time

from centerset import omega_set
from centerset.search import enumerate_labeled

n = int(sys.argv[1]) if len(sys.argv) > 1 else 7

t0 = time.perf_counter()
summary = enumerate_labeled(n)
elapsed = time.perf_counter() - t0
print(f"{summary.total_graphs} labeled graphs on {n} vertices, "
      f"{summary.connected_graphs} connected ({elapsed:.1f}s)")

for r, row in sorted(summary.table.items()):
    seen = sorted(row)
    expected = omega_set(n, r)
    verdict = "agrees" if seen == expected else f"DIFFERS (formula {expected})"
    counts = ", ".join(f"{s}:{row[s]}" for s in seen)
    print(f"r={r}: sizes {seen} {verdict}")
    print(f"      labeled counts {counts}")
