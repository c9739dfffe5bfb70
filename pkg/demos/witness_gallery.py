"""Build one witness from each construction family and write DOT files.

    python demos/witness_gallery.py out/
    dot -Tsvg out/g4_15_4_11.dot > g4.svg

Central vertices are filled in gold.
"""

import sys
from pathlib import Path

from centerset import dot_export, metric_profile, validate_witness
from centerset.constructions import g1, g2, g3, g4, g5

out = Path(sys.argv[1] if len(sys.argv) > 1 else "witness_dot")
out.mkdir(parents=True, exist_ok=True)

gallery = {
    "g1_14_4_5": (g1(14, 4, 5), 14, 4, 5),
    "g2_15_4_3": (g2(15, 4, 3), 15, 4, 3),
    "g3_15_4_2": (g3(15, 4, 2), 15, 4, 2),
    "g4_15_4_11": (g4(15, 4, 11), 15, 4, 11),
    "g5_12_4": (g5(12, 4), 12, 4, 12),
}

for name, (g, n, r, s) in gallery.items():
    prof = metric_profile(g)
    status = "ok" if validate_witness(g, n, r, s).ok else "FAILED"
    (out / f"{name}.dot").write_text(dot_export(g, prof.center))
    print(f"{name:12s} n={g.order:2d} m={g.edge_count:2d} radius={prof.radius} "
          f"diameter={prof.diameter} center={list(prof.center)} [{status}]")
