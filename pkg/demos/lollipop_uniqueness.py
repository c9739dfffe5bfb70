"""The smallest size past the gap is realised by one graph only.

When the gap exists, s = 6r - 2n + 1 is its upper end, and the lollipop
L(n, 2r) is the only graph with that order, radius and center size. Here we
check it exhaustively for n = 7 and count labelings against the orbit
formula n! / |Aut|.
"""

from math import factorial

from centerset import lollipop, metric_profile
from centerset.search import unique_up_to_iso

n, r = 7, 3
s = 6 * r - 2 * n + 1
ref = lollipop(n, 2 * r)
prof = metric_profile(ref)
print(f"L({n},{2 * r}): radius {prof.radius}, center {list(prof.center)}")

report = unique_up_to_iso(n, r, s, ref)
print(f"labeled graphs with n={n}, r={r}, |C|={s}: {report.labeled_match_count}")
print(f"all isomorphic to L({n},{2 * r}): {report.is_unique}")
# the only symmetry is the reflection of the cycle fixing the tail
print(f"n!/2 = {factorial(n) // 2}")
