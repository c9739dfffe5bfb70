"""Every rational in (0, 1] is the central ratio of some connected graph."""

from fractions import Fraction

from centerset import metric_profile, ratio_witness

for a, b in [(1, 1), (1, 2), (3, 7), (6, 7), (5, 12), (11, 12)]:
    g = ratio_witness(a, b)
    prof = metric_profile(g)
    print(f"{Fraction(a, b)!s:>6}: order {g.order:2d}, radius {prof.radius}, "
          f"|C| = {len(prof.center):2d}, ratio {prof.central_ratio}")
