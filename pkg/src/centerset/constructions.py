"""Witness graphs with prescribed order, radius and center size.

Every constructor uses a fixed labelling so outputs (and their graph6
encodings) are reproducible. Families built on an even cycle always put the
cycle on vertices ``0..2r-1`` in cyclic order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import BadParameters, InfeasibleTarget
from .graph import Graph, build_graph, complete, cycle, empty, identify, is_connected, join, path
from .metrics import metric_profile


class Case(str, enum.Enum):
    JOIN_FAMILY = "JoinFamily"
    BROOM_CASE1 = "BroomCase1"
    G1 = "G1"
    G2_LOLLIPOP = "G2Lollipop"
    G2_BROOM_ON_CYCLE = "G2BroomOnCycle"
    G3_PATH = "G3Path"
    G3_BROOM = "G3Broom"
    G4 = "G4"
    G5 = "G5"
    HALF_PATH = "HalfPath"
    HALF_CYCLE = "HalfCycle"


@dataclass(frozen=True)
class WitnessRecipe:
    case: Case
    n: int
    r: int
    s: int
    k: int = 0

    @property
    def cycle(self) -> list[int] | None:
        """The induced ``2r``-cycle of the witness, when the family has one."""
        if self.case in _EVEN_CYCLE_CASES:
            return list(range(2 * self.r))
        return None


_EVEN_CYCLE_CASES = {
    Case.G2_LOLLIPOP,
    Case.G2_BROOM_ON_CYCLE,
    Case.G3_PATH,
    Case.G3_BROOM,
    Case.G4,
    Case.G5,
    Case.HALF_CYCLE,
}


def broom(n: int, k: int) -> Graph:
    """Broom of order ``n`` and diameter ``k``.

    Spine ``0..k``; leaves ``k+1..n-1`` hang off vertex 1, the joint.
    """
    if not 2 <= k <= n - 1:
        raise BadParameters(f"broom needs 2 <= k <= n-1, got n={n}, k={k}")
    edges = [(i, i + 1) for i in range(k)]
    edges += [(1, leaf) for leaf in range(k + 1, n)]
    return build_graph(n, edges)


BROOM_JOINT = 1


def lollipop(n: int, k: int) -> Graph:
    """Cycle ``0..k-1`` with a tail ``0-k-(k+1)-...-(n-1)``."""
    if not 3 <= k <= n:
        raise BadParameters(f"lollipop needs 3 <= k <= n, got n={n}, k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    prev = 0
    for v in range(k, n):
        edges.append((prev, v))
        prev = v
    return build_graph(n, edges)


def join_family(n: int, s: int) -> Graph:
    """``K_s`` joined with the edgeless graph on ``n - s`` vertices."""
    if not 1 <= s <= n:
        raise BadParameters(f"join family needs 1 <= s <= n, got n={n}, s={s}")
    if s == n:
        return complete(n)
    return join(complete(s), empty(n - s))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def g1(n: int, r: int, s: int) -> Graph:
    _require(r >= 2 and 2 * r < n and 2 <= s <= n - 2 * r + 2, f"g1: bad (n, r, s) = ({n}, {r}, {s})")
    base = broom(n - s + 2, 2 * r - 1)
    m = base.order
    rows = list(base.rows) + [0] * (s - 2)
    both = (1 << (r - 1)) | (1 << r)
    for v in range(m, n):
        rows[v] = both
        rows[r - 1] |= 1 << v
        rows[r] |= 1 << v
    return Graph(n, rows)


def _g2_k(n: int, r: int, s: int) -> int:
    _require(r >= 2 and 2 * r < n and s % 2 == 1, f"g2: bad (n, r, s) = ({n}, {r}, {s})")
    k = (2 * r + 1 - s) // 2
    _require(1 <= k <= n - 2 * r and s >= 1, f"g2: s={s} gives k={k} outside 1..{n - 2 * r}")
    return k


def g2(n: int, r: int, s: int) -> Graph:
    k = _g2_k(n, r, s)
    if n == 2 * r + k:
        return lollipop(n, 2 * r)
    return identify(cycle(2 * r), 0, broom(n - 2 * r + 1, k + 1), BROOM_JOINT)


def _g3_k(n: int, r: int, s: int) -> int:
    _require(r >= 2 and 2 * r + 1 < n and s % 2 == 0, f"g3: bad (n, r, s) = ({n}, {r}, {s})")
    k = (2 * r - s) // 2
    _require(1 <= k <= n - 2 * r - 1, f"g3: s={s} gives k={k} outside 1..{n - 2 * r - 1}")
    return k


def g3(n: int, r: int, s: int) -> Graph:
    k = _g3_k(n, r, s)
    base = lollipop(2 * r + 1, 2 * r)
    # the leaf 2r hangs off cycle vertex 0, so its eccentric vertex is the antipode r
    if n == 2 * r + k + 1:
        return identify(base, r, path(k + 1), 0)
    return identify(base, r, broom(n - 2 * r, k + 1), BROOM_JOINT)


def _g4_k(n: int, r: int, s: int) -> int:
    # at r = 2 the vertices on x2, x2r sit at distance 3 from the pendants and
    # drop out of the center; G1 already covers every such s
    _require(r >= 3 and 2 * r + 1 < n and 2 * r <= s <= n - 2, f"g4: bad (n, r, s) = ({n}, {r}, {s})")
    return s - 2 * r + 1


def _cycle_with_extras(n: int, r: int, pendants: int) -> Graph:
    # cycle 0..2r-1, `pendants` leaves on vertex 0, the rest adjacent to 1 and 2r-1
    edges = [(i, (i + 1) % (2 * r)) for i in range(2 * r)]
    v = 2 * r
    for _ in range(pendants):
        edges.append((0, v))
        v += 1
    while v < n:
        edges += [(1, v), (2 * r - 1, v)]
        v += 1
    return build_graph(n, edges)


def g4(n: int, r: int, s: int) -> Graph:
    k = _g4_k(n, r, s)
    return _cycle_with_extras(n, r, n - 2 * r - k)


def g5(n: int, r: int) -> Graph:
    _require(r >= 2 and 2 * r < n, f"g5: bad (n, r) = ({n}, {r})")
    return _cycle_with_extras(n, r, 0)


def witness(n: int, r: int, s: int) -> tuple[Graph, WitnessRecipe]:
    """A graph of order ``n``, radius ``r`` and center size ``s``.

    Overlapping ranges are resolved as: broom (s=1), G5 (s=n), G1, G4,
    then G2 or G3 by the parity of ``s``.
    """
    from .omega import omega_contains

    if n < 3 or not 1 <= r <= n // 2:
        raise BadParameters(f"witness needs n >= 3 and 1 <= r <= n/2, got n={n}, r={r}")
    if not omega_contains(n, r, s):
        raise InfeasibleTarget(f"no graph has order {n}, radius {r} and center size {s}")

    if 2 * r == n:
        if s == 2:
            return path(n), WitnessRecipe(Case.HALF_PATH, n, r, s)
        return cycle(n), WitnessRecipe(Case.HALF_CYCLE, n, r, s)
    if r == 1:
        return join_family(n, s), WitnessRecipe(Case.JOIN_FAMILY, n, r, s)
    if s == 1:
        return broom(n, 2 * r), WitnessRecipe(Case.BROOM_CASE1, n, r, s)
    if s == n:
        return g5(n, r), WitnessRecipe(Case.G5, n, r, s)
    if s <= n - 2 * r + 2:
        return g1(n, r, s), WitnessRecipe(Case.G1, n, r, s)
    if 2 * r <= s <= n - 2:
        return g4(n, r, s), WitnessRecipe(Case.G4, n, r, s, _g4_k(n, r, s))
    if s % 2 == 1:
        k = _g2_k(n, r, s)
        case = Case.G2_LOLLIPOP if n == 2 * r + k else Case.G2_BROOM_ON_CYCLE
        return g2(n, r, s), WitnessRecipe(case, n, r, s, k)
    k = _g3_k(n, r, s)
    case = Case.G3_PATH if n == 2 * r + k + 1 else Case.G3_BROOM
    return g3(n, r, s), WitnessRecipe(case, n, r, s, k)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: object
    actual: object


@dataclass(frozen=True)
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def validate_witness(g: Graph, n: int, r: int, s: int) -> ValidationReport:
    checks = [Check("order", g.order == n, n, g.order)]
    connected = is_connected(g)
    checks.append(Check("connected", connected, True, connected))
    if connected:
        prof = metric_profile(g)
        checks.append(Check("radius", prof.radius == r, r, prof.radius))
        checks.append(Check("center_size", len(prof.center) == s, s, len(prof.center)))
    else:
        checks.append(Check("radius", False, r, None))
        checks.append(Check("center_size", False, s, None))
    return ValidationReport(checks)

