import pytest

from centerset.constructions import (
    BROOM_JOINT,
    Case,
    broom,
    g1,
    g2,
    g3,
    g4,
    g5,
    join_family,
    lollipop,
    validate_witness,
    witness,
)
from centerset.errors import BadParameters, InfeasibleTarget
from centerset.graph import complete, cycle, path
from centerset.metrics import metric_profile
from centerset.omega import omega_set

from oracles import profile


def center_size(g):
    return len(metric_profile(g).center)


def test_broom_examples():
    g = broom(10, 6)
    assert metric_profile(g).radius == 3
    assert metric_profile(g).center == (3,)
    assert broom(6, 5) == path(6)
    assert BROOM_JOINT == 1 and broom(6, 5).degree(BROOM_JOINT) == 2
    g = broom(9, 6)
    assert (metric_profile(g).radius, center_size(g)) == (3, 1)
    assert metric_profile(broom(10, 6)).diameter == 6


@pytest.mark.parametrize("n, k", [(5, 1), (5, 5), (3, 3)])
def test_broom_bad_parameters(n, k):
    with pytest.raises(BadParameters):
        broom(n, k)


@pytest.mark.parametrize("r", range(2, 9))
def test_broom_odd_diameter_has_two_central_spine_vertices(r):
    for n in range(2 * r, 2 * r + 5):
        assert metric_profile(broom(n, 2 * r - 1)).center == (r - 1, r)


def test_lollipop_examples():
    assert (metric_profile(lollipop(14, 12)).radius, center_size(lollipop(14, 12))) == (6, 9)
    assert (metric_profile(lollipop(7, 6)).radius, center_size(lollipop(7, 6))) == (3, 5)
    assert lollipop(5, 5) == cycle(5)
    with pytest.raises(BadParameters):
        lollipop(5, 2)


def test_join_family_examples():
    prof = metric_profile(join_family(5, 2))
    assert prof.radius == 1 and prof.center == (0, 1)
    assert join_family(4, 4) == complete(4)
    # the forbidden s = n - 1: the lone outside vertex is adjacent to everything too
    assert center_size(join_family(5, 4)) == 5
    with pytest.raises(BadParameters):
        join_family(5, 0)


@pytest.mark.parametrize(
    "build, n, r, s",
    [
        (lambda: g1(14, 4, 5), 14, 4, 5),
        (lambda: g1(5, 2, 2), 5, 2, 2),
        (lambda: g1(7, 2, 5), 7, 2, 5),
        (lambda: g2(15, 4, 3), 15, 4, 3),
        (lambda: g2(14, 6, 9), 14, 6, 9),
        (lambda: g2(9, 4, 7), 9, 4, 7),
        (lambda: g3(15, 4, 2), 15, 4, 2),
        (lambda: g3(10, 4, 6), 10, 4, 6),
        (lambda: g3(12, 4, 4), 12, 4, 4),
        (lambda: g4(15, 4, 11), 15, 4, 11),
        (lambda: g4(10, 3, 7), 10, 3, 7),
        (lambda: g5(12, 4), 12, 4, 12),
        (lambda: g5(7, 3), 7, 3, 7),
        (lambda: g5(5, 2), 5, 2, 5),
    ],
)
def test_family_examples(build, n, r, s):
    g = build()
    assert validate_witness(g, n, r, s).ok
    # independent check with networkx
    rad, cen = profile(g)
    assert (g.order, rad, len(cen)) == (n, r, s)


def test_g1_boundary_is_plain_broom():
    assert g1(5, 2, 2) == broom(5, 3)


def test_g2_lollipop_cases():
    assert g2(14, 6, 9) == lollipop(14, 12)
    assert g2(9, 4, 7) == lollipop(9, 8)


def test_g4_rejects_radius_two():
    # the construction only works from r = 3: at r = 2 its center has 3 vertices
    with pytest.raises(BadParameters):
        g4(8, 2, 5)


def test_g4_at_radius_two_would_be_wrong():
    from centerset.constructions import _cycle_with_extras

    g = _cycle_with_extras(8, 2, 2)
    assert profile(g) == (2, [0, 1, 3])


@pytest.mark.parametrize(
    "fn, args",
    [
        (g1, (6, 3, 2)),  # 2r = n
        (g1, (9, 3, 6)),  # s > n - 2r + 2
        (g2, (15, 4, 4)),  # even s
        (g2, (15, 4, 9)),  # k = 0
        (g3, (15, 4, 3)),  # odd s
        (g3, (9, 4, 2)),  # 2r + 1 = n
        (g4, (15, 4, 14)),  # s = n - 1
        (g5, (8, 4)),
    ],
)
def test_family_bad_parameters(fn, args):
    with pytest.raises(BadParameters):
        fn(*args)


def test_g2_g3_closed_forms_over_all_parameters():
    for n in range(5, 26):
        for r in range(2, (n - 1) // 2 + 1):
            for k in range(1, n - 2 * r + 1):
                s = 2 * (r - k) + 1
                if s >= 1:
                    g = g2(n, r, s)
                    assert (metric_profile(g).radius, center_size(g)) == (r, s), (n, r, s)
            for k in range(1, n - 2 * r):
                s = 2 * (r - k)
                if s >= 2:
                    g = g3(n, r, s)
                    assert (metric_profile(g).radius, center_size(g)) == (r, s), (n, r, s)


def test_g1_g4_g5_over_all_parameters():
    for n in range(5, 26):
        for r in range(2, (n - 1) // 2 + 1):
            for s in range(2, n - 2 * r + 3):
                assert validate_witness(g1(n, r, s), n, r, s).ok, (n, r, s)
            if r >= 3:
                for s in range(2 * r, n - 1):
                    assert validate_witness(g4(n, r, s), n, r, s).ok, (n, r, s)
            prof = metric_profile(g5(n, r))
            assert prof.radius == prof.diameter == r


def test_witness_examples():
    g, recipe = witness(14, 6, 9)
    assert recipe.case is Case.G2_LOLLIPOP and g == lollipop(14, 12)
    g, recipe = witness(8, 4, 2)
    assert recipe.case is Case.HALF_PATH and g == path(8)
    g, recipe = witness(8, 4, 8)
    assert recipe.case is Case.HALF_CYCLE and g == cycle(8)
    with pytest.raises(InfeasibleTarget):
        witness(14, 6, 5)
    with pytest.raises(BadParameters):
        witness(2, 1, 2)
    with pytest.raises(BadParameters):
        witness(9, 5, 2)


@pytest.mark.parametrize(
    "n, r, s, case",
    [
        (10, 1, 4, Case.JOIN_FAMILY),
        (10, 3, 1, Case.BROOM_CASE1),
        (10, 3, 10, Case.G5),
        (10, 3, 5, Case.G1),  # also inside G4's range; G1 wins
        (10, 3, 6, Case.G1),
        (10, 3, 7, Case.G4),
        (15, 4, 3, Case.G1),
        (14, 6, 3, Case.G1),
        (14, 6, 11, Case.G2_BROOM_ON_CYCLE),
        (14, 6, 12, Case.G4),
        (13, 6, 11, Case.G2_LOLLIPOP),
        (16, 7, 12, Case.G3_PATH),
        (15, 6, 10, Case.G3_BROOM),
        (16, 6, 12, Case.G4),
    ],
)
def test_witness_precedence(n, r, s, case):
    g, recipe = witness(n, r, s)
    assert recipe.case is case
    assert (recipe.n, recipe.r, recipe.s) == (n, r, s)
    assert validate_witness(g, n, r, s).ok


def test_recipe_k_matches_case_equation():
    for n in range(3, 30):
        for r in range(1, n // 2 + 1):
            for s in omega_set(n, r):
                _, rec = witness(n, r, s)
                if rec.case in (Case.G2_LOLLIPOP, Case.G2_BROOM_ON_CYCLE):
                    assert s == 2 * r - 2 * rec.k + 1 and 1 <= rec.k <= n - 2 * r
                elif rec.case in (Case.G3_PATH, Case.G3_BROOM):
                    assert s == 2 * r - 2 * rec.k and 1 <= rec.k <= n - 2 * r - 1
                elif rec.case is Case.G4:
                    assert s == 2 * r + rec.k - 1 and 1 <= rec.k <= n - 2 * r - 1


def test_validate_witness_reports_failures():
    assert validate_witness(path(8), 8, 4, 2).ok
    report = validate_witness(cycle(6), 6, 3, 2)
    assert not report.ok
    failed = [c for c in report.checks if not c.passed]
    assert [(c.name, c.actual) for c in failed] == [("center_size", 6)]
    report = validate_witness(path(3), 4, 1, 1)
    assert not report.ok


def test_validate_witness_disconnected_is_data():
    from centerset.graph import empty

    report = validate_witness(empty(3), 3, 1, 3)
    assert not report.ok
    assert {c.name: c.passed for c in report.checks}["connected"] is False
