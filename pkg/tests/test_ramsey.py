import itertools

import pytest

from finpart.operators import BudgetExceeded
from finpart.ramsey import (
    ProductColoring,
    RamseyQuery,
    check_witness,
    grid_points,
    has_property,
    search_min_N,
    subgrid,
    upper_bound_R,
)


def test_grid_points():
    pts = grid_points((3, 2), (2, 1))
    assert len(pts) == 3 * 2
    assert pts[0] == ((0, 1), (0,))


def test_check_witness():
    pts = grid_points((4,), (2,))
    colors = {pt: (0 if set(pt[0]) <= {0, 1, 2} else 1) for pt in pts}
    col = ProductColoring((4,), (2,), colors)
    assert check_witness(col, [(0, 1, 2)], 0, r=3)
    assert not check_witness(col, [(1, 2, 3)], 0, r=3)
    with pytest.raises(ValueError, match="size"):
        check_witness(col, [(0, 1)], 0, r=3)
    with pytest.raises(ValueError, match="side"):
        check_witness(col, [(0, 9, 2)], 0)


def test_coloring_must_be_total():
    with pytest.raises(ValueError, match="total"):
        ProductColoring((3,), (2,), {((0, 1),): 0})


def test_triangle_threshold():
    q = RamseyQuery((2,), 2, 3)
    assert not has_property((5,), q).holds
    assert has_property((6,), q).holds
    res = search_min_N(q, cap=7)
    assert res.value == 6
    assert res.counterexample_N == 5
    # the certificate really has no monochromatic triangle
    col = ProductColoring((5,), (2,), res.counterexample)
    assert not any(
        check_witness(col, [T], d)
        for T in itertools.combinations(range(5), 3)
        for d in range(2)
    )


def test_counterexample_replays():
    q = RamseyQuery((2,), 2, 3)
    res = has_property((5,), q)
    assert not res.holds
    col = ProductColoring((5,), (2,), res.counterexample)
    assert not any(
        check_witness(col, [T], d)
        for T in itertools.combinations(range(5), 3)
        for d in range(2)
    )


def test_pigeonhole_exact():
    for c in (1, 2, 3):
        for r in (1, 2, 3, 4):
            q = RamseyQuery((1,), c, r)
            expect = c * (r - 1) + 1
            assert search_min_N(q, cap=expect + 1).value == expect, (c, r)


def test_prune_agrees_with_no_prune():
    for N in (3, 4, 5):
        for q in (RamseyQuery((2,), 2, 3), RamseyQuery((1,), 3, 2)):
            a = has_property((N,), q, prune=True)
            b = has_property((N,), q, prune=False)
            assert a.holds == b.holds, (N, q)
            assert a.searched <= b.searched


def test_product_grid_small():
    # two 1-uniform coordinates, 2 colors, target 2: a monochromatic
    # 2x2 sub-grid is a combinatorial rectangle, avoidable up to 4x4
    # (e.g. by the identity matrix at 3x3)
    q = RamseyQuery((1, 1), 2, 2)
    for N in (2, 3, 4):
        res = has_property((N, N), q)
        assert not res.holds, N
        # replay the counterexample: no rectangle is monochromatic
        col = ProductColoring((N, N), (1, 1), res.counterexample)
        assert not any(
            check_witness(col, [T1, T2], d)
            for T1 in itertools.combinations(range(N), 2)
            for T2 in itertools.combinations(range(N), 2)
            for d in range(2)
        )


def test_small_witness_regimes():
    # r larger than the side: impossible
    assert not has_property((2,), RamseyQuery((2,), 2, 3)).holds
    # r <= j: a single grid point is the whole sub-grid
    assert has_property((3,), RamseyQuery((2,), 2, 2)).holds
    # empty grid with witnesses: vacuous
    res = has_property((2,), RamseyQuery((3,), 2, 2))
    assert res.holds


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        has_property((6,), RamseyQuery((2,), 2, 3), max_colorings=10)


def test_upper_bounds_sufficient():
    checked = 0
    for j, c, r in [(0, 2, 2), (1, 2, 3), (1, 3, 3), (2, 2, 3), (2, 3, 2),
                    (3, 2, 3)]:
        q = RamseyQuery((j,), c, r)
        ub = upper_bound_R(q)
        try:
            res = has_property((ub,), q)
        except BudgetExceeded:
            continue
        checked += 1
        assert res.holds, (j, c, r, ub)
    assert checked >= 4


def test_upper_bound_values():
    assert upper_bound_R(RamseyQuery((2,), 2, 3)) == 6
    assert upper_bound_R(RamseyQuery((1,), 3, 4)) == 10
    assert upper_bound_R(RamseyQuery((1, 1), 2, 2)) >= 3


def test_subgrid():
    pts = subgrid([(0, 2), (1, 3)], (1, 1))
    assert ((0,), (1,)) in pts and ((2,), (3,)) in pts
    assert len(pts) == 4
