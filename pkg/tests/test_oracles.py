import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ci_powers.combinatorics import binomial
from ci_powers.hilbert import hf_ci, hf_power
from ci_powers.linalg import exact_rank
from ci_powers.oracles import (
    PointConfig,
    SchemaError,
    exponent_vectors,
    grid_points,
    ideal_dim,
    monomial_hf,
    monomial_hf_naive,
    monomial_hf_values,
    points_hf,
    points_hf_values,
    points_invariants,
    remove_point,
)
from ci_powers.resolution import PreconditionError

GRID_EXAMPLE_HF = [1, 3, 6, 10, 15, 21, 28, 36, 45, 54, 62, 65, 66]


# -- exact rank ---------------------------------------------------------------

def test_exact_rank_basics():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
    assert exact_rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2


def test_exact_rank_matches_fraction_elimination():
    rnd = random.Random(7)
    for _ in range(30):
        rows = [[Fraction(rnd.randint(-3, 3), rnd.randint(1, 4)) for _ in range(6)] for _ in range(rnd.randint(1, 7))]
        # duplicate some rows to force dependencies
        rows += [[2 * x for x in rows[0]]]
        assert exact_rank(rows) == _rank_by_fractions(rows)


def _rank_by_fractions(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    for c in range(len(m[0])):
        piv = next((k for k in range(rank, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for k in range(len(m)):
            if k != rank and m[k][c] != 0:
                f = m[k][c] / m[rank][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[rank])]
        rank += 1
    return rank


# -- monomial oracle ----------------------------------------------------------

def test_monomial_examples():
    assert monomial_hf((1, 1), 2, 2, 3) == 3
    assert monomial_hf_values((2, 2), 2, 1, 6) == [1, 3, 4, 4, 4, 4, 4]
    assert monomial_hf_values((2, 3), 2, 2, 20) == hf_power((2, 3), 2, 2, 20).values
    with pytest.raises(PreconditionError):
        monomial_hf((1, 1, 1), 1, 1, 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(1, 3), st.integers(0, 1))
def test_grouped_count_equals_naive(degs, s, extra):
    n = len(degs) + extra
    vals = monomial_hf_values(degs, n, s, 10)
    assert vals == [monomial_hf_naive(degs, n, s, t) for t in range(11)]


@pytest.mark.parametrize("degs", [(1,), (2, 3), (1, 2, 4), (3, 3, 3, 4), (4, 4, 4, 4)])
def test_monomial_s1_matches_ci_series(degs):
    n = len(degs)
    assert monomial_hf_values(degs, n, 1, 25) == hf_ci(degs, n, 25).values
    # C(t+n, n) minus the monomials lying in the ideal
    for t in (0, 3, 7):
        inside = sum(1 for b in exponent_vectors(n + 1, t) if any(bj >= dj for bj, dj in zip(b, degs)))
        assert monomial_hf(degs, n, 1, t) == binomial(t + n, n) - inside


# -- point configurations -----------------------------------------------------

def test_grid_points_examples():
    cfg = grid_points([[0, 1], [0, 1, 2]])
    assert len(cfg.points) == 6 and cfg.mults == [1] * 6
    cfg = grid_points([[0], [0]], 3)
    assert cfg.points == [((1, 0, 0), 3)]
    cfg = grid_points([[0, 1, 2], [0, 1, 2, 3]], 3)
    assert len(cfg.points) == 12 and cfg.degree == 72
    with pytest.raises(PreconditionError, match="duplicate"):
        grid_points([[0, 0], [1]])


def test_single_points():
    simple = PointConfig(2, [((1, 2, 3), 1)])
    assert points_hf_values(simple, 4) == [1, 1, 1, 1, 1]
    double = PointConfig(2, [((0, 1, Fraction(1, 2)), 2)])
    assert points_hf_values(double, 4) == [1, 3, 3, 3, 3]


def test_grid_example_sequence():
    cfg = remove_point(grid_points([range(3), range(4)], 3), 0)
    inv = points_invariants(cfg)
    assert inv.values == GRID_EXAMPLE_HF
    assert points_hf(cfg, 13) == points_hf(cfg, 14) == 66
    assert inv.ri == 12


def test_ideal_dim():
    cfg = grid_points([range(2), range(2)])
    assert [ideal_dim(cfg, t) for t in range(4)] == [0, 0, 2, 6]


def test_remove_point():
    cfg = grid_points([range(2), range(2)])
    for k in range(4):
        assert len(remove_point(cfg, k).points) == 3
    with pytest.raises(IndexError):
        remove_point(cfg, 4)
    # removing and re-adding a point restores the Hilbert function
    smaller = remove_point(cfg, 2)
    again = PointConfig(2, smaller.points + [cfg.points[2]])
    assert points_hf_values(again, 4) == points_hf_values(cfg, 4)


def test_grid_removal_sweep_is_uniform():
    cfg = grid_points([range(3), range(4)], 3)
    seen = {tuple(points_hf_values(remove_point(cfg, k), 13)) for k in range(12)}
    assert seen == {tuple(GRID_EXAMPLE_HF + [66])}


@pytest.mark.parametrize("degs,m", [((2, 2), 1), ((2, 3), 2), ((3, 3), 2), ((1, 3), 3)])
def test_points_match_power_formula(degs, m):
    cfg = grid_points([range(d) for d in degs], m)
    D = sum(degs) + m * max(degs)
    assert points_hf_values(cfg, D) == hf_power(degs, 2, m, D).values


def test_p3_grid():
    cfg = grid_points([range(2)] * 3, 2)
    inv = points_invariants(cfg)
    assert (inv.alpha, inv.ri, inv.deg) == (4, 5, 32)
    assert inv.values == hf_power((2, 2, 2), 3, 2, 5).values


def _transform(cfg, mat):
    pts = []
    for coords, m in cfg.points:
        pts.append((tuple(sum(mat[i][j] * coords[j] for j in range(3)) for i in range(3)), m))
    return PointConfig(cfg.ambient, pts)


def _det3(a):
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def test_coordinate_change_invariance():
    base = remove_point(grid_points([range(2), range(3)], 2), 4)
    want = points_hf_values(base, 7)
    rnd = random.Random(2024)
    done = 0
    while done < 3:
        mat = [[Fraction(rnd.randint(-3, 3), rnd.randint(1, 3)) for _ in range(3)] for _ in range(3)]
        if _det3(mat) == 0:
            continue
        assert points_hf_values(_transform(base, mat), 7) == want
        done += 1


def test_rank_independent_of_row_order():
    from ci_powers.oracles import conditions_matrix
    cfg = grid_points([range(3), range(3)], 2)
    rows = conditions_matrix(cfg, 5)
    rnd = random.Random(1)
    ranks = set()
    for _ in range(3):
        shuffled = rows[:]
        rnd.shuffle(shuffled)
        ranks.add(exact_rank(shuffled))
    assert ranks == {exact_rank(rows)}


# -- JSON ---------------------------------------------------------------------

def test_json_round_trip_bit_exact():
    text = json.dumps({"ambient": 2, "points": [{"coords": ["1", "0", "2/3"], "mult": 3},
                                                {"coords": ["-5/7", "1", "0"], "mult": 1}]})
    cfg = PointConfig.loads(text)
    assert cfg.points[0] == ((1, 0, Fraction(2, 3)), 3)
    again = PointConfig.loads(cfg.dumps())
    assert again == cfg
    assert json.loads(cfg.dumps()) == json.loads(text)


@pytest.mark.parametrize("text,field", [
    ('{"points": []}', "ambient"),
    ('{"ambient": 2}', "points"),
    ('{"ambient": 2, "points": [{"mult": 1}]}', "points[0].coords"),
    ('{"ambient": 2, "points": [{"coords": ["1", "x", "0"]}]}', "points[0].coords[1]"),
    ('{"ambient": 2, "points": [{"coords": ["1", "0"]}]}', "points[0].coords"),
    ('{"ambient": 2, "points": [{"coords": ["0", "0", "0"]}]}', "points[0].coords"),
    ('{"ambient": 2, "points": [{"coords": ["1", "0", "0"], "mult": 0}]}', "points[0].mult"),
    ('{"ambient": 2, "points": [{"coords": ["1", "1", "0"]}, {"coords": ["2", "2", "0"]}]}', "points[1]"),
    ('not json', "invalid JSON"),
])
def test_json_schema_errors(text, field):
    with pytest.raises(SchemaError) as exc:
        PointConfig.loads(text)
    assert field in str(exc.value)
