import random
from fractions import Fraction

import pytest

from aztec_tangent.aztec_lattice import T_closed, Z_closed, octahedron_top, two_periodic_grid, uniform_grid
from aztec_tangent.matchings import (
    AztecGraph, CapExceeded, boundary_indices, conventional_weight, enumerate_matchings,
    nw_marginal, octahedral_weight, path_weight, refined_counts, tiling_to_paths, weighted_sum)
from aztec_tangent.refined import T_one_refined, two_refined


@pytest.mark.parametrize("n,count", [(1, 2), (2, 8), (3, 64), (4, 1024)])
def test_matching_counts(n, count):
    ms = list(enumerate_matchings(AztecGraph(n)))
    assert len(ms) == count == len(set(ms))


def test_graph_shape():
    g = AztecGraph(3)
    assert len(g.vertices) == 2 * 3 * 4
    inner = [f for f in g.faces if abs(f[0]) + abs(f[1]) < 3]
    assert all(len(g.face_edges[f]) == 4 for f in inner)
    outer = [f for f in g.faces if abs(f[0]) + abs(f[1]) == 3]
    assert all(len(g.face_edges[f]) in (1, 2) for f in outer)


def test_perfectness():
    g = AztecGraph(3)
    for m in enumerate_matchings(g):
        seen = [v for idx in m for v in g.edges[idx]]
        assert sorted(seen) == sorted(g.vertices)


def test_cap(monkeypatch):
    monkeypatch.setenv("AZTEC_BRUTE_CAP", "2")
    with pytest.raises(CapExceeded):
        next(enumerate_matchings(AztecGraph(3)))


def test_uniform_weights_are_one():
    g = AztecGraph(2)
    grid = uniform_grid(2)
    for m in enumerate_matchings(g):
        assert octahedral_weight(g, m, grid) == 1
        assert conventional_weight(g, m, grid) == 1


def test_order_one_sum():
    a = Fraction(1, 3)
    assert weighted_sum(AztecGraph(1), two_periodic_grid(1, a, 1)) == 6


def test_conventional_small_cases():
    assert weighted_sum(AztecGraph(2), two_periodic_grid(2, 1, 2), "conventional") == 80
    assert weighted_sum(AztecGraph(3), two_periodic_grid(3, 2, 3), "conventional") == 3504384


def test_octahedral_sum_matches_evolution():
    rng = random.Random(4)
    for _ in range(5):
        a, b = Fraction(rng.randint(1, 7), rng.randint(1, 7)), Fraction(rng.randint(1, 7), rng.randint(1, 7))
        for n in range(1, 5):
            grid = two_periodic_grid(n, a, b)
            assert weighted_sum(AztecGraph(n), grid) == octahedron_top(grid) == T_closed(n, a, b)


def test_nw_calibration_vector():
    a, b = Fraction(1), Fraction(2)
    marg = nw_marginal(refined_counts(AztecGraph(3), two_periodic_grid(3, a, b)), 3)
    pref = a / 4 * (2 / (a * b)) ** 4 * (a * a + b * b)
    assert marg == [pref * x for x in (b * b, 2 * a * a + b * b, 2 * a * a + b * b, b * b)]


def test_order_one_refined_table():
    a = Fraction(3, 2)
    t = refined_counts(AztecGraph(1), two_periodic_grid(1, a, 5))
    assert t == {(0, 0): 1 / a, (1, 1): 1 / a}


def test_uniform_marginal_is_binomial():
    marg = nw_marginal(refined_counts(AztecGraph(2), uniform_grid(2)), 2)
    assert [x / 2 for x in marg] == [1, 2, 1]


def test_marginals_match_recurrences():
    a, b = Fraction(2, 3), Fraction(5, 2)
    for n in range(1, 5):
        t = refined_counts(AztecGraph(n), two_periodic_grid(n, a, b))
        assert nw_marginal(t, n) == T_one_refined(n, a, b)
        tab = two_refined(n, a, b)[n]
        assert all(t.get((k, l), 0) == tab[k][l] for k in range(n + 1) for l in range(n + 1))


def test_top_face_shared():
    g = AztecGraph(3)
    for m in enumerate_matchings(g):
        k, l = boundary_indices(g, m)
        assert (k == 3) == (l == 3)


def _is_schroeder(pts, base):
    for (p0, q0), (p1, q1) in zip(pts, pts[1:]):
        if (p1 - p0, q1 - q0) not in ((1, 1), (1, -1), (2, 0)):
            return False
    return all(q >= base for _, q in pts)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_paths_valid_and_disjoint(n):
    g = AztecGraph(n)
    for m in enumerate_matchings(g):
        paths = tiling_to_paths(g, m)
        assert len(paths) == n
        used = set()
        for (pts, _), i in zip(paths, range(n, 0, -1)):
            assert pts[0] == (-i, i) and pts[-1] == (i, i)
            assert _is_schroeder(pts, i)
            assert not used & set(pts)
            used |= set(pts)


def test_all_horizontal_tiling_gives_flat_paths():
    g = AztecGraph(3)
    flat = [m for m in enumerate_matchings(g)
            if all(k == "flat" for _, kinds in tiling_to_paths(g, m) for k in kinds)]
    assert len(flat) == 1
    assert [len(k) for _, k in tiling_to_paths(g, flat[0])] == [3, 2, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_path_weights_proportional_to_conventional(n):
    a, b = Fraction(2, 3), Fraction(7, 5)
    g = AztecGraph(n)
    grid = two_periodic_grid(n, a, b)
    ratios = {conventional_weight(g, m, grid) / path_weight(tiling_to_paths(g, m), a, b)
              for m in enumerate_matchings(g)}
    assert len(ratios) == 1
