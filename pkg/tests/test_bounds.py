import math

import networkx as nx
import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import graph_from_nx, random_corpus

from netmoments.bounds import (
    alpha_bisect,
    beta_bisect,
    bisect_bounds,
    bound_sensitivity,
    bounds_analytic,
    bounds_analytic_s2,
    cubic_real_roots,
    hankel_matrices,
    localizing_matrix,
    support_bounds,
)
from netmoments.census import census
from netmoments.errors import BoundsError
from netmoments.spectral import extreme_eigenvalues, moments_from_census


def moments(g):
    return moments_from_census(census(g))


def pencil_extremes(m, s):
    """Extreme generalized eigenvalues of (R_odd, R_even): independent of bisection and cubic."""
    h = hankel_matrices(m, s)
    w = scipy.linalg.eigh(h.R_odd, h.R_even, eigvals_only=True)
    return w[0], w[-1]


class TestHankel:
    def test_k3_order1(self, named):
        h = hankel_matrices(moments(named["K3"]), 1)
        np.testing.assert_array_equal(h.R_even, [[1, 0], [0, 2]])
        np.testing.assert_array_equal(h.R_odd, [[0, 2], [2, 2]])

    def test_edge_order2(self, named):
        h = hankel_matrices(moments(named["edge"]), 2)
        np.testing.assert_array_equal(h.R_even, [[1, 0, 1], [0, 1, 0], [1, 0, 1]])
        np.testing.assert_array_equal(h.R_odd, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])

    def test_empty_graph(self, named):
        h = hankel_matrices(moments(named["empty3"]), 1)
        np.testing.assert_array_equal(h.R_even, [[1, 0], [0, 0]])
        np.testing.assert_array_equal(h.R_odd, np.zeros((2, 2)))

    def test_bad_order(self, named):
        with pytest.raises(ValueError):
            hankel_matrices(moments(named["K3"]), 3)

    def test_structure(self):
        for g in random_corpus(30, seed=2):
            m = moments(g)
            for s in (1, 2):
                h = hankel_matrices(m, s)
                for i in range(s + 1):
                    for j in range(s + 1):
                        assert h.R_even[i, j] == (1.0 if i + j == 0 else m[i + j])
                        assert h.R_odd[i, j] == m[i + j + 1]
                assert np.linalg.eigvalsh(h.R_even)[0] >= -1e-9 * max(1, m[2 * s])


class TestLocalizing:
    def test_examples(self, named):
        m3 = moments(named["K3"])
        np.testing.assert_array_equal(localizing_matrix(m3, 1, 0.0), [[0, 2], [2, 2]])
        np.testing.assert_array_equal(localizing_matrix(m3, 1, -1.0), [[1, 2], [2, 4]])
        np.testing.assert_array_equal(localizing_matrix(moments(named["edge"]), 1, 1.0), [[-1, 1], [1, -1]])

    def test_order2_layout(self, named):
        m = moments(named["petersen"])
        c = 0.7
        H = localizing_matrix(m, 2, c)
        expected = [
            [m[1] - c, m[2] - c * m[1], m[3] - c * m[2]],
            [m[2] - c * m[1], m[3] - c * m[2], m[4] - c * m[3]],
            [m[3] - c * m[2], m[4] - c * m[3], m[5] - c * m[4]],
        ]
        np.testing.assert_allclose(H, expected)


class TestBisection:
    def test_k3(self, named):
        m = moments(named["K3"])
        assert alpha_bisect(m, 1, tol=1e-12) == pytest.approx(-1, abs=1e-10)
        assert beta_bisect(m, 1, tol=1e-12) == pytest.approx(2, abs=1e-10)

    def test_edge(self, named):
        m = moments(named["edge"])
        assert alpha_bisect(m, 1, tol=1e-12) == pytest.approx(-1, abs=1e-10)
        assert beta_bisect(m, 1, tol=1e-12) == pytest.approx(1, abs=1e-10)

    def test_empty(self, named):
        b = bisect_bounds(moments(named["empty3"]), 2)
        assert b.alpha == b.beta == 0

    @pytest.mark.parametrize("k", range(3, 9))
    def test_complete_beta(self, k):
        m = moments(graph_from_nx(nx.complete_graph(k)))
        assert beta_bisect(m, 1, tol=1e-12) == pytest.approx(k - 1, abs=1e-9)

    def test_report_fields(self, named):
        b = bisect_bounds(moments(named["C5"]), 2)
        assert b.method == "psd-bisection" and b.iterations > 0
        assert b.bracket == pytest.approx((-math.sqrt(10), math.sqrt(10)))
        assert set(b.to_dict()) == {
            "s",
            "alpha",
            "beta",
            "method",
            "degenerate",
            "order",
            "bracket",
            "iterations",
        }

    def test_corrupt_moments(self):
        from netmoments.spectral import MomentSequence

        # m4 < m2^2 cannot come from any measure
        with pytest.raises(BoundsError):
            bisect_bounds(MomentSequence(10, (1, 0, 4, 0, 1, 0)), 2)


class TestAnalytic:
    def test_c5(self, named):
        b = bounds_analytic_s2(moments(named["C5"]))
        assert b.alpha == pytest.approx(2 * math.cos(4 * math.pi / 5), abs=1e-12)
        assert b.beta == pytest.approx(2, abs=1e-12)
        assert not b.degenerate and b.method == "analytic-cubic"

    @pytest.mark.parametrize("name, expected", [("edge", (-1, 1)), ("K3", (-1, 2))])
    def test_two_atom_fallback(self, named, name, expected):
        b = bounds_analytic_s2(moments(named[name]))
        assert (b.alpha, b.beta) == pytest.approx(expected, abs=1e-12)
        assert b.degenerate and b.order == 1

    def test_point_measure(self, named):
        b = bounds_analytic_s2(moments(named["empty3"]))
        assert (b.alpha, b.beta, b.degenerate, b.order) == (0, 0, True, 0)

    def test_dispatch(self, named):
        m = moments(named["C5"])
        assert support_bounds(m, 2, "bisect").method == "psd-bisection"
        with pytest.raises(ValueError):
            support_bounds(m, 2, "sdp")

    def test_matches_pencil_oracle(self):
        for g in random_corpus(150, seed=31):
            m = moments(g)
            for s in (1, 2):
                b = bounds_analytic(m, s)
                if b.degenerate:
                    continue
                lo, hi = pencil_extremes(m, s)
                assert b.alpha == pytest.approx(lo, abs=1e-7)
                assert b.beta == pytest.approx(hi, abs=1e-7)


class TestCubic:
    @settings(max_examples=200, deadline=None)
    @given(
        st.lists(st.floats(-50, 50, allow_nan=False), min_size=3, max_size=3),
        st.floats(0.1, 10),
    )
    def test_three_real_roots(self, roots, lead):
        r = np.sort(roots)
        if np.min(np.diff(r)) < 1e-3:
            return
        coeffs = lead * np.poly(r)
        got = cubic_real_roots(*coeffs)
        np.testing.assert_allclose(got, r, atol=1e-7 * (1 + np.abs(r).max()))

    def test_single_real_root_warns(self):
        with pytest.warns(RuntimeWarning):
            got = cubic_real_roots(1.0, 0.0, 1.0, -2.0)  # (c-1)(c^2+c+2)
        assert got == pytest.approx([1.0])

    def test_triple_root(self):
        assert cubic_real_roots(1.0, -3.0, 3.0, -1.0) == pytest.approx([1, 1, 1])


def _graphs_with_distinct_eigenvalues():
    two = [graph_from_nx(nx.complete_graph(k)) for k in range(2, 9)]
    three = [
        graph_from_nx(nx.cycle_graph(5)),
        graph_from_nx(nx.petersen_graph()),
        graph_from_nx(nx.complete_bipartite_graph(2, 5)),
        graph_from_nx(nx.star_graph(6)),
        graph_from_nx(nx.paley_graph(13).to_undirected()),
        graph_from_nx(nx.cycle_graph(4)),
    ]
    return two, three


class TestInvariants:
    def test_exact_recovery(self):
        two, three = _graphs_with_distinct_eigenvalues()
        for g in two:
            lo, hi = extreme_eigenvalues(g)
            b = bounds_analytic(moments(g), 1)
            assert (b.alpha, b.beta) == pytest.approx((lo, hi), abs=1e-8)
        for g in three:
            lo, hi = extreme_eigenvalues(g)
            assert len(np.unique(np.round(np.linalg.eigvalsh(g.adjacency_matrix(sparse=False)), 8))) == 3
            b = bounds_analytic(moments(g), 2)
            assert not b.degenerate
            assert (b.alpha, b.beta) == pytest.approx((lo, hi), abs=1e-8)

    def test_sandwich_monotone_agreement(self):
        for g in random_corpus(150, seed=41):
            if g.edge_count == 0:
                continue
            m = moments(g)
            lo, hi = extreme_eigenvalues(g)
            b1, b2 = bounds_analytic(m, 1), bounds_analytic(m, 2)
            assert lo - 1e-6 <= b2.alpha <= b1.alpha + 1e-9
            assert b1.beta - 1e-9 <= b2.beta <= hi + 1e-6
            bb = bisect_bounds(m, 2)
            assert abs(bb.alpha - b2.alpha) <= 1e-6
            assert abs(bb.beta - b2.beta) <= 1e-6

    def test_ray_structure(self):
        rng = np.random.default_rng(5)
        for g in random_corpus(20, seed=55):
            if g.edge_count == 0:
                continue
            m = moments(g)
            for s in (1, 2):
                b = bounds_analytic(m, s)
                if b.degenerate:
                    continue
                tol = 1e-7
                B = math.sqrt(2 * g.edge_count)
                for c in b.alpha - rng.uniform(0, 2 * B, 100):
                    H = localizing_matrix(m, s, c)
                    assert np.linalg.eigvalsh(H)[0] >= -1e-9 * np.abs(H).max()
                for c in b.alpha + tol + rng.uniform(0, 2 * B, 20):
                    assert np.linalg.eigvalsh(localizing_matrix(m, s, c))[0] < 0
                for c in b.beta + rng.uniform(0, 2 * B, 100):
                    H = -localizing_matrix(m, s, c)
                    assert np.linalg.eigvalsh(H)[0] >= -1e-9 * np.abs(H).max()


class TestSensitivity:
    @pytest.fixture
    def sample_census(self):
        from oracles import random_graph

        return census(random_graph(np.random.default_rng(17), 30, 0.25))

    def test_more_edges_raise_beta(self, sample_census):
        s = bound_sensitivity(sample_census, "e", 1.0)
        assert s.d_beta > 0
        # explicit recomputation of the sign
        from netmoments.spectral import moments_from_aggregates

        agg = {k: float(v) for k, v in sample_census.aggregates().items()}
        base = bounds_analytic(moments_from_aggregates(**agg), 2).beta
        agg["e"] += 5
        assert bounds_analytic(moments_from_aggregates(**agg), 2).beta > base

    def test_zero_step(self, sample_census):
        with pytest.raises(ValueError):
            bound_sensitivity(sample_census, "e", 0)

    def test_unknown_property(self, sample_census):
        with pytest.raises(ValueError):
            bound_sensitivity(sample_census, "n", 1)

    @pytest.mark.parametrize("prop", ["e", "Delta", "Q", "Pi", "W2", "C_dt"])
    def test_central_vs_forward(self, sample_census, prop):
        agg = sample_census.aggregates()
        h = 1e-3 * max(1, agg[prop])
        c = bound_sensitivity(sample_census, prop, h)
        f = bound_sensitivity(sample_census, prop, h, scheme="forward")
        c2 = bound_sensitivity(sample_census, prop, h / 2)
        f2 = bound_sensitivity(sample_census, prop, h / 2, scheme="forward")
        # forward error is O(h): halving h roughly halves the gap to the central value
        gap, gap2 = abs(f.d_beta - c.d_beta), abs(f2.d_beta - c2.d_beta)
        assert 0.3 * gap <= gap2 <= 0.7 * gap

    def test_invalid_perturbation(self, named):
        with pytest.raises(BoundsError):
            bound_sensitivity(census(named["C5"]), "W2", 100.0)

    def test_alias(self, sample_census):
        assert bound_sensitivity(sample_census, "Δ", 1.0) == bound_sensitivity(sample_census, "Delta", 1.0)
