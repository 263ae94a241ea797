import math

import numpy as np
import pytest

from priorityrank.distance import (
    CentralityDistance,
    Euclidean1D,
    RandomDistance,
    reference_centralities,
)
from priorityrank.generate import (
    DegreeSpec,
    gen_barabasi_albert,
    gen_disassortative,
    gen_dorogovtsev_goltsev_mendes,
    gen_erdos_renyi,
    gen_forest_fire,
    gen_watts_strogatz,
    priority_rank_generate,
)
from priorityrank.graph import AttributeColumn, AttributeTable, out_degree_sequence, symmetrize
from priorityrank.metrics import assortativity, avg_path_length, degree_centrality, diameter
from priorityrank.stats import RngStream, ks_two_sample


def uniform_attr(n, seed):
    vals = RngStream(seed).generator.uniform(0, 1, n)
    return AttributeTable([AttributeColumn("x", "continuous", tuple(vals))])


def test_priority_rank_two_vertices():
    g = priority_rank_generate(2, None, RandomDistance(), DegreeSpec.constant(1), seed=0)
    assert g.arcs == {(0, 1), (1, 0)}


def test_priority_rank_exhaustive_k():
    n = 7
    g = priority_rank_generate(n, None, RandomDistance(), DegreeSpec.constant(n - 1), seed=1)
    assert g.arc_count == n * (n - 1)


def test_priority_rank_exact_out_degrees_no_self_loops():
    for k in (1, 3, 6):
        g = priority_rank_generate(
            20, uniform_attr(20, 3), Euclidean1D(attr="x"), DegreeSpec.constant(k), seed=5
        )
        assert g.out_degrees.tolist() == [k] * 20
        assert all(i != j for i, j in g.arcs)


def test_priority_rank_deterministic_and_worker_independent():
    attrs = uniform_attr(30, 7)
    runs = [
        priority_rank_generate(
            30, attrs, Euclidean1D(attr="x"), DegreeSpec.constant(4), seed=11, workers=w
        )
        for w in (1, 1, 4)
    ]
    assert runs[0] == runs[1] == runs[2]


def test_priority_rank_centrality_kind_reference_and_bootstrap():
    src = gen_erdos_renyi(25, 0.3, seed=2)
    cents = reference_centralities(src)
    spec = CentralityDistance(centrality="degree")
    a = priority_rank_generate(
        25, None, spec, DegreeSpec.constant(3), seed=4, reference=src, centralities=cents
    )
    b = priority_rank_generate(
        25, None, spec, DegreeSpec.constant(3), seed=4, reference=src
    )
    assert a == b  # precomputed centralities change nothing
    scratch = priority_rank_generate(25, None, spec, DegreeSpec.constant(3), seed=4)
    assert scratch.out_degrees.tolist() == [3] * 25


def test_degree_spec_resample_clamps_with_warning():
    spec = DegreeSpec.resample([9, 9, 9, 9])
    with pytest.warns(UserWarning, match="clamped"):
        ks = spec.draws(4, RngStream(0))
    assert (ks <= 3).all()
    with pytest.raises(ValueError):
        DegreeSpec.constant(0)
    with pytest.raises(ValueError):
        DegreeSpec.resample([])


def test_priority_rank_resampled_degrees_follow_source():
    src = gen_erdos_renyi(40, 0.2, seed=9)
    degrees = DegreeSpec.resample(out_degree_sequence(src))
    g = priority_rank_generate(40, None, RandomDistance(), degrees, seed=10, reference=src)
    assert 0 < g.arc_count < 40 * 39
    # generated out-degrees stay inside the source support
    assert set(g.out_degrees.tolist()) <= set(out_degree_sequence(src).tolist())


def test_erdos_renyi_extremes_and_count():
    assert gen_erdos_renyi(10, 0.0, seed=1).arc_count == 0
    assert gen_erdos_renyi(10, 1.0, seed=1).arc_count == 90
    counts = [gen_erdos_renyi(50, 0.4, seed=s).arc_count for s in range(30)]
    expected = 50 * 49 * 0.4
    spread = 3 * math.sqrt(expected * 0.6)
    assert abs(float(np.mean(counts)) - expected) < spread


def test_watts_strogatz_lattice():
    g = gen_watts_strogatz(50, 3, 0.0, seed=1)
    assert g.arc_count == 150
    assert set(g.out_degrees.tolist()) == {3}
    # circulant diameter: ceil(floor(n/2) / k) hops around the ring
    assert diameter(symmetrize(g)) == 9


def test_watts_strogatz_rewiring_breaks_regularity():
    variances = []
    for s in range(20):
        g = gen_watts_strogatz(50, 3, 1.0, seed=s)
        assert g.arc_count == 150  # rewiring moves heads, never the count
        variances.append(float(np.var(degree_centrality(g, "total"))))
    assert min(variances) > 0.0


def test_barabasi_albert_counts_and_minimal_growth():
    g = gen_barabasi_albert(50, 3, 3, seed=2)
    assert g.arc_count == 6 + 2 * 3 * 47
    g2 = gen_barabasi_albert(4, 3, 3, seed=3)
    assert {(3, t) for t in range(3)} <= g2.arcs
    with pytest.raises(ValueError):
        gen_barabasi_albert(5, 3, 2, seed=0)


def test_barabasi_albert_degree_self_consistency():
    pvals = []
    for s in range(20):
        a = gen_barabasi_albert(50, 3, None, seed=2 * s)
        b = gen_barabasi_albert(50, 3, None, seed=2 * s + 1)
        pvals.append(
            ks_two_sample(
                degree_centrality(a, "total"), degree_centrality(b, "total")
            ).p_value
        )
    assert float(np.median(pvals)) > 0.05


def test_forest_fire_no_burning_is_tree():
    g = gen_forest_fire(50, 0.0, 1, seed=3)
    assert g.arc_count == 49


def test_forest_fire_burn_range():
    counts = [gen_forest_fire(50, 0.3, 1, seed=s).arc_count for s in range(100)]
    assert min(counts) >= 49
    assert max(counts) <= 300
    assert abs(float(np.mean(counts)) - 93) <= 93 * 0.5


def test_forest_fire_simple_graph():
    for s in range(10):
        g = gen_forest_fire(40, 0.45, 2, seed=s)
        assert all(i != j for i, j in g.arcs)  # set semantics + loop guard


def test_dgm_counts():
    expected_v = [2, 3, 6, 15, 42, 123]
    expected_e = [1, 3, 9, 27, 81, 243]
    for steps in range(6):
        g = gen_dorogovtsev_goltsev_mendes(steps)
        assert g.n == expected_v[steps]
        assert g.arc_count == 2 * expected_e[steps]
    with pytest.raises(ValueError, match="budget"):
        gen_dorogovtsev_goltsev_mendes(20, max_vertices=10_000)


def test_disassortative_reaches_threshold():
    g = gen_disassortative(100, -0.4, 200, seed=0)
    assert assortativity(symmetrize(g)) < -0.4
    assert g.arc_count >= 300  # 10 hubs x >=30 draws, minus collisions, plus the rest
    assert assortativity(g) < 0  # directed view stays disassortative
    assert abs(g.arc_count / (100 * 99) - 0.05) <= 0.025  # density band


def test_disassortative_warns_when_unreachable():
    with pytest.warns(UserWarning, match="did not fall"):
        gen_disassortative(100, -0.99, 3, seed=1)


def test_locality_raises_path_length():
    ls_local, ls_random = [], []
    for s in range(20):
        attrs = uniform_attr(100, 500 + s)
        local = priority_rank_generate(
            100, attrs, Euclidean1D(attr="x"), DegreeSpec.constant(4), seed=600 + s
        )
        rand = priority_rank_generate(
            100, None, RandomDistance(), DegreeSpec.constant(4), seed=700 + s
        )
        ls_local.append(avg_path_length(local))
        ls_random.append(avg_path_length(rand))
    assert float(np.median(ls_local)) > float(np.median(ls_random))
