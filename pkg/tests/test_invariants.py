"""Cross-module properties tying the profile machinery to the exact oracle."""

from conftest import corpus

from potnum.graphs import (
    complete_graph,
    cycle_graph,
    double_star,
    is_isomorphic,
    join,
)
from potnum.oracle import canonical_realization, potentially, sigma_exact
from potnum.potential import profile, rho, target_family, target_sequence
from potnum.sequences import l1_distance
from potnum.stability import classify_sigma


def test_target_sum_lower_bounds_potential_number():
    # the best target sequence is never potentially graphic, so the exact
    # value sits at least two above its sum
    for name, h in corpus().items():
        p = profile(h)
        for n in (8, 9):
            ts = target_sequence(h, p.i_star, n)
            assert ts.seq.sum() + 2 <= sigma_exact(h, n).value, (name, n)


def test_leading_coefficient_slope_for_triangle():
    # consecutive growth of the exact value recovers the profile slope
    # once the closed form is in force (n >= 6 for the triangle)
    k3 = complete_graph(3)
    slope = (sigma_exact(k3, 8).value - sigma_exact(k3, 6).value) // 2
    assert slope == profile(k3).sigma_tilde == 2


def test_leading_coefficient_k4_below_formula_threshold():
    # the regular complement obstructions flatten the growth below n = 9,
    # so the desk-scale slope between 6 and 8 undershoots the profile
    # coefficient; from n = 9 the 4n-4 form holds and the pointwise values
    # confirm the slope
    k4 = complete_graph(4)
    assert (sigma_exact(k4, 8).value - sigma_exact(k4, 6).value) // 2 == 2
    assert profile(k4).sigma_tilde == 4
    assert sigma_exact(k4, 10).value - sigma_exact(k4, 9).value == 4


def test_rho_canonical_realization_is_clique_join_double_star():
    for h in (complete_graph(3), complete_graph(4), cycle_graph(6)):
        p = profile(h)
        k, a = p.k, p.alpha
        for n in (8, 9, 10):
            w = rho(h, n)
            real = canonical_realization(w.seq)
            model = join(
                complete_graph(k - a - 2),
                double_star(w.params["starHigh"], w.params["starLow"]),
            )
            assert is_isomorphic(real.graph, model), (h, n)


def test_rho_refuted_at_small_lengths():
    for h in (complete_graph(3), complete_graph(4), cycle_graph(6)):
        for n in (8, 9, 10):
            assert not potentially(rho(h, n).seq, h).answer


def test_maximizer_distances_to_target_family():
    # stable graphs: every top-level refutation stays within a small fixed
    # distance of the family (distance 0 for most; the bipartite case
    # bumps tail entries by one, observed maximum 8 at these lengths);
    # for the unstable cliques some top-level refutation is farther than
    # n/3; for the 6-cycle the far witness sits one even sum level below
    # the top, so the top level itself stays close
    far_seen = {}
    for name, h in corpus().items():
        status = classify_sigma(h).status
        for n in (8, 9, 10):
            out = sigma_exact(h, n)
            fam = [t.seq for t in target_family(h, n)]
            dists = [min(l1_distance(m, f) for f in fam) for m in out.extremal_sequences]
            if status == "Stable":
                assert max(dists) <= 8, (name, n, dists)
            elif name in ("K3", "K4") and n >= 9:
                far_seen[(name, n)] = max(dists) > n / 3
    assert all(far_seen.values())
    # the 6-cycle's far refutation: the witness sequence, two below the top
    c6 = cycle_graph(6)
    for n in (8, 9, 10):
        w = rho(c6, n)
        assert w.seq.sum() == sigma_exact(c6, n).value - 4
        fam = [t.seq for t in target_family(c6, n)]
        assert min(l1_distance(w.seq, f) for f in fam) > n / 3
