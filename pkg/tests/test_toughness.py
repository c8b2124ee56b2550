import math
from fractions import Fraction

import pytest

from conftest import random_connected_graph
from oracles import brute_toughness, ratio_of

from toughgraphs.graph import build_graph, delete_edge, mask_of
from toughgraphs.invariants import vertex_connectivity
from toughgraphs.operators import (
    SolidSpec,
    cartesian_product,
    complete,
    cycle,
    line_graph,
    path,
    solid_expand,
    square,
    subdivision,
)
from toughgraphs.ratio import INFINITE, Ratio
from toughgraphs.search import enumerate_connected
from toughgraphs.toughness import (
    CutCertificate,
    EngineConfig,
    LimitExceeded,
    degree_excess_filter,
    is_minimally_tough,
    parse_certificate,
    solid_reduced_toughness,
    toughness_exact,
    toughness_upper_search,
    twin_classes,
    verify_certificate,
    write_certificate,
)
from toughgraphs.families import gen_knp2_minus_matching, gen_knp3, gen_planar_chain


def sc52():
    return solid_expand(SolidSpec.uniform(cycle(5), 2))[0]


class TestCertificates:
    def test_chain_base_ok(self):
        fam = gen_planar_chain(4)
        assert verify_certificate(fam.graph, fam.base_certificate).ok

    def test_component_mismatch(self):
        fam = gen_planar_chain(4)
        bad = CutCertificate(fam.base_certificate.cut, 9, Ratio(12, 9))
        res = verify_certificate(fam.graph, bad)
        assert not res.ok and "component mismatch" in res.reason

    def test_ratio_mismatch(self):
        fam = gen_planar_chain(4)
        bad = CutCertificate(fam.base_certificate.cut, 8, Ratio(11, 8))
        res = verify_certificate(fam.graph, bad)
        assert not res.ok and "ratio mismatch" in res.reason

    def test_out_of_range(self):
        res = verify_certificate(cycle(4), CutCertificate(1 << 10, 2, Ratio(1, 2)))
        assert not res.ok

    def test_omega_must_be_at_least_two(self):
        g = cycle(4)
        res = verify_certificate(g, CutCertificate(1, 1, Ratio(1, 1)))
        assert not res.ok and "omega" in res.reason

    def test_knp2_rung_cut(self):
        fam = gen_knp2_minus_matching(7, 5)
        cut = mask_of(range(5))  # v_{1,1..5}
        cert = CutCertificate(cut, 2, Ratio(5, 2))
        assert verify_certificate(fam.graph, cert).ok

    def test_text_round_trip_byte_exact(self):
        fam = gen_planar_chain(4)
        text = write_certificate(fam.graph, fam.base_certificate)
        lines = text.split("\n")
        assert lines[0] == "cert v1"
        assert lines[2].startswith("cut: 0 3 ")
        assert lines[3] == "omega: 8"
        assert lines[4] == "ratio: 3/2"
        assert text.endswith("\n") and "\r" not in text
        g, cert = parse_certificate(text)
        assert g == fam.graph and cert == fam.base_certificate
        assert write_certificate(g, cert) == text

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_certificate("not a cert\n")
        with pytest.raises(ValueError):
            parse_certificate("cert v1\ngraph: Dhc\ncut: 0\nomega: x\nratio: 1/2\n")


class TestExact:
    def test_complete_graphs_infinite(self):
        for n in (1, 2, 5):
            res = toughness_exact(complete(n))
            assert res.value is INFINITE or res.value == INFINITE
            assert res.witness is None

    def test_disconnected_zero(self):
        g = build_graph(5, [(0, 1), (2, 3)])
        res = toughness_exact(g)
        assert res.value == Ratio(0, 1)
        assert res.witness.cut == 0 and res.witness.omega == 3

    def test_cycle5(self):
        res = toughness_exact(cycle(5))
        assert res.value == Ratio(1, 1)
        cut = res.witness.cut
        assert cut.bit_count() == 2 and res.witness.omega == 2

    def test_square_family(self):
        lg, _ = line_graph(subdivision(complete(4)))
        res = toughness_exact(square(lg))
        assert res.value == Ratio(3, 1)

    def test_k5p3(self):
        g, _ = cartesian_product(complete(5), path(3))
        res = toughness_exact(g)
        assert res.value == Ratio(2, 1)

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            toughness_exact(cycle(30))
        toughness_exact(cycle(12), EngineConfig(exhaustive_limit=12))

    def test_matches_oracle_small(self, rng):
        for _ in range(60):
            g = random_connected_graph(rng, rng.randint(2, 9), 0.4)
            res = toughness_exact(g)
            want = brute_toughness(g)
            if want is math.inf:
                assert res.value == INFINITE
            else:
                assert ratio_of(res.value) == want
                assert verify_certificate(g, res.witness).ok

    def test_witness_determinism_across_workers(self):
        g, _ = cartesian_product(complete(4), path(3))
        a = toughness_exact(g, EngineConfig(workers=1))
        b = toughness_exact(g, EngineConfig(workers=2, exhaustive_limit=26))
        c = toughness_exact(g, EngineConfig(workers=8))
        assert a.value == b.value == c.value
        assert a.witness == b.witness == c.witness

    def test_repeat_runs_identical(self):
        g = sc52()
        runs = [toughness_exact(g) for _ in range(3)]
        assert len({(r.witness.cut, r.witness.omega) for r in runs}) == 1


class TestUpperSearch:
    def test_cycle_reaches_optimum(self):
        cert = toughness_upper_search(cycle(5), budget_steps=2_000, seed=3)
        assert cert.ratio == Ratio(1, 1)

    def test_chain_m10_reaches_three_halves(self):
        fam = gen_planar_chain(10)
        cert = toughness_upper_search(fam.graph, budget_steps=100_000, seed=0)
        assert cert.ratio <= Ratio(3, 2)
        assert verify_certificate(fam.graph, cert).ok

    def test_deterministic_given_seed(self):
        g = sc52()
        a = toughness_upper_search(g, budget_steps=20_000, seed=11)
        b = toughness_upper_search(g, budget_steps=20_000, seed=11)
        assert a == b

    def test_always_valid_even_with_tiny_budget(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(3, 9), 0.5)
            if g.is_complete():
                continue
            cert = toughness_upper_search(g, budget_steps=5, seed=1, restarts=1)
            assert verify_certificate(g, cert).ok
            assert ratio_of(cert.ratio) >= brute_toughness(g)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            toughness_upper_search(complete(4), 100, 0)
        with pytest.raises(ValueError):
            toughness_upper_search(build_graph(4, [(0, 1), (2, 3)]), 100, 0)


class TestSolidReduction:
    def test_blown_up_cycle(self):
        spec = SolidSpec.uniform(cycle(5), 2)
        red = solid_reduced_toughness(spec)
        assert red.value == Ratio(4, 3)
        assert red.method == "reduced-solid"
        full = toughness_exact(solid_expand(spec)[0])
        assert red.value == full.value and red.witness == full.witness

    def test_blown_up_edge_is_c4(self):
        red = solid_reduced_toughness(SolidSpec.uniform(complete(2), 2))
        assert red.value == Ratio(1, 1)

    def test_identity_multiplicities_match_exact(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 8), 0.45)
            red = solid_reduced_toughness(SolidSpec.uniform(g, 1))
            full = toughness_exact(g)
            assert red.value == full.value
            if full.witness is not None:
                assert red.witness == full.witness

    def test_reduced_equals_full_on_mixed_multiplicities(self, rng):
        for _ in range(25):
            base = random_connected_graph(rng, rng.randint(2, 5), 0.5)
            mult = tuple(rng.randint(1, 2) for _ in range(base.n))
            spec = SolidSpec(base, mult)
            expanded, _ = solid_expand(spec)
            red = solid_reduced_toughness(spec)
            full = toughness_exact(expanded)
            assert red.value == full.value

    def test_twin_classes_detected(self):
        g, _ = solid_expand(SolidSpec.uniform(cycle(5), 2))
        classes = [c for c in twin_classes(g) if c.bit_count() > 1]
        assert len(classes) == 5

    def test_degenerate_bases(self):
        res = solid_reduced_toughness(SolidSpec.uniform(complete(2), 1))
        assert res.value == INFINITE and res.witness is None
        disconnected = build_graph(2, [])
        res = solid_reduced_toughness(SolidSpec.uniform(disconnected, 2))
        assert res.value == Ratio(0, 1) and res.witness.cut == 0

    def test_base_over_limit(self):
        with pytest.raises(LimitExceeded):
            solid_reduced_toughness(SolidSpec.uniform(cycle(30), 1))


class TestMinimality:
    def test_c4_minimal(self):
        rep = is_minimally_tough(cycle(4))
        assert rep.verdict is True
        assert rep.toughness == Ratio(1, 1)
        assert all(w.certificate.ratio == Ratio(1, 2) for w in rep.entries)

    def test_diamond_not_minimal(self):
        diamond = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        rep = is_minimally_tough(diamond)
        assert rep.verdict is False
        assert rep.failing_edges == [(0, 1)]

    def test_blown_up_cycle_minimal(self):
        rep = is_minimally_tough(sc52())
        assert rep.verdict is True and rep.toughness == Ratio(4, 3)

    def test_knp3_with_hints_uses_templates(self):
        fam = gen_knp3(5)
        rep = is_minimally_tough(fam.graph, hints=fam.edge_certificates)
        assert rep.verdict is True and rep.toughness == Ratio(2, 1)
        assert all(w.source == "template" for w in rep.entries)

    def test_heuristic_only_mode_never_proves_false(self):
        diamond = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        cfg = EngineConfig(allow_exhaustive_edges=False, minimality_heuristic_steps=50)
        rep = is_minimally_tough(diamond, cfg)
        assert rep.verdict is None
        assert rep.inconclusive_edges

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            is_minimally_tough(complete(4))
        with pytest.raises(ValueError):
            is_minimally_tough(build_graph(4, [(0, 1), (2, 3)]))

    def test_edge_orbit_mode_matches_default(self):
        g = sc52()
        plain = is_minimally_tough(g)
        orbits = is_minimally_tough(g, EngineConfig(use_edge_orbits=True))
        assert plain.verdict == orbits.verdict
        assert plain.toughness == orbits.toughness
        for w in orbits.entries:
            assert w.ok and w.certificate.ratio < Ratio(4, 3)


class TestProperties:
    def test_edge_deletion_monotone(self, rng):
        for _ in range(60):
            g = random_connected_graph(rng, rng.randint(3, 9), 0.45)
            if g.is_complete():
                continue
            t = toughness_exact(g).value
            e = g.edges()[rng.randrange(g.edge_count())]
            te = toughness_exact(delete_edge(g, e)).value
            assert te <= t

    def test_half_connectivity_bound(self, small_corpus):
        for g in small_corpus:
            if g.is_complete():
                continue
            t = toughness_exact(g).value
            kappa = vertex_connectivity(g)
            # 2t <= kappa as exact rationals
            assert 2 * t.p <= kappa * t.q

    def test_any_valid_certificate_upper_bounds(self, rng):
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(3, 8), 0.5)
            if g.is_complete():
                continue
            t = toughness_exact(g).value
            cert = toughness_upper_search(g, budget_steps=300, seed=5, restarts=2)
            assert t <= cert.ratio


class TestDegreeExcess:
    def test_blown_up_cycle_is_hit(self):
        rep = degree_excess_filter(sc52())
        assert rep.is_hit
        assert rep.toughness == Ratio(4, 3)
        assert (rep.delta, rep.ceil_2t) == (4, 3)
        assert rep.delta_over_t == Ratio(3, 1)
        assert rep.regular

    def test_cycle_not_hit(self):
        rep = degree_excess_filter(cycle(5))
        assert not rep.is_hit and rep.reason == "degree within ceiling"

    def test_complete_not_hit(self):
        rep = degree_excess_filter(complete(4))
        assert not rep.is_hit and rep.reason == "complete"

    def test_degree_screen(self):
        rep = degree_excess_filter(cycle(5), min_delta=3)
        assert not rep.is_hit and rep.reason == "degree screen"
