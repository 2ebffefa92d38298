import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lace import ftriangle as ft
from lace.batch import MainTheoremBatch, random_h, run_main_theorem_batch, CorpusEntry
from lace.errors import DegreeExceedsBound
from lace.operators import apply_DF, bary_D
from lace.poly import Poly, symmetric_decomposition
from lace.roots import interlaces, is_real_rooted
from lace.theorems import (
    c_ineq1,
    c_ineq2,
    certify_main_theorem,
    hvec_inequalities,
    ratio_a,
    ratio_chain,
    skeleton_theorem_check,
    strong_interlacing_check,
)


def P(*cs):
    return Poly(cs)


class TestStrongInterlacing:
    def test_barycentric(self):
        cert = strong_interlacing_check(ft.barycentric(6), 6)
        assert cert.positive
        assert dict(cert.hypothesis_report)["(ii) theta(sigma_6) = 0"]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_edgewise_large_r(self, n):
        for r in (n, n + 1):
            assert strong_interlacing_check(ft.edgewise(r, n), n).positive

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_colored(self, r):
        cert = strong_interlacing_check(ft.colored(r, 5), 5)
        assert cert.positive
        for m in range(2, 6):
            assert dict(cert.hypothesis_report)[f"(ii) theta(sigma_{m}) interlaced by h_F(sigma_{m - 1})"]

    def test_small_r_edgewise_fails(self):
        cert = strong_interlacing_check(ft.edgewise(2, 5), 5)
        assert not cert.positive
        assert cert.failed_conditions()

    def test_include_top_is_stronger(self):
        F = ft.colored(2, 4)
        a = strong_interlacing_check(F, 4)
        b = strong_interlacing_check(F, 4, include_top=True)
        assert set(dict(a.hypothesis_report)) < set(dict(b.hypothesis_report))


class TestMainTheorem:
    def test_bary_one_plus_cube(self):
        F = ft.barycentric(3)
        h = P(1, 0, 0, 1)
        cert = certify_main_theorem(F, 3, h, "a")
        assert cert.verdict in ("nonneg_real_rooted_sym_decomp", "interlacing_sym_decomp")
        assert all(ok for name, ok in dict(cert.hypothesis_report).items() if name.startswith("c-ineq1"))
        w = cert.witnesses[0]
        a, b = Poly.from_json(w["a"]), Poly.from_json(w["b"])
        assert a + b.shift(1) == bary_D(3, h)
        # D_3(1 + x^3) = D_3(1) + D_3(x^3) = (1+4x+x^2) + x(1+4x+x^2)
        assert bary_D(3, h) == P(1, 5, 5, 1)

    def test_hand_decomposition(self):
        # p = 1+5x+5x^2+x^3 with n = 3: a symmetric of degree 3, b of degree 2
        d = symmetric_decomposition(P(1, 5, 5, 1), 3)
        assert d.a == P(1, 5, 5, 1) and d.b == Poly([])

    def test_violation_is_flagged(self):
        cert = certify_main_theorem(ft.barycentric(2), 2, P(2, 0, 1), "a")
        assert dict(cert.hypothesis_report)["c-ineq1@i=0"] is False
        assert cert.verdict != "counterexample"

    @pytest.mark.parametrize("n", range(2, 7))
    def test_low_degree_variant_b(self, n):
        # degree <= n/2 with nonnegative coefficients: hypotheses hold vacuously
        rng = random.Random(n)
        for F in (ft.barycentric(n), ft.colored(2, min(n, 5)) if n <= 5 else ft.barycentric(n)):
            for _ in range(20):
                h = Poly([rng.randint(0, 6) for _ in range(n // 2 + 1)])
                if not h:
                    continue
                cert = certify_main_theorem(F, n, h, "b")
                assert all(dict(cert.hypothesis_report).values()), cert.failed_conditions()
                assert cert.verdict == "interlacing_sym_decomp"

    def test_degree_bound(self):
        with pytest.raises(DegreeExceedsBound):
            certify_main_theorem(ft.barycentric(2), 2, P(1, 0, 0, 1), "a")

    def test_variant_b_rejects_top(self):
        cert = certify_main_theorem(ft.barycentric(3), 3, P(1, 0, 0, 1), "b")
        assert dict(cert.hypothesis_report)["c_n=0"] is False

    def test_witness_reconstructs(self):
        F = ft.colored(3, 4)
        h = P(1, 2, 3, 4, 5)
        cert = certify_main_theorem(F, 4, h, "a")
        w = cert.witnesses[0]
        a, b = Poly.from_json(w["a"]), Poly.from_json(w["b"])
        assert a + b.shift(1) == apply_DF(F, 4, h)
        assert cert.verdict == "interlacing_sym_decomp"

    @settings(max_examples=40)
    @given(st.integers(1, 5), st.sampled_from(["a", "b"]), st.integers(0, 10**6))
    def test_random_hypothesis_h(self, n, variant, seed):
        h = Poly(random_h(random.Random(seed), n, variant))
        for F in (ft.barycentric(n), ft.colored(2, n), ft.edgewise(n + 1, n)):
            cert = certify_main_theorem(F, n, h, variant)
            if cert.verdict == "counterexample":
                # only the interlacing clause can fail, and only through a broken ratio chain
                assert not all(ok for _, ok in ratio_chain([h[i] for i in range(n + 1)], variant))
                continue
            assert cert.verdict in ("nonneg_real_rooted_sym_decomp", "interlacing_sym_decomp")

    def test_small_batch(self):
        corpus = [CorpusEntry("barycentric", 4), CorpusEntry("colored", 3, 3), CorpusEntry("esd", 3, 3)]
        res = run_main_theorem_batch(MainTheoremBatch(samples=40, seed=7, corpus=corpus))
        assert res.ok, res.failures[:3]
        assert res.runs == 240 and res.interlacing_claims > 0


class TestInequalities:
    def test_symmetric(self):
        rep = hvec_inequalities([1, 4, 1], "CMstar")
        assert rep == [("CMstar@i=0", True), ("CMstar@i=1", True)]

    def test_ball_type_vector(self):
        h = [1, 3, 4, 1, 1]
        assert dict(hvec_inequalities(h, "c1"))["c-ineq1@i=1"] is False  # 1+3 > 1+1
        assert hvec_inequalities(h, "c2")[0] == ("c_n=0", False)
        rep = hvec_inequalities(h, "tzanakii")
        # ratios h_i/h_{4-i}: 3/1, 4/4, 1/3 decrease
        assert rep and all(ok for _, ok in rep)

    def test_tzanakii_skips_zeros(self):
        rep = hvec_inequalities([1, 2, 0, 1, 1], "tzanakii")
        assert [name for name, _ in rep] == ["tzanakii@i=1,j=3"]

    @given(st.lists(st.integers(0, 9), min_size=1, max_size=8))
    def test_nondecreasing_vectors(self, v):
        v = sorted(v)
        assert all(ok for _, ok in c_ineq1(v))
        assert all(ok for _, ok in ratio_a(v))

    @given(st.lists(st.integers(0, 9), min_size=2, max_size=8))
    def test_nonincreasing_vectors(self, v):
        v = sorted(v, reverse=True)[:-1] + [0]
        assert all(ok for _, ok in c_ineq2(v))

    def test_unknown(self):
        with pytest.raises(ValueError):
            hvec_inequalities([1, 2], "nope")


class TestSkeleton:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_boundary_of_simplex_case(self, n):
        gamma = [1] + [0] * (n + 1)
        cert = skeleton_theorem_check(ft.barycentric(n + 1), gamma, n)
        assert cert.positive, cert.failed_conditions()
        # Delta is the boundary of sigma_{n+1}, h-vector all ones
        assert Poly.from_json(cert.witnesses[0]["h_F(Gamma)"]) == bary_D(n + 1, Poly([1]))

    def test_n_zero(self):
        cert = skeleton_theorem_check(ft.barycentric(1), [1, 0], 0)
        assert cert.positive

    def test_random_colored(self):
        rng = random.Random(11)
        for n in range(1, 5):
            for r in (2, 3):
                F = ft.colored(r, n + 1)
                for _ in range(5):
                    gamma = [1] + [rng.randint(0, 5) for _ in range(n + 1)]
                    cert = skeleton_theorem_check(F, gamma, n)
                    assert cert.positive, (n, r, gamma, cert.failed_conditions())

    def test_length_check(self):
        with pytest.raises(ValueError):
            skeleton_theorem_check(ft.barycentric(3), [1, 2], 2)

    def test_interlacing_witness(self):
        F = ft.barycentric(4)
        cert = skeleton_theorem_check(F, [1, 2, 3, 1, 0], 3)
        d = Poly.from_json(cert.witnesses[0]["h_F(Delta)"])
        g = Poly.from_json(cert.witnesses[0]["h_F(Gamma)"])
        assert is_real_rooted(d) and is_real_rooted(g)
        assert interlaces(d, g)


class TestRatioChain:
    def test_zero_pair_breaks_neighbour_form(self):
        c = [2, 0, 0, 1, 0, 4]
        assert all(ok for _, ok in ratio_a(c))
        assert not all(ok for _, ok in ratio_chain(c))

    @given(st.lists(st.integers(1, 9), min_size=2, max_size=8))
    def test_agree_on_positive_vectors(self, c):
        # with positive entries the neighbour products chain transitively
        assert all(ok for _, ok in ratio_a(c)) == all(ok for _, ok in ratio_chain(c))

    def test_literal_counterexample(self):
        # all stated hypotheses hold, yet the decomposition is not interlacing
        cert = certify_main_theorem(ft.edgewise(5, 5), 5, P(2, 0, 0, 1, 0, 4), "a")
        assert not cert.failed_conditions()
        assert cert.verdict == "counterexample"
