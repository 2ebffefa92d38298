import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lace import ftriangle as ft
from lace.complexes import (
    SimplicialComplex,
    barycentric_subdivision,
    colored_subdivision,
    edgewise_subdivision,
    edgewise_subdivision_literal,
    extract_ftriangle,
    random_complex,
)
from lace.errors import OutOfRange, ParseError
from lace.operators import bary_D, colored_D, edgewise_U
from lace.poly import ONE, Poly, binom

S = SimplicialComplex


def P(*cs):
    return Poly(cs)


def corpus(count, max_dim, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        dim = rng.randint(0, max_dim)
        out.append(random_complex(rng.randint(dim + 1, dim + 4), dim, rng.randint(1, 5),
                                  seed=rng.randrange(10**9)))
    return out


def brute_faces(facets):
    """Closure by brute force over all subsets of the vertex set."""
    verts = sorted({v for f in facets for v in f})
    return {c for k in range(len(verts) + 1) for c in itertools.combinations(verts, k)
            if any(set(c) <= set(f) for f in facets)}


class TestBasics:
    def test_fvectors(self):
        assert S.simplex(3).f_vector() == (1, 3, 3, 1)
        assert barycentric_subdivision(S.simplex(3)).f_vector() == (1, 7, 12, 6)
        assert S.boundary_of_simplex(3).f_vector() == (1, 3, 3)
        assert S.simplex(0).f_vector() == (1,)

    def test_hpolys(self):
        assert S.boundary_of_simplex(3).h_polynomial() == P(1, 1, 1)
        assert barycentric_subdivision(S.simplex(3)).h_polynomial() == P(1, 4, 1)
        assert all(S.simplex(n).h_polynomial() == ONE for n in range(7))

    def test_facets_are_reduced(self):
        K = S.from_facets([[0, 1, 2], [1, 2], [2, 0], [3]])
        assert K.facets == ((3,), (0, 1, 2))
        assert not K.is_pure()
        assert K.dim == 2

    def test_faces_against_brute_force(self):
        for K in corpus(30, 3, 1):
            assert set(K.faces) == brute_faces(K.facets)

    def test_text_roundtrip(self, tmp_path):
        K = S.from_facets([[0, 1, 2], [2, 3], [4]])
        path = tmp_path / "k.cx"
        path.write_text("# a comment\n" + K.to_text())
        assert S.load(path) == K
        with pytest.raises(ParseError):
            S.from_text("0 1\n0 x\n")

    def test_is_flag(self):
        assert S.simplex(4).is_flag()
        assert not S.boundary_of_simplex(3).is_flag()
        assert barycentric_subdivision(S.boundary_of_simplex(3)).is_flag()


class TestSkeleton:
    def test_examples(self):
        sk = S.simplex(4).skeleton(2)
        assert set(sk.facets) == set(itertools.combinations(range(4), 3))
        for K in corpus(10, 3, 2):
            assert K.skeleton(K.dim) == K
        with pytest.raises(OutOfRange):
            S.simplex(3).skeleton(3)

    def test_partial_sums(self):
        # 50 pure random complexes of dimension <= 4 (n = dim+1 <= 5)
        rng = random.Random(2024)
        for _ in range(50):
            dim = rng.randint(1, 4)
            G = random_complex(dim + 3, dim, rng.randint(1, 6), seed=rng.randrange(10**9), pure=True)
            h = G.h_vector()
            acc = [sum(h[: i + 1]) for i in range(dim + 1)]
            assert G.skeleton(dim - 1).h_vector() == tuple(acc)


class TestConstructions:
    def test_sd_edge(self):
        sd = barycentric_subdivision(S.simplex(2))
        assert sd.f_vector() == (1, 3, 2)
        assert sd.h_polynomial() == P(1, 1)

    def test_esd_edge(self):
        e = edgewise_subdivision(S.simplex(2), 2)
        assert e.f_vector() == (1, 3, 2)
        assert e.h_polynomial() == P(1, 1)
        for r in range(1, 6):
            assert edgewise_subdivision(S.simplex(2), r).f_vector() == (1, r + 1, r)

    def test_esd_identity(self):
        for K in corpus(20, 3, 3):
            assert edgewise_subdivision(K, 1).f_vector() == K.f_vector()

    def test_sd1_is_sd(self):
        for K in corpus(20, 3, 4):
            assert colored_subdivision(K, 1).f_vector() == barycentric_subdivision(K).f_vector()

    def test_colored_triangle(self):
        assert colored_subdivision(S.simplex(3), 3).h_polynomial() == P(1, 34, 19)

    @pytest.mark.parametrize("r", [2, 3])
    def test_template_matches_literal(self, r):
        for K in corpus(15, 2, 5 + r):
            a = edgewise_subdivision(K, r)
            b = edgewise_subdivision_literal(K, r)
            assert a.f_vector() == b.f_vector()

    def test_label_invariance(self):
        rng = random.Random(6)
        for K in corpus(15, 3, 6):
            verts = list(K.vertices)
            perm = dict(zip(verts, rng.sample(range(100), len(verts))))
            L = K.relabel(perm)
            for r in (2, 3):
                assert edgewise_subdivision(K, r).f_vector() == edgewise_subdivision(L, r).f_vector()

    def test_euler_characteristic_and_top_faces(self):
        for K in corpus(25, 3, 7):
            for sub in (barycentric_subdivision(K), edgewise_subdivision(K, 2), edgewise_subdivision(K, 3),
                        colored_subdivision(K, 2)):
                assert sub.euler_characteristic() == K.euler_characteristic()
                assert sub.h_polynomial()(1) == sub.f_vector()[-1]


class TestOracles:
    def test_sd_against_operator(self):
        rng = random.Random(8)
        for _ in range(50):
            dim = rng.randint(0, 4)
            K = random_complex(dim + rng.randint(1, 3), dim, rng.randint(1, 4), seed=rng.randrange(10**9))
            assert barycentric_subdivision(K).h_polynomial() == bary_D(K.dim + 1, K.h_polynomial())

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_esd_against_operator(self, r):
        for K in corpus(25, 3, 9 + r):
            assert edgewise_subdivision(K, r).h_polynomial() == edgewise_U(K.dim + 1, r, K.h_polynomial())

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_colored_against_operator(self, r):
        for K in corpus(20, 3, 20 + r):
            assert colored_subdivision(K, r).h_polynomial() == colored_D(K.dim + 1, r, K.h_polynomial())

    @settings(max_examples=25)
    @given(st.integers(0, 10**6), st.integers(1, 3))
    def test_esd_hypothesis(self, seed, r):
        K = random_complex(5, 2, 4, seed=seed)
        assert edgewise_subdivision(K, r).h_polynomial() == edgewise_U(K.dim + 1, r, K.h_polynomial())


class TestExtraction:
    def test_sd(self):
        F = extract_ftriangle("sd", 4)
        assert F.rows[3] == (1, 7, 12, 6)
        assert F == ft.barycentric(4)

    def test_trivial(self):
        F = extract_ftriangle("trivial", 5)
        assert all(F.rows[j][i] == binom(j, i) for j in range(6) for i in range(j + 1))

    def test_esd_edge_row(self):
        for r in range(1, 5):
            assert extract_ftriangle("esd", 3, r).rows[2] == (1, r + 1, r)

    def test_stirling_interior(self):
        F = extract_ftriangle("sd", 5)
        B = ft.barycentric(5)
        for n in range(6):
            for k in range(n + 1):
                assert ft.interior_f(F, k, n) == ft.interior_f(B, k, n)

    def test_colored_matches_builtin(self):
        assert extract_ftriangle("sd_r", 3, 3) == ft.colored(3, 3)
        assert extract_ftriangle("esd", 3, 2) == ft.edgewise(2, 3)

    def test_bad_kind(self):
        with pytest.raises(ParseError):
            extract_ftriangle("cubical", 2)
