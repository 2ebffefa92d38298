import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys
from lace import ftriangle as ft
from lace.errors import EndpointIsRoot, NotRealRooted
from lace.operators import build_p_rows
from lace.poly import ONE, ZERO, Poly, mul
from lace.roots import (
    interlace_pattern,
    interlaces,
    is_interlacing_sequence,
    is_real_rooted,
    isolate_roots,
    recipe_transform,
    sturm_root_count,
    verify_real_rooted,
)

x = sympy.symbols("x")


def P(*cs):
    return Poly(cs)


def from_roots(roots, lead=1):
    p = Poly([lead])
    for r in roots:
        p = mul(p, Poly([-Fraction(r), 1]))
    return p


def literal_interlaces(alpha, beta):
    """Oracle on known root lists: ... <= a2 <= b2 <= a1 <= b1."""
    a = sorted(alpha, reverse=True)
    b = sorted(beta, reverse=True)
    if not len(a) <= len(b) <= len(a) + 1:
        return False
    merged_ok = all(a[i] <= b[i] for i in range(len(a)))
    return merged_ok and all(b[i + 1] <= a[i] for i in range(len(a)) if i + 1 < len(b))


class TestSturm:
    def test_examples(self):
        assert sturm_root_count(P(-1, 0, 1), -2, 2) == 2
        assert sturm_root_count(P(1, 0, 1), -10, 10) == 0
        assert sturm_root_count(P(1, 34, 19), -2, 0) == 2

    def test_endpoint(self):
        with pytest.raises(EndpointIsRoot):
            sturm_root_count(P(-1, 0, 1), 1, 2)

    @given(polys(max_degree=7), st.integers(-6, 5))
    def test_against_sympy(self, p, lo):
        if p.degree < 1 or p(lo) == 0 or p(lo + 3) == 0:
            return
        sp = sympy.Poly([int(c) for c in reversed(p.coeffs)], x)
        want = len(set(r for r in sympy.real_roots(sp) if lo < r <= lo + 3))
        assert sturm_root_count(p, lo, lo + 3) == want


class TestRealRooted:
    def test_examples(self):
        assert is_real_rooted(ZERO).verdict == "real_rooted"
        assert is_real_rooted(P(1, 1, 1)).verdict == "not_real_rooted"
        assert is_real_rooted(P(1, 4, 1)).verdict == "real_rooted"

    def test_isolation_examples(self):
        ivs = isolate_roots(P(-2, 0, 1))
        assert len(ivs) == 2
        for (lo, hi, m), s in zip(ivs, (-1, 1)):
            assert m == 1 and lo < s * sympy.sqrt(2) < hi
            assert hi - lo <= Fraction(1, 2**20)
        (iv,) = isolate_roots(P(0, 0, 1))
        assert iv.multiplicity == 2 and iv.lo < 0 < iv.hi
        a, b = isolate_roots(P(0, -1, 1), width=Fraction(1, 4))
        assert a.hi < b.lo

    def test_not_real_rooted_raises(self):
        with pytest.raises(NotRealRooted):
            isolate_roots(P(1, 0, 1))

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=8), st.integers(1, 3))
    def test_products_of_linear_factors(self, roots, lead):
        p = from_roots(roots, lead)
        cert = is_real_rooted(p)
        assert cert.positive
        assert verify_real_rooted(p, cert)
        assert sum(w["multiplicity"] for w in cert.witnesses) == len(roots)
        assert isolate_roots(p).root_count == len(roots)
        # one witness interval per distinct root, each containing it
        distinct = sorted(set(roots))
        ivs = sorted((w["lo"], w["hi"]) for w in cert.witnesses)
        assert all(lo < r < hi for (lo, hi), r in zip(ivs, distinct))

    @given(polys(max_degree=7))
    def test_agrees_with_sympy(self, p):
        if p.degree < 1:
            return
        sp = sympy.Poly([int(c) for c in reversed(p.coeffs)], x)
        want = len(sympy.real_roots(sp)) == p.degree
        assert bool(is_real_rooted(p)) == want

    def test_certificate_json(self):
        cert = is_real_rooted(P(-1, 0, 1))
        d = cert.to_dict()
        assert list(d) == ["subject", "verdict", "witnesses", "hypothesis_report"]
        assert set(d["witnesses"][0]) == {"lo", "hi", "multiplicity"}


class TestInterlacing:
    def test_examples(self):
        q = P(3, 1)
        assert interlaces(ZERO, q)
        assert interlaces(q, ZERO)
        assert interlaces(P(1, 1), P(2, 3, 1))
        assert interlaces(P(-1, 1), P(0, -2, 1))
        assert interlaces(P(0, 1), P(-1, 1))
        assert not interlaces(P(0, -2, 1), P(-1, 1))

    def test_pattern_counts(self):
        assert interlace_pattern([0], [1, 0, -1]) is not None
        assert interlace_pattern([], [1]) is None

    def test_non_real_rooted(self):
        with pytest.raises(NotRealRooted):
            interlaces(P(1, 0, 1), P(1, 1))

    @given(st.lists(st.integers(-4, 4), max_size=5), st.lists(st.integers(-4, 4), max_size=5))
    def test_against_known_roots(self, alpha, beta):
        p, q = from_roots(alpha), from_roots(beta)
        assert bool(interlaces(p, q)) == literal_interlaces(alpha, beta)

    def test_random_products(self):
        rng = random.Random(7)
        for _ in range(500):
            alpha = [rng.randint(-6, 6) for _ in range(rng.randint(0, 4))]
            beta = [rng.randint(-6, 6) for _ in range(rng.randint(0, 4))]
            if rng.random() < 0.3:
                beta = sorted(alpha) + [rng.randint(-6, 6)]
            p, q = from_roots(alpha), from_roots(beta)
            assert bool(interlaces(p, q)) == literal_interlaces(alpha, beta), (alpha, beta)

    def test_nonnegative_combinations_are_real_rooted(self):
        rng = random.Random(11)
        done = 0
        while done < 100:
            alpha = [rng.randint(-8, 0) for _ in range(rng.randint(1, 4))]
            beta = [rng.randint(-8, 0) for _ in range(len(alpha) + rng.randint(0, 1))]
            p, q = from_roots(alpha), from_roots(beta)
            if not interlaces(p, q):
                continue
            lam, mu = Fraction(rng.randint(0, 9), 7), Fraction(rng.randint(0, 9), 5)
            assert is_real_rooted(lam * p + mu * q)
            done += 1


class TestSequences:
    def test_examples(self):
        assert is_interlacing_sequence([P(0, 1), P(-1, 1)])
        with pytest.raises(NotRealRooted):
            is_interlacing_sequence([P(1, 1), P(1, 0, 1)])

    def test_failure_reports_pair(self):
        cert = is_interlacing_sequence([P(1, 1), P(0, 0, 1), P(-3, 1)])
        assert not cert
        assert cert.failed_conditions()

    def test_recipe_examples(self):
        assert recipe_transform([ONE], 0) == ONE
        assert recipe_transform([ONE], 1) == P(0, 1)
        assert recipe_transform([ONE, ONE], 1) == P(1, 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_barycentric_rows_and_recipe(self, n):
        table = build_p_rows(ft.barycentric(n + 1), n + 1)
        row = table.Q(n)
        assert is_interlacing_sequence(row)
        lifted = [recipe_transform(row, k) for k in range(n + 2)]
        assert lifted == list(table.Q(n + 1))
        assert is_interlacing_sequence(lifted)
