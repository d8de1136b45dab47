import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cspkit.errors import NegativeExponent, OutOfDomain
from cspkit.qpoly import (
    ONE,
    Q,
    ZERO,
    IntPoly,
    cyclotomic,
    eval_at_root,
    is_palindromic,
    named_polynomial,
    q_binomial,
    q_catalan,
    q_int,
    q_lucas_eval,
    q_multinomial,
    reduce_at_order,
)

from oracles import eval_complex, qbinom_by_inv, rounded

polys = st.lists(st.integers(-50, 50), max_size=12).map(IntPoly)


def P(*c):
    return IntPoly(c)


class TestIntPoly:
    def test_trims_trailing_zeros(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([0, 0]).is_zero()
        assert ZERO.degree() == -1

    def test_str(self):
        assert str(P(1, 0, 0, 0, 1, 1, 0, 0, 1)) == "1 + q^4 + q^5 + q^8"
        assert str(ZERO) == "0"

    def test_shift_rejects_negative_powers(self):
        with pytest.raises(NegativeExponent):
            Q.shift(-2)
        assert P(0, 0, 3).shift(-2) == 3

    def test_json_round_trip(self):
        f = q_binomial(30, 15)
        text = json.dumps(f.to_json())
        assert all(isinstance(x, str) for x in json.loads(text))
        assert IntPoly.from_json(json.loads(text)) == f

    def test_exact_div_refuses_remainder(self):
        with pytest.raises(Exception):
            P(1, 1, 1).exact_div(P(1, 1))

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        assert (a * b) * c == a * (b * c)

    @given(polys, st.integers(1, 9))
    def test_divmod_by_monic(self, a, d):
        phi = cyclotomic(d)
        quo, rem = a.divmod(phi)
        assert quo * phi + rem == a
        assert rem.degree() < phi.degree()

    @given(polys, st.integers(-3, 3))
    def test_call_matches_horner(self, a, x):
        assert a(x) == sum(c * x**i for i, c in enumerate(a.coeffs))


class TestQBinomial:
    def test_small_value(self):
        assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)

    def test_empty_product(self):
        assert q_binomial(7, 0) == ONE

    def test_outside_range_is_zero(self):
        assert q_binomial(3, 4) == ZERO
        assert q_binomial(3, -1) == ZERO

    @pytest.mark.parametrize("n,k", [(6, 3), (7, 2), (8, 4), (9, 5)])
    def test_inversion_generating_function(self, n, k):
        assert list(q_binomial(n, k).coeffs) == qbinom_by_inv(n, k)

    @given(st.integers(0, 25), st.integers(0, 25))
    def test_symmetry_and_count(self, n, k):
        assert q_binomial(n, k) == q_binomial(n, n - k)
        assert q_binomial(n, k)(1) == comb(n, k)

    @given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
    @settings(max_examples=60)
    def test_vandermonde(self, a, b, c):
        rhs = ZERO
        for j in range(c + 1):
            e = j * (a - c + j)
            if e < 0:
                assert q_binomial(a, c - j) * q_binomial(b, j) == ZERO
                continue
            rhs = rhs + (q_binomial(a, c - j) * q_binomial(b, j)).shift(e)
        assert q_binomial(a + b, c) == rhs

    def test_multinomial(self):
        f = q_multinomial(5, [2, 2, 1])
        assert f == q_binomial(5, 2) * q_binomial(3, 2)
        assert f(1) == 30
        assert q_multinomial(5, [2, 2]) == ZERO

    def test_q_int(self):
        assert q_int(4) == P(1, 1, 1, 1)
        assert q_int(0) == ZERO


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic(1) == P(-1, 1)
        assert cyclotomic(4) == P(1, 0, 1)
        assert cyclotomic(6) == P(1, -1, 1)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_product_over_divisors(self, n):
        prod = ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly([-1] + [0] * (n - 1) + [1])


class TestEvalAtRoot:
    def test_catalan_at_cube_root(self):
        v = eval_at_root(q_catalan(3), 6, 3)
        assert v.is_integer and v.value == 3

    def test_d_zero_is_value_at_one(self):
        f = q_binomial(8, 3)
        assert eval_at_root(f, 5, 0).value == f(1)

    def test_skew_maj_at_minus_one(self):
        y = named_polynomial("Y_NS", n=2, s=1)
        assert y == P(1, 1, 1, 1, 1)
        assert eval_at_root(y, 4, 2).value == 1

    def test_non_integer_is_a_value(self):
        v = eval_at_root(P(0, 1), 3, 1)
        assert not v.is_integer
        assert v.value is None
        assert v.to_json() == {"non_integer_residue": ["0", "1"]}

    @given(polys, st.integers(1, 12), st.integers(0, 30))
    @settings(max_examples=150)
    def test_agrees_with_complex_evaluation(self, f, m, d):
        v = eval_at_root(f, m, d)
        z = eval_complex(list(f.coeffs), m, d)
        if v.is_integer:
            assert rounded(z) == v.value
        else:
            assert abs(eval_complex(list(v.residue.coeffs), m, d) - z) < 1e-6

    @given(polys, st.integers(1, 12), st.integers(0, 40))
    def test_depends_only_on_gcd(self, f, m, j):
        from math import gcd

        assert eval_at_root(f, m, j).residue == eval_at_root(f, m, gcd(j, m)).residue

    def test_reduce_at_order_one_sums_coefficients(self):
        assert reduce_at_order(P(3, -1, 4), 1) == 6


class TestQLucas:
    def test_small(self):
        v = q_lucas_eval(4, 2, 2)
        assert v.value == 2

    @pytest.mark.parametrize("n,k", [(5, 2), (9, 4), (0, 0)])
    def test_order_one_is_binomial(self, n, k):
        assert q_lucas_eval(n, k, 1).value == comb(n, k)

    def test_agrees_with_reduction(self):
        for n in range(0, 16):
            for k in range(n + 1):
                for o in range(1, 2 * n + 1):
                    if (2 * n) % o == 0:
                        assert q_lucas_eval(n, k, o).residue == eval_at_root(q_binomial(n, k), o, 1).residue


class TestPalindromic:
    def test_narayana_row(self):
        row = IntPoly([0] + [named_polynomial("NAR", n=5, k=k)(1) for k in range(1, 6)])
        assert row == P(0, 1, 10, 20, 10, 1)
        assert is_palindromic(row)

    def test_zero(self):
        assert is_palindromic(ZERO)

    def test_shift_invariant(self):
        assert is_palindromic(P(0, 0, 1, 2, 1))
        assert not is_palindromic(P(1, 2))

    def test_triangulation_ears(self):
        assert not is_palindromic(named_polynomial("TRI_EAR", n=6, k=2))


class TestNamedPolynomials:
    def test_catalan_forms(self):
        for n in range(0, 31):
            c = q_catalan(n)
            assert c == q_binomial(2 * n, n).exact_div(q_int(n + 1))

    def test_catalan_3(self):
        assert q_catalan(3) == P(1, 0, 1, 1, 1, 0, 1)

    def test_refined_configurations_example(self):
        assert named_polynomial("QNCC", n=4, e=2, l=0) == P(1, 0, 1).shift(6)
        assert named_polynomial("QNCC", n=4, e=0, l=2) == q_binomial(4, 2).shift(10)

    def test_cyclic_descent_catalan_small(self):
        assert named_polynomial("G_CDES", n=2, k=2) == P(1, 0, 1)
        assert named_polynomial("G_CDES", n=2, k=2) == q_catalan(2)

    def test_triangulation_ears_refine_catalan(self):
        # the six-gon splits 12 + 2
        a = named_polynomial("TRI_EAR", n=6, k=2)
        b = named_polynomial("TRI_EAR", n=6, k=3)
        assert a(1) == 12 and b(1) == 2
        assert a + b == q_catalan(4)

    def test_narayana_edge(self):
        assert named_polynomial("NAR", n=0, k=0) == ONE
        assert named_polynomial("NAR", n=3, k=0) == ZERO

    def test_marked_candidate_counts(self):
        for n in range(1, 9):
            for e in range(n // 2 + 1):
                for l in range(n - 2 * e + 1):
                    a = named_polynomial("QNCCB", n=n, e=e, l=l)
                    assert a(1) == (e + 1) * named_polynomial("QNCC", n=n, e=e, l=l)(1)

    def test_marked_candidate_sums_to_type_b_narayana(self):
        for n in range(1, 21):
            for k in range(n + 1):
                total = ZERO
                for e in range(k + 1):
                    if 2 * e + (k - e) <= n:
                        total = total + named_polynomial("QNCCB", n=n, e=e, l=k - e)
                assert total == named_polynomial("NARB", n=n, k=k), (n, k)

    def test_pi_b_pairs(self):
        for n in range(1, 26):
            for k in range(n + 1):
                pair = named_polynomial("PI_B_COEFF", n=n, k=2 * k) + named_polynomial("PI_B_COEFF", n=n, k=2 * k + 1)
                assert pair == (q_binomial(n, k) * q_binomial(n, k)).shift(k * k)

    def test_skew_endpoints(self):
        for n in range(0, 10):
            assert named_polynomial("Y_NS", n=n, s=0) == q_catalan(n)
            assert named_polynomial("X_NS", n=n, s=0) == q_catalan(n).shift(n)
            assert named_polynomial("Y_NS", n=n, s=n) == q_binomial(2 * n, n)

    def test_schur_interpolant_endpoints(self):
        # s = k is a plain squared binomial, s = 0 the Narayana polynomial
        for n in range(1, 8):
            for k in range(0, n):
                assert named_polynomial("SCHUR_INTERP", n=n, k=k, s=k) == (q_binomial(n, k) * q_binomial(n, k)).shift(k * (k + 1))

    def test_domain_errors(self):
        with pytest.raises(OutOfDomain):
            named_polynomial("TRI_EAR", n=6, k=4)
        with pytest.raises(OutOfDomain):
            named_polynomial("TRI_EAR", n=3, k=2)
        with pytest.raises(OutOfDomain):
            named_polynomial("NAR", n=3)
        with pytest.raises(OutOfDomain):
            named_polynomial("CAT", n=3, k=1)
        with pytest.raises(OutOfDomain):
            named_polynomial("NOPE", n=1)
        with pytest.raises(OutOfDomain):
            named_polynomial("CAT", n=-1)

    @given(st.integers(1, 15))
    def test_counts_at_one(self, n):
        assert named_polynomial("CATB", n=n)(1) == comb(2 * n, n)
        assert named_polynomial("TWIST_CAT", n=n)(1) == comb(2 * n + 2, n + 1) // (n + 2)
