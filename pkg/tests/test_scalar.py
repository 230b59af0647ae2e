from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bordersolve.errors import BadScalar, DivisionByZero, SingularAtZero, ZeroDenominator
from bordersolve.scalar import (
    Polynomial,
    RationalFunction,
    ScalarMode,
    T,
    eval_at_zero,
    format_scalar,
    parse_scalar,
    poly_gcd,
    rf_arith,
    rf_eval_at_zero,
    rf_reduce,
    scalar_is_zero,
)

P = lambda *c: Polynomial(c)  # noqa: E731  (ascending coefficients)


def brute_force_gcd(p: Polynomial, q: Polynomial, bound: int = 4) -> Polynomial:
    """Highest-degree monic common divisor among small integer polynomials."""
    best = Polynomial((1,))
    for deg in range(1, min(p.degree, q.degree) + 1):
        for coeffs in product(range(-bound, bound + 1), repeat=deg + 1):
            if coeffs[-1] == 0:
                continue
            cand = Polynomial(coeffs)
            if not (p % cand) and not (q % cand) and cand.degree > best.degree:
                best = cand.monic()
    return best


class TestPolynomial:
    def test_zero_is_empty(self):
        assert Polynomial([0, 0]).coeffs == ()
        assert Polynomial().degree == -1
        assert not Polynomial([0])

    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0) == P(1, 2)

    def test_divmod(self):
        q, r = divmod(P(-1, 0, 1), P(1, 1))
        assert q == P(-1, 1)
        assert r == Polynomial()

    def test_str(self):
        assert str(P(3, -2, 1)) == "t^2 - 2*t + 3"
        assert str(Polynomial()) == "0"


class TestGcd:
    def test_common_factor(self):
        assert poly_gcd(P(0, 1, 1), P(0, 1)) == P(0, 1)

    def test_coprime(self):
        assert poly_gcd(P(1, 1), P(2, 1)) == P(1)

    def test_derived_example(self):
        a, b = P(-2, 0, 2), P(4, 4)
        expected = brute_force_gcd(a, b)
        assert expected == P(1, 1)
        assert poly_gcd(a, b) == expected

    def test_zero_arguments(self):
        assert poly_gcd(P(2, 4), Polynomial()) == P(Fraction(1, 2), 1)
        assert poly_gcd(Polynomial(), Polynomial()) == Polynomial()


class TestReduce:
    def test_cancel_t(self):
        f = rf_reduce(P(0, 1, 1), P(0, 1))
        assert f.num == P(1, 1) and f.den == P(1)

    def test_paper_x2_expression(self):
        f = rf_reduce(P(12067595, 8516457), P(12067595, 8154227))
        assert f.den == P(Fraction(12067595, 8154227), 1)
        assert f.num == P(Fraction(12067595, 8154227), Fraction(8516457, 8154227))

    def test_zero_numerator(self):
        f = rf_reduce(Polynomial(), P(3, 1))
        assert f.num == Polynomial() and f.den == P(1)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            rf_reduce(P(1), Polynomial())


class TestArith:
    def test_add(self):
        assert rf_arith("add", T, RationalFunction(1)) == RationalFunction(P(1, 1))

    def test_self_division(self):
        x = RationalFunction(P(2, 1))
        assert rf_arith("div", x, x) == RationalFunction(1)

    def test_cancellation_across_factors(self):
        got = rf_arith("mul", 1 / T, T / (T + 1))
        assert got == RationalFunction(P(1), P(1, 1))

    def test_divide_by_zero(self):
        with pytest.raises(DivisionByZero):
            rf_arith("div", T, RationalFunction(0))

    def test_mixes_with_fractions(self):
        assert Fraction(1, 2) + T == RationalFunction(P(Fraction(1, 2), 1))
        assert 3 - T == RationalFunction(P(3, -1))
        assert 6 / (2 * T) == RationalFunction(P(3), P(0, 1))
        assert RationalFunction(5) == Fraction(5)
        assert hash(RationalFunction(5)) == hash(Fraction(5))


class TestEvalAtZero:
    def test_paper_x7_expression(self):
        f = rf_reduce(P(24135190, 41265687), P(24135190, 16308454))
        assert rf_eval_at_zero(f) == 1

    def test_simple(self):
        assert rf_eval_at_zero((T + 5) / (T + 2)) == Fraction(5, 2)

    def test_pole(self):
        with pytest.raises(SingularAtZero):
            rf_eval_at_zero(1 / T)

    def test_plain_values_pass_through(self):
        assert eval_at_zero(Fraction(3, 4)) == Fraction(3, 4)


class TestIsZero:
    def test_exact_zero(self):
        assert scalar_is_zero(Fraction(0), ScalarMode.EXACT)
        assert not scalar_is_zero(Fraction(1, 10**30), ScalarMode.EXACT)

    def test_rational_function_zero(self):
        assert scalar_is_zero(T - T, ScalarMode.EXACT)
        assert not scalar_is_zero(T, ScalarMode.EXACT)

    def test_float_threshold(self):
        assert scalar_is_zero(1.0e-15, ScalarMode.F64)
        assert not scalar_is_zero(1.0e-10, ScalarMode.F64)
        # relative to the operand scale
        assert scalar_is_zero(1.0e-6, ScalarMode.F64, scale=1.0e7)


class TestText:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("32", Fraction(32)),
            ("751/32", Fraction(751, 32)),
            ("-2.2838", Fraction(-22838, 10000)),
            ("+4", Fraction(4)),
            ("-6/4", Fraction(-3, 2)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_scalar(text) == value

    @pytest.mark.parametrize("text", ["", "1e5", "1/0", "abc", "1.", ".5", "2/-3", "1.5/2"])
    def test_parse_rejects(self, text):
        with pytest.raises(BadScalar):
            parse_scalar(text)

    def test_format_round_trip(self):
        for v in (Fraction(751, 32), Fraction(-3), Fraction(0)):
            assert parse_scalar(format_scalar(v)) == v
        assert format_scalar(0.1) == "0.1"


# property tests -----------------------------------------------------------

small = st.integers(min_value=-5, max_value=5).map(Fraction)
polys = st.lists(small, min_size=0, max_size=3).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rfs = st.builds(RationalFunction, polys, nonzero_polys)
nonzero_rfs = rfs.filter(lambda f: not f.is_zero())


@settings(max_examples=60, deadline=None)
@given(rfs, rfs, rfs)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(nonzero_rfs)
def test_inverse(a):
    assert a * (1 / a) == RationalFunction(1)


@settings(max_examples=60, deadline=None)
@given(rfs)
def test_reduce_idempotent(f):
    g = rf_reduce(f.num, f.den)
    assert g.num.coeffs == f.num.coeffs and g.den.coeffs == f.den.coeffs


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys, nonzero_polys)
def test_common_factor_cancels(p, q, r):
    assert rf_reduce(p * r, q * r) == rf_reduce(p, q)


@settings(max_examples=60, deadline=None)
@given(rfs, rfs, st.sampled_from(["add", "sub", "mul", "div"]))
def test_eval_at_zero_is_homomorphic(a, b, op):
    try:
        a0, b0 = rf_eval_at_zero(a), rf_eval_at_zero(b)
    except SingularAtZero:
        assume(False)
    if op == "div":
        assume(not b.is_zero() and b0 != 0)
    try:
        got = rf_eval_at_zero(rf_arith(op, a, b))
    except SingularAtZero:
        assume(False)
    expected = {"add": a0 + b0, "sub": a0 - b0, "mul": a0 * b0}.get(op)
    if op == "div":
        expected = a0 / b0
    assert got == expected
