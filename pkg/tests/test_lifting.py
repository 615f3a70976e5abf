"""Tests for the SL_{n+1} realization, Gaussian decomposition and rank-2 moves"""

from fractions import Fraction

import pytest
import sympy

from geolift.cartan import build_cartan, longest_word, reduced_words
from geolift.exceptions import (
    IndexOutOfRange,
    LengthMismatch,
    LiftingError,
    NonPositiveParameter,
    NotInG0,
    UnsupportedRank2Type,
    UnsupportedType,
    ZeroTorusParameter,
)
from geolift.lifting import (
    GroupMatrix,
    chevalley_omega,
    gauss_decompose,
    gen_torus,
    gen_x,
    gen_y,
    leading_minors,
    omega_of_minus_word,
    rank2_words,
    solve_rank2_move,
    to_fraction,
    to_rational,
    verify_rank2_move,
    verify_zeta_formula,
    x_minus_word,
    x_word,
    zeta,
    zeta_formula,
    zeta_formula_expressions,
)
from geolift.tropical import sf_eval


def _point(rng, n):
    return [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]


class TestGenerators:
    def test_x_and_y(self, a2):
        assert gen_x(a2, 1, 3).entries.tolist() == [[1, 3, 0], [0, 1, 0], [0, 0, 1]]
        assert gen_y(a2, 2, 5).entries.tolist() == [[1, 0, 0], [0, 1, 0], [0, 5, 1]]

    def test_torus(self, a2):
        h = gen_torus(a2, 2, Fraction(2, 3))
        assert [h[k, k] for k in range(3)] == [1, sympy.Rational(2, 3), sympy.Rational(3, 2)]
        with pytest.raises(ZeroTorusParameter):
            gen_torus(a2, 1, 0)

    def test_index_and_type(self, a2, b2):
        with pytest.raises(IndexOutOfRange):
            gen_x(a2, 3, 1)
        with pytest.raises(UnsupportedType):
            gen_x(b2, 1, 1)

    def test_determinant_one(self):
        with pytest.raises(LiftingError):
            GroupMatrix.from_rows([[2, 0], [0, 1]])

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            to_rational(0.5)
        assert to_fraction(to_rational("3/4")) == Fraction(3, 4)


class TestWords:
    def test_x_word(self, a2):
        x = x_word(a2, (1, 2), [1, 1])
        assert x.entries.tolist() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
        assert x.is_upper_unipotent()

    def test_length_mismatch(self, a2):
        with pytest.raises(LengthMismatch):
            x_word(a2, (1, 2, 1), [1, 2])

    def test_minus_word_needs_positive(self, a1):
        with pytest.raises(NonPositiveParameter):
            x_minus_word(a1, (1,), [0])
        with pytest.raises(NonPositiveParameter):
            x_minus_word(a1, (1,), [-2])

    def test_inverse(self, a2):
        x = x_minus_word(a2, (1, 2, 1), [1, 2, 3])
        assert x @ x.inverse() == GroupMatrix.identity(3)


class TestPositivity:
    """Words of w0 at positive parameters give nonnegative matrices with positive leading minors"""

    @pytest.mark.parametrize("rank", [2, 3])
    @pytest.mark.parametrize("build", [x_word, x_minus_word, omega_of_minus_word])
    def test_every_reduced_word(self, rank, build, rng):
        datum = build_cartan("A", rank)
        for word in reduced_words(datum, longest_word(datum)):
            for _ in range(3):
                x = build(datum, word, _point(rng, len(word)))
                assert all(e >= 0 for e in x.entries), (word, x.entries)
                assert all(m > 0 for m in leading_minors(x)), (word, leading_minors(x))

    def test_upper_unipotent_minors_are_one(self, a3, rng):
        for word in reduced_words(a3, longest_word(a3)):
            assert leading_minors(x_word(a3, word, _point(rng, 6))) == [1, 1, 1, 1]


class TestGauss:
    def test_reconstructs(self, a3, rng):
        word = longest_word(a3)
        x = x_minus_word(a3, word, _point(rng, len(word)))
        lower, diag, upper = gauss_decompose(x)
        assert lower @ diag @ upper == x
        assert upper.is_upper_unipotent()
        assert lower.transpose().is_upper_unipotent()

    def test_not_in_g0(self):
        x = GroupMatrix.from_rows([[0, 1], [-1, 0]])
        with pytest.raises(NotInG0) as exc:
            gauss_decompose(x)
        assert exc.value.minor == 1

    def test_pivots_are_minor_ratios(self, a2):
        x = x_minus_word(a2, (1, 2, 1), [1, 2, 3])
        minors = leading_minors(x)
        _, diag, _ = gauss_decompose(x)
        assert diag[0, 0] == minors[0]
        assert sympy.cancel(diag[1, 1] - minors[1] / minors[0]) == 0
        assert minors[2] == 1


class TestOmega:
    def test_involution(self, a2):
        x = x_minus_word(a2, (1, 2, 1), [2, 3, 5])
        assert chevalley_omega(chevalley_omega(x)) == x

    def test_generator_level_image(self, a3, rng):
        word = (2, 1, 3, 2, 1, 3)
        t = _point(rng, 6)
        assert chevalley_omega(x_minus_word(a3, word, t)) == omega_of_minus_word(a3, word, t)


class TestZeta:
    def test_a2_closed_form(self, a2):
        assert zeta_formula(a2, (1, 2, 1), [1, 2, 3]) == (
            sympy.Rational(2, 9), sympy.Rational(3, 2), sympy.Rational(1, 3),
        )

    def test_a1(self, a1):
        """Test zeta(x_{-1}(t)) = x_1(1/t)"""
        assert zeta(x_minus_word(a1, (1,), [5])) == gen_x(a1, 1, Fraction(1, 5))

    def test_expressions_match_values(self, a2):
        exprs = zeta_formula_expressions(a2, (1, 2, 1))
        assert [sf_eval(e, [1, 2, 3]) for e in exprs] == [Fraction(2, 9), Fraction(3, 2), Fraction(1, 3)]

    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_every_word(self, rank, rng):
        datum = build_cartan("A", rank)
        for word in reduced_words(datum, longest_word(datum)):
            report = verify_zeta_formula(datum, word, _point(rng, len(word)))
            assert report.passed, report.failures
            assert report.checks == 2

    def test_report_details(self, a2):
        report = verify_zeta_formula(a2, (1, 2, 1), [1, 2, 3])
        assert report.details["t_prime"] == ["2/9", "3/2", "1/3"]

    def test_symbolic(self, a2):
        """Test the identity holds for positive symbols, not just at points"""
        t = sympy.symbols("a b c", positive=True)
        report = verify_zeta_formula(a2, (2, 1, 2), list(t))
        assert report.passed


class TestRank2:
    def test_a2_lusztig(self):
        move = solve_rank2_move("A2", "lusztig")
        assert move.evaluate([1, 2, 3]) == (Fraction(3, 2), Fraction(4), Fraction(1, 2))

    def test_a2_string(self):
        move = solve_rank2_move("A2", "string")
        assert move.evaluate([1, 2, 3]) == (Fraction(6, 5), Fraction(3), Fraction(5, 3))

    @pytest.mark.parametrize("side", ["lusztig", "string"])
    def test_commuting(self, side):
        assert solve_rank2_move("commuting", side).evaluate([2, 5]) == (Fraction(5), Fraction(2))

    @pytest.mark.parametrize("side", ["lusztig", "string"])
    def test_a2_involution(self, side):
        move = solve_rank2_move("A2", side)
        point = [Fraction(3, 7), Fraction(5), Fraction(2, 9)]
        assert move.evaluate(move.evaluate(point)) == tuple(point)

    @pytest.mark.parametrize("kind, side", [
        ("A2", "lusztig"), ("A2", "string"), ("commuting", "lusztig"), ("commuting", "string"),
    ])
    def test_identity_at_points(self, kind, side, rng):
        arity = len(rank2_words(kind)[0])
        report = verify_rank2_move(kind, side, [_point(rng, arity) for _ in range(10)])
        assert report.passed, report.failures
        assert report.checks == 10

    def test_certificate_is_checked(self, monkeypatch):
        """Test a certificate that disagrees with the solved map fails the report"""
        monkeypatch.setattr("geolift.lifting.sf_eval_map", lambda exprs, point: tuple(point))
        report = verify_rank2_move("A2", "lusztig", [[1, 2, 3]])
        assert not report.passed
        assert report.checks == 1

    def test_tropical_form(self):
        """Test the tropical A2 Lusztig move is (b+c-min(a,c), min(a,c), a+b-min(a,c))"""
        trop = solve_rank2_move("A2", "lusztig").tropicalize()
        for a, b, c in [(1, 0, 0), (0, 2, 5), (4, 1, 3), (-2, 7, 1)]:
            m = min(a, c)
            assert trop((a, b, c)) == (b + c - m, m, a + b - m)

    def test_certificate_is_subtraction_free(self):
        exprs = solve_rank2_move("A2", "string").to_sf()
        assert all("-" not in str(e) for e in exprs)
        assert [sf_eval(e, [1, 2, 3]) for e in exprs] == [Fraction(6, 5), Fraction(3), Fraction(5, 3)]

    def test_json(self):
        data = solve_rank2_move("commuting", "lusztig").to_json()
        assert data == {"arity": 2, "components": [{"num": "t2", "den": "1"}, {"num": "t1", "den": "1"}]}

    @pytest.mark.parametrize("kind", ["B2", "G2"])
    def test_unsupported(self, kind):
        with pytest.raises(UnsupportedRank2Type):
            solve_rank2_move(kind, "lusztig")

    def test_bad_side(self):
        with pytest.raises(ValueError):
            solve_rank2_move("A2", "sideways")
