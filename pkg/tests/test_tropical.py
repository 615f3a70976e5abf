"""Tests for subtraction-free expressions and min-plus maps"""

from fractions import Fraction

import pytest
import sympy

from geolift.exceptions import (
    ArityMismatch,
    NonPositivePoint,
    NotSubtractionFree,
    ParseError,
    SubtractionForbidden,
)
from geolift.lifting import solve_rank2_move
from geolift.tropical import (
    Add,
    Const,
    Div,
    Mul,
    PLComponent,
    PLMap,
    Pow,
    Var,
    affine_component,
    as_affine_map,
    certify_rational,
    constant_component,
    format_sf,
    identity_map,
    is_affine,
    normal_form_tropical,
    parse_sf,
    pl_compose,
    pl_eval,
    pl_map_from_json,
    sf_compose,
    sf_eval,
    sf_from_polynomials,
    sf_normalize,
    sf_symbols,
    tropicalize,
    tropicalize_map,
    variable_component,
)


class TestParser:
    """parse_sf grammar"""

    def test_precedence(self):
        assert parse_sf("t1 + t2*t3") == Add(Var(1), Mul(Var(2), Var(3)))
        assert parse_sf("(t1+t2)/t3") == Div(Add(Var(1), Var(2)), Var(3))
        assert parse_sf("t1^2") == Pow(Var(1), 2)

    def test_constants(self):
        assert parse_sf("3") == Const(3)
        assert sf_eval(parse_sf("2*t1 + 1"), [Fraction(1, 2)]) == 2

    @pytest.mark.parametrize("text, position", [("t1-t2", 2), ("t1 + -3", 5)])
    def test_subtraction_forbidden(self, text, position):
        with pytest.raises(SubtractionForbidden) as exc:
            parse_sf(text)
        assert exc.value.position == position

    @pytest.mark.parametrize("text", ["t0", "0", "(t1", "", "t1 +", "x1", "t1 t2"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_sf(text)

    @pytest.mark.parametrize("text", [
        "(t1 + t2)/t3",
        "t1/t2 + t3",
        "t1*(t2 + t3^2)",
        "2*t1/(t2 + 3)",
        "(t1 + t2)^3/t1",
    ])
    def test_format_reads_back(self, text):
        expr = parse_sf(text)
        again = parse_sf(format_sf(expr))
        point = (Fraction(2), Fraction(3, 5), Fraction(7))
        assert sf_eval(again, point) == sf_eval(expr, point)

    def test_negative_power_formats(self):
        expr = Var(1) ** -2
        assert format_sf(expr) == "(1/t1)^2"
        assert sf_eval(parse_sf(format_sf(expr)), [2]) == Fraction(1, 4)


class TestEvaluation:
    def test_exact_value(self):
        assert sf_eval(parse_sf("(t1+t2)/t3"), [1, 2, 4]) == Fraction(3, 4)

    def test_non_positive_point(self):
        with pytest.raises(NonPositivePoint):
            sf_eval(parse_sf("t1"), [0])

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            sf_eval(parse_sf("t3"), [1, 2])

    def test_compose(self):
        f = parse_sf("t1 + t2")
        g = [parse_sf("t1*t2"), parse_sf("t1/t2")]
        assert sf_eval(sf_compose(f, g), [2, 4]) == Fraction(17, 2)
        with pytest.raises(ArityMismatch):
            sf_compose(parse_sf("t3"), g)

    def test_zero_constant_node(self):
        with pytest.raises(NotSubtractionFree):
            Const(0)


class TestNormalForm:
    def test_normalize_keeps_common_factors(self):
        p, q = sf_normalize(parse_sf("(t1+t2)/(t1+t2)"), 2)
        t1, t2 = sf_symbols(2)
        assert p.as_expr() == t1 + t2
        assert q.as_expr() == t1 + t2

    def test_normalize_sum_of_quotient(self):
        p, q = sf_normalize(parse_sf("t1/t2 + t3"), 3)
        t1, t2, t3 = sf_symbols(3)
        assert sympy.expand(p.as_expr() - (t1 + t2 * t3)) == 0
        assert q.as_expr() == t2

    def test_certify_cancels(self):
        t1, t2 = sf_symbols(2)
        p, q = certify_rational((t1 ** 2 - t2 ** 2) / (t1 - t2), 2)
        assert p.as_expr() == t1 + t2
        assert q.as_expr() == 1

    def test_certify_clears_denominators(self):
        t1, t2 = sf_symbols(2)
        p, q = certify_rational(t1 / 2 + t2, 2)
        assert p.as_expr() == t1 + 2 * t2
        assert q.as_expr() == 2

    def test_certify_rejects_subtraction(self):
        t1, t2 = sf_symbols(2)
        with pytest.raises(NotSubtractionFree) as exc:
            certify_rational(t1 - t2, 2)
        assert -1 in exc.value.coefficients

    def test_from_polynomials(self):
        t1, t2 = sf_symbols(2)
        p = sympy.Poly(t1 + 2 * t2, t1, t2, domain="ZZ")
        q = sympy.Poly(t2, t1, t2, domain="ZZ")
        expr = sf_from_polynomials(p, q)
        assert sf_eval(expr, [1, 1]) == 3
        with pytest.raises(NotSubtractionFree):
            sf_from_polynomials(sympy.Poly(t1 - t2, t1, t2, domain="ZZ"), q)


def _poly_at(poly, point):
    total = Fraction(0)
    for exponents, c in poly.terms():
        term = Fraction(int(c))
        for x, e in zip(point, exponents):
            term *= x ** int(e)
        total += term
    return total


def _expressions(case):
    if case == "parsed":
        return [parse_sf(text) for text in [
            "(t1 + t2)/t3",
            "t1/t2 + t3",
            "t1*(t2 + t3^2)",
            "2*t1/(t2 + 3)",
            "(t1 + t2)^3/t1",
            "(t1 + t2)/(t1 + t2)",
            "1/(1/t1 + 1/(t2 + t3))",
            "(t1/t2)^2 + t3",
        ]] + [Add(Pow(Div(Var(1), Var(2)), -2), Var(3))]
    lusztig = solve_rank2_move("A2", "lusztig").to_sf()
    string = solve_rank2_move("A2", "string").to_sf()
    return {
        "lusztig": lusztig,
        "string": string,
        "lusztig twice": [sf_compose(e, lusztig) for e in lusztig],
        "string twice": [sf_compose(e, string) for e in string],
        "lusztig after string": [sf_compose(e, string) for e in lusztig],
    }[case]


@pytest.mark.parametrize("case", ["parsed", "lusztig", "string", "lusztig twice", "string twice",
                                  "lusztig after string"])
def test_normal_form_takes_the_same_values(case, rng):
    """Test P/Q from sf_normalize equals the expression at exact positive points"""
    points = [tuple(Fraction(rng.randint(1, 40), rng.randint(1, 40)) for _ in range(3)) for _ in range(1000)]
    for expr in _expressions(case):
        p, q = sf_normalize(expr, 3)
        for point in points:
            assert sf_eval(expr, point) == _poly_at(p, point) / _poly_at(q, point), (format_sf(expr), point)


@pytest.mark.parametrize("text, point, expected", [
    ("t1 + t2", (3, 5), 3),
    ("t1*t2", (3, 5), 8),
    ("t1/t2", (3, 5), -2),
    ("7", (3, 5), 0),
    ("(t1 + t2)/t1", (3, -4), -7),
    ("t1^3 + t2", (-1, 0), -3),
    ("(1/t1)^2", (4, 0), -8),
])
def test_tropicalize_values(text, point, expected):
    """Test (x, /, +) become (+, -, min) and constants vanish"""
    assert tropicalize(parse_sf(text), 2)(point) == expected


@pytest.mark.parametrize("text", ["(t1+t2)/t3", "t1/t2 + t3", "t2/(t1*t3^2)", "(t1*t3 + t2)/(t1 + t3)"])
def test_normal_form_agrees(text):
    """Test original and normalized expressions tropicalize to the same function"""
    expr = parse_sf(text)
    original = tropicalize(expr, 3)
    normalized = normal_form_tropical(*sf_normalize(expr, 3))
    for point in [(0, 0, 0), (3, -2, 1), (-5, 4, 4), (7, 7, -1), (-20, 20, 0)]:
        assert original(point) == normalized(point)


class TestComponents:
    def test_semifield_operations(self):
        x, y = variable_component(2, 1), variable_component(2, 2)
        assert (x + y)((3, -1)) == -1
        assert (x * y)((3, -1)) == 2
        assert (x / y)((3, -1)) == 4
        assert (x ** 3)((3, -1)) == 9
        assert (x ** -1)((3, -1)) == -3
        assert (x ** 0)((3, -1)) == 0
        assert x.shift(5)((3, -1)) == 8

    def test_canonical_forms(self):
        c = PLComponent(1, ((1, 2), (1, 0), (0, 0)), ((0, 0),))
        assert c.pos == ((0, 0), (1, 0))

    def test_affine_detection(self):
        c = affine_component((1, -2, 5))
        assert is_affine(c) == (1, -2, 5)
        assert is_affine(variable_component(2, 1) + variable_component(2, 2)) is None
        assert constant_component(2, 4)((9, 9)) == 4

    def test_arity_checks(self):
        with pytest.raises(ArityMismatch):
            PLComponent(2, ((1, 0),), ((0, 0, 0),))
        with pytest.raises(ArityMismatch):
            variable_component(2, 1) * variable_component(3, 1)

    def test_str(self):
        assert str(affine_component((1, -1, 0))) == "t1 - t2"
        assert str(variable_component(2, 1) + variable_component(2, 2)) == "min(t2, t1)"


class TestMaps:
    def test_compose_with_identity(self):
        f = tropicalize_map([parse_sf("(t1 + t2)/t1"), parse_sf("t1*t2")], 2)
        g = pl_compose(f, identity_map(2))
        for point in [(0, 0), (2, -3), (-4, 1)]:
            assert pl_eval(g, point) == pl_eval(f, point)

    def test_compose_matches_substitution(self):
        f = [parse_sf("t1 + t2"), parse_sf("t1/t2")]
        g = [parse_sf("t1*t2 + t2"), parse_sf("t2")]
        composite = tropicalize_map([sf_compose(e, g) for e in f], 2)
        composed = pl_compose(tropicalize_map(f, 2), tropicalize_map(g, 2))
        for point in [(0, 0), (1, -1), (-3, 2), (5, 5), (-20, 7)]:
            assert pl_eval(composite, point) == pl_eval(composed, point)

    def test_as_affine_map(self):
        m = tropicalize_map([Var(1) ** -1 * Var(2), Var(2) ** -1], 2)
        affine = as_affine_map(m)
        assert affine.linear == ((-1, 1), (0, -1))
        assert affine.constant == (0, 0)
        assert as_affine_map(tropicalize_map([parse_sf("t1 + t2")], 2)) is None

    def test_json_form(self):
        m = tropicalize_map([parse_sf("(t1 + t2)/t1"), parse_sf("t2")], 2)
        again = pl_map_from_json(m.to_json())
        assert again == m

    def test_eval_arity(self):
        with pytest.raises(ArityMismatch):
            pl_eval(identity_map(2), (1, 2, 3))
        with pytest.raises(ArityMismatch):
            pl_compose(identity_map(3), identity_map(2))

    def test_map_components_share_arity(self):
        with pytest.raises(ArityMismatch):
            PLMap(2, (variable_component(3, 1),))
