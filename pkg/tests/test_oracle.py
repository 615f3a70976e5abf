"""Tests for tableaux, Kashiwara operators and the crystal harness"""

import pytest

from geolift.cartan import build_cartan, longest_word, reduced_words, weyl_dimension
from geolift.exceptions import IndexOutOfRange, NotDominant, NotReduced, OracleError, SizeBound
from geolift.oracle import (
    Tableau,
    apply_e,
    apply_f,
    content,
    crystal_to_dot,
    eps,
    evacuation,
    evacuation_by_insertion,
    generate_crystal,
    highest_weight_tableau,
    insertion_tableau,
    lowest_element,
    phi_value,
    reading_word,
    rectify,
    shape_from_weight,
    sl2_table,
    string_extract,
    verify_corollary,
    verify_string_transitions,
    weight,
)


class TestTableau:
    def test_validation(self):
        Tableau(2, ((1, 1, 2), (2, 3)))
        with pytest.raises(OracleError):
            Tableau(2, ((2, 1),))
        with pytest.raises(OracleError):
            Tableau(2, ((1, 2), (1,)))
        with pytest.raises(OracleError):
            Tableau(2, ((1,), (2, 3)))
        with pytest.raises(OracleError):
            Tableau(2, ((4,),))

    def test_shape_and_weight(self):
        b = Tableau(2, ((1, 1, 2), (2, 3)))
        assert b.shape == (3, 2)
        assert str(b) == "112/23"
        assert content(b) == (2, 2, 1)
        assert weight(b) == (0, 1)
        assert reading_word(b) == (2, 3, 1, 1, 2)

    def test_shape_from_weight(self):
        assert shape_from_weight((1, 0)) == (1,)
        assert shape_from_weight((1, 1)) == (2, 1)
        assert shape_from_weight((0, 1, 0)) == (1, 1)
        with pytest.raises(NotDominant):
            shape_from_weight((1, -1))

    def test_highest(self):
        assert highest_weight_tableau(3, (1, 0, 1)).rows == ((1, 1), (2,), (3,))


class TestOperators:
    def test_bracketing(self):
        b = Tableau(2, ((1, 1, 2), (2,)))
        # reading word 2 1 1 2: the first 1 closes the 2, leaving one 1 then one 2
        assert eps(b, 1) == 1
        assert phi_value(b, 1) == 1
        assert apply_f(b, 1) == Tableau(2, ((1, 2, 2), (2,)))

    def test_f_then_e(self, crystal_a2_adjoint):
        for b in crystal_a2_adjoint.vertices:
            for i in (1, 2):
                fb = apply_f(b, i)
                if fb is not None:
                    assert apply_e(fb, i) == b

    def test_one_box(self):
        one = Tableau(2, ((1,),))
        assert apply_f(one, 1) == Tableau(2, ((2,),))
        assert apply_f(one, 2) is None
        assert apply_e(one, 1) is None

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            eps(Tableau(2, ((1,),)), 3)


class TestCrystal:
    @pytest.mark.parametrize("rank, lam", [(1, (3,)), (2, (1, 0)), (2, (1, 1)), (2, (2, 1)), (3, (0, 1, 0)), (3, (1, 0, 1))])
    def test_size_is_weyl_dimension(self, rank, lam):
        graph = generate_crystal(rank, lam)
        assert len(graph) == weyl_dimension(build_cartan("A", rank), lam)

    def test_highest_and_lowest(self, crystal_a2_omega1):
        assert crystal_a2_omega1.highest == Tableau(2, ((1,),))
        assert lowest_element(crystal_a2_omega1) == Tableau(2, ((3,),))

    def test_edges(self, crystal_a2_omega1):
        labels = [(str(s), i, str(t)) for s, i, t in crystal_a2_omega1.edges]
        assert labels == [("1", 1, "2"), ("2", 2, "3")]

    def test_bound(self):
        with pytest.raises(SizeBound) as exc:
            generate_crystal(2, (2, 2), bound=5)
        assert exc.value.bound == 5

    def test_bad_weights(self):
        with pytest.raises(NotDominant):
            generate_crystal(2, (1, -1))
        with pytest.raises(IndexOutOfRange):
            generate_crystal(2, (1,))

    def test_dot(self, crystal_a2_omega1):
        dot = crystal_to_dot(crystal_a2_omega1, name="b")
        assert dot.startswith("digraph b {")
        assert '  n0 [label="1"];' in dot
        assert '  n1 -> n2 [label="2"];' in dot
        assert dot.rstrip().endswith("}")


class TestStrings:
    @pytest.mark.parametrize("rows, word, expected", [
        (((1,),), (1, 2, 1), (0, 0, 0)),
        (((2,),), (1, 2, 1), (1, 0, 0)),
        (((3,),), (1, 2, 1), (0, 1, 1)),
        (((3,),), (2, 1, 2), (1, 1, 0)),
    ])
    def test_extract(self, rows, word, expected):
        param = string_extract(Tableau(2, rows), word)
        assert param.t == expected
        assert param.weight == (1, 0)

    def test_string_weight(self, crystal_a2_adjoint):
        for b in crystal_a2_adjoint.vertices:
            t = string_extract(b, (1, 2, 1)).t
            # wt = lambda - (t1 + t3) alpha_1 - t2 alpha_2
            a1, a2 = t[0] + t[2], t[1]
            assert weight(b) == (1 - 2 * a1 + a2, 1 + a1 - 2 * a2)

    def test_injective(self, crystal_a2_adjoint):
        data = {string_extract(b, (2, 1, 2)).t for b in crystal_a2_adjoint.vertices}
        assert len(data) == len(crystal_a2_adjoint)

    def test_requires_longest_word(self):
        with pytest.raises(NotReduced):
            string_extract(Tableau(2, ((2,),)), (1,))


class TestEvacuation:
    def test_single_row(self):
        assert evacuation(Tableau(2, ((1, 1, 2),))) == Tableau(2, ((2, 3, 3),))

    def test_rectify(self):
        skew = [[None, 2], [1]]
        assert rectify(skew, 2) == Tableau(2, ((1, 2),))

    def test_insertion(self):
        assert insertion_tableau([2, 1, 3, 1], 2) == Tableau(2, ((1, 1), (2, 3)))

    @pytest.mark.parametrize("rank, lam", [(2, (1, 1)), (2, (2, 1)), (3, (1, 0, 1)), (3, (0, 2, 0))])
    def test_routes_agree_and_involutive(self, rank, lam):
        for b in generate_crystal(rank, lam).vertices:
            ev = evacuation(b)
            assert ev == evacuation_by_insertion(b)
            assert evacuation(ev) == b

    def test_highest_to_lowest(self, crystal_a2_adjoint):
        assert evacuation(crystal_a2_adjoint.highest) == lowest_element(crystal_a2_adjoint)

    def test_empty(self):
        empty = Tableau(2, ())
        assert evacuation(empty) == empty


class TestHarness:
    def test_a2_fixture_table(self):
        report = verify_corollary(2, (1, 0), (1, 2, 1))
        assert report.passed, report.failures
        table = {tuple(r["t"]): tuple(r["t_prime"]) for r in report.details["table"]}
        assert table == {(0, 0, 0): (1, 0, 1), (1, 0, 0): (0, 0, 1), (0, 1, 1): (0, 0, 0)}
        assert report.details["star_word"] == [2, 1, 2]
        assert report.details["anchor"] == [1, 0, 1]

    @pytest.mark.parametrize("rank, lam", [(1, (0,)), (1, (5,)), (2, (1, 1)), (2, (0, 2)), (3, (0, 1, 0))])
    def test_corollary(self, rank, lam):
        datum = build_cartan("A", rank)
        for word in reduced_words(datum, longest_word(datum))[:2]:
            report = verify_corollary(rank, lam, word)
            assert report.passed, report.failures[:3]

    def test_string_transitions(self):
        report = verify_string_transitions(3, (1, 0, 1), (1, 2, 1, 3, 2, 1), (3, 2, 3, 1, 2, 3))
        assert report.passed, report.failures[:3]
        assert report.checks == 15

    @pytest.mark.parametrize("m", [0, 1, 3, 10])
    def test_sl2_table(self, m):
        assert sl2_table(m) == [(t, m - t) for t in range(m + 1)]

    @pytest.mark.slow
    def test_a3_sweep(self):
        datum = build_cartan("A", 3)
        words = reduced_words(datum, longest_word(datum))
        for lam in [(1, 0, 0), (0, 1, 0), (1, 0, 1)]:
            for word in words:
                assert verify_corollary(3, lam, word).passed
