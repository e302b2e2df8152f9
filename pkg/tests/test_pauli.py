from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SET_M, generator_lists, labels, symp_vectors
from eaqecc import (
    CheckMatrix,
    DimensionError,
    ParseError,
    SympVector,
    gf2_rank,
    in_rowspace,
    multiply,
    parse_pauli_string,
    symplectic_product,
    weight,
)
from eaqecc.pauli import commutation_matrix, gf2_nullspace, gf2_solve, to_string
from oracles import group_elements, label_anticommute, label_mul, label_weight, span_rank


def P(s):
    return parse_pauli_string(s)


class TestSymplecticProduct:
    def test_self_product_is_zero(self):
        v = SympVector.from_bits([1, 0], [0, 1])
        assert symplectic_product(v, v) == 0

    def test_m1_anticommutes_with_m2(self):
        assert symplectic_product(P("ZXZI"), P("ZZIZ")) == 1

    def test_m2_commutes_with_m3(self):
        assert symplectic_product(P("ZZIZ"), P("XYXI")) == 0

    def test_m1_anticommutes_with_all_others(self):
        m = labels(SET_M)
        assert [symplectic_product(m[0], g) for g in m[1:]] == [1, 1, 1]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            symplectic_product(P("XX"), P("XXX"))

    @given(st.data())
    def test_matches_label_oracle(self, data):
        u = data.draw(symp_vectors())
        v = data.draw(symp_vectors(n=u.n))
        assert symplectic_product(u, v) == label_anticommute(u.label, v.label)

    @given(st.data())
    def test_antisymmetry(self, data):
        u = data.draw(symp_vectors())
        v = data.draw(symp_vectors(n=u.n))
        assert symplectic_product(u, v) == symplectic_product(v, u)
        assert symplectic_product(u, u) == 0

    @given(st.data())
    def test_bilinearity(self, data):
        u = data.draw(symp_vectors())
        v = data.draw(symp_vectors(n=u.n))
        w = data.draw(symp_vectors(n=u.n))
        assert symplectic_product(multiply(u, w), v) == (
            symplectic_product(u, v) ^ symplectic_product(w, v)
        )


class TestMultiply:
    def test_self_inverse(self):
        u = P("XYZI")
        assert multiply(u, u).is_identity()

    def test_x_times_z_is_y(self):
        assert multiply(P("XI"), P("ZI")) == P("YI")
        assert multiply(P("XI"), P("ZI")).x_bits() == [1, 0]
        assert multiply(P("XI"), P("ZI")).z_bits() == [1, 0]

    def test_identity_is_neutral(self):
        v = P("ZXZI")
        assert multiply(SympVector.identity(4), v) == v

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            multiply(P("X"), P("XX"))

    @given(st.data())
    def test_matches_label_oracle(self, data):
        u = data.draw(symp_vectors())
        v = data.draw(symp_vectors(n=u.n))
        assert multiply(u, v).label == label_mul(u.label, v.label)


class TestWeight:
    def test_examples(self):
        assert weight(SympVector.identity(4)) == 0
        assert weight(SympVector.single(4, 1, "X")) == 1
        assert weight(P("ZXZI")) == 3

    @given(st.data())
    def test_subadditive(self, data):
        u = data.draw(symp_vectors())
        v = data.draw(symp_vectors(n=u.n))
        assert weight(multiply(u, v)) <= weight(u) + weight(v)

    @given(symp_vectors())
    def test_matches_label_count(self, u):
        assert weight(u) == label_weight(u.label)


class TestParse:
    def test_first_row_of_worked_example(self):
        v = P("ZXZI")
        assert v.x_bits() == [0, 1, 0, 0]
        assert v.z_bits() == [1, 0, 1, 0]

    def test_identity(self):
        assert P("IIII") == SympVector.identity(4)

    def test_y(self):
        v = P("Y")
        assert (v.x, v.z) == (1, 1)

    def test_invalid_character_reports_column(self):
        with pytest.raises(ParseError) as info:
            P("XXQZ")
        assert info.value.column == 3

    @given(symp_vectors())
    def test_round_trip(self, u):
        assert parse_pauli_string(to_string(u)) == u


class TestRank:
    def test_zero_matrix(self):
        assert gf2_rank(np.zeros((3, 8), dtype=np.uint8)) == 0

    def test_set_m_rank_four(self):
        rows = [tuple(g.to_array()) for g in labels(SET_M)]
        assert span_rank(rows) == 4
        assert gf2_rank(labels(SET_M)) == 4

    def test_duplicate_row(self):
        m = labels(SET_M)
        assert gf2_rank(m + [m[1]]) == gf2_rank(m)

    @given(generator_lists(max_n=4, max_m=7))
    def test_matches_span_oracle(self, case):
        n, gens = case
        rows = [tuple(int(b) for b in g.to_array()) for g in gens]
        assert gf2_rank(gens) == span_rank(rows)

    @given(generator_lists(max_n=5, max_m=7), st.randoms(use_true_random=False))
    def test_invariant_under_row_ops(self, case, rnd):
        n, gens = case
        if len(gens) < 2:
            return
        shuffled = list(gens)
        rnd.shuffle(shuffled)
        assert gf2_rank(shuffled) == gf2_rank(gens)
        i, j = rnd.sample(range(len(gens)), 2)
        mixed = list(gens)
        mixed[i] = multiply(mixed[i], mixed[j])
        assert gf2_rank(mixed) == gf2_rank(gens)


class TestRowspace:
    def test_identity_always_in(self):
        assert in_rowspace(SympVector.identity(4), labels(SET_M))

    def test_rows_are_in(self):
        m = labels(SET_M)
        assert all(in_rowspace(g, m) for g in m)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            in_rowspace(P("XX"), labels(SET_M))

    @given(generator_lists(max_n=3, max_m=5), st.data())
    def test_matches_exhaustive_combinations(self, case, data):
        n, gens = case
        u = data.draw(symp_vectors(n=n))
        span = group_elements([g.label for g in gens], n)
        assert in_rowspace(u, gens) == (u.label in span)


class TestSolveAndNullspace:
    @given(generator_lists(max_n=4, max_m=6), st.data())
    def test_solution_satisfies_system(self, case, data):
        n, gens = case
        rows = [g.packed for g in gens]
        rhs = data.draw(st.lists(st.integers(0, 1), min_size=len(rows), max_size=len(rows)))
        sol = gf2_solve(rows, rhs, 2 * n)
        if sol is None:
            # confirm no solution exists by brute force
            for cand in range(1 << (2 * n)):
                assert any(bin(r & cand).count("1") % 2 != b for r, b in zip(rows, rhs))
        else:
            assert all(bin(r & sol).count("1") % 2 == b for r, b in zip(rows, rhs))

    @given(generator_lists(max_n=4, max_m=6))
    def test_nullspace_dimension(self, case):
        n, gens = case
        rows = [g.packed for g in gens]
        null = gf2_nullspace(rows, 2 * n)
        assert len(null) == 2 * n - gf2_rank(gens)
        for v in null:
            assert all(bin(r & v).count("1") % 2 == 0 for r in rows)


class TestCheckMatrix:
    def test_text_round_trip(self):
        m = CheckMatrix.from_labels(SET_M)
        assert CheckMatrix.from_text(m.to_text()) == m
        assert m.to_text().splitlines()[0] == "0 1 0 0 | 1 0 1 0"

    def test_parse_error_has_line(self):
        text = "0 1 | 1 0\n0 2 | 1 0\n"
        with pytest.raises(ParseError) as info:
            CheckMatrix.from_text(text)
        assert info.value.line == 2

    def test_ragged_rows_rejected(self):
        with pytest.raises((ParseError, DimensionError)):
            CheckMatrix.from_text("0 1 | 1 0\n0 1 0 | 1 0 0\n")

    def test_mixed_n_rejected(self):
        with pytest.raises(DimensionError):
            CheckMatrix(2, (P("XX"), P("XXX")))

    def test_labels_and_array(self):
        m = CheckMatrix.from_labels(SET_M)
        assert m.labels == SET_M
        assert CheckMatrix.from_array(m.to_array()) == m

    def test_commutation_matrix(self):
        gamma = commutation_matrix(labels(SET_M))
        expected = [[label_anticommute(a, b) for b in SET_M] for a in SET_M]
        assert gamma.tolist() == expected
