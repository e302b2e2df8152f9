from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import HAMMING_7, SET_M, generator_lists, gf4_matrices, labels
from eaqecc import (
    DimensionError,
    GF4Matrix,
    InvalidFormError,
    StandardForm,
    augment,
    canonical_generators,
    distance,
    ebit_count_gf4,
    from_css,
    from_generators,
    from_gf4,
    gf2_rank,
    gf4_rank,
    params,
    parse_pauli_string,
    symplectic_product,
    with_distance,
)
from eaqecc.code import count_errors, iter_errors
from oracles import brute_distance, group_elements, label_weight


def P(s):
    return parse_pauli_string(s)


def _all_commute(rows):
    return all(symplectic_product(a, b) == 0 for i, a in enumerate(rows) for b in rows[i + 1:])


def _brute(code, max_weight):
    return brute_distance(
        [g.label for g in code.generators],
        [v.label for v in code.form.isotropic],
        code.n,
        max_weight,
    )


class TestAugment:
    def test_receiver_pattern(self, code411):
        aug = code411.augmented
        assert aug.n == 5
        receiver = [row.label[4] for row in aug.rows]
        assert receiver == ["Z", "X", "I", "I"]
        assert [row.truncate(4) for row in aug.rows] == code411.generators

    def test_all_isotropic_form(self):
        sf = StandardForm(3, (), (P("ZZI"), P("IZZ")))
        aug = augment(sf)
        assert aug.n == 3
        assert list(aug.rows) == [P("ZZI"), P("IZZ")]

    def test_single_pair(self):
        aug = augment(StandardForm(1, ((P("Z"), P("X")),), ()))
        assert aug.labels == ["ZZ", "XX"]

    def test_invalid_form(self):
        with pytest.raises(InvalidFormError):
            augment(StandardForm(1, (), (P("X"), P("Z"))))

    @given(generator_lists())
    def test_rows_commute(self, case):
        n, gens = case
        code = from_generators(gens, n=n)
        assert _all_commute(list(code.augmented.rows))


class TestConstruction:
    def test_worked_example_from_gf4(self, code411):
        assert (code411.n, code411.k, code411.c, code411.s) == (4, 1, 1, 2)

    def test_worked_example_from_generators(self):
        code = from_generators(labels(SET_M))
        assert (code.n, code.k, code.c, code.s) == (4, 1, 1, 2)

    def test_self_orthogonal_gf4(self):
        H = GF4Matrix.from_text("1 w w 1 0\n0 1 w w 1")
        code = from_gf4(H)
        assert code.c == 0
        assert code.k == 1

    def test_empty_gf4(self):
        code = from_gf4(GF4Matrix.zeros(0, 3))
        assert (code.n, code.k, code.c, code.s) == (3, 3, 0, 0)

    def test_five_qubit_commutes(self, five_qubit_code):
        assert five_qubit_code.c == 0
        assert (five_qubit_code.k, five_qubit_code.s) == (1, 4)

    def test_single_z_generator(self):
        code = from_generators([P("ZZZZZ")])
        assert (code.s, code.c, code.k) == (1, 0, 4)

    def test_empty_generators_need_n(self):
        with pytest.raises(DimensionError):
            from_generators([])

    def test_steane(self):
        code = from_css(HAMMING_7, HAMMING_7)
        assert (code.n, code.k, code.c) == (7, 1, 0)

    def test_css_empty_h2(self):
        code = from_css(HAMMING_7, np.zeros((0, 7), dtype=np.uint8))
        k1 = 7 - 3
        assert (code.k, code.c) == (k1, 0)

    def test_css_column_mismatch(self):
        with pytest.raises(DimensionError):
            from_css(np.ones((1, 3), dtype=np.uint8), np.ones((1, 4), dtype=np.uint8))

    @settings(max_examples=60)
    @given(gf4_matrices(max_rows=4, max_cols=6))
    def test_gf4_parameters(self, H):
        code = from_gf4(H)
        k_cl = H.cols - gf4_rank(H)
        assert code.c == ebit_count_gf4(H)
        assert code.k == 2 * k_cl - H.cols + code.c

    @settings(max_examples=60)
    @given(st.integers(1, 8), st.data())
    def test_css_parameters(self, n, data):
        mats = []
        for _ in range(2):
            r = data.draw(st.integers(0, 4))
            flat = data.draw(st.lists(st.integers(0, 1), min_size=r * n, max_size=r * n))
            mats.append(np.array(flat, dtype=np.uint8).reshape(r, n))
        h1, h2 = mats
        code = from_css(h1, h2)
        prod = (h1.astype(int) @ h2.T.astype(int)) % 2 if len(h1) and len(h2) else np.zeros((0, 0))
        c_expected = gf2_rank(prod) if prod.size else 0
        assert code.c == c_expected
        k1 = n - (gf2_rank(h1) if len(h1) else 0)
        k2 = n - (gf2_rank(h2) if len(h2) else 0)
        assert code.k == k1 + k2 - n + code.c


class TestDistance:
    def test_worked_example(self, code411):
        assert distance(code411, 3) == 3

    def test_worked_example_brute(self, code411):
        assert _brute(code411, 4) == 3

    def test_trivial_code(self):
        code = from_generators([], n=2)
        assert distance(code, 2) == 1

    def test_five_qubit(self, five_qubit_code):
        assert distance(five_qubit_code, 3) == 3
        assert _brute(five_qubit_code, 3) == 3

    def test_bounded_miss(self, code411):
        assert distance(code411, 2) is None

    def test_with_distance(self, code411):
        assert with_distance(code411, 3).d == 3
        assert code411.d is None

    @settings(max_examples=40, deadline=None)
    @given(generator_lists(max_n=4, max_m=6))
    def test_matches_label_oracle(self, case):
        n, gens = case
        code = from_generators(gens, n=n)
        assert distance(code, n) == _brute(code, n)

    @settings(max_examples=30, deadline=None)
    @given(generator_lists(max_n=4, max_m=6), st.data())
    def test_removing_generators_never_increases(self, case, data):
        n, gens = case
        if not gens:
            return
        drop = data.draw(st.integers(0, len(gens) - 1))
        inf = n + 1  # "no harmful error at all" sorts above every weight
        full = distance(from_generators(gens, n=n), n) or inf
        part = distance(from_generators(gens[:drop] + gens[drop + 1:], n=n), n) or inf
        assert part <= full

    def test_nondegenerate_below_three(self, code411):
        iso = group_elements([v.label for v in code411.form.isotropic], 4)
        low = [lab for lab in iso if 0 < label_weight(lab) < 3]
        assert low == []


class TestParams:
    def test_worked_example(self, code411):
        p = params(code411)
        assert p.net_rate == 0
        assert p.rate == Fraction(1, 4)
        assert p.net_k == 0

    def test_standard_code(self, five_qubit_code):
        p = params(five_qubit_code)
        assert p.net_rate == p.rate == Fraction(1, 5)

    @given(generator_lists())
    def test_net_qubits(self, case):
        n, gens = case
        code = from_generators(gens, n=n)
        p = params(code)
        rank = gf2_rank(gens) if gens else 0
        assert p.k - p.c == n - rank
        assert p.s + 2 * p.c == rank
        assert p.rate >= p.net_rate


class TestCanonical:
    @pytest.mark.parametrize("n,k,c", [(4, 1, 1), (5, 2, 2), (3, 3, 0), (3, 0, 0)])
    def test_parameters(self, n, k, c):
        code = from_generators(canonical_generators(n, k, c), n=n)
        assert (code.k, code.c, code.s) == (k, c, n - k - c)

    def test_invalid(self):
        with pytest.raises(ValueError):
            canonical_generators(2, 2, 1)


class TestEnumeration:
    @pytest.mark.parametrize("n,w", [(1, 1), (4, 2), (5, 3), (4, 4)])
    def test_count(self, n, w):
        errs = list(iter_errors(n, w))
        assert len(errs) == count_errors(n, w)
        assert len({e for _, e in errs}) == len(errs)

    def test_order(self):
        first = [e.label for _, e in iter_errors(2, 2)][:8]
        assert first == ["XI", "YI", "ZI", "IX", "IY", "IZ", "XX", "XY"]
