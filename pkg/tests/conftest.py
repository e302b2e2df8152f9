from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from eaqecc import GF4Matrix, SympVector, from_generators, from_gf4, parse_pauli_string

H4_TEXT = "1 w 1 0\n1 1 0 1"
SET_M = ["ZXZI", "ZZIZ", "XYXI", "XXIX"]
EXAMPLE_GENERATORS = ["ZXZI", "ZZIZ", "YXXZ", "ZYYX"]
FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
HAMMING_7 = np.array(
    [
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ],
    dtype=np.uint8,
)

# lines collected by the acceptance module, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def labels(xs):
    return [parse_pauli_string(t) for t in xs]


@pytest.fixture
def h4():
    return GF4Matrix.from_text(H4_TEXT)


@pytest.fixture
def code411(h4):
    return from_gf4(h4)


@pytest.fixture
def five_qubit_code():
    return from_generators(labels(FIVE_QUBIT))


@st.composite
def symp_vectors(draw, n=None, max_n=8):
    if n is None:
        n = draw(st.integers(1, max_n))
    x = draw(st.integers(0, (1 << n) - 1))
    z = draw(st.integers(0, (1 << n) - 1))
    return SympVector(n, x, z)


@st.composite
def generator_lists(draw, max_n=6, max_m=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    return n, [draw(symp_vectors(n=n)) for _ in range(m)]


@st.composite
def gf4_matrices(draw, max_rows=4, max_cols=6):
    cols = draw(st.integers(1, max_cols))
    rows = draw(st.integers(0, max_rows))
    flat = draw(st.lists(st.integers(0, 3), min_size=rows * cols, max_size=rows * cols))
    return GF4Matrix(np.array(flat, dtype=np.uint8).reshape(rows, cols), cols=cols)
