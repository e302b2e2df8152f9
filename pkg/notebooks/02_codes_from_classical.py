"""
Quantum codes from classical check matrices
===========================================

A quaternary check matrix H yields an entanglement-assisted code whose ebit
count is the rank of H times its conjugate transpose.  Two binary matrices
give a CSS-type code whose ebit count is the rank of H1 times H2 transposed.
"""

# %%
import numpy as np

from eaqecc import (
    GF4Matrix,
    classical_min_distance,
    dagger,
    distance,
    ebit_count_css,
    ebit_count_gf4,
    expand_ctq,
    from_css,
    from_gf4,
    gf4_rank,
    gf4_to_symplectic,
)

H4 = GF4Matrix.from_text("1 w 1 0\n1 1 0 1")

# %% [markdown]
# The classical code is a [4,2,3] code over GF(4).  It is not self-orthogonal,
# so the product with its conjugate transpose is nonzero.

# %%
print("classical distance:", classical_min_distance(H4, 4))
print("H H^dagger =\n" + (H4 @ dagger(H4)).to_text())
print("ebits:", ebit_count_gf4(H4))

# %% [markdown]
# Scaling by w and its conjugate doubles the rows without changing the code.
# Reading each entry as a Pauli gives the quantum generators.

# %%
Ht = expand_ctq(H4)
print(Ht.to_text())
print(gf4_to_symplectic(Ht).labels)
code = from_gf4(H4)
k_cl = H4.cols - gf4_rank(H4)
print(f"[[{code.n},{code.k};{code.c}]]  check: 2k_cl - n + c = {2 * k_cl - code.n + code.c}")
print("quantum distance:", distance(code, 3))

# %% [markdown]
# The [7,4] Hamming code contains its dual, so the CSS code needs no ebits.
# Pairing it with a code that does not contain its dual costs entanglement.

# %%
hamming = np.array([[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]])
steane = from_css(hamming, hamming)
print("Steane layout:", steane.n, steane.k, steane.c, "distance", distance(steane, 3))

rep = np.array([[1, 1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0, 0]])
mixed = from_css(hamming, rep)
print("Hamming x repetition: c =", mixed.c, "=", ebit_count_css(hamming, rep), " k =", mixed.k)
