"""
The [[4,1;1]] entanglement-assisted code, step by step
======================================================

Four non-commuting Pauli generators are split into one anticommuting pair
and two commuting generators.  One ebit shared with the receiver makes the
pair commute, leaving a code that carries one logical qubit.
"""

# %%
from eaqecc import (
    augment,
    decompose,
    distance,
    from_generators,
    group_equal,
    params,
    parse_pauli_string,
    symplectic_product,
    verify_standard_form,
)
from eaqecc.pauli import commutation_matrix

gens = [parse_pauli_string(s) for s in ["ZXZI", "ZZIZ", "XYXI", "XXIX"]]

# %% [markdown]
# The commutation matrix shows which generators clash.  The first one
# anticommutes with all three others, so the group is not abelian.

# %%
print(commutation_matrix(gens))

# %% [markdown]
# Symplectic Gram-Schmidt pairs the first generator with the second and
# cleans the remaining two so that they commute with everything.

# %%
sf = decompose(gens)
print("pairs:", [(z.label, x.label) for z, x in sf.pairs])
print("isotropic:", [v.label for v in sf.isotropic])
print("valid standard form:", verify_standard_form(sf))
print("same group as the input:", group_equal(sf.vectors(), gens))

# %% [markdown]
# Adding a receiver qubit with Z on the first pair member and X on the second
# resolves the single anticommutation.  The fifth column of each block is the
# receiver's qubit.

# %%
aug = augment(sf)
print(aug.to_text())
rows = aug.rows
print("all augmented rows commute:",
      all(symplectic_product(a, b) == 0 for i, a in enumerate(rows) for b in rows[i + 1:]))

# %%
code = from_generators(gens)
p = params(code)
print(f"n={p.n} k={p.k} c={p.c} s={p.s} rate={p.rate} net rate={p.net_rate}")
print("distance:", distance(code, 3))
