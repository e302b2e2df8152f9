"""
Combining codes to recycle entanglement
=======================================

Only parameters are tracked here.  Protecting the ebits of an
entanglement-assisted code with a standard code removes the need for
pre-shared entanglement, and repeated self-composition drives the rate
towards the net rate.
"""

# %%
from eaqecc import ParamTuple, bootstrap, combine_ea, combine_with_standard

ea = ParamTuple(4, 1, 1)
std = ParamTuple(5, 1, 0)
print(ea, "+", std, "->", combine_with_standard(ea, std))
print(ea, "+", ea, "->", combine_ea(ea, ea))

# %% [markdown]
# A code with positive net rate gets better and better at amortising its
# ebits as the number of copies grows.

# %%
base = ParamTuple(5, 3, 1)
print(f"{'M':>3} {'code':<14} {'rate':>8} {'ebit rate':>10}")
for M in (1, 2, 4, 8, 16, 64):
    b = bootstrap(base, M)
    print(f"{M:>3} {str(b):<14} {float(b.rate):>8.4f} {float(b.entanglement_rate):>10.4f}")
print("net rate limit:", float(base.net_rate))
