"""A graded poset with a recursive atom ordering but no EL-labeling."""

# %% [markdown]
# Four copies of the dual face lattice of the forced-last complex are
# stacked over new atoms ``bot_a .. bot_d`` and an extra atom ``x``, glued
# along 134 and the top, with neighbouring copies linked one rank down.

# %%
from lexshell import (
    build_graded_example,
    build_graded_rao,
    find_root_independent_rao,
    find_shelling,
    load_hachimori,
    verify_rao,
)
from lexshell.constructions import copy_context
from lexshell.rao import el_obstruction

h = load_hachimori()
p = build_graded_example(h)
print(p, "rank", p.rank())
print("atoms over 134:", p.upper_covers("134"))

# %% [markdown]
# The recipe certificate follows the shelling of the complex and verifies.

# %%
cert = build_graded_rao(p, find_shelling(h))
print("root order:", cert.order, "| tree nodes:", cert.count())
print("verifies:", bool(verify_rao(p, cert)))

# %% [markdown]
# An EL-labeling would induce one atom order at 134 for every root. Coming
# from ``bot_a`` the a/b copies of 14 and 34 must come first; from ``bot_d``
# the c/d copies must. Neither set contains the other.

# %%
w = el_obstruction(p, "134", [copy_context(p, "a"), copy_context(p, "d")])
print("from bot_a:", sorted(w.first_set))
print("from bot_d:", sorted(w.second_set))
print("root-independent ordering:", find_root_independent_rao(p))
