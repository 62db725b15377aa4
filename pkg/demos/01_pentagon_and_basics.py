"""Posets, labelings and recursive atom orderings on small examples."""

# %% [markdown]
# A poset is given by its cover relations. The pentagon is a 3-chain and a
# 2-chain glued at their ends; it is the smallest poset where the order of
# the atoms is forced.

# %%
from lexshell import (
    RaoNode,
    build_poset,
    find_rao,
    lex_order_shelling_check,
    search_el_labeling,
    verify_el_labeling,
    verify_rao,
)
from lexshell.labeling import format_labeling
from lexshell.rao import format_rao

pent = build_poset([("bot", "a"), ("a", "m"), ("m", "top"), ("bot", "b"), ("b", "top")])
print(pent, "graded:", pent.rank() is not None)
for chain in pent.maximal_chains():
    print("  ", " < ".join(chain))

# %% [markdown]
# The search returns the least recursive atom ordering. Its root order puts
# ``a`` first; putting ``b`` first breaks the covering condition, because the
# bound ``top`` of ``a`` and ``b`` sits over ``a`` only through ``m``.

# %%
cert = find_rao(pent)
print(format_rao(cert))
flipped = RaoNode(cert.element, ("b", "a"), cert.children)
res = verify_rao(pent, flipped)
print("b first:", bool(res), "|", res.condition, "at", res.path, "atom", res.atom)

# %% [markdown]
# An EL-labeling found by search, checked directly, and the label order of
# maximal chains checked as a shelling of the order complex.

# %%
labels = search_el_labeling(pent, 3)
print(format_labeling(labels))
print("EL:", bool(verify_el_labeling(pent, labels)))
print("label order shells:", bool(lex_order_shelling_check(pent, labels)))
