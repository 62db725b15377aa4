"""EL-shellable implies CL-shellable implies shellable, on random posets."""

# %%
from collections import Counter

from lexshell import (
    find_rao,
    find_root_independent_rao,
    find_shelling,
    lex_order_shelling_check,
    load_ungraded_example,
    order_complex,
    search_el_labeling,
)
from lexshell.corpus import corpus

# %% [markdown]
# Each poset gets an EL search over labels 1..3, a recursive atom ordering
# search and a shelling search on the order complex of its proper part.

# %%
tally = Counter()
for p in corpus(200, seed=7):
    el = search_el_labeling(p, 3)
    rao = find_rao(p)
    proper = len(p) > 2
    shell = find_shelling(order_complex(p, strip_bounds=True)) if proper else True
    tally[(el is not None, rao is not None, shell is not None)] += 1
    if el is not None:
        assert rao is not None and lex_order_shelling_check(p, el)
    if rao is not None:
        assert shell is not None
for (el, rao, shell), n in sorted(tally.items(), reverse=True):
    print(f"EL={el!s:5} RAO={rao!s:5} shellable={shell!s:5}  {n}")

# %% [markdown]
# The bundled ungraded example separates the first two properties: an
# ordering exists, but no family of orders works for every root.

# %%
u = load_ungraded_example()
print(u, "| RAO:", find_rao(u) is not None, "| root independent:", find_root_independent_rao(u))
