"""A shellable 2-complex in which one facet must always be shelled last."""

# %% [markdown]
# The bundled complex has thirteen triangles on seven vertices. Every edge
# except 13 lies in two triangles, and the Euler characteristic is 1, so
# the complex collapses; read backwards, a shelling is a collapse, and the
# only triangle with a free edge is 134. Hence 134 comes last every time.

# %%
from itertools import combinations

from lexshell import find_shelling, forced_last_facet, load_hachimori
from lexshell.simplicial import face_name

h = load_hachimori()
print(h)
degree = {}
for f in h.facets:
    for e in combinations(f, 2):
        degree[e] = degree.get(e, 0) + 1
print("free edges:", [face_name(e) for e, d in degree.items() if d == 1])
print("euler characteristic:", len(h.vertices) - len(degree) + len(h.facets))

# %%
order = find_shelling(h)
print("least shelling:", " ".join(face_name(f) for f in order))
print("134 forced last:", forced_last_facet(h, "134"))
for f in h.facets[:3]:
    print(f"shelling ending in {face_name(f)}:", find_shelling(h, last=f))
