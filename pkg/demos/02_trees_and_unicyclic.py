# %% [markdown]
# # Trees and unicyclic graphs
#
# For a tree px_k equals the maximum degree, while rx_k is n-1.
# A single cycle can save one color, but only in a specific configuration.

# %%
from kproper import solve_px, solve_rx
from kproper.constructions import color_unicyclic, independence_tree, unicyclic_case
from kproper.graph import Graph, degree_stats

# %%
t = independence_tree(3, 6)
print("spider edges:", t.edges)
print("max degree", degree_stats(t).max_degree,
      "px_3", solve_px(t, 3).value, "rx_3", solve_rx(t, 3).value)

# %%
examples = {
    "C_5 plus a pendant": Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]),
    "triangle with three pendants": Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
}
for name, g in examples.items():
    col, claimed = color_unicyclic(g)
    print(f"{name}: case {unicyclic_case(g)}, claimed {claimed}, "
          f"solver {solve_px(g, 3).value}, colors {col.colors}")
