# %% [markdown]
# # Bounds and exact values
#
# The solver brackets px_k between cheap lower and upper bounds and only
# searches colorings when the bracket is open.

# %%
from kproper import bounds, solve_px
from kproper.constructions import broom, star_plus, wheel

# %%
for name, g in [("wheel W_6", wheel(6)), ("S_6^+", star_plus(6)), ("broom on 6", broom(6))]:
    rep = bounds(g, 3)
    print(f"{name}: lower {rep.best_lower}, upper {rep.best_upper}")
    for b in rep.upper:
        print(f"    {b.provenance:26s} {b.value}{'' if b.exact else '  (heuristic)'}")

# %% [markdown]
# When the bracket is open the search walks palettes upward. The recorded
# evidence says which palettes were shown infeasible and how much work it took.

# %%
cert = solve_px(star_plus(6), 3)
print("px_3 =", cert.value)
print(cert.lower_evidence)
print("coloring:", cert.coloring.colors)
