# %% [markdown]
# # The extremes of px_3
#
# Survey every connected graph on six vertices and tally the values.
# Only the star reaches n-1, and only two graphs reach n-2.

# %%
from collections import Counter
from pathlib import Path

from kproper import classify, solve_px
from kproper.characterize import survey
from kproper.graph import encode_graph6, read_graph6_lines

corpus = Path(__file__).resolve().parent.parent / "tests" / "data" / "connected6.g6"
graphs = [g for _, g in read_graph6_lines(corpus.read_text().splitlines())]

# %%
values = Counter(solve_px(g, 3).value for g in graphs)
print(sorted(values.items()))
for g in graphs:
    c = classify(g, 3)
    if c.verdict != "generic":
        print(encode_graph6(g), c.verdict, c.px)

# %% [markdown]
# The survey harness runs every known identity and bound at once.

# %%
*records, footer = survey(corpus.read_text().splitlines(), ks=[3])
for name, tally in footer["summary"]["claims"].items():
    print(f"{name:26s} {tally}")
