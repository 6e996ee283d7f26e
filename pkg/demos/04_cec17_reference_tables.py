"""Recompute the bundled CEC'17 reference tables from one level down.

The package ships the published rank tables of the 2017 bound-constrained
competition analysis: per-measure ranks for each problem dimension, the
per-dimension rankings derived from them, and the overall ranking. This
script re-derives the two upper levels and prints them side by side with
the reference values. `hra verify-paper` runs the same checks with
PASS/FAIL output.
"""

import numpy as np

from hra import aggregate_dimension, fixtures, rtopsis

dimension_table = fixtures.load_dimension_ranks()
labels = dimension_table.alternative_labels
width = max(len(a) for a in labels)

print("per-dimension rankings recomputed from the measure-rank tables")
head = " ".join(f"d={d:<4}" for d in fixtures.CEC17_DIMENSIONS)
print(f"  {'algorithm':<{width}}  {head}   (reference in parentheses)")
recomputed = {}
for dim in fixtures.CEC17_DIMENSIONS:
    table = fixtures.load_measure_ranks(dim)
    _, ranks = aggregate_dimension(
        [table.values[:, j] for j in range(table.n)],
        measure_labels=table.criterion_labels,
        alternative_labels=table.alternative_labels)
    recomputed[dim] = ranks
for i, algorithm in enumerate(labels):
    cells = " ".join(
        f"{recomputed[d][i]:>2g}({dimension_table.values[i, j]:g})"
        for j, d in enumerate(fixtures.CEC17_DIMENSIONS))
    print(f"  {algorithm:<{width}}  {cells}")

agree = all(
    np.array_equal(recomputed[d], dimension_table.values[:, j])
    for j, d in enumerate(fixtures.CEC17_DIMENSIONS))
print(f"\nall 52 recomputed cells match the reference: {agree}")

print("\noverall ranking recomputed from the per-dimension table")
overall = fixtures.load_overall_ranking()
result = rtopsis(dimension_table)  # equal weights, domain (0, 14), cost
print(f"  {'algorithm':<{width}}  computed  reference  rank(ref)")
for i, algorithm in enumerate(labels):
    print(f"  {algorithm:<{width}}  {result.closeness[i]:.4f}    "
          f"{overall.values[i, 0]:.4f}     {result.ranks[i]:>2g}({overall.values[i, 1]:g})")
worst = np.abs(result.closeness - overall.values[:, 0]).max()
print(f"\nlargest score difference {worst:.2e} (reference rounds to 4 "
      f"decimals); ranks identical: "
      f"{np.array_equal(result.ranks, overall.values[:, 1])}")
