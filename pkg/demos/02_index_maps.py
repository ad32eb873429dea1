"""Survivor indices: how deletions remap positions.

Deleting row r from a matrix leaves a minor whose row t corresponds to
source row kappa(t, r). Nested deletions compose; the fold and its
closed branch-sum evaluation always agree.
"""

from minorform import (
    IndexHistory,
    kappa,
    primed_index,
    primed_index_expanded,
    reflected_primed_index,
)

print("single deletion: kappa(t, r) for a 5x5 -> 4x4 cut")
print("      r=1 r=2 r=3 r=4 r=5")
for t in range(1, 5):
    print(f"  t={t}", *[f"{kappa(t, r):3d}" for r in range(1, 6)])
print()

print("stacked deletions from a 5x5 down to a 2x2:")
hist = IndexHistory(base=1, chain=(2, 1, 3))
print(f"  chain {hist.chain} outer to inner, base {hist.base}")
value = hist.base
for depth, deleted in enumerate(reversed(hist.chain), start=1):
    value = kappa(value, deleted)
    print(f"    after level {depth} (cut at {deleted}): position {value}")
print(f"  primed_index:          {primed_index(3, hist)}")
print(f"  branch-sum evaluation: {primed_index_expanded(3, hist)}")
print(f"  reflected partner:     {reflected_primed_index(3, hist)}")
print()

print("all-ones ladder: base 1 rises one level per cut")
for k in range(1, 5):
    print(f"  depth {k}: {primed_index(k, IndexHistory(1, (1,) * k))}")
