"""Tables of the closed-form bounds.

Prints ground-set sizes that force rainbow subsets, guaranteed subset sizes
for given ground sets, and the per-overlap pair-count caps that justify the
sampling game.  All values exact; the integer roots are exact floors.

Run: python3 demos/04_bound_tables.py
"""

from dvsubset import (
    H_general_recurrence,
    H_simplex_upper,
    as_upper,
    expected_conflict_bound,
    g_upper,
    h_general_lower,
    h_simplex_lower,
)

print("ground set forcing a rainbow t-subset: 4*m*t^(2k-1)")
print("  t:      ", "  ".join(f"{t:>10}" for t in (3, 5, 8, 13)))
for k, m in [(2, 1), (2, 4), (3, 1)]:
    row = "  ".join(f"{g_upper(k, m, t):>10}" for t in (3, 5, 8, 13))
    print(f"  k={k} m={m}:", row)

print()
print("points forcing t distinct nonzero top-simplex volumes: 8*t^(2d+2)")
for d in (2, 3):
    row = "  ".join(f"{H_simplex_upper(d, t):>14}" for t in (d + 1, 6, 10))
    print(f"  d={d}:", row)

print()
print("guaranteed subset among n points (a=d+1): floor(n^(1/(2d+2))/2)")
for d in (2, 3):
    row = "  ".join(
        f"n=10^{p}:{h_simplex_lower(d, 10**p):>3}" for p in (3, 6, 9, 12)
    )
    print(f"  d={d}:", row)

print()
print("general-a guarantee floor(c*n^(1/((2a-1)d))), c=1")
for a, d in [(2, 1), (2, 2), (3, 2)]:
    row = "  ".join(
        f"n=10^{p}:{h_general_lower(a, d, 10**p, 1):>4}" for p in (3, 6, 9, 12)
    )
    print(f"  a={a} d={d}:", row)

print()
print("dimension-reduction recurrence H_d = 4*j*H_(d-1)*t^(2a-1), a=2 j=1 t=3")
for d in range(5):
    print(f"  H_{d} = {H_general_recurrence(2, d, 3, 1)}")

print()
print("same-color pair caps by shared-vertex count, k=2 m=1 n=10")
for s in (0, 1):
    print(f"  s={s}: A_s <= {as_upper(2, 1, 10, s)}")
print("expected pairs in a 2t-sample, n=500 k=2 m=1 t=5:",
      expected_conflict_bound(500, 2, 1, 5))
