"""Compare closed-form critical costs against root-finding on the raw payoffs.

Each threshold is the catastrophe cost at which one player becomes exactly
indifferent between pausing and racing against a fixed rival strategy. The
closed forms should match independent bisection to ~1e-10.
"""

from raceworlds import (
    ALWAYS_PAUSE,
    ThresholdKind,
    threshold,
    threshold_by_bisection,
    threshold_curve,
)

DELTA, W, SIGMA, S_RACE = 0.12, 1.0, 0.1, 0.85
print(f"delta={DELTA}, W={W}, sigma={SIGMA}, s_race={S_RACE}\n")

print("critical costs, closed form vs bisection:")
for kind in ThresholdKind:
    closed = threshold(kind, DELTA, W, SIGMA, S_RACE)
    probed = threshold_by_bisection(kind, DELTA, W, SIGMA, S_RACE, c_max=100.0)
    if probed == ALWAYS_PAUSE:
        print(f"  {kind.value:>3}: {closed:+.10f}  bisection: always pause")
    else:
        print(f"  {kind.value:>3}: {closed:+.10f}  bisection: {probed:+.10f}  "
              f"gap: {abs(closed - probed):.2e}")

# Shrinking the winner's advantage scales the racing temptation down linearly,
# so every threshold contracts toward the always-pause floor at -1.
print("\nlaggard's critical cost LC(delta=0) as W shrinks:")
for w in (1.0, 0.7, 0.4, 0.0):
    lc = threshold(ThresholdKind.LAGGARD_COOPERATION, 0.0, w, SIGMA, S_RACE)
    print(f"  W={w:.1f}: LC = {lc:+.9f}")

print("\nLC along the lead axis (the laggard falls in line as it falls behind):")
curve = threshold_curve(
    ThresholdKind.LAGGARD_COOPERATION, [0.0, 0.25, 0.5, 1.0], W, SIGMA, S_RACE
)
for sample in curve:
    print(f"  delta={sample.delta:.2f}: C* = {sample.c_star:+.9f}")
