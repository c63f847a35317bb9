"""Sweep the (delta, C) plane and render phase maps for three regimes.

Writes a CSV and an SVG per regime into demos/output/ and prints the share
of the plane each strategic world occupies. Lower noise (sigma=0.1 vs 0.2)
hardens outcomes and grows the Preemption region; a smaller winner advantage
(W=0.7 vs 1.0) makes racing less tempting and grows Safe Harmony.
"""

from pathlib import Path

from raceworlds import SweepSpec, emit_csv, region_areas, render_svg, sweep

REGIMES = {
    "baseline": dict(winner_advantage=1.0, sigma=0.1),
    "noisy": dict(winner_advantage=1.0, sigma=0.2),
    "small_prize": dict(winner_advantage=0.7, sigma=0.1),
}

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

for name, overrides in REGIMES.items():
    spec = SweepSpec(**overrides)
    grid = sweep(spec)

    csv_path = out_dir / f"phase_{name}.csv"
    svg_path = out_dir / f"phase_{name}.svg"
    with open(csv_path, "wb") as fh:
        emit_csv(grid, fh)
    with open(svg_path, "wb") as fh:
        render_svg(grid, fh)

    print(f"{name} (W={spec.winner_advantage}, sigma={spec.sigma}):")
    for world, share in sorted(region_areas(grid).items(), key=lambda kv: -kv[1]):
        if share > 0.0:
            print(f"  {world.value:<18} {share:7.4f}")
    print(f"  wrote {csv_path.name}, {svg_path.name}\n")
