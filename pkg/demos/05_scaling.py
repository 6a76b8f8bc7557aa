"""Time the engine on growing random cacti.  Doubling the input should
roughly double the time."""

import sys

from cactus_evc.cli import run_bench

sizes = [int(x) for x in sys.argv[1:]] or [10_000, 20_000, 40_000, 80_000, 160_000, 320_000]
print(f"{'n':>9} {'blocks':>8} {'evc':>8} {'seconds':>8} {'ratio':>6}")
for row in run_bench(sizes, seed=1):
    ratio = "-" if row["ratio"] is None else f"{row['ratio']:.2f}"
    print(f"{row['n']:>9} {row['blocks']:>8} {row['evc']:>8} {row['seconds']:>8.3f} {ratio:>6}")
