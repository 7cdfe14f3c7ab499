#!/usr/bin/env python3
"""Sweep an (x, y, q) grid, write per-class records and (v, max-discrepancy)
plot data, and print the discrepancy trend along increasing log x / log q."""

import argparse
import math

from smoothlab import (
    ExperimentConfig,
    export_plot_data,
    export_results,
    max_discrepancy,
    run_equidistribution,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--xs", type=float, nargs="+", default=[1e3, 1e4, 1e5, 1e6, 1e7])
    ap.add_argument("--ys", type=float, nargs="+", default=[20.0, 50.0])
    ap.add_argument("--qs", type=int, nargs="+", default=[3, 5, 7, 11])
    ap.add_argument("--out", default="equidistribution.csv")
    ap.add_argument("--plot-out", default="equidistribution_vd.csv")
    args = ap.parse_args()

    config = ExperimentConfig(xs=tuple(args.xs), ys=tuple(args.ys), qs=tuple(args.qs))
    records = run_equidistribution(config)
    export_results(records, "csv", args.out)
    export_plot_data(records, args.plot_out)

    print(f"{len(records)} records -> {args.out}; plot data -> {args.plot_out}")
    print(f"{'x':>12} {'y':>8} {'q':>4} {'v':>8} {'max discrepancy':>16}")
    for (x, y, q), dmax in sorted(
        max_discrepancy(records).items(), key=lambda kv: math.log(kv[0][0]) / math.log(kv[0][2])
    ):
        v = math.log(x) / math.log(q)
        print(f"{x:12g} {y:8g} {q:4d} {v:8.3f} {dmax:16.6g}")


if __name__ == "__main__":
    main()
