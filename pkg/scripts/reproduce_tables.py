"""Regenerate all four benchmark tables and the figure data.

    python3 scripts/reproduce_tables.py --out results/

Writes table<N>.csv, table<N>.md and figure<N>.csv into the output directory
and prints the per-table deviation summary. Exits non-zero if any table
misses its tolerance.
"""
import argparse
import sys
from pathlib import Path

from vhp import benchmarks


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    failed = False
    for tid in benchmarks.TABLE_IDS:
        report = benchmarks.run_table(tid)
        (args.out / f"table{tid}.csv").write_text(benchmarks.render_report(report, "csv"))
        (args.out / f"table{tid}.md").write_text(benchmarks.render_report(report, "md"))
        failures = report.failures()
        failed |= bool(failures)
        print(f"table {tid} ({report.spec.title}): {'ok' if not failures else 'FAILED'}")
        for key, stats in report.summary().items():
            print(f"    {key:24s} max {stats['max']:.3e}  mean {stats['mean']:.3e}  n={stats['count']}")
        for f in failures:
            print(f"    {f}")
    for fid in benchmarks.FIGURE_IDS:
        series = benchmarks.figure_data(fid)
        (args.out / f"figure{fid}.csv").write_text(benchmarks.render_figure_csv(series))
    print(f"wrote results to {args.out}/")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
