"""Verify every row of the golden table and print a summary line per row."""
import argparse
import time

from semicox.catalog import table_rows, verify_row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--no-extras", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = table_rows(args.max_n, args.max_m, extras=not args.no_extras)
    bad = 0
    for row in rows:
        res = verify_row(row)
        bad += not res.ok
        D = res.decomposition
        tilde = " ".join(row.types) or "-"
        status = "ok  " if res.ok else "FAIL"
        print(f"{status} {row.name:26s} {len(D.tilde_J):2d} gens  {tilde:24s} {row.structure}")
        if not res.ok:
            print(f"     {res.first_problem}")
    print(f"{len(rows) - bad}/{len(rows)} rows verified in {time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
