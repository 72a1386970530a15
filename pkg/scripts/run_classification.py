#!/usr/bin/env python3
"""Run the full classification and write the result table.

Usage: run_classification.py [OUTPUT] [-j JOBS]
Writes semicolon-separated rows no;sigma;mw;a;b;c (default: stdout).
"""

import argparse
import os
import sys
import time

from extremal_k3.pipeline import classify_all, write_triple_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("output", nargs="?", default=None)
    ap.add_argument("-j", "--jobs", type=int, default=os.cpu_count())
    args = ap.parse_args()

    t0 = time.time()
    done = [0]

    def progress(name, triples):
        done[0] += 1
        if done[0] % 50 == 0:
            print(f"  {done[0]}/712 ({time.time() - t0:.0f}s)",
                  file=sys.stderr)

    results = classify_all(processes=args.jobs, progress=progress)
    entries = sorted(s for s, ts in results.items() if ts)
    print(f"classified 712 candidates in {time.time() - t0:.0f}s; "
          f"{len(entries)} admit data triples", file=sys.stderr)

    if args.output:
        write_triple_table(args.output, results)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        for no, sigma in enumerate(entries, start=1):
            for t in results[sigma]:
                print(f"{no};{sigma};{t.mw_str};{t.form[0]};{t.form[1]};"
                      f"{t.form[2]}")


if __name__ == "__main__":
    main()
