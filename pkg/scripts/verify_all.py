#!/usr/bin/env python3
"""Run every verification end to end and print a one-line verdict each.

Exit code 0 only if all checks pass.
"""

import os
import sys
import time

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "src", "extremal_k3", "data")


def check(name, fn):
    t0 = time.time()
    try:
        ok, detail = fn()
    except Exception as e:  # surface, don't hide
        ok, detail = False, f"exception: {e}"
    verdict = "PASS" if ok else "FAIL"
    print(f"[{verdict}] {name} ({time.time() - t0:.0f}s) {detail}")
    return ok


def main():
    from extremal_k3.fibration import (read_config_table,
                                       verify_config_table, verify_remark)
    from extremal_k3.pipeline import (classify_all, compare_with_table,
                                      read_triple_table)
    from extremal_k3.roottypes import (enumerate_list_L, enumerate_N_lists,
                                       verify_extension_lemma)

    results = {}

    def candidates():
        n = len(enumerate_list_L())
        return n == 712, f"|candidates| = {n}"

    def n_lists():
        rank18, all_types = enumerate_N_lists()
        return (len(rank18), len(all_types)) == (297, 2930), \
            f"{len(rank18)} rank-18 / {len(all_types)} total"

    def classification():
        results.update(classify_all(processes=os.cpu_count()))
        golden = read_triple_table(os.path.join(DATA, "table2.csv"))
        missing, extra = compare_with_table(results, golden)
        return not missing and not extra, \
            f"diff = {len(missing) + len(extra)}"

    def config_table():
        cfg = read_config_table(os.path.join(DATA, "table1.csv"))
        golden = read_triple_table(os.path.join(DATA, "table2.csv"))
        fails = verify_config_table(cfg, golden)
        return not fails, f"{len(fails)} failures"

    def extension():
        fails, wit = verify_extension_lemma()
        return not fails, f"{len(fails)} failures over {len(wit)} types"

    def remark():
        fails = verify_remark()
        return not fails, f"{len(fails)} failures"

    ok = True
    ok &= check("candidate enumeration (712)", candidates)
    ok &= check("length-condition lists (297 / 2930)", n_lists)
    ok &= check("full classification vs reference table", classification)
    ok &= check("98 curve configurations", config_table)
    ok &= check("extension of partial configurations", extension)
    ok &= check("rank-19 chain and fork embeddings", remark)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
