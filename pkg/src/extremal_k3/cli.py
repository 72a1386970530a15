"""Command line interface.

Exit codes: 0 success / empty diff, 1 verification difference or failed
search, 2 usage error.  All output is deterministic, independent of the
parallelism degree.
"""

from __future__ import annotations

import argparse
import os
import sys

from .binforms import BinaryEvenForm, reduce_gl2, reduce_sl2
from .discform import discriminant_form
from .exact import IntegralLattice, count_roots
from .fibration import (read_config_table, verify_config_table,
                        verify_remark)
from .pipeline import (classify_all, classify_one, compare_with_table,
                       read_triple_table)
from .roottypes import (RootType, check_N2, dynkin_graph,
                        enumerate_root_types, graph_embeds, gram_of)


def _data_path(name):
    return os.path.join(os.path.dirname(__file__), "data", name)


def _default_jobs():
    env = os.environ.get("EXTREMAL_K3_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _parse_sigma(text):
    try:
        return RootType.parse(text)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(2)


def _classified_rows(jobs, progress=False):
    def report(name, triples):
        if progress:
            print(f"# {name}: {len(triples)}", file=sys.stderr)
    results = classify_all(processes=jobs, progress=report)
    return results


def _print_classification(results):
    nonempty = sorted((s for s, ts in results.items() if ts), key=str)
    for no, sigma in enumerate(nonempty, start=1):
        for t in results[sigma]:
            print(f"{no};{sigma};{t.mw_str};{t.form[0]};{t.form[1]};{t.form[2]}")


def cmd_classify(args):
    results = _classified_rows(args.jobs, args.verbose)
    _print_classification(results)
    return 0


def cmd_verify_table2(args):
    golden = read_triple_table(args.golden)
    results = _classified_rows(args.jobs, args.verbose)
    missing, extra = compare_with_table(results, golden)
    print(f"diff: {len(missing) + len(extra)}")
    for row in missing:
        print("missing: " + ";".join(str(x) for x in row))
    for row in extra:
        print("extra: " + ";".join(str(x) for x in row))
    return 1 if missing or extra else 0


def cmd_verify_table1(args):
    cfg = read_config_table(args.golden1)
    triples = read_triple_table(args.golden2)
    failures = verify_config_table(cfg, triples)
    print(f"failures: {len(failures)}")
    for f in failures:
        print("fail: " + f)
    return 1 if failures else 0


def cmd_verify_remark(args):
    failures = verify_remark()
    print(f"failures: {len(failures)}")
    for f in failures:
        print("fail: " + f)
    return 1 if failures else 0


def cmd_root_types(args):
    if args.n2:
        types = [s for s in enumerate_root_types(args.rank, exact_rank=True)
                 if check_N2(s)]
    else:
        eu_max = 24 if args.rank == 18 else None
        types = enumerate_root_types(args.rank, eu_max=eu_max,
                                     exact_rank=True)
    for s in types:
        print(s)
    print(f"count: {len(types)}", file=sys.stderr)
    return 0


def cmd_classify_one(args):
    sigma = _parse_sigma(args.sigma)
    for t in classify_one(sigma):
        print(f"{t.sigma};{t.mw_str};{t.form[0]};{t.form[1]};{t.form[2]}")
    return 0


def cmd_reduce_form(args):
    try:
        f = BinaryEvenForm(args.a, args.b, args.c)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    g = reduce_sl2(f) if args.sl2 else reduce_gl2(f)
    print(f"{g.a} {g.b} {g.c}")
    return 0


def cmd_count_roots(args):
    try:
        with open(args.gram_file) as fh:
            rows = [[int(x) for x in line.split()]
                    for line in fh if line.strip()]
        lat = IntegralLattice(tuple(tuple(r) for r in rows))
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(count_roots(lat))
    return 0


def cmd_disc_form(args):
    sigma = _parse_sigma(args.sigma)
    df = discriminant_form(gram_of(sigma))
    for o, q in zip(df.orders, df.q):
        print(f"{o};{q}")
    return 0


def cmd_embed(args):
    s1 = _parse_sigma(args.sigma1)
    s2 = _parse_sigma(args.sigma2)
    mapping = graph_embeds(dynkin_graph(s1), dynkin_graph(s2))
    if mapping is None:
        print("none")
        return 1
    print(" ".join(f"{k}->{v}" for k, v in sorted(mapping.items())))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="extremal-k3",
        description="Classification of extremal elliptic K3 surface data "
                    "triples and related lattice computations.")
    p.add_argument("-j", "--jobs", type=int, default=_default_jobs(),
                   help="parallel worker count (default: all cores)")
    p.add_argument("-v", "--verbose", action="store_true",
                   help="progress output on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", help="regenerate the full classification "
                   "table").set_defaults(fn=cmd_classify)

    s = sub.add_parser("verify-table2",
                       help="classify and diff against a reference table")
    s.add_argument("golden", nargs="?", default=_data_path("table2.csv"))
    s.set_defaults(fn=cmd_verify_table2)

    s = sub.add_parser("verify-table1", help="check the 98 curve "
                       "configurations and the 199/98 partition")
    s.add_argument("golden1", nargs="?", default=_data_path("table1.csv"),
                   help="configuration table (row;delta;no;sigma_f;eu)")
    s.add_argument("golden2", nargs="?", default=_data_path("table2.csv"),
                   help="classification table (no;sigma;mw;a;b;c)")
    s.set_defaults(fn=cmd_verify_table1)

    sub.add_parser("verify-remark", help="check the rank-19 chain/fork "
                   "embeddings").set_defaults(fn=cmd_verify_remark)

    s = sub.add_parser("root-types", help="enumerate root types of a rank")
    s.add_argument("--n2", action="store_true",
                   help="only types satisfying the length condition")
    s.add_argument("--rank", type=int, default=18)
    s.set_defaults(fn=cmd_root_types)

    s = sub.add_parser("classify-one", help="data triples of one root type")
    s.add_argument("sigma")
    s.set_defaults(fn=cmd_classify_one)

    s = sub.add_parser("reduce-form", help="reduce an even binary form")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("c", type=int)
    s.add_argument("--sl2", action="store_true",
                   help="proper (SL2) reduction instead of GL2")
    s.set_defaults(fn=cmd_reduce_form)

    s = sub.add_parser("count-roots", help="count norm -2 vectors of a "
                       "Gram matrix file (integer rows)")
    s.add_argument("gram_file")
    s.set_defaults(fn=cmd_count_roots)

    s = sub.add_parser("disc-form", help="discriminant form generators of "
                       "a root lattice")
    s.add_argument("sigma")
    s.set_defaults(fn=cmd_disc_form)

    s = sub.add_parser("embed", help="induced Dynkin graph embedding")
    s.add_argument("sigma1")
    s.add_argument("sigma2")
    s.set_defaults(fn=cmd_embed)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("parallelism must be >= 1")
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
