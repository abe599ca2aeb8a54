"""Command-line front end.

Exit codes: 0 success, 2 bad arguments or violated preconditions (unknown
case, enumeration ceiling exceeded, malformed partition), 3 a consistency
check failed (method cross-check or --verify-cache disagreement).
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
import threading
from pathlib import Path

from .cache import ResultCache, StaleCacheError
from .chern import (
    ChernResult,
    CrossCheckError,
    EnumerationCeilingError,
    c2,
    c2_closed_form,
)
from .config import Config, default_cache_path
from .partitions import Partition, PartitionError, partition, schur_dimension
from .tables import (
    CASES,
    REFERENCE_TABLES,
    GeneratorTable,
    explore_conjecture,
    generator_table,
    image_index,
    table_against_reference,
    verify_case,
)
from .weights import GroupSpec, weight_str

METHOD_BY_FLAG = {
    None: "auto",
    "enum": "enumeration",
    "weyl": "closed-form",
    "both": "both",
}


def parse_partition(text: str) -> Partition:
    """"2,2,1" -> (2, 2, 1); "" and "0" denote the empty partition."""
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    return partition(parts)


class CacheHooks:
    """lookup/record pair bridging the table engine and the cache file.

    Writes are buffered and flushed in key order so the file contents do
    not depend on worker scheduling.  In verify mode lookups miss on
    purpose and record() raises StaleCacheError on any disagreement.
    """

    def __init__(self, store: ResultCache, d: int | None, verify: bool):
        self.store = store
        self.d = d
        self.verify = verify
        self._pending: dict[tuple, tuple] = {}
        self._lock = threading.Lock()

    def lookup(self, n: int, d: int | None, lam: Partition) -> ChernResult | None:
        if self.verify:
            return None
        return self.store.result(n, d, lam)

    def record(self, n: int, d: int | None, lam: Partition, res: ChernResult) -> None:
        old = self.store.get(n, d, lam)
        if old is not None:
            if int(old["n_lambda"]) != res.n_lambda:
                raise StaleCacheError(n, d, lam, int(old["n_lambda"]), res.n_lambda)
            return
        with self._lock:
            self._pending[(n, d if d is not None else -1, lam)] = (n, d, lam, res)

    def flush(self) -> None:
        for key in sorted(self._pending):
            self.store.put(*self._pending[key])
        self._pending.clear()


def _hooks(cfg: Config, d: int | None) -> CacheHooks | None:
    if not cfg.use_cache:
        return None
    path = cfg.cache_path or default_cache_path()
    return CacheHooks(ResultCache(path), d, cfg.verify_cache)


def _table_hooks(hooks: CacheHooks | None):
    if hooks is None:
        return None, None
    return hooks.lookup, hooks.record


# ---------------------------------------------------------------- rendering

def _row_payload(spec: GroupSpec, row) -> dict:
    out = {
        "weight": list(row.weight),
        "weight_str": weight_str(row.weight),
        "partition": list(row.partition),
        "n_lambda": row.n_lambda,
        "flagged": row.flagged,
        "cross_checked": row.cross_checked,
    }
    if row.reference_value is not None:
        out["reference"] = row.reference_value
    if row.error is not None:
        out["error"] = row.error
    return out


def render_table(table: GeneratorTable, fmt: str, case_id: str | None = None) -> str:
    if fmt == "json":
        payload = {
            "n": table.spec.n,
            "d": table.spec.d,
            "gcd": table.gcd,
            "rows": [_row_payload(table.spec, r) for r in table.rows],
        }
        if case_id is not None:
            payload["case"] = case_id
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = []
        for r in table.rows:
            buf.append(
                [
                    weight_str(r.weight),
                    "(" + ",".join(str(p) for p in r.partition) + ")",
                    "" if r.n_lambda is None else str(r.n_lambda),
                    "true" if r.flagged else "false",
                ]
            )
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["weight", "partition", "n_lambda", "flagged"])
        w.writerows(buf)
        return out.getvalue()
    # text
    header = ["weight", "partition", "n_lambda", "note"]
    body = []
    for r in table.rows:
        if r.error is not None:
            note = "ERROR " + r.error
        elif r.flagged:
            note = f"reference prints {r.reference_value}"
        else:
            note = ""
        body.append(
            [
                weight_str(r.weight),
                "(" + ",".join(str(p) for p in r.partition) + ")",
                "?" if r.n_lambda is None else str(r.n_lambda),
                note,
            ]
        )
    widths = [max(len(row[i]) for row in [header] + body) for i in range(4)]
    lines = []
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    lines.append(f"gcd {table.gcd}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- commands

def _cmd_c2(args, cfg: Config) -> int:
    n = args.n
    lam = parse_partition(args.partition)
    method = METHOD_BY_FLAG[args.method]
    hooks = _hooks(cfg, None)
    if hooks is not None and args.method is None:
        cached = hooks.lookup(n, None, lam)
        if cached is not None:
            print(cached.n_lambda)
            return 0
    res = c2(n, lam, method=method, ceiling=cfg.enum_ceiling)
    if hooks is not None:
        hooks.record(n, None, lam, res)
        hooks.flush()
    print(res.n_lambda)
    return 0


def _cmd_dim(args, cfg: Config) -> int:
    n = args.n
    lam = parse_partition(args.partition)
    hooks = _hooks(cfg, None)
    if hooks is not None:
        cached = hooks.store.get(n, None, lam) if not cfg.verify_cache else None
        if cached is not None:
            print(int(cached["dim"]))
            return 0
    d = schur_dimension(n, lam)
    if hooks is not None and d > 0:
        hooks.record(n, None, lam, c2_closed_form(n, lam))
        hooks.flush()
    print(d)
    return 0


def _cmd_generators(args, cfg: Config) -> int:
    spec = GroupSpec(args.n, args.d)
    hooks = _hooks(cfg, spec.d)
    lookup, record = _table_hooks(hooks)
    table = generator_table(
        spec,
        ceiling=cfg.enum_ceiling,
        workers=cfg.workers,
        lookup=lookup,
        record=record,
    )
    if hooks is not None:
        hooks.flush()
    sys.stdout.write(render_table(table, args.format))
    return 0


def _cmd_image_index(args, cfg: Config) -> int:
    spec = GroupSpec(args.n, args.d)
    hooks = _hooks(cfg, spec.d)
    lookup, record = _table_hooks(hooks)
    idx = image_index(
        spec,
        ceiling=cfg.enum_ceiling,
        workers=cfg.workers,
        lookup=lookup,
        record=record,
    )
    if hooks is not None:
        hooks.flush()
    print(idx)
    return 0


def _cmd_verify(args, cfg: Config) -> int:
    report = verify_case(args.case, ceiling=cfg.enum_ceiling, workers=cfg.workers)
    match = "matches" if report.matches_expected else "DIFFERS FROM"
    print(
        f"{report.case_id}: image index {report.computed_index}, "
        f"H^4 generator multiplier {report.h4_multiplier}, "
        f"verdict {report.verdict}"
    )
    print(f"  {match} stored expectation {report.expected_gcd} ({report.source})")
    return 0 if report.matches_expected else 3


def _cmd_table(args, cfg: Config) -> int:
    hooks = _hooks(cfg, REFERENCE_TABLES[args.case].spec.d)
    lookup, record = _table_hooks(hooks)
    table = table_against_reference(
        args.case,
        ceiling=cfg.enum_ceiling,
        workers=cfg.workers,
        lookup=lookup,
        record=record,
    )
    if hooks is not None:
        hooks.flush()
    sys.stdout.write(render_table(table, args.format, case_id=args.case))
    return 0


def _cmd_conjecture(args, cfg: Config) -> int:
    rep = explore_conjecture(args.ell, max_ell=cfg.max_ell)
    yn = {True: "yes", False: "no"}
    print(f"ell: {rep.ell}")
    print(f"group: SL({rep.spec.n})/mu_{rep.spec.d}")
    print(f"generators: {rep.basis_size}")
    print(f"image index: {rep.image_index}")
    print(f"index equals ell: {yn[rep.matches_ell]}")
    print(f"all rows divisible by ell: {yn[rep.all_rows_divisible]}")
    print(f"duality invariant: {yn[rep.duality_invariant]}")
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ceiling", type=int, metavar="N",
                        help="dimension bound above which enumeration refuses")
    common.add_argument("--workers", type=int, metavar="K",
                        help="threads for table rows (default 1)")
    common.add_argument("--cache", metavar="PATH", help="cache file location")
    common.add_argument("--no-cache", action="store_true",
                        help="skip the cache entirely")
    common.add_argument("--verify-cache", action="store_true",
                        help="recompute cached rows; disagreement exits 3")

    p = argparse.ArgumentParser(
        prog="schern",
        description="Second Chern classes of SL(n) representations and "
        "generating sets for representation rings of the quotients "
        "SL(n)/mu_d.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("c2", parents=[common],
                        help="index n_lambda of one representation")
    sp.add_argument("n", type=int)
    sp.add_argument("partition", help="comma separated, e.g. 2,2,2")
    sp.add_argument("--method", choices=["enum", "weyl", "both"],
                    help="default: closed form, cross-checked when small")
    sp.set_defaults(func=_cmd_c2)

    sp = sub.add_parser("dim", parents=[common], help="dimension of gamma_n^lambda")
    sp.add_argument("n", type=int)
    sp.add_argument("partition")
    sp.set_defaults(func=_cmd_dim)

    sp = sub.add_parser("generators", parents=[common],
                        help="minimal generating set of R[SL(n)/mu_d] with indices")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sp.set_defaults(func=_cmd_generators)

    sp = sub.add_parser("image-index", parents=[common],
                        help="gcd of n_lambda over the generating set")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)
    sp.set_defaults(func=_cmd_image_index)

    sp = sub.add_parser("verify", parents=[common],
                        help="compare a computed index with its stored expectation")
    sp.add_argument("case", choices=sorted(CASES))
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("table", parents=[common],
                        help="recompute a bundled reference table and diff it")
    sp.add_argument("--case", required=True, choices=sorted(REFERENCE_TABLES))
    sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("conjecture", parents=[common],
                        help="image index of SL(ell^2)/mu_ell for an odd prime ell")
    sp.add_argument("ell", type=int)
    sp.set_defaults(func=_cmd_conjecture)

    return p


def _resolve_config(args) -> Config:
    cfg = Config.from_env()
    if args.ceiling is not None:
        cfg = dataclasses.replace(cfg, enum_ceiling=args.ceiling)
    if args.workers is not None:
        cfg = dataclasses.replace(cfg, workers=args.workers)
    if args.cache is not None:
        cfg = dataclasses.replace(cfg, cache_path=Path(args.cache))
    if args.verify_cache:
        cfg = dataclasses.replace(cfg, verify_cache=True)
    if args.no_cache:
        cfg = dataclasses.replace(cfg, use_cache=False)
    return cfg


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _resolve_config(args)
    try:
        return args.func(args, cfg)
    except (CrossCheckError, StaleCacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PartitionError, EnumerationCeilingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
