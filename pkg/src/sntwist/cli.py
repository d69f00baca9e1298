"""Command-line entry point: every verification pipeline as a subcommand.

Output on stdout is deterministic: byte-identical for identical inputs
and configuration, independent of the parallelism degree (timings go to
stderr via logging, never into reports).  When an output directory is
configured (--out or SNTWIST_OUT_DIR) each report is also persisted to
an append-only file named by subcommand, parameters and content hash;
reruns never clobber existing certificates.

Exit codes: 0 all verifications passed, 1 a verification failed,
2 usage error.
"""
from __future__ import annotations

import argparse
import csv as _csv
import hashlib
import io
import json
import logging
import math
import os
import re
import sys
from dataclasses import dataclass

from . import fibers as fibers_mod
from . import twisted as twisted_mod
from .automorphisms import parse_automorphism
from .characters import character_table, verify_indicator_identity
from .partitions import (
    degree,
    format_partition,
    hook_product,
    involution_count_closed_form,
    layer_values,
    partitions_of,
    recurrence_a,
    total_degree_sum,
)
from .perms import parse_permutation
from .rsk import rsk_pair

log = logging.getLogger("sntwist")

ENV_OUT_DIR = "SNTWIST_OUT_DIR"


@dataclass
class RunConfig:
    """Parsed run configuration shared by the subcommands."""

    n: int | None = None
    n_max: int | None = None
    autos: tuple[str, ...] = ()
    parallel: int = 1
    fmt: str = "text"
    out_dir: str | None = None
    max_solutions: int = 10
    fix_top: bool = False
    fix_second: bool = False
    containment: bool = False
    keep_going: bool = False
    allow_heavy: bool = False
    witnesses: int = 0
    timeout: float | None = None
    seed: int | None = None  # reserved; all computation is deterministic


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        autos=tuple([args.auto] if getattr(args, "auto", None) else []),
        parallel=getattr(args, "parallel", 1),
        fmt=getattr(args, "format", "text"),
        out_dir=getattr(args, "out", None) or os.environ.get(ENV_OUT_DIR),
        max_solutions=getattr(args, "max_solutions", 10),
        fix_top=getattr(args, "fix_top", False),
        fix_second=getattr(args, "fix_second", False),
        containment=getattr(args, "containment", False),
        keep_going=getattr(args, "keep_going", False),
        allow_heavy=getattr(args, "allow_heavy", False),
        witnesses=getattr(args, "witnesses", 0),
        timeout=getattr(args, "timeout", None),
    )


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _render_csv(header: list[str], rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, cfg: RunConfig, slug_parts: list[str]) -> None:
    sys.stdout.write(text)
    if not cfg.out_dir:
        return
    os.makedirs(cfg.out_dir, exist_ok=True)
    slug = "_".join(re.sub(r"[^A-Za-z0-9.-]+", "-", p) for p in slug_parts)
    digest = hashlib.sha256(text.encode()).hexdigest()[:12]
    ext = {"json": "json", "csv": "csv", "text": "txt"}[cfg.fmt]
    path = os.path.join(cfg.out_dir, f"{slug}_{digest}.{ext}")
    if os.path.exists(path):
        log.info("report already persisted: %s", path)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    log.info("report written: %s", path)


# --------------------------------------------------------------------------
# subcommand handlers

def _cmd_degrees(args) -> int:
    cfg = _config(args)
    n = args.n
    rows = [
        (format_partition(p), degree(p), hook_product(p)) for p in partitions_of(n)
    ]
    total = total_degree_sum(n)
    matches = total == recurrence_a(n)
    if cfg.fmt == "json":
        text = _render_json(
            {
                "n": n,
                "rows": [
                    {"partition": p, "degree": d, "hook_product": h}
                    for p, d, h in rows
                ],
                "total": total,
                "matches_recurrence": matches,
            }
        )
    elif cfg.fmt == "csv":
        text = _render_csv(
            ["n", "partition", "degree", "hook_product"],
            [(n, p, d, h) for p, d, h in rows],
        )
    else:
        width = max([len(r[0]) for r in rows] + [len("partition")])
        lines = [f"{'n':>2}  {'partition':<{width}}  degree  hook_product"]
        lines += [f"{n:>2}  {p:<{width}}  {d:>6}  {h}" for p, d, h in rows]
        lines.append(f"total {total}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg, ["degrees", f"n{n}"])
    return 0 if matches else 1


def _cmd_involutions(args) -> int:
    cfg = _config(args)
    n_max = args.n_max
    if n_max < 2:
        raise ValueError("--n-max must be >= 2")
    rows = []
    all_ok = True
    for n in range(2, n_max + 1):
        order2 = involution_count_closed_form(n)
        t = total_degree_sum(n)
        a = recurrence_a(n)
        layers = layer_values(n)
        ok = (1 + order2 == t == a) and sum(layers) == order2
        all_ok = all_ok and ok
        rows.append((n, order2, t, a, layers, ok))
    if cfg.fmt == "json":
        text = _render_json(
            {
                "rows": [
                    {
                        "n": n,
                        "order2_count": c,
                        "degree_sum": t,
                        "recurrence": a,
                        "layers": list(layers),
                        "consistent": ok,
                    }
                    for n, c, t, a, layers, ok in rows
                ],
                "all_consistent": all_ok,
            }
        )
    elif cfg.fmt == "csv":
        text = _render_csv(
            ["n", "order2_count", "degree_sum", "recurrence", "layers", "consistent"],
            [(n, c, t, a, "+".join(map(str, ls)), ok) for n, c, t, a, ls, ok in rows],
        )
    else:
        lines = [f"{'n':>3} {'order2':>10} {'1+order2':>10} {'degree_sum':>11} "
                 f"{'recurrence':>11}  layers"]
        for n, c, t, a, layers, ok in rows:
            mark = "ok" if ok else "MISMATCH"
            lines.append(
                f"{n:>3} {c:>10} {1 + c:>10} {t:>11} {a:>11}  "
                f"{'+'.join(map(str, layers))}  {mark}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, cfg, ["involutions", f"nmax{n_max}"])
    return 0 if all_ok else 1


def _cmd_rsk(args) -> int:
    cfg = _config(args)
    perm = parse_permutation(args.perm, args.n)
    p_tab, q_tab = rsk_pair(perm)
    if cfg.fmt == "json":
        text = _render_json(
            {
                "n": perm.n,
                "perm": str(perm),
                "P": [list(r) for r in p_tab.rows],
                "Q": [list(r) for r in q_tab.rows],
            }
        )
    else:
        text = f"perm {perm}\nP\n{p_tab}\nQ\n{q_tab}\n"
    _emit(text, cfg, ["rsk", f"n{perm.n}", str(perm)])
    return 0


def _cmd_characters(args) -> int:
    cfg = _config(args)
    if args.auto:
        alpha = parse_automorphism(args.auto)
        if args.n is not None and alpha.n != args.n:
            raise ValueError(f"--n {args.n} does not match automorphism degree {alpha.n}")
        report = verify_indicator_identity(alpha)
        if cfg.fmt == "json":
            text = _render_json(report.to_payload())
        else:
            lines = [f"automorphism {report.automorphism} on degree {report.n}"]
            for lam, f in report.indicators:
                lines.append(f"  {format_partition(lam)}: {f}")
            lines.append(f"weighted sum {report.weighted_sum}")
            lines.append(f"twisted count {report.twisted_count}")
            lines.append(f"identity {'holds' if report.identity_holds else 'FAILS'}")
            text = "\n".join(lines) + "\n"
        _emit(text, cfg, ["characters", f"n{report.n}", report.automorphism])
        return 0 if report.identity_holds and report.bound_holds else 1

    if args.n is None:
        raise ValueError("characters needs --n or --auto")
    table = character_table(args.n)
    table.validate()
    if cfg.fmt == "json":
        text = _render_json(
            {
                "n": table.n,
                "classes": [format_partition(p) for p in table.classes],
                "class_sizes": list(table.class_sizes),
                "irreps": [format_partition(p) for p in table.irreps],
                "values": [list(row) for row in table.values],
            }
        )
    elif cfg.fmt == "csv":
        text = _render_csv(
            ["irrep"] + [format_partition(p) for p in table.classes],
            [
                (format_partition(lam),) + tuple(row)
                for lam, row in zip(table.irreps, table.values)
            ],
        )
    else:
        head = " ".join(f"{format_partition(p):>10}" for p in table.classes)
        lines = [f"{'':>12} {head}"]
        for lam, row in zip(table.irreps, table.values):
            vals = " ".join(f"{v:>10}" for v in row)
            lines.append(f"{format_partition(lam):>12} {vals}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg, ["characters", f"n{args.n}"])
    return 0


def _cmd_twisted_count(args) -> int:
    cfg = _config(args)
    alpha = parse_automorphism(args.auto)
    if args.n is not None and alpha.n != args.n:
        raise ValueError(f"--n {args.n} does not match automorphism degree {alpha.n}")
    tc = twisted_mod.enumerate_twisted(
        alpha,
        parallel=cfg.parallel,
        witness_cap=cfg.witnesses,
        allow_heavy=cfg.allow_heavy,
    )
    log.info("count finished in %.3fs", tc.elapsed)
    payload = tc.to_payload()
    if cfg.witnesses:
        payload["witnesses"] = list(tc.witnesses)
    if cfg.fmt == "json":
        text = _render_json(payload)
    else:
        text = (
            f"automorphism {tc.automorphism}\n"
            f"count {tc.count}\n"
            f"T {payload['T']}\n"
            f"bound {'ok' if payload['bound_ok'] else 'VIOLATED'}"
            f"{' (equality)' if payload['equality'] else ''}\n"
        )
    _emit(text, cfg, ["twisted-count", f"n{tc.n}", tc.automorphism])
    return 0 if payload["bound_ok"] else 1


def _cmd_twisted_verify_bound(args) -> int:
    cfg = _config(args)
    report = twisted_mod.verify_bound(args.n, parallel=cfg.parallel)
    if cfg.fmt == "json":
        text = _render_json(report.to_payload())
    else:
        lines = [f"degree {report.n}, T = {report.degree_sum}"]
        for e in report.entries:
            mark = "=" if e.equality else "<"
            lines.append(f"  {e.automorphism}: {e.count} {mark} {report.degree_sum}")
        lines.append("all bounds ok" if report.all_ok else "BOUND VIOLATED")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg, ["twisted-verify-bound", f"n{report.n}"])
    return 0 if report.all_ok and report.equality_matches_order_rule else 1


def _cmd_sweep_outer6(args) -> int:
    cfg = _config(args)
    report = twisted_mod.sweep_outer_s6(verify="full")
    payload = report.to_payload()
    payload["max_expected"] = 36
    ok = (
        report.max_count == 36
        and report.max_count < report.identity_count
        and report.distinct_tables == report.total == 720
    )
    if cfg.fmt == "json":
        text = _render_json(payload)
    else:
        counts = ", ".join(
            f"{k}x{v}" for k, v in report.count_multiset().items()
        )
        text = (
            f"outer automorphisms: {report.total} (distinct tables {report.distinct_tables})\n"
            f"twisted involution counts: {counts}\n"
            f"max {report.max_count} vs identity {report.identity_count}\n"
        )
    _emit(text, cfg, ["sweep-outer6"])
    return 0 if ok else 1


def _cmd_twisted_odd_order(args) -> int:
    cfg = _config(args)
    report = twisted_mod.verify_odd_order_structure(args.n)
    if cfg.fmt == "json":
        text = _render_json(report.to_payload())
    else:
        status = "ok" if report.ok else "COUNTEREXAMPLES"
        text = (
            f"degree {report.n}: {report.conjugators_tested} odd-order conjugators, "
            f"{status}\n" + "".join(f"  {v}\n" for v in report.violations)
        )
    _emit(text, cfg, ["twisted-odd-order", f"n{report.n}"])
    return 0 if report.ok else 1


def _cmd_twisted_criterion(args) -> int:
    cfg = _config(args)
    alpha = parse_automorphism(args.auto)
    report = twisted_mod.complex_rep_criterion(alpha, parallel=cfg.parallel)
    if cfg.fmt == "json":
        text = _render_json(report.to_payload())
    else:
        text = (
            f"automorphism {report.automorphism}: count {report.count}, "
            f"identity {report.identity_count}, criterion "
            f"{'FIRES' if report.fires else 'does not fire'}\n"
        )
    _emit(text, cfg, ["twisted-criterion", f"n{report.n}", report.automorphism])
    return 0 if not report.fires else 1


def _cmd_fibers_search(args) -> int:
    cfg = _config(args)
    result = fibers_mod.search_decomposition(
        args.n,
        fix_top=cfg.fix_top,
        fix_second=cfg.fix_second,
        containment=cfg.containment,
        max_solutions=cfg.max_solutions,
        parallel=cfg.parallel,
        time_budget=cfg.timeout,
    )
    verifications = [fibers_mod.verify_decomposition(d) for d in result.solutions]
    all_verified = all(v.ok for v in verifications)
    observations = (
        fibers_mod.check_observations(args.n, result.solutions[0]).to_payload()
        if result.solutions
        else None
    )
    if cfg.fmt == "csv":
        rows = result.solutions[0].to_csv_rows() if result.solutions else []
        text = _render_csv(["n", "partition", "degree", "fiber"], rows)
    elif cfg.fmt == "json":
        text = _render_json(
            {
                "n": args.n,
                "constraints": list(result.constraints),
                "layers": list(layer_values(args.n)),
                "solution_count": len(result.solutions),
                "exhausted": result.exhausted,
                "timed_out": result.timed_out,
                "all_verified": all_verified,
                "solutions": [d.to_payload() for d in result.solutions],
                "observations": observations,
            }
        )
    else:
        lines = [
            f"n={args.n} constraints={','.join(result.constraints) or 'none'} "
            f"solutions={len(result.solutions)}"
            + (" (timed out)" if result.timed_out else "")
        ]
        for i, d in enumerate(result.solutions):
            lines.append(f"solution {i}:")
            for k, parts in enumerate(d.fibers):
                plist = " ".join(format_partition(p) for p in parts)
                lines.append(f"  fiber {k} (= {d.layer_values[k]}): {plist}")
        text = "\n".join(lines) + "\n"
    slug = ["fibers-search", f"n{args.n}"] + list(result.constraints)
    _emit(text, cfg, slug)
    return 0 if all_verified else 1


def _cmd_verify_all(args) -> int:
    cfg = _config(args)
    n_max = args.n_max
    if n_max < 2:
        raise ValueError("--n-max must be >= 2")
    checks = _verify_all_checks(n_max, cfg)
    lines = []
    failed = False
    for name, fn in checks:
        if failed and not cfg.keep_going:
            lines.append(f"SKIP {name}")
            continue
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"error: {exc}"
        lines.append(f"{'PASS' if ok else 'FAIL'} {name} — {detail}")
        failed = failed or not ok
    lines.append("RESULT " + ("FAIL" if failed else "PASS"))
    _emit("\n".join(lines) + "\n", cfg, ["verify-all", f"nmax{n_max}"])
    return 1 if failed else 0


def _verify_all_checks(n_max: int, cfg: RunConfig):
    from . import automorphisms as auto_mod
    from .automorphisms import IdentityAutomorphism
    from .partitions import hook_grid, layer_count, layer_value

    par = cfg.parallel

    def degree_sum_identities():
        for n in range(2, 15):
            t = total_degree_sum(n)
            if not (t == recurrence_a(n) == 1 + involution_count_closed_form(n)):
                return False, f"mismatch at n={n}"
            if sum(layer_values(n)) != involution_count_closed_form(n):
                return False, f"layer sum mismatch at n={n}"
        return True, "degree sum = recurrence = 1 + order-2 count, n = 2..14"

    def worked_example():
        degs = [degree(p) for p in partitions_of(3)]
        return (degs == [1, 2, 1] and total_degree_sum(3) == 4), f"degrees {degs}, total {total_degree_sum(3)}"

    def hook_dual():
        top = min(max(n_max, 12), 30)
        for n in range(1, top + 1):
            for p in partitions_of(n):
                grid = hook_grid(p)  # raises on any cellwise mismatch
                if grid.nonzero_rows != len(p):
                    return False, f"row count wrong for {p}"
        return True, f"both hook formulas agree cellwise, n <= {top}"

    def rsk_suite():
        from .perms import enumerate_group
        from .rsk import inverse_rsk, rsk_pair as pair

        top = min(n_max, 6)
        for n in range(1, top + 1):
            involutions = 0
            for p in enumerate_group(n):
                pt, qt = pair(p)
                if inverse_rsk(pt, qt) != p:
                    return False, f"round trip fails at {p}"
                qi, pi = pair(p.inverse())
                if (qi.rows, pi.rows) != (qt.rows, pt.rows):
                    return False, f"symmetry fails at {p}"
                if pt.rows == qt.rows:
                    involutions += 1
            if involutions != total_degree_sum(n):
                return False, f"tableau/involution count mismatch at n={n}"
        return True, f"round trip, symmetry and counts, n <= {top}"

    def character_tables():
        top = min(n_max, 8)
        for n in range(1, top + 1):
            character_table(n).validate()
        return True, f"orthogonality and degree column exact, n <= {top}"

    def twisted_bounds():
        top = min(n_max, 7)
        for n in range(2, top + 1):
            report = twisted_mod.verify_bound(n, parallel=par)
            if not (report.all_ok and report.equality_matches_order_rule):
                return False, f"bound or equality rule fails at n={n}"
        return True, f"counts <= degree sum, equality iff conjugator order <= 2, n <= {top}"

    def odd_order():
        top = min(n_max, 7)
        for n in range(3, top + 1):
            report = twisted_mod.verify_odd_order_structure(n)
            if not report.ok:
                return False, f"counterexample at n={n}: {report.violations[0]}"
        return True, f"odd-order conjugators admit only involutions, n <= {top}"

    def half_group():
        top = min(n_max, 7)
        for n in range(4, top + 1):
            report = twisted_mod.verify_bound(n, parallel=par)
            worst = max(e.count for e in report.entries)
            if 2 * worst > math.factorial(n):
                return False, f"count {worst} exceeds n!/2 at n={n}"
        small = twisted_mod.enumerate_twisted(IdentityAutomorphism(3)).count
        if small <= 3:
            return False, "degree-3 exception not reproduced"
        return True, f"all counts <= n!/2 for 4 <= n <= {top}; degree 3 exceeds"

    def outer_sweep():
        report = twisted_mod.sweep_outer_s6(verify="full")
        ok = (
            report.total == report.distinct_tables == 720
            and report.max_count == 36
            and report.max_count < report.identity_count
        )
        return ok, f"720 verified, max {report.max_count} < {report.identity_count}"

    def indicator_identities():
        top = min(n_max, 6)
        for n in range(2, top + 1):
            sweep = [IdentityAutomorphism(n)] + twisted_mod.inner_class_representatives(n)
            if n == 6:
                sweep += list(auto_mod.outer_s6_catalog())
            for alpha in sweep:
                report = verify_indicator_identity(alpha)
                if not (report.identity_holds and report.bound_holds):
                    return False, f"identity fails for {alpha.describe()}"
                if isinstance(alpha, IdentityAutomorphism) and any(
                    f != 1 for _, f in report.indicators
                ):
                    return False, f"identity indicator != 1 at n={n}"
        return True, f"weighted indicator sums match counts exactly, n <= {top}"

    def fiber_certificates():
        for n in range(4, 13):
            kmax = layer_count(n) - 1
            if degree((n - 1, 1)) + degree((n - 2, 1, 1)) != layer_value(n, kmax):
                return False, f"top-layer identity fails at n={n}"
        top = min(n_max, 11)
        for n in range(4, top + 1):
            result = fibers_mod.search_decomposition(
                n, fix_top=True, max_solutions=1, parallel=par
            )
            if not result.solutions:
                return False, f"no decomposition found at n={n}"
            if not fibers_mod.verify_decomposition(result.solutions[0]).ok:
                return False, f"verification fails at n={n}"
        return True, f"verified certificates with fixed top fiber, n = 4..{top}"

    checks = [
        ("degree-sum-identities", degree_sum_identities),
        ("worked-example-degree-3", worked_example),
        ("hook-grid-dual-formula", hook_dual),
        ("rsk-suite", rsk_suite),
        ("character-tables", character_tables),
        ("twisted-bounds", twisted_bounds),
        ("odd-order-structure", odd_order),
        ("half-group-bound", half_group),
    ]
    if n_max >= 6:
        checks.append(("outer-sweep-degree-6", outer_sweep))
    checks.append(("indicator-identities", indicator_identities))
    if n_max >= 4:
        checks.append(("fiber-certificates", fiber_certificates))
    return checks


# --------------------------------------------------------------------------
# parser

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="directory for persisted reports")
    p.add_argument("--parallel", type=int, default=1, metavar="K")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sntwist",
        description="Exact verification of twisted involution counts, degree sums "
        "and partition layer certificates for symmetric groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degrees", help="irreducible degrees and their sum")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_degrees)

    p = sub.add_parser("involutions", help="order-2 counts, recurrence and layers")
    p.add_argument("--n-max", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_involutions)

    p = sub.add_parser("rsk", help="insertion/recording tableaux of a permutation")
    p.add_argument("--n", type=int)
    p.add_argument("--perm", required=True, help='one-line "[2,1,3]" or cycles "(1,2)"')
    _add_common(p)
    p.set_defaults(handler=_cmd_rsk)

    p = sub.add_parser("characters", help="character table or indicator report")
    p.add_argument("--n", type=int)
    p.add_argument("--auto", help='automorphism spec, e.g. "inner:6:(1,2)"')
    _add_common(p)
    p.set_defaults(handler=_cmd_characters)

    tw = sub.add_parser("twisted", help="twisted involution scans")
    tw_sub = tw.add_subparsers(dest="twisted_command", required=True)

    p = tw_sub.add_parser("count", help="count solutions of a(g) = g^-1")
    p.add_argument("--n", type=int)
    p.add_argument("--auto", required=True)
    p.add_argument("--witnesses", type=int, default=0, metavar="K")
    p.add_argument("--allow-heavy", action="store_true",
                   help="permit degree 11-12 scans (long; needs --parallel >= 2)")
    _add_common(p)
    p.set_defaults(handler=_cmd_twisted_count)

    p = tw_sub.add_parser("verify-bound", help="bound sweep over class representatives")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_twisted_verify_bound)

    p = tw_sub.add_parser("sweep-outer6", help="all 720 outer automorphisms of degree 6")
    _add_common(p)
    p.set_defaults(handler=_cmd_sweep_outer6)

    p = tw_sub.add_parser("odd-order", help="structure of twisted involutions for odd-order conjugators")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_twisted_odd_order)

    p = tw_sub.add_parser("criterion", help="complex-representation criterion report")
    p.add_argument("--auto", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_twisted_criterion)

    p = sub.add_parser("sweep-outer6", help="alias of: twisted sweep-outer6")
    _add_common(p)
    p.set_defaults(handler=_cmd_sweep_outer6)

    fb = sub.add_parser("fibers", help="fiber decomposition search")
    fb_sub = fb.add_subparsers(dest="fibers_command", required=True)
    p = fb_sub.add_parser("search", help="search exact-sum fiber decompositions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fix-top", action="store_true")
    p.add_argument("--fix-second", action="store_true")
    p.add_argument("--containment", action="store_true")
    p.add_argument("--max-solutions", type=int, default=10)
    p.add_argument("--timeout", type=float, help="seconds; partial results reported")
    _add_common(p)
    p.set_defaults(handler=_cmd_fibers_search)

    p = sub.add_parser("verify-all", help="run every verification pipeline")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--keep-going", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify_all)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
        format="%(message)s",
    )
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
