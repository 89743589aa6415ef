"""Command-line front end.

Machine-readable output (tables, JSON reports, comparison rows) goes
to stdout; narration goes to stderr.  Exit codes: 0 when everything
asked for passed, 1 when a verification or comparison failed, 2 for
usage errors (bad flags, out-of-range parameters).

Desk-scale ranges: the enumeration backend is supported through
nmax = 60, the arithmetic backend through nmax = 100 (--extended or
--backend accelerated), the tau suite through 60, and the injection
suite through 40.  `verify --suite all` clamps each component suite to
its default range instead of erroring.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import injections, qseries, reordering, tables
from .report import VerifyReport
from .statistics import crank, rank
from .symbols import format_symbol, parse_symbol, to_symbol

SUITES = ("identities", "injections", "tau", "bounds", "genfun", "all")
DEFAULT_RANGE = {"identities": 60, "bounds": 60, "genfun": 60, "tau": 40, "injections": 30}


class UsageError(Exception):
    pass


def _narrate(*parts) -> None:
    print(*parts, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankcrank",
        description="Exact rank/crank partition tables, injections, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit N(m,n)/M(m,n) tables")
    p_table.add_argument("--stat", choices=("rank", "crank", "both"), default="both")
    scope = p_table.add_mutually_exclusive_group(required=True)
    scope.add_argument("--nmax", type=int, help="all rows 1..nmax")
    scope.add_argument("--n", type=int, help="single weight")
    p_table.add_argument("--format", choices=("csv", "json", "text"), default="text")
    p_table.add_argument("--backend", choices=("enumerated", "accelerated"),
                         default="enumerated")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, required=True)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--extended", action="store_true",
                          help="raise the table-suite range to 100 (arithmetic backend)")
    p_verify.add_argument("--backend", choices=("enumerated", "accelerated"), default=None)

    p_tau = sub.add_parser("tau", help="print the crank-to-rank re-ordering of weight n")
    p_tau.add_argument("--n", type=int, required=True)
    p_tau.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_tau.add_argument("--seed-order", choices=reordering.TIE_BREAKS,
                       default="lex-descending", help="tie-break inside equal statistic values")

    p_inject = sub.add_parser("inject", help="demonstrate one injection case")
    p_inject.add_argument("--m", type=int, required=True)
    p_inject.add_argument("--n", type=int, required=True)
    p_inject.add_argument("--case", choices=("P2", "P3"), required=True)
    p_inject.add_argument("--symbol", type=str, default=None,
                          help="symbol text like '[2,1 | 1]_(3x2)'; default: first member")

    p_ospt = sub.add_parser("ospt", help="compare ospt(n) across computation routes")
    p_ospt.add_argument("--max-n", type=int, default=40)
    p_ospt.add_argument("--methods", type=str, default="moments,tau,genfun",
                        help="comma-separated subset of moments,tau,genfun")
    return parser


# -- table ---------------------------------------------------------------


def _build_table(nmax: int, backend: str) -> tables.StatTable:
    cap = 60 if backend == "enumerated" else 100
    if not 1 <= nmax <= cap:
        raise UsageError(f"nmax must be in 1..{cap} for the {backend} backend, got {nmax}")
    builder = tables.build if backend == "enumerated" else tables.build_accelerated
    return builder(nmax)


def _table_rows(table: tables.StatTable, n: int, stat: str):
    for m in range(-n, n + 1):
        n_cnt = table.rank_count(m, n)
        m_cnt = table.crank_count(m, n)
        if stat == "rank":
            yield m, (n_cnt,)
        elif stat == "crank":
            yield m, (m_cnt,)
        else:
            yield m, (n_cnt, m_cnt)


def cmd_table(args) -> int:
    single = args.n is not None
    nmax = args.n if single else args.nmax
    table = _build_table(nmax, args.backend)
    weights = [nmax] if single else range(1, nmax + 1)
    columns = {"rank": ("N",), "crank": ("M",), "both": ("N", "M")}[args.stat]
    if args.format == "csv":
        sys.stdout.write("n,m," + ",".join(columns) + "\n")
        for n in weights:
            for m, counts in _table_rows(table, n, args.stat):
                sys.stdout.write(f"{n},{m}," + ",".join(map(str, counts)) + "\n")
    elif args.format == "json":
        full = table.to_json_dict()
        if args.stat != "both":
            full.pop("crank" if args.stat == "rank" else "rank")
        if single:
            for key in ("rank", "crank"):
                if key in full:
                    full[key] = {str(nmax): full[key][str(nmax)]}
            full["n"] = nmax
            del full["nmax"]
        json.dump(full, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        header = f"{'m':>5}  " + "  ".join(f"{c:>8}" for c in columns)
        for n in weights:
            if not single:
                sys.stdout.write(f"-- n = {n}\n")
            sys.stdout.write(header + "\n")
            for m, counts in _table_rows(table, n, args.stat):
                if any(counts):
                    sys.stdout.write(
                        f"{m:>5}  " + "  ".join(f"{c:>8}" for c in counts) + "\n")
    _narrate(f"table: stat={args.stat} n<={nmax} backend={table.provenance}")
    return 0


# -- verify --------------------------------------------------------------


def _suite_plan(args) -> list[str]:
    return list(SUITES[:-1]) if args.suite == "all" else [args.suite]


def _effective_nmax(suite: str, args, clamp: bool) -> int:
    base = DEFAULT_RANGE[suite]
    cap = base
    if suite in ("identities", "bounds", "genfun"):
        cap = 100 if (args.extended or args.backend == "accelerated") else 60
    elif suite == "tau":
        cap = 60
    elif suite == "injections":
        cap = 40
    if args.nmax is not None:
        wanted = args.nmax
    elif suite in ("identities", "bounds", "genfun") and args.extended:
        wanted = cap
    else:
        wanted = base
    if clamp:
        return min(wanted, base if suite in ("tau", "injections") else cap)
    if wanted > cap:
        raise UsageError(f"suite {suite} supports nmax <= {cap}, got {wanted}")
    lower = 2 if suite in ("tau", "injections") else 1
    if wanted < lower:
        raise UsageError(f"suite {suite} needs nmax >= {lower}, got {wanted}")
    return wanted


def _run_one_suite(suite: str, nmax: int, backend: str,
                   cache: dict) -> VerifyReport:
    def shared_table(upto: int, which: str) -> tables.StatTable:
        key = (which, upto)
        if key not in cache:
            cache[key] = (tables.build if which == "enumerated"
                          else tables.build_accelerated)(upto)
        return cache[key]

    if suite == "identities":
        return tables.verify_identities(shared_table(nmax, backend))
    if suite == "bounds":
        return tables.verify_bounds(shared_table(nmax, backend))
    if suite == "injections":
        return injections.verify_injections(
            mmax=6, nmax=nmax, table=shared_table(nmax, "enumerated"))
    if suite == "tau":
        return reordering.verify_reordering(
            nmax, table=shared_table(nmax, "enumerated"))
    if suite == "genfun":
        return qseries.verify_genfun(
            nmax, shared_table(min(nmax, 60) if backend == "enumerated" else nmax,
                               backend),
            tau_limit=min(nmax, 40))
    raise AssertionError(suite)


def cmd_verify(args) -> int:
    backend = args.backend
    if args.extended and backend == "enumerated":
        raise UsageError("--extended needs the accelerated backend "
                         "(the enumeration backend is supported through nmax = 60)")
    if backend is None:
        backend = "accelerated" if args.extended else "enumerated"
    clamp = args.suite == "all"
    started = time.monotonic()
    cache: dict = {}
    reports = []
    for suite in _suite_plan(args):
        nmax = _effective_nmax(suite, args, clamp)
        _narrate(f"running suite {suite} (nmax={nmax})...")
        reports.append(_run_one_suite(suite, nmax, backend, cache))
    if args.suite == "all":
        merged = VerifyReport(
            suite="all",
            range={"components": {r.suite: r.range for r in reports}},
            checks=[type(c)(f"{r.suite}:{c.id}", c.status, c.witness)
                    for r in reports for c in r.checks],
            elapsed_ms=int((time.monotonic() - started) * 1000),
            info={r.suite: r.info for r in reports if r.info} or None,
        )
        report = merged
    else:
        report = reports[0]
    sys.stdout.write(report.to_json() + "\n")
    for line in report.summary_lines():
        _narrate(line)
    return 0 if report.ok else 1


# -- tau -----------------------------------------------------------------


def _parts_text(p) -> str:
    return "(" + ",".join(str(v) for v in p) + ")"


def cmd_tau(args) -> int:
    if not 2 <= args.n <= 60:
        raise UsageError(f"tau needs 2 <= n <= 60, got {args.n}")
    rmap = reordering.build_tau(args.n, args.seed_order)
    rows = [
        (lam, crank(lam), mu, rank(mu), crank(lam) - rank(mu))
        for lam, mu in rmap.pairs
    ]
    if args.format == "json":
        payload = {
            "n": args.n,
            "tie_break": args.seed_order,
            "rows": [
                {"partition": list(lam), "crank": c, "image": list(mu),
                 "rank": r, "diff": d}
                for lam, c, mu, r, d in rows
            ],
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif args.format == "csv":
        sys.stdout.write("partition,crank,image,rank,diff\n")
        for lam, c, mu, r, d in rows:
            sys.stdout.write(
                f"{'+'.join(map(str, lam))},{c},{'+'.join(map(str, mu))},{r},{d}\n")
    else:
        left = max(len(_parts_text(lam)) for lam, *_ in rows)
        mid = max(len(_parts_text(mu)) for _, _, mu, _, _ in rows)
        sys.stdout.write(
            f"{'partition':>{left}}  {'crank':>5}  {'image':>{mid}}  {'rank':>4}  {'diff':>4}\n")
        for lam, c, mu, r, d in rows:
            sys.stdout.write(
                f"{_parts_text(lam):>{left}}  {c:>5}  {_parts_text(mu):>{mid}}  {r:>4}  {d:>4}\n")
    _narrate(f"tau on {len(rows)} partitions of {args.n}, tie-break {args.seed_order}")
    return 0


# -- inject ---------------------------------------------------------------


def cmd_inject(args) -> int:
    if args.m < 0:
        raise UsageError("m must be >= 0")
    if args.n < 1:
        raise UsageError("n must be >= 1")
    if args.n > 80:
        raise UsageError("inject demos are supported through n = 80")
    wanted = injections.SymbolClass[args.case]
    if args.symbol is not None:
        try:
            sym = parse_symbol(args.symbol)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if sym.m != args.m or sym.weight != args.n:
            raise UsageError(
                f"symbol has m = {sym.m}, weight = {sym.weight}; "
                f"flags say m = {args.m}, n = {args.n}")
        if injections.classify(sym, "P") is not wanted:
            raise UsageError(f"symbol is not in class {args.case}: {format_symbol(sym)}")
    else:
        sym = None
        from .partitions import enumerate_partitions

        for lam in enumerate_partitions(args.n):
            candidate = to_symbol(lam, args.m)
            if injections.classify(candidate, "P") is wanted:
                sym = candidate
                break
        if sym is None:
            _narrate(f"{args.case}(-m+1 = {-args.m + 1}, n = {args.n}) is empty")
            return 1
    forward = injections.theta2 if args.case == "P2" else injections.theta3
    backward = injections.sigma if args.case == "P2" else injections.pi
    image = forward(sym)
    recovered = backward(image)
    sys.stdout.write(f"input:     {format_symbol(sym)}\n")
    sys.stdout.write(f"image:     {format_symbol(image)}\n")
    sys.stdout.write(f"recovered: {format_symbol(recovered)}\n")
    q_class = injections.classify(image, "Q")
    q_name = q_class.name if q_class is not None else "no Q class"
    _narrate(f"{args.case} member of weight {sym.weight} maps into {q_name}; "
             f"round-trip {'ok' if recovered == sym else 'FAILED'}")
    return 0 if recovered == sym else 1


# -- ospt -----------------------------------------------------------------


def cmd_ospt(args) -> int:
    methods = [tok.strip() for tok in args.methods.split(",") if tok.strip()]
    valid = ("moments", "tau", "genfun")
    if not methods or any(m not in valid for m in methods):
        raise UsageError(f"--methods must be a non-empty subset of {','.join(valid)}")
    cap = 60 if "tau" in methods else 100
    if not 2 <= args.max_n <= cap:
        raise UsageError(f"--max-n must be in 2..{cap} for methods {','.join(methods)}")
    values: dict[str, dict[int, int]] = {m: {} for m in methods}
    if "moments" in methods or "tau" in methods:
        table = tables.build(args.max_n)
    if "moments" in methods:
        for n in range(1, args.max_n + 1):
            values["moments"][n] = table.ospt_moments(n)
    if "tau" in methods:
        for n in range(2, args.max_n + 1):
            values["tau"][n] = reordering.ospt_via_tau(reordering.build_tau(n))
    if "genfun" in methods:
        series = qseries.ospt_series(args.max_n)
        for n in range(1, args.max_n + 1):
            values["genfun"][n] = series[n]
    sys.stdout.write("n," + ",".join(methods) + "\n")
    agree = True
    for n in range(1, args.max_n + 1):
        cells = []
        present = []
        for m in methods:
            if n in values[m]:
                cells.append(str(values[m][n]))
                present.append(values[m][n])
            else:
                cells.append("-")
        if len(set(present)) > 1:
            agree = False
        sys.stdout.write(f"{n}," + ",".join(cells) + "\n")
    sys.stdout.write(f"verdict: {'AGREE' if agree else 'DISAGREE'}\n")
    _narrate(f"ospt routes {', '.join(methods)} compared through n = {args.max_n}")
    return 0 if agree else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "table": cmd_table,
        "verify": cmd_verify,
        "tau": cmd_tau,
        "inject": cmd_inject,
        "ospt": cmd_ospt,
    }[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        _narrate(f"usage error: {exc}")
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
