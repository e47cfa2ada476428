"""Command-line entry point: ``combburn <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 search budget exhausted or answer
unknown, 3 file I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import asymptotics, formulas, oracle
from .burn import BurningSequence, simulate_strict, verify_cover
from .comb import CombGraph, GraphFormatError, read_edgelist
from .greedy import greedy_comb, t_greedy
from .normalize import NormalizationError, normalize
from .sweep import sweep

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_IO = 0, 1, 2, 3

DEFAULTS = {"threads": 1, "node_budget": 50_000_000, "oracle_max_vertices": 120}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def load_config(path: str | None) -> dict:
    """Defaults, overlaid by a ``key=value`` file, overlaid by ``COMBBURN_THREADS``."""
    cfg = dict(DEFAULTS)
    if path:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CliError(f"cannot read config {path}: {exc}", EXIT_IO) from None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in DEFAULTS:
                raise CliError(f"{path}:{lineno}: expected one of {sorted(DEFAULTS)} as key=value")
            try:
                cfg[key] = int(value.strip())
            except ValueError:
                raise CliError(f"{path}:{lineno}: {key} must be an integer") from None
    env = os.environ.get("COMBBURN_THREADS")
    if env:
        try:
            cfg["threads"] = int(env)
        except ValueError:
            raise CliError(f"COMBBURN_THREADS must be an integer, got {env!r}") from None
    if cfg["threads"] < 1 or cfg["node_budget"] < 1:
        raise CliError("threads and node_budget must be positive")
    return cfg


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{v} must be positive")
    return v


def _read_sequence(path: str) -> BurningSequence:
    """Sequence JSON ``{"k": .., "centers": [..]}``; centers beyond the horizon are dropped."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict) or "k" not in data or not isinstance(data.get("centers"), list):
        raise CliError(f"{path}: expected an object with 'k' and a 'centers' list")
    k, centers = data["k"], data["centers"]
    if not isinstance(k, int) or k < 1:
        raise CliError(f"{path}: k must be a positive integer")
    if len(centers) > k:
        # a fire scheduled after round k never ignites by the horizon
        print(f"note: ignoring {len(centers) - k} center(s) scheduled after round {k}", file=sys.stderr)
        centers = centers[:k]
    try:
        return BurningSequence.from_json({"k": k, "centers": centers})
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def _read_graph(path: str):
    try:
        return read_edgelist(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _open_out(path: str):
    try:
        return open(path, "w", newline="\n")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from None


# ------------------------------------------------------------------ commands

def cmd_burn(args, cfg) -> int:
    n, m = args.n, args.m
    if args.s is not None and not 1 <= args.s <= n:
        raise CliError(f"--s must lie in [1, {n}]")
    b = formulas.bounds(n, m)
    print(f"comb: C({n},{m}) with {n * m} vertices")
    if b.exact is not None:
        print(f"exact: {b.exact}")
    print(f"bounds: [{b.lower}, {b.upper}]")
    print(f"bnc: {formulas.bnc_bound(n, m)}")
    s = args.s or 1
    print(f"t_greedy(S={s}): {t_greedy(n, m, s)}")
    print(f"regime: {formulas.regime(n, m).value}")
    if n >= m:
        print(f"bnc_tight: {str(formulas.is_bnc_tight_spine(n, m)).lower()}")
    if args.sequence:
        T = b.exact if b.exact is not None else b.upper
        print(f"greedy_sequence: {greedy_comb(T, n, m, s).dumps()}")
    if args.exact_oracle:
        if n * m > cfg["oracle_max_vertices"]:
            print("oracle: unknown (graph too large)")
            return EXIT_UNKNOWN
        try:
            res = oracle.burn_exact(CombGraph(n, m).to_general(),
                                    oracle.OracleConfig(node_budget=cfg["node_budget"]))
        except oracle.BudgetExhausted:
            print("oracle: unknown (budget exhausted)")
            return EXIT_UNKNOWN
        print(f"oracle: {res.k}")
    return EXIT_OK


def cmd_sweep(args, cfg) -> int:
    threads = args.threads or cfg["threads"]
    with _open_out(args.out) as fh:
        try:
            res = sweep(args.n_max, args.m_max, threads, fh)
        except OSError as exc:
            raise CliError(f"writing {args.out}: {exc}", EXIT_IO) from None
    print(res.tooth_side.describe("n <= m"))
    print(res.spine_side.describe("n >= m"))
    return EXIT_OK


def cmd_verify(args, cfg) -> int:
    g = _read_graph(args.graph)
    seq = _read_sequence(args.sequence)
    try:
        cover = verify_cover(g, seq)
        strict = simulate_strict(g, seq)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if cover.covered:
        print("covered, strict" if strict.strict else "covered, not strict")
    else:
        print("not covered")
        print("uncovered: " + " ".join(str(v) for v in cover.uncovered))
    return EXIT_OK


def table_rows(n_min: int, n_max: int):
    """``(n, m, hat_b, b_text, bnc, shaded)`` for ``m = n-5 .. n+5``."""
    if n_min < 1 or n_max < n_min:
        raise CliError("need 1 <= n_min <= n_max")
    for n in range(n_min, n_max + 1):
        for m in range(n - 5, n + 6):
            if m < 1:
                continue
            b = formulas.bounds(n, m)
            bnc = formulas.bnc_bound(n, m)
            b_text = str(b.exact) if b.exact is not None else f"[{b.lower},{b.upper}]"
            shaded = b.exact is not None and bnc > b.exact
            yield n, m, formulas.hat_b(n, m), b_text, bnc, shaded


def cmd_table(args, cfg) -> int:
    print(f"{'n':>5} {'m':>5} {'hat_b':>6} {'b':>9} {'bnc':>5}")
    for n, m, hb, b_text, bnc, shaded in table_rows(args.n_min, args.n_max):
        mark = "  *" if shaded else ""
        print(f"{n:>5} {m:>5} {hb:>6} {b_text:>9} {bnc:>5}{mark}")
    print("* bnc exceeds b")
    return EXIT_OK


def cmd_random(args, cfg) -> int:
    if not 1 <= args.k <= asymptotics.MAX_K:
        raise CliError(f"k must lie in [1, {asymptotics.MAX_K}]")
    summary = asymptotics.empirical_limit(args.k, args.trials, args.seed)
    with _open_out(args.out) as fh:
        fh.write(asymptotics.samples_csv(summary.samples))
    print(f"samples: {len(summary.samples)}  max |dev|: {summary.max_dev:.6f}  mean |dev|: {summary.mean_dev:.6f}")
    return EXIT_OK


def cmd_normalize(args, cfg) -> int:
    seq = _read_sequence(args.sequence)
    if args.n < args.m:
        raise CliError("normalize needs n >= m")
    g = CombGraph(args.n, args.m)
    try:
        report = verify_cover(g, seq)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if not report.covered:
        raise CliError("sequence does not cover the comb; uncovered: "
                       + " ".join(f"{t},{h}" for t, h in report.uncovered))
    try:
        trace = normalize(seq, args.n, args.m)
    except NormalizationError as exc:
        raise CliError(str(exc), EXIT_UNKNOWN) from None
    print(json.dumps(trace.to_json(), indent=1 if args.pretty else None))
    return EXIT_OK


def cmd_oracle(args, cfg) -> int:
    g = _read_graph(args.graph)
    budget = args.budget or cfg["node_budget"]
    ocfg = oracle.OracleConfig(node_budget=budget)
    try:
        if args.refute is not None:
            witness = oracle.burning_witness(g, args.refute, ocfg)
            out = {"k": args.refute, "refuted": witness is None}
            if witness is not None:
                out["witness"] = list(witness)
        elif args.uniform:
            out = {"hat_b": oracle.hat_b_exact(g, ocfg)}
        else:
            out = oracle.burn_exact(g, ocfg).to_json()
    except oracle.BudgetExhausted:
        print(oracle.BUDGET_JSON)
        return EXIT_UNKNOWN
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(json.dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="combburn", description="Burning numbers of comb graphs")
    p.add_argument("--config", help="key=value file (threads, node_budget, oracle_max_vertices)")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("burn", help="bounds, greedy time and regime for one comb")
    q.add_argument("n", type=_positive)
    q.add_argument("m", type=_positive)
    q.add_argument("--s", type=_positive, help="offset of the final spine fire (default 1)")
    q.add_argument("--exact-oracle", action="store_true", help="also run the exhaustive search")
    q.add_argument("--sequence", action="store_true", help="print a greedy sequence at the best known T")
    q.set_defaults(func=cmd_burn)

    q = sub.add_parser("sweep", help="greedy gap over 1..n_max x 1..m_max as CSV")
    q.add_argument("n_max", type=_positive)
    q.add_argument("m_max", type=_positive)
    q.add_argument("out")
    q.add_argument("--threads", type=_positive)
    q.set_defaults(func=cmd_sweep)

    q = sub.add_parser("verify", help="check a sequence file against an edge-list graph")
    q.add_argument("graph")
    q.add_argument("sequence")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("table", help="hat_b, b and the BNC bound for |n - m| <= 5")
    q.add_argument("n_min", type=_positive)
    q.add_argument("n_max", type=_positive)
    q.set_defaults(func=cmd_table)

    q = sub.add_parser("random", help="sample the log-scale comb exponent")
    q.add_argument("k", type=_positive)
    q.add_argument("trials", type=_positive)
    q.add_argument("seed", type=int)
    q.add_argument("out")
    q.set_defaults(func=cmd_random)

    q = sub.add_parser("normalize", help="rewrite a covering sequence into the greedy one")
    q.add_argument("n", type=_positive)
    q.add_argument("m", type=_positive)
    q.add_argument("sequence")
    q.add_argument("--pretty", action="store_true")
    q.set_defaults(func=cmd_normalize)

    q = sub.add_parser("oracle", help="exact burning number of an edge-list graph")
    q.add_argument("graph")
    q.add_argument("--refute", type=_positive, metavar="K", help="only decide whether K fires suffice")
    q.add_argument("--uniform", action="store_true", help="compute hat_b instead")
    q.add_argument("--budget", type=_positive, help="search node budget")
    q.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
