"""Command-line entry point: ``farflats <command> --type H4 ...``.

Exit codes: 0 pass, 1 mismatch, 2 resource refusal, 3 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import cache
from . import faraway as fw
from . import invariants as inv
from . import tables
from .arrangement import restriction
from .coxeter import parse_type
from .errors import (CorrectnessAlarm, InsufficientDepthError, ResourceLimitError,
                     StaleCacheError, TypeParseError)
from .workspace import Workspace

EXIT_OK, EXIT_MISMATCH, EXIT_RESOURCE, EXIT_USAGE = 0, 1, 2, 3
SUITES = ("beta", "double-counting", "main-theorem", "chapoton", "coincidental", "all")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    type: str
    max_codim: int | None = None
    limit: int = 10**6
    workers: int = 1
    format: str = "markdown"
    cache_dir: str | None = None
    crosscheck: str = "auto"

    def validate(self) -> "RunConfig":
        t = parse_type(self.type)
        self.type = str(t)
        if self.max_codim is not None and not 0 <= self.max_codim <= t.rank:
            raise UsageError(f"--max-codim must lie in 0..{t.rank}")
        if self.limit < 1:
            raise UsageError("--limit must be positive")
        if self.workers < 1:
            raise UsageError("--workers must be positive")
        if self.format not in tables.FORMATS:
            raise UsageError(f"--format must be one of {tables.FORMATS}")
        if self.crosscheck not in ("auto", "all", "none"):
            raise UsageError("--crosscheck must be auto, all or none")
        if self.cache_dir is None:
            self.cache_dir = os.environ.get(cache.ENV_VAR)
        return self


def open_workspace(cfg: RunConfig, max_codim: int | None = None) -> Workspace:
    """Workspace for cfg, reusing a cached lattice when one is available."""
    rank = parse_type(cfg.type).rank
    depth = cfg.max_codim if cfg.max_codim is not None else (max_codim if max_codim is not None else rank)
    lattice = None
    path = None
    if cfg.cache_dir:
        for d in range(depth, rank + 1):
            p = cache.cache_path(cfg.cache_dir, cfg.type, d)
            if p.exists():
                lattice = cache.load(p, cfg.type).lattice
                break
        path = cache.cache_path(cfg.cache_dir, cfg.type, depth)
    ws = Workspace(cfg.type, max_codim=depth if lattice is None else lattice.max_codim,
                   limit=cfg.limit, workers=cfg.workers, crosscheck=cfg.crosscheck, lattice=lattice)
    if lattice is None and path is not None:
        cache.store(cache.snapshot(ws), path)
    return ws


# -- commands ------------------------------------------------------------------

def cmd_describe(cfg: RunConfig) -> tuple[int, str]:
    from .coxeter import generate_root_system
    rs = generate_root_system(cfg.type)
    dts = rs.degree_tables
    degrees = sorted(d for dt in dts for d in dt.degrees)
    exponents = sorted(e for dt in dts for e in dt.exponents)
    doc = {
        "type": cfg.type,
        "rank": rs.rank,
        "reflections": rs.N,
        "degrees": degrees,
        "exponents": exponents,
        "coxeter_numbers": [dt.coxeter_number for dt in dts],
        "order": rs.order,
        "field": f"Q(2cos(pi/{rs.field.m}))",
    }
    checks = {f"{dt.factor}: 2N = h n": 2 * dt.reflections == dt.coxeter_number * dt.factor.rank for dt in dts}
    checks["N = number of positive roots"] = sum(dt.reflections for dt in dts) == rs.N
    doc["checks"] = checks
    code = EXIT_OK if all(checks.values()) else EXIT_MISMATCH
    if cfg.format == "json":
        return code, json.dumps(doc, indent=2) + "\n"
    lines = [f"{k}: {v}" for k, v in doc.items() if k != "checks"]
    lines += [f"check {k}: {'ok' if v else 'FAILED'}" for k, v in checks.items()]
    return code, "\n".join(lines) + "\n"


def cmd_build(cfg: RunConfig) -> tuple[int, str]:
    ws = open_workspace(cfg)
    L = ws.lattice
    od = ws.orbit_data
    doc = {
        "type": cfg.type,
        "max_codim": L.max_codim,
        "whitney_numbers": L.whitney_numbers(),
        "types": [{"id": T.id, "label": T.label, "codim": T.codim, "size": T.size} for T in od],
        "cache": str(cache.cache_path(cfg.cache_dir, cfg.type, L.max_codim)) if cfg.cache_dir else None,
    }
    if L.is_complete:
        doc["characteristic_polynomial"] = str(inv.characteristic_polynomial(L))
    return EXIT_OK, json.dumps(doc, indent=2) + "\n"


def cmd_table(cfg: RunConfig, core_rank) -> tuple[int, str]:
    rank = parse_type(cfg.type).rank
    if core_rank == "all":
        ws = open_workspace(cfg, rank if rank <= 5 else rank - 1)
        T = tables.full_table(ws)
    else:
        k = int(core_rank)
        # small groups: full lattice so exponents are computed, not looked up
        ws = open_workspace(cfg, rank if rank <= 5 else k + 1)
        T = tables.core_rank_table(ws, k)
    return EXIT_OK, tables.render(T, cfg.format)


def _suite(ws: Workspace, name: str) -> tuple[list, list]:
    """(checked reports, informational reports) for one suite."""
    reps, info = [], []
    irreducible = ws.type.is_irreducible
    L = ws.lattice
    od = ws.orbit_data
    hyper = od.at_codim(1)
    if name == "beta":
        for T in hyper:
            b = fw.beta_via_chambers(ws, T.representative)
            reps.append(fw.CountReport(f"beta via chambers avoiding [{T.label}]", b, inv.beta(L)))
        for T in od:
            if T.codim < ws.rank and L.is_complete:
                R = restriction(L, T.representative)
                d = inv.os_exponents(L, T.representative)
                reps.append(fw.CountReport(f"beta(A^X) from exponents, [{T.label}]", inv.beta(R), d.beta,
                                           provenance={"os exponents": d.provenance}))
        if L.is_complete:
            e = tuple(sorted(x for dt in ws.roots.degree_tables for x in dt.exponents))
            got = inv.os_exponents(L, 0).exponents
            reps.append(fw.CountReport("characteristic polynomial roots = exponents",
                                       str(got), str(e)))
    elif name == "double-counting":
        for T in hyper:
            reps.append(fw.double_counting_check(ws, T.label))
        reps.append(fw.double_counting_check(ws))
        reps.append(fw.average_faraway(ws))
    elif name == "main-theorem":
        if not irreducible:
            return reps, info
        reps += fw.main_theorem_reports(ws)
        for X in od:
            if X.codim + 1 < ws.rank and X.codim + 1 <= L.max_codim:
                reps.append(fw.nfw_se(ws, X.id))
        # constant ratio |G([X])_Y| / u_{X,Y}
        ratios = {}
        for x, y in fw.theorem_pairs(ws):
            u = ws.os_matrix[x, y]
            if u:
                g = len(fw.enumerate_g(ws, fw.GQuery(y, core_type=x)))
                ratios.setdefault(x, set()).add(Fraction(g, u))
        for x, rs in ratios.items():
            reps.append(fw.CountReport(f"constant ratio for [{od[x].label}]", len(rs), 1,
                                       notes=[str(sorted(rs))]))
    elif name == "chapoton":
        if irreducible:
            reps.append(fw.full_support_reflections(ws))
            reps += [fw.full_support_reflections_by_class(ws, T.id) for T in hyper]
    elif name == "coincidental":
        f = ws.type.factors[0]
        if irreducible and (f.family in fw.COINCIDENTAL or (f.family == "H" and f.rank == 3)):
            for x, y in fw.theorem_pairs(ws):
                reps.append(fw.coincidental_mean_check(ws, x, y))
                for J in combinations(range(ws.rank), od[x].codim):
                    if od.orbit_of[ws.std_flat(J)] == x:
                        info.append(fw.coincidental_check(ws, J, y))
    return reps, info


def cmd_verify(cfg: RunConfig, suite: str) -> tuple[int, str]:
    ws = open_workspace(cfg)
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    out = {"type": cfg.type, "suites": {}}
    ok = True
    for name in names:
        try:
            reps, info = _suite(ws, name)
        except (ResourceLimitError, InsufficientDepthError) as exc:
            if suite != "all":
                raise
            out["suites"][name] = {"skipped": str(exc)}
            continue
        passed = all(r.match for r in reps)
        ok &= passed
        entry = {"pass": passed, "reports": [r.to_dict() for r in reps]}
        if info:
            entry["per_core_diagnostics"] = [r.to_dict() for r in info]
        out["suites"][name] = entry
    out["pass"] = ok
    out["crosschecked_flats"] = ws.checked
    return (EXIT_OK if ok else EXIT_MISMATCH), json.dumps(out, indent=2) + "\n"


def parse_core(text: str):
    """'1,3' / '{1,3}' / '{}' -> explicit core (0-based tuple); '[A1]' -> type label."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        return None, text[1:-1]
    body = text.strip("{}").strip()
    if not body:
        return (), None
    try:
        idx = tuple(sorted({int(p) - 1 for p in body.split(",")}))
    except ValueError:
        raise UsageError(f"cannot read core {text!r}; use e.g. '1,3', '{{}}' or '[A1]'") from None
    return idx, None


def cmd_count(cfg: RunConfig, core: str, target: str) -> tuple[int, str]:
    I, label = parse_core(core)
    rank = parse_type(cfg.type).rank
    if I is not None and any(not 0 <= s < rank for s in I):
        raise UsageError(f"core indices must lie in 1..{rank}")
    ws = open_workspace(cfg)
    try:
        Y = ws.parabolic_type(target)
        q = fw.GQuery(Y.id, core=sum(1 << s for s in I)) if I is not None else \
            fw.GQuery(Y.id, core_type=ws.parabolic_type(label).id)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    res = fw.g_sets(ws, q)
    doc = res.report.to_dict()
    doc["flats"] = [[r + 1 for r in ws.lattice.flats[z].root_set] for z in res.flats]
    code = EXIT_OK if res.report.match in (True, None) else EXIT_MISMATCH
    return code, json.dumps(doc, indent=2) + "\n"


# -- argument parsing ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Coxeter type, e.g. H4, B3, A1xA2, I2(5)")
    common.add_argument("--max-codim", type=int, default=None)
    common.add_argument("--format", default="markdown", choices=tables.FORMATS)
    common.add_argument("--cache-dir", default=None,
                        help=f"cache directory (default: ${cache.ENV_VAR}, else no cache)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--limit", type=int, default=10**6, help="largest group to enumerate")
    common.add_argument("--crosscheck", default="auto", choices=("auto", "all", "none"))

    p = _Parser(prog="farflats", description="Full-support parabolic subgroups and faraway flats.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("describe", parents=[common], help="degrees, exponents and order")
    sub.add_parser("build", parents=[common], help="build and cache the lattice and orbits")
    t = sub.add_parser("table", parents=[common], help="tables of counts refined by core")
    t.add_argument("--core-rank", default="1", help="core size, or 'all'")
    v = sub.add_parser("verify", parents=[common], help="check counting identities")
    v.add_argument("--suite", default="all", choices=SUITES)
    c = sub.add_parser("count", parents=[common], help="count one family of subgroups")
    c.add_argument("--core", required=True, help="'1,3', '{}' or a type in brackets, '[A1]'")
    c.add_argument("--target-type", required=True, help="parabolic type label, e.g. A1^2")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.type, args.max_codim, args.limit, args.workers, args.format,
                        args.cache_dir, args.crosscheck).validate()
        if args.command == "describe":
            code, text = cmd_describe(cfg)
        elif args.command == "build":
            code, text = cmd_build(cfg)
        elif args.command == "table":
            if args.core_rank != "all" and not args.core_rank.isdigit():
                raise UsageError("--core-rank must be a number or 'all'")
            code, text = cmd_table(cfg, args.core_rank)
        elif args.command == "verify":
            code, text = cmd_verify(cfg, args.suite)
        else:
            code, text = cmd_count(cfg, args.core, args.target_type)
    except (ResourceLimitError, InsufficientDepthError) as exc:
        print(f"farflats: refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (TypeParseError, UsageError, StaleCacheError) as exc:
        print(f"farflats: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"farflats: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CorrectnessAlarm as exc:
        print(f"farflats: correctness alarm: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
