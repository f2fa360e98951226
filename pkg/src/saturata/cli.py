"""Command line driver: ``saturata <subcommand> ...``.

Every report is a JSON object carrying ``"schema": "saturata/1"``. Exit
status is 0 iff every asserted verdict passed; experimental numbers (base-2
log runs, the g trend, the n=4, s=3 conjecture comparison) never change it.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from saturata import bounds, box, constructions, family, influence, polyrank
from saturata import io as famio

SCHEMA = "saturata/1"
# O(3^n) paths (the matching-number DP) and O(n^2 2^n) paths (box products)
GUARD_CUBIC = 16
GUARD_FAST = 22


@dataclass
class RunConfig:
    subcommand: str
    files: list = field(default_factory=list)
    fmt: str = "json"
    n: Optional[int] = None
    s: Optional[int] = None
    seed: int = 0
    count: int = 1
    budget: int = 100
    log_base: str = "natural"
    workers: int = 1
    force: bool = False
    timestamp: bool = True


class GuardError(Exception):
    pass


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "item"):
        return obj.item()
    return obj


def _emit(report: dict, cfg: RunConfig, out) -> None:
    report = {"schema": SCHEMA, "command": cfg.subcommand, **report}
    if cfg.timestamp:
        report["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    report = _jsonable(report)
    if cfg.fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        _table(report, out)


def _table(report: dict, out, prefix: str = "") -> None:
    flat = []

    def walk(obj, key):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(v, f"{key}.{k}" if key else k)
        elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
            for i, v in enumerate(obj):
                walk(v, f"{key}[{i}]")
        else:
            flat.append((key, obj))

    walk(report, prefix)
    width = max((len(k) for k, _ in flat), default=0)
    for k, v in flat:
        out.write(f"{k.ljust(width)}  {v}\n")


def _guard(n: int, limit: int, what: str, force: bool):
    if n > limit and not force:
        raise GuardError(f"{what} refused at n={n} (limit {limit}); pass --force to override")


def _verdict_dict(v: family.SaturationVerdict, n: int) -> dict:
    return {
        "s": v.s,
        "saturated": v.saturated,
        "matching_free": v.matching_free,
        "maximal": v.maximal,
        "matching_witness": None
        if v.matching_witness is None
        else [family.elements_of(m) for m in v.matching_witness],
        "addable_witness": None if v.addable_witness is None else family.elements_of(v.addable_witness),
    }


def identity_suite(F: family.SetFamily, s: int, log_base: str = "natural", force: bool = False) -> dict:
    """Structural checks for a saturated F; every value is a pass flag or a report."""
    n = F.n
    out: dict = {}
    inc, _ = family.is_increasing(F)
    out["increasing"] = inc
    power = box.box_power(F, s - 1)
    out["complement_identity"] = family.bar_family(family.complement_family(F)) == power
    nu = family.matching_number_box(F)
    if n <= GUARD_CUBIC or force:
        out["matching_number_routes_agree"] = family.matching_number(F) == nu
    out["matching_number"] = nu == s - 1
    out["claim31"] = all(
        box.verify_claim31(F, s, x, t, checked=True) for x in range(1, n + 1) for t in range(s)
    )
    out["claim32"] = all(box.verify_claim32(F, s, x, checked=True)[2] for x in range(1, n + 1))
    if n >= 2:
        x, ratio, bound, holds = influence.good_section_bound(F, s, log_base)
        out["good_section"] = {
            "coordinate": x,
            "min_section_ratio": ratio,
            "bound": bound,
            "holds": holds,
        }
    return out


def _flags_ok(d: dict, log_base: str) -> bool:
    for k, v in d.items():
        if isinstance(v, dict):
            if "holds" in v and log_base == "natural" and not v["holds"]:
                return False
        elif isinstance(v, bool) and not v:
            return False
    return True


def cmd_verify(cfg: RunConfig, out) -> int:
    F = famio.read_family(cfg.files[0])
    _guard(F.n, GUARD_FAST, "verify", cfg.force)
    s = cfg.s
    verdict = family.check_saturation(F, s)
    report: dict = {"n": F.n, "size": F.size(), "saturation": _verdict_dict(verdict, F.n)}
    ok = verdict.saturated
    if ok and F.membership[0]:
        report["note"] = "family contains the empty set; bound and identity checks skipped"
    elif ok and s <= F.n + 1:
        br = bounds.bound_report(F, s, cfg.log_base)
        report["bounds"] = br.to_dict()
        ids = identity_suite(F, s, cfg.log_base, cfg.force)
        report["identities"] = ids
        ok = br.passed and _flags_ok(ids, cfg.log_base)
    report["passed"] = ok
    _emit(report, cfg, out)
    return 0 if ok else 1


def _construct(kind: str, n: int, s: int, seed: int, count: int) -> list[family.SetFamily]:
    if kind == "star":
        return [constructions.star_family(n, s)]
    if kind == "block":
        return [constructions.block_family(n, s).family]
    if kind == "random":
        return constructions.random_saturated(n, s, seed, count)
    raise ValueError(f"unknown construction {kind!r}")


def cmd_construct(cfg: RunConfig, args, out) -> int:
    fams = _construct(args.kind, cfg.n, cfg.s, cfg.seed, cfg.count)
    fmt = args.family_format
    if args.out is None:
        if len(fams) != 1:
            raise ValueError("writing several families needs --out")
        out.write(famio.dumps(fams[0], fmt))
        return 0
    base = Path(args.out)
    if len(fams) == 1:
        famio.write_family(fams[0], base, fmt)
        return 0
    for i, F in enumerate(fams):
        famio.write_family(F, base.with_name(f"{base.stem}_{i}{base.suffix}"), fmt)
    return 0


def parse_range(text: str) -> list[int]:
    """'5', '2..4' or '3,5,7'."""
    vals: list[int] = []
    for part in text.split(","):
        if ".." in part:
            a, b = part.split("..")
            vals.extend(range(int(a), int(b) + 1))
        else:
            vals.append(int(part))
    return vals


def _rows_csv(rows: list[dict], out) -> None:
    if not rows:
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(rows[0].keys())
    for r in rows:
        w.writerow(_jsonable(list(r.values())))


def cmd_bounds(cfg: RunConfig, args, out) -> int:
    ns = parse_range(args.n) if args.n else []
    ss = parse_range(args.s) if args.s else []
    for token in args.grid or []:
        key, _, val = token.partition("=")
        if key == "n":
            ns = parse_range(val)
        elif key == "s":
            ss = parse_range(val)
        else:
            raise ValueError(f"grid token {token!r}: expected n=... or s=...")
    if not ns or not ss:
        raise ValueError("bounds needs n and s values")
    if args.trend:
        rows = [
            {"n": n, "s": s, "g": g, "trend": t}
            for s in ss
            for n, g, t in bounds.g_trend([n for n in ns if s <= n + 1], s)
        ]
    else:
        rows = bounds.grid_rows(ns, ss)
    if cfg.fmt == "csv":
        _rows_csv(rows, out)
    elif cfg.fmt == "table":
        buf = _io.StringIO()
        _rows_csv(rows, buf)
        lines = [l.split(",") for l in buf.getvalue().splitlines()]
        widths = [max(len(r[i]) for r in lines) for i in range(len(lines[0]))] if lines else []
        for r in lines:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
    else:
        _emit({"rows": rows}, cfg, out)
    return 0


def cmd_search(cfg: RunConfig, args, out) -> int:
    mode = "exact" if args.exact else "stochastic"
    res = constructions.search_minimum(cfg.n, cfg.s, mode, cfg.budget, cfg.seed, cfg.force)
    ok = family.check_saturation(res.witness, cfg.s).saturated
    report = {
        "n": res.n,
        "s": res.s,
        "mode": res.mode,
        "minimum_size": res.minimum_size,
        "explored": res.explored,
        "witness": famio.dumps(res.witness, "compact").strip(),
        "witness_verified": ok,
        "conjecture": bounds.conjecture_bound(res.n, res.s),
        "thm_main_ceil": bounds.ceil_frac(bounds.main_bound(res.n, res.s)),
    }
    if mode == "exact":
        ok &= res.minimum_size >= report["thm_main_ceil"]
    report["passed"] = ok
    _emit(report, cfg, out)
    return 0 if ok else 1


def cmd_influence(cfg: RunConfig, out) -> int:
    F = famio.read_family(cfg.files[0])
    rep = influence.influence_report(F, cfg.log_base)
    report = {"influence": rep.to_dict()}
    ok = True
    if rep.p <= Fraction(1, 2):
        sumsq, mx = influence.check_kkl(F, cfg.log_base)
        coord, count, threshold = influence.lemma26_coordinate(F, cfg.log_base)
        report["kkl"] = {"holds_sumsq": sumsq, "holds_max": mx, "asserted": cfg.log_base == "natural"}
        report["lemma26"] = {"coordinate": coord, "boundary_count": count, "threshold": threshold}
        if cfg.log_base == "natural":
            ok = sumsq and mx and influence.at_least(count, threshold)
    else:
        report["kkl"] = {"applicable": False, "reason": "density above 1/2"}
    report["passed"] = ok
    _emit(report, cfg, out)
    return 0 if ok else 1


def cmd_ranklab(cfg: RunConfig, args, out) -> int:
    F = famio.read_family(cfg.files[0])
    rep = polyrank.rank_report(F, cfg.s, args.g0_policy)
    report = {"ranks": rep.to_dict(), "passed": rep.passed}
    if args.dump_vectors:
        dumps = {}
        for k in range(cfg.s):
            vs = polyrank.build_wk_vectors(F, cfg.s, k, "first")
            dumps[str(k)] = [
                famio.to_hex(family.SetFamily(F.n, v.values)) for v in vs
            ]
        report["first_vectors_hex"] = dumps
    _emit(report, cfg, out)
    return 0 if rep.passed else 1


def cmd_selftest(cfg: RunConfig, out) -> int:
    """Small end-to-end pass over every module."""
    checks = {}
    for n, s in [(5, 2), (6, 3), (6, 4)]:
        for F in constructions.random_saturated(n, s, cfg.seed, 3) + [constructions.star_family(n, s)]:
            ids = identity_suite(F, s)
            checks.setdefault(f"identities n={n} s={s}", True)
            checks[f"identities n={n} s={s}"] &= _flags_ok(ids, "natural")
            checks[f"identities n={n} s={s}"] &= bounds.bound_report(F, s).passed
    prof = constructions.section_ratio_profile(constructions.block_family(9, 3))
    checks["block ratio (9,3) = 1/4"] = prof.min_ratio == Fraction(1, 4) == prof.formula
    checks["g(10,2)=4, g(10,3)=3"] = bounds.g_of(10, 2) == 4 and bounds.g_of(10, 3) == 3
    checks["exact minimum n=4 s=2"] = constructions.search_minimum(4, 2).minimum_size == 8
    checks["rank lab star n=3"] = polyrank.rank_report(constructions.star_family(3, 2), 2).passed
    cross = bounds.cross_saturated_check(
        [family.SetFamily.empty(4)] + [family.SetFamily.full(4)] * 2
    )
    checks["cross saturated extremal"] = cross.is_cross_saturated and cross.total == cross.bound
    ok = all(checks.values())
    _emit({"checks": checks, "passed": ok}, cfg, out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "table"), default="json")
    common.add_argument("--log", dest="log_base", choices=influence.LOG_BASES, default="natural")
    common.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("SATURATA_WORKERS", "1")),
        help="recorded in the run config; computations are single-threaded",
    )
    common.add_argument("--force", action="store_true", help="override size guards")
    common.add_argument("--no-timestamp", dest="timestamp", action="store_false")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="saturata", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    v = sub.add_parser("verify", parents=[common], help="check a family file")
    v.add_argument("--file", required=True)
    v.add_argument("--s", type=int, required=True)

    c = sub.add_parser("construct", parents=[common], help="write a construction")
    c.add_argument("kind", choices=("star", "block", "random"))
    c.add_argument("n", type=int)
    c.add_argument("s", type=int)
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--out")
    c.add_argument("--family-format", choices=famio.FORMATS, default="json")

    b = sub.add_parser("bounds", parents=[common], help="bound values over an (n, s) grid")
    b.add_argument("--n")
    b.add_argument("--s")
    b.add_argument("--grid", nargs="+")
    b.add_argument("--trend", action="store_true")

    se = sub.add_parser("search", parents=[common], help="smallest saturated family")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--s", type=int, required=True)
    se.add_argument("--exact", action="store_true")
    se.add_argument("--budget", type=int, default=100)

    i = sub.add_parser("influence", parents=[common], help="influences and KKL checks")
    i.add_argument("--file", required=True)

    r = sub.add_parser("ranklab", parents=[common], help="W_k rank report")
    r.add_argument("--file", required=True)
    r.add_argument("--s", type=int, required=True)
    r.add_argument("--g0-policy", choices=("auto", "none"), default="auto")
    r.add_argument("--dump-vectors", action="store_true")

    sub.add_parser("selftest", parents=[common], help="quick end-to-end check")
    return p


def _config(args) -> RunConfig:
    cfg = RunConfig(
        subcommand=args.subcommand,
        fmt=args.fmt,
        log_base=args.log_base,
        workers=args.workers,
        force=args.force,
        timestamp=args.timestamp,
        seed=args.seed,
    )
    if getattr(args, "file", None):
        cfg.files = [args.file]
    for key in ("n", "s", "count", "budget"):
        val = getattr(args, key, None)
        if isinstance(val, int):
            setattr(cfg, key, val)
    return cfg


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    cfg = _config(args)
    try:
        if cfg.subcommand == "verify":
            return cmd_verify(cfg, out)
        if cfg.subcommand == "construct":
            return cmd_construct(cfg, args, out)
        if cfg.subcommand == "bounds":
            return cmd_bounds(cfg, args, out)
        if cfg.subcommand == "search":
            return cmd_search(cfg, args, out)
        if cfg.subcommand == "influence":
            return cmd_influence(cfg, out)
        if cfg.subcommand == "ranklab":
            return cmd_ranklab(cfg, args, out)
        if cfg.subcommand == "selftest":
            return cmd_selftest(cfg, out)
    except (famio.FamilyFormatError, GuardError, ValueError, OSError) as exc:
        print(f"saturata {cfg.subcommand}: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
