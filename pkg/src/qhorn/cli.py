"""Command-line front end.

    qhorn generate --group G2 --mode th3 [--format json|csv|text] [--out PATH]
    qhorn polytope --group Spin7 [--full]
    qhorn member   --group G2 --point 0,1/4 --point 1/4,0 --point 0,0 (or --t1/--t2/--t3)
    qhorn table    --group G2 --group "Sp(4)" [--skip-polytope]
    qhorn pw-scan  --group G2

Exit codes: 0 success, 2 configuration error, 1 internal failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .horn import Mode, check_pw_lift, generate, membership, to_hrep
from .polytope import facets, vertices
from .rootsys import CartanType, RootSystemError, group_label, parse_group
from .serialize import (
    inequalities_to_csv,
    inequalities_to_json,
    inequalities_to_text,
    inequality_text,
    rat,
)

log = logging.getLogger("qhorn")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    groups: list[str]
    mode: str = "th3"
    fmt: str = "text"
    jobs: int = 1
    out: str | None = None
    skip_polytope: bool = False
    max_rank: int = 4
    full: bool = False
    points: list[str] = field(default_factory=list)

    def cartan_types(self) -> list[CartanType]:
        out = []
        for g in self.groups:
            try:
                ct = parse_group(g)
            except RootSystemError as exc:
                raise ConfigError(str(exc)) from exc
            if ct.rank > self.max_rank:
                raise ConfigError(f"{g} has rank {ct.rank} > --max-rank {self.max_rank}")
            out.append(ct)
        if not out:
            raise ConfigError("no group given")
        return out

    def mode_enum(self) -> Mode:
        try:
            return Mode(self.mode.lower())
        except ValueError as exc:
            raise ConfigError(f"unknown mode {self.mode!r}") from exc


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(cfg: RunConfig) -> str:
    (ct,) = cfg.cartan_types()[:1]
    mode = cfg.mode_enum()
    ineqs = generate(ct, mode, jobs=cfg.jobs)
    name = cfg.groups[0]
    if cfg.fmt == "json":
        return inequalities_to_json(name, mode.value, ineqs)
    if cfg.fmt == "csv":
        return inequalities_to_csv(ineqs)
    return inequalities_to_text(name, mode.value, ineqs)


def polytope_summary(ct: CartanType, mode: Mode, jobs: int = 1, full: bool = False) -> dict:
    ineqs = generate(ct, mode, jobs=jobs)
    h = to_hrep(ineqs)
    v = vertices(h)
    f = facets(h)
    out = {
        "group": group_label(ct),
        "mode": mode.value,
        "inequalities": len(ineqs),
        "facets": len(f),
        "vertices": len(v),
    }
    if full:
        out["facet_rows"] = [{"lhs": [rat(x) for x in a], "rhs": rat(b)} for a, b in f.rows]
        out["vertex_points"] = [[rat(x) for x in p] for p in v.points]
    return out


def cmd_polytope(cfg: RunConfig) -> str:
    (ct,) = cfg.cartan_types()[:1]
    summary = polytope_summary(ct, cfg.mode_enum(), cfg.jobs, cfg.full)
    if cfg.fmt == "json":
        return json.dumps(summary, indent=1) + "\n"
    lines = [
        f"group {summary['group']} mode {summary['mode']}",
        f"inequalities {summary['inequalities']}",
        f"facets {summary['facets']}",
        f"vertices {summary['vertices']}",
    ]
    if cfg.full:
        lines += ["# facets"] + [" ".join(r["lhs"]) + " <= " + r["rhs"] for r in summary["facet_rows"]]
        lines += ["# vertices"] + [" ".join(p) for p in summary["vertex_points"]]
    return "\n".join(lines) + "\n"


def _parse_point(s: str, rank: int) -> tuple[Fraction, ...]:
    try:
        pt = tuple(Fraction(x.strip()) for x in s.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"malformed point {s!r}") from exc
    if len(pt) != rank:
        raise ConfigError(f"point {s!r} has {len(pt)} coordinates, expected {rank}")
    return pt


def cmd_member(cfg: RunConfig) -> str:
    (ct,) = cfg.cartan_types()[:1]
    if len(cfg.points) != 3:
        raise ConfigError("membership needs exactly three points")
    pts = [_parse_point(s, ct.rank) for s in cfg.points]
    ineqs = generate(ct, cfg.mode_enum(), jobs=cfg.jobs)
    verdict = membership(ineqs, *pts)
    if cfg.fmt == "json":
        return json.dumps(
            {
                "group": cfg.groups[0],
                "points": [[rat(x) for x in p] for p in pts],
                "verdict": verdict.status,
                "tight": verdict.tight,
                "violated": verdict.violated,
            },
            indent=1,
        ) + "\n"
    lines = [verdict.status]
    lines += [f"tight    #{k}: {inequality_text(ineqs[k])}" for k in verdict.tight]
    lines += [f"violated #{k}: {inequality_text(ineqs[k])}" for k in verdict.violated]
    return "\n".join(lines) + "\n"


TABLE_MODES = (Mode.MAX, Mode.TW, Mode.TWBK, Mode.TH3)


def table_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    for ct in cfg.cartan_types():
        t0 = time.perf_counter()
        row = {"group": group_label(ct)}
        for m in TABLE_MODES:
            row[m.value] = len(generate(ct, m, jobs=cfg.jobs))
        if cfg.skip_polytope:
            row["vertices"] = row["facets"] = None
        else:
            h = to_hrep(generate(ct, Mode.TH3, jobs=cfg.jobs))
            row["vertices"] = len(vertices(h))
            row["facets"] = len(facets(h))
        row["seconds"] = round(time.perf_counter() - t0, 2)
        log.info("%s done in %.2fs", row["group"], row["seconds"])
        rows.append(row)
    return rows


def cmd_table(cfg: RunConfig) -> str:
    rows = table_rows(cfg)
    if cfg.fmt == "json":
        for r in rows:
            r.pop("seconds")
        return json.dumps(rows, indent=1) + "\n"
    head = ["Group", "MAX", "TW", "TWBK*", "TH3", "Vertices", "Facets"]
    body = [
        [
            r["group"],
            *(str(r[m.value]) for m in TABLE_MODES),
            "?" if r["vertices"] is None else str(r["vertices"]),
            "?" if r["facets"] is None else str(r["facets"]),
        ]
        for r in rows
    ]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    lines = [fmt.format(*head)] + [fmt.format(*b) for b in body]
    lines.append("* TWBK = GW = 1 plus the classical chi-condition at d = 0 (interpretation)")
    return "\n".join(lines) + "\n"


def cmd_pw_scan(cfg: RunConfig) -> str:
    out = []
    for ct in cfg.cartan_types():
        out.extend(check_pw_lift(ct).lines())
    return "\n".join(out) + "\n"


COMMANDS = {
    "generate": cmd_generate,
    "polytope": cmd_polytope,
    "member": cmd_member,
    "table": cmd_table,
    "pw-scan": cmd_pw_scan,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhorn", description="Multiplicative Horn inequalities and polytopes")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--group", "-g", action="append", default=[], help="G2, B3, Sp(4), Spin(7), ...")
        sp.add_argument("--mode", "-m", default="th3", help="max, tw, twbk, th3, additive")
        sp.add_argument("--format", "-f", dest="fmt", default="text", choices=["json", "csv", "text"])
        sp.add_argument("--jobs", "-j", type=int, default=1)
        sp.add_argument("--out", "-o")
        sp.add_argument("--skip-polytope", action="store_true")
        sp.add_argument("--max-rank", type=int, default=4, help="refuse larger groups (stretch rows need 6)")
        if name == "polytope":
            sp.add_argument("--full", action="store_true", help="emit the facet rows and vertices")
        if name == "member":
            sp.add_argument("--point", "-p", action="append", default=[], help="comma-separated t coordinates")
            sp.add_argument("--t1")
            sp.add_argument("--t2")
            sp.add_argument("--t3")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    points = list(getattr(args, "point", []) or [])
    points += [p for p in (getattr(args, k, None) for k in ("t1", "t2", "t3")) if p is not None]
    cfg = RunConfig(
        groups=args.group,
        mode=args.mode,
        fmt=args.fmt,
        jobs=max(1, args.jobs),
        out=args.out,
        skip_polytope=args.skip_polytope,
        max_rank=args.max_rank,
        full=getattr(args, "full", False),
        points=points,
    )
    try:
        text = COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"qhorn: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        log.exception("internal failure")
        print(f"qhorn: internal error: {exc}", file=sys.stderr)
        return 1
    _emit(cfg, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
