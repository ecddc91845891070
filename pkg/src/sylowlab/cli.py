"""``sylowlab`` command line.

Exit codes: 0 success, 1 input error, 2 internal inconsistency (a computed
result contradicting a theorem; always a bug).
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass

from . import catalog
from .corpus import builtin_corpus, load_dir
from .criterion import (CHECKS, CRITERIA, ReplayError, TheoremViolation, evaluate,
                        replay_contradictions, vp_profile)
from .gstruct import is_nilpotent, is_solvable
from .numtheory import is_prime
from .permcore import DEFAULT_ENUMERATION_CAP, CapExceededError, ParseError, load_group
from .sylow import DEFAULT_ORBIT_CAP, DEFAULT_SEED, SylowInvariantError, count_sylow

log = logging.getLogger("sylowlab")


@dataclass
class CliConfig:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    orbit_cap: int = DEFAULT_ORBIT_CAP
    seed: int = DEFAULT_SEED
    output: str = "text"
    verbosity: int = 0

    def __post_init__(self):
        if self.enumeration_cap < 1 or self.orbit_cap < 1:
            raise ValueError("caps must be positive")

    @property
    def caps(self) -> dict:
        return {"cap": self.enumeration_cap, "orbit_cap": self.orbit_cap}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _fmt_factorization(fac) -> str:
    return " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in fac) or "1"


def cmd_info(args, cfg: CliConfig) -> int:
    G = load_group(args.file)
    name = os.path.splitext(os.path.basename(args.file))[0]
    profile = vp_profile(G, name, seed=cfg.seed, **cfg.caps)
    solvable = is_solvable(G)
    nilpotent = all(e.v_p == 1 for e in profile.entries)
    if cfg.output == "json":
        d = profile.as_dict()
        d.update(degree=G.degree, solvable=solvable, nilpotent=nilpotent)
        _emit(d)
    else:
        print(f"group      {name}")
        print(f"degree     {G.degree}")
        print(f"order      {profile.order}")
        print(f"factors    {_fmt_factorization(profile.factorization)}")
        print(f"solvable   {'yes' if solvable else 'no'}")
        print(f"nilpotent  {'yes' if nilpotent else 'no'}")
    return 0


def cmd_sylow(args, cfg: CliConfig) -> int:
    G = load_group(args.file)
    name = os.path.splitext(os.path.basename(args.file))[0]
    if args.p is not None:
        if not is_prime(args.p):
            raise ValueError(f"--p must be prime, got {args.p}")
        reports = [count_sylow(G, args.p, seed=cfg.seed, **cfg.caps)]
        order = G.order()
        fac = [[args.p, reports[0].a]]
        profile = {"group": name, "order": order, "factorization": fac,
                   "profile": [r.as_dict() for r in reports]}
    else:
        prof = vp_profile(G, name, seed=cfg.seed, **cfg.caps)
        reports = prof.entries
        profile = prof.as_dict()
    if cfg.output == "json":
        _emit(profile)
    else:
        for r in reports:
            print(f"p={r.p} a={r.a} v_p={r.v_p} normalizer={r.normalizer_order}")
    return 0


def cmd_check(args, cfg: CliConfig) -> int:
    G = load_group(args.file)
    name = os.path.splitext(os.path.basename(args.file))[0]
    row = evaluate(G, name, seed=cfg.seed, **cfg.caps)
    if cfg.output == "json":
        _emit(row.as_dict())
        return 0
    selected = [args.criterion] if args.criterion else list(CRITERIA)
    for c in selected:
        v = row.verdicts[c]
        print(f"{c}: hypothesis {'true' if v.hypothesis_satisfied else 'false'}, "
              f"solvable {'true' if v.actual_solvable else 'false'}, "
              f"{'consistent' if v.consistent else 'INCONSISTENT'}")
    return 0


def cmd_catalog(args, cfg: CliConfig) -> int:
    params = {k: getattr(args, k) for k in ("n", "q", "m", "p", "k") if getattr(args, k) is not None}
    if args.family.lower() == "dihedral" and "m" not in params and "n" in params:
        params["m"] = params.pop("n")
    row = catalog.formula_row(args.family, **params)
    if args.export:
        entry = catalog.build(args.family, **params)
        entry.export(args.export)
        log.info("wrote %s", args.export)
    if cfg.output == "json":
        _emit(row)
    else:
        for key, value in row.items():
            if isinstance(value, dict):
                value = ", ".join(f"v{p}={v}" for p, v in value.items())
            print(f"{key} {value}")
    return 0


def cmd_replay(args, cfg: CliConfig) -> int:
    rows = replay_contradictions(seed=cfg.seed)
    if cfg.output == "json":
        _emit([r.as_dict() for r in rows])
        return 0
    for r in rows:
        vals = " ".join(f"v{p}={v}" for p, v in sorted(r.values.items()))
        print(f"{r.family:8s} {r.group:11s} {r.source:8s} {vals}")
        print(f"{'':29s}v2>4: {'yes' if r.thm11_violated else 'no'}; "
              f"v_p>p^2 at p={','.join(map(str, r.thm13_violations))}")
        for note in r.notes:
            print(f"{'':29s}{note}")
    print(f"all {len(rows)} rows violate both bounds")
    return 0


def cmd_scan(args, cfg: CliConfig) -> int:
    groups = builtin_corpus() if args.dir is None else load_dir(args.dir)
    t0 = time.perf_counter()
    rows = [evaluate(G, name, seed=cfg.seed, **cfg.caps) for name, G in groups]
    records = [r.as_dict() for r in rows]
    if args.json_out:
        text = json.dumps(records, indent=2) + "\n"
        if args.json_out == "-":
            sys.stdout.write(text)
        else:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(text)
    if cfg.output == "json":
        if args.json_out != "-":
            _emit(records)
        return 0
    if args.json_out == "-":
        return 0
    print(f"{'group':10s} {'order':>6s} {'solv':>5s} {'thm11':>6s} {'thm13':>6s} {'conj12':>6s}  v_p <= p^2 by odd p")
    for r in rows:
        hyp = {c: "yes" if r.verdicts[c].hypothesis_satisfied else "no" for c in CRITERIA}
        bounds = " ".join(f"{p}:{'y' if ok else 'n'}" for p, ok in r.odd_bounds().items()) or "-"
        print(f"{r.profile.group:10s} {r.profile.order:6d} "
              f"{'yes' if r.verdicts['thm11'].actual_solvable else 'no':>5s} "
              f"{hyp['thm11']:>6s} {hyp['thm13']:>6s} {hyp['conj12']:>6s}  {bounds}")
    print(f"{len(rows)} groups, 0 inconsistent verdicts")
    print(f"elapsed {time.perf_counter() - t0:.2f}s")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sylowlab", description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=None,
                    help="random seed (default: $SYLOWLAB_SEED or 0)")
    ap.add_argument("--enum-cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    ap.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--json", dest="format", action="store_const", const="json")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="degree, order, factorization, solvable, nilpotent")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sylow", help="Sylow counts")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("check", help="solvability criteria verdicts")
    p.add_argument("--criterion", choices=CRITERIA, default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("catalog", help="closed-form row for a catalog family")
    p.add_argument("family", help="alternating, symmetric, cyclic, dihedral, psl2, psl3, "
                                  "suzuki, sl2, affine")
    for flag in ("n", "q", "m", "p", "k"):
        p.add_argument(f"--{flag}", type=int, default=None)
    p.add_argument("--export", default=None, help="write the group file here")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("replay", help="bound violations of the minimal simple families")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("scan", help="evaluate every group file in a directory")
    p.add_argument("dir", nargs="?", default=None, help="default: built-in corpus")
    p.add_argument("--json", dest="json_out", default=None, metavar="OUT",
                   help="write the JSON report to OUT ('-' for stdout)")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("SYLOWLAB_SEED", DEFAULT_SEED))
    try:
        cfg = CliConfig(args.enum_cap, args.orbit_cap, seed, args.format, args.verbose)
        return args.func(args, cfg)
    except (TheoremViolation, ReplayError, SylowInvariantError) as exc:
        print(f"sylowlab: INTERNAL INCONSISTENCY: {exc}", file=sys.stderr)
        return 2
    except (ParseError, CapExceededError, catalog.CatalogError, OSError, ValueError) as exc:
        print(f"sylowlab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
