"""Command-line front end: ``kummerweb <command> [options]``.

Exit status is 0 when every check passes, 1 when at least one fails and 2
on usage or domain errors.  ``--out FILE`` writes a JSON report (schema in
README.md); without ``--out`` the report goes to ``$KUMMERWEB_OUT_DIR`` when
that variable is set.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
import time
from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np

from . import __version__, identities, polylog, relations, web
from .corrections import CORRECTIONS
from .results import CheckResult
from .web import SubwebSelector

SCHEMA = "kummerweb.report/1"
OUT_DIR_ENV = "KUMMERWEB_OUT_DIR"

# box around the base point (1/3, 1/2) used for residual sampling
BASIS_BOX = ((0.25, 0.4), (0.45, 0.6))

# stream ids for the seeded generators; one independent stream per check
STREAMS = {
    "verify-basis": 1,
    "li2-nine": 2,
    "goncharov": 3,
    "specialization": 4,
    "corollary": 5,
    "kummer-random": 6,
    "polylog-routes": 7,
}

KNOWN_RANKS = {
    (): 28,
    (6, 7, 8, 9): 6,
    (6, 9): 15,
    (3, 6): 15,
    (3, 9): 15,
    (6, 7, 9): 10,
    (6, 8, 9): 10,
    (3, 4, 9): 10,
    (2, 3, 6): 10,
    (3, 5, 9): 10,
    (1, 3, 6): 10,
    (2, 4, 8): 10,
    (1, 4, 7): 10,
    (2, 5, 7): 10,
    (1, 5, 8): 10,
    (3, 6, 9): 10,
    (4, 5, 6, 7, 8, 9): 1,
}

KNOWN_HEXAGONALITY = {
    (1, 2, 4, 5, 7, 8): True,
    (1, 2, 3, 4, 5): False,
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-10
    samples: int = 50
    seed: int = 0
    out: str | None = None
    precision: str = "standard"

    def __post_init__(self):
        if not 0 < self.tolerance < 1:
            raise UsageError("--tol must lie in (0, 1)")
        if self.samples < 1:
            raise UsageError("--samples must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        if self.precision not in ("standard", "oracle"):
            raise UsageError("--precision is standard or oracle")


def rng_for(cfg, stream):
    """PCG64 generator for one named check, independent of every other check."""
    ss = np.random.SeedSequence(cfg.seed, spawn_key=(STREAMS[stream],))
    return np.random.Generator(np.random.PCG64(ss))


# ---------------------------------------------------------------------------
# sampling


def box_points(rng, n, box=BASIS_BOX):
    (x0, x1), (y0, y1) = box
    pts = []
    while len(pts) < n:
        x, y = rng.uniform(x0, x1), rng.uniform(y0, y1)
        if x < y:
            pts.append((float(x), float(y)))
    return pts


def domain_points(rng, n, bound=1.0):
    pts = []
    while len(pts) < n:
        x, y = sorted(rng.uniform(0, bound, size=2))
        if 0 < x < y < bound and y - x > 1e-3:
            pts.append((float(x), float(y)))
    return pts


def complex_points(rng, n, rmin=0.2, rmax=5.0):
    r = np.exp(rng.uniform(math.log(rmin), math.log(rmax), size=n))
    th = rng.uniform(-math.pi, math.pi, size=n)
    return [complex(a, b) for a, b in zip(r * np.cos(th), r * np.sin(th))]


def kummer_grid(n, margin=0.05):
    g = np.linspace(margin, 1 - margin, n)
    return [(float(x), float(y)) for x in g for y in g if x < y]


# ---------------------------------------------------------------------------
# checks


def check_basis(cfg):
    pts = box_points(rng_for(cfg, "verify-basis"), cfg.samples)
    out = []
    for rel in relations.gamma_basis():
        value = max(abs(relations.residual(rel, p)) for p in pts)
        out.append(CheckResult(
            f"residual {rel.label}", "residual", value, cfg.tolerance,
            {"samples": cfg.samples, "box": [list(b) for b in BASIS_BOX]},
        ))
    return out


def check_full_rank(cfg, tols=(1e-10, 1e-8, 1e-6)):
    m = relations.relation_matrix()
    return [
        CheckResult("rank of gamma", "rank", relations.numerical_rank(m, t), 36, {"tol": t})
        for t in tols
    ]


def check_constant_rank():
    m = relations.relation_matrix(relations.constant_basis())
    return CheckResult("rank of constants", "rank", relations.numerical_rank(m), 8, {})


def subweb_check(sel):
    excluded = tuple(i for i in range(1, 10) if i not in sel.indices)
    dims = {t: relations.subweb_rank(sel, t) for t in (1e-10, 1e-8, 1e-6)}
    value = dims[1e-8]
    expected = KNOWN_RANKS.get(excluded)
    if expected is None:
        # no reference value: require the verdict to be tolerance-independent
        expected = value if len(set(dims.values())) == 1 else None
    return CheckResult(
        f"rank({sel.label()})", "rank", value, expected,
        {"subweb": list(sel.indices)},
    )


def check_subweb_table():
    return [subweb_check(SubwebSelector.complement(ex)) for ex in KNOWN_RANKS]


def hexagonal_check(sel):
    cert = web.is_hexagonal(sel)
    expected = KNOWN_HEXAGONALITY.get(sel.indices)
    nonzero = cert.nonzero_triples()
    return CheckResult(
        f"hexagonal({sel.label()})", "curvature-verdict", cert.hexagonal,
        cert.hexagonal if expected is None else expected,
        {"subweb": list(sel.indices), "nonzero_triples": [list(t) for t in nonzero]},
    )


def check_kummer_grid(cfg, n=15):
    f = _oracle_li3 if cfg.precision == "oracle" else None
    values = [abs(identities.kummer_lhs(p, f=f) - identities.e3(p)) for p in kummer_grid(n)]
    return CheckResult("kummer grid", "residual", max(values), 1e-11, {"grid": n, "margin": 0.05})


def check_kummer_random(cfg, n=200):
    pts = domain_points(rng_for(cfg, "kummer-random"), n)
    value = max(identities.check_kummer(p).value for p in pts)
    return CheckResult("kummer random", "residual", value, 1e-11, {"samples": n})


def _oracle_li3(t):
    return polylog.li_oracle(3, t).real


def check_li2_sweep(cfg, n=None):
    n = n or cfg.samples
    pts = domain_points(rng_for(cfg, "li2-nine"), n)
    value = max(identities.check_li2_nine(p).value for p in pts)
    return CheckResult("li2-nine", "residual", value, 1e-11, {"samples": n})


def check_goncharov_sweep(cfg, n=None):
    n = n or cfg.samples
    rng = rng_for(cfg, "goncharov")
    value = 0.0
    for _ in range(n):
        a, b, c = complex_points(rng, 3)
        value = max(value, identities.check_goncharov(a, b, c).value)
    return CheckResult(
        "goncharov", "residual", value, 1e-8, {"samples": n},
        corrections=tuple(c["id"] for c in CORRECTIONS),
    )


def check_specialization_sweep(cfg, n=20):
    pts = domain_points(rng_for(cfg, "specialization"), n)
    value = max(identities.check_specialization(p).value for p in pts)
    return CheckResult(
        "a=1 specialization", "residual", value, 1e-8, {"samples": n},
        corrections=tuple(c["id"] for c in CORRECTIONS),
    )


def check_corollary_sweep(cfg, alpha, n=20):
    pts = domain_points(rng_for(cfg, "corollary"), n, identities.EPSILON0)
    value = max(identities.check_corollary(alpha, p).value for p in pts)
    return CheckResult(
        f"corollary alpha={alpha:g}", "residual", value, 1e-9,
        {"alpha": alpha, "samples": n, "epsilon0": identities.EPSILON0},
    )


def check_polylog_routes(cfg, n=500):
    rng = rng_for(cfg, "polylog-routes")
    value = 0.0
    for z in complex_points(rng, n, 0.1, 10.0):
        for s in (2, 3):
            value = max(value, polylog.route_discrepancy(s, z))
    return CheckResult("polylog routes", "residual", value, 1e-12, {"samples": n})


# ---------------------------------------------------------------------------
# report serialization


def _to_17g(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isfinite(obj):
            return _Float17(obj)
        return "nan" if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {k: _to_17g(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_17g(v) for v in obj]
    if isinstance(obj, np.generic):
        return _to_17g(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


class _Float17(str):
    pass


_FLOAT_TAG = "\u0000f17:"
_FLOAT_RE = re.compile(r'"\\u0000f17:([^"]*)"')


def _tag_floats(obj):
    if isinstance(obj, _Float17):
        return _FLOAT_TAG + format(float(obj), ".17g")
    if isinstance(obj, dict):
        return {k: _tag_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_tag_floats(v) for v in obj]
    return obj


def emit_report(results, cfg, command):
    """JSON report with field order fixed and floats printed to 17 significant digits."""
    if not results:
        raise ValueError("a report needs at least one result")
    used = sorted({cid for r in results for cid in r.corrections})
    doc = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": list(command),
        "config": asdict(cfg),
        "passed": all(r.passed for r in results),
        "results": [r.as_dict() for r in results],
        "corrections": [c for c in CORRECTIONS if c["id"] in used],
    }
    text = json.dumps(_tag_floats(_to_17g(doc)), indent=2)
    return _FLOAT_RE.sub(lambda m: m.group(1), text) + "\n"


# ---------------------------------------------------------------------------
# argument handling


def _index_list(text):
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated strand indices, got {text!r}")
    if any(v < 1 or v > 9 for v in vals):
        raise argparse.ArgumentTypeError(f"strand indices must lie in 1..9, got {text!r}")
    return vals


def _common(p, samples=None):
    p.add_argument("--tol", type=float, default=1e-10, help="residual tolerance (default 1e-10)")
    p.add_argument("--samples", type=int, default=samples or 50)
    p.add_argument("--seed", type=int, default=0, help="64-bit seed for the PCG64 streams")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--precision", choices=("standard", "oracle"), default="standard")


def _selector_args(p, required=False):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--subweb", type=_index_list, help="strands to keep, e.g. 1,2,3,4,5")
    g.add_argument("--exclude", type=_index_list, help="strands to drop, e.g. 6,9")


def build_parser():
    parser = argparse.ArgumentParser(prog="kummerweb", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"kummerweb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("verify-basis", help="residuals of the 36 relations and the rank of their matrix")
    _common(p)
    p = sub.add_parser("rank", help="rank of the full web or a sub-web")
    _common(p)
    _selector_args(p)
    p = sub.add_parser("curvature", help="exact Blaschke curvature of a 3-sub-web")
    _common(p)
    p.add_argument("--triple", type=_index_list, required=True)
    p = sub.add_parser("hexagonal", help="exact hexagonality test of a sub-web")
    _common(p)
    _selector_args(p, required=True)
    p = sub.add_parser("kummer", help="Kummer's trilogarithm equation at a point or on a grid")
    _common(p)
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--grid", type=int)
    p = sub.add_parser("li2-nine", help="the nine-strand dilogarithm identity at random samples")
    _common(p)
    p = sub.add_parser("goncharov", help="the 22-term relation at random complex triples")
    _common(p, samples=100)
    p = sub.add_parser("corollary", help="the one-parameter solution family")
    _common(p, samples=20)
    p.add_argument("--alpha", type=float, required=True)
    p = sub.add_parser("report", help="run every registered check")
    _common(p)
    p.add_argument("--all", action="store_true", required=True)
    return parser


def _selector_from(args):
    if args.subweb is not None:
        return SubwebSelector(args.subweb)
    if args.exclude is not None:
        return SubwebSelector.complement(args.exclude)
    return SubwebSelector(range(1, 10))


def _unicode_label(sel):
    missing = [i for i in range(1, 10) if i not in sel.indices]
    if not missing:
        return "K"
    if len(missing) <= len(sel.indices):
        return "T_{" + "".join(f"{i}̂" for i in missing) + "}"
    return "T_{" + ",".join(map(str, sel.indices)) + "}"


def _run_command(args, cfg, say):
    cmd = args.command
    if cmd == "verify-basis":
        results = check_basis(cfg)
        rank = check_full_rank(cfg, (1e-8,))
        ok = sum(r.passed for r in results)
        say(f"{ok}/{len(results)} relations pass, rank {rank[0].value}")
        return results + rank
    if cmd == "rank":
        sel = _selector_from(args)
        r = subweb_check(sel)
        say(f"rank({_unicode_label(sel)}) = {r.value}")
        return [r]
    if cmd == "curvature":
        if len(args.triple) != 3:
            raise UsageError("--triple takes exactly three indices")
        i, j, k = args.triple
        curv = web.blaschke_curvature(i, j, k)
        say(f"K({i},{j},{k}) = {curv.render()}")
        return [CheckResult(
            f"curvature({i},{j},{k})", "curvature-verdict", curv.is_zero, curv.is_zero,
            {"triple": [i, j, k], "curvature": curv.render()},
        )]
    if cmd == "hexagonal":
        sel = _selector_from(args)
        r = hexagonal_check(sel)
        n = len(list(combinations(sel.indices, 3)))
        bad = r.inputs["nonzero_triples"]
        say(f"{_unicode_label(sel)}: {'hexagonal' if r.value else 'not hexagonal'} "
            f"({n - len(bad)}/{n} curvatures vanish)")
        return [r]
    if cmd == "kummer":
        if args.grid is not None:
            if args.x is not None or args.y is not None:
                raise UsageError("give either --x/--y or --grid")
            if args.grid < 2:
                raise UsageError("--grid needs at least 2 nodes")
            r = check_kummer_grid(cfg, args.grid)
        elif args.x is not None and args.y is not None:
            r = identities.check_kummer(args.x, args.y, tol=1e-11)
        else:
            raise UsageError("kummer needs --x and --y, or --grid N")
        say(f"kummer residual {r.value:.3e}")
        return [r]
    if cmd == "li2-nine":
        r = check_li2_sweep(cfg)
        say(f"li2-nine max residual {r.value:.3e} over {cfg.samples} samples")
        return [r]
    if cmd == "goncharov":
        r = check_goncharov_sweep(cfg)
        s = check_specialization_sweep(cfg, min(cfg.samples, 20))
        say(f"goncharov max residual {r.value:.3e} over {cfg.samples} triples; "
            f"a=1 specialization {s.value:.3e}")
        return [r, s]
    if cmd == "corollary":
        r = check_corollary_sweep(cfg, args.alpha, cfg.samples)
        say(f"corollary alpha={args.alpha:g} max residual {r.value:.3e}")
        return [r]
    if cmd == "report":
        return run_all(cfg, say)
    raise UsageError(f"unknown command {cmd!r}")


def run_all(cfg, say=print):
    results = []
    results += check_basis(cfg)
    results += check_full_rank(cfg)
    results.append(check_constant_rank())
    results += check_subweb_table()
    results.append(hexagonal_check(SubwebSelector.complement({3, 6, 9})))
    results.append(hexagonal_check(SubwebSelector(range(1, 6))))
    results.append(check_kummer_grid(cfg))
    results.append(check_kummer_random(cfg))
    results.append(check_li2_sweep(cfg, 50))
    results.append(check_goncharov_sweep(cfg, 100))
    results.append(check_specialization_sweep(cfg))
    for alpha in (0.0, 0.5, 1.0):
        results.append(check_corollary_sweep(cfg, alpha))
    results.append(check_polylog_routes(cfg))
    for r in results:
        say(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.value} (threshold {r.threshold})")
    say(f"{sum(r.passed for r in results)}/{len(results)} checks pass")
    return results


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    say = lambda msg: print(msg, file=stdout)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    try:
        cfg = RunConfig(args.tol, args.samples, args.seed, args.out, args.precision)
        results = _run_command(args, cfg, say)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # domain errors from the library modules are reported verbatim
        print(f"error: {exc}", file=sys.stderr)
        return 2
    path = cfg.out
    if path is None and os.environ.get(OUT_DIR_ENV):
        path = os.path.join(os.environ[OUT_DIR_ENV], f"{args.command}.json")
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(emit_report(results, cfg, argv))
    say(f"wall time {time.perf_counter() - start:.2f} s")
    return 0 if all(r.passed for r in results) else 1


def main():
    sys.exit(run())
