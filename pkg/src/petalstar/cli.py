"""Command-line entry point: ``petalstar {verify,search,extremal,maximize,admissible}``.

Exit codes: 0 success, 1 when ``verify`` has at least one FAIL row, 2 usage
or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .caratheodory import toeplitz_admissible
from .errors import PetalError
from .extremal import extremal_fn
from .functionals import FUNCTIONAL_NAMES, resolve_functional

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _resolution(text: str) -> int:
    v = int(text)
    if v < 3:
        raise argparse.ArgumentTypeError("resolution must be >= 3")
    return v


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _as_fraction(x: float) -> str:
    fr = Fraction(x).limit_denominator(10**6)
    return str(fr) if abs(float(fr) - x) <= 1e-12 else repr(x)


# -- subcommands ---------------------------------------------------------------


def cmd_verify(args) -> int:
    from .report import CLAIM_IDS, FAIL, Settings, build_report, render_json, render_markdown, run_claims

    if args.claim:
        unknown = sorted(set(args.claim) - set(CLAIM_IDS))
        if unknown:
            raise PetalError(f"unknown claim id(s) {', '.join(unknown)}; choose from {', '.join(CLAIM_IDS)}")
    settings = Settings(seed=args.seed, budget=args.budget, resolution=args.resolution)
    t0 = time.perf_counter()
    rows = run_claims(settings, args.claim, jobs=args.jobs)
    elapsed = (time.perf_counter() - t0) * 1e3 if args.timing else None
    report = build_report(settings, rows, elapsed)
    render = render_json if args.format == "json" else render_markdown
    sys.stdout.write(render(report))
    return EXIT_FAIL if any(r.status == FAIL for r in rows) else EXIT_OK


def cmd_search(args) -> int:
    from .optimizer import witness_search

    func = resolve_functional(args.functional)
    bound = args.bound if args.bound is not None else func.sharp_bound
    if bound is None:
        raise PetalError(f"{args.functional} has no default bound; pass --bound")
    rep = witness_search(func, bound, budget=args.budget, seed=args.seed)
    _dump(rep.to_dict())  # a VIOLATION is reported in the output, not through the exit code
    return EXIT_OK


def cmd_extremal(args) -> int:
    m = extremal_fn(args.n, args.order)
    c = m.f.coeffs[1:].real  # a1 .. a_order
    last = max((k for k, v in enumerate(c) if abs(v) > 1e-15), default=0)
    c = c[: last + 1]
    _dump({
        "n": args.n,
        "order": args.order,
        "schwarz": f"z^{args.n}",
        "coefficients": [_as_fraction(float(v)) for v in c],
        "decimal": [round(float(v), 12) for v in c],
    })
    return EXIT_OK


def cmd_maximize(args) -> int:
    from .optimizer import cuboid_max, eval_M, grad_M

    res = cuboid_max(eval_M, resolution=args.resolution, gradient=grad_M, workers=args.jobs)
    _dump({
        "max_value": round(res.max_value, 12),
        "argmax": [round(c, 9) for c in res.argmax],
        "grid_resolution": res.grid_resolution,
        "refinement_tolerance": res.refinement_tolerance,
        "regions": [{"label": r.label, "value": round(r.value, 12), "argmax": [round(c, 9) for c in r.argmax]}
                    for r in res.face_edge_table],
        "interior_critical_points": [[round(c, 9) for c in e.point] for e in res.interior_critical_points],
    })
    return EXIT_OK


def cmd_admissible(args) -> int:
    try:
        p = [complex(t.strip().replace("i", "j")) for t in args.p.split(",") if t.strip()]
    except ValueError:
        raise PetalError(f"cannot parse coefficient list {args.p!r}") from None
    if not p:
        raise PetalError("empty coefficient list")
    print(toeplitz_admissible(p).value)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="petalstar", description="Coefficient and Hankel bounds for the petal class.")
    ap.add_argument("--version", action="version", version=f"petalstar {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="recompute every published constant and report")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--seed", type=_u64, default=0)
    v.add_argument("--claim", action="append", metavar="ID", help="run only this claim (repeatable)")
    v.add_argument("--budget", type=_positive, default=20000, help="random samples per witness search")
    v.add_argument("--resolution", type=_resolution, default=201, help="grid resolution of the cuboid search")
    v.add_argument("--jobs", type=_positive, default=1, help="claims run concurrently on this many threads")
    v.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes output run-dependent)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="numerical witness search for a functional")
    s.add_argument("functional", help=f"one of {', '.join(FUNCTIONAL_NAMES)}")
    s.add_argument("--bound", type=float, default=None)
    s.add_argument("--budget", type=_positive, default=20000)
    s.add_argument("--seed", type=_u64, default=0)
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("extremal", help="Taylor coefficients of the extremal with Schwarz function z^n")
    e.add_argument("n", type=_positive)
    e.add_argument("--order", type=_positive, default=12)
    e.set_defaults(func=cmd_extremal)

    m = sub.add_parser("maximize", help="maximise the H3,1 majorant over the cuboid")
    m.add_argument("--resolution", type=_resolution, default=201)
    m.add_argument("--jobs", type=_positive, default=1)
    m.set_defaults(func=cmd_maximize)

    a = sub.add_parser("admissible", help="Toeplitz test for a comma-separated p1,p2,...")
    a.add_argument("p")
    a.set_defaults(func=cmd_admissible)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PetalError, ValueError) as exc:
        print(f"petalstar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
