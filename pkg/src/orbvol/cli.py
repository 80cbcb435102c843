"""Command-line front end.

Subcommands: bound, table, curvature, wang, compare, symmetry.  Output in
aligned text (6 significant digits), JSON (12 significant digits, with log
companions for quantities that underflow linearly), or CSV.  Everything is
flag-driven and deterministic: identical flags, including --seed, produce
byte-identical output.  Exit codes: 0 success, 2 argument error, 3
numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import curvature as _curvature
from . import known_bounds as _known
from . import volume as _volume
from . import wang as _wang
from .lie_core import Metric

JSON_DIGITS = 11   # .11e -> 12 significant digits
TEXT_DIGITS = 5    # .5e  -> 6 significant digits


def _fmt_json(x):
    if isinstance(x, bool) or not isinstance(x, float):
        return x
    return float(f"{x:.{JSON_DIGITS}e}")


def _fmt_text(x):
    if isinstance(x, float):
        return f"{x:.{TEXT_DIGITS}e}"
    return str(x)


def _rows_of(payload: dict) -> tuple[str, list[dict]] | None:
    for key in ("rows", "planes"):
        if key in payload:
            return key, payload[key]
    return None


def render_json(payload: dict) -> str:
    def walk(obj):
        if isinstance(obj, dict):
            return {k: walk(v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [walk(v) for v in obj]
        return _fmt_json(obj)

    return json.dumps(walk(payload), indent=2) + "\n"


def render_text(payload: dict) -> str:
    out = []
    table = _rows_of(payload)
    for k, v in payload.items():
        if table and k == table[0]:
            continue
        out.append(f"{k} = {_fmt_text(v)}")
    if table:
        _, rows = table
        if rows:
            cols = list(rows[0].keys())
            cells = [[_fmt_text(r[c]) for c in cols] for r in rows]
            widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
            out.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            for row in cells:
                out.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def render_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")

    def cell(x):
        return f"{x:.{JSON_DIGITS}e}" if isinstance(x, float) else x

    table = _rows_of(payload)
    if table:
        _, rows = table
        cols = list(rows[0].keys()) if rows else []
        writer.writerow(cols)
        for r in rows:
            writer.writerow([cell(r[c]) for c in cols])
    else:
        cols = list(payload.keys())
        writer.writerow(cols)
        writer.writerow([cell(payload[c]) for c in cols])
    return buf.getvalue()


RENDERERS = {"json": render_json, "text": render_text, "csv": render_csv}


def _cmd_bound(args) -> dict:
    return _volume.orbifold_bound(args.n).to_dict()


def _cmd_table(args) -> dict:
    if args.n_min > args.n_max:
        raise ValueError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    rows = [_volume.orbifold_bound(n).to_dict() for n in range(args.n_min, args.n_max + 1)]
    return {"n_min": args.n_min, "n_max": args.n_max, "rows": rows}


def _cmd_curvature(args) -> dict:
    planes = [
        {"x": lab[0], "y": lab[1], "kappa": p.kappa}
        for p in _curvature.basis_plane_report(args.n)
        if (lab := p.labels) is not None
    ]
    emp = _curvature.max_sectional_estimate(args.n, samples=args.samples, seed=args.seed)
    return {
        "n": args.n,
        "metric": Metric.SCALED.value,
        "empirical_max": emp,
        "upper_bound": _curvature.curvature_upper_bound(args.n),
        "planes": planes,
    }


def _cmd_wang(args) -> dict:
    metric = Metric(args.metric)
    rep = _wang.wang_report(args.n, metric, seed=args.seed)
    if args.tol != 1e-10:
        res = _wang.least_positive_zero(rep["c1"], rep["c2"], tol=args.tol)
        rep["computed_rg"] = res.rg
        rep["computed_r0"] = res.r0
        if rep["published_rg"] is not None:
            rep["relative_gap"] = res.rg / rep["published_rg"] - 1.0
    return rep


def _cmd_compare(args) -> dict:
    rows = [r.to_dict() for r in _known.compare_report(args.n)]
    return {"n": args.n, "rows": rows}


def _cmd_symmetry(args) -> dict:
    return {
        "n": args.n,
        "volume": args.volume,
        "isometry_order_bound": _volume.symmetry_order_bound(args.n, args.volume),
        "outer_order_bound": _volume.symmetry_order_bound(args.n, args.volume, outer=True),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbvol",
        description="Volume lower bounds for hyperbolic n-orbifolds and related diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=sorted(RENDERERS), default="text")
        p.add_argument("--output", default=None, help="output path (default: stdout)")

    p = sub.add_parser("bound", help="orbifold volume bound at one dimension")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_bound, n_floor=3)

    p = sub.add_parser("table", help="bound table over a dimension range")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_table, n_floor=3)

    p = sub.add_parser("curvature", help="basis-plane curvatures and empirical max")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_curvature, n_floor=2)

    p = sub.add_parser("wang", help="computed Wang constants vs the published radius")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--metric", choices=[m.value for m in Metric], default=Metric.CANONICAL.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(func=_cmd_wang, n_floor=2)

    p = sub.add_parser("compare", help="comparison table against known bounds")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_compare, n_floor=2)

    p = sub.add_parser("symmetry", help="isometry group order bounds from a volume")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--volume", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_symmetry, n_floor=3)

    return parser


def _validate(args) -> None:
    for field in ("n", "n_min", "n_max"):
        v = getattr(args, field, None)
        if v is not None and v < args.n_floor:
            raise ValueError(f"--{field.replace('_', '-')} must be >= {args.n_floor} for this command")
    if getattr(args, "samples", 1) < 1:
        raise ValueError("--samples must be >= 1")
    if getattr(args, "tol", 1.0) <= 0.0:
        raise ValueError("--tol must be > 0")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        _validate(args)
        payload = args.func(args)
        text = RENDERERS[args.format](payload)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except (ValueError, LookupError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ArithmeticError, OverflowError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
