"""Command-line front end.

Evidence files are JSON documents::

    {"frame": ["a", "b", "c"],
     "masses": [{"set": ["a", "b"], "mass": "1/2"},
                {"set": ["a", "b", "c"], "mass": 0.5}]}

Masses may be numbers or strings; strings accept fractions such as ``"5/7"``.
Exit status is 0 on success, 1 on invalid evidence or total conflict and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from functools import reduce
from typing import Any

import numpy as np

from . import __version__
from .closed_form import compare_orders
from .combine import CombinationResult, dempster_n, dempster_pair, dempster_via_commonality
from .discount import compose_rates, discount_mass
from .errors import EvidenceError
from .evidence import EvidentialView, MassFunction, as_rate, focal_elements, make_mass, to_view
from .frame import Frame, make_frame, subset_from_elements
from .oracle import oracle_dempster, oracle_discount, oracle_transform

ORACLE_TOL = 1e-9
KIND_CHOICES = ["mass", "bel", "pls", "com", "dou"]


class DocumentError(EvidenceError):
    """An evidence file that is not valid JSON or does not follow the schema."""


# -- input -----------------------------------------------------------------


def parse_mass_value(value: Any) -> float:
    if isinstance(value, bool) or value is None:
        raise DocumentError(f"mass must be a number or numeric string, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"cannot parse mass {value!r}") from None
    raise DocumentError(f"mass must be a number or numeric string, got {value!r}")


def mass_from_document(doc: Any) -> MassFunction:
    if not isinstance(doc, dict):
        raise DocumentError("evidence document must be a JSON object")
    names = doc.get("frame")
    entries = doc.get("masses")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise DocumentError('"frame" must be a list of element names')
    if not isinstance(entries, list):
        raise DocumentError('"masses" must be a list')
    frame = make_frame(names)
    pairs = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "set" not in entry or "mass" not in entry:
            raise DocumentError(f'masses[{i}] must be an object with "set" and "mass"')
        members = entry["set"]
        if not isinstance(members, list) or not all(isinstance(x, str) for x in members):
            raise DocumentError(f"masses[{i}].set must be a list of element names")
        pairs.append((subset_from_elements(frame, members), parse_mass_value(entry["mass"])))
    return make_mass(frame, pairs)


def load_mass(path: str) -> MassFunction:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg})") from None
    try:
        return mass_from_document(doc)
    except EvidenceError as exc:
        raise type(exc)(f"{path}: {exc}") from None


# -- output ----------------------------------------------------------------


def fmt(value: float) -> str:
    if abs(value) < 1e-15:
        value = 0.0
    return f"{value:.12g}"


def _num(value: float) -> float:
    return float(fmt(value))


def mass_entries(m: MassFunction) -> list[dict[str, Any]]:
    return [{"set": m.frame.members(k), "mass": _num(v)} for k, v in focal_elements(m)]


def mass_document(m: MassFunction, meta: dict[str, Any] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"frame": list(m.frame.elements), "masses": mass_entries(m)}
    if meta:
        doc["meta"] = {k: _num(v) if isinstance(v, float) else v for k, v in meta.items()}
    return doc


def view_document(v: EvidentialView) -> dict[str, Any]:
    return {
        "frame": list(v.frame.elements),
        "kind": v.kind.short,
        "values": [
            {"set": v.frame.members(k), "value": _num(float(x))} for k, x in enumerate(v.table)
        ],
    }


def _header(op: str, **fields: Any) -> str:
    parts = [op] + [f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in fields.items()]
    return "# " + " ".join(parts)


def mass_lines(m: MassFunction) -> list[str]:
    return [f"{m.frame.format(k)} {fmt(v)}" for k, v in focal_elements(m)]


def view_lines(v: EvidentialView) -> list[str]:
    return [f"{v.frame.format(k)} {fmt(float(x))}" for k, x in enumerate(v.table)]


def emit(args: argparse.Namespace, lines: list[str], doc: dict[str, Any]) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


# -- oracle cross-checks -----------------------------------------------------


def _check(label: str, fast: np.ndarray, slow: Sequence[float], frame: Frame) -> None:
    dev = np.abs(np.asarray(fast) - np.asarray(slow, dtype=np.float64))
    if dev.max() > ORACLE_TOL:
        key = int(dev.argmax())
        raise EvidenceError(
            f"oracle mismatch in {label}: deviation {dev.max():.3g} at {frame.format(key)}"
        )


# -- subcommands -------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> None:
    m = load_mass(args.file)
    focal = focal_elements(m)
    lines = [
        _header("validate", file=args.file),
        f"valid: {len(focal)} focal element(s) on frame {m.frame.format(m.frame.full)}",
    ]
    emit(args, lines, mass_document(m))


def cmd_transform(args: argparse.Namespace) -> None:
    m = load_mass(args.file)
    if args.to == "mass":
        emit(args, [_header("transform", to="mass")] + mass_lines(m), mass_document(m))
        return
    view = to_view(m, args.to)
    if args.oracle:
        slow = [oracle_transform(m, view.kind, k) for k in range(m.frame.size)]
        _check(f"transform to {args.to}", view.table, slow, m.frame)
    emit(args, [_header("transform", to=view.kind.short)] + view_lines(view), view_document(view))


_METHODS = {"naive": dempster_pair, "commonality": dempster_via_commonality}


def cmd_combine(args: argparse.Namespace) -> None:
    ms = [load_mass(path) for path in args.files]
    pairwise = _METHODS[args.method]
    if len(ms) == 2:
        result = pairwise(ms[0], ms[1])
    else:
        folded = dempster_n(ms)
        mass = reduce(lambda acc, m: pairwise(acc, m).mass, ms[1:], ms[0])
        result = CombinationResult(mass, folded.normalization, folded.conflict)
    if args.oracle:
        slow = reduce(oracle_dempster, ms)
        _check("combine", result.mass.table, list(slow.table), slow.frame)
    meta = {"normalization": result.normalization, "conflict": result.conflict}
    lines = [_header("combine", method=args.method, **meta)] + mass_lines(result.mass)
    emit(args, lines, mass_document(result.mass, meta))


def cmd_discount(args: argparse.Namespace) -> None:
    as_rate(args.rate)
    m = load_mass(args.file)
    out = discount_mass(m, args.rate)
    if args.oracle:
        _check("discount", out.table, list(oracle_discount(m, args.rate).table), m.frame)
    lines = [_header("discount", rate=args.rate)] + mass_lines(out)
    emit(args, lines, mass_document(out, {"rate": args.rate}))


def cmd_compare_orders(args: argparse.Namespace) -> None:
    as_rate(args.rate)
    m1, m2 = (load_mass(path) for path in args.files)
    cmp = compare_orders(m1, m2, args.rate, args.kind)
    frame = m1.frame
    if args.kind == "mass":
        left, right = cmp.discounted_sum.table, cmp.sum_of_discounted.table
        keys = [k for k in range(frame.size) if left[k] > 1e-12 or right[k] > 1e-12]
    else:
        left = to_view(cmp.discounted_sum, args.kind).table
        right = to_view(cmp.sum_of_discounted, args.kind).table
        keys = list(range(frame.size))
    lines = [
        _header("compare-orders", rate=args.rate, kind=args.kind),
        "# subset discounted_sum sum_of_discounted gap",
    ]
    lines += [
        f"{frame.format(k)} {fmt(left[k])} {fmt(right[k])} {fmt(abs(left[k] - right[k]))}"
        for k in keys
    ]
    lines.append(f"max gap {fmt(cmp.max_abs_gap)} at {frame.format(cmp.witness)}")
    doc = {
        "frame": list(frame.elements),
        "rate": args.rate,
        "kind": args.kind,
        "rows": [
            {
                "set": frame.members(k),
                "discounted_sum": _num(left[k]),
                "sum_of_discounted": _num(right[k]),
                "gap": _num(abs(left[k] - right[k])),
            }
            for k in keys
        ],
        "max_gap": _num(cmp.max_abs_gap),
        "witness": frame.members(cmp.witness),
    }
    emit(args, lines, doc)


def cmd_compose_rates(args: argparse.Namespace) -> None:
    beta = compose_rates(args.rate1, args.rate2).value
    lines = [_header("compose-rates", rate1=args.rate1, rate2=args.rate2), fmt(beta)]
    emit(args, lines, {"rates": [args.rate1, args.rate2], "composed": _num(beta)})


# -- argument parsing ----------------------------------------------------------


def _number(text: str) -> float:
    try:
        return parse_mass_value(text)
    except EvidenceError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")

    parser = argparse.ArgumentParser(
        prog="evidential", description="Dempster-Shafer evidence combination and discounting."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", parents=[common], help="check an evidence file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("transform", parents=[common], help="tabulate bel/pls/com/dou")
    p.add_argument("--to", choices=KIND_CHOICES, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("combine", parents=[common], help="orthogonal sum of evidence files")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--method", choices=sorted(_METHODS), default="naive")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("discount", parents=[common], help="discount evidence by a rate")
    p.add_argument("--rate", type=_number, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("file")
    p.set_defaults(func=cmd_discount)

    p = sub.add_parser(
        "compare-orders", parents=[common], help="combine-then-discount vs discount-then-combine"
    )
    p.add_argument("--rate", type=_number, required=True)
    p.add_argument("--kind", choices=KIND_CHOICES, default="mass")
    p.add_argument("files", nargs=2, metavar="FILE")
    p.set_defaults(func=cmd_compare_orders)

    p = sub.add_parser("compose-rates", parents=[common], help="rate equal to two successive discounts")
    p.add_argument("rate1", type=_number)
    p.add_argument("rate2", type=_number)
    p.set_defaults(func=cmd_compose_rates)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except EvidenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
