"""Command-line front end. Every subcommand reads and writes JSON.

Exit codes: 0 success, 1 I/O or parse error, 2 domain error, 3 internal
invariant violation (a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .builders import realizer_multi_length, realizer_unit_oc, realizer_zero_one
from .dimension import DEFAULT_MAX_SIZE, exact_dimension
from .errors import InternalCycle, IntOrderError, ParseError, SelfCheckFailed
from .instances import FLAG_POLICIES, NAMES, canonical_interval_order, named, random_representation
from .intervals import (
    Representation,
    classify,
    find_one_plus_three,
    find_two_plus_two,
    is_interval_order,
    is_unit_interval_order,
    parse_rational,
    poset_from_representation,
)
from .poset import Poset, Realizer, verify_realizer

BUILDERS = {
    "unit-oc": realizer_unit_oc,
    "zero-one": realizer_zero_one,
    "multi-length": realizer_multi_length,
}


class CLIError(IntOrderError):
    """Domain-level failure reported by a subcommand itself."""

    def __init__(self, code, message="", detail=None):
        super().__init__(message, detail)
        self._code = code

    @property
    def code(self):
        return self._code


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None


def _emit(doc, out=None):
    text = json.dumps(doc, indent=2) + "\n"
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def load_representation(doc) -> Representation | None:
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    if "representation" in doc:
        return Representation.from_json(doc["representation"])
    if "intervals" in doc:
        return Representation.from_json(doc)
    return None


def load_poset(doc) -> Poset:
    """Accept a bare poset, a ``{"poset": ...}`` bundle, or a representation."""
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    if "poset" in doc:
        return Poset.from_json(doc["poset"])
    if "elements" in doc:
        return Poset.from_json(doc)
    rep = load_representation(doc)
    if rep is None:
        raise ParseError("document holds neither a poset nor a representation")
    return poset_from_representation(rep)


def _bundle(P: Poset, rep: Representation | None, **extra) -> dict:
    doc = dict(extra)
    doc["poset"] = P.to_json()
    if rep is not None:
        doc["representation"] = rep.to_json()
    return doc


def cmd_gen(args) -> dict:
    if args.kind == "named":
        if not args.name:
            raise ParseError("--name is required with --kind named")
        inst = named(args.name)
        return _bundle(inst.poset, inst.representation, name=inst.name)
    if args.kind == "canonical":
        P, rep = canonical_interval_order(args.n)
        return _bundle(P, rep, kind="canonical", n=args.n)
    lengths = [parse_rational(q) for q in args.lengths.split(",")]
    rep = random_representation(
        args.n, lengths, args.policy, grid=args.grid, seed=args.seed, index=args.index, span=args.span
    )
    return _bundle(poset_from_representation(rep), rep, kind="random", seed=args.seed, index=args.index)


def cmd_recognize(args) -> dict:
    P = load_poset(_read_json(args.input))
    interval = is_interval_order(P)
    unit = interval and is_unit_interval_order(P)
    witness = None
    if not interval:
        witness = {"two_plus_two": find_two_plus_two(P)}
    elif not unit:
        witness = {"one_plus_three": find_one_plus_three(P)}
    return {"interval_order": interval, "unit_interval_order": unit, "witness": witness}


def cmd_classify(args) -> dict:
    rep = load_representation(_read_json(args.input))
    if rep is None:
        raise ParseError("classify needs a representation")
    return classify(rep).to_json()


def cmd_realize(args) -> dict:
    doc = _read_json(args.input)
    rep = load_representation(doc)
    if rep is None:
        raise ParseError("realize needs a representation")
    P = load_poset(doc) if ("poset" in doc or "elements" in doc) else poset_from_representation(rep)
    R = BUILDERS[args.method](P, rep)
    ok, uncovered = verify_realizer(P, R)
    if not ok:
        raise SelfCheckFailed("realizer failed re-verification", detail=list(uncovered))
    return R.to_json()


def cmd_dim(args) -> dict:
    P = load_poset(_read_json(args.input))
    return exact_dimension(P, limit=args.limit, max_size=args.max_size).to_json()


def cmd_verify(args) -> dict:
    P = load_poset(_read_json(args.poset))
    R = Realizer.from_json(_read_json(args.realizer))
    ok, uncovered = verify_realizer(P, R)
    if not ok:
        raise CLIError("NotARealizer", "some incomparable pair is never reversed", {"uncovered": list(uncovered)})
    return {"valid": True, "extensions": len(R)}


def cmd_fixtures(args) -> dict:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in NAMES:
        inst = named(name)
        path = out / f"{name}.json"
        path.write_text(json.dumps(inst.to_json(), indent=2) + "\n")
        written.append(str(path))
    for n in (3, 4):
        P, rep = canonical_interval_order(n)
        path = out / f"canonical_{n}.json"
        path.write_text(json.dumps(_bundle(P, rep, kind="canonical", n=n), indent=2) + "\n")
        written.append(str(path))
    return {"written": written}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intorder", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json"], default="json", help="output format (only json)")
    sub = parser.add_subparsers(dest="command", required=True)

    default_seed = int(os.environ.get("INTORDER_SEED", "0"))
    p = sub.add_parser("gen", help="generate a poset with its representation")
    p.add_argument("--kind", choices=["canonical", "random", "named"], required=True)
    p.add_argument("--name", choices=NAMES)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--lengths", default="1", help="comma-separated rationals, e.g. 0,1 or 1,3/2")
    p.add_argument("--policy", choices=FLAG_POLICIES, default="all_closed")
    p.add_argument("--grid", type=int, default=1)
    p.add_argument("--span", type=int, default=None)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("recognize", cmd_recognize, "test for interval / unit interval order"),
        ("classify", cmd_classify, "classify a representation"),
        ("dim", cmd_dim, "exact order dimension"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", nargs="?", default="-")
        p.add_argument("-o", "--output", default="-")
        p.set_defaults(func=func)
        if name == "dim":
            p.add_argument("--limit", type=int, default=None)
            p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)

    p = sub.add_parser("realize", help="build a realizer from a representation")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--method", choices=sorted(BUILDERS), required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="check a realizer against a poset")
    p.add_argument("--poset", required=True, help="poset, bundle or representation file ('-' for stdin)")
    p.add_argument("--realizer", required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", help="export the named fixtures as JSON files")
    p.add_argument("--out", default="fixtures")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_fixtures)
    return parser


def _jsonable(detail):
    if isinstance(detail, Fraction):
        return str(detail)
    if isinstance(detail, dict):
        return {str(k): _jsonable(v) for k, v in detail.items()}
    if isinstance(detail, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in detail]
    return detail


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _emit(args.func(args), args.output)
        return 0
    except (SelfCheckFailed, InternalCycle) as exc:
        _emit({"error": exc.code, "detail": _jsonable(exc.detail), "message": str(exc)})
        return 3
    except ParseError as exc:
        _emit({"error": exc.code, "detail": _jsonable(exc.detail), "message": str(exc)})
        return 1
    except IntOrderError as exc:
        _emit({"error": exc.code, "detail": _jsonable(exc.detail), "message": str(exc)})
        return 2
    except OSError as exc:
        _emit({"error": "IOError", "detail": None, "message": str(exc)})
        return 1
    except Exception as exc:  # noqa: BLE001
        _emit({"error": "InternalError", "detail": type(exc).__name__, "message": str(exc)})
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
