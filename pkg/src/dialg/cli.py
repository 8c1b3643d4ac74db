"""Command line front end.

Verbs: check, info, classify2, iso, census, leibniz, op, quotient.
Exit codes: 0 success / property holds, 1 property fails or no isomorphism,
2 usage or input errors. All output is deterministic for a fixed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import (
    are_isomorphic,
    census,
    classify_dim2,
    fingerprint,
)
from .constructions import leibniz_bracket, opposite, quotient
from .errors import DialgError, ParseError, UnsupportedOverRationalsError
from .fileformat import parse_dialgebra, serialize_algebra, serialize_dialgebra
from .identities import check_dialgebra
from .linalg import Subspace, Vec
from .structure import DEFAULT_SEARCH_BOUND

ENV_SEARCH_BOUND = "DIALG_SEARCH_BOUND"


def _search_bound():
    raw = os.environ.get(ENV_SEARCH_BOUND)
    if raw is None:
        return DEFAULT_SEARCH_BOUND
    try:
        return int(raw)
    except ValueError:
        raise DialgError(f"{ENV_SEARCH_BOUND} must be an integer, got {raw!r}")


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DialgError(f"cannot read {path}: {exc}")
    try:
        return parse_dialgebra(text)
    except ParseError as exc:
        raise DialgError(f"{path}: {exc}")


def _print_matrix(m, out):
    for row in m.rows:
        print(" ".join(str(c) for c in row.coords), file=out)


def cmd_check(args, out):
    d = _load(args.path)
    reports = check_dialgebra(d)
    if not reports:
        print("PASS", file=out)
        return 0
    for rep in reports:
        i, j, k = rep.triple
        print(f"FAIL {rep.law} ({i + 1},{j + 1},{k + 1}) residual {rep.residual}", file=out)
    return 1


def _info_fields(d):
    fp = fingerprint(d)
    pairs = [("field", str(d.field)), ("dim", d.dim)]
    pairs += [
        ("dim_left_square", fp.dim_left_square),
        ("dim_right_square", fp.dim_right_square),
        ("dim_rann_left", fp.dim_rann_left),
        ("dim_lann_left", fp.dim_lann_left),
        ("dim_rann_right", fp.dim_rann_right),
        ("dim_lann_right", fp.dim_lann_right),
        ("dim_ann", fp.dim_ann),
        ("products_equal", fp.products_equal),
        ("has_bar_unit", fp.has_bar_unit),
    ]
    return pairs


def cmd_info(args, out):
    d = _load(args.path)
    pairs = _info_fields(d)
    if args.json:
        print(json.dumps(dict(pairs)), file=out)
        return 0
    for key, value in pairs:
        if isinstance(value, bool):
            value = "true" if value else "false"
        print(f"{key}: {value}", file=out)
    return 0


def cmd_classify2(args, out):
    d = _load(args.path)
    label = classify_dim2(d)
    if args.json:
        record = {
            "label": label.label_string(),
            "kind": label.kind,
            "k": None if label.k is None else str(label.k),
            "sublabel": label.sublabel,
            "witness": [[str(c) for c in row.coords] for row in label.witness.rows],
        }
        print(json.dumps(record), file=out)
        return 0
    print(label.label_string(), file=out)
    print("witness:", file=out)
    _print_matrix(label.witness, out)
    return 0


def cmd_iso(args, out):
    a = _load(args.path_a)
    b = _load(args.path_b)
    try:
        witness = are_isomorphic(a, b, bound=_search_bound())
    except UnsupportedOverRationalsError as exc:
        print(f"UNSUPPORTED: {exc}", file=out)
        return 2
    if witness is None:
        print("NOT ISOMORPHIC", file=out)
        return 1
    print("ISOMORPHIC", file=out)
    _print_matrix(witness, out)
    return 0


def _tensor_as_lists(product):
    return [
        [[c.value for c in product.row(i, j).coords] for j in range(product.dim)]
        for i in range(product.dim)
    ]


def cmd_census(args, out):
    classes = census(args.prime, args.dim)
    for cls in classes:
        record = {
            "label": cls.label.label_string(),
            "kind": cls.label.kind,
            "k": None if cls.label.k is None else str(cls.label.k),
            "left": _tensor_as_lists(cls.representative.left),
            "right": _tensor_as_lists(cls.representative.right),
            "orbit_size": cls.orbit_size,
        }
        print(json.dumps(record), file=out)
    return 0


def cmd_leibniz(args, out):
    d = _load(args.path)
    bracket = leibniz_bracket(d)
    out.write(serialize_algebra(bracket))
    return 0


def cmd_op(args, out):
    d = _load(args.path)
    out.write(serialize_dialgebra(opposite(d)))
    return 0


def _parse_ideal(d, raw):
    vectors = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        entries = [e.strip() for e in chunk.split(",")]
        if len(entries) != d.dim:
            raise DialgError(
                f"ideal generator {chunk!r} has {len(entries)} entries, expected {d.dim}"
            )
        try:
            vectors.append(Vec.of(d.field, entries))
        except (ValueError, TypeError) as exc:
            raise DialgError(f"bad ideal generator {chunk!r}: {exc}")
    return Subspace.from_vectors(d.field, d.dim, vectors)


def cmd_quotient(args, out):
    d = _load(args.path)
    ideal = _parse_ideal(d, args.ideal)
    quot, _projection = quotient(d, ideal)
    out.write(serialize_dialgebra(quot))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dialg",
        description="Exact computations with finite-dimensional associative dialgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the dialgebra laws of a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("info", help="print invariants and annihilator dimensions")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify2", help="classify a 2-dimensional dialgebra")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify2)

    p = sub.add_parser("iso", help="search for an isomorphism between two files")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("census", help="classify all dialgebras over a small prime field")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("leibniz", help="print the Leibniz bracket algebra of a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_leibniz)

    p = sub.add_parser("op", help="print the opposite dialgebra of a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("quotient", help="print the quotient by an ideal")
    p.add_argument("path")
    p.add_argument(
        "--ideal",
        required=True,
        help="semicolon-separated generators, comma-separated coordinates",
    )
    p.set_defaults(func=cmd_quotient)

    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (DialgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
