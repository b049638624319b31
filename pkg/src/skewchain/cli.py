"""Command-line front end.

Every command reading a document also accepts ``catalog:<name>`` in place of a path.
Exit status: 0 for ok verdicts, 1 for mathematical failures, 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import catalog
from .chaingroup import (
    ChainGroupError,
    ChainGroupRep,
    apply_hom,
    cocircuit_chains,
    dual_rep,
    matroid_of,
    minor,
    parse_hom,
    to_strong,
    tutte_check,
    verify_rep,
)
from .io import (
    DocumentError,
    format_label,
    load_json,
    matrix_document,
    matroid_document,
    parse_graph_document,
    parse_matrix_document,
    parse_matroid_document,
)
from .matrixlab import NotInvertible, unwrap, wrap
from .matroid import Matroid
from .quat import NotPerfectSquare, count_bases, graph_to_qu, marginal
from .rings import PartialField

OK, FAILURE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


# -- loading ------------------------------------------------------------------------------------


def _read(source: str) -> Any:
    if source.startswith("catalog:"):
        try:
            return catalog.get(source[len("catalog:"):]).document
        except catalog.UnknownEntry as exc:
            raise InputError(str(exc.args[0])) from None
    try:
        return load_json(source)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None


def _rep(source: str) -> ChainGroupRep:
    return parse_matrix_document(_read(source))


def _qu_rep(source: str, command: str) -> ChainGroupRep:
    """A quaternion matrix document, or a graph document turned into one."""
    doc = _read(source)
    if isinstance(doc, dict) and "vertices" in doc:
        return _graph_rep(doc)
    rep = parse_matrix_document(doc)
    if rep.pf.ring.kind != "quaternions":
        raise InputError(f"{command} needs a quaternion matrix, got {rep.pf.ring}")
    return rep


def _graph_rep(doc) -> ChainGroupRep:
    try:
        return graph_to_qu(parse_graph_document(doc))
    except DocumentError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _matroid(source: str) -> Matroid:
    doc = _read(source)
    if isinstance(doc, dict) and "ground_set" in doc:
        return parse_matroid_document(doc)
    return matroid_of(parse_matrix_document(doc))


def _parse_labels(text: str, ground) -> list:
    if not text:
        return []
    by_name = {str(format_label(e)): e for e in ground}
    out = []
    for token in text.split(","):
        token = token.strip()
        if token not in by_name:
            raise InputError(f"unknown element {token!r}")
        out.append(by_name[token])
    return out


# -- output -------------------------------------------------------------------------------------


def _fmt_value(K, value, approx: bool) -> str:
    lit = K.format(value)
    if isinstance(lit, list):
        d = getattr(K, "d", None)
        text = f"{lit[0]} + {lit[1]}*sqrt({d})" if d is not None else json.dumps(lit)
    else:
        text = str(lit)
    if approx:
        text += f"  (~{K.to_complex(value).real:.6g})"
    return text


def _emit(doc: Any):
    print(json.dumps(doc))


def _element_key(e):
    return (0, e, "") if isinstance(e, int) else (1, 0, str(e))


def _sorted_sets(sets) -> list:
    ordered = (sorted(s, key=_element_key) for s in sets)
    return sorted(ordered, key=lambda s: [_element_key(e) for e in s])


def _print_sets(sets):
    for s in _sorted_sets(sets):
        print(" ".join(str(format_label(e)) for e in s))


# -- commands -----------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    rep = _rep(args.file)
    v = verify_rep(rep)
    if v.ok:
        print(f"ok: strong {rep.pf} matrix ({v.detail.get('states', 0)} pivot states)")
        return OK
    print(f"fail: {v.reason}")
    if v.path:
        print("pivot path: " + " ".join(f"({format_label(x)},{format_label(y)})" for x, y in v.path))
    return FAILURE


def cmd_matroid(args) -> int:
    M = _matroid(args.file)
    if args.bases:
        _print_sets(M.basis_sets())
    elif args.circuits:
        _print_sets(M.circuits())
    elif args.cocircuits:
        _print_sets(M.cocircuits())
    elif args.rank is not None:
        X = _parse_labels(args.rank, M.ground) if args.rank else M.ground
        print(M.rank_of(X))
    else:
        print(f"rank {M.rank}, {len(M.ground)} elements, {len(M.bases)} bases")
    return OK


def cmd_dual(args) -> int:
    _emit(matrix_document(dual_rep(to_strong(_rep(args.file)))))
    return OK


def cmd_minor(args) -> int:
    rep = _rep(args.file)
    d = _parse_labels(args.delete, rep.ground)
    c = _parse_labels(args.contract, rep.ground)
    _emit(matrix_document(minor(rep, d, c)))
    return OK


def cmd_hom(args) -> int:
    rep = _rep(args.file)
    try:
        hom = parse_hom(args.target, rep)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        image = apply_hom(rep, hom)
    except ChainGroupError as exc:
        print(f"fail: {exc}")
        return FAILURE
    _emit(matrix_document(image))
    return OK


def cmd_tutte(args) -> int:
    rep = _rep(args.file)
    M = matroid_of(rep)
    v = tutte_check(M, cocircuit_chains(rep), rep.pf)
    if v.ok:
        print(f"ok: {v.detail.get('triples', 0)} modular triples")
        return OK
    triple = v.detail.get("triple", ())
    print(f"fail: {v.reason}")
    for X in triple:
        print("  " + " ".join(str(format_label(e)) for e in _sorted_sets([X])[0]))
    return FAILURE


def cmd_unwrap(args) -> int:
    rep = _rep(args.file)
    if rep.pf.ring.kind != "matrix":
        raise InputError(f"unwrap needs a matrix over M(n, F), got {rep.pf.ring}")
    Z = unwrap(rep.matrix)
    _emit(matrix_document(ChainGroupRep(PartialField(Z.ring, "units"), Z)))
    return OK


def cmd_wrap(args) -> int:
    rep = _rep(args.file)
    try:
        W = wrap(args.n, rep.matrix)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    _emit(matrix_document(ChainGroupRep.from_matrix(PartialField(W.ring, "units"), W)))
    return OK


def _report_count(rep) -> int:
    try:
        print(count_bases(to_strong(rep)))
    except (NotPerfectSquare, ChainGroupError) as exc:
        print(f"fail: not a strong QU-matrix ({exc})")
        return FAILURE
    return OK


def _report_marginal(rep, F, approx) -> int:
    try:
        value = marginal(to_strong(rep), F)
    except (NotPerfectSquare, ChainGroupError) as exc:
        print(f"fail: {exc}")
        return FAILURE
    print(_fmt_value(rep.pf.ring.field, value, approx))
    return OK


def cmd_count(args) -> int:
    return _report_count(_qu_rep(args.file, "count"))


def cmd_marginal(args) -> int:
    rep = _qu_rep(args.file, "marginal")
    return _report_marginal(rep, _parse_labels(args.set, rep.ground), args.approx)


def cmd_graph(args) -> int:
    rep = _graph_rep(_read(args.file))
    if args.marginal is not None:
        return _report_marginal(rep, _parse_labels(args.marginal, rep.ground), args.approx)
    return _report_count(rep)


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            print(f"{name}: {catalog.get(name).provenance}")
        return OK
    if not args.name:
        raise InputError("catalog get needs a name")
    try:
        entry = catalog.get(args.name)
    except catalog.UnknownEntry as exc:
        raise InputError(str(exc.args[0])) from None
    _emit(entry.document)
    return OK


# -- parser -------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewchain", description=__doc__.splitlines()[0])
    p.add_argument("--approx", action="store_true", help="also print decimal approximations")
    # accept --approx after the subcommand too, without clobbering the global value
    approx = argparse.ArgumentParser(add_help=False)
    approx.add_argument("--approx", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check that a matrix is a strong P-matrix")
    s.add_argument("file")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("matroid", help="matroid of a matrix or matroid document")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--bases", action="store_true")
    g.add_argument("--circuits", action="store_true")
    g.add_argument("--cocircuits", action="store_true")
    g.add_argument("--rank", metavar="E1,E2,...", nargs="?", const="",
                   help="rank of a subset (whole ground set rank if empty)")
    s.set_defaults(fn=cmd_matroid)

    s = sub.add_parser("dual", help="[-D^T I] over the opposite partial field")
    s.add_argument("file")
    s.set_defaults(fn=cmd_dual)

    s = sub.add_parser("minor", help="delete and contract elements")
    s.add_argument("file")
    s.add_argument("--delete", default="")
    s.add_argument("--contract", default="")
    s.set_defaults(fn=cmd_minor)

    s = sub.add_parser("hom", help="apply a ring homomorphism entrywise")
    s.add_argument("file")
    s.add_argument("--target", required=True, help="identity, phi or gf:<p>")
    s.set_defaults(fn=cmd_hom)

    s = sub.add_parser("tutte", help="Tutte's modular-triple criterion on cocircuit chains")
    s.add_argument("file")
    s.set_defaults(fn=cmd_tutte)

    s = sub.add_parser("unwrap", help="z_n: matrix over M(n, F) to matrix over F")
    s.add_argument("file")
    s.set_defaults(fn=cmd_unwrap)

    s = sub.add_parser("wrap", help="inverse of unwrap")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_wrap)

    s = sub.add_parser("count", help="number of bases of a strong QU-matrix or graph")
    s.add_argument("file")
    s.set_defaults(fn=cmd_count)

    s = sub.add_parser("marginal", help="share of bases (or spanning trees) containing a set", parents=[approx])
    s.add_argument("file")
    s.add_argument("--set", default="")
    s.set_defaults(fn=cmd_marginal)

    s = sub.add_parser("graph", help="spanning tree counts and marginals of a graph",
                       parents=[approx])
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--marginal", metavar="E1,E2,...")
    s.set_defaults(fn=cmd_graph)

    s = sub.add_parser("catalog", help="built-in examples")
    s.add_argument("action", choices=("list", "get"))
    s.add_argument("name", nargs="?")
    s.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (ChainGroupError, NotInvertible, KeyError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
