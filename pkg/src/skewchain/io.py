"""JSON documents for matrices, matroids, multilinear reps and graphs.

Every parser rejects unknown keys and reports problems with a JSON path such as
``$.entries[2][5]``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .chaingroup import ChainGroupRep
from .fields import field_from_descriptor
from .matrixlab import RMatrix
from .matroid import Matroid
from .multilinear import MultilinearRep
from .quat import Graph
from .rings import format_element, parse_element, partial_field_from_descriptor, ring_from_descriptor


class DocumentError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _expect_keys(doc: Any, required: set, optional: set = frozenset(), path: str = "$"):
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected an object")
    missing = required - set(doc)
    if missing:
        raise DocumentError(path, f"missing keys {sorted(missing)}")
    extra = set(doc) - required - set(optional)
    if extra:
        raise DocumentError(path, f"unknown keys {sorted(extra)}")


def parse_label(lit: Any, path: str):
    if isinstance(lit, bool) or lit is None:
        raise DocumentError(path, f"invalid label {lit!r}")
    if isinstance(lit, (int, str)):
        return lit
    if isinstance(lit, list):
        return tuple(parse_label(x, f"{path}[{i}]") for i, x in enumerate(lit))
    raise DocumentError(path, f"invalid label {lit!r}")


def format_label(label):
    if isinstance(label, tuple):
        return [format_label(x) for x in label]
    return label


def _labels(doc: Any, path: str) -> tuple:
    if not isinstance(doc, list):
        raise DocumentError(path, "expected a list of labels")
    return tuple(parse_label(x, f"{path}[{i}]") for i, x in enumerate(doc))


def _wrap_errors(path: str, fn, *args):
    try:
        return fn(*args)
    except DocumentError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DocumentError(path, str(exc)) from None


# -- matrices -------------------------------------------------------------------------------


def parse_matrix_document(doc: Any) -> ChainGroupRep:
    _expect_keys(doc, {"ring", "partial_field", "rows", "cols", "entries"})
    ring = _wrap_errors("$.ring", ring_from_descriptor, doc["ring"])
    pf = _wrap_errors("$.partial_field", partial_field_from_descriptor, ring, doc["partial_field"])
    rows = _labels(doc["rows"], "$.rows")
    cols = _labels(doc["cols"], "$.cols")
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != len(rows):
        raise DocumentError("$.entries", f"expected {len(rows)} rows")
    grid = []
    for i, line in enumerate(entries):
        if not isinstance(line, list) or len(line) != len(cols):
            raise DocumentError(f"$.entries[{i}]", f"expected {len(cols)} entries")
        grid.append(tuple(_wrap_errors(f"$.entries[{i}][{j}]", parse_element, ring, lit)
                          for j, lit in enumerate(line)))
    A = _wrap_errors("$", RMatrix, ring, rows, cols, tuple(grid))
    return ChainGroupRep.from_matrix(pf, A)


def matrix_document(rep: ChainGroupRep) -> dict:
    A = rep.matrix
    return {
        "ring": A.ring.descriptor(),
        "partial_field": rep.pf.descriptor(),
        "rows": [format_label(r) for r in A.rows],
        "cols": [format_label(c) for c in A.cols],
        "entries": [[format_element(x) for x in row] for row in A.entries],
    }


# -- matroids ----------------------------------------------------------------------------------


def parse_matroid_document(doc: Any) -> Matroid:
    _expect_keys(doc, {"ground_set", "bases"})
    ground = _labels(doc["ground_set"], "$.ground_set")
    if not isinstance(doc["bases"], list):
        raise DocumentError("$.bases", "expected a list")
    bases = [_labels(b, f"$.bases[{i}]") for i, b in enumerate(doc["bases"])]
    return _wrap_errors("$", Matroid, ground, bases)


def _sort_key(label):
    return (0, label, "") if isinstance(label, int) else (1, 0, str(label))


def matroid_document(M: Matroid) -> dict:
    bases = sorted((sorted(b, key=_sort_key) for b in M.basis_sets()),
                   key=lambda b: [_sort_key(x) for x in b])
    return {
        "ground_set": [format_label(e) for e in M.ground],
        "bases": [[format_label(e) for e in b] for b in bases],
    }


# -- multilinear ----------------------------------------------------------------------------


def parse_multilinear_document(doc: Any) -> MultilinearRep:
    _expect_keys(doc, {"field", "n", "blocks"})
    F = _wrap_errors("$.field", field_from_descriptor, doc["field"])
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError("$.n", "expected a positive integer")
    if not isinstance(doc["blocks"], list):
        raise DocumentError("$.blocks", "expected a list of [element, matrix] pairs")
    blocks = {}
    for i, item in enumerate(doc["blocks"]):
        path = f"$.blocks[{i}]"
        if not isinstance(item, list) or len(item) != 2 or not isinstance(item[1], list):
            raise DocumentError(path, "expected [element, matrix]")
        e = parse_label(item[0], f"{path}[0]")
        rows = []
        for a, line in enumerate(item[1]):
            if not isinstance(line, list):
                raise DocumentError(f"{path}[1][{a}]", "expected a row")
            rows.append([_wrap_errors(f"{path}[1][{a}][{b}]", F.parse, v)
                         for b, v in enumerate(line)])
        blocks[e] = rows
    return _wrap_errors("$", MultilinearRep, F, n, blocks)


def multilinear_document(rep: MultilinearRep) -> dict:
    F = rep.field
    return {
        "field": F.descriptor(),
        "n": rep.n,
        "blocks": [[format_label(e), [[F.format(v) for v in row] for row in block]]
                   for e, block in rep.blocks.items()],
    }


# -- graphs ---------------------------------------------------------------------------------


def parse_graph_document(doc: Any) -> Graph:
    _expect_keys(doc, {"vertices", "edges"})
    n = doc["vertices"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError("$.vertices", "expected a positive integer")
    if not isinstance(doc["edges"], list):
        raise DocumentError("$.edges", "expected a list of [u, v] pairs")
    edges = []
    for i, ed in enumerate(doc["edges"]):
        if (not isinstance(ed, list) or len(ed) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in ed)):
            raise DocumentError(f"$.edges[{i}]", "expected [u, v] with integer vertices")
        edges.append(tuple(ed))
    return _wrap_errors("$.edges", Graph.from_edges, n, edges)


def graph_document(g: Graph) -> dict:
    return {"vertices": len(g.vertices), "edges": [list(e) for e in g.edges]}


# -- files ------------------------------------------------------------------------------------


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}") from None


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=None, separators=(", ", ": "))
