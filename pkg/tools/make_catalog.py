"""Regenerate src/skewchain/data/*.json from the constructions below.

Run from the repository root: ``python3 tools/make_catalog.py``.  The catalog
module only reads the JSON files; tests compare them against this script.
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

from skewchain.chaingroup import ChainGroupRep
from skewchain.fields import GF, QQ, QuadraticField, parse_fraction
from skewchain.io import matrix_document, matroid_document, multilinear_document
from skewchain.matrixlab import RMatrix, unwrap
from skewchain.matroid import from_circuit_hyperplanes
from skewchain.multilinear import from_matrix
from skewchain.rings import (
    PartialField,
    dyadic,
    field_ring,
    gf3_quaternion_partial_field,
    matrix_partial_field,
    quaternionic_unimodular,
    quaternions,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "skewchain" / "data"


def nonpappus_skew():
    pf = PartialField(quaternions(), "units")
    H = pf.ring
    i, j = H.quat(0, 1), H.quat(0, 0, 1)
    a, b = i, j
    one, zero = H.one, H.zero
    grid = [
        [one, zero, zero, one, a, one, a, a * b, a * b],
        [zero, one, zero, one, one, b, b * a, b, b * a],
        [zero, zero, one, one, one, one, one, one, one],
    ]
    return ChainGroupRep.from_matrix(pf, RMatrix.build(H, grid, [1, 2, 3], range(1, 10)))


def _mm(R, a, b, c, d):
    return R.mat([[a, b], [c, d]])


def nonpappus_m2q():
    pf = matrix_partial_field(2)
    R = pf.ring
    I = _mm(R, 1, 0, 0, 1)
    Z = _mm(R, 0, 0, 0, 0)
    A = _mm(R, 2, 2, 0, 2)
    B = _mm(R, 0, 6, -6, 6)
    C = _mm(R, 3, 0, -3, 3)
    D = _mm(R, 6, 6, -6, 0)
    grid = [
        [I, Z, Z, I, A, I, A, B, B],
        [Z, I, Z, I, I, C, D, C, D],
        [Z, Z, I, I, I, I, I, I, I],
    ]
    return ChainGroupRep.from_matrix(pf, RMatrix.build(R, grid, [1, 2, 3], range(1, 10)))


UNWRAPPED_ROWS = [
    [1, 0, 0, 0, 0, 0, 1, 0, 2, 2, 1, 0, 2, 2, 0, 6, 0, 6],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, 2, 0, 1, 0, 2, -6, 6, -6, 6],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 3, 0, 6, 6, 3, 0, 6, 6],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 1, -3, 3, -6, 0, -3, 3, -6, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
]


def nonpappus_unwrapped():
    from skewchain.multilinear import MultilinearRep

    blocks = {}
    for e in range(1, 10):
        blocks[e] = [[parse_fraction(r[2 * e - 2]), parse_fraction(r[2 * e - 1])]
                     for r in UNWRAPPED_ROWS]
    return MultilinearRep(QQ, 2, blocks)


VAMOS_DEPENDENT = [{1, 2, 5, 6}, {1, 2, 7, 8}, {5, 6, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}]


def vamos():
    return from_circuit_hyperplanes(4, range(1, 9), VAMOS_DEPENDENT)


REID_ROWS = [
    [1, 0, 0, 1, 1, 1, 0, 0, 1],
    [0, 1, 0, 1, 1, 2, 1, 1, 0],
    [0, 0, 1, 1, 0, 0, 1, 2, 1],
]


def reid():
    pf = PartialField(field_ring(GF(3)), "units")
    return ChainGroupRep.from_matrix(pf, RMatrix.build(pf.ring, REID_ROWS, [1, 2, 3], range(1, 10)))


def _q8(R):
    one = R.one
    i, j, k = R.quat(0, 1), R.quat(0, 0, 1), R.quat(0, 0, 0, 1)
    return [one, -one, i, -i, j, -j, k, -k]


def dowling_grid(R):
    """[I A] for Q_3(Q_8): identity on e1..e3, then the a-, b- and c-columns."""
    G = _q8(R)
    one, zero = R.one, R.zero
    rows = {"e1": [], "e2": [], "e3": []}
    cols = ["e1", "e2", "e3"]
    for r in rows:
        rows[r] = [one if r == c else zero for c in cols]
    for idx, g in enumerate(G, start=1):
        cols.append(f"a{idx}")
        rows["e1"].append(-one); rows["e2"].append(g); rows["e3"].append(zero)
    for idx, g in enumerate(G, start=1):
        cols.append(f"b{idx}")
        rows["e1"].append(zero); rows["e2"].append(-one); rows["e3"].append(g)
    for idx, g in enumerate(G, start=1):
        cols.append(f"c{idx}")
        rows["e1"].append(g); rows["e2"].append(zero); rows["e3"].append(-one)
    return [rows["e1"], rows["e2"], rows["e3"]], ["e1", "e2", "e3"], cols


def dowling_h():
    pf = PartialField(quaternions(), "units")
    grid, rows, cols = dowling_grid(pf.ring)
    return ChainGroupRep.from_matrix(pf, RMatrix.build(pf.ring, grid, rows, cols))


def dowling_r3():
    pf = gf3_quaternion_partial_field()
    grid, rows, cols = dowling_grid(pf.ring)
    return ChainGroupRep.from_matrix(pf, RMatrix.build(pf.ring, grid, rows, cols))


def counterexample():
    pf = gf3_quaternion_partial_field()
    R = pf.ring
    dgrid, drows, dcols = dowling_grid(R)
    zero = R.zero
    reid_part = [[R.scalar(v) for v in row] + [zero] * len(dcols) for row in REID_ROWS]
    dow_part = [[zero] * 9 + row for row in dgrid]
    A = RMatrix.build(R, reid_part + dow_part, [1, 2, 3] + drows, list(range(1, 10)) + dcols)
    return ChainGroupRep.from_matrix(pf, A)


def u26_qu():
    K = QuadraticField(5)
    pf = quaternionic_unimodular(K)
    H = pf.ring
    h = parse_fraction("1/2")
    q4 = parse_fraction("1/4")

    def el(*parts):
        return H.element(tuple(K.coerce(x) for x in parts))

    p = el(h, h, h, h)
    q = el(h, h, h, -h)
    # r = 1/2 + (1 + sqrt5)/4 i + (1 - sqrt5)/4 j
    r = H.element(((h, 0), (q4, q4), (q4, -q4), (0, 0)))
    r = H.element(tuple(K.coerce(c) for c in r.coords))
    one, zero = H.one, H.zero
    grid = [[one, zero, one, one, one, one], [zero, one, one, p, q, r]]
    return ChainGroupRep.from_matrix(pf, RMatrix.build(H, grid, [1, 2], range(1, 7)))


def dyadic_example():
    pf = dyadic()
    R = pf.ring
    half = parse_fraction("1/2")
    grid = [[1, 0, 1, 1], [0, 1, 1, half]]
    return ChainGroupRep.from_matrix(pf, RMatrix.build(R, grid, [1, 2], range(1, 5)))


def dyadic_gf5():
    from skewchain.chaingroup import apply_hom, mod_p_hom

    rep = dyadic_example()
    return apply_hom(rep, mod_p_hom(rep.pf.ring, 5))


ENTRIES = [
    ("nonpappus-skew", "rep", nonpappus_skew,
     "Non-Pappus matroid over the quaternions with a = i and b = j substituted into the "
     "3x9 skew-field representation; the choice a = i, b = j is ours."),
    ("nonpappus-m2q", "rep", nonpappus_m2q,
     "Non-Pappus matroid over P(2, Q) = (M(2, Q), GL(2, Q)) as the 3x9 matrix of 2x2 "
     "rational blocks."),
    ("nonpappus-unwrapped", "multilinear", nonpappus_unwrapped,
     "The 6x18 rational unwrapping of nonpappus-m2q split into 2-column blocks; "
     "a 2-linear representation of the non-Pappus matroid."),
    ("vamos", "matroid", vamos,
     "Vamos matroid V8: rank 4 on 1..8 with exactly the five dependent 4-sets "
     "{1,2,5,6}, {1,2,7,8}, {5,6,7,8}, {3,4,5,6}, {3,4,7,8}."),
    ("reid-gf3", "rep", reid,
     "Ternary Reid geometry R9 over GF(3)."),
    ("dowling-q8-H", "rep", dowling_h,
     "Rank-3 Dowling geometry Q3(Q8) as [I A] over the quaternions; a-columns carry -1 in "
     "e1 and g in e2, b-columns -1 in e2 and g in e3, c-columns g in e1 and -1 in e3, with "
     "g running through 1, -1, i, -i, j, -j, k, -k."),
    ("dowling-q8-r3", "rep", dowling_r3,
     "The Q3(Q8) matrix of dowling-q8-H read over GF(3)[i,j,k] with all units as group."),
    ("counterexample-r9-q3", "rep", counterexample,
     "Block-diagonal direct sum of reid-gf3 and dowling-q8-r3 over GF(3)[i,j,k]: "
     "representable over a skew partial field but over no skew field."),
    ("u26-qu", "rep", u26_qu,
     "U(2,6) over QU = (H, unit quaternions) with base field Q(sqrt5): [I | 1 1 1 1; 1 p q r] "
     "where p = 1/2 + (i + j + k)/2, q = 1/2 + (i + j - k)/2, "
     "r = 1/2 + (1 + sqrt5)/4 i + (1 - sqrt5)/4 j; all pairwise distances among 0, 1, p, q, r are 1."),
    ("dyadic-example", "rep", dyadic_example,
     "U(2,4) over the dyadic partial field: [I | 1 1; 1 1/2]."),
    ("dyadic-example-gf5", "rep", dyadic_gf5,
     "Image of dyadic-example under Z[1/2] -> GF(5), 1/2 -> 3."),
]


def document(kind, obj):
    if kind == "rep":
        return matrix_document(obj)
    if kind == "matroid":
        return matroid_document(obj)
    return multilinear_document(obj)


def expected(kind, obj):
    from skewchain.chaingroup import matroid_of

    if kind == "rep":
        M = matroid_of(obj)
    elif kind == "matroid":
        M = obj
    else:
        return {"n": obj.n, "elements": len(obj.ground)}
    return {"rank": M.rank, "elements": len(M.ground), "bases": len(M.bases)}


def build():
    out = {}
    for name, kind, fn, note in ENTRIES:
        obj = fn()
        out[name] = {
            "name": name,
            "payload": kind,
            "provenance": note,
            "expected": expected(kind, obj),
            "document": document(kind, obj),
        }
    return out


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for name, entry in build().items():
        (DATA / f"{name}.json").write_text(json.dumps(entry, indent=1) + "\n")
        print(name, entry["expected"])


if __name__ == "__main__":
    main()
