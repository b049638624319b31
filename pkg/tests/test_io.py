import json

import pytest

from skewchain import catalog
from skewchain.io import (
    DocumentError,
    graph_document,
    load_json,
    matrix_document,
    matroid_document,
    parse_graph_document,
    parse_label,
    parse_matrix_document,
    parse_matroid_document,
    parse_multilinear_document,
)
from skewchain.matroid import uniform
from skewchain.quat import complete_graph


def _u23_doc(**changes):
    doc = {
        "ring": {"kind": "integers"},
        "partial_field": {"kind": "signs"},
        "rows": [1, 2],
        "cols": [1, 2, 3],
        "entries": [[1, 0, 1], [0, 1, 1]],
    }
    doc.update(changes)
    return doc


class TestMatrixDocument:
    def test_round_trip(self):
        rep = parse_matrix_document(_u23_doc())
        assert rep.form == "strong"
        assert matrix_document(rep) == _u23_doc()

    @pytest.mark.parametrize("name", ["u26-qu", "nonpappus-m2q", "reid-gf3", "dyadic-example"])
    def test_catalog_round_trip(self, name):
        doc = catalog.get(name).document
        assert matrix_document(parse_matrix_document(json.loads(json.dumps(doc)))) == doc

    def test_bad_entry_path(self):
        doc = _u23_doc(entries=[[1, 0, 1], [0, 1, "1/2"]])
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(doc)
        assert info.value.path == "$.entries[1][2]"

    def test_short_row(self):
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(_u23_doc(entries=[[1, 0, 1], [0, 1]]))
        assert info.value.path == "$.entries[1]"

    def test_row_count(self):
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(_u23_doc(entries=[[1, 0, 1]]))
        assert info.value.path == "$.entries"

    def test_unknown_key(self):
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(_u23_doc(comment="x"))
        assert info.value.path == "$" and "comment" in info.value.message

    def test_missing_key(self):
        doc = _u23_doc()
        del doc["cols"]
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(doc)
        assert "cols" in info.value.message

    def test_bad_ring(self):
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(_u23_doc(ring={"kind": "octonions"}))
        assert info.value.path == "$.ring"

    def test_bad_partial_field(self):
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(_u23_doc(partial_field={"kind": "signs", "extra": 1}))
        assert info.value.path == "$.partial_field"

    def test_duplicate_labels(self):
        with pytest.raises(DocumentError):
            parse_matrix_document(_u23_doc(cols=[1, 1, 3]))

    def test_bad_label(self):
        with pytest.raises(DocumentError) as info:
            parse_matrix_document(_u23_doc(cols=[1, None, 3]))
        assert info.value.path == "$.cols[1]"

    def test_not_an_object(self):
        with pytest.raises(DocumentError):
            parse_matrix_document([1, 2])


def test_list_labels_become_tuples():
    assert parse_label(["a", [1, 2]], "$") == ("a", (1, 2))
    with pytest.raises(DocumentError):
        parse_label(True, "$")


class TestMatroidDocument:
    def test_round_trip(self):
        M = uniform(2, 4)
        assert parse_matroid_document(matroid_document(M)) == M

    def test_bad_basis(self):
        doc = {"ground_set": [1, 2, 3], "bases": [[1, 2], {"x": 1}]}
        with pytest.raises(DocumentError) as info:
            parse_matroid_document(doc)
        assert info.value.path == "$.bases[1]"

    def test_exchange_violation(self):
        doc = {"ground_set": [1, 2, 3, 4], "bases": [[1, 2], [3, 4]]}
        with pytest.raises(DocumentError):
            parse_matroid_document(doc)


class TestMultilinearDocument:
    def test_catalog_entry(self):
        rep = parse_multilinear_document(catalog.get("nonpappus-unwrapped").document)
        assert rep.n == 2 and len(rep.ground) == 9

    def test_bad_value_path(self):
        doc = {"field": {"kind": "rationals"}, "n": 1, "blocks": [[1, [[1], ["x"]]]]}
        with pytest.raises(DocumentError) as info:
            parse_multilinear_document(doc)
        assert info.value.path == "$.blocks[0][1][1][0]"

    def test_bad_n(self):
        with pytest.raises(DocumentError) as info:
            parse_multilinear_document({"field": {"kind": "rationals"}, "n": 0, "blocks": []})
        assert info.value.path == "$.n"


class TestGraphDocument:
    def test_round_trip(self):
        g = complete_graph(4)
        assert parse_graph_document(graph_document(g)) == g

    def test_bad_edge(self):
        with pytest.raises(DocumentError) as info:
            parse_graph_document({"vertices": 3, "edges": [[1, 2], [1]]})
        assert info.value.path == "$.edges[1]"

    def test_unknown_vertex(self):
        with pytest.raises(DocumentError) as info:
            parse_graph_document({"vertices": 3, "edges": [[1, 4]]})
        assert info.value.path == "$.edges"


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(DocumentError) as info:
        load_json(p)
    assert info.value.path == "$"
