from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from skewchain import catalog
from skewchain.chaingroup import matroid_of
from skewchain.matroid import (
    Matroid,
    MatroidError,
    direct_sum,
    from_circuit_hyperplanes,
    is_isomorphic,
    uniform,
)

from oracles import bases_by_rank, block_bases

VAMOS = catalog.load("vamos")


small_rational_matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(r, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n),
                           min_size=r, max_size=r)))


def matroid_from_rows(rows):
    n = len(rows[0])
    labels = tuple(range(1, n + 1))
    for r in range(len(rows), -1, -1):
        bases = bases_by_rank(rows, labels, r)
        if bases:
            return Matroid(labels, bases)
    raise AssertionError("unreachable")


class TestRank:
    def test_empty(self):
        assert VAMOS.rank_of([]) == 0

    def test_vamos_independent(self):
        assert VAMOS.rank_of([1, 2, 3, 4]) == 4

    def test_vamos_circuit(self):
        assert VAMOS.rank_of([1, 2, 5, 6]) == 3

    def test_vamos_basics(self):
        assert VAMOS.rank == 4 and len(VAMOS.bases) == 65


class TestStructure:
    def test_u23_cocircuits(self):
        M = uniform(2, 3)
        assert M.cocircuits() == {frozenset(s) for s in combinations((1, 2, 3), 2)}
        assert M.circuits() == {frozenset({1, 2, 3})}

    def test_vamos_four_element_circuits(self):
        four = {C for C in VAMOS.circuits() if len(C) == 4}
        want = {frozenset(s) for s in
                ({1, 2, 5, 6}, {1, 2, 7, 8}, {5, 6, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8})}
        assert four == want
        dependent_4 = {frozenset(s) for s in combinations(range(1, 9), 4)
                       if VAMOS.rank_of(s) < 4}
        assert dependent_4 == want

    @pytest.mark.parametrize("name", [n for n in catalog.names()
                                      if catalog.get(n).payload != "multilinear"])
    def test_double_dual(self, name):
        obj = catalog.load(name)
        M = obj if isinstance(obj, Matroid) else matroid_of(obj)
        assert M.dual.dual == M
        assert M.rank + M.dual.rank == len(M.ground)

    def test_loops_and_coloops(self):
        M = Matroid((1, 2, 3), [{1, 3}, {2, 3}])
        assert M.coloops() == {3}
        N = Matroid((1, 2, 3), [{1}])
        assert N.loops() == {2, 3}

    def test_exchange_violation_rejected(self):
        with pytest.raises(MatroidError):
            Matroid((1, 2, 3, 4), [{1, 2}, {3, 4}])

    def test_unequal_sizes_rejected(self):
        with pytest.raises(MatroidError):
            Matroid((1, 2, 3), [{1}, {2, 3}])

    def test_overlapping_minor_rejected(self):
        with pytest.raises(MatroidError):
            uniform(2, 3).minor(delete=[1], contract=[1])

    @given(small_rational_matrices)
    def test_orthogonality(self, rows):
        M = matroid_from_rows(rows)
        for C in M.circuits():
            for D in M.cocircuits():
                assert len(C & D) != 1

    @given(small_rational_matrices, st.data())
    def test_minor_matches_matrix_minor(self, rows, data):
        M = matroid_from_rows(rows)
        e = data.draw(st.sampled_from(M.ground))
        # deletion = drop the column
        rest = [x for x in M.ground if x != e]
        drop = [[row[x - 1] for x in rest] for row in rows]
        D = M.delete(e)
        for r in range(len(rows), -1, -1):
            b = bases_by_rank(drop, tuple(rest), r)
            if b:
                assert D.basis_sets() == b
                break

    @given(small_rational_matrices, st.data())
    def test_contraction_deletion_duality(self, rows, data):
        M = matroid_from_rows(rows)
        e = data.draw(st.sampled_from(M.ground))
        assert M.contract(e).dual == M.dual.delete(e)

    def test_direct_sum(self):
        S = direct_sum(uniform(1, 2, "ab"), uniform(1, 2, "cd"))
        assert S.rank == 2 and len(S.bases) == 4

    def test_paving_builder(self):
        M = from_circuit_hyperplanes(2, (1, 2, 3, 4), [{1, 2}])
        assert not M.is_basis({1, 2}) and M.is_basis({1, 3})


class TestModularTriples:
    def test_u23(self):
        triples = uniform(2, 3).modular_triples()
        assert len(triples) == 1
        assert {frozenset(X) for X in triples[0]} == {frozenset(s) for s in
                                                      combinations((1, 2, 3), 2)}

    def test_u34_empty_union_complement_not_modular(self):
        M = uniform(3, 4)
        for X1, X2, X3 in M.modular_triples():
            assert X1 | X2 | X3 != frozenset(M.ground)

    def test_u34_has_some(self):
        # cocircuits of U(3,4) are the 2-sets; {1,2},{1,3},{2,3} leave S = {4}, r(M/S) = 2
        triples = {frozenset(map(frozenset, t)) for t in uniform(3, 4).modular_triples()}
        assert frozenset(map(frozenset, ({1, 2}, {1, 3}, {2, 3}))) in triples

    def test_rank_two(self):
        M = uniform(2, 5)
        expected = len(list(combinations(M.cocircuits(), 3)))
        assert len(M.modular_triples()) == expected


class TestIsomorphism:
    def test_self(self):
        assert is_isomorphic(VAMOS, VAMOS) == {e: e for e in VAMOS.ground}

    def test_rank_differs(self):
        assert is_isomorphic(uniform(2, 3), uniform(1, 3)) is None

    def test_relabelled(self):
        M = uniform(2, 4, "abcd")
        N = from_circuit_hyperplanes(2, "wxyz", [])
        assert is_isomorphic(M, N) is not None
        P = from_circuit_hyperplanes(2, "wxyz", [{"w", "x"}])
        assert is_isomorphic(M, P) is None

    def test_nonpappus_unwrapped_vs_catalog(self):
        unwrapped = catalog.load("nonpappus-unwrapped")
        rows = [[None] * 18 for _ in range(6)]
        for e, block in unwrapped.blocks.items():
            for i, line in enumerate(block):
                rows[i][2 * e - 2], rows[i][2 * e - 1] = line
        rows = [[int(x) for x in r] for r in rows]
        labels = tuple(f"u{e}" for e in range(1, 10))
        N = Matroid(labels, block_bases(rows, 2, labels, 3))
        M = matroid_of(catalog.load("nonpappus-skew"))
        witness = is_isomorphic(N, M)
        assert witness is not None
        assert N.relabel(witness) == M

    def test_nonpappus_has_eight_lines(self):
        # the Pappus configuration has nine 3-point lines; non-Pappus drops one
        M = matroid_of(catalog.load("nonpappus-skew"))
        assert len([C for C in M.circuits() if len(C) == 3]) == 8


class TestReorder:
    def test_same_bases(self):
        M = direct_sum(uniform(2, 4, "abcd"), uniform(3, 12, range(1, 13)))
        order = tuple(reversed(M.ground))
        R = M.reorder(order)
        assert R.ground == order
        assert R.basis_sets() == M.basis_sets()

    def test_not_a_permutation(self):
        with pytest.raises(MatroidError):
            uniform(1, 3).reorder((1, 2, 4))
