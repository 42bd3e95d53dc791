from fractions import Fraction

import pytest

from syncpaths.codes import (
    encode_kn,
    encode_knn,
    enumerate_phi_n,
    enumerate_phi_nn,
)
from syncpaths.witness import (
    forest_decomposition,
    overlap_blocks,
    witness_kn,
    witness_knn,
)


def test_forest_identity():
    f = forest_decomposition((1, 2, 3, 4))
    assert f.roots == (1, 2, 3, 4)
    assert all(f.height(r) == 0 and f.width(r) == 1 for r in f.roots)


def test_forest_two_trees():
    f = forest_decomposition((2, 2, 4, 4))
    assert f.roots == (2, 4)
    assert f.levels[2] == ((2,), (1,))
    assert f.levels[4] == ((4,), (3,))
    assert f.leaves[2] == (1,) and f.leaves[4] == (3,)
    assert f.path_length(1) == 1 and f.path_length(2) == 0


def test_forest_single_tree():
    n = 5
    f = forest_decomposition((5,) * n)
    assert f.roots == (5,)
    assert f.height(5) == 1
    assert f.width(5) == n - 1
    assert f.leaves[5] == (1, 2, 3, 4)


def test_forest_level_ordering():
    # deeper levels hold strictly smaller vertices
    for n in range(2, 7):
        for code in enumerate_phi_n(n):
            forest = forest_decomposition(code)
            for root, tiers in forest.levels.items():
                for shallow, deep in zip(tiers, tiers[1:]):
                    assert max(deep) < min(shallow)


def test_witness_kn_examples():
    assert witness_kn((2, 2, 4, 4), 1).values == (0, 1, 3, 4)
    assert witness_kn((1, 2, 3, 4), 1).values == (0, 2, 4, 6)
    w = witness_kn((4, 4, 4, 4), 1).values
    assert w == (0, Fraction(1, 3), Fraction(2, 3), 1)


def test_witness_kn_roundtrip_exhaustive():
    for n in range(1, 7):
        for eps in (Fraction(1), Fraction(1, 100)):
            for code in enumerate_phi_n(n):
                w = witness_kn(code, eps)
                assert w.is_ordered()
                assert encode_kn(w, eps) == code


def test_witness_scaling():
    for code in ((2, 2, 4, 4), (3, 4, 4, 4), (1, 3, 3)):
        a = witness_kn(code, Fraction(1, 50)).values
        b = witness_kn(code, Fraction(1)).values
        assert all(x * 50 == y for x, y in zip(a, b))


def test_overlap_blocks():
    assert overlap_blocks(((1, 2), (1, 2))) == [(1, 1), (2, 2)]
    assert overlap_blocks(((1, 1), (2, 2))) == [(1, 2)]
    assert overlap_blocks(((1, 1, 3), (1, 3, 3))) == [(1, 3)]
    # empty rows always form singleton blocks
    assert overlap_blocks(((2, 2), (1, 1))) == [(1, 1), (2, 2)]
    assert overlap_blocks(((2,), (1,))) == [(1, 1)]


def test_witness_knn_examples():
    assert witness_knn(((1, 2), (1, 2)), 1).values == (0, 3, 0, 3)
    w = witness_knn(((1, 1), (0, 0)), 1)
    assert encode_knn(w, 1) == ((1, 1), (0, 0))


def test_witness_knn_roundtrip_exhaustive():
    for n in range(1, 5):
        for eps in (Fraction(1), Fraction(1, 100)):
            for code in enumerate_phi_nn(n):
                w = witness_knn(code, eps)
                assert w.is_ordered()
                assert encode_knn(w, eps) == code


def test_witness_knn_scaling():
    for code in (((1, 2), (1, 2)), ((1, 1, 1), (1, 3, 3))):
        a = witness_knn(code, Fraction(1, 50)).values
        b = witness_knn(code, Fraction(1)).values
        assert all(x * 50 == y for x, y in zip(a, b))


def test_witness_rejects_bad_eps():
    with pytest.raises(ValueError):
        witness_kn((1, 2), 0)
    with pytest.raises(ValueError):
        witness_knn(((1,), (1,)), Fraction(-1))


@pytest.mark.slow
def test_witness_roundtrips_extended_range():
    import random

    rng = random.Random(41)
    for code in enumerate_phi_n(8):  # all 1430 codes
        assert encode_kn(witness_kn(code, Fraction(1)), Fraction(1)) == code
    for n in (5, 6):
        codes = enumerate_phi_nn(n)
        for code in rng.sample(codes, 300):
            assert encode_knn(witness_knn(code, Fraction(1)), Fraction(1)) == code


def test_witness_knn_hard_ladder_cases():
    # these border pairs defeat naive uniform-ladder placements; the exact
    # constraint solve must handle them
    for code in (((1, 1, 1, 3), (1, 3, 3, 4)), ((1, 1, 3, 3), (1, 3, 3, 4))):
        w = witness_knn(code, 1)
        assert encode_knn(w, 1) == code
