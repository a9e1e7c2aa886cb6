"""Ranking, wedge signs and Hodge complements of the basis combinatorics."""

import pytest

from doubleforms.exterior import (
    AlgebraContext,
    complement,
    rank_index,
    subsets,
    unrank_index,
    wedge_basis,
)
from oracles import enumeration_rank


def test_rank_examples():
    ctx = AlgebraContext(4)
    assert rank_index((1, 2), ctx) == 0
    # frozen from the enumeration oracle: lex position of {3,4} among C(4,2)=6
    assert enumeration_rank((3, 4), 4) == 5
    assert rank_index((3, 4), ctx) == 5
    assert rank_index((1,), AlgebraContext(1)) == 0


def test_unrank_examples():
    assert unrank_index(0, 2, AlgebraContext(4)) == (1, 2)
    assert unrank_index(5, 2, AlgebraContext(4)) == (3, 4)
    assert unrank_index(0, 0, AlgebraContext(3)) == ()


def test_rank_matches_enumeration_everywhere():
    for n in (3, 5, 6):
        ctx = AlgebraContext(n)
        for p in range(n + 1):
            for I in subsets(n, p):
                assert rank_index(I, ctx) == enumeration_rank(I, n)


def test_roundtrip_exhaustive_up_to_n8():
    for n in range(1, 9):
        ctx = AlgebraContext(n)
        for p in range(n + 1):
            table = subsets(n, p)
            for r, I in enumerate(table):
                assert unrank_index(rank_index(I, ctx), p, ctx) == I
                assert rank_index(unrank_index(r, p, ctx), ctx) == r


def test_rank_errors():
    ctx = AlgebraContext(3)
    with pytest.raises(ValueError):
        rank_index((1, 2, 3, 4), ctx)  # degree beyond n
    with pytest.raises(ValueError):
        rank_index((0, 2), ctx)
    with pytest.raises(ValueError):
        rank_index((2, 2), ctx)
    with pytest.raises(ValueError):
        rank_index((3, 1), ctx)


def test_unrank_errors():
    ctx = AlgebraContext(4)
    with pytest.raises(ValueError):
        unrank_index(6, 2, ctx)
    with pytest.raises(ValueError):
        unrank_index(-1, 2, ctx)
    with pytest.raises(ValueError):
        unrank_index(0, 5, ctx)


def test_context_bounds():
    with pytest.raises(ValueError):
        AlgebraContext(0)
    with pytest.raises(ValueError):
        AlgebraContext(13)


def test_wedge_examples():
    assert wedge_basis((1,), (2,)) == (1, (1, 2))
    assert wedge_basis((2,), (1,)) == (-1, (1, 2))
    # one transposition moves 2 past 3
    assert wedge_basis((1, 3), (2,)) == (-1, (1, 2, 3))
    assert wedge_basis((1, 2), (2, 3)) is None


def test_wedge_antisymmetry_exhaustive():
    for n in (3, 4, 5):
        ctx = AlgebraContext(n)
        for p in range(n + 1):
            for q in range(n + 1 - p):
                for I in subsets(n, p):
                    for J in subsets(n, q):
                        left = wedge_basis(I, J)
                        right = wedge_basis(J, I)
                        if left is None:
                            assert right is None
                            continue
                        flip = -1 if (p * q) % 2 else 1
                        assert right == (flip * left[0], left[1])
        del ctx


def test_complement_examples():
    assert complement((1, 2), AlgebraContext(4)) == (1, (3, 4))
    assert complement((2,), AlgebraContext(2)) == (-1, (1,))
    assert complement((), AlgebraContext(3)) == (1, (1, 2, 3))


def test_complement_merges_to_volume():
    for n in (2, 4, 6):
        ctx = AlgebraContext(n)
        full = tuple(range(1, n + 1))
        for p in range(n + 1):
            for I in subsets(n, p):
                sign, rest = complement(I, ctx)
                assert wedge_basis(I, rest) == (sign, full)


def test_double_complement_sign():
    for n in (2, 3, 4, 5, 6):
        ctx = AlgebraContext(n)
        for p in range(n + 1):
            expected = -1 if (p * (n - p)) % 2 else 1
            for I in subsets(n, p):
                s1, rest = complement(I, ctx)
                s2, back = complement(rest, ctx)
                assert back == I
                assert s1 * s2 == expected
