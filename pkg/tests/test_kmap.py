from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinlogic.kmap import Implicant, gray_code, render_kmap, sop_cover, sop_to_poly
from spinlogic.spectrum import index_to_bits


@given(st.integers(1, 10))
@settings(max_examples=10, deadline=None)
def test_gray_code_adjacency_property(n):
    codes = gray_code(n)
    assert len(codes) == 1 << n
    assert len(set(codes)) == 1 << n
    for a, b in zip(codes, codes[1:] + codes[:1]):
        assert sum(x != y for x, y in zip(a, b)) == 1


def test_gray_code_range_check():
    with pytest.raises(ValueError):
        gray_code(0)
    with pytest.raises(ValueError):
        gray_code(17)


def test_implicant_cells_and_poly():
    imp = Implicant(((0, 1), (2, 0)), 3)
    assert imp.cells() == [0b100, 0b110]
    assert imp.free == (1,)
    p = imp.to_poly()
    for idx in range(8):
        assert p.evaluate(index_to_bits(idx, 3)) == (1 if imp.covers(idx) else 0)
    assert imp.literals() == "x0~x2"
    assert imp.literals(["a", "b", "c"]) == "a~c"


@given(st.lists(st.integers(0, 1), min_size=16, max_size=16))
@settings(max_examples=80, deadline=None)
def test_sop_cover_is_exact(tv):
    cover = sop_cover(tv)
    covered = set()
    ones = {i for i, v in enumerate(tv) if v}
    for imp in cover:
        cells = set(imp.cells())
        assert cells <= ones  # never covers a 0-cell
        covered |= cells
    assert covered == ones
    p = sop_to_poly(cover, 4)
    for idx in range(16):
        assert p.evaluate(index_to_bits(idx, 4)) == tv[idx]


def test_sop_cover_prefers_large_subcubes():
    cover = sop_cover([1] * 8)
    assert len(cover) == 1 and cover[0].fixed == ()
    cover = sop_cover([1, 1, 1, 1, 0, 0, 0, 0])  # ~x0
    assert [imp.fixed for imp in cover] == [((0, 0),)]


def test_sop_cover_empty_function():
    assert sop_cover([0, 0, 0, 0]) == []


def test_sop_cover_input_validation():
    with pytest.raises(ValueError):
        sop_cover([0, 1, 0])
    with pytest.raises(ValueError):
        sop_cover([2, 0, 0, 0])
    with pytest.raises(ValueError):
        sop_cover([0] * 32)


def test_sop_cover_is_deterministic():
    tv = [0, 1, 1, 0, 1, 0, 0, 1]
    assert sop_cover(tv) == sop_cover(list(tv))


def test_render_kmap_layout():
    text = render_kmap([0, 1, 1, 0, 1, 0, 0, 1])
    lines = text.splitlines()
    assert lines[0] == "x0 \\ x1x2"
    assert lines[1].split() == ["00", "01", "11", "10"]
    # row x0=0: cells 00,01,11,10 -> tv[0],tv[1],tv[3],tv[2] = 0,1,0,1
    assert lines[2].split() == ["0", "0", ".", "0", "."]
    # row x0=1: cells 00,01,11,10 -> tv[4],tv[5],tv[7],tv[6] = 1,0,1,0
    assert lines[3].split() == ["1", ".", "0", ".", "0"]


def test_render_kmap_rational_cells():
    text = render_kmap([F(0), F(3), F(1, 2), F(1)])
    assert "1/2" in text and "3" in text


def test_render_kmap_custom_rows():
    text = render_kmap([0, 1, 1, 0], row_vars=[1], names=["a", "b"])
    assert text.splitlines()[0] == "b \\ a"
