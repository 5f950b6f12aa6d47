from pathlib import Path

import pytest

from twosquares import render as R
from twosquares.errors import InvalidInput, TooLarge
from twosquares.partition import Quad, enumerate_P2, tau, y_area
from twosquares.windmill import Triple, area, enumerate_S, zag

GOLDEN = Path(__file__).parent / "golden"


def test_plus_pentomino():
    assert R.render_windmill(Triple(1, 1, 1)) == " o\no#o\n o\n"
    assert len(R.outer_shape(Triple(1, 1, 1))) == 12


def test_cross_ascii_golden():
    assert R.render_windmill(Triple(1, 1, 4), "ascii") == (GOLDEN / "windmill_1_1_4.txt").read_text()


def test_cross_svg_golden():
    assert R.render_windmill(Triple(1, 1, 4), "svg") == (GOLDEN / "windmill_1_1_4.svg").read_text()


def test_young_with_conjugate_golden():
    doc = R.render_young(Quad(4, 2, 3, 3), with_conjugate=True, fmt="ascii")
    assert doc == (GOLDEN / "young_4_2_3_3_conjugate.txt").read_text()
    svg = R.render_young(Quad(4, 2, 3, 3), with_conjugate=True, fmt="svg")
    assert svg == (GOLDEN / "young_4_2_3_3_conjugate.svg").read_text()


def test_young_with_conjugate_cell_counts():
    for fmt in ("ascii", "svg"):
        doc = R.render_young(Quad(4, 2, 3, 3), with_conjugate=True, fmt=fmt)
        assert R.count_cells(doc, fmt) == 2 * 17


def test_young_small():
    doc = R.render_young(Quad(2, 1, 1, 1))
    assert doc == "#\n#o\n"
    assert R.count_cells(doc, "ascii") == 3


def test_young_two_columns():
    assert R.young_panel(Quad(5, 1, 2, 1)).width == 2


def test_partners_share_outline():
    assert R.outer_shape(Triple(3, 2, 1)) == R.outer_shape(Triple(1, 2, 2))
    assert R.outer_shape(Triple(3, 1, 2)) == R.outer_shape(Triple(1, 4, 1))


@pytest.mark.parametrize("p", range(1, 400))
def test_duality_wherever_zag_stays_positive(p):
    for t in enumerate_S(p):
        image = zag(t)
        if min(image) >= 1:
            assert R.outer_shape(image) == R.outer_shape(t), t


@pytest.mark.parametrize("t", [(1, 1, 1), (3, 1, 2), (1, 4, 1), (3, 2, 1), (1, 2, 2), (5, 7, 3), (9, 2, 11)])
def test_quarter_turn_symmetry(t):
    shape = R.outer_shape(Triple(*t))
    assert R.rotate_quarter(shape) == shape


@pytest.mark.parametrize("t", [(1, 1, 4), (3, 2, 1), (1, 2, 2), (5, 7, 3), (2, 9, 1)])
def test_outline_matches_cell_tracing(t):
    rects = R.windmill_rects(Triple(*t))
    assert R.rects_outline(rects) == R.boundary(R._cells(rects))


def test_outline_counter_clockwise_from_least_vertex():
    shape = R.outer_shape(Triple(3, 1, 2))
    assert shape[0] == min(shape)
    signed = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(shape, shape[1:] + shape[:1]))
    assert signed > 0


@pytest.mark.parametrize("p", [5, 13, 17, 29, 101])
@pytest.mark.parametrize("fmt", ["ascii", "svg"])
def test_cell_counts(p, fmt):
    for t in enumerate_S(p):
        assert R.count_cells(R.render_windmill(t, fmt), fmt) == area(t)
    for q in list(enumerate_P2(p))[:: max(1, p // 5)]:
        assert R.count_cells(R.render_young(q, fmt=fmt), fmt) == y_area(q)


def test_conjugate_twice_is_identical():
    for q in enumerate_P2(29):
        assert R.render_young(tau(tau(q)), True, "svg") == R.render_young(q, True, "svg")


def test_deterministic():
    assert R.render_pairs(17, "svg") == R.render_pairs(17, "svg")


def test_pairs_layout():
    doc = R.render_pairs(17)
    blocks = doc.strip("\n").split("\n\n")
    assert [b.splitlines()[0].split("   ")[0].strip() for b in blocks] == ["(1, 2, 2)", "(1, 4, 1)", "(1, 1, 4)"]
    assert R.count_cells(doc, "ascii") == 5 * 17


def test_too_large(monkeypatch):
    with pytest.raises(TooLarge):
        R.render_windmill(Triple(1, 1, 600))
    monkeypatch.setenv("WINDMILL_MAX_GRID", "8")
    with pytest.raises(TooLarge):
        R.render_windmill(Triple(1, 1, 4))
    assert R.render_windmill(Triple(1, 1, 3))


def test_bad_inputs():
    with pytest.raises(InvalidInput):
        R.render_windmill(Triple(0, 1, 1))
    with pytest.raises(InvalidInput):
        R.render_young(Quad(2, 1, 2, 1))
    with pytest.raises(InvalidInput):
        R.render_windmill(Triple(1, 1, 1), "png")
