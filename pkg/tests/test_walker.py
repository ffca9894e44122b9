import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from modlink import _kernels, _purepy
from modlink.errors import StartEndMismatch, WordSyntaxError
from modlink.svg import RenderOptions, render_svg
from modlink.walker import (
    DEFAULT_START,
    DirectedEdge,
    EdgeKind,
    LatticePath,
    Orientation,
    closing_power,
    deck_translation,
    shared_vertex,
    step_geometric,
    trace,
    winding_number,
)

DATA = Path(__file__).parent / "data"
letters = st.text(alphabet="LR", min_size=1, max_size=40)
points = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


def float_turns(path, center):
    """Independent reference: summed atan2 angle, in turns."""
    cx, cy = center
    pts = [(float(x) - cx, float(y) - cy) for x, y in path.polyline]
    total = 0.0
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        total += math.atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1)
    return total / (2 * math.pi)


def test_transition_table_is_the_geometry():
    for code in range(6):
        edge = DirectedEdge.from_state(0, 0, code)
        for j, letter in enumerate("LR"):
            dx, dy, t = _kernels.TRANSITIONS[code][j]
            assert step_geometric(edge, letter) == DirectedEdge.from_state(dx, dy, t)
    assert _kernels.TRANSITIONS == _purepy.TRANSITIONS


def test_left_right_mirror():
    for code in range(6):
        e = DirectedEdge.from_state(2, -1, code)
        f = step_geometric(e, "L")
        assert step_geometric(f.reversed(), "R") == e.reversed()
        g = step_geometric(e, "R")
        assert step_geometric(g.reversed(), "L") == e.reversed()


@given(letters)
def test_consecutive_crossings_share_a_triangle(word):
    path = trace(word)
    assert len(path.crossings) == len(word) + 1
    for e, f in zip(path.crossings, path.crossings[1:]):
        assert e.apex() in f.endpoints
        shared_vertex(e, f)


@given(letters)
def test_polyline_avoids_lattice_points(word):
    for x, y in trace(word).polyline:
        assert x.denominator != 1 or y.denominator != 1


def test_lr_translation_golden():
    path = trace("LR")
    assert len(path.crossings) == 3
    assert path.end == path.start.translated((0, 1))
    assert deck_translation("LR") == (0, 1)


def test_r6_closed_hexagon():
    path = trace("R" * 6)
    assert path.end == path.start
    assert deck_translation("R" * 6) == (0, 0)
    centre = path.pivot(0)
    assert all(path.pivot(i) == centre for i in range(6))
    assert winding_number(path, centre) == -1


def test_figure_word():
    path = trace("LRRRRRRRL")
    assert winding_number(path, path.pivot(1)) == -1


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("r", range(6))
def test_k_windings(k, r):
    m = 6 * k + r
    cw = trace("L" + "R" * m + "L")
    ccw = trace("R" + "L" * m + "R")
    assert winding_number(cw, cw.pivot(1)) == -k
    assert winding_number(ccw, ccw.pivot(1)) == k


@pytest.mark.parametrize("m", range(1, 40))
def test_six_fold_period(m):
    path = trace("R" * m)
    assert winding_number(path, path.pivot(0)) == -(m // 6)


@given(letters)
def test_far_centre(word):
    assert winding_number(trace(word), (1000, -1000)) == 0


@given(letters, points)
def test_winding_matches_float_reference(word, centre):
    path = trace(word)
    turns = float_turns(path, centre)
    if abs(turns - round(turns)) > 1e-6:
        assert winding_number(path, centre) == int(turns)


@given(st.integers(1, 6), st.integers(1, 6))
def test_additivity_on_closed_loops(a, b):
    path = trace("R" * 6 * (a + b))
    c = path.pivot(0)
    assert winding_number(path, c) == (
        winding_number(trace("R" * 6 * a), c) + winding_number(trace("R" * 6 * b), c)
    )


@given(letters, points, st.integers(0, 5))
def test_translation_equivariance(word, v, code):
    start = DirectedEdge.from_state(0, 0, code)
    assert trace(word, start.translated(v)) == trace(word, start).translated(v)


@given(letters)
def test_doubling(word):
    power = closing_power(word)
    closed = word * power
    v = deck_translation(closed)
    assert deck_translation(closed * 2) == (2 * v[0], 2 * v[1])
    if power > 1:
        with pytest.raises(StartEndMismatch):
            deck_translation(word)


@pytest.mark.parametrize(
    "word, power",
    [("LR", 1), ("LLLR", 3), ("LLR", 6), ("LLRR", 1), ("LRR", 6), ("LLLLLR", 3)],
)
def test_closing_power_golden(word, power):
    assert closing_power(word) == power


@given(letters, st.integers(0, 5))
def test_backends_agree(word, code):
    assert _kernels.trace_states(word, 0, 0, code) == _purepy.trace_states(word, 0, 0, code)
    path = trace(word)
    xs = [p[0] for p in path._poly6]
    ys = [p[1] for p in path._poly6]
    for cx, cy in [(0, 0), (6, 6), (-6, 12)]:
        assert _kernels.winding_turns(xs, ys, cx, cy) == _purepy.winding_turns(xs, ys, cx, cy)


def test_bad_letters():
    with pytest.raises(WordSyntaxError):
        trace("LXR")
    with pytest.raises(WordSyntaxError):
        deck_translation("")


def test_edge_geometry():
    assert DEFAULT_START == DirectedEdge((0, 0), EdgeKind.HORIZONTAL, Orientation.POSITIVE)
    assert DirectedEdge((0, 0), EdgeKind.DIAGONAL).endpoints == ((0, 0), (1, 1))
    assert DirectedEdge((0, 0), EdgeKind.VERTICAL).endpoints == ((0, 0), (0, 1))


def test_svg_golden():
    path = trace("LRRRRRRRL")
    svg = render_svg(path, RenderOptions(highlight=path.pivot(1)))
    assert svg == (DATA / "lr7l.svg").read_text()


def test_svg_empty_path_is_grid_only():
    root = ET.fromstring(render_svg(LatticePath("", ())))
    tags = [child.tag.split("}")[1] for child in root]
    assert "polyline" not in tags and "g" in tags


@given(st.text(alphabet="LR", max_size=20))
def test_svg_parses_and_is_deterministic(word):
    path = trace(word)
    svg = render_svg(path)
    assert svg == render_svg(trace(word))
    root = ET.fromstring(svg)
    assert root.get("version") == "1.1"
