import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from pe_conics.conic import Conic, transform
from pe_conics.pe_plane import Motion
from pe_conics.plot import PlotConfig, clip_line, degenerate_lines, marching_squares, render_svg
from pe_conics.synthesis import canonical_conic, constructible_ids, parameter_grid

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


def by_class(root, cls):
    return [e for e in root.iter() if e.get("class") == cls]


class TestConfig:
    def test_empty_window(self):
        with pytest.raises(ValueError):
            PlotConfig(window=(1, 1, 0, 1))

    def test_grid(self):
        with pytest.raises(ValueError):
            PlotConfig(grid=1)


class TestClipLine:
    def test_diagonal(self):
        assert clip_line(0, 0, 1, 1, (-1, 1, -1, 1)) == ((-1, -1), (1, 1))

    def test_miss(self):
        assert clip_line(0, 5, 1, 0, (-1, 1, -1, 1)) is None

    def test_vertical(self):
        assert clip_line(0.5, 0, 0, 1, (-1, 1, -1, 1)) == ((0.5, -1), (0.5, 1))


class TestMarchingSquares:
    def test_circle_closes(self):
        xs = ys = np.linspace(-2, 2, 101)
        gx, gy = np.meshgrid(xs, ys)
        (curve,) = marching_squares(gx**2 + gy**2 - 1, xs, ys)
        assert curve[0] == curve[-1]
        r = np.hypot(*np.array(curve).T)
        assert np.max(np.abs(r - 1)) < 1e-3

    def test_hyperbola_two_open_branches(self):
        xs = ys = np.linspace(-3, 3, 121)
        gx, gy = np.meshgrid(xs, ys)
        curves = marching_squares(gx**2 - gy**2 - 1, xs, ys)
        assert len(curves) == 2
        assert all(c[0] != c[-1] for c in curves)

    def test_no_crossing(self):
        xs = ys = np.linspace(-1, 1, 11)
        gx, gy = np.meshgrid(xs, ys)
        assert marching_squares(gx**2 + gy**2 + 1, xs, ys) == []


class TestDegenerate:
    def test_isotropic_pair(self):
        lines, notes = degenerate_lines(Conic(0, 0, 0, 1, 0, -1))
        assert len(lines) == 2 and notes == []
        dirs = {tuple(np.sign(d)) for _, d in lines}
        assert len(dirs) == 2

    def test_parallel(self):
        lines, _ = degenerate_lines(Conic(-4, 0, 0, 0, 0, 1))
        ys = sorted(p[1] for p, _ in lines)
        assert ys == pytest.approx([-2, 2])

    def test_parallel_after_rotation(self):
        # discriminant is exactly zero but not in floating point
        moved = transform(Conic(-4, 0, 0, 0, 0, 1), Motion.from_exp(2, 1, 1))
        assert len(degenerate_lines(moved)[0]) == 2

    def test_imaginary_parallel(self):
        assert degenerate_lines(Conic(4, 0, 0, 0, 0, 1)) == ([], ["no real points"])

    def test_imaginary_lines(self):
        assert degenerate_lines(Conic(0, 0, 0, 1, 0, 1)) == ([], ["a single real point"])

    def test_omega_plus_line(self):
        lines, notes = degenerate_lines(Conic(-2, 1, 0, 0, 0, 0))
        assert lines[0][0] == pytest.approx((1, 0)) and "ω" in notes[0]

    def test_double_omega(self):
        lines, notes = degenerate_lines(Conic(1, 0, 0, 0, 0, 0))
        assert lines == [] and notes


class TestRender:
    def test_well_formed_and_deterministic(self):
        c = Conic(-1, 0, 0, 0.25, 0, -1)
        svg = render_svg(c)
        assert svg == render_svg(c)
        root = parse(svg)
        assert root.tag == NS + "svg"
        assert len(by_class(root, "isotropic")) == 2
        assert len(by_class(root, "axis")) == 2
        assert len(by_class(root, "conic")) == 2

    def test_three_decimals(self):
        svg = render_svg(Conic(-4, 0, 0, 1, 0, 1))
        nums = re.findall(r'(?:x1|x2|y1|y2|cx|cy)="([^"]+)"', svg) + re.findall(r"[ML](\S+)", svg)
        assert nums and all(len(n.split(".")[1]) == 3 for n in nums)
        assert "-0.000" not in svg

    def test_imaginary_ellipse_note(self):
        root = parse(render_svg(Conic(1, 0, 0, 1, 0, 1)))
        assert by_class(root, "conic") == []
        assert [t.text for t in by_class(root, "note")] == ["no real points"]

    def test_single_point_marker(self):
        root = parse(render_svg(Conic(0, 0, 0, 1, 0, 1)))
        assert [e.tag for e in by_class(root, "conic")] == [NS + "circle"]

    def test_lines_are_drawn(self):
        root = parse(render_svg(Conic(0, 0, 0, 0, 1, 0)))
        assert len(by_class(root, "conic")) == 2

    def test_title(self):
        assert "<title>second type hyperbolic circle</title>" in render_svg(Conic(4, 0, 0, 1, 0, -1))

    def test_custom_window(self):
        root = parse(render_svg(Conic(-100, 0, 0, 1, 0, 1), PlotConfig(window=(-20, 20, -20, 20), grid=128)))
        assert len(by_class(root, "conic")) == 1


@pytest.mark.parametrize("cid", constructible_ids())
def test_every_type_renders(cid):
    grid = parameter_grid(cid)
    c = canonical_conic(cid, **grid[len(grid) // 2])
    for conic in (c, transform(c, Motion.from_exp(3, 1, -1))):
        root = parse(render_svg(conic, PlotConfig(grid=64)))
        assert root.tag == NS + "svg"
