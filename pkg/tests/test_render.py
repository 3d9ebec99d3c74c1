from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from simplicial import frieze as fz
from simplicial import render
from simplicial.errors import ValidationError
from simplicial.frieze import Frieze

D1 = Frieze(((2, 3), (4, 5), (10, 11)), ((-2, -1), (-8, -7)), (11, 9))
SVG = "{http://www.w3.org/2000/svg}"


def test_svg_is_well_formed():
    root = ET.fromstring(render.to_svg(D1, 12))
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    assert len(list(root.iter(SVG + "line"))) == 6
    assert len(list(root.iter(SVG + "path"))) == 5


def test_svg_points_are_twenty_apart():
    root = ET.fromstring(render.to_svg(fz.unit(), 3, labels=False))
    xs = sorted(float(line.get("x1")) for line in list(root.iter(SVG + "line")))
    assert [b - a for a, b in zip(xs, xs[1:])] == [20.0, 20.0]
    assert list(root.iter(SVG + "text")) == []


def test_svg_draws_cups_and_caps_as_arcs():
    d = Frieze((), ((-2, -1),), (0, 2))
    root = ET.fromstring(render.to_svg(d, 4))
    (path,) = list(root.iter(SVG + "path"))
    assert " A " in f" {path.get('d')} "


def test_ascii_legend():
    text = render.to_ascii(Frieze((), ((-2, -1),), (0, 2)), 3)
    assert "a cap [-2,-1]" in text
    assert "A line [-3,1]" in text
    assert text.splitlines()[1].split()[0] == "top"


def test_window_too_small():
    with pytest.raises(ValidationError):
        render.to_svg(D1, 4)
