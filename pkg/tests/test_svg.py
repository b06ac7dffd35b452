from lxml import etree

from solvers.degenerate import solve_canonical
from solvers.fast import solve_simplified
from utils.svg import SVGDrawing, count_marks, render_triangulation, write_svg


def test_marks_per_class(six_point):
    data = render_triangulation(six_point, solve_simplified(six_point))
    assert count_marks(data) == {"circle": 1, "chord": 6, "diagonal": 3, "point": 6, "label": 6}


def test_without_labels(square):
    data = render_triangulation(square, solve_canonical(square), labels=False)
    assert "label" not in count_marks(data)
    assert count_marks(data)["diagonal"] == 1


def test_document(hexagon, tmp_path):
    path = write_svg(str(tmp_path / "hexagon.svg"), hexagon, solve_canonical(hexagon))
    with open(path, "rb") as f:
        data = f.read()
    assert data.startswith(b"<?xml")
    root = etree.fromstring(data)
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert len(root.get("viewBox").split()) == 4
    labels = [e.text for e in root.iter("{http://www.w3.org/2000/svg}text")]
    assert labels == [str(i) for i in range(6)]


def test_y_axis_flipped():
    drawing = SVGDrawing(scale=10.0)
    drawing.line((0.0, 0.0), (1.0, 2.0), "chord")
    assert (drawing.min_y, drawing.max_y) == (-20.0, 0.0)
