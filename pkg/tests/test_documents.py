"""JSON document layer: roundtrips and rejection of malformed input."""

import json
from fractions import Fraction

import pytest

from arcinv.arcs import Arc, Hypersurface, monomial_arc
from arcinv.contact import ResolutionData
from arcinv.documents import (
    arc_to_doc,
    hypersurface_to_doc,
    load_arc,
    load_hypersurface,
    load_resolution,
    parse_arc,
    parse_hypersurface,
    parse_resolution,
    resolution_to_doc,
    save_document,
)
from arcinv.errors import DocumentError
from arcinv.polynomials import Polynomial
from arcinv.tseries import TPoly, TRational

XYZ = ("x", "y", "z")
QUINTIC = Hypersurface(Polynomial(XYZ, {(2, 3, 0): 1, (0, 0, 6): -1}))
EXAMPLE = ResolutionData.of(
    (2, 3),
    [((3, 3), 1), ((2, 4), 1), ((12, 18), 5)],
    coord_val=((3, 3), (2, 4), (2, 3)),
)


def test_hypersurface_roundtrip():
    assert parse_hypersurface(hypersurface_to_doc(QUINTIC)).f == QUINTIC.f


def test_arc_roundtrip_with_rational_components():
    arc = Arc(
        [
            TRational(TPoly({1: Fraction(2, 3), 4: 1}), TPoly({0: 1, 2: -1})),
            TRational.t(2),
            TRational.zero(),
        ]
    )
    assert parse_arc(arc_to_doc(arc)) == arc


def test_resolution_roundtrip():
    assert parse_resolution(resolution_to_doc(EXAMPLE)) == EXAMPLE


def test_resolution_accepts_single_generator_shorthand():
    doc = {"kind": "resolution", "c": [1, 1], "a": [1, 3], "b": 1}
    data = parse_resolution(doc)
    assert data.gens == (((1, 3), 1),)
    assert data.is_almost_rees
    assert data.b == 1


def test_kind_is_checked():
    doc = hypersurface_to_doc(QUINTIC)
    doc["kind"] = "arc"
    with pytest.raises(DocumentError):
        parse_hypersurface(doc)


def test_malformed_documents_rejected():
    with pytest.raises(DocumentError):
        parse_hypersurface({"kind": "hypersurface", "variables": []})
    with pytest.raises(DocumentError):
        parse_arc({"kind": "arc", "components": "nope"})
    with pytest.raises(DocumentError):
        parse_resolution({"kind": "resolution", "c": [2, 3]})


def test_float_coefficients_rejected():
    doc = {
        "kind": "hypersurface",
        "variables": ["x", "y"],
        "polynomial": [
            {"coeff_num": 0.5, "coeff_den": 1, "exponents": [2, 0]},
        ],
    }
    with pytest.raises(DocumentError):
        parse_hypersurface(doc)


def test_unit_polynomial_rejected_as_surface():
    doc = {
        "kind": "hypersurface",
        "variables": ["x", "y"],
        "polynomial": [{"coeff_num": 1, "coeff_den": 1, "exponents": [0, 0]}],
    }
    with pytest.raises(DocumentError):
        parse_hypersurface(doc)


def test_arc_with_vanishing_denominator_rejected():
    doc = {
        "kind": "arc",
        "components": [
            {
                "num": [{"coeff_num": 1, "coeff_den": 1, "exponents": [1]}],
                "den": [{"coeff_num": 1, "coeff_den": 1, "exponents": [1]}],
            }
        ],
    }
    with pytest.raises(DocumentError):
        parse_arc(doc)


def test_save_and_load(tmp_path):
    surface_path = tmp_path / "surface.json"
    arc_path = tmp_path / "arc.json"
    resolution_path = tmp_path / "resolution.json"
    save_document(surface_path, hypersurface_to_doc(QUINTIC))
    save_document(arc_path, arc_to_doc(monomial_arc((3, 2, 2))))
    save_document(resolution_path, resolution_to_doc(EXAMPLE))
    assert load_hypersurface(surface_path).f == QUINTIC.f
    assert load_arc(arc_path) == monomial_arc((3, 2, 2))
    assert load_resolution(resolution_path) == EXAMPLE


def test_load_reports_unreadable_files(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(DocumentError):
        load_hypersurface(path)
    with pytest.raises(DocumentError):
        load_arc(tmp_path / "missing.json")


def test_saved_documents_are_stable_on_disk(tmp_path):
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    save_document(path_a, resolution_to_doc(EXAMPLE))
    save_document(path_b, resolution_to_doc(EXAMPLE))
    assert path_a.read_bytes() == path_b.read_bytes()
    json.loads(path_a.read_text())
