"""Finite-type knot invariants, chord diagrams, Lie-algebra weight systems and
numerical iterated integrals over Morse knots."""

import json
from pathlib import Path

from ._core import (
    ChordDiagram,
    Error,
    LaurentPoly,
    LieAlgebra,
    MorseKnot,
    Quadrature,
    SingularDiagram,
    chord_diagram_of,
    conway,
    enumerate_chord_diagrams,
    extend_conway,
    fixture_names,
    four_term_relations,
    isomorphic,
    lie_algebra,
    linking_integral,
    linking_number,
    parse_code,
    parse_gauss,
    parse_pd,
    random_singular_knots,
    resolve_node,
    satisfies_4T,
    switch_crossing,
    v2,
    vassiliev_eval,
    weight,
    writhe,
)
from . import _core


def diagram_json(diagram):
    """JSON description of a diagram as a dict."""
    return json.loads(diagram._json())


def load_curve(path):
    """Morse knot from a curve JSON file."""
    return MorseKnot._from_json(Path(path).read_text())


def knot_summary(knot):
    """Critical levels, strands and slabs of a Morse knot as a dict."""
    return json.loads(knot._summary())


def degree_coefficients(knot, degree, quadrature=None, normalize=True):
    """Coefficient table up to `degree` as a dict; hump-normalized unless `normalize` is False."""
    return json.loads(_core._degree_coefficients(knot, degree, quadrature or Quadrature(), normalize))


__all__ = [name for name in dir() if not name.startswith("_") and name not in {"json", "Path"}]
