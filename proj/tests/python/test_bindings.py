import math

import pytest

vassiliev = pytest.importorskip("vassiliev")


def test_conway_and_v2():
    trefoil = vassiliev.parse_code("O1+U2+O3+U1+O2+U3+")
    assert str(vassiliev.conway(trefoil)) == "1 + z^2"
    assert vassiliev.v2(trefoil) == 1
    hopf = vassiliev.parse_gauss("O1+U2+|U1+O2+")
    assert vassiliev.conway(hopf).terms == {1: 1}
    assert vassiliev.linking_number(hopf) == 1


def test_exchange_identity():
    for g in vassiliev.random_singular_knots(seed=3, count=10, nodes=1):
        node = next(iter(g.nodes))
        expected = vassiliev.conway(vassiliev.resolve_node(g, node, "+")) - vassiliev.conway(
            vassiliev.resolve_node(g, node, "-"))
        assert vassiliev.vassiliev_eval(g) == expected


def test_errors_carry_module_and_position():
    with pytest.raises(vassiliev.Error) as info:
        vassiliev.parse_code("O1+U1")
    assert info.value.module == "knot_codes"
    assert info.value.position == 5
    with pytest.raises(ValueError):
        vassiliev.lie_algebra("so5")


def test_chords_and_weights():
    raw, classes = vassiliev.enumerate_chord_diagrams(3)
    assert raw == 15 and len(classes) == 5
    su2 = vassiliev.lie_algebra("su2")
    assert max(su2.axiom_errors().values()) < 1e-12
    parallel = vassiliev.ChordDiagram.from_word([0, 0, 1, 1])
    crossed = vassiliev.ChordDiagram.from_word([0, 1, 0, 1])
    assert vassiliev.weight(su2, parallel) == pytest.approx(9 / 8, abs=1e-12)
    assert vassiliev.weight(su2, crossed) == pytest.approx(-3 / 8, abs=1e-12)
    for name in ["su2", "gl2", "gl3"]:
        assert vassiliev.satisfies_4T(vassiliev.lie_algebra(name), 3)


def test_linking_integral():
    knot = vassiliev.MorseKnot.fixture("hopf")
    value, error, converged = vassiliev.linking_integral(knot, quadrature=vassiliev.Quadrature(steps=800))
    oracle = vassiliev.linking_number(knot.diagram())
    assert abs(value - oracle) < 1e-3 and converged and error < 1e-3


def test_coefficient_table():
    table = vassiliev.degree_coefficients(vassiliev.MorseKnot.fixture("round"), 2)
    assert table["normalized"] and table["degree"] == 2
    crossed = [e for e in table["entries"] if e["word"] == [0, 1, 0, 1]]
    assert len(crossed) == 1 and abs(crossed[0]["re"]) < 2e-3
    assert not math.isnan(crossed[0]["error"])
