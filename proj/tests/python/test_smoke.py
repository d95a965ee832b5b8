"""Smoke tests for the python bindings."""

import json
import os

import pytest

import linkhom


def test_homology_of_catalog_row():
    h = linkhom.homology([75, 10, 163, 331, 247], 825)
    assert h.betti == 10
    assert h.torsion == [55, 5, 5, 5, 5]
    assert h.label == "Z^10 ⊕ Z/55 ⊕ (Z/5)^4"


def test_betti_and_torsion_functions():
    assert linkhom.betti([45, 36, 27, 11, 107], 225) == 20
    assert linkhom.torsion([62, 124, 155, 9, 85], 434) == [14, 2, 2]


def test_validation_errors():
    with pytest.raises(ValueError):
        linkhom.validate_weights([2, 4, 6])
    with pytest.raises(ValueError):
        linkhom.betti([1, 1, 1], 1)  # degree must exceed every weight


def test_representability():
    assert linkhom.bp_exponents([75, 10, 163, 331, 247], 825) is None
    form = linkhom.bp_exponents([2, 3, 5], 30)
    assert form.exponents == [15, 10, 6]
    assert linkhom.milnor_number(form) == 14 * 9 * 5

    chain = linkhom.chain_exponents([100, 350, 9, 113, 229], 800)
    assert chain.exponents == [8, 2, 50, 7, 3]

    orderings = linkhom.find_chain_orderings([10, 75, 163, 247, 331], 825)
    assert any(f.exponents == [11, 75, 5, 2, 2] for f in orderings)


def test_oracle_routes_agree():
    for exponents, betti, torsion in [
        ([2, 2, 2], 0, [2]),
        ([2, 3, 5], 0, []),
        ([3, 3, 3], 2, [3]),
    ]:
        via_oracle = linkhom.oracle_homology(exponents)
        assert via_oracle.betti == betti
        assert via_oracle.torsion == torsion
        weights, degree = linkhom.bp_link(exponents)
        via_algorithm = linkhom.homology(weights, degree)
        assert via_algorithm.betti == betti
        assert via_algorithm.torsion == torsion
        assert linkhom.eigen1_count(exponents) == betti


def test_smith_normal_form():
    assert linkhom.smith_normal_form([[4, 6], [2, 8]]) == [2, 10]
    assert linkhom.smith_normal_form([[0, 0], [0, 0]]) == [0, 0]


def test_big_integers_cross_the_boundary():
    degree = 10**30
    assert linkhom.betti([1, 1], degree) == degree - 1


def test_scan_csv():
    data_dir = os.environ.get("LINKHOM_DATA_DIR")
    if data_dir:
        with open(os.path.join(data_dir, "sample_catalog.csv")) as fh:
            text = fh.read()
    else:
        text = "10,75,163,247,331,1\n"
    report, errors = linkhom.scan_csv(text)
    assert errors == []
    doc = json.loads(report)
    assert doc["summary"]["total"] == len(doc["entries"])
    first = doc["entries"][0]
    assert first["bp"] is None
    assert first["chain"][0]["order"] == [75, 10, 163, 331, 247]
    assert first["homology"]["betti"] == 10
