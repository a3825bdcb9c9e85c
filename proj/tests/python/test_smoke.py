"""Smoke tests for the python bindings: the main operations run end to end
and return plain python values."""

import os

import pytest

import fpalg

HERE = os.path.dirname(os.path.abspath(__file__))
PRESENTATIONS = os.path.join(HERE, os.pardir, os.pardir, "presentations")


def test_builtins_listed():
    names = fpalg.builtins()
    assert "sl2" in names
    assert "racah" in names
    assert len(names) == 6
    assert "so3_to_sl2" in fpalg.builtin_homs()


def test_normalize():
    assert fpalg.normalize("sl2", "F*E") == "E*F - H"
    assert fpalg.normalize("sl2", "H*F*E") == "E*F*H - H^2"
    assert fpalg.normalize("acsa", "J_2*J_1") == "-J_1*J_2 + J_3"


def test_expand_without_rewriting():
    assert fpalg.expand("sl2", "(E+F-2)*(E+F+2)/16") == (
        "(1/16)*F^2 + (1/16)*F*E + (1/16)*E*F + (1/16)*E^2 - 1/4"
    )


def test_confluence_report():
    report = fpalg.confluence("sl2")
    assert report["confluent"] is True
    assert len(report["critical_pairs"]) == 1
    assert report["critical_pairs"][0]["word"] == "H*F*E"


def test_pbw_count():
    assert [fpalg.pbw_count("acsa", d) for d in range(4)] == [1, 3, 6, 10]


def test_verify_hom():
    report = fpalg.verify_hom("acsa_to_sl2z2")
    assert report["verdict"] == "pass"
    assert len(report["checks"]) == 3
    # racah sources are verified through the derived Delta image
    racah = fpalg.verify_hom("racah_to_sl2")
    assert racah["verdict"] == "pass"
    assert len(racah["checks"]) == 5


def test_verify_hom_file():
    reports = fpalg.verify_hom_file(os.path.join(PRESENTATIONS, "acsa.alg"))
    assert len(reports) == 1
    assert reports[0]["verdict"] == "pass"

    bad = fpalg.verify_hom_file(os.path.join(PRESENTATIONS, "acsa_bad_hom.alg"))
    assert bad[0]["verdict"] == "fail"
    failing = [c for c in bad[0]["checks"] if not c["pass"]]
    assert failing and all(c["residual"] != "0" for c in failing)


def test_verify_inverse_and_diagram():
    inv = fpalg.verify_inverse("acsa_z2_to_sl2_z2", "sl2_z2_to_acsa_z2")
    assert inv["verdict"] == "pass"
    assert len(inv["checks"]) == 8
    for report in fpalg.verify_diagram():
        assert report["verdict"] == "pass"


def test_rep_check():
    for algebra in ["sl2", "so3", "acsa", "sl2_z2", "acsa_z2", "racah"]:
        report = fpalg.rep_check(algebra, 3)
        assert report["verdict"] == "pass", algebra


def test_verify_all_passes():
    result = fpalg.verify_all()
    assert result["verdict"] == "pass"
    assert len(result["criteria"]) == 12


def test_errors_are_python_exceptions():
    with pytest.raises(RuntimeError):
        fpalg.normalize("nope", "E")
    with pytest.raises(RuntimeError):
        fpalg.normalize("racah", "A")  # no rewrite system
    with pytest.raises(ValueError):
        fpalg.normalize("sl2", "E +")
    with pytest.raises(ValueError):
        fpalg.normalize("sl2", "E * X")
