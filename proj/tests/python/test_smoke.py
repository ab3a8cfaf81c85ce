"""Smoke tests for the python extension: parse, check, dual, hilbert, corpus."""

import json

import pytest

import homkoszul as hk

XYX = {
    "version": 1,
    "field": "QQ",
    "vertices": 1,
    "arrows": [
        {"name": "x", "src": 1, "tgt": 1},
        {"name": "y", "src": 1, "tgt": 1},
    ],
    "s": 3,
    "relations": [[["1", ["x", "y", "x"]]]],
}


def result_by_name(report, name):
    for r in report["results"]:
        if r["name"] == name:
            return r
    raise KeyError(name)


def test_check_certifies_non_koszul():
    report = hk.check(XYX)
    verdict = result_by_name(report, "s_koszul_verdict")
    assert verdict["status"] == "not_s_koszul_certified"
    assert verdict["data"]["witness"]["hom_index"] == 2
    assert verdict["data"]["witness"]["degree"] == 5
    assert result_by_name(report, "extra_condition")["status"] == "false"
    bs = result_by_name(report, "bs_residual")
    assert bs["status"] == "nonzero"
    assert bs["data"]["first_nonzero"] == 5


def test_hilbert_coefficients():
    coeffs = hk.hilbert(XYX, terms=6)
    scalars = [c[0][0] for c in coeffs]
    assert scalars == [1, 2, 4, 7, 12, 21]
    assert hk.dims(XYX, 6) == [1, 2, 4, 7, 12, 21, 37]


def test_dual_round_trip():
    dual = hk.dual(XYX)
    assert len(dual["relations"]) == 7  # 8 - 1
    back = hk.dual(dual)
    assert hk.canonical_json(json.dumps(back)) == hk.canonical_json(json.dumps(XYX))


def test_triple_round_trip():
    report = hk.triple(XYX)
    assert result_by_name(report, "g_round_trip")["status"] == "equal"
    assert result_by_name(report, "axioms")["status"] == "pass"


def test_corpus_determinism():
    a = hk.random_documents(5, 3)
    b = hk.random_documents(5, 3)
    assert a == b
    assert len(a) == 3
    for doc in a:
        assert doc["field"] == "GF:32003"


def test_reports_are_deterministic():
    r1 = hk.check(XYX)
    r2 = hk.check(XYX)
    assert r1 == r2


def test_parse_errors_raise():
    bad = dict(XYX)
    bad["relations"] = [[["1", ["x", "y"]]]]  # wrong degree
    with pytest.raises(hk.HomkoszulError):
        hk.check(bad)
