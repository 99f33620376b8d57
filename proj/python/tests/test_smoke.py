import json

import pytest

import _shoalg as shoalg


@pytest.fixture(scope="module")
def wb():
    return shoalg.Workbench(p=5, m=2, t=[1, 1])


def test_dims(wb):
    assert wb.dim("W") == 400
    assert wb.dim("SHO") == 46
    dims = wb.dims("SHO-bar")
    assert sum(dims.values()) == 47
    assert dims[-1] == 4


def test_parameter_validation():
    with pytest.raises(shoalg.ConfigError):
        shoalg.Workbench(p=4, m=2, t=[1, 1])


def test_verify_lemma11(wb):
    reports = wb.verify("lemma11", seed=1, samples=5)
    assert all(r["passed"] for r in reports)


def test_restricted(wb):
    assert wb.restricted("SHO")["restricted"]
    tall = shoalg.Workbench(p=5, m=2, t=[2, 1])
    report = tall.restricted("SHO")
    assert not report["restricted"]
    assert "witness" in report


def test_export_import_roundtrip(wb):
    text = wb.export_structure("SHO")
    assert shoalg.import_check(text) == 46
    doc = json.loads(text)
    entry = doc["constants"][0]["result"][0]
    entry[1] = entry[1] % 4 + 1
    with pytest.raises(shoalg.ConfigError):
        shoalg.import_check(json.dumps(doc))


def test_automorphisms(wb):
    sigma = wb.sample_automorphism("SHO", seed=11, depth=1)
    assert sigma == wb.sample_automorphism("SHO", seed=11, depth=1)
    check = wb.aut_check("SHO", sigma)
    assert check["admissible"]
    assert check["depth"] == 1
    assert wb.phi_roundtrip("SHO", seed=12, depth=2)
