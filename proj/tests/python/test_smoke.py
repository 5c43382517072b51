import pytest

import jackideal


def test_coupling_and_character():
    assert jackideal.beta_kr(1, 2) == "-1/2"
    assert jackideal.character(1, 2, 2, 4) == [0, 0, 1, 1, 2]
    assert jackideal.is_admissible([3, 1], 1, 2, 2)
    assert not jackideal.is_admissible([2, 1], 1, 2, 2)
    with pytest.raises(ValueError):
        jackideal.beta_kr(1, 3)


def test_jack_values():
    sym = jackideal.jack([2], 2)
    assert sym["lambda"] == [2]
    assert [t["partition"] for t in sym["poly"]["terms"]] == [[2], [1, 1]]
    spec = jackideal.jack([2], 2, k=1, r=2)
    coeffs = {tuple(t["partition"]): t["coeff"] for t in spec["poly"]["terms"]}
    assert coeffs[(1, 1)] == {"num": "-2", "den": "1"}
    assert jackideal.principal_specialization([1], 4) == "4"


def test_membership():
    poly = {
        "basis": "msym",
        "n": 2,
        "terms": [{"partition": [3], "coeff": "1"}, {"partition": [2, 1], "coeff": "-1"}],
    }
    cert = jackideal.membership(poly, 1, 2, 4)
    assert cert["member"]
    assert cert["combination"][0]["lambda"] == [3]
    poly["terms"] = [{"partition": [1, 1], "coeff": "1"}]
    cert = jackideal.membership(poly, 1, 2, 4)
    assert not cert["member"]
    assert cert["obstruction"] == [1, 1]


def test_suites():
    assert jackideal.verify("phi3", r=2)["summary"]["fail"] == 0
    assert jackideal.verify("wheel", k=1, n=2, dmax=6)["summary"]["fail"] == 0
    rep = jackideal.verify("commutators", trials=2, degree=3)
    assert rep["summary"]["fail"] == 0
    assert jackideal.wheel_dimension(1, 2, 4) == 2
