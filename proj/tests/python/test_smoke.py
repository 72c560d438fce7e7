import os
from fractions import Fraction
from pathlib import Path

import pytest

import effalg

DATA = Path(os.environ.get("EFFALG_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return effalg.Algebra.from_eaf((DATA / name).read_text())


def test_chain_structure():
    c3 = effalg.mv_chain(3)
    assert len(c3) == 4
    assert c3.names == ["0", "a", "2a", "1"]
    assert c3.ord("a") == 3
    assert c3.sum("a", "2a") == "1"
    assert c3.sum("2a", "2a") is None
    assert c3.supplement("a") == "2a"
    assert c3.is_lattice and c3.is_mv


def test_coinciding_multiples_fixture():
    e = effalg.fixture("coinciding-multiples")
    assert e.ord("a") == 2 and e.ord("b") == 3
    assert e.sharp == ["0", "1"]
    assert e.join("a", "b") is None
    assert not e.is_lattice
    assert e.flags["sharply_dominating"]


def test_stateless_certificate():
    e = effalg.fixture("stateless")
    assert effalg.find_state(e) is None
    cert = effalg.certify_no_state(e)
    assert cert["verified"]
    assert cert["gap"] < 0
    assert any(label == "sum b c = 2a" for label, _ in cert["rows"])


def test_find_state_is_exact():
    state = effalg.find_state(effalg.mv_chain(3))
    assert state == {"0": Fraction(0), "a": Fraction(1, 3), "2a": Fraction(2, 3), "1": Fraction(1)}
    assert effalg.certify_no_state(effalg.mv_chain(3)) is None


def test_smear_on_horizontal_sum():
    hsum = effalg.horizontal_sum([effalg.mv_chain(2, "a"), effalg.mv_chain(3, "b")])
    assert hsum.to_eaf() == load("hsum-c2-c3.eaf").to_eaf()
    smeared = effalg.smear(hsum, {"0": 0, "1": 1})
    assert smeared["a"] == Fraction(1, 2)
    assert smeared["b"] == Fraction(1, 3)
    assert smeared["2b"] == Fraction(2, 3)


def test_smear_on_product():
    product = effalg.direct_product(effalg.boolean_algebra(1), effalg.mv_chain(2, "c"))
    values = {"(0,0)": 0, "(0,1)": Fraction(1, 2), "(1,0)": Fraction(1, 2), "(1,1)": 1}
    assert effalg.smear(product, values)["(1,c)"] == Fraction(3, 4)


def test_decompose():
    product = load("product-2-c2.eaf")
    d = effalg.decompose(product, "(1,c)")
    assert d == {"mode": "basic", "sharp_part": "(1,0)", "parts": [("(0,c)", 1)]}
    degraded = effalg.decompose(effalg.fixture("coinciding-multiples"), "2a")
    assert degraded["mode"] == "atomic-degraded"


def test_laws():
    assert len(effalg.law_ids()) == 19
    results = effalg.run_laws(load("hsum-c2-c3.eaf"))
    assert all(r["status"] == "pass" for r in results)
    ce = effalg.run_laws(effalg.fixture("coinciding-multiples"), True, ["atom-saturation-sharp"])
    assert ce[0]["status"] == "fail"
    assert "2a" in ce[0]["witnesses"]


def test_verify_and_errors():
    violations = effalg.verify_eaf((DATA / "broken.eaf").read_text())
    assert any(v["axiom"] == "commutativity" for v in violations)
    assert effalg.verify_eaf((DATA / "boolean-2.eaf").read_text()) == []
    with pytest.raises(effalg.EffalgError):
        effalg.Algebra.from_eaf("not an eaf file")
    with pytest.raises(ValueError):
        effalg.boolean_algebra(9)
    with pytest.raises(ValueError):
        effalg.fixture("nope")
