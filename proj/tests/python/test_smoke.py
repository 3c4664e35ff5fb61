import math

import pytest

f2mzv = pytest.importorskip("f2mzv")


def test_eval_depth_one():
    r = f2mzv.eval("zf2(2; w)", terms=100000)
    assert abs(r["value"] - math.pi / 2 * math.log(2)) < 1e-8
    assert r["error_estimate"] >= 0


def test_eval_rejects_divergent_index():
    with pytest.raises(Exception, match="diverges"):
        f2mzv.eval("zf2(1; w1)")


def test_oracle_path():
    r = f2mzv.eval("zf2(1,1; w,w)", oracle=True)
    assert abs(r["value"] - math.pi**2 / 8) < 1e-7


def test_compile_index():
    c = f2mzv.compile_index("zf2(1; w)")
    assert c["prefactor"] == {"re": "0", "im": "-1"}
    words = {t["word"] for t in c["word"]}
    assert words == {"i", "-i"}


def test_shuffle_words():
    terms = f2mzv.shuffle_words("0", "0 1")
    got = {t["word"]: t["coeff"]["re"] for t in terms}
    assert got == {"0 0 1": "2", "0 1 0": "1"}


def test_basis_counts():
    assert len(f2mzv.basis(2, level=4)) == 4
    assert len(f2mzv.basis(2, level=1)) == 1
    assert len(f2mzv.basis(5, sigma_invariant=True)) == 32


def test_dims():
    d = f2mzv.dims(7)
    assert d["sigma_invariant_4"] == [1, 2, 4, 8, 16, 32, 64, 128]
    assert d["classical_conjectural"] == [1, 0, 1, 1, 1, 2, 2, 3]


def test_coaction_u():
    terms = f2mzv.coaction_u("f1 f2")
    pairs = {(t["left"], t["right"]) for t in terms}
    assert pairs == {("1", "f1 f2"), ("f1", "f2"), ("f1 f2", "1")}


def test_symbol_machinery():
    assert f2mzv.verify_coaction_uv(3)
    assert f2mzv.check_recursion(4)
    assert f2mzv.coaction_symbol("Im(0; eta; 1)", tilde=True) == []


def test_exact_coefficients():
    assert f2mzv.bernoulli(12) == "-691/2730"
    assert f2mzv.alpha(3) == "-1/384"
    assert f2mzv.beta(5) == "32/5"


def test_closed_form_value():
    c = f2mzv.closed_form(3)
    pi = math.pi
    want = pi / 48 * (12 * math.log(2) ** 2 + pi * pi)
    assert abs(c["value"] - want) < 1e-12
