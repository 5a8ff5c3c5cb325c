import json

import pytest
import sympy

import yagita_py as y


def test_formulas():
    assert y.yagita_gl_Z(3, 9) == 12
    assert y.yagita_gl_Z(5, 20) == 40
    assert y.yagita_sl_Z(2, 2) == 2
    assert y.psi(19, 2, 3) == 9
    assert y.yagita_sl(2, 2, "Z") == {"value": 4, "exact": False, "text": "4 or 2"}
    assert y.yagita_sl_best(2, 2, "Z")["exact"]
    assert y.yagita_sl_best(2, 2, "Z[i]") == {"value": 4, "exact": True, "text": "4"}


def test_gl_matches_direct_table():
    for p in (2, 3, 5, 7, 11):
        for n in range(1, 60):
            lcm = 1
            for m in range(1, min(n, p - 1) + 1):
                if (p - 1) % m == 0:
                    lcm = sympy.ilcm(lcm, m)
            if n <= p - 1:
                want = 2 * lcm
            else:
                want = 2 * (p - 1) * max(p**k for k in range(12) if p**k <= n)
            assert y.yagita_gl_R(p, n) == want


@pytest.mark.parametrize(
    "ring,p,d",
    [("quadratic:-7", 7, -7), ("quadratic:5", 5, 5), ("quadratic:-3", 3, -3), ("quadratic:-5", 5, -5),
     ("quadratic:13", 13, 13), ("quadratic:-11", 11, -11), ("quadratic:2", 7, 2)],
)
def test_compute_l_against_factorisation(ring, p, d):
    x = sympy.symbols("x")
    factors = sympy.factor_list(sympy.cyclotomic_poly(p, x), extension=sympy.sqrt(d))[1]
    degrees = {sympy.degree(f, x) for f, _ in factors}
    assert degrees == {y.compute_l(ring, p)}


def test_ring_helpers():
    assert y.parse_ring("Z[i]") == "cyclotomic:4"
    assert y.roots_of_unity_order("cyclotomic:5") == 10
    with pytest.raises(ValueError):
        y.compute_l("subcyclotomic:7:3", 5)


def test_prop6():
    assert y.check_prop6(5, [1, 0, 0, 0, 4]) == {"gcd": 4, "m": 4, "q": 0, "holds": True}
    for seed in range(50):
        coeffs = y.random_unit_root_poly(7, seed)
        if len(coeffs) > 1:
            assert y.check_prop6(7, coeffs)["holds"]
    with pytest.raises(ValueError):
        y.check_prop6(3, [1, 0, 1])


def test_witness_matches_sympy_determinants():
    w = y.witness("g1:5:4", "Z")
    assert w["closure_order"] == 20 and w["verified"]
    for g in w["generators"]:
        m = json.loads(g)
        mat = sympy.Matrix([[int(e["num"][0]) for e in row] for row in m["entries"]])
        assert abs(mat.det()) == 1
    q = y.witness("q8", "Z[i]")
    assert q["closure_order"] == 8 and q["all_det_one"]


def test_verify_and_table():
    r = json.loads(y.verify_case(3, 6))
    assert r["verdict"] == "Pass"
    assert r["certified_lower"] == "12"
    assert json.loads(y.verify_case(2, 2, sl=True))["verdict"] == "Incomplete"
    t = json.loads(y.table(2, "Z", 4))
    assert [row["GL"] for row in t["rows"]] == ["2", "4", "4", "8"]
