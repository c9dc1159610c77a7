import mpmath
import pytest

import zetasum

mpmath.mp.dps = 45


def close(a, b, tol):
    return abs(a - b) <= tol * max(1, abs(b))


def test_zeta_against_mpmath():
    for s in [mpmath.mpc(2, 0), mpmath.mpc("0.3", 25), mpmath.mpc("0.5", "14.1347"), mpmath.mpc(-3, 2)]:
        assert close(zetasum.zeta(s), mpmath.zeta(s), mpmath.mpf("1e-38"))
    s = mpmath.mpc("0.5", 40)
    for n in (1, 2, 3):
        assert close(zetasum.zeta(s, n=n), mpmath.zeta(s, derivative=n), mpmath.mpf("1e-35"))


def test_zeros_against_mpmath():
    zs = zetasum.find_zeros(50)
    assert len(zs) == 10
    for k, g in enumerate(zs, start=1):
        assert abs(g - mpmath.zetazero(k).imag) < mpmath.mpf("1e-38")
    assert zetasum.count_zeros(100) == 29 == mpmath.nzeros(100)
    assert abs(zetasum.hardy_z(zs[0])) < mpmath.mpf("1e-35")


def test_laurent_constants_against_stieltjes():
    for j, (c, _) in enumerate(zetasum.laurent_constants(4)):
        expect = (-1) ** j * mpmath.stieltjes(j) / mpmath.factorial(j)
        assert abs(c - expect) < mpmath.mpf("1e-35")


def test_rhs_breakdown():
    d = zetasum.rhs("landau", 1, "2/1", 2 * mpmath.pi)
    assert abs(d["total"] + mpmath.log(2)) < mpmath.mpf("1e-35")
    d = zetasum.rhs("theorem1", 2, "5/2", 400)
    labels = [label for label, _ in d["terms"]]
    assert labels == ["delta_main", "delta_conv", "expsum_plain", "expsum_log", "mangoldt_osc"]
    assert abs(sum(v for _, v in d["terms"]) - d["total"]) < mpmath.mpf("1e-30")


def test_lhs_and_compare():
    zs = zetasum.find_zeros(61)
    v = zetasum.lhs(0, "3", 60, zs, verified_height=61)
    assert abs(v) < mpmath.mpf("1e-30")
    c = zetasum.compare(1, "1", [30, 60], "general-sc", zs, verified_height=61)
    assert len(c["rows"]) == 2
    assert c["c_hat"] < 1


def test_selfcheck():
    assert all(ok for _, ok, _, _ in zetasum.selfcheck(30))


def test_errors():
    with pytest.raises(zetasum.ZetasumError, match="PoleAtOne"):
        zetasum.zeta(1)
    with pytest.raises(zetasum.ZetasumError, match="InsufficientTable"):
        zetasum.lhs(1, "2", 100, ["14.134725141734693790"], verified_height=20)
