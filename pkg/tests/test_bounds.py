import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import iv

from pathhanoi import bounds
from pathhanoi.bounds import (
    bounds_csv,
    check_four_peg_bound,
    compare_bound,
    four_peg_bound,
    log3_int,
    log3_u,
    lower_bound_exponent,
    midpoint,
    params,
    prove_le,
    upper_bound_u,
)
from pathhanoi.counts import count_f, count_t


def _contains(interval, x) -> bool:
    return bool(interval.a <= x <= interval.b)


def test_three_peg_constants_are_exact():
    p = params(3)
    assert _contains(p.theta, 1) and _contains(p.alpha, 0) and _contains(p.c, 1)
    assert p.theta.delta == 0 and p.alpha.delta == 0 and p.c.delta == 0


def test_delta_and_four_peg_constant():
    p = params(4, 30)
    assert float(p.delta.mid) == pytest.approx(1.74061, abs=1e-5)
    assert abs(float(p.delta.mid) - 11 / 3 ** (2 - (1 / 30) ** (1 / 3))) < 1e-12
    # C_4 = 2 delta / sqrt 2
    assert abs(float(p.c.mid) - 2 * float(p.delta.mid) / 2**0.5) < 1e-12
    assert float(p.theta.mid) == pytest.approx(2**0.5)
    assert float(p.alpha.mid) == 0.5


def test_upper_bound_on_three_pegs_is_exact():
    for n in (1, 5, 100, 300):
        assert upper_bound_u(3, n) == 3**n


def test_four_peg_bound_value():
    assert float(four_peg_bound(1)) == pytest.approx(1.6 * 3**2**0.5, rel=1e-12)


@given(st.integers(4, 8), st.integers(1, 400))
def test_upper_bound_is_rounded_upward(h, n):
    exact = log3_u(h, n, 200)
    with mpmath.workdps(200):
        reference = mpmath.power(3, midpoint(exact))
        # the 50-digit upward-rounded value must not fall below the 200-digit one
        assert upper_bound_u(h, n) >= reference * (1 - mpmath.mpf(10) ** -45)


def test_prove_le_decides_near_misses():
    k = 400
    exact = lambda p: iv.mpf(k)
    assert prove_le(3**k - 1, exact, strict=True).holds is True
    assert prove_le(3**k + 1, exact).holds is False
    assert prove_le(0, exact).holds is True


def test_prove_le_refuses_to_guess(monkeypatch):
    monkeypatch.setattr(bounds, "MAX_DPS", 200)
    v = prove_le(3**50, lambda p: iv.mpf(50))
    assert v.holds is None and v.dps == 200


def test_midpoint_keeps_full_precision():
    x = log3_int(2, 100)
    with mpmath.workdps(100):
        assert abs(midpoint(x) - mpmath.log(2, 3)) < mpmath.mpf(10) ** -90


def test_log3_int():
    assert _contains(log3_int(3**20), 20)
    with pytest.raises(ValueError):
        log3_int(0)


def test_three_pegs_off_by_one():
    reports, rows = compare_bound(3, 100)
    assert all(r.ok for r in reports)
    assert [r.F for r in rows] == [3**n - 1 for n in range(1, 101)]


@pytest.mark.parametrize("h", range(4, 9))
def test_bound_holds(h):
    reports, rows = compare_bound(h, 150)
    for r in reports:
        assert r.ok, f"{r}: {r.violations[:3]}"
    assert all(0 < float(r.ratio) <= 1 for r in rows)


def test_four_peg_checks():
    for r in check_four_peg_bound(500):
        assert r.ok, str(r)
    assert count_t(500) < four_peg_bound(500)
    assert count_f(4, 500) < four_peg_bound(500)


def test_csv_shape():
    _, rows = compare_bound(5, 4)
    lines = bounds_csv(rows).splitlines()
    assert lines[0] == "h,n,logF,logU,ratio"
    assert len(lines) == 5 and lines[1].startswith("5,1,")


def test_lower_bound_exponent_is_informational():
    assert lower_bound_exponent(4, 8) == pytest.approx(4.0)


def test_validation():
    with pytest.raises(ValueError):
        params(2)
    with pytest.raises(ValueError):
        log3_u(4, 0)
    with pytest.raises(ValueError):
        compare_bound(9, 10)
    with pytest.raises(ValueError):
        four_peg_bound(0)
