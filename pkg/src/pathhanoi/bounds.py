"""Closed-form upper bounds on the solvers' move counts, compared soundly.

All real-valued quantities are evaluated with mpmath's interval arithmetic,
so each result is an interval guaranteed to contain the true value.
Comparisons against exact integer counts happen in log base 3 and
only report a verdict the intervals prove. When intervals overlap, the
working precision is doubled and the comparison retried.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import mpmath
from mpmath import iv

from .counts import CheckReport, count_f, count_t

__all__ = [
    "DEFAULT_DPS",
    "BoundParams",
    "params",
    "log3_u",
    "log3_u_tilde",
    "log3_four_peg_bound",
    "log3_int",
    "midpoint",
    "upper_bound_u",
    "four_peg_bound",
    "lower_bound_exponent",
    "Verdict",
    "prove_le",
    "BoundRow",
    "compare_bound",
    "check_four_peg_bound",
    "bounds_csv",
]

DEFAULT_DPS = 50
MAX_DPS = 20000

_lock = threading.RLock()


@contextmanager
def _dps(dps: int) -> Iterator[None]:
    # iv precision is global state
    with _lock:
        saved = iv.prec
        iv.dps = dps
        try:
            yield
        finally:
            iv.prec = saved


@dataclass(frozen=True)
class BoundParams:
    """Constants of ``U(h, n) = C_h * n**alpha_h * 3**(theta_h * n**(1/(h-2)))``.

    Each real constant is an mpmath interval at the precision it was built with.
    """

    h: int
    dps: int
    theta: object
    alpha: object
    delta: object
    c: object
    c_tilde: object


@lru_cache(maxsize=None)
def _delta(dps: int):
    with _dps(dps):
        return iv.mpf(11) / iv.power(3, 2 - _root(iv.mpf(1) / 30, 3))


@lru_cache(maxsize=None)
def params(h: int, dps: int = DEFAULT_DPS) -> BoundParams:
    if h < 3:
        raise ValueError(f"bounds need h >= 3, got {h}")
    delta = _delta(dps)
    with _dps(dps):
        k = h - 2
        theta = _root(iv.mpf(math.factorial(k)), k)
        alpha = iv.mpf(h - 3) / k
        c = k * delta ** (h - 3) / theta
        c_tilde = k / theta
    return BoundParams(h, dps, theta, alpha, delta, c, c_tilde)


def _log3(x):
    return iv.log(x) / iv.log(3)


def _root(x, k: int):
    return x if k == 1 else x ** (iv.mpf(1) / k)


def log3_int(value: int, dps: int = DEFAULT_DPS):
    """Interval enclosing ``log_3(value)`` for a positive integer."""
    if value < 1:
        raise ValueError(f"log of non-positive value {value}")
    with _dps(dps):
        return _log3(iv.mpf(value))


def _log3_shape(h: int, n: int, coef, dps: int):
    p = params(h, dps)
    with _dps(dps):
        nn = iv.mpf(n)
        return _log3(coef) + p.alpha * _log3(nn) + p.theta * _root(nn, h - 2)


def log3_u(h: int, n: int, dps: int = DEFAULT_DPS):
    """Interval enclosing ``log_3 U(h, n)``."""
    _check_hn(h, n)
    return _log3_shape(h, n, params(h, dps).c, dps)


def log3_u_tilde(h: int, n: int, dps: int = DEFAULT_DPS):
    """Interval enclosing ``log_3`` of the sharper bound ``C~_h n**alpha_h 3**(...)``."""
    _check_hn(h, n)
    return _log3_shape(h, n, params(h, dps).c_tilde, dps)


def log3_four_peg_bound(n: int, dps: int = DEFAULT_DPS):
    """Interval enclosing ``log_3(1.6 * sqrt(n) * 3**sqrt(2n))``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    with _dps(dps):
        nn = iv.mpf(n)
        return _log3(iv.mpf(16) / 10) + _log3(nn) / 2 + iv.sqrt(2 * nn)


def _check_hn(h: int, n: int) -> None:
    if h < 3:
        raise ValueError(f"bounds need h >= 3, got {h}")
    if n < 1:
        raise ValueError(f"bounds need n >= 1, got {n}")


def midpoint(interval) -> mpmath.mpf:
    """Midpoint of an interval as a full-precision mpf (``mpf(x.mid)`` goes through a float)."""
    a, b = interval._mpi_
    lo, hi = mpmath.mp.make_mpf(a), mpmath.mp.make_mpf(b)
    with mpmath.workprec(max(lo.context.prec, _bits(a), _bits(b)) + 1):
        return (lo + hi) / 2


def _bits(raw) -> int:
    return max(53, raw[1].bit_length())


def _upper(log3_interval, dps: int) -> mpmath.mpf:
    with _dps(dps):
        value = iv.power(3, log3_interval)
    # take the raw upper endpoint; mpf(value.b) would round to mp.prec
    return mpmath.mp.make_mpf(value._mpi_[1])


def upper_bound_u(h: int, n: int, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """``U(h, n)``, rounded upward: the result is never below the true value."""
    _check_hn(h, n)
    if h == 3:
        # C_3 = 1, alpha_3 = 0, theta_3 = 1: U is the integer 3**n
        exact = 3**n
        with mpmath.workprec(max(53, exact.bit_length())):
            return mpmath.mpf(exact)
    return _upper(log3_u(h, n, dps), dps)


def four_peg_bound(n: int, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """``1.6 * sqrt(n) * 3**sqrt(2n)``, rounded upward."""
    return _upper(log3_four_peg_bound(n, dps), dps)


def lower_bound_exponent(h: int, n: int) -> float:
    """Exponent ``(n (h-2)!)**(1/(h-2))`` of the known ``2**((1+o(1)) x)`` lower bound.

    Informational only: the ``o(1)`` term is unspecified, so nothing can be
    asserted from it.
    """
    return (n * math.factorial(h - 2)) ** (1 / (h - 2))


@dataclass(frozen=True)
class Verdict:
    """Result of a sound comparison. ``holds`` is None if undecided at ``MAX_DPS``."""

    holds: bool | None
    log3_lhs: object
    log3_rhs: object
    dps: int


def prove_le(
    value: int, log3_rhs: Callable[[int], object], strict: bool = False, dps: int = DEFAULT_DPS
) -> Verdict:
    """Decide ``value <= 3**log3_rhs`` (``<`` if ``strict``) with interval arithmetic.

    ``log3_rhs(dps)`` must return an interval enclosing the right-hand side's
    base-3 logarithm at the given precision.
    """
    while True:
        lhs = log3_int(value, dps) if value > 0 else None
        rhs = log3_rhs(dps)
        if lhs is None:
            return Verdict(True, lhs, rhs, dps)
        with _dps(dps):
            if lhs.b < rhs.a or (not strict and lhs.b <= rhs.a):
                return Verdict(True, lhs, rhs, dps)
            if lhs.a > rhs.b or (strict and lhs.a >= rhs.b):
                return Verdict(False, lhs, rhs, dps)
        if dps >= MAX_DPS:
            return Verdict(None, lhs, rhs, dps)
        dps *= 2


@dataclass(frozen=True)
class BoundRow:
    h: int
    n: int
    F: int
    log_f: str
    log_u: str
    ratio: str


def _mid(x, digits: int = 12) -> str:
    return mpmath.nstr(midpoint(x), digits)


def compare_bound(h: int, n_max: int, dps: int = DEFAULT_DPS) -> tuple[list[CheckReport], list[BoundRow]]:
    """Check ``F(h, n) <= U(h, n)`` for ``1 <= n <= n_max``.

    Also checks, for ``5 <= h`` and ``n < h``, the sharper ``F <= C~_h ...``
    bound and that it stays below ``U``; and that ``U`` grows with ``n``.
    For ``h == 4`` adds the Path_4 bound on both four_move and farthest_move
    lengths, and that ``U(4, n)`` dominates that bound.
    """
    if not 3 <= h <= 8:
        raise ValueError(f"compare_bound supports 3 <= h <= 8, got {h}")
    main = CheckReport(f"F({h},n) <= U({h},n)")
    reports = [main]
    rows = []
    prev = None
    monotone = CheckReport(f"U({h},n) strictly increasing in n")
    for n in range(1, n_max + 1):
        F = count_f(h, n)
        v = prove_le(F, lambda p: log3_u(h, n, p), dps=dps)
        main.expect(v.holds is True, f"n={n} F={F} ({'undecided' if v.holds is None else 'violated'})")
        with _dps(v.dps):
            ratio = iv.power(3, log3_int(F, v.dps) - v.log3_rhs) if F else iv.mpf(0)
        rows.append(BoundRow(h, n, F, _mid(v.log3_lhs) if F else "-inf", _mid(v.log3_rhs), _mid(ratio, 8)))
        cur = log3_u(h, n, dps)
        if prev is not None:
            with _dps(dps):
                monotone.expect(bool(prev.b < cur.a), f"n={n}")
        prev = cur
    reports.append(monotone)

    if h >= 5:
        sharp = CheckReport(f"F({h},n) <= C~ n^a 3^(theta n^(1/(h-2))) < U({h},n), n < h")
        for n in range(1, min(h, n_max + 1)):
            ok = prove_le(count_f(h, n), lambda p: log3_u_tilde(h, n, p), dps=dps).holds is True
            below = log3_u_tilde(h, n, dps).b < log3_u(h, n, dps).a
            sharp.expect(ok and bool(below), f"n={n}")
        reports.append(sharp)
    if h == 4:
        reports += check_four_peg_bound(n_max, dps)
    return reports, rows


def check_four_peg_bound(n_max: int, dps: int = DEFAULT_DPS) -> list[CheckReport]:
    """``T(n) < 1.6 sqrt(n) 3**sqrt(2n)`` and friends, for ``1 <= n <= n_max``."""
    four = CheckReport("T(n) < 1.6 sqrt(n) 3^sqrt(2n)")
    far = CheckReport("F(4,n) < 1.6 sqrt(n) 3^sqrt(2n)")
    dominates = CheckReport("U(4,n) > 1.6 sqrt(n) 3^sqrt(2n)")
    for n in range(1, n_max + 1):
        bound = lambda p, n=n: log3_four_peg_bound(n, p)
        four.expect(prove_le(count_t(n), bound, strict=True, dps=dps).holds is True, f"n={n}")
        far.expect(prove_le(count_f(4, n), bound, strict=True, dps=dps).holds is True, f"n={n}")
        dominates.expect(bool(log3_four_peg_bound(n, dps).b < log3_u(4, n, dps).a), f"n={n}")
    return [four, far, dominates]


def bounds_csv(rows: list[BoundRow]) -> str:
    lines = ["h,n,logF,logU,ratio"]
    lines += [f"{r.h},{r.n},{r.log_f},{r.log_u},{r.ratio}" for r in rows]
    return "\n".join(lines) + "\n"
