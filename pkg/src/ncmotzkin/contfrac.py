"""S- and J-fractions over truncated series, the even contraction, and coefficient recovery."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import weight_d
from .series import TruncatedSeries, gf_nc2, gf_radical

__all__ = [
    "SFraction",
    "JFraction",
    "QDBreakdown",
    "s_expand",
    "j_expand",
    "contract_s_to_j",
    "qd_extract",
    "r_ladder",
    "first_ladder_failure",
    "r_ladder_check",
]

log = logging.getLogger(__name__)

Coeffs = Callable[[int], Fraction]


@dataclass(frozen=True)
class SFraction:
    """``1/(1 - c_0 x/(1 - c_1 x/(1 - ...)))``."""

    c: Coeffs


@dataclass(frozen=True)
class JFraction:
    """``1/(1 - a_0 x - beta_0 x^2/(1 - a_1 x - beta_1 x^2/(...)))``."""

    a: Coeffs
    beta: Coeffs


class QDBreakdown(ArithmeticError):
    """Raised when a zero pivot stops coefficient recovery; ``depth`` is the number recovered."""

    def __init__(self, depth: int, message: str) -> None:
        super().__init__(message)
        self.depth = depth


def s_expand(f: SFraction, order: int, depth: int | None = None) -> TruncatedSeries:
    """Expand an S-fraction to ``order``, folding bottom-up from ``depth`` (default ``order + 1``).

    Level k first touches the coefficient of x^(k+1), so any depth above
    ``order`` gives the same truncation.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if depth is None:
        depth = order + 1
    one = TruncatedSeries.constant(1, order)
    tail = one
    for k in range(depth - 1, -1, -1):
        tail = one.div(one - (tail * Fraction(f.c(k))).mulx().truncate(order))
    return tail


def j_expand(f: JFraction, order: int, depth: int | None = None) -> TruncatedSeries:
    """Expand a J-fraction to ``order``, folding bottom-up from ``depth`` (default ``order + 1``)."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if depth is None:
        depth = order + 1
    one = TruncatedSeries.constant(1, order)
    x = TruncatedSeries.x(order)
    tail = one
    for k in range(depth - 1, -1, -1):
        denom = one - x * Fraction(f.a(k)) - (tail * Fraction(f.beta(k))).mulx().mulx().truncate(order)
        tail = one.div(denom)
    return tail


def contract_s_to_j(f: SFraction) -> JFraction:
    """Even contraction: ``a_n = c_{2n-1} + c_{2n}``, ``beta_n = c_{2n} c_{2n+1}``, with ``c_{-1} = 0``."""

    def a(n: int) -> Fraction:
        left = Fraction(0) if n == 0 else Fraction(f.c(2 * n - 1))
        return left + Fraction(f.c(2 * n))

    def beta(n: int) -> Fraction:
        return Fraction(f.c(2 * n)) * Fraction(f.c(2 * n + 1))

    return JFraction(a, beta)


def qd_extract(s: TruncatedSeries, m: int) -> list[Fraction]:
    """Recover ``c_0 .. c_{m-1}`` with ``S(x; c) == s`` through order m, by repeated inversion.

    Each level peels ``c_k`` as the linear coefficient of ``1 - 1/f`` and
    continues with ``(1 - 1/f) / (c_k x)``. A remainder that vanishes to the
    known order ends the fraction (all further coefficients are 0); a zero
    pivot with a nonzero remainder raises ``QDBreakdown``.
    """
    if s[0] != 1:
        raise ValueError(f"series must have constant term 1, got {s[0]}")
    if m < 0 or m > s.order:
        raise ValueError(f"can recover at most {s.order} coefficients from an order-{s.order} series, asked {m}")
    out: list[Fraction] = []
    f = s
    while len(out) < m:
        rem = 1 - TruncatedSeries.constant(1, f.order).div(f)
        if all(c == 0 for c in rem):
            out.extend([Fraction(0)] * (m - len(out)))
            break
        pivot = rem[1]
        if pivot == 0:
            raise QDBreakdown(len(out), f"zero pivot at depth {len(out)} with nonzero remainder")
        out.append(pivot)
        f = rem.divx() / pivot
    return out


def _d_ext(m: int) -> Fraction:
    # ladder convention: d_{-1} = 1
    return Fraction(1) if m == -1 else weight_d(m)


def r_ladder(max_index: int, order: int) -> dict[int, TruncatedSeries]:
    """The series ``R_m`` for ``-1 <= m <= max_index + 1``, all truncated at ``order``.

    ``R_{-1}`` is the 2-distant noncrossing generating function,
    ``R_{2n+1} = d_{2n+1} + (1 - 3x - sqrt((1-x)(1-5x)))/(2x)`` and
    ``R_{2n} = d_{2n}/(1 - x R_{2n+1})``.
    """
    numerator = TruncatedSeries.from_coeffs([1, -3], order + 1) - gf_radical(order + 1)
    # zero constant term is checked by divx
    quad = numerator.divx() / 2
    one = TruncatedSeries.constant(1, order)
    top = max_index + 1
    if top % 2 == 0:
        top += 1
    R: dict[int, TruncatedSeries] = {-1: gf_nc2(order)}
    for m in range(1, top + 1, 2):
        R[m] = quad + _d_ext(m)
    for m in range(0, top, 2):
        R[m] = (one * _d_ext(m)).div(one - R[m + 1].mulx().truncate(order))
    return {m: R[m] for m in sorted(R) if m <= max_index + 1}


def first_ladder_failure(max_index: int, order: int) -> int | None:
    """Smallest m in ``-1..max_index`` with ``R_m (1 - x R_{m+1}) != d_m``, or None."""
    if max_index < 1 or order < 1:
        raise ValueError("ladder check needs max_index >= 1 and order >= 1")
    R = r_ladder(max_index, order)
    for m in range(-1, max_index + 1):
        lhs = R[m] * (1 - R[m + 1].mulx().truncate(order))
        if lhs != TruncatedSeries.constant(_d_ext(m), order):
            log.warning("ladder identity fails at m=%d", m)
            return m
        if m >= 0 and R[m][0] != weight_d(m):
            log.warning("R_%d has constant term %s, expected %s", m, R[m][0], weight_d(m))
            return m
    return None


def r_ladder_check(max_index: int, order: int) -> bool:
    """True iff ``R_m = d_m/(1 - x R_{m+1})`` holds to ``order`` for ``-1 <= m <= max_index``."""
    return first_ladder_failure(max_index, order) is None
