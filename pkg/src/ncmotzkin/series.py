"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = ["TruncatedSeries", "gf_nc2", "gf_radical", "geometric"]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})``.

    Binary operations truncate to the smaller of the two orders; nothing is
    ever promoted to a higher order implicitly.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int | None = None) -> TruncatedSeries:
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> TruncatedSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s += a[i] * b[k - i]
            out.append(s)
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return TruncatedSeries(tuple(c / Fraction(other) for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.div(other)

    def __rtruediv__(self, other) -> TruncatedSeries:
        return TruncatedSeries.constant(other, self.order).div(self)

    def div(self, other: TruncatedSeries) -> TruncatedSeries:
        """Quotient ``q`` with ``q * other == self`` to the common order."""
        b = other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("divisor series has zero constant term")
        n = min(self.order, other.order)
        inv0 = 1 / b[0]
        q: list[Fraction] = []
        for k in range(n + 1):
            s = self.coeffs[k]
            for i in range(1, k + 1):
                if b[i]:
                    s -= b[i] * q[k - i]
            q.append(s * inv0)
        return TruncatedSeries(tuple(q))

    def sqrt(self) -> TruncatedSeries:
        """Square root with constant term +1; requires ``self[0] == 1``."""
        a = self.coeffs
        if a[0] != 1:
            raise ValueError(f"series square root needs constant term 1, got {a[0]}")
        s = [Fraction(1)]
        for k in range(1, self.order + 1):
            acc = a[k]
            for i in range(1, k):
                acc -= s[i] * s[k - i]
            s.append(acc / 2)
        return TruncatedSeries(tuple(s))

    def mulx(self) -> TruncatedSeries:
        """Multiply by x; the order grows by one."""
        return TruncatedSeries((Fraction(0),) + self.coeffs)

    def divx(self) -> TruncatedSeries:
        """Divide by x; requires zero constant term and lowers the order by one."""
        if self.coeffs[0] != 0:
            raise ValueError("divx needs a zero constant term")
        if self.order == 0:
            raise ValueError("divx of an order-0 series leaves no known coefficients")
        return TruncatedSeries(self.coeffs[1:])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(x^{self.order + 1})"


def geometric(ratio: Scalar, order: int) -> TruncatedSeries:
    """``1/(1 - ratio*x)``."""
    r = Fraction(ratio)
    return TruncatedSeries(tuple(r**k for k in range(order + 1)))


def gf_nc2(order: int) -> TruncatedSeries:
    """``3/2 - sqrt((1-5x)/(1-x))/2``, whose coefficients count 2-distant noncrossing partitions."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    ratio = TruncatedSeries.from_coeffs([1, -5], order).div(TruncatedSeries.from_coeffs([1, -1], order))
    return Fraction(3, 2) - ratio.sqrt() * Fraction(1, 2)


def gf_radical(order: int) -> TruncatedSeries:
    """``sqrt((1-x)(1-5x)) = sqrt(1 - 6x + 5x^2)``."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return TruncatedSeries.from_coeffs([1, -6, 5], order).sqrt()
