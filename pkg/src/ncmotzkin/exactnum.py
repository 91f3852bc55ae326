"""Exact rationals, Fibonacci numbers and the named weight sequences.

All weights are exposed as total functions of a nonnegative index so that
identities can be checked at any depth without running off a table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "to_rational",
    "format_rational",
    "fib",
    "weight_b",
    "weight_lambda",
    "weight_d",
    "weight_alpha",
    "weight_beta",
    "catalan_fib_identity",
    "WeightSeq",
    "MotzkinWeights",
    "DyckWeights",
    "FIB2",
    "D_WEIGHTS",
    "ALPHA_BETA",
    "NC0",
    "NC1",
    "NC3",
    "ONES",
    "NAMED_WEIGHTS",
]


def to_rational(value: int | str | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a normalized Fraction."""
    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise ValueError("empty rational literal")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def _fib_pair(m: int) -> tuple[int, int]:
    # (F_m, F_{m+1}) by fast doubling
    if m == 0:
        return 0, 1
    a, b = _fib_pair(m >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if m & 1:
        return d, c + d
    return c, d


def fib(m: int) -> int:
    """Fibonacci number ``F_m`` with ``F_0 = 0``, ``F_1 = 1`` and ``F_{-1} = 1``.

    Only the single backward extension ``F_{-1}`` is supported; smaller
    indices raise ``ValueError``.
    """
    if m < -1:
        raise ValueError(f"fib is defined for m >= -1, got {m}")
    if m == -1:
        return 1
    return _fib_pair(m)[0]


def weight_b(n: int) -> Fraction:
    """Horizontal-step weight: 1 at n=0, else ``3 - 1/(F_{2n-1} F_{2n-3})``."""
    if n < 0:
        raise ValueError(f"weight index must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    return 3 - Fraction(1, fib(2 * n - 1) * fib(2 * n - 3))


def weight_lambda(n: int) -> Fraction:
    """Down-step weight: 1 at n=0, else ``1 + 1/F_{2n-1}^2``."""
    if n < 0:
        raise ValueError(f"weight index must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    return 1 + Fraction(1, fib(2 * n - 1) ** 2)


def weight_d(m: int) -> Fraction:
    """S-fraction coefficients 1, 1, 1, 2, 1/2, 5/2, 2/5, 13/5, ...

    ``d_0 = 1``; for n >= 1, ``d_{2n-1} = F_{2n-1}/F_{2n-3}`` and
    ``d_{2n} = 1/d_{2n-1}``.
    """
    if m < 0:
        raise ValueError(f"weight index must be >= 0, got {m}")
    if m == 0:
        return Fraction(1)
    if m % 2 == 1:
        n = (m + 1) // 2
        return Fraction(fib(2 * n - 1), fib(2 * n - 3))
    n = m // 2
    return Fraction(fib(2 * n - 3), fib(2 * n - 1))


def weight_alpha(n: int) -> Fraction:
    """``d_{2n} + d_{2n+1}``; equals 2 at n=0 and 3 afterwards."""
    if n < 0:
        raise ValueError(f"weight index must be >= 0, got {n}")
    return weight_d(2 * n) + weight_d(2 * n + 1)


def weight_beta(n: int) -> Fraction:
    """``d_{2n+1} d_{2n+2}``; identically 1."""
    if n < 0:
        raise ValueError(f"weight index must be >= 0, got {n}")
    return weight_d(2 * n + 1) * weight_d(2 * n + 2)


def catalan_fib_identity(m: int, i: int) -> bool:
    """Check ``F_m^2 - F_{m+i} F_{m-i} == (-1)^(m-i) F_i^2`` exactly."""
    if i < 0 or m - i < -1 or m + i < -1:
        raise ValueError(f"indices out of range for the Catalan identity: m={m}, i={i}")
    sign = -1 if (m - i) % 2 else 1
    return fib(m) ** 2 - fib(m + i) * fib(m - i) == sign * fib(i) ** 2


@dataclass(frozen=True)
class WeightSeq:
    """A total index -> Fraction map, either formula-backed or eventually constant.

    ``prefix`` holds explicit leading values; past the prefix the last value
    repeats (when ``formula`` is None).
    """

    name: str
    formula: Callable[[int], Fraction] | None = None
    prefix: tuple[Fraction, ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.formula is None and not self.prefix:
            raise ValueError("WeightSeq needs a formula or a nonempty prefix")

    @classmethod
    def constant(cls, value: int | Fraction, name: str | None = None) -> WeightSeq:
        v = Fraction(value)
        return cls(name or f"({format_rational(v)},...)", prefix=(v,))

    @classmethod
    def eventually_constant(cls, values: Sequence[int | str | Fraction], name: str | None = None) -> WeightSeq:
        vals = tuple(to_rational(v) for v in values)
        label = name or "(" + ",".join(format_rational(v) for v in vals) + ",...)"
        return cls(label, prefix=vals)

    @classmethod
    def parse(cls, text: str) -> WeightSeq:
        """Parse ``"1,2,3,3..."`` (trailing ``...`` marks the repeating tail)."""
        body = text.strip()
        if body.endswith("..."):
            body = body[:-3]
        parts = [p for p in body.split(",") if p.strip()]
        if not parts:
            raise ValueError(f"no values in weight sequence {text!r}")
        return cls.eventually_constant(parts, name=text.strip())

    def __call__(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError(f"weight index must be >= 0, got {i}")
        if self.formula is not None:
            hit = self._cache.get(i)
            if hit is None:
                hit = self._cache[i] = Fraction(self.formula(i))
            return hit
        if i < len(self.prefix):
            return self.prefix[i]
        return self.prefix[-1]

    def take(self, count: int) -> list[Fraction]:
        return [self(i) for i in range(count)]


@dataclass(frozen=True)
class MotzkinWeights:
    """Weights for Motzkin paths: ``horizontal(i)`` for H at height i, ``down(i)`` for D ending at height i."""

    horizontal: WeightSeq
    down: WeightSeq

    @property
    def name(self) -> str:
        return f"({self.horizontal.name}; {self.down.name})"


@dataclass(frozen=True)
class DyckWeights:
    """Weights for Dyck paths: ``c(i)`` for a down step ending at height i; ``c(-1) == 0``."""

    seq: WeightSeq

    def c(self, i: int) -> Fraction:
        if i == -1:
            return Fraction(0)
        return self.seq(i)

    @property
    def name(self) -> str:
        return self.seq.name


ONES = WeightSeq.constant(1, name="(1,1,...)")

FIB2 = MotzkinWeights(WeightSeq("b", formula=weight_b), WeightSeq("lambda", formula=weight_lambda))
D_WEIGHTS = DyckWeights(WeightSeq("d", formula=weight_d))
ALPHA_BETA = MotzkinWeights(
    WeightSeq.eventually_constant([2, 3], name="(2,3,3,...)"),
    WeightSeq.constant(1, name="(1,1,...)"),
)
NC0 = MotzkinWeights(ONES, ONES)
NC1 = MotzkinWeights(WeightSeq.eventually_constant([1, 2], name="(1,2,2,...)"), ONES)
NC3 = MotzkinWeights(
    WeightSeq.eventually_constant([1, 2, 3], name="(1,2,3,3,...)"),
    WeightSeq.eventually_constant([1, 2], name="(1,2,2,...)"),
)

NAMED_WEIGHTS: dict[str, MotzkinWeights | DyckWeights] = {
    "fib2": FIB2,
    "d": D_WEIGHTS,
    "alpha-beta": ALPHA_BETA,
    "nc0": NC0,
    "nc1": NC1,
    "nc3": NC3,
    "ones": DyckWeights(ONES),
}
