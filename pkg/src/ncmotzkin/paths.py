"""Motzkin, Dyck and Schröder paths: enumeration, weights and transfer-method sums.

The height of a step is the y-coordinate where it ends; every weight lookup
goes through that convention.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactnum import DyckWeights, MotzkinWeights

__all__ = [
    "Step",
    "Flavor",
    "LatticePath",
    "parse_path",
    "enumerate_paths",
    "path_weight",
    "weighted_sum",
    "is_sch_even",
    "has_even_peak",
    "count_sch_even",
    "count_no_even_peaks",
]


class Step(enum.Enum):
    U = "U"
    D = "D"
    H = "H"
    HH = "HH"

    @property
    def dx(self) -> int:
        return 2 if self is Step.HH else 1

    @property
    def dy(self) -> int:
        return {Step.U: 1, Step.D: -1}.get(self, 0)


class Flavor(enum.Enum):
    MOTZKIN = "motzkin"
    DYCK = "dyck"
    SCHRODER = "schroder"


_ALPHABET = {
    Flavor.MOTZKIN: (Step.U, Step.D, Step.H),
    Flavor.DYCK: (Step.U, Step.D),
    Flavor.SCHRODER: (Step.U, Step.D, Step.HH),
}


@dataclass(frozen=True)
class LatticePath:
    flavor: Flavor
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        allowed = _ALPHABET[self.flavor]
        y = 0
        for pos, step in enumerate(self.steps):
            if step not in allowed:
                raise ValueError(f"step {step.value} at index {pos} not allowed in a {self.flavor.value} path")
            y += step.dy
            if y < 0:
                raise ValueError(f"path goes below the x-axis at step {pos}")
        if y != 0:
            raise ValueError(f"path ends at height {y}, not 0")

    @classmethod
    def _trusted(cls, flavor: Flavor, steps: tuple[Step, ...]) -> LatticePath:
        # for steps produced by the enumerator, which only ever builds valid paths
        obj = object.__new__(cls)
        object.__setattr__(obj, "flavor", flavor)
        object.__setattr__(obj, "steps", steps)
        return obj

    @property
    def length(self) -> int:
        """Total x-displacement (H² counts 2)."""
        return sum(s.dx for s in self.steps)

    def heights(self) -> list[int]:
        """Ending height of each step."""
        out, y = [], 0
        for s in self.steps:
            y += s.dy
            out.append(y)
        return out

    def positions(self) -> list[int]:
        """Starting x-coordinate of each step."""
        out, x = [], 0
        for s in self.steps:
            out.append(x)
            x += s.dx
        return out

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps) or "(empty)"


def parse_path(text: str, flavor: Flavor | str) -> LatticePath:
    """Read a word like ``"UHD"``; in Schröder paths ``HH``, ``H2`` and ``H²`` all mean one double step."""
    flavor = Flavor(flavor)
    text = text.replace(" ", "").replace("H²", "HH").replace("H2", "HH").upper()
    if text in ("", "(EMPTY)", "-"):
        return LatticePath(flavor, ())
    steps: list[Step] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "U":
            steps.append(Step.U)
        elif ch == "D":
            steps.append(Step.D)
        elif ch == "H" and flavor is Flavor.SCHRODER:
            if text[i : i + 2] != "HH":
                raise ValueError(f"unpaired H at index {i} in Schröder word {text!r}")
            steps.append(Step.HH)
            i += 1
        elif ch == "H":
            steps.append(Step.H)
        else:
            raise ValueError(f"unknown step {ch!r} in {text!r}")
        i += 1
    return LatticePath(flavor, tuple(steps))


def enumerate_paths(flavor: Flavor | str, n: int, *, even_hh_only: bool = False) -> Iterator[LatticePath]:
    """Every path of the flavor, depth-first with step priority U < D < H (< H²).

    ``n`` is the Motzkin length, or the semilength for Dyck and Schröder
    paths (which have x-length 2n). ``even_hh_only`` prunes H² steps at odd
    height, generating SCH_even directly.
    """
    flavor = Flavor(flavor)
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    total = n if flavor is Flavor.MOTZKIN else 2 * n
    alphabet = _ALPHABET[flavor]
    prefix: list[Step] = []

    def rec(x: int, y: int) -> Iterator[LatticePath]:
        if x == total:
            if y == 0:
                yield LatticePath._trusted(flavor, tuple(prefix))
            return
        for step in alphabet:
            nx, ny = x + step.dx, y + step.dy
            if nx > total or ny < 0 or ny > total - nx:
                continue
            if even_hh_only and step is Step.HH and y % 2:
                continue
            prefix.append(step)
            yield from rec(nx, ny)
            prefix.pop()

    yield from rec(0, 0)


def path_weight(path: LatticePath, w: MotzkinWeights | DyckWeights | None = None) -> Fraction:
    """Product of step weights; Up steps and all Schröder steps weigh 1."""
    if path.flavor is Flavor.SCHRODER:
        return Fraction(1)
    if path.flavor is Flavor.MOTZKIN and not isinstance(w, MotzkinWeights):
        raise TypeError("Motzkin paths need MotzkinWeights")
    if path.flavor is Flavor.DYCK and not isinstance(w, DyckWeights):
        raise TypeError("Dyck paths need DyckWeights")
    total = Fraction(1)
    for step, h in zip(path.steps, path.heights()):
        if step is Step.H:
            total *= w.horizontal(h)
        elif step is Step.D:
            total *= w.down(h) if isinstance(w, MotzkinWeights) else w.c(h)
    return total


def weighted_sum(flavor: Flavor | str, n: int, w: MotzkinWeights | DyckWeights | None = None) -> Fraction:
    """Sum of path weights by dynamic programming over (x, height).

    Dyck and Schröder ``n`` is the semilength. Schröder paths are counted
    unweighted.
    """
    flavor = Flavor(flavor)
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if flavor is Flavor.MOTZKIN and not isinstance(w, MotzkinWeights):
        raise TypeError("Motzkin sums need MotzkinWeights")
    if flavor is Flavor.DYCK and not isinstance(w, DyckWeights):
        raise TypeError("Dyck sums need DyckWeights")
    total = n if flavor is Flavor.MOTZKIN else 2 * n
    # layers[x][h] = weighted number of prefixes ending at (x, h)
    layers: list[dict[int, Fraction]] = [dict() for _ in range(total + 1)]
    layers[0][0] = Fraction(1)
    for x in range(total):
        for h, acc in layers[x].items():
            if not acc:
                continue
            remaining = total - x
            if h + 1 <= remaining - 1:
                layers[x + 1][h + 1] = layers[x + 1].get(h + 1, 0) + acc
            if h >= 1:
                if flavor is Flavor.MOTZKIN:
                    f = w.down(h - 1)
                elif flavor is Flavor.DYCK:
                    f = w.c(h - 1)
                else:
                    f = 1
                layers[x + 1][h - 1] = layers[x + 1].get(h - 1, 0) + acc * f
            if flavor is Flavor.MOTZKIN and h <= remaining - 1:
                layers[x + 1][h] = layers[x + 1].get(h, 0) + acc * w.horizontal(h)
            if flavor is Flavor.SCHRODER and remaining >= 2 and h <= remaining - 2:
                layers[x + 2][h] = layers[x + 2].get(h, 0) + acc
    return Fraction(layers[total].get(0, 0))


def is_sch_even(path: LatticePath) -> bool:
    """True iff every H² of a Schröder path sits at even height."""
    if path.flavor is not Flavor.SCHRODER:
        raise ValueError("is_sch_even needs a Schröder path")
    return all(h % 2 == 0 for s, h in zip(path.steps, path.heights()) if s is Step.HH)


def has_even_peak(path: LatticePath) -> bool:
    """True iff some UD factor has its apex at even height."""
    hs = path.heights()
    return any(
        path.steps[i] is Step.U and path.steps[i + 1] is Step.D and hs[i] % 2 == 0
        for i in range(len(path.steps) - 1)
    )


def count_sch_even(n: int) -> int:
    """#SCH_even(n) by enumerating the paths themselves (no transfer sums)."""
    return sum(1 for p in enumerate_paths(Flavor.SCHRODER, n, even_hh_only=True) if is_sch_even(p))


def count_no_even_peaks(n: int) -> int:
    """Number of Schröder paths of length 2n with no peak apex at even height."""
    return sum(1 for p in enumerate_paths(Flavor.SCHRODER, n) if not has_even_peak(p))
