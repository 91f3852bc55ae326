"""Step-rewriting correspondences between Dyck, Motzkin and Schröder paths.

Motzkin paths carry per-H decorations so that each map is a genuine
bijection; forgetting the decorations gives the weighted identities.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactnum import DyckWeights
from .paths import Flavor, LatticePath, Step, enumerate_paths, has_even_peak, is_sch_even

__all__ = [
    "Label",
    "Choice",
    "LabeledMotzkinPath",
    "ChoiceMotzkinPath",
    "contract_dyck",
    "expand_motzkin",
    "strip_contract",
    "strip_expand",
    "labeled_weight",
    "enumerate_labeled",
    "enumerate_choice_paths",
    "to_schroder",
    "from_schroder",
    "odd_h_to_peaks",
    "peaks_to_odd_h",
]


class Label(enum.Enum):
    FROM_UD = "UD"
    FROM_DU = "DU"


class Choice(enum.Enum):
    AS_UD = "UD"
    AS_DU = "DU"
    AS_HH = "HH"


def _h_heights(path: LatticePath) -> list[int]:
    return [h for s, h in zip(path.steps, path.heights()) if s is Step.H]


@dataclass(frozen=True)
class LabeledMotzkinPath:
    """A Motzkin path whose H steps remember which Dyck pair they came from.

    ``offset`` is the Dyck height of the Motzkin floor: 0 for plain pairing,
    1 after stripping the first and last steps. With offset 0 an H at
    height 0 cannot come from DU.
    """

    path: LatticePath
    labels: tuple[Label, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        if self.path.flavor is not Flavor.MOTZKIN:
            raise ValueError("LabeledMotzkinPath needs a Motzkin path")
        hs = _h_heights(self.path)
        if len(hs) != len(self.labels):
            raise ValueError(f"{len(self.labels)} labels for {len(hs)} horizontal steps")
        if self.offset not in (0, 1):
            raise ValueError(f"offset must be 0 or 1, got {self.offset}")
        if self.offset == 0:
            for j, (h, lab) in enumerate(zip(hs, self.labels)):
                if h == 0 and lab is Label.FROM_DU:
                    raise ValueError(f"horizontal step {j} at height 0 cannot be labeled DU")

    def __str__(self) -> str:
        it = iter(self.labels)
        return "".join(f"H[{next(it).value}]" if s is Step.H else s.value for s in self.path.steps) or "(empty)"


@dataclass(frozen=True)
class ChoiceMotzkinPath:
    """A Motzkin path with a replacement choice per H step; at height 0 only UD or HH."""

    path: LatticePath
    choices: tuple[Choice, ...]

    def __post_init__(self) -> None:
        if self.path.flavor is not Flavor.MOTZKIN:
            raise ValueError("ChoiceMotzkinPath needs a Motzkin path")
        hs = _h_heights(self.path)
        if len(hs) != len(self.choices):
            raise ValueError(f"{len(self.choices)} choices for {len(hs)} horizontal steps")
        for j, (h, ch) in enumerate(zip(hs, self.choices)):
            if h == 0 and ch is Choice.AS_DU:
                raise ValueError(f"horizontal step {j} at height 0 cannot become DU")

    def __str__(self) -> str:
        it = iter(self.choices)
        return "".join(f"H[{next(it).value}]" if s is Step.H else s.value for s in self.path.steps) or "(empty)"


_PAIR_TO_STEP = {
    (Step.U, Step.U): (Step.U, None),
    (Step.D, Step.D): (Step.D, None),
    (Step.U, Step.D): (Step.H, Label.FROM_UD),
    (Step.D, Step.U): (Step.H, Label.FROM_DU),
}


def _pair_up(steps: tuple[Step, ...]) -> tuple[list[Step], list[Label]]:
    out: list[Step] = []
    labels: list[Label] = []
    for i in range(0, len(steps), 2):
        step, lab = _PAIR_TO_STEP[(steps[i], steps[i + 1])]
        out.append(step)
        if lab is not None:
            labels.append(lab)
    return out, labels


def _unpair(m: LabeledMotzkinPath) -> list[Step]:
    out: list[Step] = []
    it = iter(m.labels)
    for s in m.path.steps:
        if s is Step.U:
            out += [Step.U, Step.U]
        elif s is Step.D:
            out += [Step.D, Step.D]
        elif next(it) is Label.FROM_UD:
            out += [Step.U, Step.D]
        else:
            out += [Step.D, Step.U]
    return out


def contract_dyck(p: LatticePath) -> LabeledMotzkinPath:
    """Read a Dyck path two steps at a time: UU->U, DD->D, UD->H, DU->H."""
    if p.flavor is not Flavor.DYCK:
        raise ValueError("contract_dyck needs a Dyck path")
    steps, labels = _pair_up(p.steps)
    return LabeledMotzkinPath(LatticePath(Flavor.MOTZKIN, tuple(steps)), tuple(labels))


def expand_motzkin(m: LabeledMotzkinPath) -> LatticePath:
    """Inverse of :func:`contract_dyck`."""
    if m.offset != 0:
        raise ValueError("expand_motzkin needs an offset-0 labeled path; use strip_expand")
    return LatticePath(Flavor.DYCK, tuple(_unpair(m)))


def strip_contract(p: LatticePath) -> LabeledMotzkinPath:
    """Drop the first and last steps of a nonempty Dyck path, then pair up the interior."""
    if p.flavor is not Flavor.DYCK:
        raise ValueError("strip_contract needs a Dyck path")
    if not p.steps:
        raise ValueError("strip_contract needs a nonempty Dyck path")
    steps, labels = _pair_up(p.steps[1:-1])
    # LatticePath validation enforces that the interior stays on or above height 1
    return LabeledMotzkinPath(LatticePath(Flavor.MOTZKIN, tuple(steps)), tuple(labels), offset=1)


def strip_expand(m: LabeledMotzkinPath) -> LatticePath:
    """Inverse of :func:`strip_contract`."""
    if m.offset != 1:
        raise ValueError("strip_expand needs an offset-1 labeled path")
    return LatticePath(Flavor.DYCK, (Step.U, *_unpair(m), Step.D))


def labeled_weight(m: LabeledMotzkinPath, w: DyckWeights) -> Fraction:
    """Weight the preimage Dyck path would carry, read off the labeled Motzkin path.

    At Motzkin height i the Dyck height is ``2i + offset``: D contributes
    ``c(2i+s) c(2i+s+1)``, H from UD ``c(2i+s)``, H from DU ``c(2i+s-1)``.
    For offset 1 the stripped last step adds the missing ``c(0)``.
    """
    s = m.offset
    total = Fraction(1)
    it = iter(m.labels)
    for step, h in zip(m.path.steps, m.path.heights()):
        base = 2 * h + s
        if step is Step.D:
            total *= w.c(base) * w.c(base + 1)
        elif step is Step.H:
            total *= w.c(base) if next(it) is Label.FROM_UD else w.c(base - 1)
    if s == 1:
        total *= w.c(0)
    return total


def enumerate_labeled(n: int, offset: int = 0) -> Iterator[LabeledMotzkinPath]:
    """Every valid labeled Motzkin path of length n."""
    for p in enumerate_paths(Flavor.MOTZKIN, n):
        hs = _h_heights(p)
        options = [
            (Label.FROM_UD,) if (h == 0 and offset == 0) else (Label.FROM_UD, Label.FROM_DU) for h in hs
        ]
        for labels in itertools.product(*options):
            yield LabeledMotzkinPath(p, labels, offset)


def enumerate_choice_paths(n: int) -> Iterator[ChoiceMotzkinPath]:
    """Every choice-decorated Motzkin path of length n (2 options at height 0, 3 above)."""
    for p in enumerate_paths(Flavor.MOTZKIN, n):
        options = [
            (Choice.AS_UD, Choice.AS_HH) if h == 0 else (Choice.AS_UD, Choice.AS_DU, Choice.AS_HH)
            for h in _h_heights(p)
        ]
        for choices in itertools.product(*options):
            yield ChoiceMotzkinPath(p, choices)


def to_schroder(c: ChoiceMotzkinPath) -> LatticePath:
    """U->UU, D->DD and each H to UD, DU or H² as chosen; lands in SCH_even."""
    out: list[Step] = []
    it = iter(c.choices)
    for s in c.path.steps:
        if s is Step.U:
            out += [Step.U, Step.U]
        elif s is Step.D:
            out += [Step.D, Step.D]
        else:
            ch = next(it)
            out += {Choice.AS_UD: [Step.U, Step.D], Choice.AS_DU: [Step.D, Step.U], Choice.AS_HH: [Step.HH]}[ch]
    return LatticePath(Flavor.SCHRODER, tuple(out))


def from_schroder(s: LatticePath) -> ChoiceMotzkinPath:
    """Read an SCH_even path in windows of two x-units starting at even x."""
    if s.flavor is not Flavor.SCHRODER:
        raise ValueError("from_schroder needs a Schröder path")
    if not is_sch_even(s):
        raise ValueError(f"{s} has a horizontal step at odd height")
    steps: list[Step] = []
    choices: list[Choice] = []
    i, x = 0, 0
    seq = s.steps
    while i < len(seq):
        first = seq[i]
        if first is Step.HH:
            steps.append(Step.H)
            choices.append(Choice.AS_HH)
            i += 1
        else:
            if i + 1 >= len(seq) or seq[i + 1] is Step.HH:
                raise ValueError(f"window at x={x} is split by a double step in {s}")
            pair = (first, seq[i + 1])
            if pair == (Step.U, Step.U):
                steps.append(Step.U)
            elif pair == (Step.D, Step.D):
                steps.append(Step.D)
            else:
                steps.append(Step.H)
                choices.append(Choice.AS_UD if pair == (Step.U, Step.D) else Choice.AS_DU)
            i += 2
        x += 2
    return ChoiceMotzkinPath(LatticePath(Flavor.MOTZKIN, tuple(steps)), tuple(choices))


def odd_h_to_peaks(s: LatticePath) -> LatticePath:
    """Turn every H² at odd height into a peak UD; input must have no even-apex peak."""
    if s.flavor is not Flavor.SCHRODER:
        raise ValueError("odd_h_to_peaks needs a Schröder path")
    if has_even_peak(s):
        raise ValueError(f"{s} has a peak at even height")
    out: list[Step] = []
    for step, h in zip(s.steps, s.heights()):
        if step is Step.HH and h % 2 == 1:
            out += [Step.U, Step.D]
        else:
            out.append(step)
    return LatticePath(Flavor.SCHRODER, tuple(out))


def peaks_to_odd_h(s: LatticePath) -> LatticePath:
    """Inverse of :func:`odd_h_to_peaks`: every even-apex peak becomes an H² one level down."""
    if s.flavor is not Flavor.SCHRODER:
        raise ValueError("peaks_to_odd_h needs a Schröder path")
    if not is_sch_even(s):
        raise ValueError(f"{s} has a horizontal step at odd height")
    hs = s.heights()
    out: list[Step] = []
    i = 0
    while i < len(s.steps):
        if (
            i + 1 < len(s.steps)
            and s.steps[i] is Step.U
            and s.steps[i + 1] is Step.D
            and hs[i] % 2 == 0
        ):
            out.append(Step.HH)
            i += 2
        else:
            out.append(s.steps[i])
            i += 1
    return LatticePath(Flavor.SCHRODER, tuple(out))
