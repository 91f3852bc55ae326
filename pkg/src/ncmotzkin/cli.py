"""Command-line front end: ``count``, ``expand``, ``verify`` and ``bijection``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or bounds error.
Bounds can be overridden with flags or ``NCMOTZKIN_BOUNDS``, e.g.
``NCMOTZKIN_BOUNDS="partitions=12,paths=14,order=100"``.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from . import bijections as bj
from .contfrac import JFraction, QDBreakdown, SFraction, contract_s_to_j, first_ladder_failure, j_expand, qd_extract, s_expand
from .exactnum import (
    ALPHA_BETA,
    D_WEIGHTS,
    FIB2,
    NAMED_WEIGHTS,
    NC0,
    NC1,
    NC3,
    DyckWeights,
    MotzkinWeights,
    WeightSeq,
    catalan_fib_identity,
    format_rational,
    weight_b,
    weight_d,
    weight_lambda,
)
from .partitions import ResourceBoundError, count_nc
from .paths import Flavor, count_sch_even, parse_path, weighted_sum
from .series import gf_nc2

log = logging.getLogger("ncmotzkin")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Bounds:
    partitions: int = 13
    paths: int = 16
    order: int = 200

    @classmethod
    def from_env(cls, environ=os.environ) -> Bounds:
        b = cls()
        raw = environ.get("NCMOTZKIN_BOUNDS", "")
        for item in filter(None, (s.strip() for s in raw.split(","))):
            key, _, val = item.partition("=")
            if key not in ("partitions", "paths", "order"):
                raise UsageError(f"unknown bound {key!r} in NCMOTZKIN_BOUNDS")
            setattr(b, key, int(val))
        return b


@dataclass
class ReportRow:
    n: int
    values: dict[str, Fraction | int] = field(default_factory=dict)
    status: str = "ok"
    note: str = ""

    def as_json(self) -> dict:
        out: dict = {
            "n": self.n,
            "values": {k: {"num": str(Fraction(v).numerator), "den": str(Fraction(v).denominator)} for k, v in self.values.items()},
            "status": self.status,
        }
        if self.note:
            out["note"] = self.note
        return out


def row_from_json(obj: dict) -> ReportRow:
    values = {k: Fraction(int(v["num"]), int(v["den"])) for k, v in obj["values"].items()}
    return ReportRow(obj["n"], values, obj["status"], obj.get("note", ""))


def emit(rows: Sequence[ReportRow], fmt: str, out=None) -> None:
    out = out or sys.stdout
    labels: list[str] = []
    for r in rows:
        for k in r.values:
            if k not in labels:
                labels.append(k)
    if fmt == "json":
        for r in rows:
            out.write(json.dumps(r.as_json()) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", *labels, "status"])
        for r in rows:
            w.writerow([r.n, *(format_rational(Fraction(r.values[k])) if k in r.values else "" for k in labels), r.status])
        return
    table = [["n", *labels, "status"]]
    for r in rows:
        cells = [str(r.n), *(format_rational(Fraction(r.values[k])) if k in r.values else "" for k in labels), r.status]
        if r.note:
            cells[-1] += f"  {r.note}"
        table.append(cells)
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]) - 1)]
    for row in table:
        out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "  " + row[-1] + "\n")


def parse_range(text: str) -> range:
    """``"5"`` or ``"0..6"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None


def resolve_motzkin(spec: str) -> MotzkinWeights:
    if spec in NAMED_WEIGHTS:
        w = NAMED_WEIGHTS[spec]
        if isinstance(w, MotzkinWeights):
            return w
        # a Dyck system contracted to a Motzkin one
        j = contract_s_to_j(SFraction(w.c))
        return MotzkinWeights(WeightSeq(f"contract({spec}).a", formula=j.a), WeightSeq(f"contract({spec}).beta", formula=j.beta))
    if ";" in spec:
        h, d = spec.split(";", 1)
        return MotzkinWeights(WeightSeq.parse(h), WeightSeq.parse(d))
    raise UsageError(f"unknown Motzkin weights {spec!r}; named: fib2, alpha-beta, nc0, nc1, nc3, or 'h-list;d-list'")


def resolve_dyck(spec: str) -> DyckWeights:
    w = NAMED_WEIGHTS.get(spec)
    if isinstance(w, DyckWeights):
        return w
    if w is not None:
        raise UsageError(f"weights {spec!r} are Motzkin weights, not Dyck weights")
    try:
        return DyckWeights(WeightSeq.parse(spec))
    except ValueError as exc:
        raise UsageError(f"bad Dyck weights {spec!r}: {exc}") from None


def _check_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise UsageError(f"{what} {value} exceeds bound {bound}")


# count ----------------------------------------------------------------------


def cmd_count(args, bounds: Bounds) -> list[ReportRow]:
    rows = []
    for n in parse_range(args.n):
        if n < 0:
            raise UsageError("n must be >= 0")
        if args.kind == "ncp":
            _check_bound(n, bounds.partitions, "partition size")
            value = count_nc(args.k, n, max_n=bounds.partitions)
            rows.append(ReportRow(n, {f"NC_{args.k}": value}))
        elif args.kind == "motzkin":
            w = resolve_motzkin(args.weights or "fib2")
            rows.append(ReportRow(n, {f"Mot{w.name}": weighted_sum(Flavor.MOTZKIN, n, w)}))
        elif args.kind == "dyck":
            w = resolve_dyck(args.weights or "d")
            rows.append(ReportRow(n, {f"Dyck({w.name})": weighted_sum(Flavor.DYCK, n, w)}))
        else:
            _check_bound(2 * n, bounds.paths, "path length")
            rows.append(ReportRow(n, {"SCH_even": count_sch_even(n)}))
    return rows


# expand ---------------------------------------------------------------------


def cmd_expand(args, bounds: Bounds) -> list[ReportRow]:
    _check_bound(args.order, bounds.order, "series order")
    if args.order < 0:
        raise UsageError("order must be >= 0")
    if args.kind == "gf":
        s = gf_nc2(args.order)
    elif args.kind == "s":
        s = s_expand(SFraction(resolve_dyck(args.weights or "d").c), args.order)
    else:
        w = resolve_motzkin(args.weights or "fib2")
        s = j_expand(JFraction(w.horizontal, w.down), args.order)
    if args.invert is None:
        return [ReportRow(n, {"coeff": c}) for n, c in enumerate(s)]
    recovered = qd_extract(s, args.invert)
    return [ReportRow(n, {"c": c}) for n, c in enumerate(recovered)]


# verify ---------------------------------------------------------------------


@dataclass
class Check:
    name: str
    n: int
    values: dict[str, Fraction | int]

    @property
    def ok(self) -> bool:
        vals = list(self.values.values())
        return all(v == vals[0] for v in vals)


def suite_lemma22(max_n: int) -> Iterator[Check]:
    for n in range(0, max_n + 1):
        left = Fraction(0) if n == 0 else weight_d(2 * n - 1)
        yield Check("b_n = d_{2n-1} + d_{2n}", n, {"b": weight_b(n), "d+d": left + weight_d(2 * n)})
        yield Check("lambda_n = d_{2n} d_{2n+1}", n, {"lambda": weight_lambda(n), "d*d": weight_d(2 * n) * weight_d(2 * n + 1)})
        if n >= 1:
            yield Check("1/d_{2n-1} + d_{2n+1} = 3", n, {"lhs": 1 / weight_d(2 * n - 1) + weight_d(2 * n + 1), "3": 3})
    for m in range(0, max_n + 1):
        ok = all(catalan_fib_identity(m, i) for i in range(0, m + 1))
        yield Check("Fibonacci Catalan identity, 0 <= i <= m", m, {"holds": int(ok), "expected": 1})


def suite_prop21(max_n: int) -> Iterator[Check]:
    order = max_n
    for name, c in (("d", weight_d), ("ones", lambda i: Fraction(1)), ("1/(i+1)", lambda i: Fraction(1, i + 1))):
        s = s_expand(SFraction(c), order)
        j = j_expand(contract_s_to_j(SFraction(c)), order)
        for n in range(order + 1):
            yield Check(f"S(x;{name}) = J(x;contract({name}))", n, {"S": s[n], "J": j[n]})
    for n in range(0, max_n + 1):
        yield Check("Dyck_n(d) = Mot_n(b,lambda)", n, {"Dyck(d)": weighted_sum(Flavor.DYCK, n, D_WEIGHTS), "Mot(b,lambda)": weighted_sum(Flavor.MOTZKIN, n, FIB2)})


def suite_thm24(max_n: int) -> Iterator[Check]:
    order = max_n
    g = gf_nc2(order)
    s = s_expand(SFraction(weight_d), order)
    for n in range(order + 1):
        yield Check("S(x;d) = gf", n, {"S(d)": s[n], "gf": g[n]})
    if max_n >= 1:
        recovered = qd_extract(gf_nc2(max_n + 1), max_n)
        for m, c in enumerate(recovered):
            yield Check("recovered S-coefficient = d_m", m, {"recovered": c, "d": weight_d(m)})


def suite_ladder(max_n: int) -> Iterator[Check]:
    if max_n < 1:
        return
    fail = first_ladder_failure(max_n, max(1, 3 * max_n))
    yield Check(f"R_m = d_m/(1 - x R_(m+1)) for -1 <= m <= {max_n}", max_n, {"first failure": -2 if fail is None else fail, "none": -2})


def suite_chain(max_n: int, bounds: Bounds) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        _check_bound(n, bounds.partitions, "partition size")
        yield Check(
            "NC_2(n) = SCH_even(n-1) = Mot_(n-1)(alpha,beta) = Dyck_n(d) = Mot_n(b,lambda)",
            n,
            {
                "NC_2": count_nc(2, n, max_n=bounds.partitions),
                "SCH_even": count_sch_even(n - 1),
                "Mot(alpha,beta)": weighted_sum(Flavor.MOTZKIN, n - 1, ALPHA_BETA),
                "Dyck(d)": weighted_sum(Flavor.DYCK, n, D_WEIGHTS),
                "Mot(b,lambda)": weighted_sum(Flavor.MOTZKIN, n, FIB2),
            },
        )
    for n in range(0, min(max_n, 11) + 1):
        yield Check("NC_0(n) = Mot_n(nc0)", n, {"NC_0": count_nc(0, n), "Mot": weighted_sum(Flavor.MOTZKIN, n, NC0)})
        yield Check("NC_1(n) = Mot_n(nc1)", n, {"NC_1": count_nc(1, n), "Mot": weighted_sum(Flavor.MOTZKIN, n, NC1)})
        yield Check("NC_3(n) = Mot_n(nc3)", n, {"NC_3": count_nc(3, n), "Mot": weighted_sum(Flavor.MOTZKIN, n, NC3)})


SUITES = ("lemma22", "prop21", "thm24", "ladder", "chain")


def run_suite(name: str, max_n: int, bounds: Bounds) -> Iterator[Check]:
    if name == "lemma22":
        yield from suite_lemma22(max_n)
    elif name == "prop21":
        yield from suite_prop21(max_n)
    elif name == "thm24":
        _check_bound(max_n + 1, bounds.order, "series order")
        yield from suite_thm24(max_n)
    elif name == "ladder":
        _check_bound(3 * max_n, bounds.order, "series order")
        yield from suite_ladder(max_n)
    elif name == "chain":
        yield from suite_chain(max_n, bounds)
    else:
        raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args, bounds: Bounds) -> tuple[list[ReportRow], int]:
    names = SUITES if args.suite == "all" else (args.suite,)
    rows: list[ReportRow] = []
    summary: dict[str, list[int]] = {}
    for name in names:
        for chk in run_suite(name, args.max_n, bounds):
            rng = summary.setdefault(f"{name}: {chk.name}", [chk.n, chk.n])
            rng[0], rng[1] = min(rng[0], chk.n), max(rng[1], chk.n)
            if not chk.ok:
                rows.append(ReportRow(chk.n, chk.values, "mismatch", f"{name}: {chk.name}"))
                for label, r in summary.items():
                    log.info("checked %s over %d..%d", label, *r)
                return rows, EXIT_MISMATCH
            if args.rows:
                rows.append(ReportRow(chk.n, chk.values, "ok", f"{name}: {chk.name}"))
    for label, (lo, hi) in summary.items():
        print(f"ok  {label}  [{lo}..{hi}]", file=sys.stderr)
    return rows, EXIT_OK


# bijection ------------------------------------------------------------------


def cmd_bijection(args, bounds: Bounds) -> int:
    word = args.path
    if args.map in ("contract", "strip"):
        p = parse_path(word, Flavor.DYCK)
        _check_bound(p.length, bounds.paths, "path length")
        if args.map == "contract":
            m = bj.contract_dyck(p)
            back = bj.expand_motzkin(m)
        else:
            m = bj.strip_contract(p)
            back = bj.strip_expand(m)
        print(f"{p} -> {m} -> {back}")
        print(f"weight under d: {format_rational(bj.labeled_weight(m, D_WEIGHTS))}")
        return EXIT_OK if back == p else EXIT_MISMATCH
    if args.map == "schroder":
        s = parse_path(word, Flavor.SCHRODER)
        _check_bound(s.length, bounds.paths, "path length")
        c = bj.from_schroder(s)
        back = bj.to_schroder(c)
        print(f"{s} -> {c} -> {back}")
        return EXIT_OK if back == s else EXIT_MISMATCH
    s = parse_path(word, Flavor.SCHRODER)
    _check_bound(s.length, bounds.paths, "path length")
    t = bj.odd_h_to_peaks(s)
    back = bj.peaks_to_odd_h(t)
    print(f"{s} -> {t} -> {back}")
    return EXIT_OK if back == s else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncmotzkin", description="2-distant noncrossing partitions and weighted lattice paths, exactly.")
    ap.add_argument("--max-partition-n", type=int, help="largest partition size (default 13)")
    ap.add_argument("--max-path-length", type=int, help="largest enumerated path length (default 16)")
    ap.add_argument("--max-order", type=int, help="largest series order (default 200)")
    ap.add_argument("-v", "--verbose", action="store_true")
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json")
    g.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    fmt.set_defaults(fmt="table")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[fmt], help="sequence values per n")
    c.add_argument("kind", choices=["ncp", "motzkin", "dyck", "schroder-even"])
    c.add_argument("--k", type=int, default=2, help="distance for ncp (default 2)")
    c.add_argument("--weights", help="named weights (fib2, d, alpha-beta, nc0, nc1, nc3) or inline '1,2,3...'")
    c.add_argument("--n", default="0..6", help="N or LO..HI (default 0..6)")

    e = sub.add_parser("expand", parents=[fmt], help="series coefficients of a continued fraction or the closed form")
    e.add_argument("kind", choices=["s", "j", "gf"])
    e.add_argument("--weights", help="S: Dyck weights (d, ones, '1,2...'); J: Motzkin weights (fib2, ... or 'h;d')")
    e.add_argument("--order", type=int, default=10)
    e.add_argument("--invert", type=int, metavar="M", help="recover M S-fraction coefficients instead")

    v = sub.add_parser("verify", parents=[fmt], help="run identity suites")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--rows", action="store_true", help="also print every passing check")

    b = sub.add_parser("bijection", help="round-trip one path through a correspondence")
    b.add_argument("map", choices=["contract", "strip", "schroder", "peaks"])
    b.add_argument("path", help="step word, e.g. UUDD or UDHH")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        bounds = Bounds.from_env()
        for attr, flag in (("partitions", "max_partition_n"), ("paths", "max_path_length"), ("order", "max_order")):
            if getattr(args, flag) is not None:
                setattr(bounds, attr, getattr(args, flag))
        if args.command == "count":
            emit(cmd_count(args, bounds), args.fmt)
            return EXIT_OK
        if args.command == "expand":
            emit(cmd_expand(args, bounds), args.fmt)
            return EXIT_OK
        if args.command == "verify":
            if args.max_n < 0:
                raise UsageError("--max-n must be >= 0")
            rows, code = cmd_verify(args, bounds)
            if rows:
                emit(rows, args.fmt)
            if code == EXIT_MISMATCH:
                print(f"mismatch: {rows[-1].note} at n={rows[-1].n}", file=sys.stderr)
            return code
        return cmd_bijection(args, bounds)
    except QDBreakdown as exc:
        print(f"error: {exc} (depth reached: {exc.depth})", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, ResourceBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
