"""Command-line front-end.

Subcommands: nd (rational counts), ed (elliptic fixed-j counts plus the
ZT invariant), strata (shape enumeration and survivor classification),
series (vanishing sequence and root-sum relation of a net).  Output is
deterministic in all three formats; JSON carries every count as a decimal
string so consumers with 53-bit floats cannot corrupt it.

Exit codes: 0 success, 2 usage or input error, 3 corrupt cache file,
4 resource guard, 5 mathematical precondition (rank-deficient net).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .counts import (
    CacheError,
    JClass,
    RecursionTable,
    elliptic_count,
    load_table,
    rational_count,
    save_table,
    zt_invariant,
)
from .series import (
    RankDeficientError,
    SeriesFormatError,
    root_sum_relation,
    series_from_json,
    vanishing_sequence,
)
from .strata import (
    DEFAULT_CLASS_CEILING,
    POSITIVE_PARTITION_NOTE,
    ResourceGuardError,
    deformation_bound,
    dimension,
    enumerate_shapes,
)

__all__ = ["RunConfig", "main"]

ND_DEGREE_CEILING = 200

_J_BY_SELECTOR = {"generic": JClass.GENERIC, "0": JClass.J_ZERO, "1728": JClass.J_1728}


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, normalized from argv."""

    command: str
    output: str = "plain"
    cache: str | None = None
    max_d: int = 0
    d: int = 0
    j_selector: str = "all"
    max_extra: int = 2
    full: bool = False
    include_circuits: bool = False
    survivors_only: bool = False
    ceiling: int = DEFAULT_CLASS_CEILING
    series_file: str | None = None
    point: str | None = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecount",
        description=(
            "Exact counts of rational and fixed-j elliptic plane curves, "
            "stratum-shape enumeration, and vanishing-order checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(sp):
        sp.add_argument(
            "--format", choices=("plain", "json", "csv"), default="plain", dest="output"
        )

    nd = sub.add_parser("nd", help="rational curve counts for d = 1..max")
    nd.add_argument("--max", type=int, required=True, dest="max_d")
    nd.add_argument("--cache", metavar="PATH", help="persistent count table")
    with_format(nd)

    ed = sub.add_parser("ed", help="elliptic fixed-j counts and the ZT invariant")
    ed.add_argument("--d", type=int, required=True)
    ed.add_argument(
        "--j", choices=("generic", "0", "1728", "all"), default="all", dest="j_selector"
    )
    ed.add_argument("--cache", metavar="PATH", help="persistent count table")
    with_format(ed)

    st = sub.add_parser("strata", help="enumerate and classify stratum shapes")
    st.add_argument("--d", type=int, required=True)
    st.add_argument("--max-extra", type=int, default=2, dest="max_extra")
    st.add_argument(
        "--full",
        action="store_true",
        help="materialize labelled marked classes instead of collapsed profiles",
    )
    st.add_argument("--include-circuits", action="store_true", dest="include_circuits")
    st.add_argument("--survivors-only", action="store_true", dest="survivors_only")
    st.add_argument("--ceiling", type=int, default=DEFAULT_CLASS_CEILING)
    with_format(st)

    se = sub.add_parser(
        "series", help="vanishing sequence and root-sum relation of a net"
    )
    se.add_argument("file", help="series JSON document")
    where = se.add_mutually_exclusive_group()
    where.add_argument(
        "--at-infinity", action="store_true", help="evaluate at infinity (default)"
    )
    where.add_argument("--at", metavar="P", help="evaluate at the exact rational P")
    with_format(se)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        output=getattr(args, "output", "plain"),
        cache=getattr(args, "cache", None),
        max_d=getattr(args, "max_d", 0),
        d=getattr(args, "d", 0),
        j_selector=getattr(args, "j_selector", "all"),
        max_extra=getattr(args, "max_extra", 2),
        full=getattr(args, "full", False),
        include_circuits=getattr(args, "include_circuits", False),
        survivors_only=getattr(args, "survivors_only", False),
        ceiling=getattr(args, "ceiling", DEFAULT_CLASS_CEILING),
        series_file=getattr(args, "file", None),
        point=getattr(args, "at", None),
    )


def _table_for(cfg: RunConfig) -> RecursionTable:
    if cfg.cache and Path(cfg.cache).exists():
        return load_table(cfg.cache)
    return RecursionTable()


def _save_if_requested(cfg: RunConfig, table: RecursionTable) -> None:
    if cfg.cache:
        save_table(table, cfg.cache)


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_json(doc) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _cmd_nd(cfg: RunConfig) -> int:
    if not 1 <= cfg.max_d <= ND_DEGREE_CEILING:
        raise ValueError(
            f"--max must be between 1 and {ND_DEGREE_CEILING}, got {cfg.max_d}"
        )
    table = _table_for(cfg)
    rational_count(cfg.max_d, table)
    _save_if_requested(cfg, table)
    rows = [(d, table[d]) for d in range(1, cfg.max_d + 1)]
    if cfg.output == "csv":
        _emit_csv(["d", "N"], [[str(d), str(v)] for d, v in rows])
    elif cfg.output == "json":
        _emit_json(
            {"d_max": cfg.max_d, "values": [{"d": d, "N": str(v)} for d, v in rows]}
        )
    else:
        wd = max(len(str(d)) for d, _ in rows)
        wv = max(len(str(v)) for _, v in rows)
        for d, v in rows:
            print(f"{d:>{wd}} {v:>{wv}}")
    return 0


def _cmd_ed(cfg: RunConfig) -> int:
    table = _table_for(cfg)
    classes = (
        list(_J_BY_SELECTOR.values())
        if cfg.j_selector == "all"
        else [_J_BY_SELECTOR[cfg.j_selector]]
    )
    values = {j: elliptic_count(cfg.d, j, table) for j in classes}
    zt = zt_invariant(cfg.d, table)
    _save_if_requested(cfg, table)
    if cfg.output == "json":
        if cfg.j_selector == "all":
            _emit_json(
                {
                    "d": cfg.d,
                    "E": {j.value: str(v) for j, v in values.items()},
                    "ZT": str(zt),
                }
            )
        else:
            (j,) = classes
            _emit_json({"d": cfg.d, "j": j.value, "E": str(values[j])})
    elif cfg.output == "csv":
        _emit_csv(
            ["d", "j", "E", "ZT"],
            [[str(cfg.d), j.value, str(values[j]), str(zt)] for j in classes],
        )
    else:
        print(f"d = {cfg.d}")
        for j in classes:
            print(f"E[{j.value}] = {values[j]}")
        print(f"ZT = {zt}")
    return 0


def _shape_row(shape_class, d: int) -> dict:
    shape = shape_class.shape
    dim = dimension(shape, d)
    bound = deformation_bound(shape, d)
    survivor = bound >= 6 * d - 2
    note = None
    if (
        shape_class.kind == "tree"
        and shape_class.e == 0
        and shape_class.k == 2
        and all(w > 0 for w in shape.weights[1:])
    ):
        note = POSITIVE_PARTITION_NOTE
    return {
        "kind": shape_class.kind,
        "shape": shape.canonical_key,
        "e": shape_class.e,
        "k": shape_class.k,
        "dim": dim,
        "bound": bound,
        "survivor": survivor,
        "note": note,
        "multiplicity": shape_class.multiplicity,
    }


def _cmd_strata(cfg: RunConfig) -> int:
    shapes = enumerate_shapes(
        cfg.d,
        cfg.max_extra,
        collapsed=not cfg.full,
        include_circuits=cfg.include_circuits,
        ceiling=cfg.ceiling,
    )
    rows = [_shape_row(sc, cfg.d) for sc in shapes]
    marked_total = sum(sc.multiplicity for sc in shapes)
    single_tail = (
        sum(r["multiplicity"] for r in rows if r["kind"] == "tree" and r["e"] == 0 and r["k"] == 1)
        if cfg.max_extra >= 1
        else None
    )
    expected_tail = 2 ** (3 * cfg.d - 1) if cfg.max_extra >= 1 else None
    survivors = sum(1 for r in rows if r["survivor"])
    shown = [r for r in rows if r["survivor"]] if cfg.survivors_only else rows

    if cfg.output == "csv":
        _emit_csv(
            ["kind", "shape", "e", "k", "dim", "bound", "survivor", "note", "multiplicity"],
            [
                [
                    r["kind"],
                    r["shape"],
                    str(r["e"]),
                    str(r["k"]),
                    str(r["dim"]),
                    str(r["bound"]),
                    "true" if r["survivor"] else "false",
                    r["note"] or "",
                    str(r["multiplicity"]),
                ]
                for r in shown
            ],
        )
    elif cfg.output == "json":
        _emit_json(
            {
                "d": cfg.d,
                "max_extra": cfg.max_extra,
                "mode": "full" if cfg.full else "collapsed",
                "include_circuits": cfg.include_circuits,
                "survivors_only": cfg.survivors_only,
                "shapes": [
                    {**r, "multiplicity": str(r["multiplicity"])} for r in shown
                ],
                "summary": {
                    "classes": len(rows),
                    "listed": len(shown),
                    "marked_total": str(marked_total),
                    "single_tail_family": None if single_tail is None else str(single_tail),
                    "single_tail_expected": None if expected_tail is None else str(expected_tail),
                    "survivors": survivors,
                },
            }
        )
    else:
        cols = ["kind", "e", "k", "dim", "bound", "survivor", "multiplicity", "shape", "note"]
        cells = [
            [
                r["kind"],
                str(r["e"]),
                str(r["k"]),
                str(r["dim"]),
                str(r["bound"]),
                "yes" if r["survivor"] else "no",
                str(r["multiplicity"]),
                r["shape"],
                r["note"] or "-",
            ]
            for r in shown
        ]
        if cells:
            widths = [
                max(len(cols[i]), max(len(row[i]) for row in cells))
                for i in range(len(cols))
            ]
            print("  ".join(cols[i].ljust(widths[i]) for i in range(len(cols))).rstrip())
            for row in cells:
                print("  ".join(row[i].ljust(widths[i]) for i in range(len(cols))).rstrip())
        print(f"classes: {len(rows)} (listed: {len(shown)})")
        print(f"marked total: {marked_total}")
        if single_tail is not None:
            print(
                f"single-tail family: {single_tail} "
                f"(expected 2^{3 * cfg.d - 1} = {expected_tail})"
            )
        print(f"survivors: {survivors}")
    return 0


def _cmd_series(cfg: RunConfig) -> int:
    text = Path(cfg.series_file).read_text(encoding="utf-8")
    series = series_from_json(text)
    if cfg.point is None:
        at_infinity, point, point_label = True, None, "infinity"
    else:
        try:
            point = Fraction(cfg.point)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"--at expects an exact rational, got {cfg.point!r}") from None
        at_infinity, point_label = False, str(point)
    seq = vanishing_sequence(series, at_infinity=at_infinity, point=point)
    relation = root_sum_relation(series)
    k_text = None if relation is None else str(relation.k)
    degenerate = relation is not None and relation.degenerate
    criterion = relation is not None
    if cfg.output == "json":
        _emit_json(
            {
                "degree": series.degree,
                "point": point_label,
                "orders": list(seq.orders),
                "K": k_text,
                "degenerate": degenerate,
                "criterion": criterion,
            }
        )
    elif cfg.output == "csv":
        _emit_csv(
            ["degree", "point", "a0", "a1", "a2", "K", "degenerate", "criterion"],
            [
                [
                    str(series.degree),
                    point_label,
                    str(seq.a0),
                    str(seq.a1),
                    str(seq.a2),
                    k_text or "",
                    "true" if degenerate else "false",
                    "true" if criterion else "false",
                ]
            ],
        )
    else:
        print(f"degree = {series.degree}")
        print(f"point = {point_label}")
        print(f"orders = ({seq.a0}, {seq.a1}, {seq.a2})")
        print(f"K = {k_text if k_text is not None else 'absent'}")
        print(f"degenerate = {'true' if degenerate else 'false'}")
        print(f"criterion = {'true' if criterion else 'false'}")
    return 0


_COMMANDS = {"nd": _cmd_nd, "ed": _cmd_ed, "strata": _cmd_strata, "series": _cmd_series}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    cfg = _config_from(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except CacheError as exc:
        print(f"error: cache: {exc}", file=sys.stderr)
        return 3
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except RankDeficientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except (SeriesFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
