"""Command line front end for coefficient queries and verification.

Exit codes: 0 success, 1 failed verification, 2 malformed key, 3 absent
channel, 4 I/O error. Labels use the "a,b" syntax with half-integers written
as fractions ("3/2"); JSON output carries doubled integers for exactness.
All output is deterministic, and cache hits render byte-identically to cold
computations because both paths render from the same canonical payload.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import cache
from .errors import ChannelAbsent, MalformedKey
from .exactnum import ZERO, SqrtSum
from .fullcg import FullKey, full
from .labels import (
    Channel,
    EntryShift,
    HalfInt,
    IrrepLabel,
    LOWERING_SHIFTS,
    PARTS_14,
    RAISING_SHIFTS,
    So4Label,
    branching,
    decompose_with_14,
    dim,
)
from .reduced import ReducedKey, reduced, reduced_aux, table_rows
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_MALFORMED = 2
EXIT_ABSENT = 3
EXIT_IO = 4

AUX = "aux"


def _parse_channel(text: str):
    """Parse "+1,+1", "-1/2,+1/2", "0,0#1", "0,0#2", or "aux"."""
    s = text.strip()
    if s == AUX:
        return AUX
    copy = 1
    if "#" in s:
        s, _, copy_text = s.partition("#")
        if copy_text not in ("1", "2"):
            raise MalformedKey(f"channel copy must be 1 or 2, got {text!r}")
        copy = int(copy_text)
    parts = s.split(",")
    if len(parts) != 2:
        raise MalformedKey(f"expected 'dj1,dj2', got {text!r}")
    dj1, dj2 = HalfInt.parse(parts[0]), HalfInt.parse(parts[1])
    shift = (dj1.twice, dj2.twice)
    if copy == 2 and shift != (0, 0):
        raise MalformedKey(f"only the diagonal channel has a second copy: {text!r}")
    if shift != (0, 0) and shift not in RAISING_SHIFTS and shift not in LOWERING_SHIFTS:
        raise MalformedKey(f"not a coupling shift: {text!r}")
    return Channel(dj1, dj2, copy)


def _parse_pair(text: str, what: str) -> tuple[HalfInt, HalfInt]:
    parts = text.split(",")
    if len(parts) != 2:
        raise MalformedKey(f"expected '{what}' as 'a,b', got {text!r}")
    return HalfInt.parse(parts[0]), HalfInt.parse(parts[1])


def _channel_of(source: IrrepLabel, args):
    if args.channel is not None:
        return _parse_channel(args.channel)
    if args.target is None:
        raise MalformedKey("need either --target or --channel")
    target = IrrepLabel.parse(args.target)
    dj1 = target.j1 - source.j1
    dj2 = target.j2 - source.j2
    shift = (dj1.twice, dj2.twice)
    if shift != (0, 0) and shift not in RAISING_SHIFTS and shift not in LOWERING_SHIFTS:
        raise MalformedKey(
            f"{source} and {target} are not related by a coupling shift")
    return Channel(dj1, dj2, args.copy)


def _parse_part(text: str) -> So4Label:
    part = So4Label.parse(text)
    if part not in PARTS_14:
        raise MalformedKey(f"not an SO(4) block of the 14-dim rep: {text!r}")
    return part


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_eval(args) -> int:
    source = IrrepLabel.parse(args.source)
    channel = _channel_of(source, args)
    source_so4 = So4Label.parse(args.source_so4)
    part = _parse_part(args.part)
    dj1, dj2 = _parse_pair(args.entry, "entry shift")
    entry = EntryShift(dj1, dj2, part)

    magnetic = [args.m, args.part_m]
    if channel is AUX:
        key = ReducedKey(source=source, channel=Channel.of(0, 0, 1),
                         source_so4=source_so4, entry=entry)
        value = reduced_aux(key)
    elif any(v is not None for v in magnetic):
        if any(v is None for v in magnetic):
            raise MalformedKey("full evaluation needs both --m and --part-m")
        value = _eval_full(args, source, channel, source_so4, entry)
    else:
        key = ReducedKey(source=source, channel=channel,
                         source_so4=source_so4, entry=entry)
        value = reduced(key)
    print(value)
    print(float(value))
    return EXIT_OK


def _eval_full(args, source: IrrepLabel, channel: Channel,
               source_so4: So4Label, entry: EntryShift) -> SqrtSum:
    target = IrrepLabel(source.j1 + channel.dj1, source.j2 + channel.dj2)
    m1, m2 = _parse_pair(args.m, "m1,m2")
    pm1, pm2 = _parse_pair(args.part_m, "pm1,pm2")
    if args.target_m is not None:
        tm1, tm2 = _parse_pair(args.target_m, "tm1,tm2")
    else:
        tm1, tm2 = m1 + pm1, m2 + pm2
    tj1 = source_so4.j1 + entry.dj1
    tj2 = source_so4.j2 + entry.dj2
    if tj1.twice < 0 or tj2.twice < 0:
        return ZERO
    key = FullKey(target=target, target_so4=So4Label(tj1, tj2),
                  tm1=tm1, tm2=tm2, copy=channel.copy,
                  source=source, source_so4=source_so4,
                  m1=m1, m2=m2, part=entry.part,
                  pm1=pm1, pm2=pm2)
    return full(key)


def _table_payload(source: IrrepLabel, channel) -> dict:
    rows = []
    if channel is AUX:
        from .reduced import aux_table_rows
        listed = aux_table_rows(source)
    else:
        listed = table_rows(source, channel)
    for row in listed:
        rows.append({
            "s": list(row.source_so4.twice),
            "entry": [row.entry.dj1.twice, row.entry.dj2.twice],
            "part": list(row.entry.part.twice),
            "t": list(row.target_so4.twice) if row.target_so4 else None,
            "value": row.value.to_json_dict(),
        })
    return {
        "source": str(source),
        "channel": AUX if channel is AUX else str(channel),
        "rows": rows,
    }


def _render_table(payload: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"schema": cache.SCHEMA, "kind": "table"}
        doc.update(payload)
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s_tj1", "s_tj2", "entry_tdj1", "entry_tdj2",
                     "part_tj1", "part_tj2", "t_tj1", "t_tj2", "value"])
    for row in payload["rows"]:
        t = row["t"] if row["t"] is not None else ["", ""]
        value = SqrtSum.from_json_dict(row["value"])
        writer.writerow(row["s"] + row["entry"] + row["part"] + list(t)
                        + [str(value)])
    return buf.getvalue()


def _cached_payload(args, key: str, build) -> dict:
    if not args.no_cache:
        payload = cache.load(key)
        if payload is not None:
            return payload
    payload = build()
    if not args.no_cache:
        cache.store(key, payload)
    return payload


def cmd_table(args) -> int:
    source = IrrepLabel.parse(args.source)
    channel = _parse_channel(args.channel)
    channel_text = AUX if channel is AUX else str(channel)
    key = cache.cache_key("table", str(source), channel_text)
    payload = _cached_payload(args, key,
                              lambda: _table_payload(source, channel))
    _emit(_render_table(payload, args.format), args.out)
    return EXIT_OK


def _decompose_payload(source: IrrepLabel) -> dict:
    entries = [{
        "target": list(entry.target.twice),
        "multiplicity": entry.multiplicity,
        "dim": dim(entry.target),
    } for entry in decompose_with_14(source)]
    return {
        "source": str(source),
        "entries": entries,
        "total_dim": sum(e["multiplicity"] * e["dim"] for e in entries),
    }


def _render_decompose(payload: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"schema": cache.SCHEMA, "kind": "decomposition"}
        doc.update(payload)
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["target_tj1", "target_tj2", "multiplicity", "dim"])
    for e in payload["entries"]:
        writer.writerow(e["target"] + [e["multiplicity"], e["dim"]])
    return buf.getvalue()


def cmd_decompose(args) -> int:
    source = IrrepLabel.parse(args.label)
    key = cache.cache_key("decompose", str(source))
    payload = _cached_payload(args, key, lambda: _decompose_payload(source))
    _emit(_render_decompose(payload, args.format), args.out)
    return EXIT_OK


def _branch_payload(label: IrrepLabel) -> dict:
    blocks = [{"so4": list(s.twice), "so3_dim": s.so3_dim}
              for s in branching(label)]
    return {"label": str(label), "blocks": blocks, "dim": dim(label)}


def _render_branch(payload: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"schema": cache.SCHEMA, "kind": "branching"}
        doc.update(payload)
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["tj1", "tj2", "so3_dim"])
    for b in payload["blocks"]:
        writer.writerow(b["so4"] + [b["so3_dim"]])
    return buf.getvalue()


def cmd_branch(args) -> int:
    label = IrrepLabel.parse(args.label)
    key = cache.cache_key("branch", str(label))
    payload = _cached_payload(args, key, lambda: _branch_payload(label))
    _emit(_render_branch(payload, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    source = IrrepLabel.parse(args.source) if args.source else None
    results = run_suite(args.suite, max_twice_j=args.max_twice_j,
                        tol=args.tol, source=source)
    passed = all(r.passed for r in results)
    report = {
        "schema": cache.SCHEMA,
        "kind": "verify_report",
        "suite": args.suite,
        "max_twice_j": args.max_twice_j,
        "tol": args.tol,
        "checks": [r.to_json_dict() for r in results],
        "pass": passed,
    }
    _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
    if not passed:
        first = next(r for r in results if not r.passed)
        print(f"FAIL {first.name}: {first.counterexample}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def _add_output_flags(sub) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="write to file instead of stdout")
    sub.add_argument("--no-cache", action="store_true",
                     help="skip the SO5CG_CACHE directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="so5cg",
        description="Exact Spin(5) coupling coefficients with the 14-dim rep.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate one coefficient")
    p_eval.add_argument("--source", required=True, help="source irrep 'j1,j2'")
    p_eval.add_argument("--target", default=None, help="target irrep 'j1,j2'")
    p_eval.add_argument("--channel", default=None,
                        help="channel shift, e.g. '+1,+1', '0,0#2', 'aux'")
    p_eval.add_argument("--copy", type=int, choices=(1, 2), default=1,
                        help="diagonal channel copy when using --target")
    p_eval.add_argument("--source-so4", required=True, dest="source_so4",
                        help="source SO(4) block 'j1,j2'")
    p_eval.add_argument("--entry", required=True,
                        help="entry shift 'dj1,dj2', e.g. '+1,+1'")
    p_eval.add_argument("--part", required=True,
                        help="SO(4) block of the 14-dim rep: '1,1', '1/2,1/2', '0,0'")
    p_eval.add_argument("--m", default=None,
                        help="source magnetic pair 'm1,m2' (full coefficient)")
    p_eval.add_argument("--part-m", default=None, dest="part_m",
                        help="14-dim magnetic pair 'pm1,pm2' (full coefficient)")
    p_eval.add_argument("--target-m", default=None, dest="target_m",
                        help="target magnetic pair; defaults to m + part-m")
    p_eval.set_defaults(fn=cmd_eval)

    p_table = subs.add_parser("table", help="export one channel's reduced table")
    p_table.add_argument("--source", required=True)
    p_table.add_argument("--channel", required=True)
    _add_output_flags(p_table)
    p_table.set_defaults(fn=cmd_table)

    p_dec = subs.add_parser("decompose",
                            help="decompose source x 14 into irreps")
    p_dec.add_argument("label", help="source irrep 'j1,j2'")
    _add_output_flags(p_dec)
    p_dec.set_defaults(fn=cmd_decompose)

    p_br = subs.add_parser("branch", help="SO(4) branching of one irrep")
    p_br.add_argument("label", help="irrep 'j1,j2'")
    _add_output_flags(p_br)
    p_br.set_defaults(fn=cmd_branch)

    p_ver = subs.add_parser("verify", help="run an invariant suite")
    p_ver.add_argument("suite", choices=("orthogonality", "mixing", "symmetry",
                                         "su2", "oracle", "all"))
    p_ver.add_argument("--max-twice-j", type=int, default=8, dest="max_twice_j")
    p_ver.add_argument("--tol", type=float, default=1e-9)
    p_ver.add_argument("--source", default=None,
                       help="restrict the oracle suite to one source")
    p_ver.add_argument("--out", default=None)
    p_ver.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except MalformedKey as exc:
        print(f"malformed key: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ChannelAbsent as exc:
        print(f"channel absent: {exc}", file=sys.stderr)
        return EXIT_ABSENT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
