"""Command-line interface: ``legrack <subcommand> ...``.

Exit status is 0 on success, 1 when the input is well formed but fails a
domain check (invalid rack, map that is not Legendrian, golden mismatch),
and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from pathlib import Path

from . import repro
from .builtins import BUILTINS
from .coloring import ColoringReport, Distinction, count_colorings, distinguish
from .errors import LegrackError
from .formats import SHORTHAND_HELP, atomic_write, dump_json, parse_map, read_diagram, read_rack, read_table
from .front import classical_invariants
from .legendrian import (CensusEntry, LegendrianRack, census, check_axioms,
                         enumerate_legendrian_maps)
from .perms import map_to_string
from .racks import FiniteRack, ValidationReport, enumerate_racks, is_quandle, validate_rack
from .ts_rack import TSRackSpec, search_result


class DomainFailure(Exception):
    """Command ran but the answer is a failure (exit status 1)."""

    def __init__(self, payload, message):
        super().__init__(message)
        self.payload = payload


def _matrix_text(table) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in table)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# Each command returns (json_payload, text_rendering, csv_rows).

def cmd_validate(args):
    table = read_table(args.rack) if Path(args.rack).exists() else read_rack(args.rack).table
    report = validate_rack(table)
    data = report.to_dict()
    lines = [f"n = {report.n}: {'ok' if report.ok else 'not a rack'}"]
    lines += [f"axiom ({v.axiom}) fails at {v.witness}: {v.detail}" for v in report.violations]
    rows = [["axiom", "witness", "detail"]] + [[v.axiom, " ".join(map(str, v.witness)), v.detail]
                                               for v in report.violations]
    if not report.ok:
        raise DomainFailure((data, "\n".join(lines), rows), "table is not a rack")
    return data, "\n".join(lines), rows


def _rack_entry(r: FiniteRack) -> dict:
    return {"n": r.n, "table": [list(row) for row in r.table], "quandle": is_quandle(r)}


def cmd_enum_racks(args):
    racks = enumerate_racks(args.n, args.max_order)
    data = {"n": args.n, "count": len(racks), "racks": [_rack_entry(r) for r in racks]}
    text = f"{len(racks)} racks of order {args.n}\n\n" + "\n\n".join(
        _matrix_text(r.table) + ("\n(quandle)" if is_quandle(r) else "") for r in racks)
    rows = [["index", "quandle", "table"]] + [
        [i, int(is_quandle(r)), ";".join(",".join(map(str, row)) for row in r.table)]
        for i, r in enumerate(racks)]
    return data, text, rows


def cmd_leg_maps(args):
    rack = read_rack(args.rack)
    maps = enumerate_legendrian_maps(rack)
    entry = CensusEntry(rack, tuple(maps))
    data = entry.to_dict()
    text = _matrix_text(rack.table) + "\nf = " + (", ".join(entry.map_strings()) or "-")
    rows = [["f"]] + [[s] for s in entry.map_strings()]
    return data, text, rows


def cmd_census(args):
    entries = census(args.n, args.max_order)
    nonempty = sum(1 for e in entries if e.maps)
    data = {"n": args.n, "classes": len(entries), "nonempty": nonempty,
            "entries": [e.to_dict() for e in entries]}
    blocks = [f"{len(entries)} racks of order {args.n}, {nonempty} with Legendrian maps"]
    for e in entries:
        blocks.append(_matrix_text(e.rack.table) + "\nf = " + (", ".join(e.map_strings()) or "-"))
    rows = [["index", "quandle", "table", "legendrian_maps"]] + [
        [i, int(e.quandle), ";".join(",".join(map(str, row)) for row in e.rack.table),
         " ".join(e.map_strings())] for i, e in enumerate(entries)]
    return data, "\n\n".join(blocks), rows


def cmd_ts_search(args):
    spec = TSRackSpec(args.n, args.t, args.s)
    data = search_result(spec)
    sols = ", ".join(f"({a},{b})" for a, b in data["solutions"]) or "none"
    text = (f"{data['rack']}\naffine Legendrian maps (a,b): {sols}\n"
            f"active conditions: {', '.join(data['active_conditions']) or 'none'}")
    rows = [["a", "b"]] + data["solutions"]
    return data, text, rows


def _structure(args, rack) -> LegendrianRack:
    f = parse_map(args.map, rack.n)
    report = check_axioms(rack, f)
    if report.ok:
        return LegendrianRack(rack, f)
    if getattr(args, "unchecked", False):
        return LegendrianRack.unchecked(rack, f)
    msg = "; ".join(a.detail for a in report.failures)
    raise LegrackError(f"{map_to_string(f)} is not a Legendrian map: {msg}")


def cmd_count(args):
    d = read_diagram(args.diagram)
    rack = read_rack(args.rack)
    lr = _structure(args, rack)
    report = count_colorings(d, lr, witnesses=args.witnesses)
    data = report.to_dict()
    text = f"{d.name}: {report.count} colorings"
    rows = [["count", report.count]]
    if report.witnesses is not None:
        text += "".join("\n  " + " ".join(f"{i}={v}" for i, v in enumerate(w))
                        for w in report.witnesses)
        rows = [[f"arc{i}" for i in range(len(d.arcs))]] + [list(w) for w in report.witnesses]
    return data, text, rows


def cmd_distinguish(args):
    d1, d2 = read_diagram(args.d1), read_diagram(args.d2)
    if args.census is not None:
        if args.census.isdigit():
            entries = [e for k in range(1, int(args.census) + 1)
                       for e in census(k, args.max_order)]
        else:
            data = json.loads(Path(args.census).read_text(encoding="utf-8"))
            entries = [CensusEntry.from_dict(e) for e in data["entries"]]
        structures = [s for e in entries for s in e.structures()]
    else:
        if args.rack is None or args.map is None:
            raise _Usage("distinguish needs --census or both --rack and --map")
        structures = [_structure(args, read_rack(args.rack))]
    result = distinguish(d1, d2, structures)
    data = result.to_dict()
    text = f"{result.verdict} ({len(structures)} structures)"
    if result.first_witness is not None:
        s = result.structures[result.first_witness]
        a, b = result.counts[result.first_witness]
        text += f"\nfirst separating structure: f = {s.f_str()}, counts {a} vs {b}\n" + _matrix_text(s.rack.table)
    rows = [["index", "f", "count1", "count2"]] + [
        [i, s.f_str(), a, b] for i, (s, (a, b)) in enumerate(zip(result.structures, result.counts))]
    return data, text, rows


def cmd_diagram(args):
    d = read_diagram(args.diagram)
    data = d.to_dict()
    inv = classical_invariants(d)
    data["invariants"] = inv.to_dict()
    text = (f"{d.name}: {len(d.components)} component(s), {len(d.arcs)} arcs, "
            f"{len(d.cusps)} cusps, {len(d.crossings)} crossings\n"
            f"writhe {inv.writhe}, tb {inv.tb}, rot {inv.rot}")
    rows = [list(inv.to_dict().keys()), list(inv.to_dict().values())]
    return data, text, rows


def cmd_paper_repro(args):
    golden = Path(args.golden_dir) if args.golden_dir else _golden_dir()
    results = repro.run_all()
    if args.regenerate:
        for name, payload in results.items():
            atomic_write(golden / f"{name}.json", dump_json(payload))
    status = {}
    for name, payload in results.items():
        path = golden / f"{name}.json"
        if not path.exists():
            status[name] = "missing"
        elif json.loads(path.read_text(encoding="utf-8")) != json.loads(dump_json(payload)):
            status[name] = "differs"
        else:
            status[name] = "ok"
    data = {"golden_dir": str(golden), "results": status}
    text = "\n".join(f"{name}: {s}" for name, s in status.items())
    rows = [["example", "status"]] + [[k, v] for k, v in status.items()]
    if any(s != "ok" for s in status.values()):
        raise DomainFailure((data, text, rows), "golden mismatch")
    return data, text, rows


def _golden_dir() -> Path:
    return Path(str(resources.files("legrack") / "data" / "golden"))


class _Usage(Exception):
    pass


# Parsers for each command's JSON output, used for round-trip checks.
OUTPUT_PARSERS = {
    "validate": lambda d: ValidationReport.from_dict(d).to_dict(),
    "enum-racks": lambda d: {"n": d["n"], "count": len(d["racks"]),
                             "racks": [_rack_entry(FiniteRack.from_dict(r)) for r in d["racks"]]},
    "leg-maps": lambda d: CensusEntry.from_dict(d).to_dict(),
    "census": lambda d: _census_round_trip(d),
    "ts-search": lambda d: search_result(TSRackSpec(d["n"], d["t"], d["s"])),
    "count": lambda d: ColoringReport.from_dict(d).to_dict(),
    "distinguish": lambda d: Distinction.from_dict(d).to_dict(),
}


def _census_round_trip(d):
    entries = [CensusEntry.from_dict(e) for e in d["entries"]]
    return {"n": d["n"], "classes": len(entries), "nonempty": sum(1 for e in entries if e.maps),
            "entries": [e.to_dict() for e in entries]}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legrack",
                                description="Finite racks, Legendrian racks and front-diagram colorings.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=True):
        if formats:
            sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        sp.add_argument("-o", "--output", help="write the result to this file instead of stdout")
        sp.add_argument("--max-order", type=int, default=None,
                        help="override the order bound for exhaustive searches")

    rack_help = f"rack file (JSON or CSV) or shorthand: {SHORTHAND_HELP}"

    sp = sub.add_parser("validate", help="check the rack axioms for a table")
    sp.add_argument("rack", help=rack_help)
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("enum-racks", help="racks of order n up to isomorphism")
    sp.add_argument("-n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_enum_racks)

    sp = sub.add_parser("leg-maps", help="all Legendrian maps on a rack")
    sp.add_argument("--rack", required=True, help=rack_help)
    common(sp)
    sp.set_defaults(func=cmd_leg_maps)

    sp = sub.add_parser("census", help="racks of order n with their Legendrian maps")
    sp.add_argument("-n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("ts-search", help="affine Legendrian maps on x▷y = tx + sy mod n")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-t", type=int, required=True)
    sp.add_argument("-s", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_ts_search)

    diagram_help = f"builtin ({', '.join(BUILTINS)}), DSL file, or inline Morse word"
    sp = sub.add_parser("count", help="number of colorings of a front by a Legendrian rack")
    sp.add_argument("--diagram", required=True, help=diagram_help)
    sp.add_argument("--rack", required=True, help=rack_help)
    sp.add_argument("--map", required=True, help="f as 'id', cycles, or an image list")
    sp.add_argument("--witnesses", action="store_true")
    sp.add_argument("--unchecked", action="store_true",
                    help="allow a map that fails the Legendrian axioms")
    common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("distinguish", help="compare coloring counts of two fronts")
    sp.add_argument("--d1", required=True, help=diagram_help)
    sp.add_argument("--d2", required=True, help=diagram_help)
    sp.add_argument("--census", help="use every structure of order <= K, or a census JSON file")
    sp.add_argument("--rack", help=rack_help)
    sp.add_argument("--map")
    sp.add_argument("--unchecked", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_distinguish)

    sp = sub.add_parser("diagram", help="export a front with its classical invariants")
    sp.add_argument("--diagram", required=True, help=diagram_help)
    common(sp)
    sp.set_defaults(func=cmd_diagram)

    sp = sub.add_parser("paper-repro", help="recompute the published examples and compare to golden files")
    sp.add_argument("--regenerate", action="store_true", help="rewrite the golden files")
    sp.add_argument("--golden-dir", help="directory holding the golden JSON files")
    common(sp)
    sp.set_defaults(func=cmd_paper_repro)
    return p


def _render(args, result) -> str:
    data, text, rows = result
    if args.format == "json":
        return dump_json(data)
    if args.format == "csv":
        return _csv(rows)
    return text + "\n"


def _emit(args, result) -> None:
    out = _render(args, result)
    if args.output:
        atomic_write(args.output, out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _emit(args, args.func(args))
        return 0
    except DomainFailure as exc:
        _emit(args, exc.payload)
        print(f"legrack: {exc}", file=sys.stderr)
        return 1
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"legrack: error: {exc}", file=sys.stderr)
        return 2
    except (LegrackError, ValueError, KeyError, OSError) as exc:
        print(f"legrack: {exc}", file=sys.stderr)
        return 1


def run(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
