"""Reading racks, maps and diagrams from files or inline shorthand, and atomic writes."""
from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

from .builtins import BUILTINS
from .errors import LegrackError, MalformedTableError, PermutationError
from .front import FrontDiagram, load
from .perms import Permutation, parse_cycles
from .racks import (FiniteRack, alexander_quandle, constant_action_rack, dihedral_quandle,
                    trivial_quandle)
from .ts_rack import TSRackSpec, build_ts_rack

SHORTHAND_HELP = ("trivial:N, dihedral:N, alexander:N:T, ts:N:T:S, "
                  "constant:CYCLES or constant:N:CYCLES, shift:N (x▷y = x+1)")


def read_table(path: str | Path) -> list[list[int]]:
    """A table from JSON ({"n", "table"} or a bare array) or CSV."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"{path}: invalid JSON ({exc})") from None
        if isinstance(data, dict) and "table" not in data:
            raise MalformedTableError(f"{path}: JSON object has no 'table' field")
        table = data["table"] if isinstance(data, dict) else data
        if isinstance(data, dict) and "n" in data and data["n"] != len(table):
            raise MalformedTableError(f"{path}: n = {data['n']} but table has {len(table)} rows")
        return table
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    try:
        return [[int(c) for c in r] for r in rows]
    except ValueError as exc:
        raise MalformedTableError(f"{path}: non-integer CSV entry ({exc})") from None


def _shorthand(text: str) -> FiniteRack:
    kind, _, rest = text.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind == "trivial":
            return trivial_quandle(int(args[0]))
        if kind == "dihedral":
            return dihedral_quandle(int(args[0]))
        if kind == "alexander":
            return alexander_quandle(int(args[0]), int(args[1]))
        if kind == "ts":
            return build_ts_rack(TSRackSpec(int(args[0]), int(args[1]), int(args[2])))
        if kind == "shift":
            n = int(args[0])
            return FiniteRack(tuple(tuple(x % n + 1 for _ in range(n)) for x in range(1, n + 1)))
        if kind == "constant":
            if len(args) == 2:
                sigma = Permutation.from_cycles(args[1], int(args[0]))
            else:
                cycles = parse_cycles(rest)
                n = max((p for c in cycles for p in c), default=1)
                sigma = Permutation.from_cycles(rest, n)
            return constant_action_rack(sigma)
    except (IndexError, ValueError) as exc:
        if isinstance(exc, LegrackError):
            raise
        raise LegrackError(f"bad rack shorthand {text!r}; expected {SHORTHAND_HELP}") from None
    raise LegrackError(f"unknown rack {text!r}: not a file and not one of {SHORTHAND_HELP}")


def read_rack(arg: str) -> FiniteRack:
    """A rack from a JSON/CSV path or inline shorthand such as ``alexander:3:2``."""
    if os.path.exists(arg):
        return FiniteRack(read_table(arg))
    return _shorthand(arg)


def parse_map(text: str, n: int) -> tuple[int, ...]:
    """``id``, cycle notation, or an explicit image list ``[2 3 1]`` / ``2,3,1``."""
    t = text.strip()
    if t in ("id", "()", ""):
        return tuple(range(1, n + 1))
    if t.startswith("("):
        return Permutation.from_cycles(t, n).images
    parts = t.strip("[]").replace(",", " ").split()
    try:
        images = tuple(int(p) for p in parts)
    except ValueError:
        raise PermutationError(f"cannot read map {text!r}") from None
    if len(images) != n or any(not 1 <= v <= n for v in images):
        raise PermutationError(f"map {text!r} is not a self-map of 1..{n}")
    return images


def read_diagram(arg: str) -> FrontDiagram:
    """A builtin name, a DSL file, or an inline Morse word."""
    if arg in BUILTINS:
        return BUILTINS[arg].diagram()
    if os.path.exists(arg):
        return load(Path(arg).read_text(encoding="utf-8"), Path(arg).stem)
    return load(arg, arg)


def atomic_write(path: str | Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
