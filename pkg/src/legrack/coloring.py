"""Coloring systems of front diagrams and the Legendrian rack counting invariant."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .equations import EquationSystem, Equation, FPow, Op, Var
from .front import FrontDiagram, format_word
from .legendrian import LegendrianRack
from .perms import Permutation, map_to_string
from .racks import FiniteRack


@dataclass(frozen=True)
class CuspConstraint:
    incoming: int
    outgoing: int       # outgoing = f(incoming)


@dataclass(frozen=True)
class CrossingConstraint:
    under_in: int
    over: int
    under_out: int      # under_out = under_in ▷ over, or ▷̄ when use_inverse
    use_inverse: bool


@dataclass(frozen=True)
class ColoringSystem:
    n_arcs: int
    cusps: tuple[CuspConstraint, ...]
    crossings: tuple[CrossingConstraint, ...]
    name: str | None = field(default=None, compare=False)

    def to_equations(self, names: Sequence[str] | None = None) -> EquationSystem:
        """The same constraints written in the equation language (arc i is ``a<i>``)."""
        names = list(names) if names else [f"a{i}" for i in range(self.n_arcs)]
        eqs = [Equation(Var(names[c.outgoing]), FPow(1, Var(names[c.incoming]))) for c in self.cusps]
        eqs += [Equation(Var(names[x.under_out]),
                         Op(x.use_inverse, Var(names[x.under_in]), Var(names[x.over])))
                for x in self.crossings]
        return EquationSystem(tuple(names), tuple(eqs))


def compile(d: FrontDiagram) -> ColoringSystem:
    """One variable per arc, one constraint per cusp and per crossing."""
    cusps = tuple(CuspConstraint(c.incoming, c.outgoing) for c in d.cusps)
    crossings = tuple(CrossingConstraint(x.under_in, x.over, x.under_out, x.sign < 0)
                      for x in d.crossings)
    return ColoringSystem(len(d.arcs), cusps, crossings, d.name)


def _solve(system: ColoringSystem, lr: LegendrianRack, want_witnesses: bool):
    n = lr.n
    f = lr.f
    finv = None
    if sorted(f) == list(range(1, n + 1)):
        finv = [0] * n
        for x, y in enumerate(f, 1):
            finv[y - 1] = x
    op, inv = lr.rack.table, lr.rack.inv_table

    # constraints touching each arc, for propagation
    watch: list[list[tuple]] = [[] for _ in range(system.n_arcs)]
    cons = [("c", c.incoming, c.outgoing) for c in system.cusps]
    cons += [("x", x.under_in, x.over, x.under_out, x.use_inverse) for x in system.crossings]
    for ci, c in enumerate(cons):
        for a in set(c[1:4] if c[0] == "x" else c[1:3]):
            watch[a].append(ci)

    def fwd(x, y, use_inverse):
        return (inv if use_inverse else op)[x - 1][y - 1]

    def propagate(colors, queue):
        """Fill forced arcs; False on contradiction."""
        while queue:
            arc = queue.pop()
            for ci in watch[arc]:
                c = cons[ci]
                if c[0] == "c":
                    _, a, b = c
                    if colors[a]:
                        want, tgt = f[colors[a] - 1], b
                    elif colors[b] and finv is not None:
                        want, tgt = finv[colors[b] - 1], a
                    else:
                        continue
                else:
                    _, a, o, b, use_inverse = c
                    if not colors[o]:
                        continue
                    if colors[a]:
                        want, tgt = fwd(colors[a], colors[o], use_inverse), b
                    elif colors[b]:
                        want, tgt = fwd(colors[b], colors[o], not use_inverse), a
                    else:
                        continue
                if colors[tgt]:
                    if colors[tgt] != want:
                        return False
                else:
                    colors[tgt] = want
                    queue.append(tgt)
        return True

    def consistent(colors):
        for c in cons:
            if c[0] == "c":
                if f[colors[c[1]] - 1] != colors[c[2]]:
                    return False
            elif fwd(colors[c[1]], colors[c[2]], c[4]) != colors[c[3]]:
                return False
        return True

    count = 0
    found = []

    def search(colors):
        nonlocal count
        try:
            arc = colors.index(0)
        except ValueError:
            if consistent(colors):
                count += 1
                if want_witnesses:
                    found.append(tuple(colors))
            return
        for value in range(1, n + 1):
            trial = list(colors)
            trial[arc] = value
            if propagate(trial, [arc]):
                search(trial)

    search([0] * system.n_arcs)
    return count, sorted(found)


@dataclass(frozen=True)
class ColoringReport:
    diagram: str | None
    rack: FiniteRack
    f: tuple[int, ...]
    count: int
    witnesses: tuple[tuple[int, ...], ...] | None = None

    def to_dict(self) -> dict:
        out = {"diagram": self.diagram, "rack": self.rack.to_dict(),
               "f": map_to_string(self.f), "count": self.count}
        if self.witnesses is not None:
            out["witnesses"] = [{str(i): v for i, v in enumerate(w)} for w in self.witnesses]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> ColoringReport:
        rack = FiniteRack.from_dict(data["rack"])
        f = _read_map(data["f"], rack.n)
        witnesses = None
        if "witnesses" in data:
            witnesses = tuple(tuple(w[str(i)] for i in range(len(w))) for w in data["witnesses"])
        return cls(data.get("diagram"), rack, f, int(data["count"]), witnesses)

    @classmethod
    def from_json(cls, text: str) -> ColoringReport:
        return cls.from_dict(json.loads(text))


def count_colorings(system: ColoringSystem | FrontDiagram, lr: LegendrianRack,
                    witnesses: bool = False) -> ColoringReport:
    """Exact number of colorings, by seeding the lowest free arc and propagating."""
    if isinstance(system, FrontDiagram):
        system = compile(system)
    count, found = _solve(system, lr, witnesses)
    return ColoringReport(system.name, lr.rack, lr.f, count,
                          tuple(found) if witnesses else None)


@dataclass(frozen=True)
class Distinction:
    distinguished: bool
    counts: tuple[tuple[int, int], ...]        # per structure, in input order
    structures: tuple[LegendrianRack, ...]
    orientations: tuple[str, str]              # normalized words, directives included
    first_witness: int | None                  # index of the first separating structure

    @property
    def verdict(self) -> str:
        return "distinguished" if self.distinguished else "not distinguished"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "d1": self.orientations[0],
            "d2": self.orientations[1],
            "first_witness": self.first_witness,
            "results": [{"rack": s.rack.to_dict(), "f": s.f_str(), "count1": a, "count2": b}
                        for s, (a, b) in zip(self.structures, self.counts)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> Distinction:
        structures, counts = [], []
        for r in data["results"]:
            rack = FiniteRack.from_dict(r["rack"])
            structures.append(LegendrianRack.unchecked(rack, _read_map(r["f"], rack.n)))
            counts.append((int(r["count1"]), int(r["count2"])))
        first = data["first_witness"]
        distinguished = data["verdict"] == "distinguished"
        if distinguished != (first is not None):
            raise ValueError("verdict disagrees with first_witness")
        return cls(distinguished, tuple(counts), tuple(structures),
                   (data["d1"], data["d2"]), first)


def _read_map(text: str, n: int) -> tuple[int, ...]:
    if text.startswith("["):
        return tuple(int(v) for v in text.strip("[]").split())
    return Permutation.from_cycles(text, n).images


def distinguish(d1: FrontDiagram, d2: FrontDiagram,
                structures: Sequence[LegendrianRack]) -> Distinction:
    """Compare coloring counts of two oriented diagrams over each structure."""
    structures = tuple(structures)
    if not structures:
        raise ValueError("distinguish needs at least one structure")
    s1, s2 = compile(d1), compile(d2)
    counts = tuple((count_colorings(s1, lr).count, count_colorings(s2, lr).count)
                   for lr in structures)
    first = next((i for i, (a, b) in enumerate(counts) if a != b), None)
    return Distinction(first is not None, counts, structures,
                       (format_word(d1.word), format_word(d2.word)), first)
