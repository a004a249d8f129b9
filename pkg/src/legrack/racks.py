"""Finite racks and quandles stored as operation tables on {1..n}.

Row j, column k of a table holds j▷k.  The right translation ``x -> x▷k`` is
the k-th column, which the rack axioms force to be a permutation.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .errors import GroupError, MalformedTableError, OrderBoundError, RackAxiomError
from .groups import CayleyTable
from .perms import Permutation

DEFAULT_MAX_ORDER = 6
MAX_ORDER_ENV = "LEGRACK_MAX_ORDER"

Table = tuple[tuple[int, ...], ...]


def max_order() -> int:
    """Upper bound on orders accepted by exhaustive searches (env-overridable)."""
    value = os.environ.get(MAX_ORDER_ENV)
    if value is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(value)
    except ValueError:
        raise OrderBoundError(f"{MAX_ORDER_ENV}={value!r} is not an integer") from None


def check_order(n: int, bound: int | None = None) -> None:
    bound = max_order() if bound is None else bound
    if n < 1:
        raise OrderBoundError("order must be at least 1")
    if n > bound:
        raise OrderBoundError(f"order {n} exceeds the configured bound {bound}")


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    n: int
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
                for v in self.violations
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ValidationReport:
        return cls(data["n"], tuple(
            Violation(v["axiom"], tuple(v["witness"]), v["detail"]) for v in data["violations"]))


def _normalize(table: Sequence[Sequence[int]]) -> Table:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError):
        raise MalformedTableError("table entries must be integers") from None
    n = len(rows)
    if n == 0:
        raise MalformedTableError("empty table: a rack needs at least one element")
    for j, row in enumerate(rows, start=1):
        if len(row) != n:
            raise MalformedTableError(f"row {j} has {len(row)} entries, expected {n}")
        for k, v in enumerate(row, start=1):
            if not 1 <= v <= n:
                raise MalformedTableError(f"entry ({j},{k}) = {v} is outside 1..{n}")
    return rows


def validate_rack(table: Sequence[Sequence[int]]) -> ValidationReport:
    """Check both rack axioms; report the first failing witness of each.

    Raises MalformedTableError for shape or range problems.
    """
    t = _normalize(table)
    n = len(t)
    violations = []
    for k in range(n):
        column = [t[j][k] for j in range(n)]
        if len(set(column)) != n:
            seen = {}
            for j, v in enumerate(column, start=1):
                if v in seen:
                    violations.append(Violation(
                        "i", (seen[v], j, k + 1),
                        f"column {k + 1} is not a bijection: {seen[v]}▷{k + 1} = {j}▷{k + 1} = {v}"))
                    break
                seen[v] = j
            break
    sd = _first_sd_failure(t)
    if sd is not None:
        x, y, z = sd
        violations.append(Violation(
            "ii", sd, f"({x}▷{y})▷{z} != ({x}▷{z})▷({y}▷{z})"))
    return ValidationReport(n, tuple(violations))


def _first_sd_failure(t: Table):
    n = len(t)
    for x in range(n):
        for y in range(n):
            xy = t[x][y] - 1
            for z in range(n):
                if t[xy][z] != t[t[x][z] - 1][t[y][z] - 1]:
                    return (x + 1, y + 1, z + 1)
    return None


@dataclass(frozen=True)
class FiniteRack:
    """A validated finite rack.  Construction raises if the table is not a rack."""

    table: Table
    inv_table: Table = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        t = _normalize(self.table)
        object.__setattr__(self, "table", t)
        report = validate_rack(t)
        if not report.ok:
            raise RackAxiomError("; ".join(v.detail for v in report.violations))
        object.__setattr__(self, "inv_table", _inverse_table(t))

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        """x ▷ y."""
        return self.table[x - 1][y - 1]

    def inv(self, x: int, y: int) -> int:
        """x ▷̄ y, the unique z with z ▷ y = x."""
        return self.inv_table[x - 1][y - 1]

    def column(self, k: int) -> Permutation:
        return Permutation(tuple(row[k - 1] for row in self.table))

    def to_dict(self) -> dict:
        return {"n": self.n, "table": [list(row) for row in self.table]}

    @classmethod
    def from_dict(cls, data: dict) -> FiniteRack:
        rack = cls(data["table"])
        if "n" in data and data["n"] != rack.n:
            raise MalformedTableError(f"declared n={data['n']} but table has order {rack.n}")
        return rack

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.table)


def _inverse_table(t: Table) -> Table:
    n = len(t)
    inv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inv[t[x][y] - 1][y] = x + 1
    return tuple(tuple(row) for row in inv)


def is_quandle(rack: FiniteRack) -> bool:
    return all(rack.op(x, x) == x for x in range(1, rack.n + 1))


def inverse_op(rack: FiniteRack) -> Table:
    return rack.inv_table


def orbits(rack: FiniteRack) -> list[tuple[int, ...]]:
    """Orbits of the group generated by the right translations."""
    parent = list(range(rack.n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(1, rack.n + 1):
        for y in range(1, rack.n + 1):
            a, b = find(x), find(rack.op(x, y))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(1, rack.n + 1):
        groups.setdefault(find(x), []).append(x)
    return [tuple(g) for g in sorted(groups.values())]


# -- constructors -----------------------------------------------------------

def trivial_quandle(n: int) -> FiniteRack:
    return FiniteRack(tuple(tuple(x for _ in range(n)) for x in range(1, n + 1)))


def constant_action_rack(sigma: Permutation) -> FiniteRack:
    """x ▷ y = sigma(x)."""
    return FiniteRack(tuple(tuple(sigma(x) for _ in range(sigma.n)) for x in range(1, sigma.n + 1)))


def conjugation_quandle(g: CayleyTable) -> FiniteRack:
    """x ▷ y = y^-1 x y."""
    return FiniteRack(tuple(
        tuple(g.mul(g.mul(g.inv(y), x), y) for y in range(1, g.n + 1))
        for x in range(1, g.n + 1)))


def core_quandle(g: CayleyTable) -> FiniteRack:
    """x ▷ y = y x^-1 y."""
    return FiniteRack(tuple(
        tuple(g.mul(g.mul(y, g.inv(x)), y) for y in range(1, g.n + 1))
        for x in range(1, g.n + 1)))


def alexander_quandle(n: int, t: int) -> FiniteRack:
    """x ▷ y = t x + (1 - t) y on Z_n; residue r is element r + 1."""
    if n < 1:
        raise MalformedTableError("modulus must be positive")
    if math.gcd(t % n, n) != 1:
        raise RackAxiomError(f"t={t} is not a unit mod {n}")
    return FiniteRack(tuple(
        tuple((t * x + (1 - t) * y) % n + 1 for y in range(n)) for x in range(n)))


def dihedral_quandle(n: int) -> FiniteRack:
    """x ▷ y = 2y - x on Z_n."""
    return alexander_quandle(n, -1)


def generalized_alexander(g: CayleyTable, sigma: Permutation) -> FiniteRack:
    """x ▷ y = sigma(x y^-1) y for an automorphism sigma of g."""
    if not g.is_automorphism(sigma):
        raise GroupError(f"{sigma} is not an automorphism of {g.name}")
    return FiniteRack(tuple(
        tuple(g.mul(sigma(g.mul(x, g.inv(y))), y) for y in range(1, g.n + 1))
        for x in range(1, g.n + 1)))


# -- isomorphism and canonical forms ---------------------------------------

def relabel(rack: FiniteRack, phi: Permutation) -> FiniteRack:
    """The rack transported along phi: phi(x) ▷' phi(y) = phi(x ▷ y)."""
    n = rack.n
    new = [[0] * n for _ in range(n)]
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            new[phi(x) - 1][phi(y) - 1] = phi(rack.op(x, y))
    return FiniteRack(tuple(tuple(row) for row in new))


def is_homomorphism(src: FiniteRack, dst: FiniteRack, phi: Sequence[int]) -> bool:
    return all(phi[src.op(x, y) - 1] == dst.op(phi[x - 1], phi[y - 1])
               for x in range(1, src.n + 1) for y in range(1, src.n + 1))


def are_isomorphic(r1: FiniteRack, r2: FiniteRack) -> Permutation | None:
    """Lexicographically least isomorphism r1 -> r2, or None."""
    if r1.n != r2.n:
        return None
    if sorted(map(len, orbits(r1))) != sorted(map(len, orbits(r2))):
        return None
    for images in permutations(range(1, r1.n + 1)):
        if is_homomorphism(r1, r2, images):
            return Permutation(images)
    return None


def canonical_table(table: Table) -> Table:
    """Lexicographically least row-major table over all relabelings."""
    n = len(table)
    t = [[v - 1 for v in row] for row in table]
    best = None
    for psi in permutations(range(n)):
        # psi = phi^-1; relabeled entry (i, j) is phi(t[psi(i)][psi(j)])
        phi = [0] * n
        for i, p in enumerate(psi):
            phi[p] = i
        cand = []
        worse = False
        decided = best is None
        for i in range(n):
            row = t[psi[i]]
            for j in range(n):
                v = phi[row[psi[j]]]
                if not decided:
                    b = best[len(cand)]
                    if v > b:
                        worse = True
                        break
                    if v < b:
                        decided = True
                cand.append(v)
            if worse:
                break
        if not worse and (best is None or cand < best):
            best = cand
    return tuple(tuple(best[i * n + j] + 1 for j in range(n)) for i in range(n))


def canonical_form(rack: FiniteRack) -> FiniteRack:
    return FiniteRack(canonical_table(rack.table))


def canonical_relabeling(rack: FiniteRack) -> Permutation:
    """Least relabeling phi with relabel(rack, phi) equal to the canonical form."""
    target = canonical_form(rack)
    phi = are_isomorphic(rack, target)
    assert phi is not None
    return phi


# -- enumeration ------------------------------------------------------------

def _close(cols: list, n: int):
    """Propagate R_{R_z(y)} = R_z R_y R_z^-1 to a fixpoint; None on conflict."""
    changed = True
    while changed:
        changed = False
        for z in range(n):
            rz = cols[z]
            if rz is None:
                continue
            rz_inv = [0] * n
            for x, v in enumerate(rz):
                rz_inv[v] = x
            for y in range(n):
                ry = cols[y]
                if ry is None:
                    continue
                need = tuple(rz[ry[rz_inv[x]]] for x in range(n))
                w = rz[y]
                if cols[w] is None:
                    cols[w] = need
                    changed = True
                elif cols[w] != need:
                    return None
    return cols


def labeled_racks(n: int) -> Iterable[Table]:
    """Every rack table on {1..n}, found by choosing columns from S_n.

    Self-distributivity says R_{R_z(y)} = R_z R_y R_z^-1 for the column maps,
    so fixing some columns often forces others.
    """
    perms = list(permutations(range(n)))

    def search(cols):
        try:
            c = cols.index(None)
        except ValueError:
            yield tuple(tuple(cols[k][x] + 1 for k in range(n)) for x in range(n))
            return
        for p in perms:
            trial = list(cols)
            trial[c] = p
            closed = _close(trial, n)
            if closed is not None:
                yield from search(closed)

    yield from search([None] * n)


def enumerate_racks(n: int, bound: int | None = None) -> list[FiniteRack]:
    """Canonical representatives of all racks of order n, sorted by table."""
    check_order(n, bound)
    forms = {canonical_table(t) for t in labeled_racks(n)}
    return [FiniteRack(t) for t in sorted(forms)]
