"""Modular (t,s)-racks x▷y = tx + sy on Z_n and their affine Legendrian maps."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import TSRackError
from .legendrian import check_axioms, enumerate_legendrian_maps
from .racks import FiniteRack

# The five congruences (mod n) an affine map ax + b must satisfy, in printed order.
CONDITIONS = ("a^2(t+s)=1", "(a+1)b=0", "(1-a)s=0", "(1-t)b=0", "sb=0")


def signed(r: int, n: int) -> int:
    """Representative of r mod n of least absolute value (ties go positive)."""
    r %= n
    return r - n if r > n // 2 else r


@dataclass(frozen=True)
class TSRackSpec:
    n: int
    t: int
    s: int

    def __post_init__(self):
        if self.n < 1:
            raise TSRackError("modulus n must be positive")
        object.__setattr__(self, "t", self.t % self.n)
        object.__setattr__(self, "s", self.s % self.n)
        problems = self.problems()
        if problems:
            raise TSRackError(f"invalid (t,s) = ({self.t},{self.s}) mod {self.n}: "
                              + "; ".join(problems))

    def problems(self) -> list[str]:
        n, t, s = self.n, self.t, self.s
        out = []
        if math.gcd(t, n) != 1:
            out.append(f"gcd(t, n) = {math.gcd(t, n)} != 1")
        if (s * s - (1 - t) * s) % n:
            out.append(f"s^2 = {s * s % n} but (1-t)s = {(1 - t) * s % n}")
        return out

    @property
    def is_quandle(self) -> bool:
        return (self.s + self.t - 1) % self.n == 0

    def describe(self) -> str:
        terms = _linear_terms([(self.t, "x"), (signed(self.s, self.n), "y")])
        return f"x▷y = {terms} (mod {self.n})"

    def to_dict(self) -> dict:
        return {"n": self.n, "t": self.t, "s": self.s}


def _linear_terms(terms) -> str:
    out = ""
    for coef, var in terms:
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        if not out:
            out = ("-" if coef < 0 else "") + mag + var
        else:
            out += (" - " if coef < 0 else " + ") + mag + var
    return out or "0"


def valid_specs(n: int) -> list[TSRackSpec]:
    """All (t, s) pairs mod n giving a (t,s)-rack."""
    return [TSRackSpec(n, t, s) for t in range(n) for s in range(n)
            if math.gcd(t, n) == 1 and (s * s - (1 - t) * s) % n == 0]


def build_ts_rack(spec: TSRackSpec) -> FiniteRack:
    n, t, s = spec.n, spec.t, spec.s
    return FiniteRack(tuple(
        tuple((t * x + s * y) % n + 1 for y in range(n)) for x in range(n)))


@dataclass(frozen=True, order=True)
class AffineMap:
    a: int
    b: int

    def images(self, n: int) -> tuple[int, ...]:
        """The map on table elements (residue r is element r + 1)."""
        return tuple((self.a * x + self.b) % n + 1 for x in range(n))

    def describe(self, n: int) -> str:
        a, b = self.a % n, signed(self.b, n)
        head = "" if a == 0 else ("x" if a == 1 else f"{a}x")
        if b == 0:
            return f"f(x) = {head or '0'}"
        if not head:
            return f"f(x) = {b}"
        return f"f(x) = {head} {'-' if b < 0 else '+'} {abs(b)}"


def condition_values(spec: TSRackSpec, a: int, b: int) -> tuple[bool, ...]:
    n, t, s = spec.n, spec.t, spec.s
    return (
        (a * a * (t + s) - 1) % n == 0,
        ((a + 1) * b) % n == 0,
        ((1 - a) * s) % n == 0,
        ((1 - t) * b) % n == 0,
        (s * b) % n == 0,
    )


def affine_legendrian_search(spec: TSRackSpec) -> list[AffineMap]:
    """All (a, b) in Z_n^2 satisfying the five congruences, sorted."""
    return [AffineMap(a, b) for a, b in product(range(spec.n), repeat=2)
            if all(condition_values(spec, a, b))]


def active_conditions(spec: TSRackSpec) -> list[str]:
    """Conditions that reject some pair which every other condition accepts.

    No minimality claim: a condition missing here is merely implied by the
    others for this particular (n, t, s).
    """
    active = set()
    for a, b in product(range(spec.n), repeat=2):
        vals = condition_values(spec, a, b)
        failed = [i for i, v in enumerate(vals) if not v]
        if len(failed) == 1:
            active.add(failed[0])
    return [CONDITIONS[i] for i in sorted(active)]


def table_level_affine_maps(spec: TSRackSpec) -> list[AffineMap]:
    """Affine maps accepted by the table-level axiom check."""
    rack = build_ts_rack(spec)
    return [AffineMap(a, b) for a, b in product(range(spec.n), repeat=2)
            if check_axioms(rack, AffineMap(a, b).images(spec.n)).ok]


def cross_validate_affine(spec: TSRackSpec, full_search_max: int = 6) -> bool:
    """Compare the congruence search with brute force on the operation table.

    For n <= ``full_search_max`` the oracle is the affine part of the full n^n
    self-map enumeration; above that, every affine map is checked on the table.
    """
    closed_form = affine_legendrian_search(spec)
    if spec.n <= full_search_max:
        rack = build_ts_rack(spec)
        found = {m.images for m in enumerate_legendrian_maps(rack)}
        oracle = [AffineMap(a, b) for a, b in product(range(spec.n), repeat=2)
                  if AffineMap(a, b).images(spec.n) in found]
    else:
        oracle = table_level_affine_maps(spec)
    return closed_form == oracle


def search_result(spec: TSRackSpec) -> dict:
    return {
        "n": spec.n, "t": spec.t, "s": spec.s,
        "rack": spec.describe(),
        "solutions": [[m.a, m.b] for m in affine_legendrian_search(spec)],
        "active_conditions": active_conditions(spec),
    }
