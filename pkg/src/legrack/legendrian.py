"""Legendrian maps on finite racks, Legendrian homomorphisms and the small-order census."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .perms import Permutation, map_to_string
from .racks import (FiniteRack, canonical_form, check_order, enumerate_racks,
                    is_homomorphism, is_quandle)

SelfMap = tuple[int, ...]


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the three Legendrian axioms; ``None`` means the axiom holds."""

    axiom_i: AxiomFailure | None
    axiom_ii: AxiomFailure | None
    axiom_iii: AxiomFailure | None

    @property
    def ok(self) -> bool:
        return self.axiom_i is None and self.axiom_ii is None and self.axiom_iii is None

    @property
    def failures(self) -> list[AxiomFailure]:
        return [a for a in (self.axiom_i, self.axiom_ii, self.axiom_iii) if a is not None]

    def to_dict(self) -> dict:
        def enc(a):
            return None if a is None else {"witness": list(a.witness), "detail": a.detail}
        return {"ok": self.ok, "I": enc(self.axiom_i), "II": enc(self.axiom_ii),
                "III": enc(self.axiom_iii)}


def _as_images(rack: FiniteRack, f) -> SelfMap:
    images = tuple(f.images) if isinstance(f, (Permutation, LegendrianMap)) else tuple(f)
    if len(images) != rack.n or any(not 1 <= v <= rack.n for v in images):
        raise ValueError(f"map {images} is not a self-map of 1..{rack.n}")
    return images


def check_axioms(rack: FiniteRack, f) -> AxiomReport:
    """Check, for all x, y:
    (I)   f^2(x▷x) = x = f^2(x)▷x
    (II)  f(x▷y) = f(x)▷y
    (III) x▷f(y) = x▷y
    """
    fm = _as_images(rack, f)
    n = rack.n
    op = rack.op

    def F(x):
        return fm[x - 1]

    fail_i = fail_ii = fail_iii = None
    for x in range(1, n + 1):
        a = F(F(op(x, x)))
        if a != x:
            fail_i = AxiomFailure("I", (x,), f"f^2({x}▷{x}) = {a} != {x}")
            break
        b = op(F(F(x)), x)
        if b != x:
            fail_i = AxiomFailure("I", (x,), f"f^2({x})▷{x} = {b} != {x}")
            break
    for x, y in product(range(1, n + 1), repeat=2):
        if F(op(x, y)) != op(F(x), y):
            fail_ii = AxiomFailure("II", (x, y),
                                   f"f({x}▷{y}) = {F(op(x, y))} != f({x})▷{y} = {op(F(x), y)}")
            break
    for x, y in product(range(1, n + 1), repeat=2):
        if op(x, F(y)) != op(x, y):
            fail_iii = AxiomFailure("III", (x, y),
                                    f"{x}▷f({y}) = {op(x, F(y))} != {x}▷{y} = {op(x, y)}")
            break
    return AxiomReport(fail_i, fail_ii, fail_iii)


def is_legendrian_map(rack: FiniteRack, f) -> bool:
    return check_axioms(rack, f).ok


@dataclass(frozen=True)
class LegendrianMap:
    """A self-map f of {1..n} accepted by ``check_axioms`` for ``rack``."""

    images: SelfMap
    rack: FiniteRack

    def __post_init__(self):
        report = check_axioms(self.rack, self.images)
        if not report.ok:
            raise ValueError("not a Legendrian map: "
                             + "; ".join(a.detail for a in report.failures))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def permutation(self) -> Permutation:
        return Permutation(self.images)

    def __str__(self) -> str:
        return map_to_string(self.images)


@dataclass(frozen=True)
class LegendrianRack:
    rack: FiniteRack
    f: SelfMap

    def __post_init__(self):
        object.__setattr__(self, "f", _as_images(self.rack, self.f))
        report = check_axioms(self.rack, self.f)
        if not report.ok:
            raise ValueError("not a Legendrian rack: "
                             + "; ".join(a.detail for a in report.failures))

    @classmethod
    def unchecked(cls, rack: FiniteRack, f) -> LegendrianRack:
        """Pair a rack with any self-map, skipping the axiom check (negative controls)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "rack", rack)
        object.__setattr__(obj, "f", _as_images(rack, f))
        return obj

    @property
    def n(self) -> int:
        return self.rack.n

    def f_str(self) -> str:
        return map_to_string(self.f)

    def to_dict(self) -> dict:
        return {"rack": self.rack.to_dict(), "f": self.f_str()}


def enumerate_legendrian_maps(rack: FiniteRack, bijections_only: bool = False) -> list[LegendrianMap]:
    """All Legendrian maps on ``rack``, sorted by image sequence.

    The default scans all n^n self-maps rather than presupposing bijectivity.
    """
    n = rack.n
    candidates = permutations(range(1, n + 1)) if bijections_only else product(range(1, n + 1), repeat=n)
    return [LegendrianMap(tuple(f), rack) for f in candidates if check_axioms(rack, f).ok]


def is_legendrian_homomorphism(src: LegendrianRack, dst: LegendrianRack, psi: Sequence[int]) -> bool:
    psi = tuple(psi)
    if len(psi) != src.n or any(not 1 <= v <= dst.n for v in psi):
        raise ValueError(f"psi {psi} does not map 1..{src.n} into 1..{dst.n}")
    if not is_homomorphism(src.rack, dst.rack, psi):
        return False
    return all(dst.f[psi[x - 1] - 1] == psi[src.f[x - 1] - 1] for x in range(1, src.n + 1))


def legendrian_isomorphic(a: LegendrianRack, b: LegendrianRack) -> Permutation | None:
    """Lexicographically least Legendrian isomorphism a -> b, or None."""
    if a.n != b.n:
        return None
    for images in permutations(range(1, a.n + 1)):
        if is_legendrian_homomorphism(a, b, images):
            return Permutation(images)
    return None


def conjugate_map(f: Sequence[int], sigma: Permutation) -> SelfMap:
    """sigma ∘ f ∘ sigma^-1, the map f transported along the relabeling sigma."""
    inv = sigma.inverse()
    return tuple(sigma(f[inv(x) - 1]) for x in range(1, sigma.n + 1))


@dataclass(frozen=True)
class CensusEntry:
    rack: FiniteRack
    maps: tuple[LegendrianMap, ...]

    @property
    def quandle(self) -> bool:
        return is_quandle(self.rack)

    def map_strings(self) -> list[str]:
        return [str(m) for m in self.maps]

    def structures(self) -> list[LegendrianRack]:
        return [LegendrianRack(self.rack, m.images) for m in self.maps]

    def to_dict(self) -> dict:
        return {"rack": self.rack.to_dict(), "quandle": self.quandle,
                "legendrian_maps": self.map_strings()}

    @classmethod
    def from_dict(cls, data: dict) -> CensusEntry:
        rack = FiniteRack.from_dict(data["rack"])
        maps = tuple(LegendrianMap(Permutation.from_cycles(s, rack.n).images, rack)
                     for s in data["legendrian_maps"])
        entry = cls(rack, maps)
        if "quandle" in data and data["quandle"] != entry.quandle:
            raise ValueError("quandle flag disagrees with the table")
        return entry


def census(n: int, bound: int | None = None) -> list[CensusEntry]:
    """One entry per isomorphism class of racks of order n with all its Legendrian maps."""
    check_order(n, bound)
    return [CensusEntry(r, tuple(enumerate_legendrian_maps(r))) for r in enumerate_racks(n, bound)]


def census_structures(max_n: int = 4) -> list[LegendrianRack]:
    """Every Legendrian rack (canonical rack, map) of order 1..max_n."""
    out = []
    for n in range(1, max_n + 1):
        for entry in census(n):
            out.extend(entry.structures())
    return out


def structure_classes(entry: CensusEntry) -> list[list[LegendrianMap]]:
    """Partition the maps of one rack into Legendrian isomorphism classes."""
    classes: list[list[LegendrianMap]] = []
    for m in entry.maps:
        lr = LegendrianRack(entry.rack, m.images)
        for cls in classes:
            if legendrian_isomorphic(lr, LegendrianRack(entry.rack, cls[0].images)) is not None:
                cls.append(m)
                break
        else:
            classes.append([m])
    return classes


def find_entry(entries: Sequence[CensusEntry], rack: FiniteRack) -> CensusEntry:
    """The census entry whose rack is isomorphic to ``rack``."""
    target = canonical_form(rack).table
    for e in entries:
        if e.rack.table == target:
            return e
    raise KeyError("rack not present in census")
