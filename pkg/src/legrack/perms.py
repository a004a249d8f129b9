"""Permutations of {1..n} with cycle-notation parsing and printing."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Iterator, Sequence

from .errors import PermutationError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}, stored as the image sequence (p(1), ..., p(n))."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str, n: int | None = None) -> Permutation:
        cycles = parse_cycles(text, n)
        points = [p for c in cycles for p in c]
        if n is None:
            n = max(points, default=0)
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for i, p in enumerate(cycle):
                if p < 1 or p > n:
                    raise PermutationError(f"point {p} outside 1..{n} in {text!r}")
                if p in seen:
                    raise PermutationError(f"point {p} repeated in {text!r}")
                seen.add(p)
                images[p - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (self * other)(x) = self(other(x))."""
        if other.n != self.n:
            raise PermutationError("degree mismatch")
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(k)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point, ordered by that point."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            y = self(start)
            while y != start:
                cycle.append(y)
                seen.add(y)
                y = self(y)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_notation(self) -> str:
        return format_cycles(self.cycles(), self.n)

    def __str__(self) -> str:
        return self.cycle_notation()


def format_cycles(cycles: Sequence[Sequence[int]], n: int) -> str:
    if not cycles:
        return "()"
    sep = "" if n <= 9 else " "
    return "".join("(" + sep.join(str(p) for p in c) + ")" for c in cycles)


def parse_cycles(text: str, n: int | None = None) -> list[tuple[int, ...]]:
    """Parse "()", "(1324)", "(1 3 2 4)(5 6)" or "(1,3)" into a list of cycles.

    Concatenated digits inside one cycle are read as single-digit points,
    which is only allowed when the degree is at most 9.
    """
    text = text.strip()
    if text in ("", "id", "()"):
        return []
    if _CYCLE_RE.sub("", text).strip():
        raise PermutationError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            tokens = [t for t in re.split(r"[\s,]+", body) if t]
        else:
            if n is not None and n > 9 and len(body) > 1:
                raise PermutationError(
                    f"concatenated points are ambiguous for n={n}: {text!r}")
            tokens = list(body)
        try:
            cycles.append(tuple(int(t) for t in tokens))
        except ValueError:
            raise PermutationError(f"malformed cycle notation: {text!r}") from None
    return cycles


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of image sequences."""
    for images in _permutations(range(1, n + 1)):
        yield Permutation(images)


def map_to_string(images: Sequence[int]) -> str:
    """Cycle notation for bijections, bracketed image list otherwise."""
    try:
        return Permutation(tuple(images)).cycle_notation()
    except PermutationError:
        return "[" + " ".join(str(v) for v in images) + "]"
