"""Finite groups as Cayley tables on {1..n}, used to build group-derived quandles."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import GroupError
from .perms import Permutation


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table: ``table[a-1][b-1] == a*b``, elements 1..n."""

    table: tuple[tuple[int, ...], ...]
    identity: int
    name: str = "G"

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupError("Cayley table must be a non-empty square array")
        if any(v < 1 or v > n for row in table for v in row):
            raise GroupError(f"Cayley table entries must lie in 1..{n}")
        e = self.identity
        if not 1 <= e <= n or any(self.mul(e, a) != a or self.mul(a, e) != a
                                   for a in range(1, n + 1)):
            raise GroupError(f"{e} is not a two-sided identity")
        for a in range(1, n + 1):
            if e not in table[a - 1]:
                raise GroupError(f"element {a} has no inverse")
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                ab = self.mul(a, b)
                for c in range(1, n + 1):
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise GroupError(f"associativity fails at ({a}, {b}, {c})")

    @property
    def n(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a - 1][b - 1]

    def inv(self, a: int) -> int:
        return self.table[a - 1].index(self.identity) + 1

    def is_automorphism(self, sigma: Permutation) -> bool:
        if sigma.n != self.n:
            return False
        return all(sigma(self.mul(a, b)) == self.mul(sigma(a), sigma(b))
                   for a in range(1, self.n + 1) for b in range(1, self.n + 1))

    def inner_automorphism(self, g: int) -> Permutation:
        """Conjugation x -> g^-1 x g."""
        gi = self.inv(g)
        return Permutation(tuple(self.mul(self.mul(gi, x), g) for x in range(1, self.n + 1)))


def cyclic_group(n: int) -> CayleyTable:
    """Z_n with residue r stored as element r+1."""
    if n < 1:
        raise GroupError("group order must be positive")
    table = tuple(tuple((a + b) % n + 1 for b in range(n)) for a in range(n))
    return CayleyTable(table, identity=1, name=f"Z{n}")


def trivial_group() -> CayleyTable:
    return cyclic_group(1)


def symmetric_group(k: int) -> CayleyTable:
    """S_k on its k! elements, listed in lexicographic order of images.

    Product is composition (a*b)(x) = a(b(x)); element 1 is the identity.
    """
    elems = list(permutations(range(k)))
    index = {p: i + 1 for i, p in enumerate(elems)}
    table = tuple(
        tuple(index[tuple(a[b[x]] for x in range(k))] for b in elems)
        for a in elems
    )
    return CayleyTable(table, identity=1, name=f"S{k}")


def negation(g: CayleyTable) -> Permutation:
    """Inversion map x -> x^-1 (an automorphism exactly when g is abelian)."""
    return Permutation(tuple(g.inv(x) for x in range(1, g.n + 1)))
