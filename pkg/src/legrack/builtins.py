"""Named front diagrams with their reference equation systems, move fixtures,
and the published small-order classification tables."""
from __future__ import annotations

from dataclasses import dataclass

from .equations import EquationSystem, parse_equations
from .errors import LegrackError
from .front import FrontDiagram, load


class UnknownBuiltinError(LegrackError, KeyError):
    pass


@dataclass(frozen=True)
class Builtin:
    name: str
    word: str
    equations: str
    labels: tuple[int, ...]   # arc carrying each equation variable, in variable order

    def diagram(self) -> FrontDiagram:
        return load(self.word, self.name)

    def system(self) -> EquationSystem:
        return parse_equations(self.equations)

    def label_map(self) -> dict[str, int]:
        return dict(zip(self.system().variables, self.labels))


_TREFOIL = "L1 L2 L4 X1 X3 X5 R2 R2"
_SUM = "L1 L2 L4 X1 X3 X5 R2 R2 L2 L4 X1 X3 X5 R2 R2"

_ENTRIES = [
    Builtin("unknot", "L1 R1 o1=d", "f^2(x) = x", (0,)),
    Builtin("unknot_s_plus", "L1 L2 R1 R1 o1=d", "f^4(x) = x", (0,)),
    Builtin("trefoil_paper", f"{_TREFOIL} R1",
            """
            x > f(y) = f^2(z)
            y > f(z) = f^2(x)
            z > f(x) = f^2(y)
            """, (0, 5, 3)),
    Builtin("trefoil_s_minus", f"{_TREFOIL} L2 R1 R1",
            """
            x > f(y) = f^4(z)
            y > f(z) = f^2(x)
            z > f(x) = f^2(y)
            """, (0, 5, 3)),
    Builtin("trefoil_s_plus", "L1 L2 L4 L6 X1 X5 X7 R3 R2 R2 R1",
            """
            x > f(y) = f^2(z)
            y > f(z) = f^4(x)
            z > f^3(x) = f^2(y)
            """, (0, 7, 3)),
    Builtin("k1_sum_k1", f"{_SUM} R1 o1=d",
            """
            x > y = f^2(z)
            z > f(x) = f(y)
            u > f(z) = f^2(x)
            v > u = f^2(w)
            w > f(v) = f(u)
            y > f(w) = f^2(v)
            """, (2, 5, 1, 4, 9, 11)),
    Builtin("k1_sum_k2", f"{_SUM} L2 R1 R1 o1=d",
            """
            x > y = f^2(z)
            z > f(x) = f(y)
            u > f(z) = f^2(x)
            v > u = f^4(w)
            w > f(v) = f(u)
            y > f(w) = f^2(v)
            """, (3, 4, 0, 5, 10, 12)),
]

BUILTINS: dict[str, Builtin] = {b.name: b for b in _ENTRIES}

# Builtin pairs told apart by some Legendrian rack of order at most 4.
DISTINGUISHING_PAIRS = (
    ("unknot", "unknot_s_plus"),
    ("trefoil_paper", "trefoil_s_minus"),
    ("trefoil_paper", "trefoil_s_plus"),
    ("k1_sum_k1", "k1_sum_k2"),
)


def builtin(name: str) -> tuple[FrontDiagram, EquationSystem]:
    try:
        b = BUILTINS[name]
    except KeyError:
        raise UnknownBuiltinError(
            f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None
    return b.diagram(), b.system()


def _orientations(word: str, cusps: int) -> list[str]:
    """The word under every choice of exit strand on its first ``cusps`` left cusps."""
    out = []
    for bits in range(2 ** cusps):
        dirs = " ".join(f"o{k + 1}={'d' if bits >> k & 1 else 'u'}" for k in range(cusps))
        out.append(f"{word} {dirs}".strip())
    return out


@dataclass(frozen=True)
class MoveFixture:
    move: str
    variant: str
    before: str
    after: str


def _fixtures() -> tuple[MoveFixture, ...]:
    out = []

    # Type I: a kink on one strand of the unknot, on either side of it.
    kinks = {
        "upper strand, kink above": "L1 L1 X2 R1 R1",
        "upper strand, kink below": "L1 L2 X1 R2 R1",
        "lower strand, kink above": "L1 L2 X3 R2 R1",
        "lower strand, kink below": "L1 L3 X2 R3 R1",
    }
    for variant, word in kinks.items():
        for before in _orientations(word, 1):
            out.append(MoveFixture("I", variant, before, before.replace(word, "L1 R1")))

    # Type II: a strand pushed across a cusp, for both cusp sides and slopes.
    pushes = {
        "right cusp, descending strand": ("L1 L3 X2 X3 R2 R1", "L1 L3 R3 R1"),
        "right cusp, ascending strand": ("L1 L1 X2 X1 R2 R1", "L1 L1 R1 R1"),
        "left cusp, ascending strand": ("L1 L2 X3 X2 R3 R1", "L1 L3 R3 R1"),
        "left cusp, descending strand": ("L1 L2 X1 X2 R1 R1", "L1 L1 R1 R1"),
    }
    for variant, (lhs, rhs) in pushes.items():
        for before, after in zip(_orientations(lhs, 2), _orientations(rhs, 2)):
            out.append(MoveFixture("II", variant, before, after))

    # Type III: three parallel unknots with a triple point moved across.
    lhs = "L1 L2 L3 X1 X2 X1 X1 X2 X1 R3 R2 R1"
    rhs = "L1 L2 L3 X2 X1 X2 X1 X2 X1 R3 R2 R1"
    for before, after in zip(_orientations(lhs, 3), _orientations(rhs, 3)):
        out.append(MoveFixture("III", "triple point", before, after))
    return tuple(out)


MOVE_FIXTURES = _fixtures()

# One kink against two of the same kind: equal counts for every Legendrian
# rack, but not for structures breaking axiom I.
KINK_CONTROL = ("L1 L1 X2 R1 R1 o1=u", "L1 L1 X2 R1 L1 X2 R1 R1 o1=u")


# Printed classification tables: operation table (row x, column y holds x▷y)
# and the listed Legendrian maps, exactly as published.
ORDER3_TABLE = (
    (((1, 1, 1), (2, 2, 2), (3, 3, 3)), ("()", "(12)", "(13)", "(23)")),
    (((1, 1, 1), (3, 2, 2), (2, 3, 3)), ("()", "(23)")),
    (((1, 3, 2), (3, 2, 1), (2, 1, 3)), ("()",)),
    (((2, 2, 2), (3, 3, 3), (1, 1, 1)), ("(123)",)),
    (((2, 2, 2), (1, 1, 1), (3, 3, 3)), ()),
    (((2, 2, 1), (1, 1, 2), (3, 3, 3)), ()),
)

ORDER4_TABLE = (
    (((1, 3, 4, 2), (4, 2, 1, 3), (2, 4, 3, 1), (3, 1, 2, 4)), ("()",)),
    (((2, 2, 1, 2), (4, 4, 2, 4), (3, 3, 3, 3), (1, 1, 4, 1)), ("(124)",)),
    (((2, 2, 2, 2), (3, 3, 3, 3), (1, 1, 1, 1), (4, 4, 4, 4)), ("(123)",)),
    (((2, 2, 2, 3), (3, 3, 3, 1), (1, 1, 1, 2), (4, 4, 4, 4)), ("(123)",)),
    (((1, 1, 4, 3), (2, 2, 2, 2), (4, 3, 3, 1), (3, 4, 1, 4)), ("()",)),
    (((1, 3, 1, 1), (2, 2, 2, 2), (3, 4, 3, 3), (4, 1, 4, 4)), ("()",)),
    (((1, 4, 4, 1), (3, 2, 2, 3), (2, 3, 3, 2), (4, 1, 1, 4)), ("(23)", "(14)", "(14)(23)")),
    (((2, 2, 2, 2), (1, 1, 1, 1), (4, 4, 4, 4), (3, 3, 3, 3)), ("(1324)", "(1423)")),
    (((1, 1, 4, 1), (2, 2, 2, 2), (3, 3, 3, 3), (4, 4, 1, 4)), ("()", "(14)")),
    (((1, 3, 1, 3), (2, 2, 2, 2), (3, 1, 3, 1), (4, 4, 4, 4)), ("(13)", "(24)", "(13)(24)", "()")),
    (((1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3), (4, 4, 4, 4)),
     ("(12)(34)", "(13)(24)", "(14)(23)", "(34)", "(23)", "(24)", "(12)", "(13)", "(14)", "()")),
)
