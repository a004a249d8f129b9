"""A small equation language for hand-written coloring systems.

One equation per line, ``lhs = rhs``.  Terms are variables (identifiers),
``f(t)`` or ``f^k(t)``, ``a > b`` for a▷b, ``a >> b`` for a▷̄b, and
parentheses.  The operators associate to the left.  A line ``vars: x y z``
fixes the variable order; otherwise variables are taken in order of first
appearance.  ``#`` starts a comment.  The Unicode symbols ▷ and ▷̄ are
accepted as spellings of ``>`` and ``>>``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import EquationError

_TOKEN_RE = re.compile(r"\s*(?:(>>|▷̄)|(>|▷)|(\^)|(\()|(\))|(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(=))")


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FPow:
    k: int
    arg: object

    def __str__(self):
        return f"f({self.arg})" if self.k == 1 else f"f^{self.k}({self.arg})"


@dataclass(frozen=True)
class Op:
    inverse: bool
    left: object
    right: object

    def __str__(self):
        def wrap(t):
            return f"({t})" if isinstance(t, Op) else str(t)
        # left association means only a compound right operand needs parentheses
        lhs = str(self.left)
        return f"{lhs} {'>>' if self.inverse else '>'} {wrap(self.right)}"


@dataclass(frozen=True)
class Equation:
    lhs: object
    rhs: object

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class EquationSystem:
    variables: tuple[str, ...]
    equations: tuple[Equation, ...]

    def __str__(self):
        lines = [f"vars: {' '.join(self.variables)}"]
        lines += [str(e) for e in self.equations]
        return "\n".join(lines)


def _tokens(text: str, line_no: int):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise EquationError(f"line {line_no}: unexpected {text[pos:].strip()[:10]!r}")
        kinds = (">>", ">", "^", "(", ")", "num", "name", "=")
        for kind, g in zip(kinds, m.groups()):
            if g is not None:
                out.append((kind, g))
                break
        pos = m.end()
    return out


class _Parser:
    def __init__(self, toks, line_no):
        self.toks = toks
        self.i = 0
        self.line_no = line_no

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            got = self.toks[self.i][1] if self.i < len(self.toks) else "end of line"
            raise EquationError(f"line {self.line_no}: expected {kind!r}, got {got!r}")
        tok = self.toks[self.i]
        self.i += 1
        return tok[1]

    def expr(self):
        node = self.atom()
        while self.peek() in (">", ">>"):
            inverse = self.take(self.peek()) in (">>", "▷̄")
            node = Op(inverse, node, self.atom())
        return node

    def atom(self):
        kind = self.peek()
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "name":
            name = self.take("name")
            if name == "f" and self.peek() in ("(", "^"):
                k = 1
                if self.peek() == "^":
                    self.take("^")
                    k = int(self.take("num"))
                self.take("(")
                arg = self.expr()
                self.take(")")
                return FPow(k, arg) if k else arg
            return Var(name)
        got = self.toks[self.i][1] if self.i < len(self.toks) else "end of line"
        raise EquationError(f"line {self.line_no}: expected a term, got {got!r}")


def _variables(term, acc):
    if isinstance(term, Var):
        if term.name not in acc:
            acc.append(term.name)
    elif isinstance(term, FPow):
        _variables(term.arg, acc)
    else:
        _variables(term.left, acc)
        _variables(term.right, acc)
    return acc


def parse_equations(text: str) -> EquationSystem:
    declared = None
    equations = []
    seen: list[str] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if declared is not None:
                raise EquationError(f"line {line_no}: variables declared twice")
            declared = line[len("vars:"):].replace(",", " ").split()
            if len(set(declared)) != len(declared):
                raise EquationError(f"line {line_no}: repeated variable in declaration")
            continue
        p = _Parser(_tokens(line, line_no), line_no)
        lhs = p.expr()
        p.take("=")
        rhs = p.expr()
        if p.peek() is not None:
            raise EquationError(f"line {line_no}: trailing input after equation")
        eq = Equation(lhs, rhs)
        _variables(rhs, _variables(lhs, seen))
        equations.append(eq)
    if declared is not None:
        unbound = [v for v in seen if v not in declared]
        if unbound:
            raise EquationError(f"unbound variable(s): {', '.join(unbound)}")
        variables = tuple(declared)
    else:
        variables = tuple(seen)
    return EquationSystem(variables, tuple(equations))


def _evaluate(term, env, lr):
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, FPow):
        v = _evaluate(term.arg, env, lr)
        for _ in range(term.k):
            v = lr.f[v - 1]
        return v
    a = _evaluate(term.left, env, lr)
    b = _evaluate(term.right, env, lr)
    return lr.rack.inv(a, b) if term.inverse else lr.rack.op(a, b)


@dataclass(frozen=True)
class EquationCount:
    count: int
    witnesses: tuple[dict, ...] | None


def count_for_equations(system, lr, witnesses: bool = False) -> EquationCount:
    """Count assignments of rack elements to variables satisfying every equation.

    Plain product enumeration in variable order; an equation is tested as
    soon as its last variable is assigned.
    """
    if isinstance(system, str):
        system = parse_equations(system)
    variables = system.variables
    pos = {v: i for i, v in enumerate(variables)}
    ready: list[list[Equation]] = [[] for _ in variables]
    always = []
    for eq in system.equations:
        used = _variables(eq.rhs, _variables(eq.lhs, []))
        for v in used:
            if v not in pos:
                raise EquationError(f"unbound variable {v}")
        if used:
            ready[max(pos[v] for v in used)].append(eq)
        else:
            always.append(eq)
    n = lr.n
    if any(_evaluate(e.lhs, {}, lr) != _evaluate(e.rhs, {}, lr) for e in always):
        return EquationCount(0, () if witnesses else None)

    found = []
    count = 0
    env: dict[str, int] = {}

    def extend(i):
        nonlocal count
        if i == len(variables):
            count += 1
            if witnesses:
                found.append(dict(env))
            return
        for value in range(1, n + 1):
            env[variables[i]] = value
            if all(_evaluate(e.lhs, env, lr) == _evaluate(e.rhs, env, lr) for e in ready[i]):
                extend(i + 1)
        del env[variables[i]]

    extend(0)
    return EquationCount(count, tuple(found) if witnesses else None)


def brute_force_count(system, lr) -> int:
    """Unpruned product count; used as a check on the pruned search."""
    if isinstance(system, str):
        system = parse_equations(system)
    total = 0
    for values in product(range(1, lr.n + 1), repeat=len(system.variables)):
        env = dict(zip(system.variables, values))
        if all(_evaluate(e.lhs, env, lr) == _evaluate(e.rhs, env, lr) for e in system.equations):
            total += 1
    return total
