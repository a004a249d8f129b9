import pytest

from legrack.equations import (FPow, Op, Var, brute_force_count, count_for_equations,
                               parse_equations)
from legrack.errors import EquationError
from legrack.legendrian import LegendrianRack, census_structures
from legrack.perms import Permutation
from legrack.racks import FiniteRack, constant_action_rack, trivial_quandle


def shift3():
    return LegendrianRack(constant_action_rack(Permutation.from_cycles("(123)", 3)), (2, 3, 1))


def test_parse_terms():
    system = parse_equations("x > f(y) = f^2(z)\nz >> x = y")
    assert system.variables == ("x", "y", "z")
    eq = system.equations[0]
    assert eq.lhs == Op(False, Var("x"), FPow(1, Var("y")))
    assert eq.rhs == FPow(2, Var("z"))
    assert system.equations[1].lhs == Op(True, Var("z"), Var("x"))


def test_operators_associate_left():
    system = parse_equations("a > b > c = d")
    assert system.equations[0].lhs == Op(False, Op(False, Var("a"), Var("b")), Var("c"))
    assert str(system.equations[0]) == "a > b > c = d"


def test_unicode_operators_and_comments():
    a = parse_equations("x ▷ y = z  # crossing\nx ▷̄ y = z")
    b = parse_equations("x > y = z\nx >> y = z")
    assert a == b


def test_declared_variables_and_unbound_error():
    system = parse_equations("vars: x y z\nf^2(x) = x")
    assert system.variables == ("x", "y", "z")
    with pytest.raises(EquationError):
        parse_equations("vars: x\nx > y = x")


@pytest.mark.parametrize("bad", ["x = ", "x > = y", "f^(x) = x", "x = y = z", "x $ y = z"])
def test_malformed_equations(bad):
    with pytest.raises(EquationError):
        parse_equations(bad)


def test_print_parse_round_trip():
    text = "vars: x y z\nx > f(y) = f^2(z)\ny >> (z > x) = f^4(x)"
    system = parse_equations(text)
    assert parse_equations(str(system)) == system


def test_unknot_condition_over_trivial_quandle():
    lr = LegendrianRack(trivial_quandle(3), (2, 1, 3))
    assert count_for_equations("f^2(x) = x", lr).count == 3


def test_trefoil_system_has_printed_witness():
    text = "x > f(y) = f^2(z)\ny > f(z) = f^2(x)\nz > f(x) = f^2(y)"
    report = count_for_equations(text, shift3(), witnesses=True)
    assert {"x": 1, "y": 2, "z": 3} in list(report.witnesses)


def test_empty_system_counts_all_assignments():
    for n in (1, 2, 3, 4):
        lr = LegendrianRack(trivial_quandle(n), tuple(range(1, n + 1)))
        for k in range(4):
            names = " ".join(f"v{i}" for i in range(k))
            assert count_for_equations(f"vars: {names}", lr).count == n ** k


def test_constant_equations():
    lr = LegendrianRack(trivial_quandle(2), (1, 2))
    assert count_for_equations("vars: x", lr).count == 2


def test_pruned_count_matches_unpruned():
    text = "x > f(y) = f^2(z)\ny >> f(z) = f^4(x)\nz > f^3(x) = f^2(y)"
    for lr in census_structures(3):
        assert count_for_equations(text, lr).count == brute_force_count(text, lr)


def test_non_bijective_f_in_equations():
    # equations only apply f forward, so any self-map can be used
    lr = LegendrianRack.unchecked(FiniteRack(((1, 1), (2, 2))), (1, 1))
    assert count_for_equations("f(x) = x", lr).count == 1
