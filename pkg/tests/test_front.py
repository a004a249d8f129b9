import json

import pytest

from legrack.builtins import BUILTINS
from legrack.equations import FPow, Op, Var
from legrack.errors import DiagramError, DiagramSyntaxError
from legrack.front import (LR, RL, Event, MorseWord, classical_invariants, format_word, load,
                           parse, reverse_orientation, rotation_number, stabilize, validate)


# parse

def test_parse_minimal_words():
    assert parse("L1 R1").events == (Event("L", 1), Event("R", 1))
    assert len(parse("L1 L2 R1 R1").events) == 4
    assert len(parse("L1 X1 R1").events) == 3


def test_level_zero_is_rejected_with_position():
    with pytest.raises(DiagramSyntaxError) as info:
        parse("L0 R1")
    assert info.value.position == 0


def test_unknown_token_position():
    with pytest.raises(DiagramSyntaxError) as info:
        parse("L1 Q2 R1")
    assert info.value.position == 3


def test_position_counts_across_lines():
    with pytest.raises(DiagramSyntaxError) as info:
        parse("L1 # open\nR1 Z")
    assert info.value.position == len("L1 # open\n") + 3


def test_directives_must_trail():
    with pytest.raises(DiagramSyntaxError):
        parse("L1 o1=d R1")
    with pytest.raises(DiagramSyntaxError):
        parse("L1 R1 o1=d o1=u")
    with pytest.raises(DiagramSyntaxError):
        parse("L1 R1 o0=u")


def test_comments_and_whitespace_normalize():
    word = parse("  L1\tL2   # zigzag\n R1 R1\n o1=d # orient\n")
    assert format_word(word) == "L1 L2 R1 R1 o1=d"
    assert str(word) == "L1 L2 R1 R1 o1=d"


# validate

def test_unknot_structure():
    d = load("L1 R1")
    assert len(d.components) == 1 and len(d.cusps) == 2 and not d.crossings
    assert len(d.arcs) == 2


def test_stabilized_unknot_structure():
    d = load("L1 L2 R1 R1")
    assert len(d.components) == 1 and len(d.cusps) == 4 and not d.crossings


def test_right_handed_trefoil_front():
    d = load("L1 L3 X2 X2 X2 R1 R1")
    assert len(d.components) == 1 and len(d.cusps) == 4 and len(d.crossings) == 3
    inv = classical_invariants(d)
    assert inv.writhe == 3 and inv.tb == 1 and inv.rot == 0


def test_single_kink_unknot():
    d = load("L1 X1 R1")
    inv = classical_invariants(d)
    assert len(d.components) == 1
    assert inv.tb == -2 and abs(inv.rot) == 1


@pytest.mark.parametrize("text", ["R1", "L3", "X1", "L1 X2 R1", "L1 L2 R4 R1", "L1 R2"])
def test_bookkeeping_violations(text):
    with pytest.raises(DiagramError):
        load(text)


def test_bookkeeping_error_names_event():
    with pytest.raises(DiagramError) as info:
        load("L1 L2 R1 R1 R1")
    assert info.value.event == 4


def test_open_strands_rejected():
    with pytest.raises(DiagramError):
        load("L1")
    with pytest.raises(DiagramError):
        load("L1 L1 R1")


def test_directive_index_out_of_range():
    with pytest.raises(DiagramError):
        load("L1 R1 o2=u")


def test_over_strand_moves_down():
    # in L1 L3 X2 the strands at positions 2 and 3 cross; the one at 2 (arc 1,
    # lower strand of the first cusp) moves down and is the over strand
    d = load("L1 L3 X2 R1 R1")
    x = d.crossings[0]
    assert x.over == 1
    assert {x.under_in, x.under_out} == {2, 4}


def test_over_strand_rule_on_builtins():
    for b in BUILTINS.values():
        d = b.diagram()
        for x in d.crossings:
            over = d.arcs[x.over]
            assert over.end_event != x.event            # the over strand passes through
            under_ids = {x.under_in, x.under_out}
            ended = [a for a in d.arcs if a.end_event == x.event]
            assert [a.id for a in ended] and ended[0].id in under_ids


def successor_map(d):
    succ = {}
    for c in d.cusps:
        succ[c.incoming] = c.outgoing
    for x in d.crossings:
        succ[x.under_in] = x.under_out
    return succ


@pytest.mark.parametrize("name", list(BUILTINS))
def test_traversal_is_a_partition_into_cycles(name):
    d = BUILTINS[name].diagram()
    succ = successor_map(d)
    assert sorted(succ) == list(range(len(d.arcs)))
    assert sorted(succ.values()) == list(range(len(d.arcs)))
    covered = []
    for comp in d.components:
        covered.extend(comp)
        for a, b in zip(comp, comp[1:] + comp[:1]):
            assert succ[a] == b
    assert sorted(covered) == list(range(len(d.arcs)))


def test_orientation_default_exits_upper_strand():
    d = load("L1 R1")
    first = d.cusps[0]
    assert first.outgoing == first.upper
    assert d.arcs[first.upper].direction == LR
    d = load("L1 R1 o1=d")
    assert d.cusps[0].outgoing == d.cusps[0].lower
    assert d.arcs[d.cusps[0].upper].direction == RL


def test_conflicting_directives_rejected():
    valid = []
    for a in "ud":
        for b in "ud":
            try:
                load(f"L1 L2 R1 R1 o1={a} o2={b}")
                valid.append(a + b)
            except DiagramError:
                pass
    assert len(valid) == 2
    assert {v[0] for v in valid} == {"u", "d"}


def test_two_component_link():
    d = load("L1 L3 R3 R1")
    assert len(d.components) == 2
    with pytest.raises(DiagramError):
        rotation_number(d)
    inv = classical_invariants(d)
    assert inv.rot is None and inv.tb == -2


def test_empty_diagram():
    d = validate(parse(""))
    assert d.is_empty
    with pytest.raises(DiagramError):
        classical_invariants(d)


def test_invariant_counts_are_consistent():
    for b in BUILTINS.values():
        inv = classical_invariants(b.diagram())
        assert inv.left_cusps + inv.right_cusps == inv.up_cusps + inv.down_cusps


def test_builtin_invariants():
    inv = classical_invariants(BUILTINS["unknot"].diagram())
    assert (inv.tb, inv.rot) == (-1, 0)
    inv = classical_invariants(BUILTINS["unknot_s_plus"].diagram())
    assert inv.tb == -2 and abs(inv.rot) == 1
    assert classical_invariants(BUILTINS["trefoil_paper"].diagram()).tb == -6


def test_stabilizations_of_trefoil():
    base = classical_invariants(BUILTINS["trefoil_paper"].diagram())
    minus = classical_invariants(BUILTINS["trefoil_s_minus"].diagram())
    plus = classical_invariants(BUILTINS["trefoil_s_plus"].diagram())
    assert minus.tb == plus.tb == base.tb - 1
    assert minus.rot == base.rot - 1 and plus.rot == base.rot + 1


def test_export_has_stable_ids():
    d = BUILTINS["trefoil_paper"].diagram()
    data = json.loads(json.dumps(d.to_dict()))
    assert [a["id"] for a in data["arcs"]] == list(range(len(d.arcs)))
    assert [c["id"] for c in data["cusps"]] == list(range(len(d.cusps)))
    assert data["word"] == BUILTINS["trefoil_paper"].word
    assert d.to_dict() == BUILTINS["trefoil_paper"].diagram().to_dict()


# stabilization

def test_stabilize_adds_two_cusps_and_keeps_components():
    for b in BUILTINS.values():
        d = b.diagram()
        for arc in range(len(d.arcs)):
            for sign in "+-":
                s = stabilize(d, sign, arc)
                assert len(s.cusps) == len(d.cusps) + 2
                assert len(s.components) == len(d.components)
                assert len(s.crossings) == len(d.crossings)


def test_stabilize_changes_classical_invariants():
    d = load("L1 R1")
    for arc in range(2):
        plus = classical_invariants(stabilize(d, "+", arc))
        minus = classical_invariants(stabilize(d, "-", arc))
        assert (plus.tb, plus.rot) == (-2, 1)
        assert (minus.tb, minus.rot) == (-2, -1)


def test_opposite_stabilizations_cancel_rot():
    for b in BUILTINS.values():
        d = b.diagram()
        base = classical_invariants(d)
        both = classical_invariants(stabilize(stabilize(d, "+", 0), "-", 0))
        assert both.tb == base.tb - 2 and both.rot == base.rot


def test_stabilize_errors():
    d = load("L1 R1")
    with pytest.raises(DiagramError):
        stabilize(d, "+", 5)
    with pytest.raises(ValueError):
        stabilize(d, "*", 0)


def test_stabilize_renumbers_later_directives():
    d = load("L1 L3 R3 R1 o1=u o2=d")
    s = stabilize(d, "+", 0)
    assert format_word(s.word) == "L1 L2 R1 L3 R3 R1 o1=u o3=d"
    assert len(s.components[0]) == len(d.components[0]) + 2
    # the untouched component keeps its orientation
    before = [d.arcs[a].direction for a in d.components[1]]
    after = [s.arcs[a].direction for a in s.components[1]]
    assert before == after


def test_reverse_orientation_negates_rot():
    for b in BUILTINS.values():
        d = b.diagram()
        r = validate(reverse_orientation(d.word))
        a, z = classical_invariants(d), classical_invariants(r)
        assert z.tb == a.tb
        if a.rot is not None:
            assert z.rot == -a.rot


# counts of cusps and crossings against the printed systems

def _max_powers(term, acc):
    if isinstance(term, Var):
        acc.setdefault(term.name, 0)
    elif isinstance(term, FPow) and isinstance(term.arg, Var):
        acc[term.arg.name] = max(acc.get(term.arg.name, 0), term.k)
    elif isinstance(term, FPow):
        _max_powers(term.arg, acc)
    else:
        _max_powers(term.left, acc)
        _max_powers(term.right, acc)
    return acc


def _has_op(term):
    if isinstance(term, Op):
        return True
    if isinstance(term, FPow):
        return _has_op(term.arg)
    return False


@pytest.mark.parametrize("name", list(BUILTINS))
def test_cusp_and_crossing_counts_match_printed_system(name):
    b = BUILTINS[name]
    d, system = b.diagram(), b.system()
    powers = {}
    for eq in system.equations:
        _max_powers(eq.lhs, powers)
        _max_powers(eq.rhs, powers)
    assert len(d.cusps) == sum(powers.values())
    assert len(d.crossings) == sum(1 for eq in system.equations if _has_op(eq.lhs) or _has_op(eq.rhs))


def test_word_is_hashable_value():
    assert parse("L1 R1") == MorseWord((Event("L", 1), Event("R", 1)))
