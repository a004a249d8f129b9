from itertools import product

import pytest

from legrack.errors import TSRackError
from legrack.legendrian import check_axioms
from legrack.racks import alexander_quandle, is_quandle, validate_rack
from legrack.ts_rack import (AffineMap, TSRackSpec, active_conditions, affine_legendrian_search,
                             build_ts_rack, cross_validate_affine, search_result, signed,
                             valid_specs)

from oracles import brute_legendrian_maps


def pairs(spec):
    return [(m.a, m.b) for m in affine_legendrian_search(spec)]


def residue_oracle(n, t, s):
    """Affine maps checked against the axioms directly on residues mod n."""
    def op(x, y):
        return (t * x + s * y) % n
    out = []
    for a, b in product(range(n), repeat=2):
        def f(x):
            return (a * x + b) % n
        ok = all(f(f(op(x, x))) == x and op(f(f(x)), x) == x for x in range(n))
        ok = ok and all(f(op(x, y)) == op(f(x), y) and op(x, f(y)) == op(x, y)
                        for x in range(n) for y in range(n))
        if ok:
            out.append((a, b))
    return out


def test_spec_validation():
    assert TSRackSpec(8, 3, -2).s == 6
    with pytest.raises(TSRackError):
        TSRackSpec(8, 2, 0)          # t not a unit
    with pytest.raises(TSRackError):
        TSRackSpec(8, 3, 1)          # s^2 != (1-t)s
    with pytest.raises(TSRackError):
        TSRackSpec(0, 1, 0)


def test_z8_rack_is_an_alexander_quandle():
    spec = TSRackSpec(8, 3, 6)
    r = build_ts_rack(spec)
    assert validate_rack(r.table).ok
    assert spec.is_quandle and is_quandle(r)
    assert r.table == alexander_quandle(8, 3).table
    assert spec.describe() == "x▷y = 3x - 2y (mod 8)"


def test_alexander_special_case():
    spec = TSRackSpec(3, 2, 2)
    assert spec.is_quandle
    assert build_ts_rack(spec).table == alexander_quandle(3, 2).table


def test_z49_rack():
    spec = TSRackSpec(49, 2, 0)
    r = build_ts_rack(spec)
    assert validate_rack(r.table).ok and not is_quandle(r)
    assert spec.describe() == "x▷y = 2x (mod 49)"


def test_z8_solutions():
    assert pairs(TSRackSpec(8, 3, 6)) == [(1, 0), (1, 4), (5, 0), (5, 4)]


def test_z10_solutions():
    # the table is an Alexander quandle (t + s = 1 mod 10), so the identity qualifies too
    spec = TSRackSpec(10, 3, 8)
    assert spec.is_quandle
    assert pairs(spec) == [(1, 0), (1, 5)]
    assert (1, 5) in pairs(spec)
    assert pairs(spec) == residue_oracle(10, 3, 8)


def test_z4_solutions():
    got = pairs(TSRackSpec(4, 3, 2))
    assert (3, 0) in got
    assert got == [(1, 0), (1, 2), (3, 0), (3, 2)]


def test_z49_solutions():
    got = pairs(TSRackSpec(49, 2, 0))
    assert (5, 0) in got
    assert got == [(5, 0), (44, 0)]
    assert got == residue_oracle(49, 2, 0)


@pytest.mark.parametrize("n,t,s", [(8, 3, 6), (4, 3, 2), (2, 1, 0), (10, 3, 8), (6, 5, 2)])
def test_cross_validation(n, t, s):
    assert cross_validate_affine(TSRackSpec(n, t, s))


def test_closed_form_matches_literal_oracle_small():
    for n in range(1, 7):
        for spec in valid_specs(n):
            rack = build_ts_rack(spec)
            full = set(brute_legendrian_maps(rack.table))
            affine = [(a, b) for a, b in product(range(n), repeat=2)
                      if AffineMap(a, b).images(n) in full]
            assert pairs(spec) == affine


def test_every_accepted_map_passes_the_table_check():
    for n in range(1, 13):
        for spec in valid_specs(n):
            rack = build_ts_rack(spec)
            assert validate_rack(rack.table).ok
            for m in affine_legendrian_search(spec):
                assert check_axioms(rack, m.images(n)).ok


def test_valid_specs_are_exactly_the_valid_pairs():
    for n in range(1, 10):
        listed = {(s.t, s.s) for s in valid_specs(n)}
        for t, s in product(range(n), repeat=2):
            try:
                TSRackSpec(n, t, s)
                assert (t, s) in listed
            except TSRackError:
                assert (t, s) not in listed


def test_active_conditions_reported():
    assert active_conditions(TSRackSpec(8, 3, 6)) == ["(1-a)s=0"]
    res = search_result(TSRackSpec(8, 3, 6))
    assert res["n"] == 8 and res["t"] == 3 and res["s"] == 6
    assert res["solutions"] == [[1, 0], [1, 4], [5, 0], [5, 4]]


def test_signed_residues():
    assert signed(6, 8) == -2
    assert signed(4, 8) == 4
    assert signed(0, 5) == 0


def test_affine_map_text():
    assert AffineMap(5, 4).describe(8) == "f(x) = 5x + 4"
    assert AffineMap(3, 0).describe(4) == "f(x) = 3x"
    assert AffineMap(1, 7).describe(8) == "f(x) = x - 1"
    assert AffineMap(0, 3).describe(8) == "f(x) = 3"
