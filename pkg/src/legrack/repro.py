"""Recompute every published example as plain JSON-ready data, keyed by name."""
from __future__ import annotations

from .builtins import BUILTINS, ORDER3_TABLE, ORDER4_TABLE
from .coloring import count_colorings, distinguish
from .equations import count_for_equations
from .legendrian import (LegendrianRack, census, check_axioms, enumerate_legendrian_maps,
                         find_entry, is_legendrian_homomorphism)
from .perms import Permutation
from .racks import FiniteRack, alexander_quandle, constant_action_rack, is_quandle
from .ts_rack import AffineMap, TSRackSpec, build_ts_rack, cross_validate_affine, search_result


def _census_payload(n: int) -> dict:
    entries = census(n)
    return {"n": n, "classes": len(entries),
            "nonempty": sum(1 for e in entries if e.maps),
            "map_set_sizes": sorted((len(e.maps) for e in entries), reverse=True),
            "entries": [e.to_dict() for e in entries]}


def _printed_tables() -> list[dict]:
    out = []
    for n, rows in ((3, ORDER3_TABLE), (4, ORDER4_TABLE)):
        entries = census(n)
        for table, printed in rows:
            rack = FiniteRack(table)
            computed = sorted(str(m) for m in enumerate_legendrian_maps(rack))
            entry = find_entry(entries, rack)
            out.append({"table": [list(r) for r in table], "quandle": is_quandle(rack),
                        "printed_maps": sorted(printed), "computed_maps": computed,
                        "agrees": sorted(printed) == computed,
                        "census_class_size": len(entry.maps)})
    return out


def _ts_examples() -> list[dict]:
    out = []
    for n, t, s in ((8, 3, 6), (10, 3, 8), (4, 3, 2), (49, 2, 0)):
        spec = TSRackSpec(n, t, s)
        res = search_result(spec)
        res["cross_validated"] = cross_validate_affine(spec)
        out.append(res)
    return out


def _z8_endomorphisms() -> dict:
    spec = TSRackSpec(8, 3, 6)
    lr = LegendrianRack(build_ts_rack(spec), AffineMap(5, 4).images(8))
    return {str(a): is_legendrian_homomorphism(lr, lr, AffineMap(a, a - 1).images(8))
            for a in range(8)}


def _shift(n: int) -> FiniteRack:
    return constant_action_rack(Permutation(tuple(x % n + 1 for x in range(1, n + 1))))


def _counts() -> dict:
    sigma = Permutation.from_cycles("(12)(34)", 4)
    nonq = constant_action_rack(sigma)
    f1 = LegendrianRack(nonq, Permutation.from_cycles("(1324)", 4).images)
    f2 = LegendrianRack(nonq, Permutation.from_cycles("(1423)", 4).images)
    shift3 = LegendrianRack(_shift(3), Permutation.from_cycles("(123)", 3).images)
    alex = LegendrianRack(alexander_quandle(3, 2), (1, 2, 3))

    def count(name, lr):
        return count_colorings(BUILTINS[name].diagram(), lr).count

    k2 = BUILTINS["k1_sum_k2"]
    report = count_colorings(k2.diagram(), f2, witnesses=True)
    target = {"x": 1, "z": 1, "u": 1, "y": 4, "v": 4, "w": 3}
    labels = k2.label_map()
    eq_witnesses = count_for_equations(k2.system(), f2, witnesses=True).witnesses
    return {
        "trefoil_alexander_3_2_identity": count("trefoil_paper", alex),
        "unknot_nonq_1324": count("unknot", f1),
        "unknot_s_plus_nonq_1324": count("unknot_s_plus", f1),
        "trefoil_s_minus_nonq_1324": count("trefoil_s_minus", f1),
        "k1_sum_k1_nonq_1423": count("k1_sum_k1", f2),
        "k1_sum_k2_nonq_1423": report.count,
        "k1_sum_k2_witness_in_diagram": any(
            all(w[labels[v]] == val for v, val in target.items()) for w in report.witnesses),
        "k1_sum_k2_witness_in_system": target in list(eq_witnesses),
        "trefoil_shift3_123": count("trefoil_paper", shift3),
        "trefoil_s_plus_shift3_123": count("trefoil_s_plus", shift3),
    }


def _distinctions() -> list[dict]:
    nonq = constant_action_rack(Permutation.from_cycles("(12)(34)", 4))
    f1 = LegendrianRack(nonq, Permutation.from_cycles("(1324)", 4).images)
    f2 = LegendrianRack(nonq, Permutation.from_cycles("(1423)", 4).images)
    shift3 = LegendrianRack(_shift(3), Permutation.from_cycles("(123)", 3).images)
    out = []
    for a, b, lr in (("unknot", "unknot_s_plus", f1), ("trefoil_paper", "trefoil_s_minus", f1),
                     ("trefoil_paper", "trefoil_s_plus", shift3), ("k1_sum_k1", "k1_sum_k2", f2)):
        res = distinguish(BUILTINS[a].diagram(), BUILTINS[b].diagram(), [lr]).to_dict()
        res.update({"name1": a, "name2": b})
        out.append(res)
    return out


def _counterexample() -> dict:
    rack = _shift(4)
    report = check_axioms(rack, tuple(x % 4 + 1 for x in range(1, 5)))
    return {"rack": rack.to_dict(), "f": "x+1", "report": report.to_dict(),
            "failed_axioms": [a.axiom for a in report.failures]}


def _builtin_invariants() -> dict:
    from .front import classical_invariants
    out = {}
    for name, b in BUILTINS.items():
        d = b.diagram()
        out[name] = {"word": b.word, "arcs": len(d.arcs), "cusps": len(d.cusps),
                     "crossings": len(d.crossings),
                     "invariants": classical_invariants(d).to_dict()}
    return out


def run_all() -> dict[str, object]:
    return {
        "census_order3": _census_payload(3),
        "census_order4": _census_payload(4),
        "printed_tables": _printed_tables(),
        "ts_examples": _ts_examples(),
        "z8_endomorphisms": _z8_endomorphisms(),
        "axiom_counterexample": _counterexample(),
        "coloring_counts": _counts(),
        "distinguishing_pairs": _distinctions(),
        "builtin_invariants": _builtin_invariants(),
    }
