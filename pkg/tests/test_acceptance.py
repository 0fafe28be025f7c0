"""Acceptance suite: one test per criterion, exact values, zero tolerance.

Each test prints a PASS line on success (run with -s to see them).
"""

import json
import random
from fractions import Fraction

import pytest

from hsym import (
    SimpleType,
    Weight,
    build,
    bundle_report_from_json,
    classification_table_contains,
    freudenthal_dim,
    fundamental_weight,
    hermitian_space,
    hermitian_table,
    is_hermitian,
    j_general,
    j_hom,
    levi,
    maximal_parabolic,
    minimize_j,
    table_equivalent_node,
    weyl_dim_g,
    weyl_dim_levi,
)
from hsym.cli import main

from oracles import orthonormal_positive_roots

ALL_TYPES_RANK8 = (
    [("A", l) for l in range(1, 9)]
    + [("B", l) for l in range(2, 9)]
    + [("C", l) for l in range(2, 9)]
    + [("D", l) for l in range(3, 9)]
    + [("E", l) for l in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)


def classical_instances():
    """(space, designated weight) pairs of criterion 1."""
    out = []
    for n in range(2, 9):  # Grassmannians, lambda = w1
        for k in range(1, n):
            out.append((hermitian_space(SimpleType("A", n - 1), k),
                        fundamental_weight(n - 1, 1)))
    for n in range(2, 7):  # odd quadrics, lambda = w_n
        out.append((hermitian_space(SimpleType("B", n), 1), fundamental_weight(n, n)))
    for n in range(3, 7):  # even quadrics, lambda = w_n
        out.append((hermitian_space(SimpleType("D", n), 1), fundamental_weight(n, n)))
    for n in range(2, 7):  # Lagrangian Grassmannians, lambda = w1
        out.append((hermitian_space(SimpleType("C", n), n), fundamental_weight(n, 1)))
    for n in range(4, 8):  # spinor varieties, lambda = w1
        out.append((hermitian_space(SimpleType("D", n), n), fundamental_weight(n, 1)))
    return out


def test_criterion_1_classical_sharpness():
    for space, lam in classical_instances():
        rep = j_hom(space, lam)
        assert rep.j_value == 2, (space, lam)
    print("PASS criterion 1: J = 2 exactly on all classical family instances")


def test_criterion_2_exceptional_values():
    e6 = hermitian_space(SimpleType("E", 6), 1)
    e7 = hermitian_space(SimpleType("E", 7), 7)
    assert j_hom(e6, fundamental_weight(6, 6)).j_value == Fraction(36, 17)
    assert j_hom(e6, fundamental_weight(6, 2)).j_value == Fraction(78, 31)
    assert j_hom(e7, fundamental_weight(7, 1)).j_value == Fraction(133, 53)
    print("PASS criterion 2: exceptional values 36/17, 78/31, 133/53 exact")


def test_criterion_3_search_optima():
    out6 = minimize_j(hermitian_space(SimpleType("E", 6), 1))
    assert out6.best_j == Fraction(36, 17)
    assert out6.minimizers == (fundamental_weight(6, 6),)
    out7 = minimize_j(hermitian_space(SimpleType("E", 7), 7))
    assert out7.best_j == Fraction(133, 53)
    assert out7.minimizers == (fundamental_weight(7, 1),)
    # certificate: unexamined dominant weights have pruning bound >= best_j
    for out, space in [(out6, out6.space), (out7, out7.space)]:
        rs = build(space.ambient)
        k = space.node
        for w in out.minimizers:
            assert 2 * rs.xi(w, k) < out.pruning_bound_used + 1  # examined region nonempty
            assert j_hom(space, w).j_value == out.best_j
    for space, _ in classical_instances():
        assert minimize_j(space).best_j == 2, space
    print("PASS criterion 3: search optima with pruning certificates")


def test_criterion_4_pruning_vectors():
    e6 = build(SimpleType("E", 6))
    assert [2 * e6.xi(fundamental_weight(6, i), 1) for i in range(1, 7)] == [
        Fraction(8, 3), 2, Fraction(10, 3), 4, Fraction(8, 3), Fraction(4, 3)
    ]
    e7 = build(SimpleType("E", 7))
    assert [2 * e7.xi(fundamental_weight(7, i), 7) for i in range(1, 8)] == [
        2, 3, 4, 6, 5, 4, 3
    ]
    print("PASS criterion 4: pruning coefficient vectors match the displayed linear forms")


def test_criterion_5_dimension_identities():
    for n in range(2, 7):
        rs = build(SimpleType("B", n))
        spin = fundamental_weight(n, n)
        assert weyl_dim_g(rs, spin).value == 2 ** n
        ld = levi(rs, maximal_parabolic(rs.simple_type, 1))
        assert weyl_dim_levi(rs, ld, spin).value == 2 ** (n - 1)
    for n in range(2, 7):
        rs = build(SimpleType("C", n))
        ld = levi(rs, maximal_parabolic(rs.simple_type, n))
        assert weyl_dim_levi(rs, ld, fundamental_weight(n, 1)).value == n
    for e in hermitian_table(7):
        rs = build(e.ambient)
        ld = levi(rs, maximal_parabolic(e.ambient, e.node))
        lam_ad = rs.highest_root_fw()
        assert weyl_dim_levi(rs, ld, lam_ad).value == ld.dim_x, e
    print("PASS criterion 5: dimension identities (spin, standard, dim X = dim V_ad)")


def test_criterion_6_oracle_equivalence():
    for letter, rank in ALL_TYPES_RANK8:
        if rank <= 6:
            rs = build(SimpleType(letter, rank))
            for i in range(1, rank + 1):
                lam = fundamental_weight(rank, i)
                assert freudenthal_dim(rs, lam).value == weyl_dim_g(rs, lam).value
    rng = random.Random(1729)
    types = [("A", l) for l in range(1, 5)] + [("B", l) for l in range(2, 5)] \
        + [("C", l) for l in range(2, 5)] + [("D", 3), ("D", 4)]
    done = 0
    while done < 25:
        letter, rank = rng.choice(types)
        rs = build(SimpleType(letter, rank))
        lam = Weight(tuple(rng.randint(0, 2) for _ in range(rank)))
        if lam.is_zero() or weyl_dim_g(rs, lam).value > 100_000:
            continue
        assert freudenthal_dim(rs, lam).value == weyl_dim_g(rs, lam).value
        done += 1
    for letter, rank in ALL_TYPES_RANK8:
        rs = build(SimpleType(letter, rank))
        assert {r.coeffs for r in rs.positive_roots} == orthonormal_positive_roots(letter, rank)
    print("PASS criterion 6: Freudenthal and orthonormal-coordinate oracles agree")


def test_criterion_7_classification():
    table = hermitian_table(8)
    keys = {(e.ambient, e.node) for e in table}
    expected = set()
    for l in range(1, 9):
        for k in range(1, l + 1):
            expected.add((SimpleType("A", l), k))
    expected |= {(SimpleType("B", n), 1) for n in range(2, 9)}
    expected |= {(SimpleType("D", n), 1) for n in range(3, 9)}
    expected |= {(SimpleType("D", n), n) for n in range(4, 9)}
    expected |= {(SimpleType("C", n), n) for n in range(2, 9)}
    expected |= {(SimpleType("E", 6), 1), (SimpleType("E", 7), 7)}
    assert keys == expected
    for letter, rank in ALL_TYPES_RANK8:
        stype = SimpleType(letter, rank)
        rs = build(stype)
        for k in range(1, rank + 1):
            assert is_hermitian(rs, k) == classification_table_contains(stype, k), (stype, k)
    for e in table:
        rs = build(e.ambient)
        assert rs.xi(rs.highest_root_fw(), e.node) == 1
    print("PASS criterion 7: classification table, cominuscule test and agreement")


def test_criterion_8_formula_cross_check():
    instances = classical_instances() + [
        (hermitian_space(SimpleType("E", 6), 1), fundamental_weight(6, 6)),
        (hermitian_space(SimpleType("E", 6), 1), fundamental_weight(6, 2)),
        (hermitian_space(SimpleType("E", 7), 7), fundamental_weight(7, 1)),
    ]
    for space, lam in instances:
        rs = build(space.ambient)
        rep = j_hom(space, lam)
        ld = levi(rs, maximal_parabolic(space.ambient, space.node))
        m = ld.dim_x
        deg_ratio = Fraction(rep.rank, m) * rep.xi_k_lam / rep.xi_k_ad
        assert j_general(m, rep.h0, rep.rank, deg_ratio, 1) == rep.j_value, (space, lam)
    print("PASS criterion 8: general formula reproduces the homogeneous closed form")


def test_criterion_9_invariant_suite(capsys):
    rng = random.Random(4242)
    table = hermitian_table(7)
    checked = 0
    while checked < 200:
        e = rng.choice(table)
        rank = e.ambient.rank
        lam = Weight(tuple(rng.randint(0, 3) for _ in range(rank)))
        if lam.is_zero():
            continue
        rep = j_hom(e, lam)
        assert rep.j_value >= 2 * rep.xi_k_lam / rep.xi_k_ad
        checked += 1
    for letter, rank in ALL_TYPES_RANK8:
        rs = build(SimpleType(letter, rank))
        assert all(x > 0 for row in rs.cartan_inverse for x in row)
    rep = j_hom(hermitian_space(SimpleType("E", 7), 7), fundamental_weight(7, 1))
    assert bundle_report_from_json(json.loads(json.dumps(rep.to_json()))) == rep
    assert main(["reproduce-paper"]) == 0
    out1 = capsys.readouterr().out
    assert main(["reproduce-paper"]) == 0
    out2 = capsys.readouterr().out
    assert out1 == out2 and "133/53" in out1
    print("PASS criterion 9: pruning inequality, positivity, JSON round-trip, determinism")
