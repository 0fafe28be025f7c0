import pytest

from hsym import (
    InvalidInput,
    Parabolic,
    SimpleType,
    Weight,
    build,
    build_named,
    fundamental_weight,
    is_dominant_for_g,
    is_dominant_for_parabolic,
    levi,
    maximal_parabolic,
)


def brute_dim_x(rs, sigma):
    # positive roots whose expression involves a crossed simple root
    return sum(
        1 for r in rs.positive_roots if any(r.coeffs[k - 1] for k in sigma)
    )


@pytest.mark.parametrize("n", range(2, 9))
def test_grassmannian_levi(n):
    rs = build(SimpleType("A", n - 1))
    for k in range(1, n):
        ld = levi(rs, maximal_parabolic(rs.simple_type, k))
        assert ld.dim_x == k * (n - k)
        assert ld.dim_x == brute_dim_x(rs, {k})
        expected = []
        if k - 1 >= 1:
            expected.append(SimpleType("A", k - 1))
        if n - k - 1 >= 1:
            expected.append(SimpleType("A", n - k - 1))
        assert sorted(t for t, _ in ld.components) == sorted(expected)


@pytest.mark.parametrize("n", range(2, 7))
def test_odd_quadric_levi(n):
    rs = build(SimpleType("B", n))
    ld = levi(rs, maximal_parabolic(rs.simple_type, 1))
    assert ld.dim_x == 2 * n - 1
    if n == 2:
        assert [t for t, _ in ld.components] == [SimpleType("A", 1)]
    else:
        assert [t for t, _ in ld.components] == [SimpleType("B", n - 1)]


def test_e6_levi_is_d5():
    rs = build_named("E6")
    ld = levi(rs, maximal_parabolic(rs.simple_type, 1))
    assert ld.dim_x == 16
    assert brute_dim_x(rs, {1}) == 16
    assert [t for t, _ in ld.components] == [SimpleType("D", 5)]


def test_e7_levi_is_e6():
    rs = build_named("E7")
    ld = levi(rs, maximal_parabolic(rs.simple_type, 7))
    assert [t for t, _ in ld.components] == [SimpleType("E", 6)]
    assert ld.dim_x == 27


def test_empty_sigma_rejected():
    with pytest.raises(InvalidInput):
        Parabolic(SimpleType("A", 2), frozenset())


def test_sigma_out_of_range():
    with pytest.raises(InvalidInput):
        Parabolic(SimpleType("A", 2), frozenset({3}))


def test_general_sigma():
    rs = build_named("A4")
    ld = levi(rs, Parabolic(rs.simple_type, frozenset({2, 4})))
    assert sorted(t for t, _ in ld.components) == [SimpleType("A", 1), SimpleType("A", 1)]
    assert ld.dim_x == brute_dim_x(rs, {2, 4})


def test_component_identification_round_trips():
    cases = [
        ("E7", {1}), ("E7", {2}), ("E8", {5}), ("F4", {1}), ("D6", {2}),
        ("B5", {3}), ("C5", {2}), ("E6", {4}),
    ]
    for name, sigma in cases:
        rs = build_named(name)
        ld = levi(rs, Parabolic(rs.simple_type, frozenset(sigma)))
        for stype, relabel in ld.components:
            comp_rs = build(stype)
            r = stype.rank
            for i in range(r):
                for j in range(r):
                    assert rs.cartan[relabel[i] - 1][relabel[j] - 1] == comp_rs.cartan[i][j]


def test_levi_roots_closed_under_addition():
    rs = build_named("D5")
    ld = levi(rs, maximal_parabolic(rs.simple_type, 2))
    levi_set = {r.coeffs for r in ld.levi_positive_roots}
    all_pos = {r.coeffs for r in rs.positive_roots}
    for a in levi_set:
        for b in levi_set:
            s = tuple(x + y for x, y in zip(a, b))
            if s in all_pos:
                assert s in levi_set


def test_dominance():
    p = maximal_parabolic(SimpleType("A", 2), 1)
    assert is_dominant_for_parabolic(Weight((-1, 1)), p)
    assert not is_dominant_for_g(Weight((-1, 1)))
    assert not is_dominant_for_parabolic(Weight((0, -1)), p)
    w6 = fundamental_weight(6, 6)
    assert is_dominant_for_parabolic(w6, maximal_parabolic(SimpleType("E", 6), 1))
    assert is_dominant_for_g(w6)


def test_ambient_mismatch():
    rs = build_named("A3")
    with pytest.raises(InvalidInput):
        levi(rs, maximal_parabolic(SimpleType("A", 4), 1))
