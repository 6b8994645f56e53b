"""Fixtures, validation, Euler characteristics and the named constructors."""

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bvhodge import (
    CharacterVector,
    CurveOrbit,
    EigenspaceDims,
    InvariantError,
    K3Config,
    PointOrbit,
    SubgroupFixedRecord,
    curve_character_dims,
    elliptic_fixture,
    euler_fixed_set,
    from_invariants_order2,
    from_invariants_order3,
    from_invariants_order4,
    from_invariants_order6,
    validate,
)

WORKED_ORDER4 = dict(r=11, m=3, k=2, a=1, b=3, n1=6, n2=0, g_D=1, D_type="first")


# --- elliptic fixtures ------------------------------------------------------

def test_fixture_point_counts():
    assert elliptic_fixture(2).point_count(2) == 4
    assert elliptic_fixture(3).point_count(3) == 3
    assert elliptic_fixture(4).point_count(4) == 2
    assert elliptic_fixture(4).point_count(2) == 4
    assert elliptic_fixture(6).point_count(6) == 1
    assert elliptic_fixture(6).point_count(3) == 3
    assert elliptic_fixture(6).point_count(2) == 4


def test_fixture_orbit_structures():
    assert elliptic_fixture(4).orbit_sizes(2) == (1, 1, 2)
    assert elliptic_fixture(6).orbit_sizes(3) == (1, 2)
    assert elliptic_fixture(6).orbit_sizes(2) == (1, 3)


def test_fixture_character_vectors():
    assert elliptic_fixture(2).char_vector(2) == CharacterVector(2, (4, 0))
    assert elliptic_fixture(4).char_vector(2) == CharacterVector(4, (3, 0, 1, 0))
    assert elliptic_fixture(6).char_vector(2) == CharacterVector(6, (2, 0, 1, 0, 1, 0))
    assert elliptic_fixture(6).char_vector(3) == CharacterVector(6, (2, 0, 0, 1, 0, 0))


def test_fixture_character_totals_match_point_counts():
    for n in (2, 3, 4, 6):
        fixture = elliptic_fixture(n)
        for d, sizes in fixture.orbits:
            vec = fixture.char_vector(d)
            assert vec.total() == sum(sizes) == fixture.point_count(d)
            # one character per orbit at each multiple of n/size
            for size in sizes:
                assert all(vec.c[t * (n // size)] >= 1 for t in range(size))


def test_fixture_rejects_unsupported_order():
    with pytest.raises(ValueError):
        elliptic_fixture(5)


# --- validation --------------------------------------------------------------

def test_validate_eigenspace_sum():
    cfg = K3Config(2, EigenspaceDims(2, (9, 12)), (SubgroupFixedRecord(2),))
    messages = [str(v) for v in validate(cfg)]
    assert any("sum to 22" in m for m in messages)


def test_validate_conjugate_symmetry():
    cfg = K3Config(4, EigenspaceDims(4, (10, 5, 4, 3)), ())
    assert any("conjugate symmetry" in str(v) for v in validate(cfg))


def test_validate_point_type_congruence():
    rec = SubgroupFixedRecord(4, points=(PointOrbit((1, 3)),))
    cfg = K3Config(4, EigenspaceDims(4, (12, 3, 4, 3)), (rec,))
    assert any("sum to" in str(v) for v in validate(cfg))


def test_validate_order4_worked_instance_clean():
    cfg = from_invariants_order4(**WORKED_ORDER4)
    assert validate(cfg, "closed_form") == []


def test_validate_order6_top_genus_bound():
    cfg = from_invariants_order6(r=2, m=4, l=1, k=1, N=1, a=0, b=0, n_prime=0,
                                 p25=0, p34=0, g_D=1, g_G=1, g_G_quot=1,
                                 g_F1=1, g_F1_quot=1, g_F2=0, g_F2_quot=0)
    bad = K3Config(6, cfg.eigenspace, (
        SubgroupFixedRecord(6, (CurveOrbit(genus=2),)),
        cfg.records[1], cfg.records[2],
    ))
    assert not any("at most 1" in str(v) for v in validate(bad, "engine"))
    assert any("at most 1" in str(v) for v in validate(bad, "closed_form"))


def test_validate_orbit_size_divisibility():
    rec = SubgroupFixedRecord(2, curves=(CurveOrbit(genus=0, orbit_size=3),))
    cfg = K3Config(4, EigenspaceDims(4, (12, 3, 4, 3)), (rec,))
    assert any("divisor" in str(v) for v in validate(cfg))


# --- euler_fixed_set ---------------------------------------------------------

def test_euler_fixed_set_worked_order4():
    cfg = from_invariants_order4(**WORKED_ORDER4)
    assert euler_fixed_set(cfg, 1) == 8    # genus-1 curve + rational + 6 points
    assert euler_fixed_set(cfg, 2) == 12   # 2 - 2g(D) + 2(N - 1) with N = 7
    assert euler_fixed_set(cfg, 0) == 24


def test_euler_fixed_set_empty_record():
    cfg = from_invariants_order2(10, [])
    assert euler_fixed_set(cfg, 1) == 0


def test_euler_fixed_set_depends_only_on_gcd():
    cfg = from_invariants_order6(r=2, m=4, l=1, k=1, N=1, a=0, b=0, n_prime=0,
                                 p25=0, p34=0, g_D=1, g_G=1, g_G_quot=1,
                                 g_F1=1, g_F1_quot=1, g_F2=0, g_F2_quot=0)
    for j in range(6):
        assert euler_fixed_set(cfg, j) == euler_fixed_set(cfg, gcd(j, 6))


# --- curve_character_dims -----------------------------------------------------

def test_curve_dims_pointwise_fixed():
    assert curve_character_dims(CurveOrbit(genus=1), 4) == CharacterVector(4, (1, 0, 0, 0))


def test_curve_dims_rational_is_zero():
    vec = curve_character_dims(CurveOrbit(genus=0, residual_order=2, quotient_genus=0), 4)
    assert vec == CharacterVector.zero(4)


def test_curve_dims_balanced_order3_split():
    curve = CurveOrbit(genus=3, residual_order=3, quotient_genus=1)
    assert curve_character_dims(curve, 6) == CharacterVector(6, (1, 0, 1, 0, 1, 0))


def test_curve_dims_odd_split_needs_override():
    curve = CurveOrbit(genus=2, residual_order=3, quotient_genus=1)
    with pytest.raises(ValueError):
        curve_character_dims(curve, 6)
    explicit = CurveOrbit(genus=2, residual_order=3, quotient_genus=1,
                          char_dims=(1, 0, 1, 0, 0, 0))
    assert curve_character_dims(explicit, 6) == CharacterVector(6, (1, 0, 1, 0, 0, 0))


def test_curve_dims_unsupported_residual_order():
    with pytest.raises(ValueError):
        curve_character_dims(CurveOrbit(genus=1, residual_order=4, quotient_genus=0), 4)


@given(st.tuples(st.integers(0, 5), st.integers(0, 5), st.sampled_from((1, 2, 3))))
def test_curve_dims_total_and_invariant_part(data):
    g_extra, gq, rho = data
    if rho == 1:
        g, gq = gq, gq  # a pointwise-fixed curve keeps its full genus
    else:
        g = gq + (2 * g_extra if rho == 3 else g_extra)
    curve = CurveOrbit(genus=g, residual_order=rho, quotient_genus=gq)
    vec = curve_character_dims(curve, 6)
    assert vec.total() == g
    assert vec.c[0] == gq


# --- constructors --------------------------------------------------------------

def test_order2_constructor_shapes():
    cfg = from_invariants_order2(9, [3, 0])
    assert cfg.eigenspace.dims == (9, 13)
    record = cfg.record(2)
    assert record.curve_count() == 2
    assert sum(c.genus * c.count for c in record.curves) == 3


def test_order2_constructor_rejects_bad_rank():
    with pytest.raises(InvariantError):
        from_invariants_order2(0, [1])
    with pytest.raises(InvariantError):
        from_invariants_order2(21, [])  # d[1] would drop below 2


def test_order3_constructor_rejects_empty_fixed_locus():
    with pytest.raises(InvariantError):
        from_invariants_order3(4, 9, 0, 0, 0)


def test_order3_empty_locus_raw_config_is_engine_valid():
    cfg = K3Config(3, EigenspaceDims(3, (4, 9, 9)), (SubgroupFixedRecord(3),))
    assert validate(cfg, "engine") == []
    assert any(v.level == "error" for v in validate(cfg, "closed_form"))


def test_order4_constructor_nesting():
    cfg = from_invariants_order4(**WORKED_ORDER4)
    rec4, rec2 = cfg.record(4), cfg.record(2)
    assert rec4.curve_count() == 2
    assert rec4.point_count() == 6
    assert rec2.curve_count() == 2 + 3 + 2  # k + b + 2a
    assert rec2.point_count() == 0


def test_order4_constructor_rejects_broken_relations():
    for field, value in (("n1", 8), ("b", 2), ("k", 3), ("n2", 2)):
        bad = dict(WORKED_ORDER4, **{field: value})
        with pytest.raises(InvariantError):
            from_invariants_order4(**bad)


def test_order4_second_type_pins_quotient_genus():
    cfg = from_invariants_order4(r=7, m=5, k=0, a=0, b=3, n1=4, n2=0,
                                 g_D=1, D_type="second")
    invariant = [c for c in cfg.record(2).curves if c.residual_order == 2 and c.genus == 1]
    assert invariant and invariant[0].quotient_genus == 1


def test_order6_constructor_shapes():
    cfg = from_invariants_order6(r=7, m=3, l=1, k=2, N=3, a=0, b=0, n_prime=0,
                                 p25=4, p34=0, g_D=0, g_G=1, g_G_quot=1,
                                 g_F1=0, g_F1_quot=0, g_F2=0, g_F2_quot=0)
    assert cfg.record(6).curve_count() == 1
    assert cfg.record(3).curve_count() == 2
    assert cfg.record(2).curve_count() == 3
    assert cfg.record(3).point_count() == 4


def test_order6_constructor_rejects_top_genus_two():
    with pytest.raises(InvariantError):
        from_invariants_order6(r=2, m=4, l=1, k=1, N=1, a=0, b=0, n_prime=0,
                               p25=0, p34=0, g_D=2, g_G=1, g_G_quot=1,
                               g_F1=1, g_F1_quot=1, g_F2=0, g_F2_quot=0)
