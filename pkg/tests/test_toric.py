import itertools
import random
from fractions import Fraction

import pytest

from toric_stci.exactmath import QQ, PrimeField
from toric_stci.groebner import IdealPresentation, is_member, normal_form, saturate_ideal
from toric_stci.polyring import Lex, PolynomialRing, parse_poly
from toric_stci.toric import (
    EnumerationCapExceeded,
    PointConfiguration,
    ambient_ring,
    codimension,
    config_matrix,
    lattice_ideal_generators,
    solution_set,
    toric_ideal,
    vanishes_on_parametrization,
)


def family_n2(d=6, a1=1):
    return PointConfiguration(
        ("x1", "x2", "y1"), [(1, 0), (0, d), (a1, 1)], ("u1", "u2")
    )


def family_n3(d=6, a1=1, a2=1):
    return PointConfiguration(
        ("x1", "x2", "x3", "y1", "y2"),
        [(1, 0, 0), (0, 1, 0), (0, 0, d), (a1, 0, 1), (0, a2, 1)],
        ("u1", "u2", "u3"),
    )


def standard_basis(n=3):
    points = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return PointConfiguration(
        tuple(f"x{i}" for i in range(1, n + 1)), points, tuple(f"u{i}" for i in range(1, n + 1))
    )


# --- configuration and matrix ----------------------------------------------


def test_config_matrix_n2():
    A = config_matrix(family_n2())
    assert A.entries == ((1, 0, 1), (0, 6, 1))


def test_config_matrix_n3():
    A = config_matrix(family_n3())
    assert [A.column(j) for j in range(5)] == [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 6),
        (1, 0, 1),
        (0, 1, 1),
    ]


def test_config_matrix_standard_basis_is_identity():
    A = config_matrix(standard_basis(3))
    assert A.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_config_validation():
    with pytest.raises(ValueError):
        PointConfiguration(("x",), [(1, 0)], ("u1", "u2"))  # N < n
    with pytest.raises(ValueError):
        PointConfiguration(("x", "y"), [(1,), (1, 0)], ("u",))
    with pytest.raises(ValueError):
        PointConfiguration(("x", "y"), [(1,), (-1,)], ("u",))


def test_config_json_round_trip():
    config = family_n3()
    assert PointConfiguration.from_json(config.to_json()) == config
    bad = config.to_json()
    bad["n"] = 4
    with pytest.raises(ValueError):
        PointConfiguration.from_json(bad)


# --- codimension --------------------------------------------------------------


def test_codimension_examples():
    assert codimension(family_n2()) == 1
    assert codimension(family_n3()) == 2
    assert codimension(standard_basis(4)) == 0


# --- toric ideal ----------------------------------------------------------------


def test_toric_ideal_n2_is_principal():
    gb = toric_ideal(family_n2())
    assert len(gb) == 1
    # the defining binomial, in monic form (grevlex leads with the degree-7
    # monomial)
    assert gb.elements[0] == parse_poly("x1^6*x2 - y1^6", gb.ring)


def test_toric_ideal_standard_basis_is_zero():
    gb = toric_ideal(standard_basis(3))
    assert gb.elements == ()


def test_toric_ideal_n3_contains_expected_binomials():
    config = family_n3()
    gb = toric_ideal(config)
    ring = gb.ring
    for text in (
        "y1^6 - x1^6*x3",
        "y2^6 - x2^6*x3",
        "y1^5*y2 - x1^5*x2*x3",
        "x2*y1 - x1*y2",
    ):
        f = parse_poly(text, ring)
        assert vanishes_on_parametrization(f, config)
        assert is_member(f, gb)


def test_toric_ideal_elements_are_vanishing_binomials():
    rng = random.Random(7)
    for _ in range(6):
        n = rng.choice([2, 3])
        d = rng.randint(1, 8)
        a = [rng.randint(1, 3) for _ in range(n - 1)]
        config = family_n2(d, a[0]) if n == 2 else family_n3(d, a[0], a[1])
        gb = toric_ideal(config)
        one = gb.ring.field.one
        for g in gb.elements:
            assert len(g.terms) == 2
            coeffs = sorted((g.terms[0][1], g.terms[1][1]), key=str)
            assert set(coeffs) == {one, -one}
            assert vanishes_on_parametrization(g, config)


def test_toric_ideal_over_prime_field():
    F = PrimeField(7)
    gb = toric_ideal(family_n2(), field=F)
    assert len(gb) == 1
    assert gb.elements[0] == parse_poly("x1^6*x2 - y1^6", gb.ring)


def test_toric_ideal_respects_requested_order():
    gb = toric_ideal(family_n2(), order=Lex())
    assert gb.ring.order == Lex()
    assert len(gb) == 1


def test_toric_ideal_saturation_stable():
    config = family_n3()
    gb = toric_ideal(config)
    ring = gb.ring
    product = ring.monomial((1,) * ring.nvars)
    sat = saturate_ideal(IdealPresentation(ring, gb.elements), product)
    sat_gb = toric_ideal(config)  # same ideal, computed afresh
    for g in sat.generators:
        assert is_member(g, sat_gb)
    for g in gb.elements:
        sat_basis = IdealPresentation(sat.ring, sat.generators)
        from toric_stci.groebner import buchberger

        assert is_member(g, buchberger(sat_basis))


def test_generating_set_independence_of_solutions():
    # raw lattice binomials + saturation vs. the reduced basis: same ideal,
    # so identical F_p solution sets
    config = family_n3()
    ring = ambient_ring(config)
    raw = lattice_ideal_generators(config, ring)
    product = ring.monomial((1,) * ring.nvars)
    sat = saturate_ideal(IdealPresentation(ring, raw), product)
    gb = toric_ideal(config)
    for p in (3, 5):
        a = solution_set(list(sat.generators), p, ring=ring)
        b = solution_set(list(gb.elements), p, ring=ring)
        assert a.points == b.points


# --- parametrization vanishing ---------------------------------------------------


def test_vanishes_on_parametrization_examples():
    config = family_n2()
    ring = ambient_ring(config)
    assert vanishes_on_parametrization(parse_poly("y1^6 - x1^6*x2", ring), config)
    assert not vanishes_on_parametrization(parse_poly("x1", ring), config)
    config3 = family_n3()
    ring3 = ambient_ring(config3)
    assert vanishes_on_parametrization(parse_poly("x2*y1 - x1*y2", ring3), config3)


def test_vanishes_requires_matching_ring():
    config = family_n2()
    other = PolynomialRing(("a", "b"), QQ)
    with pytest.raises(ValueError):
        vanishes_on_parametrization(other.one, config)


# --- finite point sets --------------------------------------------------------------


def brute_force_count(gens_texts, variables, p):
    """Independent oracle: evaluate each generator naively at every point."""
    ring = PolynomialRing(variables, PrimeField(p))
    gens = [parse_poly(t, ring) for t in gens_texts]
    count = 0
    for pt in itertools.product(range(p), repeat=len(variables)):
        ok = True
        for g in gens:
            total = 0
            for exps, c in g.terms:
                m = c.residue
                for v, e in zip(pt, exps):
                    m = m * pow(v, e, p) % p
                total = (total + m) % p
            if total:
                ok = False
                break
        if ok:
            count += 1
    return count


def test_solution_set_empty_generators():
    ring = PolynomialRing(("a", "b", "c", "d", "e"), QQ)
    pts = solution_set([], 2, ring=ring)
    assert len(pts) == 32
    assert pts.points == tuple(itertools.product(range(2), repeat=5))


def test_solution_set_binomial_p2():
    ring = PolynomialRing(("x1", "x2", "y1"), QQ)
    f = parse_poly("y1^6 - x1^6*x2", ring)
    pts = solution_set([f], 2)
    # oracle: over F_2, x1 = 0 forces y1 = 0; x1 = 1 forces x2 = y1
    assert brute_force_count(["y1^6 - x1^6*x2"], ("x1", "x2", "y1"), 2) == 4
    assert len(pts) == 4
    assert pts.points == ((0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 1))


def test_solution_set_binomial_p7():
    ring = PolynomialRing(("x1", "x2", "y1"), QQ)
    f = parse_poly("y1^6 - x1^6*x2", ring)
    pts = solution_set([f], 7)
    # oracle: x1 = 0 gives 7 points, each x1 != 0 pins x2 = y1^6, 7 choices
    # of y1, total 7 + 6*7 = 49
    assert brute_force_count(["y1^6 - x1^6*x2"], ("x1", "x2", "y1"), 7) == 49
    assert len(pts) == 49


def test_solution_set_sorted_and_duplicate_free():
    ring = PolynomialRing(("x1", "x2", "y1"), QQ)
    f = parse_poly("y1^6 - x1^6*x2", ring)
    pts = solution_set([f], 5)
    assert list(pts.points) == sorted(set(pts.points))


def test_solution_set_report_format():
    ring = PolynomialRing(("x", "y"), QQ)
    pts = solution_set([parse_poly("x", ring)], 2)
    assert pts.report() == "0,0\n0,1"


def test_solution_set_nonzero_constant_has_no_solutions():
    ring = PolynomialRing(("x", "y"), QQ)
    assert len(solution_set([ring.one], 3)) == 0


def test_solution_set_reduces_rationals_mod_p():
    ring = PolynomialRing(("x",), QQ)
    f = parse_poly("1/2*x - 1", ring)  # x = 2 mod 7 (since (1/2) = 4, 4*2 = 1)
    pts = solution_set([f], 7)
    assert pts.points == ((2,),)


def test_solution_set_cap():
    ring = PolynomialRing(tuple(f"v{i}" for i in range(9)), QQ)
    with pytest.raises(EnumerationCapExceeded):
        solution_set([ring.one], 13, ring=ring)


def test_image_containment():
    # every parametrized point lies in the solution set of the toric ideal
    config = family_n2()
    gb = toric_ideal(config)
    p = 5
    sols = set(solution_set(list(gb.elements), p, ring=gb.ring).points)
    for u1, u2 in itertools.product(range(p), repeat=2):
        image = (u1 % p, pow(u2, 6, p), (u1 * u2) % p)
        assert image in sols


def test_codimension_matches_family_formula():
    rng = random.Random(12)
    for _ in range(8):
        n = rng.choice([2, 3])
        d = rng.randint(1, 9)
        a = [rng.randint(1, 3) for _ in range(n - 1)]
        config = family_n2(d, a[0]) if n == 2 else family_n3(d, a[0], a[1])
        assert codimension(config) == n - 1
