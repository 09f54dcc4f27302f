import random
from fractions import Fraction

import pytest

from fm_oracle import hull_meets_orthant
from vanishlab.parsing import parse_poly
from vanishlab.polytopes import (
    RationalPolytope,
    SeparationCertificate,
    Witness,
    contains_point,
    difference_decomposition,
    minkowski_diff,
    moveaway_bound,
    newton_polytope,
    orthant_meet,
    scale_translate,
)


def F(v):
    return Fraction(v)


class TestBasics:
    def test_newton_polytope(self):
        p = parse_poly("x^2 + y^2 + x*y", ["x", "y"])
        sigma = newton_polytope(p)
        assert set(sigma.generators) == {(2, 0), (0, 2), (1, 1)}
        with pytest.raises(ValueError):
            newton_polytope(parse_poly("0", ["x", "y"]))

    def test_contains_point(self):
        tri = RationalPolytope([(0, 0), (2, 0), (0, 2)])
        coeffs = contains_point(tri, (Fraction(1, 2), Fraction(1, 2)))
        assert coeffs is not None
        # the coefficients really reconstruct the point
        pt = tuple(
            sum(c * g[i] for c, g in zip(coeffs, tri.generators)) for i in range(2)
        )
        assert pt == (Fraction(1, 2), Fraction(1, 2))
        assert sum(coeffs) == 1 and all(c >= 0 for c in coeffs)
        assert contains_point(tri, (3, 0)) is None
        assert contains_point(tri, (-1, 0)) is None

    def test_same_set_ignores_redundant_generators(self):
        a = RationalPolytope([(0, 0), (2, 0), (0, 2)])
        b = RationalPolytope([(0, 0), (2, 0), (0, 2), (1, 0), (Fraction(1, 2), Fraction(1, 2))])
        assert a.same_set(b) and b.same_set(a)
        assert not a.same_set(RationalPolytope([(0, 0), (1, 0), (0, 1)]))

    def test_minkowski_diff(self):
        a = RationalPolytope([(1, 0), (0, 1)])
        b = RationalPolytope([(1, 1)])
        d = minkowski_diff(a, b)
        assert set(d.generators) == {(0, -1), (-1, 0)}

    def test_scale_translate(self):
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        moved = scale_translate(sigma, 2, (3, 3))
        assert set(moved.generators) == {(-1, 5), (5, -1)}


class TestOrthantMeet:
    def test_certificate_worked_example(self):
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        meet = orthant_meet(sigma)
        assert isinstance(meet, SeparationCertificate)
        assert meet.delta == Fraction(1, 2)
        assert meet.verify(sigma)

    def test_witness_example(self):
        sigma = RationalPolytope([(-1, 2), (2, -1)])
        meet = orthant_meet(sigma)
        assert isinstance(meet, Witness)
        assert all(v >= 0 for v in meet.point)
        assert contains_point(sigma, meet.point) is not None

    def test_single_negative_generator(self):
        meet = orthant_meet(RationalPolytope([(-1, -1)]))
        assert isinstance(meet, SeparationCertificate)
        assert meet.delta == 1
        assert meet.verify(RationalPolytope([(-1, -1)]))

    def test_origin_is_a_witness(self):
        meet = orthant_meet(RationalPolytope([(0, 0), (-1, -1)]))
        assert isinstance(meet, Witness)

    def test_tampered_certificate_rejected(self):
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        meet = orthant_meet(sigma)
        bad = SeparationCertificate(c=meet.c, delta=meet.delta * 2)
        assert not bad.verify(sigma)

    def test_agrees_with_fm_oracle_randomized(self):
        rng = random.Random(2024)
        for _ in range(200):
            n = rng.randrange(1, 4)
            k = rng.randrange(1, 6)
            gens = [tuple(rng.randrange(-3, 4) for _ in range(n)) for _ in range(k)]
            sigma = RationalPolytope(gens)
            meet = orthant_meet(sigma)
            expected = hull_meets_orthant(gens)
            if expected:
                assert isinstance(meet, Witness)
                assert all(v >= 0 for v in meet.point)
                assert contains_point(sigma, meet.point) is not None
            else:
                assert isinstance(meet, SeparationCertificate)
                assert meet.verify(sigma)


class TestMoveAway:
    def test_worked_example(self):
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        cert = orthant_meet(sigma)
        assert moveaway_bound((3, 3), sigma, cert) == 7
        assert moveaway_bound((0, 1), sigma, cert) == 2

    def test_bound_is_at_least_one(self):
        sigma = RationalPolytope([(-1, -1)])
        cert = orthant_meet(sigma)
        assert moveaway_bound((0, 0), sigma, cert) == 1

    def test_bound_is_sound(self):
        # beyond N the translated-scaled polytope must miss the orthant
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        cert = orthant_meet(sigma)
        n = moveaway_bound((3, 3), sigma, cert)
        for m in range(n, n + 4):
            moved = scale_translate(sigma, m, (3, 3))
            assert isinstance(orthant_meet(moved), SeparationCertificate)

    def test_tightness_at_example(self):
        # at m = N - 1 = 6 the intersection is still nonempty
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        moved = scale_translate(sigma, 6, (3, 3))
        assert isinstance(orthant_meet(moved), Witness)

    def test_rejects_invalid_certificate(self):
        sigma = RationalPolytope([(-2, 1), (1, -2)])
        with pytest.raises(ValueError):
            moveaway_bound((3, 3), sigma, SeparationCertificate((F(1), F(0)), F(5)))


class TestDifferenceDecomposition:
    def test_roundtrip(self):
        a = RationalPolytope([(2, 0), (0, 2)])
        b = RationalPolytope([(1, 1)])
        w = (1, -1)
        pair = difference_decomposition(a, b, w)
        assert pair is not None
        u, v = pair
        assert contains_point(a, u) is not None
        assert contains_point(b, v) is not None
        assert tuple(x - y for x, y in zip(u, v)) == (1, -1)

    def test_outside(self):
        a = RationalPolytope([(2, 0), (0, 2)])
        b = RationalPolytope([(1, 1)])
        assert difference_decomposition(a, b, (5, 5)) is None

    def test_randomized_roundtrip(self):
        rng = random.Random(31)
        for _ in range(50):
            ga = [tuple(rng.randrange(-3, 4) for _ in range(2)) for _ in range(3)]
            gb = [tuple(rng.randrange(-3, 4) for _ in range(2)) for _ in range(3)]
            a, b = RationalPolytope(ga), RationalPolytope(gb)
            # pick w as an actual difference of generators, so it must decompose
            w = tuple(x - y for x, y in zip(ga[0], gb[0]))
            pair = difference_decomposition(a, b, w)
            assert pair is not None
            u, v = pair
            assert contains_point(a, u) is not None
            assert contains_point(b, v) is not None
            assert tuple(x - y for x, y in zip(u, v)) == w
