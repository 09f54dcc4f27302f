"""Finite-horizon searches along rays through supports of polynomial powers.

All verdicts here are horizon-bounded: the underlying density statement
gives existence of a hit with no effective bound on m, so a clean scan can
only ever report "inconclusive at horizon", never failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polytopes import contains_point, newton_polytope

FOUND = "found"
INCONCLUSIVE = "inconclusive"
HYPOTHESIS_FAILS = "hypothesis-fails"
CONSISTENT = "consistent"
PREDICTS_NONZERO = "predicts-nonzero"


def on_ray(point, direction):
    """Exact test for point = k*direction with rational k >= 0.

    For the zero direction the ray degenerates to the origin.  Uses
    cross-multiplication only; no floating-point slopes.
    """
    direction = tuple(Fraction(v) for v in direction)
    point = tuple(Fraction(v) for v in point)
    pivot = next((i for i, v in enumerate(direction) if v), None)
    if pivot is None:
        return all(v == 0 for v in point)
    k = point[pivot] / direction[pivot]
    return k >= 0 and all(p == k * d for p, d in zip(point, direction))


@dataclass(frozen=True)
class RaySearchReport:
    u: tuple
    horizon: int
    hits: tuple = field(default_factory=tuple)  # (m, exponent vector) pairs
    verdict: str = INCONCLUSIVE

    @property
    def first_hit(self):
        return self.hits[0][0] if self.hits else None


def ray_hits_support(p, u, horizon):
    """Scan Supp(P^m) for lattice points on the ray through u, m = 1..horizon."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    u = tuple(Fraction(v) for v in u)
    if contains_point(newton_polytope(p), u) is None:
        raise ValueError("u must lie in the Newton polytope of P")
    hits = []
    p_m = p
    for m in range(1, horizon + 1):
        for lam in sorted(p_m.terms):
            if on_ray(lam, u):
                hits.append((m, lam))
        if m < horizon:
            p_m = p_m * p
    verdict = FOUND if hits else INCONCLUSIVE
    return RaySearchReport(u=u, horizon=horizon, hits=tuple(hits), verdict=verdict)


def repeated_hits(p, u, horizon):
    """All m <= horizon whose support meets the ray, in increasing order."""
    report = ray_hits_support(p, u, horizon)
    return sorted({m for m, _ in report.hits})


def homogeneous_density(p, u, horizon):
    """Hits for homogeneous P: exactly the m with m*u in Supp(P^m).

    Homogeneity (generalized degree d != 0) pins the ray's intersection
    with the degree-md hyperplane to the single point m*u.
    """
    degrees = {sum(e) for e in p.terms}
    if len(degrees) != 1:
        raise ValueError("P must be homogeneous")
    d = degrees.pop()
    if d == 0:
        raise ValueError("degree must be nonzero")
    u = tuple(Fraction(v) for v in u)
    if contains_point(newton_polytope(p), u) is None:
        raise ValueError("u must lie in the Newton polytope of P")
    hits = []
    p_m = p
    for m in range(1, horizon + 1):
        mu = tuple(m * v for v in u)
        if all(v.denominator == 1 for v in mu):
            if p_m.coeff(tuple(int(v) for v in mu)) != 0:
                hits.append(m)
        if m < horizon:
            p_m = p_m * p
    return hits


@dataclass(frozen=True)
class ConstantTermReport:
    horizon: int
    constant_terms: tuple       # Fraction per m = 1..horizon
    first_nonzero: int | None
    zero_in_polytope: bool
    verdict: str


def dk_check(f, horizon):
    """Constant-term scan of f^m against membership of 0 in Poly(f).

    Classification: a nonzero constant term kills the hypothesis; otherwise
    0 outside the polytope is consistent, while 0 inside means a nonzero
    constant term is predicted beyond the horizon.
    """
    if f.is_zero:
        raise ValueError("f must be nonzero")
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    terms = []
    f_m = f
    for m in range(1, horizon + 1):
        terms.append(f_m.constant_term())
        if m < horizon:
            f_m = f_m * f
    first_nonzero = next((m for m, c in enumerate(terms, start=1) if c), None)
    origin = (0,) * f.arity
    zero_in = contains_point(newton_polytope(f), origin) is not None
    if first_nonzero is not None:
        verdict = HYPOTHESIS_FAILS
    elif zero_in:
        verdict = PREDICTS_NONZERO
    else:
        verdict = CONSISTENT
    return ConstantTermReport(
        horizon=horizon,
        constant_terms=tuple(terms),
        first_nonzero=first_nonzero,
        zero_in_polytope=zero_in,
        verdict=verdict,
    )
