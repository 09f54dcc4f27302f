"""Independent Fourier-Motzkin feasibility oracle for the orthant query.

Deliberately shares nothing with the simplex path: it decides whether the
convex hull of a generator list meets the nonnegative orthant by
eliminating the convex-combination variables from the inequality system.
"""
from fractions import Fraction


def _normalize(coeffs, rhs):
    scale = max((abs(v) for v in coeffs + (rhs,) if v), default=None)
    if scale is None:
        return coeffs, rhs
    return tuple(v / scale for v in coeffs), rhs / scale


def fm_feasible(ineqs, nvars):
    """Feasibility of {x : a.x <= r for all (a, r)} via variable elimination."""
    for v in range(nvars):
        pos, neg, rest = [], [], []
        for a, r in ineqs:
            if a[v] > 0:
                pos.append((a, r))
            elif a[v] < 0:
                neg.append((a, r))
            else:
                rest.append((a, r))
        combined = set(_normalize(a, r) for a, r in rest)
        for ap, rp in pos:
            for an, rn in neg:
                f1, f2 = ap[v], -an[v]
                a = tuple(x / f1 + y / f2 for x, y in zip(ap, an))
                r = rp / f1 + rn / f2
                combined.add(_normalize(a, r))
        ineqs = list(combined)
    return all(r >= 0 for _, r in ineqs)


def hull_meets_orthant(generators):
    """True iff conv(generators) intersects R>=0^n."""
    generators = [tuple(Fraction(v) for v in g) for g in generators]
    k = len(generators)
    n = len(generators[0])
    ineqs = []
    for j in range(k):
        a = [Fraction(0)] * k
        a[j] = Fraction(-1)
        ineqs.append((tuple(a), Fraction(0)))  # c_j >= 0
    ones = tuple([Fraction(1)] * k)
    ineqs.append((ones, Fraction(1)))                            # sum c <= 1
    ineqs.append((tuple(-v for v in ones), Fraction(-1)))        # sum c >= 1
    for i in range(n):
        ineqs.append((tuple(-g[i] for g in generators), Fraction(0)))  # (sum c u)_i >= 0
    return fm_feasible(ineqs, k)
