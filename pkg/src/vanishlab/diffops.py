"""Constant-coefficient differential operators and vanishing profiles."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import LaurentPoly, TruncSeries

POLYNOMIAL = "polynomial"
LAURENT = "laurent"


class DiffOp:
    """The operator L(d) attached to a polynomial symbol L(xi).

    The symbol must have all exponents in N^n; its support and polytope are
    by definition those of the operator.
    """

    __slots__ = ("symbol",)

    def __init__(self, symbol):
        for e in symbol.terms:
            if any(x < 0 for x in e):
                raise ValueError("operator symbol must have nonnegative exponents")
        object.__setattr__(self, "symbol", symbol)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @property
    def arity(self):
        return self.symbol.arity

    @classmethod
    def monomial(cls, mu, coeff=1):
        return cls(LaurentPoly.monomial(mu, coeff))

    def __pow__(self, m):
        return DiffOp(self.symbol ** m)

    def __eq__(self, other):
        return isinstance(other, DiffOp) and self.symbol == other.symbol

    def __hash__(self):
        return hash(("DiffOp", self.symbol))

    def __repr__(self):
        return f"DiffOp({self.symbol.to_string()!r})"


def apply_monomial(mu, beta, mode=POLYNOMIAL):
    """Differentiate a single monomial: d^mu applied to z^beta.

    Returns ``(coefficient, exponent)``.  In polynomial mode beta must lie
    in N^n and the result is zero unless beta >= mu componentwise; in
    Laurent mode the falling-factorial rule is used, which is the correct
    extension to negative exponents.
    """
    mu = tuple(mu)
    beta = tuple(beta)
    if any(m < 0 for m in mu):
        raise ValueError("derivative multi-index must be in N^n")
    if mode == POLYNOMIAL and any(b < 0 for b in beta):
        raise ValueError("polynomial mode requires exponents in N^n")
    coeff = Fraction(1)
    for m, b in zip(mu, beta):
        for j in range(m):
            coeff *= b - j
        if coeff == 0:
            return Fraction(0), tuple(b - m for b, m in zip(beta, mu))
    return coeff, tuple(b - m for b, m in zip(beta, mu))


def _apply_to_poly(op, poly, mode):
    out = {}
    for mu, c in op.symbol.terms.items():
        for beta, b in poly.terms.items():
            coeff, expo = apply_monomial(mu, beta, mode)
            if coeff:
                out[expo] = out.get(expo, Fraction(0)) + c * b * coeff
    return LaurentPoly(poly.arity, out)


def apply(op, operand, mode=POLYNOMIAL):
    """Apply an operator to a LaurentPoly or TruncSeries, exactly.

    On a series, the output precision in each tracked variable drops by the
    largest derivative order the symbol takes in that variable.
    """
    if op.arity != operand.arity:
        raise ValueError("arity mismatch between operator and operand")
    if isinstance(operand, TruncSeries):
        drop = {}
        for v, d in operand.precision.items():
            orders = [mu[v] for mu in op.symbol.terms]
            drop[v] = d - max(orders, default=0)
        return TruncSeries(_apply_to_poly(op, operand.body, mode), drop)
    return _apply_to_poly(op, operand, mode)


def apply_power(op, m, operand, mode=POLYNOMIAL):
    """Apply op^m, computed once as a symbol power."""
    if m < 1:
        raise ValueError("power must be >= 1")
    return apply(op ** m, operand, mode)


@dataclass(frozen=True)
class ProfileEntry:
    m: int
    pp_zero: bool
    ppg_zero: bool
    pp_residual: LaurentPoly | None = None
    ppg_residual: LaurentPoly | None = None


@dataclass(frozen=True)
class VanishingProfile:
    """Per-m record of whether L^m(P^m) and L^m(P^m g) vanish, up to a horizon.

    A clean profile is only ever "verified up to M"; no finite horizon can
    prove the eventual-vanishing statement itself.
    """

    horizon: int
    entries: tuple[ProfileEntry, ...] = field(default_factory=tuple)

    @property
    def first_pp_failure(self):
        return next((e.m for e in self.entries if not e.pp_zero), None)

    @property
    def first_ppg_failure(self):
        return next((e.m for e in self.entries if not e.ppg_zero), None)

    @property
    def ppg_zero_from(self):
        """Smallest t with L^m(P^m g) = 0 for all t <= m <= horizon, or None."""
        start = None
        for e in self.entries:
            if e.ppg_zero:
                if start is None:
                    start = e.m
            else:
                start = None
        return start


def vanishing_profile(op, p, g=None, horizon=8):
    """Scan m = 1..horizon and record both vanishing sequences."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if p.is_zero:
        raise ValueError("P must be nonzero")
    if g is None:
        g = LaurentPoly.one(p.arity)
    entries = []
    sym_m = op.symbol
    p_m = p
    for m in range(1, horizon + 1):
        op_m = DiffOp(sym_m)
        pp = apply(op_m, p_m)
        ppg = apply(op_m, p_m * g)
        entries.append(ProfileEntry(
            m=m,
            pp_zero=pp.is_zero,
            ppg_zero=ppg.is_zero,
            pp_residual=None if pp.is_zero else pp,
            ppg_residual=None if ppg.is_zero else ppg,
        ))
        if m < horizon:
            sym_m = sym_m * op.symbol
            p_m = p_m * p
    return VanishingProfile(horizon=horizon, entries=tuple(entries))
