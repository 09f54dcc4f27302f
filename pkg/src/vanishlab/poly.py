"""Exact sparse Laurent polynomials and truncated power series over Q.

All coefficients are `fractions.Fraction`; nothing in this module ever
touches floating point.  Values are immutable after construction and every
operation returns a fresh object, so sharing across threads is safe.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial


def grlex_key(expo):
    """Graded lexicographic sort key (total degree first, then lex)."""
    return (sum(expo), expo)


def _default_names(arity):
    if arity <= 3:
        return ("x", "y", "z")[:arity]
    return tuple(f"z{i + 1}" for i in range(arity))


class LaurentPoly:
    """A finite map from integer exponent vectors to nonzero rationals.

    The stored key set is exactly the support; two polynomials are equal
    iff their term maps are equal.  Exponents may be negative.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        clean = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != arity:
                raise ValueError(f"exponent {expo} has arity {len(expo)}, expected {arity}")
            c = clean.get(expo, Fraction(0)) + Fraction(coeff)
            clean[expo] = c
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ----- constructors -----

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def constant(cls, arity, value):
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def one(cls, arity):
        return cls.constant(arity, 1)

    @classmethod
    def monomial(cls, expo, coeff=1):
        expo = tuple(int(e) for e in expo)
        return cls(len(expo), {expo: Fraction(coeff)})

    @classmethod
    def variable(cls, arity, index, power=1):
        expo = tuple(power if i == index else 0 for i in range(arity))
        return cls(arity, {expo: Fraction(1)})

    # ----- queries -----

    @property
    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def coeff(self, expo):
        return self.terms.get(tuple(expo), Fraction(0))

    def constant_term(self):
        return self.coeff((0,) * self.arity)

    def holomorphic_part(self):
        """Sub-sum over exponent vectors lying in N^n."""
        kept = {e: c for e, c in self.terms.items() if all(x >= 0 for x in e)}
        return LaurentPoly(self.arity, kept)

    def degree_in(self, var):
        """Largest exponent of the given variable; None for the zero polynomial."""
        if self.is_zero:
            return None
        return max(e[var] for e in self.terms)

    def min_exponent(self, var):
        if self.is_zero:
            return None
        return min(e[var] for e in self.terms)

    def total_degree(self):
        """Generalized total degree (deg z_i^{-1} = -1); None for zero."""
        if self.is_zero:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    # ----- arithmetic -----

    def _check_arity(self, other):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.arity, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return LaurentPoly(self.arity, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_arity(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ValueError("exponent must be nonnegative")
        result = LaurentPoly.one(self.arity)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base if m > 1 else base
            m >>= 1
        return result

    def substitute(self, var, replacement):
        """Substitute a polynomial for one variable.

        Requires every exponent of ``var`` in ``self`` to be nonnegative.
        """
        self._check_arity(replacement)
        out = LaurentPoly.zero(self.arity)
        powers = {0: LaurentPoly.one(self.arity)}
        for e, c in self.terms.items():
            k = e[var]
            if k < 0:
                raise ValueError("cannot substitute into a negative exponent")
            if k not in powers:
                powers[k] = replacement ** k
            rest = tuple(0 if i == var else x for i, x in enumerate(e))
            out = out + LaurentPoly.monomial(rest, c) * powers[k]
        return out

    # ----- comparison / printing -----

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.arity, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in descending graded-lex order (deterministic)."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=grlex_key, reverse=True)]

    def to_string(self, names=None):
        if self.is_zero:
            return "0"
        names = names or _default_names(self.arity)
        pieces = []
        for expo, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(expo) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly({self.arity}, {self.to_string()!r})"


class TruncSeries:
    """A Laurent polynomial with per-variable truncation degrees.

    ``precision[v] = D`` means coefficients with exponent <= D in variable
    ``v`` are trustworthy and everything beyond is unrepresented.  After any
    operation the stored precision is the minimum provable one.  Variables
    absent from the precision map are exact.
    """

    __slots__ = ("body", "precision")

    def __init__(self, body, precision):
        precision = dict(precision)
        kept = {
            e: c for e, c in body.terms.items()
            if all(e[v] <= d for v, d in precision.items())
        }
        object.__setattr__(self, "body", LaurentPoly(body.arity, kept))
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def arity(self):
        return self.body.arity

    def _coerce(self, other):
        """View the other operand as a series over the same tracked variables."""
        if isinstance(other, TruncSeries):
            if set(other.precision) != set(self.precision):
                raise ValueError("mismatched tracked variables")
            return other
        if isinstance(other, LaurentPoly):
            exact = {v: float("inf") for v in self.precision}
            return TruncSeries(other, exact)
        raise TypeError(f"cannot combine TruncSeries with {type(other).__name__}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.arity, other)
        other = self._coerce(other)
        prec = {v: min(self.precision[v], other.precision[v]) for v in self.precision}
        return TruncSeries(self.body + other.body, prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.body, self.precision)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.body * other, self.precision)
        other = self._coerce(other)
        if self.body.is_zero or other.body.is_zero:
            prec = {v: min(self.precision[v], other.precision[v]) for v in self.precision}
            return TruncSeries(LaurentPoly.zero(self.arity), prec)
        prec = {}
        for v in self.precision:
            va = self.body.min_exponent(v)
            vb = other.body.min_exponent(v)
            # [z^k](A*B) only needs A up to k - vb and B up to k - va
            prec[v] = min(self.precision[v] + vb, other.precision[v] + va)
        return TruncSeries(self.body * other.body, prec)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ValueError("exponent must be nonnegative")
        result = TruncSeries(LaurentPoly.one(self.arity), dict(self.precision))
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base if m > 1 else base
            m >>= 1
        return result

    def truncated(self, precision):
        return TruncSeries(self.body, precision)

    def constant_term(self):
        return self.body.constant_term()

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.body == other.body and self.precision == other.precision

    def __hash__(self):
        return hash((self.body, frozenset(self.precision.items())))

    def to_string(self, names=None):
        bounds = ", ".join(f"{v}<={d}" for v, d in sorted(self.precision.items()))
        return f"{self.body.to_string(names)}  (mod {bounds})"

    def __repr__(self):
        return f"TruncSeries({self.to_string()!r})"


def series_exp(s):
    """Exponential of a truncated series with zero constant term.

    Every term must have nonnegative exponents in the tracked variables and
    a strictly positive exponent in at least one of them, which makes the
    sum over s^k/k! finite at the declared precision.
    """
    if s.constant_term() != 0:
        raise ValueError("series_exp requires a zero constant term")
    tracked = list(s.precision)
    for e in s.body.terms:
        if any(e[v] < 0 for v in tracked):
            raise ValueError("series_exp requires nonnegative exponents in tracked variables")
        if not any(e[v] > 0 for v in tracked):
            raise ValueError("series_exp requires positive order in a tracked variable")
    target = dict(s.precision)
    result = TruncSeries(LaurentPoly.one(s.arity), target)
    power = TruncSeries(LaurentPoly.one(s.arity), target)
    k = 0
    while True:
        k += 1
        power = (power * s).truncated(target)
        if power.body.is_zero:
            return result
        result = result + power * Fraction(1, factorial(k))
