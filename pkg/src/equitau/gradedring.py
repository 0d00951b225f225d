"""Degree-truncated graded power series over exact rationals.

GradedSeries models the completed graded ring Q[[t_1..t_r]] cut off above a
fixed total degree N: all arithmetic silently discards degrees > N, so any
equality of series is an equality *up to the configured truncation*, never an
absolute one.

BundleRingElement models the quotient (series ring)[h] / prod_i(h + w_i.t)
for a list of base weights w_i: polynomials in one extra degree-1 symbol h,
kept reduced below h-degree n+1.  The relation is homogeneous, so total
degree (t-degree + h-degree) is preserved by reduction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ._format import join_signed_terms, monomial_string, variable_names


class GradedSeries:
    """Sparse truncated power series: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("rank", "truncation", "terms")

    def __init__(self, rank, truncation, terms=None):
        if rank < 0 or truncation < 0:
            raise ValueError("rank and truncation must be nonnegative")
        self.rank = rank
        self.truncation = truncation
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for rank {rank}")
            c = Fraction(c)
            if c != 0 and sum(exps) <= truncation:
                clean[exps] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(rank, truncation):
        return GradedSeries(rank, truncation, {})

    @staticmethod
    def const(rank, truncation, value):
        return GradedSeries(rank, truncation, {(0,) * rank: Fraction(value)})

    @staticmethod
    def one(rank, truncation):
        return GradedSeries.const(rank, truncation, 1)

    @staticmethod
    def variable(rank, truncation, index=0):
        exps = [0] * rank
        exps[index] = 1
        return GradedSeries(rank, truncation, {tuple(exps): Fraction(1)})

    @staticmethod
    def linear_form(rank, truncation, coeffs):
        """Sum of coeffs[i] * t_i; the degree-1 series attached to a weight vector."""
        coeffs = list(coeffs)
        if len(coeffs) != rank:
            raise ValueError(f"expected {rank} coefficients")
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                exps = [0] * rank
                exps[i] = 1
                terms[tuple(exps)] = Fraction(c)
        return GradedSeries(rank, truncation, terms)

    # -- structure ----------------------------------------------------------

    def _check_compatible(self, other):
        if self.rank != other.rank or self.truncation != other.truncation:
            raise ValueError(
                f"rank/truncation mismatch: ({self.rank},{self.truncation}) "
                f"vs ({other.rank},{other.truncation})"
            )

    def is_zero(self):
        return not self.terms

    def _one(self) -> GradedSeries:
        return GradedSeries.one(self.rank, self.truncation)

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.rank, Fraction(0))

    def component(self, degree) -> GradedSeries:
        """Homogeneous part of the given total degree."""
        return GradedSeries(
            self.rank,
            self.truncation,
            {e: c for e, c in self.terms.items() if sum(e) == degree},
        )

    def low_degree(self):
        """Smallest total degree with a nonzero term, or None for the zero series."""
        return min((sum(e) for e in self.terms), default=None)

    def truncate(self, new_truncation) -> GradedSeries:
        if new_truncation > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return GradedSeries(
            self.rank,
            new_truncation,
            {e: c for e, c in self.terms.items() if sum(e) <= new_truncation},
        )

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, GradedSeries):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            return GradedSeries.const(self.rank, self.truncation, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return GradedSeries(self.rank, self.truncation, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries(self.rank, self.truncation, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return GradedSeries.zero(self.rank, self.truncation)
            return GradedSeries(
                self.rank, self.truncation, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._check_compatible(other)
        n = self.truncation
        terms = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > n:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return GradedSeries(self.rank, n, terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers: use inverse() on a unit")
        result = GradedSeries.one(self.rank, self.truncation)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> GradedSeries:
        """Multiplicative inverse of a unit (nonzero constant term)."""
        a0 = self.constant_term()
        if a0 == 0:
            raise ValueError("series with zero constant term is not a unit")
        u = GradedSeries.one(self.rank, self.truncation) - self * (Fraction(1) / a0)
        return apply_power_series(lambda k: Fraction(1), u) * (Fraction(1) / a0)

    def __eq__(self, other):
        return (
            isinstance(other, GradedSeries)
            and self.rank == other.rank
            and self.truncation == other.truncation
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, self.truncation, frozenset(self.terms.items())))

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self):
        names = variable_names("t", self.rank)
        return join_signed_terms(
            (c, monomial_string(names, e)) for e, c in self.sorted_terms()
        )

    __repr__ = __str__


def apply_power_series(coeff_fn, x):
    """Evaluate sum_k coeff_fn(k) * x^k for nilpotent x (zero constant term).

    Works for GradedSeries and BundleRingElement alike; terminates because
    powers of an element without constant term eventually truncate to zero.
    """
    if x.constant_term() != 0:
        raise ValueError("substitution requires a zero constant term")
    one = x._one()
    total = one * coeff_fn(0)
    power = one
    k = 0
    while True:
        k += 1
        power = power * x
        if power.is_zero():
            return total
        c = coeff_fn(k)
        if c:
            total = total + power * c


def exp(x):
    """exp of a series or bundle element without constant term."""
    return apply_power_series(lambda k: Fraction(1, math.factorial(k)), x)


def compose(outer: GradedSeries, inner):
    """Substitute inner (no constant term) into a one-variable series."""
    if outer.rank != 1:
        raise ValueError("outer series must have rank 1")
    if outer.truncation != inner.truncation:
        raise ValueError("truncation mismatch between outer and inner series")
    return apply_power_series(lambda k: outer.coefficient((k,)), inner)


# ---------------------------------------------------------------------------
# Bernoulli numbers and the Todd factor x/(1 - e^(-x))


@lru_cache(maxsize=None)
def bernoulli_number(m: int) -> Fraction:
    """B_m by the recurrence sum_{j<=m} C(m+1, j) B_j = 0 (convention B_1 = -1/2)."""
    if m == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(m):
        acc += math.comb(m + 1, j) * bernoulli_number(j)
    return -acc / (m + 1)


def todd_coefficient(k: int) -> Fraction:
    """Coefficient of x^k in x/(1 - e^(-x)): 1, 1/2, 1/12, 0, -1/720, ..."""
    if k == 1:
        return Fraction(1, 2)
    return bernoulli_number(k) / math.factorial(k)


def todd_factor(x):
    """The multiplicative Todd factor x/(1 - e^(-x)) of a degree-1 form (or zero).

    Accepts a GradedSeries or BundleRingElement with no constant term;
    todd_factor(0) = 1.
    """
    if isinstance(x, GradedSeries) and any(sum(e) != 1 for e in x.terms):
        raise ValueError("todd_factor expects a homogeneous degree-1 form or zero")
    return apply_power_series(todd_coefficient, x)


# ---------------------------------------------------------------------------
# The projective-bundle quotient ring


def relation_elementary_symmetric(weights, rank, truncation):
    """Coefficients e_1..e_{n+1} of prod_i(h + w_i.t) below the leading h power.

    weights is a list of integer coordinate vectors over a rank-`rank` base;
    returns [e_1, ..., e_{n+1}] with e_j homogeneous of degree j.
    """
    # multiply out prod (h + l_i) as an h-polynomial, low h-degree first
    poly = [GradedSeries.one(rank, truncation)]
    for w in weights:
        l = GradedSeries.linear_form(rank, truncation, w)
        new = [GradedSeries.zero(rank, truncation) for _ in range(len(poly) + 1)]
        for k, c in enumerate(poly):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] + c * l
        poly = new
    # poly[k] is the coefficient of h^k; e_j is the coefficient of h^{n+1-j}
    n1 = len(weights)
    return [poly[n1 - j] for j in range(1, n1 + 1)]


class BundleRingElement:
    """Element of (truncated series ring)[h] / prod_i(h + w_i.t), kept reduced."""

    __slots__ = ("weights", "rank", "truncation", "coeffs")

    def __init__(self, weights, coeffs, rank=None, truncation=None):
        self.weights = tuple(tuple(int(c) for c in w) for w in weights)
        if not self.weights:
            raise ValueError("relation needs at least one weight")
        if rank is None or truncation is None:
            probe = next((c for c in coeffs if isinstance(c, GradedSeries)), None)
            if probe is None:
                raise ValueError("rank and truncation required without series coefficients")
            rank, truncation = probe.rank, probe.truncation
        self.rank = rank
        self.truncation = truncation
        coeffs = list(coeffs)
        if len(coeffs) > len(self.weights):
            raise ValueError("coefficients exceed the reduced h-degree bound")
        coeffs += [GradedSeries.zero(rank, truncation)] * (len(self.weights) - len(coeffs))
        for c in coeffs:
            if not isinstance(c, GradedSeries) or c.rank != rank or c.truncation != truncation:
                raise ValueError("coefficients must be series of matching rank/truncation")
        self.coeffs = tuple(coeffs)

    @property
    def hdim(self):
        """n, the largest retained power of h (= number of weights minus 1)."""
        return len(self.weights) - 1

    def _check_compatible(self, other):
        if (
            self.weights != other.weights
            or self.rank != other.rank
            or self.truncation != other.truncation
        ):
            raise ValueError("bundle elements over different models")

    def _series(self, value):
        return GradedSeries.const(self.rank, self.truncation, value)

    def _one(self):
        return BundleRingElement(
            self.weights,
            [GradedSeries.one(self.rank, self.truncation)],
            self.rank,
            self.truncation,
        )

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def constant_term(self) -> Fraction:
        return self.coeffs[0].constant_term()

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GradedSeries)):
            other = embed_series(self, other)
        if not isinstance(other, BundleRingElement):
            return NotImplemented
        self._check_compatible(other)
        return BundleRingElement(
            self.weights,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self.rank,
            self.truncation,
        )

    __radd__ = __add__

    def __neg__(self):
        return BundleRingElement(
            self.weights, [-c for c in self.coeffs], self.rank, self.truncation
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GradedSeries)):
            other = embed_series(self, other)
        if not isinstance(other, BundleRingElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BundleRingElement(
                self.weights, [c * other for c in self.coeffs], self.rank, self.truncation
            )
        if isinstance(other, GradedSeries):
            return BundleRingElement(
                self.weights, [c * other for c in self.coeffs], self.rank, self.truncation
            )
        if not isinstance(other, BundleRingElement):
            return NotImplemented
        self._check_compatible(other)
        prod = [
            GradedSeries.zero(self.rank, self.truncation)
            for _ in range(len(self.coeffs) + len(other.coeffs) - 1)
        ]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    prod[i + j] = prod[i + j] + a * b
        return reduce(prod, self.weights, self.rank, self.truncation)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers: use inverse() on a unit")
        result = self._one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        a0 = self.constant_term()
        if a0 == 0:
            raise ValueError("bundle element with zero constant term is not a unit")
        u = self._one() - self * (Fraction(1) / a0)
        return apply_power_series(lambda k: Fraction(1), u) * (Fraction(1) / a0)

    def __eq__(self, other):
        return (
            isinstance(other, BundleRingElement)
            and self.weights == other.weights
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.weights, self.coeffs))

    def __str__(self):
        names = variable_names("t", self.rank)
        items = []
        for k, c in enumerate(self.coeffs):
            for e, coeff in c.sorted_terms():
                items.append((sum(e) + k, e, k, coeff))
        items.sort(key=lambda it: (it[0], it[1], it[2]))
        parts = []
        for _, e, k, coeff in items:
            mono = monomial_string(names + ["h"], tuple(e) + (k,))
            parts.append((coeff, mono))
        return join_signed_terms(parts)

    __repr__ = __str__


def embed_series(template: BundleRingElement, value) -> BundleRingElement:
    """Lift a scalar or base series into the bundle ring of `template`."""
    if isinstance(value, (int, Fraction)):
        value = GradedSeries.const(template.rank, template.truncation, value)
    return BundleRingElement(template.weights, [value], template.rank, template.truncation)


def hyperplane_class(weights, rank, truncation) -> BundleRingElement:
    """The class h in the quotient ring for the given relation weights."""
    zero = GradedSeries.zero(rank, truncation)
    one = GradedSeries.one(rank, truncation)
    if len(weights) < 2:
        raise ValueError("need at least two weights for a positive-dimensional model")
    return BundleRingElement(weights, [zero, one], rank, truncation)


def reduce(poly_coeffs, weights, rank=None, truncation=None) -> BundleRingElement:
    """Reduce an h-polynomial (list of series, low degree first) modulo prod(h + w_i.t)."""
    coeffs = list(poly_coeffs)
    probe = next((c for c in coeffs if isinstance(c, GradedSeries)), None)
    if rank is None or truncation is None:
        if probe is None:
            raise ValueError("rank and truncation required without series coefficients")
        rank, truncation = probe.rank, probe.truncation
    coeffs = [
        c if isinstance(c, GradedSeries) else GradedSeries.const(rank, truncation, c)
        for c in coeffs
    ]
    n1 = len(weights)
    es = relation_elementary_symmetric(weights, rank, truncation)
    for k in range(len(coeffs) - 1, n1 - 1, -1):
        top = coeffs[k]
        if top.is_zero():
            continue
        coeffs[k] = GradedSeries.zero(rank, truncation)
        for j in range(1, n1 + 1):
            coeffs[k - j] = coeffs[k - j] - es[j - 1] * top
    return BundleRingElement(weights, coeffs[:n1], rank, truncation)


def pushforward(p: BundleRingElement) -> GradedSeries:
    """Proper pushforward to the base: picks off the h^n coefficient.

    The class of a point pushes to 1 and lower h-powers push to 0; a class of
    pure total degree d maps to a class of pure degree d - n.
    """
    if not isinstance(p, BundleRingElement):
        raise ValueError("pushforward expects a reduced bundle ring element")
    return p.coeffs[p.hdim]


def odd_part_quotient(coeffs, truncation) -> GradedSeries:
    """(p(t) - p(-t)) / (2t) for an h-polynomial given by its coefficient list.

    This is the closed-form pushforward on P^1 with weights (1, -1);
    coefficients may be integers, Fractions, or rank-1 series.
    """
    t = GradedSeries.variable(1, truncation)
    p_plus = GradedSeries.zero(1, truncation)
    p_minus = GradedSeries.zero(1, truncation)
    for k, c in enumerate(coeffs):
        if not isinstance(c, GradedSeries):
            c = GradedSeries.const(1, truncation, c)
        p_plus = p_plus + c * t**k
        p_minus = p_minus + c * (-t) ** k
    diff = p_plus - p_minus
    terms = {}
    for (e,), c in diff.terms.items():
        if e == 0:
            raise ValueError("difference is not divisible by t")
        terms[(e - 1,)] = c / 2
    return GradedSeries(1, truncation, terms)
