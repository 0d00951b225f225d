"""Representation rings of diagonalizable groups as Laurent group algebras.

R(G) = Z[N] for the character group N: elements are finite combinations of
weights, stored sparsely.  Includes the augmentation (virtual rank), the
alternating classes lambda_{-1}(V) = prod(1 - chi_i), the Chern character
into truncated graded series (tori only), the symmetric-function model of
R(GL_n) inside the rank-n torus ring, and a bounded cofactor search that
produces explicit, re-verified ideal-membership certificates.

A failed certificate search is only "nothing found within the bound" and is
never evidence of non-membership.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product

from ._format import join_signed_terms, monomial_string, variable_names
from .gradedring import GradedSeries, exp
from .lattice import GroupDescriptor, Weight


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class RepRingElement:
    """Sparse element of Z[N]: {reduced coordinate tuple: nonzero coefficient}.

    Coefficients are integers for honest virtual representations; exact
    rationals are admitted so ideal-membership cofactors live in the same
    type.
    """

    __slots__ = ("group", "terms")

    def __init__(self, group: GroupDescriptor, terms=None):
        self.group = group
        clean = {}
        for coords, c in (terms or {}).items():
            coords = group.reduce_coords(coords)
            c = _normalize_coeff(clean.get(coords, 0) + c)
            if c:
                clean[coords] = c
            else:
                clean.pop(coords, None)
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(group):
        return RepRingElement(group, {})

    @staticmethod
    def one(group):
        return RepRingElement(group, {(0,) * group.ngens: 1})

    @staticmethod
    def character(group, weight):
        coords = weight.coords if isinstance(weight, Weight) else weight
        return RepRingElement(group, {tuple(coords): 1})

    # -- ring structure -----------------------------------------------------

    def _check(self, other):
        if self.group != other.group:
            raise ValueError("elements over mismatched group descriptors")

    def _lift(self, other):
        if isinstance(other, RepRingElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return RepRingElement(self.group, {(0,) * self.group.ngens: other})
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = _normalize_coeff(terms.get(k, 0) + c)
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return RepRingElement(self.group, terms)

    __radd__ = __add__

    def __neg__(self):
        return RepRingElement(self.group, {k: -c for k, c in self.terms.items()})

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
                return RepRingElement.zero(self.group)
            return RepRingElement(self.group, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, RepRingElement):
            return NotImplemented
        self._check(other)
        group = self.group
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = group.reduce_coords(tuple(a + b for a, b in zip(k1, k2)))
                s = terms.get(k, 0) + c1 * c2
                if s:
                    terms[k] = s
                else:
                    del terms[k]
        return RepRingElement(group, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in the group algebra")
        result = RepRingElement.one(self.group)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, RepRingElement)
            and self.group == other.group
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def coefficient(self, coords):
        return self.terms.get(self.group.reduce_coords(coords), 0)

    def augmentation(self):
        """Virtual rank: the sum of all coefficients."""
        return _normalize_coeff(sum(self.terms.values()))

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self):
        """Canonical order: total coordinate height, then descending lex."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(abs(c) for c in item[0]), tuple(-c for c in item[0])),
        )

    def __str__(self):
        names = variable_names("u", self.group.ngens)
        return join_signed_terms(
            (c, monomial_string(names, coords)) for coords, c in self.sorted_terms()
        )

    __repr__ = __str__


def augmentation(a: RepRingElement):
    return a.augmentation()


def lambda_minus_one(group: GroupDescriptor, weights) -> RepRingElement:
    """The class sum_k (-1)^k Lambda^k V = prod_i (1 - chi_{w_i}).

    Augmentation 0 whenever the weight list is nonempty; the empty product
    is 1.
    """
    result = RepRingElement.one(group)
    for w in weights:
        result = result * (RepRingElement.one(group) - RepRingElement.character(group, w))
    return result


def chern_character(a: RepRingElement, truncation: int) -> GradedSeries:
    """Ring homomorphism into truncated series: each weight w maps to exp(w.t).

    Only defined over a free character lattice (a torus).
    """
    group = a.group
    if not group.is_free:
        raise ValueError("Chern character requires a torus (free character lattice)")
    rank = group.ngens
    total = GradedSeries.zero(rank, truncation)
    for coords, c in a.terms.items():
        form = GradedSeries.linear_form(rank, truncation, coords)
        total = total + exp(form) * Fraction(c)
    return total


def augmentation_order(a: RepRingElement, truncation: int):
    """Adic order of `a` along the augmentation ideal, read from its Chern character.

    Returns the smallest degree k <= truncation with a nonzero component, or
    None when every component up to the truncation vanishes (order >= N+1).
    """
    return chern_character(a, truncation).low_degree()


# ---------------------------------------------------------------------------
# The symmetric-function model of R(GL_n)


class SymmetricElement:
    """Integer polynomial in e_1..e_n and e_n^(-1): {exponent tuple: coefficient}.

    The last exponent may be negative (e_n is the determinant character, a
    unit); all others must be nonnegative.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one elementary symmetric generator")
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"expected {n} exponents, got {len(exps)}")
            if any(e < 0 for e in exps[:-1]):
                raise ValueError("only e_n may carry a negative exponent")
            c = _normalize_coeff(clean.get(exps, 0) + c)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.terms = clean

    @staticmethod
    def generator(n, i, power=1):
        """e_i^power (power may be negative only for i = n)."""
        exps = [0] * n
        exps[i - 1] = power
        return SymmetricElement(n, {tuple(exps): 1})

    def _lift(self, other):
        if isinstance(other, SymmetricElement):
            if self.n != other.n:
                raise ValueError("mismatched symmetric rings")
            return other
        if isinstance(other, int):
            return SymmetricElement(self.n, {(0,) * self.n: other})
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return SymmetricElement(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymmetricElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SymmetricElement(self.n, {k: c * other for k, c in self.terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                terms[k] = terms.get(k, 0) + c1 * c2
        return SymmetricElement(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymmetricElement) and self.n == other.n and self.terms == other.terms

    def __str__(self):
        names = [f"e{i + 1}" for i in range(self.n)]
        items = sorted(self.terms.items(), key=lambda it: (sum(abs(e) for e in it[0]), it[0]))
        return join_signed_terms((c, monomial_string(names, e)) for e, c in items)

    __repr__ = __str__


def torus_group(rank: int) -> GroupDescriptor:
    return GroupDescriptor(rank, ())


def elementary_symmetric_character(n: int, i: int) -> RepRingElement:
    """e_i(t_1..t_n) as an element of the rank-n torus ring."""
    group = torus_group(n)
    terms = {}
    for subset in combinations(range(n), i):
        coords = [0] * n
        for j in subset:
            coords[j] = 1
        terms[tuple(coords)] = 1
    return RepRingElement(group, terms)


def symmetric_to_laurent(s: SymmetricElement, n: int | None = None) -> RepRingElement:
    """Evaluate e_i at the elementary symmetric polynomials of t_1..t_n.

    e_n^(-1) maps to the inverse determinant monomial (t_1...t_n)^(-1); the
    image is always S_n-symmetric.
    """
    if n is None:
        n = s.n
    if n != s.n:
        raise ValueError("rank does not match the symmetric element")
    group = torus_group(n)
    es = [elementary_symmetric_character(n, i) for i in range(1, n + 1)]
    total = RepRingElement.zero(group)
    for exps, c in s.terms.items():
        factor = RepRingElement.one(group) * c
        for i, a in enumerate(exps):
            if i == n - 1 and a < 0:
                factor = factor * RepRingElement.character(group, (-1,) * n) ** (-a)
            elif a:
                factor = factor * es[i] ** a
        total = total + factor
    return total


def gl_augmentation_generators(n: int) -> list[RepRingElement]:
    """Generators of the rank-0 ideal of R(GL_n) inside the rank-n torus ring.

    The augmentation ideal of Z[e_1..e_n, e_n^(-1)] maps onto the ideal
    generated by e_i - C(n, i); the unit e_n^(-1) contributes nothing new.
    """
    return [
        elementary_symmetric_character(n, i) - math.comb(n, i)
        for i in range(1, n + 1)
    ]


# ---------------------------------------------------------------------------
# Bounded ideal-membership certificates


def _solve_sparse_linear(equations):
    """Solve a sparse rational linear system given as (row dict, rhs) pairs.

    Returns {var: Fraction} for one solution (absent vars are zero) or None
    when the system is inconsistent.  Incremental triangular elimination with
    mutually reduced pivot rows keeps the work proportional to the fill-in.
    """
    pivot_rows = {}  # var -> (row dict without the pivot var, value)
    for row, b in equations:
        row = {k: Fraction(v) for k, v in row.items() if v}
        b = Fraction(b)
        for var in [v for v in row if v in pivot_rows]:
            c = row.pop(var)
            prow, pval = pivot_rows[var]
            for k2, v2 in prow.items():
                s = row.get(k2, Fraction(0)) - c * v2
                if s:
                    row[k2] = s
                else:
                    row.pop(k2, None)
            b -= c * pval
        if not row:
            if b != 0:
                return None
            continue
        var = min(row)
        c = row.pop(var)
        row = {k: v / c for k, v in row.items()}
        b /= c
        for pvar, (prow, pval) in pivot_rows.items():
            if var in prow:
                c2 = prow.pop(var)
                for k2, v2 in row.items():
                    s = prow.get(k2, Fraction(0)) - c2 * v2
                    if s:
                        prow[k2] = s
                    else:
                        prow.pop(k2, None)
                pivot_rows[pvar] = (prow, pval - c2 * b)
        pivot_rows[var] = (row, b)
    return {var: val for var, (_, val) in pivot_rows.items() if val}


def ideal_membership_certificate(target: RepRingElement, generators, degree_bound: int):
    """Search for cofactors c_i with target = sum_i c_i * g_i.

    Candidate cofactors range over monomials with every exponent in
    [-degree_bound, degree_bound].  A returned certificate has been
    re-verified by exact multiplication; None means nothing was found within
    the bound, which proves nothing about non-membership.
    """
    group = target.group
    if not group.is_free:
        raise ValueError("certificate search is defined over torus rings")
    generators = list(generators)
    for g in generators:
        if g.group != group:
            raise ValueError("elements over mismatched group descriptors")
    rank = group.ngens
    box = list(product(range(-degree_bound, degree_bound + 1), repeat=rank))

    # column structure: variable (i, m) contributes g_i[e] to the product
    # monomial m + e (distinct e give distinct w, so plain assignment)
    columns = {}
    for i, g in enumerate(generators):
        for m in box:
            for e, c in g.terms.items():
                w = tuple(a + b for a, b in zip(m, e))
                columns.setdefault(w, {})[(i, m)] = c

    support = set(columns) | set(target.terms)
    equations = [
        (columns.get(w, {}), target.terms.get(w, 0)) for w in sorted(support)
    ]
    solution = _solve_sparse_linear(equations)
    if solution is None:
        return None

    cofactors = []
    for i in range(len(generators)):
        terms = {m: c for (j, m), c in solution.items() if j == i}
        cofactors.append(RepRingElement(group, terms))
    combo = RepRingElement.zero(group)
    for c, g in zip(cofactors, generators):
        combo = combo + c * g
    if combo != target:
        raise RuntimeError("certificate failed exact re-verification")
    return cofactors
