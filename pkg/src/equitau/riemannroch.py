"""Equivariant Euler characteristics on projective-space models.

chi(E) = pushforward(ch(E) * td(tangent)) lands in the truncated series ring
of the base.  Three independent routes are compared on P^1 with weights
(1, -1):

* the pushforward pipeline above,
* the closed form (e^{(n+1)t} - e^{-(n+1)t}) / (e^t - e^{-t}), expanded as a
  signed sum of exponentials, and
* a brute-force count of section monomials (the actual character of the
  cohomology).

For n >= 0 the resulting character is that of an irreducible SL2
representation; irreducibility itself is representation theory with no
computational check here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .charclass import LineTwist, ProjSpaceModel, Tangent, chern_character_bundle, todd_class_bundle, torus_model
from .gradedring import GradedSeries, exp, pushforward
from .lattice import Weight
from .reprring import RepRingElement, chern_character


def hrr_chi(model: ProjSpaceModel, bundle) -> GradedSeries:
    """Euler characteristic via pushforward(ch(bundle) * td(tangent))."""
    model._require_torus()
    ch = chern_character_bundle(model, bundle)
    td = todd_class_bundle(model, Tangent())
    return pushforward(ch * td)


def weyl_closed_form(n: int, truncation: int) -> GradedSeries:
    """(e^{(n+1)t} - e^{-(n+1)t}) / (e^t - e^{-t}) as a truncated series.

    Equals sum_{k = -n, step 2}^{n} e^{kt} for n >= 0, vanishes at n = -1,
    and is minus the reflected sum for n <= -2 (the numerator is odd under
    n -> -n - 2).
    """
    if n == -1:
        return GradedSeries.zero(1, truncation)
    if n < -1:
        return -weyl_closed_form(-n - 2, truncation)
    total = GradedSeries.zero(1, truncation)
    for k in range(-n, n + 1, 2):
        total = total + exp(GradedSeries.linear_form(1, truncation, (k,)))
    return total


def sections_character_oracle(model: ProjSpaceModel, twist: int):
    """Exact character of the cohomology Euler sum of O(twist), by enumeration.

    For twist >= 0 this lists the degree-`twist` monomials in the coordinates
    of V^* (each contributing the negated sum of the chosen action weights);
    for -dim <= twist <= -1 all cohomology vanishes.  Returns None for
    twist < -dim, where the enumeration does not apply.
    """
    group = model.group
    if twist < -model.dim:
        return None
    if twist < 0:
        return RepRingElement.zero(group)
    total = RepRingElement.zero(group)
    for combo in combinations_with_replacement(range(len(model.weights)), twist):
        w = Weight.zero(group)
        for i in combo:
            w = w - model.weights[i]
        total = total + RepRingElement.character(group, w)
    return total


@dataclass(frozen=True)
class EulerCharacteristicResult:
    series: GradedSeries
    oracle_character: RepRingElement | None
    matches_oracle: bool | None


def chi_with_oracle(model: ProjSpaceModel, bundle: LineTwist) -> EulerCharacteristicResult:
    """Run the pushforward pipeline and, when it applies, the section oracle."""
    series = hrr_chi(model, bundle)
    oracle = sections_character_oracle(model, bundle.power)
    if oracle is not None and bundle.character is not None:
        oracle = oracle * RepRingElement.character(model.group, bundle.character)
    matches = None
    if oracle is not None:
        matches = chern_character(oracle, model.truncation) == series
    return EulerCharacteristicResult(series, oracle, matches)


@dataclass(frozen=True)
class WeylRow:
    twist: int
    pipeline: GradedSeries
    closed_form: GradedSeries
    oracle_series: GradedSeries
    oracle_character: RepRingElement
    ok: bool


@dataclass(frozen=True)
class WeylReport:
    truncation: int
    rows: tuple[WeylRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.ok for r in self.rows)

    def render_text(self) -> str:
        lines = []
        for r in self.rows:
            status = "pass" if r.ok else "FAIL"
            lines.append(
                f"n={r.twist:>3}  {status}  pipeline = {r.pipeline}  |  "
                f"closed form = {r.closed_form}  |  "
                f"sections = {r.oracle_series}  (character {r.oracle_character})"
            )
        return "\n".join(lines)


def verify_weyl(n_max: int, truncation: int) -> WeylReport:
    """Three-way check of chi(O(n)) on P^1 with weights (1, -1) for n in [-1, n_max].

    Failures are reported per row, never raised.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    model = torus_model([1, -1], truncation)
    rows = []
    for n in range(-1, n_max + 1):
        pipeline = hrr_chi(model, LineTwist(n))
        closed = weyl_closed_form(n, truncation)
        oracle = sections_character_oracle(model, n)
        oracle_series = chern_character(oracle, truncation)
        ok = pipeline == closed and oracle_series == closed
        rows.append(WeylRow(n, pipeline, closed, oracle_series, oracle, ok))
    return WeylReport(truncation, tuple(rows))
