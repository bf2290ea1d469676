"""Exact decomposition of q-series in the ring generated by E2, E4, E6.

A decomposition certificate states that a target series equals a rational
linear combination of monomials E2^a * E4^b * E6^c, verified coefficientwise
through a stated order.  The solver is deliberately two-stage: a small
overdetermined linear solve (basis size + 5 equations) finds the candidate,
then the candidate is re-evaluated and checked against every tracked
coefficient of the target, so "the solver found something" and "the identity
holds" stay distinguishable.

`fit_divisor_form` probes the related representation a_{n,k} =
sum_j p_j(n) * sigma_{2j-1}(n) with polynomial weights p_j of bounded degree;
there failure is a value (the first unsatisfiable n), not an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import IncrementalSolver
from .macmahon import Family, gen_direct
from .series import QSeries, divisor_sigma, eisenstein


@dataclass(frozen=True, order=True)
class QMMonomial:
    """Exponents (a, b, c) of E2^a * E4^b * E6^c."""

    a: int
    b: int
    c: int

    @property
    def weight(self) -> int:
        return 2 * self.a + 4 * self.b + 6 * self.c

    def __str__(self) -> str:
        if self.a == self.b == self.c == 0:
            return "1"
        parts = []
        for name, e in (("E2", self.a), ("E4", self.b), ("E6", self.c)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


class NoDecompositionError(Exception):
    """No decomposition exists at the requested weight bound.

    `stage` is 'solve' (the overdetermined system is inconsistent) or
    'verify' (a candidate matched the solve window but fails deeper);
    `exponent` is the first q-exponent that cannot be matched, `lhs` the
    target coefficient there and `rhs` the candidate's value (None at the
    solve stage, where no candidate exists).
    """

    def __init__(self, weight_bound: int, stage: str, exponent: int, lhs, rhs=None):
        self.weight_bound = weight_bound
        self.stage = stage
        self.exponent = exponent
        self.lhs = lhs
        self.rhs = rhs
        detail = f"target has {lhs}" + ("" if rhs is None else f", candidate {rhs}")
        super().__init__(
            f"no solution at weight bound {weight_bound}: "
            f"first mismatch at q^{exponent} ({stage} stage; {detail})"
        )


@dataclass
class QMDecomposition:
    """Verified rational combination of Eisenstein monomials."""

    terms: dict[QMMonomial, Fraction]
    weight_bound: int
    verified_order: int
    target_description: str = ""
    ambiguous: bool = False

    def to_json_obj(self) -> dict:
        return {
            "target": self.target_description,
            "weight_bound": self.weight_bound,
            "verified_order": self.verified_order,
            "ambiguous": self.ambiguous,
            "terms": [
                {"a": m.a, "b": m.b, "c": m.c, "coefficient": str(coeff)}
                for m, coeff in self.terms.items()
            ],
        }


def monomial_basis(weight_bound: int) -> list[QMMonomial]:
    """All monomials of weight <= weight_bound, in the solver's column order.

    Ordered by weight ascending, then E2-heavy first ((a, b, c)
    lexicographically descending within a weight); the order is part of the
    contract since it fixes which solution an underdetermined solve returns.
    """
    if weight_bound < 0 or weight_bound % 2:
        raise ValueError("weight bound must be even and nonnegative")
    basis = []
    for a in range(weight_bound // 2 + 1):
        for b in range((weight_bound - 2 * a) // 4 + 1):
            for c in range((weight_bound - 2 * a - 4 * b) // 6 + 1):
                basis.append(QMMonomial(a, b, c))
    basis.sort(key=lambda m: (m.weight, -m.a, -m.b, -m.c))
    return basis


def _monomial_series(basis: list[QMMonomial], order: int) -> list[QSeries]:
    gens = {w: eisenstein(w, order) for w in (2, 4, 6)}
    pow_cache: dict[tuple[int, int], QSeries] = {}

    def power(weight: int, e: int) -> QSeries:
        if e == 0:
            return QSeries.one(order)
        key = (weight, e)
        if key not in pow_cache:
            pow_cache[key] = power(weight, e - 1) * gens[weight]
        return pow_cache[key]

    out = []
    for m in basis:
        s = power(2, m.a)
        if m.b:
            s = s * power(4, m.b)
        if m.c:
            s = s * power(6, m.c)
        out.append(s)
    return out


def decompose(
    target: QSeries,
    weight_bound: int,
    order: int,
    description: str = "",
) -> QMDecomposition:
    """Exactly decompose `target` over the weight-bounded monomial basis.

    Solves coefficients 0..min(basis_size + 4, order), then verifies the
    candidate against every coefficient through `order`.  Raises
    NoDecompositionError when either stage fails; an underdetermined solve
    pins free columns to zero and flags the result as ambiguous.
    """
    basis = monomial_basis(weight_bound)
    if order < 2 * len(basis):
        raise ValueError(
            f"order {order} too small: need at least twice the basis size "
            f"({2 * len(basis)}) to overdetermine the system"
        )
    if order > target.order:
        raise ValueError(
            f"target only tracks coefficients to {target.order}, cannot verify to {order}"
        )
    columns = _monomial_series(basis, order)
    solve_top = min(len(basis) + 4, order)
    solver = IncrementalSolver(len(basis))
    for n in range(solve_top + 1):
        row = [col.coefficient(n) for col in columns]
        if not solver.add_equation(row, target.coefficient(n)):
            raise NoDecompositionError(
                weight_bound, "solve", n, target.coefficient(n)
            )
    values = solver.solution()
    ambiguous = bool(solver.free_columns())
    combo = QSeries.zero(order)
    for coeff, col in zip(values, columns):
        if coeff:
            combo = combo + col * coeff
    for n in range(order + 1):
        if combo.coefficient(n) != target.coefficient(n):
            raise NoDecompositionError(
                weight_bound, "verify", n, target.coefficient(n), combo.coefficient(n)
            )
    terms = {
        m: Fraction(coeff) for m, coeff in zip(basis, values) if coeff
    }
    return QMDecomposition(
        terms=terms,
        weight_bound=weight_bound,
        verified_order=order,
        target_description=description,
        ambiguous=ambiguous,
    )


def eval_decomposition(dec: QMDecomposition, order: int) -> QSeries:
    """Exact evaluation of a decomposition as a QSeries of the given order."""
    basis = sorted(dec.terms, key=lambda m: (m.weight, -m.a, -m.b, -m.c))
    columns = _monomial_series(basis, order)
    out = QSeries.zero(order)
    for m, col in zip(basis, columns):
        out = out + col * dec.terms[m]
    return out


@dataclass
class DivisorFitResult:
    """Outcome of fit_divisor_form; `polynomials` is None exactly on failure."""

    k: int
    degree_bound: int
    checked_n: int
    polynomials: Optional[list[list[Fraction]]] = None
    first_failure_n: Optional[int] = None
    ambiguous: bool = False

    @property
    def success(self) -> bool:
        return self.polynomials is not None

    def to_json_obj(self) -> dict:
        obj = {
            "k": self.k,
            "degree_bound": self.degree_bound,
            "checked_n": self.checked_n,
            "status": "success" if self.success else "no-solution",
        }
        if self.success:
            obj["polynomials"] = [
                [str(c) for c in poly] for poly in self.polynomials
            ]
            obj["ambiguous"] = self.ambiguous
        else:
            obj["first_failure_n"] = self.first_failure_n
        return obj


def fit_divisor_form(k: int, poly_degree_bound: int, order: int) -> DivisorFitResult:
    """Fit a_{n,k} = sum_{j=1..k} p_j(n) * sigma_{2j-1}(n) for 1 <= n <= order.

    The p_j are rational polynomials in n of degree <= poly_degree_bound,
    solved exactly over all stated n.  On inconsistency the result carries
    the first n at which no choice of polynomials can work.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if poly_degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    if order < 1:
        raise ValueError("order must be >= 1")
    target = gen_direct(Family.A, k, order)
    width = poly_degree_bound + 1
    solver = IncrementalSolver(k * width)
    for n in range(1, order + 1):
        sigmas = [divisor_sigma(n, 2 * j - 1) for j in range(1, k + 1)]
        row = []
        for j in range(k):
            npow = 1
            for _ in range(width):
                row.append(npow * sigmas[j])
                npow *= n
        if not solver.add_equation(row, target.coefficient(n)):
            return DivisorFitResult(
                k=k,
                degree_bound=poly_degree_bound,
                checked_n=order,
                first_failure_n=n,
            )
    values = solver.solution()
    polys = [values[j * width : (j + 1) * width] for j in range(k)]
    return DivisorFitResult(
        k=k,
        degree_bound=poly_degree_bound,
        checked_n=order,
        polynomials=polys,
        ambiguous=bool(solver.free_columns()),
    )
