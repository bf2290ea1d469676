"""Executable identity checks with structured pass/fail reports.

Each suite rebuilds both sides of an identity from scratch through a stated
truncation order and reports either a clean pass or the exact location of
the first mismatching coefficient (x-degree where applicable, q-exponent,
and the two exact rational values).  Passing at order N is coefficientwise
evidence through q^N, not a proof.

Every suite takes an optional `Perturbation` naming one of its intermediate
series; the named series gets a single coefficient bumped before use.  This
is the fault-injection seam: a suite that cannot be made to fail by a
one-coefficient perturbation would be vacuous.  `perturbable_targets`
enumerates the valid names per suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .macmahon import Family, gen_direct, gen_explicit, gen_recurrence, oracle_a, oracle_c, theta_f, theta_g
from .quasimodular import NoDecompositionError, decompose
from .series import QSeries, pochhammer_inf

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Mismatch:
    """First located coefficient disagreement of an identity check."""

    x_degree: Optional[int]
    q_exponent: int
    lhs_coefficient: Optional[Rational]
    rhs_coefficient: Optional[Rational]

    def to_json_obj(self) -> dict:
        def enc(v):
            return None if v is None else str(v)

        return {
            "x_degree": self.x_degree,
            "q_exponent": self.q_exponent,
            "lhs_coefficient": enc(self.lhs_coefficient),
            "rhs_coefficient": enc(self.rhs_coefficient),
        }


@dataclass
class VerificationReport:
    """Structured outcome of one identity suite."""

    identity_name: str
    parameters: dict
    checked_order: int
    status: str  # "pass" | "fail"
    first_mismatch: Optional[Mismatch]
    elapsed: float
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.status == "fail") != (self.first_mismatch is not None):
            raise ValueError("status must be 'fail' exactly when a mismatch is present")
        if self.status not in ("pass", "fail"):
            raise ValueError(f"invalid status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        return {
            "identity_name": self.identity_name,
            "parameters": dict(self.parameters),
            "checked_order": self.checked_order,
            "status": self.status,
            "first_mismatch": None
            if self.first_mismatch is None
            else self.first_mismatch.to_json_obj(),
            "elapsed": self.elapsed,
            "details": self.details,
        }

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        line = f"{self.status.upper():<4} {self.identity_name} [{params}] ({self.elapsed:.2f}s)"
        if self.first_mismatch is not None:
            m = self.first_mismatch
            where = f"q^{m.q_exponent}"
            if m.x_degree is not None:
                where = f"x^{m.x_degree} {where}"
            line += f" first mismatch at {where}: {m.lhs_coefficient} vs {m.rhs_coefficient}"
        return line


@dataclass(frozen=True)
class Perturbation:
    """Bump one coefficient of a named intermediate series by `delta`.

    The exponent must lie in the tracked range of the named series (note the
    odd-family theorem suite builds its A_k only to half the q-order, since
    they enter through q -> q^2).
    """

    target: str
    exponent: int
    delta: Rational = 1


def _tap(series: QSeries, name: str, perturb: Optional[Perturbation]) -> QSeries:
    if perturb is None or perturb.target != name:
        return series
    data = list(series.coeffs)
    if not 0 <= perturb.exponent < len(data):
        raise ValueError(
            f"perturbation exponent {perturb.exponent} outside tracked range "
            f"of {name} (order {series.order})"
        )
    data[perturb.exponent] = data[perturb.exponent] + perturb.delta
    return QSeries(data, series.order)


def _first_mismatch(
    lhs: QSeries, rhs: QSeries, upto: int, x_degree: Optional[int]
) -> Optional[Mismatch]:
    for n in range(upto + 1):
        a = lhs.coefficient(n)
        b = rhs.coefficient(n)
        if a != b:
            return Mismatch(x_degree, n, a, b)
    return None


def perturbable_targets(suite: str, k_max: int) -> list[str]:
    """Intermediate-series names a Perturbation may address, per suite."""
    if suite == "theorem-f":
        return (
            ["prefactor"]
            + [f"A_{k}" for k in range(k_max + 1)]
            + [f"theta_x{d}" for d in range(2 * k_max + 2)]
        )
    if suite == "theorem-g":
        return (
            ["prefactor"]
            + [f"C_{k}" for k in range(k_max + 1)]
            + [f"theta_x{d}" for d in range(2 * k_max + 1)]
        )
    if suite == "agreement":
        return ["direct", "explicit", "recurrence"]
    if suite == "quasimodular":
        return [f"A_{k}" for k in range(1, k_max + 1)]
    raise ValueError(f"unknown suite {suite!r}")


def verify_theorem_f(
    k_max: int, order: int, perturb: Optional[Perturbation] = None
) -> VerificationReport:
    """Check F(x,q) = (q^2;q^2)_inf^3 * sum_k A_k(q^2) x^(2k+1) through x^(2k_max+1).

    Also asserts that every even x-degree entry of F vanishes.  k_max = 0 is
    the seed identity sum (-1)^n (2n+1) q^(n^2+n) = (q^2;q^2)_inf^3.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    t0 = time.perf_counter()
    bound = 2 * k_max + 1
    theta = theta_f(bound, order)
    entries = [_tap(theta.entry(d), f"theta_x{d}", perturb) for d in range(bound + 1)]
    prefactor = _tap(pochhammer_inf(1, 2, 2, order) ** 3, "prefactor", perturb)
    half = (order + 1) // 2
    expected = {}
    for k in range(k_max + 1):
        a_k = _tap(gen_direct(Family.A, k, half), f"A_{k}", perturb)
        expected[2 * k + 1] = prefactor * a_k.substitute(2).truncate(order)
    zero = QSeries.zero(order)
    mismatch = None
    for d in range(bound + 1):
        mismatch = _first_mismatch(entries[d], expected.get(d, zero), order, d)
        if mismatch is not None:
            break
    return VerificationReport(
        identity_name="theorem-f",
        parameters={"k_max": k_max, "order": order},
        checked_order=order,
        status="fail" if mismatch else "pass",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - t0,
    )


def verify_theorem_g(
    k_max: int, order: int, perturb: Optional[Perturbation] = None
) -> VerificationReport:
    """Check G(x,q) = (q;q)_inf/(-q;q)_inf * sum_k C_k(q) x^(2k) through x^(2k_max).

    Also asserts that every odd x-degree entry of G vanishes.  k_max = 0 is
    the seed identity 1 + 2 sum (-1)^n q^(n^2) = (q;q)_inf/(-q;q)_inf.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    t0 = time.perf_counter()
    bound = 2 * k_max
    theta = theta_g(bound, order)
    entries = [_tap(theta.entry(d), f"theta_x{d}", perturb) for d in range(bound + 1)]
    prefactor = _tap(
        pochhammer_inf(1, 1, 1, order) * pochhammer_inf(-1, 1, 1, order).inverse(),
        "prefactor",
        perturb,
    )
    expected = {}
    for k in range(k_max + 1):
        c_k = _tap(gen_direct(Family.C, k, order), f"C_{k}", perturb)
        expected[2 * k] = prefactor * c_k
    zero = QSeries.zero(order)
    mismatch = None
    for d in range(bound + 1):
        mismatch = _first_mismatch(entries[d], expected.get(d, zero), order, d)
        if mismatch is not None:
            break
    return VerificationReport(
        identity_name="theorem-g",
        parameters={"k_max": k_max, "order": order},
        checked_order=order,
        status="fail" if mismatch else "pass",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - t0,
    )


def verify_method_agreement(
    family: Family, k: int, order: int, perturb: Optional[Perturbation] = None
) -> VerificationReport:
    """Check the three series routes agree to `order`, plus the enumeration
    oracle on exponents up to min(order, 40)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t0 = time.perf_counter()
    direct = _tap(gen_direct(family, k, order), "direct", perturb)
    explicit = _tap(gen_explicit(family, k, order), "explicit", perturb)
    recurrence = _tap(gen_recurrence(family, k, order), "recurrence", perturb)
    mismatch = _first_mismatch(direct, explicit, order, None)
    if mismatch is None:
        mismatch = _first_mismatch(direct, recurrence, order, None)
    if mismatch is None:
        oracle = oracle_a if family is Family.A else oracle_c
        for n in range(1, min(order, 40) + 1):
            want = oracle(n, k)
            got = direct.coefficient(n)
            if got != want:
                mismatch = Mismatch(None, n, got, want)
                break
    return VerificationReport(
        identity_name="method-agreement",
        parameters={"family": family.value, "k": k, "order": order},
        checked_order=order,
        status="fail" if mismatch else "pass",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - t0,
    )


def verify_quasimodularity(
    k_max: int, order: int, perturb: Optional[Perturbation] = None
) -> VerificationReport:
    """Constructively decompose A_1..A_{k_max} at weight bound 2k.

    Records decomposition sizes in the report details, along with an
    informational probe showing that the odd-part family's C_1 does NOT
    decompose in this basis (expected; its failure does not fail the suite).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    t0 = time.perf_counter()
    details: dict = {}
    mismatch = None
    for k in range(1, k_max + 1):
        target = _tap(gen_direct(Family.A, k, order), f"A_{k}", perturb)
        try:
            dec = decompose(target, 2 * k, order, description=f"A_{k}")
        except NoDecompositionError as e:
            mismatch = Mismatch(None, e.exponent, e.lhs, e.rhs)
            break
        details[f"A_{k}"] = {
            "weight_bound": dec.weight_bound,
            "terms": len(dec.terms),
            "ambiguous": dec.ambiguous,
        }
    if mismatch is None:
        try:
            decompose(gen_direct(Family.C, 1, order), 2, order, description="C_1")
            details["C_1_probe"] = {"status": "decomposed-unexpectedly"}
        except NoDecompositionError as e:
            details["C_1_probe"] = {
                "status": "no-decomposition",
                "witness_exponent": e.exponent,
            }
    return VerificationReport(
        identity_name="quasimodularity",
        parameters={"k_max": k_max, "order": order},
        checked_order=order,
        status="fail" if mismatch else "pass",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - t0,
        details=details,
    )
