"""Generalized sum-of-divisors generating functions and their theta mates.

Two families of weighted partition generating functions are computed here,
selected by `Family`:

  A_k(q) = sum over 0 < m_1 < ... < m_k of q^(m_1+...+m_k) / prod (1-q^(m_i))^2
  C_k(q) = the same with the parts m_i replaced by odd parts 2*m_i - 1

The coefficient of q^n in A_k (resp. C_k) is the sum of s_1*...*s_k over all
ways of writing n = s_1*v_1 + ... + s_k*v_k with strictly increasing part
values v_i of the family's shape and multiplicities s_i >= 1; `oracle_a` and
`oracle_c` compute these counts by exhaustive enumeration and are the ground
truth every series route is checked against.

Three series routes are provided: `gen_direct` (the defining part sum),
`gen_explicit` (theta sum divided by an eta-type product) and
`gen_recurrence` (first-order recurrence in k seeded at k=1).  The bivariate
generating functions built from rescaled Chebyshev polynomials,

  F(x,q) = sum_{n>=0} P_{2n+1}(x) q^(n^2+n)
  G(x,q) = 1 + sum_{n>=1} P_{2n}(x) q^(n^2),     P_n(x) = 2*T_n(x/2),

tie the two families to the Jacobi triple product and are exposed as
`theta_f` / `theta_g` for the identity-verification suites.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Literal, Sequence

from .series import QSeries, pochhammer_inf


class Family(enum.Enum):
    """Selector between the two generating-function families."""

    A = "A"  # parts are arbitrary strictly increasing positive integers
    C = "C"  # parts are strictly increasing odd positive integers

    def part_value(self, m: int) -> int:
        return m if self is Family.A else 2 * m - 1


# -- exhaustive partition oracles ----------------------------------------------


def _oracle(n: int, k: int, family: Family) -> int:
    if n < 1 or k < 1:
        raise ValueError("oracle requires n >= 1 and k >= 1")

    def min_tail(j: int, m: int) -> int:
        # least possible sum of j parts with indices strictly above m
        base = j * m + j * (j + 1) // 2
        return base if family is Family.A else 2 * base - j

    def rec(rem: int, j: int, m_prev: int) -> int:
        if j == 0:
            return 1 if rem == 0 else 0
        total = 0
        m = m_prev + 1
        while family.part_value(m) + min_tail(j - 1, m) <= rem:
            v = family.part_value(m)
            tail = min_tail(j - 1, m)
            s = 1
            while s * v + tail <= rem:
                sub = rec(rem - s * v, j - 1, m)
                if sub:
                    total += s * sub
                s += 1
            m += 1
        return total

    return rec(n, k, 0)


def oracle_a(n: int, k: int) -> int:
    """Sum of s_1*...*s_k over n = s_1*m_1+...+s_k*m_k, 0 < m_1 < ... < m_k."""
    return _oracle(n, k, Family.A)


def oracle_c(n: int, k: int) -> int:
    """As oracle_a with odd parts: n = s_1*(2m_1-1)+...+s_k*(2m_k-1)."""
    return _oracle(n, k, Family.C)


# -- the three series routes ----------------------------------------------------


def _lambert_factor(v: int, order: int) -> QSeries:
    """q^v/(1-q^v)^2 = sum_{s>=1} s q^(s*v), truncated."""
    data = [0] * (order + 1)
    s = 1
    while s * v <= order:
        data[s * v] = s
        s += 1
    return QSeries(data, order)


def gen_direct(family: Family, k: int, order: int) -> QSeries:
    """The defining sum over strictly increasing k-tuples of parts.

    Accumulates part values in descending order, so row j-1 always holds the
    sum over (j-1)-tuples of strictly larger parts; tuples whose minimal
    contribution exceeds `order` never touch a tracked coefficient.  k = 0 is
    the empty product, i.e. the constant series 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return QSeries.one(order)
    rows: list[QSeries] = [QSeries.one(order)] + [QSeries.zero(order)] * k
    values = range(order, 0, -1) if family is Family.A else range(
        order if order % 2 else order - 1, 0, -2
    )
    for v in values:
        lam = _lambert_factor(v, order)
        for j in range(k, 0, -1):
            if not rows[j - 1].is_zero:
                rows[j] = rows[j] + lam * rows[j - 1]
    return rows[k]


def gen_explicit(family: Family, k: int, order: int) -> QSeries:
    """Closed form: signed theta sum times an eta-type prefactor.

    Family A:  (-1)^k/(2k+1)! * sum_{n>=k} (-1)^n (2n+1) (n+k)!/(n-k)! q^(n(n+1)/2)
               divided by (q;q)_inf^3.
    Family C:  (-1)^k/(2k)!  * sum_{n>=k} (-1)^n 2n (n+k-1)!/(n-k)! q^(n^2)
               times (-q;q)_inf/(q;q)_inf.

    The falling-factorial ratios vanish for n < k, so both sums may start at
    n = 0 (resp. n = 1); only exponents <= order are generated.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    data = [0] * (order + 1)
    if family is Family.A:
        n = 0
        while n * (n + 1) // 2 <= order:
            ff = math.prod(range(n - k + 1, n + k + 1))  # (n+k)!/(n-k)!
            if ff:
                sign = -1 if n & 1 else 1
                data[n * (n + 1) // 2] += sign * (2 * n + 1) * ff
            n += 1
        theta = QSeries(data, order)
        prefactor = (pochhammer_inf(1, 1, 1, order) ** 3).inverse()
        scale = Fraction((-1) ** k, math.factorial(2 * k + 1))
    else:
        n = 1
        while n * n <= order:
            ff = math.prod(range(n - k + 1, n + k))  # (n+k-1)!/(n-k)!
            if ff:
                sign = -1 if n & 1 else 1
                data[n * n] += sign * 2 * n * ff
            n += 1
        theta = QSeries(data, order)
        prefactor = pochhammer_inf(-1, 1, 1, order) * pochhammer_inf(
            1, 1, 1, order
        ).inverse()
        scale = Fraction((-1) ** k, math.factorial(2 * k))
    return (theta * prefactor) * scale


def gen_recurrence(family: Family, k: int, order: int) -> QSeries:
    """Recurrence route, seeded at k = 1 by gen_direct.

    A_k = [ (6*A_1 + k(k-1)) A_{k-1} - 2 q d/dq A_{k-1} ] / ((2k+1) 2k)
    C_k = [ (2*C_1 + (k-1)^2) C_{k-1} - q d/dq C_{k-1} ] / (2k (2k-1))

    The k = 1 instance of each relation is an identity in the seed rather
    than a constructor, so k = 1 returns the seed unchanged.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    seed = gen_direct(family, 1, order)
    cur = seed
    for j in range(2, k + 1):
        if family is Family.A:
            cur = ((6 * seed + j * (j - 1)) * cur - 2 * cur.q_derivative()) / (
                (2 * j + 1) * 2 * j
            )
        else:
            cur = ((2 * seed + (j - 1) ** 2) * cur - cur.q_derivative()) / (
                2 * j * (2 * j - 1)
            )
    return cur


# -- rescaled Chebyshev polynomials ---------------------------------------------


class IntPolynomial:
    """Integer-coefficient polynomial, coefficients indexed by degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        data = list(coeffs)
        for c in data:
            if not isinstance(c, int):
                raise TypeError("IntPolynomial coefficients must be ints")
        while data and data[-1] == 0:
            data.pop()
        self._coeffs: tuple = tuple(data)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    def coefficient(self, d: int) -> int:
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return self._coeffs[d] if d < len(self._coeffs) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "IntPolynomial[0]"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self._coeffs[d]
            if c:
                terms.append(f"{c}*x^{d}" if d else f"{c}")
        return "IntPolynomial[" + " + ".join(terms) + "]"


def cheb_rescaled(n: int) -> IntPolynomial:
    """P_n(x) = 2*T_n(x/2): P_0 = 2, P_1 = x, P_n = x*P_{n-1} - P_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return IntPolynomial([2])
    prev, cur = [2], [0, 1]
    for _ in range(n - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return IntPolynomial(cur)


def cheb_coeff_closed(n: int, k: int, parity: Literal["even", "odd"]) -> int:
    """Closed form for one coefficient of a rescaled Chebyshev polynomial.

    parity 'even': coefficient of x^(2k) in P_{2n} is
        (-1)^(n-k) * 2n * (n+k-1)! / ((n-k)! (2k)!),  n >= 1.
    parity 'odd':  coefficient of x^(2k+1) in P_{2n+1} is
        (-1)^(n-k) * (2n+1) * (n+k)! / ((n-k)! (2k+1)!),  n >= 0.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if k < 0 or k > n:
        raise ValueError("k must satisfy 0 <= k <= n")
    if parity == "even":
        if n < 1:
            raise ValueError("even parity requires n >= 1")
        num = 2 * n * math.factorial(n + k - 1)
        den = math.factorial(n - k) * math.factorial(2 * k)
    else:
        num = (2 * n + 1) * math.factorial(n + k)
        den = math.factorial(n - k) * math.factorial(2 * k + 1)
    value, rem = divmod(num, den)
    assert rem == 0  # the ratio is a polynomial coefficient, hence integral
    return -value if (n - k) & 1 else value


# -- bivariate theta series -------------------------------------------------------


class BivarSeries:
    """Polynomial in x whose coefficients are QSeries sharing one q-order."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Sequence[QSeries]):
        entries = tuple(entries)
        if not entries:
            raise ValueError("BivarSeries needs at least the x^0 entry")
        order = entries[0].order
        for e in entries:
            if e.order != order:
                raise ValueError("all x-entries must share the same q-order")
        self._entries = entries

    @property
    def x_degree_bound(self) -> int:
        return len(self._entries) - 1

    @property
    def q_order(self) -> int:
        return self._entries[0].order

    def entry(self, d: int) -> QSeries:
        """The QSeries coefficient of x^d."""
        if not 0 <= d <= self.x_degree_bound:
            raise ValueError(f"x-degree {d} outside 0..{self.x_degree_bound}")
        return self._entries[d]

    @property
    def entries(self) -> tuple:
        return self._entries

    def nonzero_degrees(self) -> list[int]:
        return [d for d, e in enumerate(self._entries) if not e.is_zero]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarSeries):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return (
            f"BivarSeries[x_degree_bound={self.x_degree_bound}, "
            f"q_order={self.q_order}, nonzero x-degrees={self.nonzero_degrees()}]"
        )


def theta_f(x_degree_bound: int, q_order: int) -> BivarSeries:
    """F(x,q) = sum_{n>=0} P_{2n+1}(x) q^(n^2+n), x-degrees above the bound dropped.

    Only odd x-degrees are populated.
    """
    grid = [[0] * (q_order + 1) for _ in range(x_degree_bound + 1)]
    n = 0
    while n * n + n <= q_order:
        poly = cheb_rescaled(2 * n + 1)
        e = n * n + n
        for d in range(1, min(x_degree_bound, poly.degree) + 1, 2):
            c = poly.coefficient(d)
            if c:
                grid[d][e] += c
        n += 1
    return BivarSeries([QSeries(row, q_order) for row in grid])


def theta_g(x_degree_bound: int, q_order: int) -> BivarSeries:
    """G(x,q) = 1 + sum_{n>=1} P_{2n}(x) q^(n^2), x-degrees above the bound dropped.

    Only even x-degrees are populated.
    """
    grid = [[0] * (q_order + 1) for _ in range(x_degree_bound + 1)]
    grid[0][0] = 1
    n = 1
    while n * n <= q_order:
        poly = cheb_rescaled(2 * n)
        e = n * n
        for d in range(0, min(x_degree_bound, poly.degree) + 1, 2):
            c = poly.coefficient(d)
            if c:
                grid[d][e] += c
        n += 1
    return BivarSeries([QSeries(row, q_order) for row in grid])
