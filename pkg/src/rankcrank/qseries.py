"""Truncated formal power series in q with exact integer coefficients.

A `TruncatedSeries` holds coefficients of q^0 .. q^N for a fixed
truncation order N.  Arithmetic never rounds: coefficients are Python
ints, terms beyond the order are discarded, and mixing orders is an
error rather than a silent re-truncation.

On top of the arithmetic sit the two series this package cares about:
the reciprocal Euler product, whose n-th coefficient is p(n), and the
two-parameter theta-like sum whose reciprocal-Euler multiple generates
the ospt values.  Both are cross-checked coefficient by coefficient
against the table machinery in the verification suite.
"""

from __future__ import annotations

import time

from .partitions import partition_count
from .report import CheckRecorder, VerifyReport


class TruncatedSeries:
    """A polynomial truncation of a formal power series in q."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        c = list(coeffs)
        if len(c) > order + 1:
            raise ValueError(f"{len(c)} coefficients exceed order {order}")
        c.extend([0] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = c

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [1])

    @classmethod
    def monomial(cls, exponent: int, sign: int = 1, *, order: int) -> "TruncatedSeries":
        """sign * q^exponent; exponents beyond the order give the zero series,
        so iteration bounds may overshoot harmlessly."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        series = cls(order)
        if exponent <= order:
            series.coeffs[exponent] = sign
        return series

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.order, [other * a for a in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k in range(i, self.order + 1):
                out[k] += a * other.coeffs[k - i]
        return TruncatedSeries(self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +-1 to stay integral."""
        a0 = self.coeffs[0]
        if a0 not in (1, -1):
            raise ValueError("inverse needs constant term +1 or -1")
        inv = [0] * (self.order + 1)
        inv[0] = a0
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * inv[k - i]
            inv[k] = -a0 * acc
        return TruncatedSeries(self.order, inv)

    def __repr__(self) -> str:
        shown = self.coeffs[: min(8, self.order + 1)]
        tail = " ..." if self.order + 1 > 8 else ""
        return f"TruncatedSeries(order={self.order}, coeffs={shown}{tail})"


def one_minus_q_to(k: int, *, order: int) -> TruncatedSeries:
    """The binomial 1 - q^k as a truncated series."""
    return TruncatedSeries.monomial(0, 1, order=order) - TruncatedSeries.monomial(k, 1, order=order)


def euler_product(order: int) -> TruncatedSeries:
    """prod_{k=1..order} (1 - q^k), the Euler product truncated at `order`.

    Computed by literal multiplication; the pentagonal sparsity of the
    result is a test oracle, not an input.
    """
    acc = TruncatedSeries.one(order)
    for k in range(1, order + 1):
        acc = acc * one_minus_q_to(k, order=order)
    return acc


def euler_inverse(order: int) -> TruncatedSeries:
    """1 / prod (1 - q^k); coefficient n is p(n).

    Obtained by inverting the literal product, so agreement with the
    pentagonal-recurrence p(n) is a genuine two-route check.
    """
    return euler_product(order).inverse()


def ospt_numerator(order: int) -> TruncatedSeries:
    """The double sum whose reciprocal-Euler multiple generates ospt(n).

    Sum over i, j >= 0 of

      q^(6i^2+8ij+2j^2+7i+5j+2) (1 - q^(4i+2)) (1 - q^(4i+2j+3))
    + q^(6i^2+8ij+2j^2+5i+3j+1) (1 - q^(2i+1)) (1 - q^(4i+2j+2)).

    Iteration stops once a family's base exponent exceeds the order;
    within a term, the four monomials clip individually, so widening
    the bounds can never change a kept coefficient.
    """
    acc = TruncatedSeries.zero(order)

    def add_term(base: int, e1: int, e2: int) -> None:
        # q^base (1 - q^e1)(1 - q^e2), clipped to the order
        nonlocal acc
        acc += TruncatedSeries.monomial(base, 1, order=order)
        acc -= TruncatedSeries.monomial(base + e1, 1, order=order)
        acc -= TruncatedSeries.monomial(base + e2, 1, order=order)
        acc += TruncatedSeries.monomial(base + e1 + e2, 1, order=order)

    i = 0
    while 6 * i * i + 7 * i + 2 <= order:
        j = 0
        while (base := 6 * i * i + 8 * i * j + 2 * j * j + 7 * i + 5 * j + 2) <= order:
            add_term(base, 4 * i + 2, 4 * i + 2 * j + 3)
            j += 1
        i += 1
    i = 0
    while 6 * i * i + 5 * i + 1 <= order:
        j = 0
        while (base := 6 * i * i + 8 * i * j + 2 * j * j + 5 * i + 3 * j + 1) <= order:
            add_term(base, 2 * i + 1, 4 * i + 2 * j + 2)
            j += 1
        i += 1
    return acc


def ospt_series(order: int) -> TruncatedSeries:
    """Generating function of ospt: euler_inverse * ospt_numerator."""
    return euler_inverse(order) * ospt_numerator(order)


def verify_genfun(order: int, table, tau_limit: int = 0) -> VerifyReport:
    """Check the q-series layer against the table (and optionally tau) routes.

    * euler_inverse coefficients equal the pentagonal-recurrence p(n);
    * ospt_series coefficients equal the crank/rank moment difference
      for 1 <= n <= min(order, table.nmax) (weight 1 included: both
      routes give 1 there under the weight-1 table conventions);
    * coefficients are strictly positive for n >= 2;
    * if tau_limit >= 2, coefficients also match the re-ordering count
      of crank-rank difference 1 for 2 <= n <= tau_limit.
    """
    from . import reordering  # deferred: reordering does not import qseries

    started = time.monotonic()
    rec = CheckRecorder()
    nmax = min(order, table.nmax)
    inv = euler_inverse(order)
    for n in range(0, order + 1):
        rec.expect(
            "euler-inverse-counts-partitions",
            inv[n] == partition_count(n),
            {"n": n, "coefficient": inv[n], "p": partition_count(n)},
        )
    series = ospt_series(order)
    for n in range(1, nmax + 1):
        rec.expect(
            "ospt-series-matches-moments",
            series[n] == table.ospt_moments(n),
            {"n": n, "coefficient": series[n], "moments": table.ospt_moments(n)},
        )
    for n in range(2, order + 1):
        rec.expect("ospt-series-positive", series[n] > 0, {"n": n, "coefficient": series[n]})
    for n in range(2, tau_limit + 1):
        via_tau = reordering.ospt_via_tau(reordering.build_tau(n))
        rec.expect(
            "ospt-series-matches-tau",
            series[n] == via_tau,
            {"n": n, "coefficient": series[n], "tau": via_tau},
        )
    elapsed = int((time.monotonic() - started) * 1000)
    return VerifyReport(
        suite="genfun",
        range={"order": order, "moment_nmax": nmax, "tau_nmax": tau_limit},
        checks=rec.results(),
        elapsed_ms=elapsed,
    )
