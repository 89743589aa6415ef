"""Exact rank/crank count tables, cumulations, moments, and their checks.

`StatTable` holds, for every 1 <= n <= nmax:

* N(m, n): partitions of n with rank m,
* M(m, n): partitions of n with crank m, and
* q(m, n): partitions of n whose rank-set contains m,

densely over |m| <= n (the q row over |m| <= n + 2), with prefix and
suffix sums so cumulative queries cost O(1).  All entries are Python
ints, so counts and moments are exact at any size: arithmetic cannot
overflow or wrap, it just grows.

Weight-1 convention: the crank row of n = 1 is M(0, 1) = -1 and
M(-1, 1) = M(1, 1) = 1.  This is a counting convention applied at the
table level only; `statistics.crank` still maps the partition (1) to
-1, and rows for n >= 2 are plain tallies.

Two builders with recorded provenance:

* `build` streams every partition once per weight and tallies rank,
  crank, rank-set membership, and the smallest-part count directly.
  It is the required backend and the oracle for everything else.
* `build_accelerated` computes the same cells arithmetically: rank and
  crank rows from sparse alternating series against the reciprocal
  Euler product (which reproduces the weight-1 crank convention by
  itself), q rows from bounded-part counts summed over Durfee
  rectangles.  Negative-m q cells use the fact that conjugation
  complements rank-sets: m is in the rank-set of a partition iff
  -m - 1 is not in the rank-set of its conjugate (verified exhaustively
  in the tests).  The accelerated table carries no smallest-part tally.

The two backends must agree cell for cell; the acceptance suite checks
this through n = 45 before the accelerated one is used at larger n.
"""

from __future__ import annotations

import math
import time

from .partitions import enumerate_partitions, partition_count, partition_count_series
from .report import CheckRecorder, VerifyReport
from .statistics import rank_set_contains, smallest_part_count

# Rational lower bound for pi^2, used to check sqrt(6n)/pi bounds in
# pure integer arithmetic: PI_SQ_LO_NUM / PI_SQ_LO_DEN < pi^2.
PI_SQ_LO_NUM = 9_869_604_401_089_358
PI_SQ_LO_DEN = 10**15

WEIGHT_ONE_CRANK_ROW = {-1: 1, 0: -1, 1: 1}


class StatTable:
    """Dense exact tables of N(m, n), M(m, n), and q(m, n) for n <= nmax."""

    def __init__(self, nmax, rank_rows, crank_rows, q_rows, spt_tallies, provenance):
        if nmax < 1:
            raise ValueError("nmax must be >= 1")
        self.nmax = nmax
        self.provenance = provenance  # "enumerated" or "accelerated"
        self._rank = rank_rows    # _rank[n]: list of 2n+1 counts, index m + n
        self._crank = crank_rows  # same layout
        self._q = q_rows          # _q[n]: list of 2n+5 counts, index m + n + 2
        self._spt = spt_tallies   # _spt[n]: smallest-part tally, or None
        self._rank_prefix = [None] + [self._prefix(rank_rows[n]) for n in range(1, nmax + 1)]
        self._crank_prefix = [None] + [self._prefix(crank_rows[n]) for n in range(1, nmax + 1)]

    @staticmethod
    def _prefix(row):
        acc = 0
        out = []
        for v in row:
            acc += v
            out.append(acc)
        return out

    def _check_n(self, n: int) -> None:
        if not 1 <= n <= self.nmax:
            raise ValueError(f"n must be in 1..{self.nmax}, got {n}")

    # -- cell accessors ------------------------------------------------

    def rank_count(self, m: int, n: int) -> int:
        """N(m, n); zero outside |m| <= n."""
        self._check_n(n)
        if abs(m) > n:
            return 0
        return self._rank[n][m + n]

    def crank_count(self, m: int, n: int) -> int:
        """M(m, n); zero outside |m| <= n."""
        self._check_n(n)
        if abs(m) > n:
            return 0
        return self._crank[n][m + n]

    def q_count(self, m: int, n: int) -> int:
        """q(m, n), the number of partitions of n whose rank-set contains m.

        Zero below -n; the total count for m >= n (every rank-set
        contains all integers from its partition's length upward).
        """
        self._check_n(n)
        if m < -n:
            return 0
        if m > n + 2:
            return self.rank_total(n)
        return self._q[n][m + n + 2]

    def rank_total(self, n: int) -> int:
        self._check_n(n)
        return self._rank_prefix[n][-1]

    def crank_total(self, n: int) -> int:
        self._check_n(n)
        return self._crank_prefix[n][-1]

    # -- cumulative queries ---------------------------------------------

    def cum_rank(self, m: int, n: int) -> int:
        """N(<= m, n) = sum of N(r, n) over r <= m."""
        self._check_n(n)
        if m < -n:
            return 0
        if m >= n:
            return self._rank_prefix[n][-1]
        return self._rank_prefix[n][m + n]

    def cum_crank(self, m: int, n: int) -> int:
        """M(<= m, n) = sum of M(r, n) over r <= m."""
        self._check_n(n)
        if m < -n:
            return 0
        if m >= n:
            return self._crank_prefix[n][-1]
        return self._crank_prefix[n][m + n]

    def p_ge(self, m: int, n: int) -> int:
        """Number of partitions of n with rank >= m."""
        self._check_n(n)
        if m <= -n:
            return self._rank_prefix[n][-1]
        if m > n:
            return 0
        return self._rank_prefix[n][-1] - self._rank_prefix[n][m - 1 + n]

    # -- moments ----------------------------------------------------------

    def moment_rank(self, k: int, n: int) -> int:
        """N_k(n) = sum over m of m^k N(m, n), exactly."""
        self._check_n(n)
        row = self._rank[n]
        return sum((i - n) ** k * c for i, c in enumerate(row) if c)

    def moment_crank(self, k: int, n: int) -> int:
        """M_k(n) = sum over m of m^k M(m, n), exactly."""
        self._check_n(n)
        row = self._crank[n]
        return sum((i - n) ** k * c for i, c in enumerate(row) if c)

    def abs_crank_moment(self, n: int) -> int:
        """Sum over m of |m| M(m, n): the total absolute crank."""
        self._check_n(n)
        row = self._crank[n]
        return sum(abs(i - n) * c for i, c in enumerate(row) if c)

    def spt(self, n: int) -> int:
        """spt(n) through the moment identity n p(n) - N_2(n)/2."""
        self._check_n(n)
        num = 2 * n * partition_count(n) - self.moment_rank(2, n)
        half, remainder = divmod(num, 2)
        if remainder:
            raise ArithmeticError(f"2n p(n) - N_2(n) is odd at n = {n}; table is corrupt")
        return half

    def spt_tally(self, n: int) -> int:
        """spt(n) as tallied during enumeration (enumerated tables only)."""
        self._check_n(n)
        if self._spt is None:
            raise ValueError(f"{self.provenance!r} table carries no smallest-part tally")
        return self._spt[n]

    @property
    def has_spt_tally(self) -> bool:
        return self._spt is not None

    def ospt_moments(self, n: int) -> int:
        """ospt(n) = sum over m >= 1 of m (M(m, n) - N(m, n))."""
        self._check_n(n)
        rank_row, crank_row = self._rank[n], self._crank[n]
        return sum((i - n) * (crank_row[i] - rank_row[i]) for i in range(n + 1, 2 * n + 1))

    # -- export -----------------------------------------------------------

    def write_csv(self, fp) -> None:
        """One row per (n, m) over |m| <= n, header ``n,m,N,M``, exact ints."""
        fp.write("n,m,N,M\n")
        for n in range(1, self.nmax + 1):
            rank_row, crank_row = self._rank[n], self._crank[n]
            for i in range(2 * n + 1):
                fp.write(f"{n},{i - n},{rank_row[i]},{crank_row[i]}\n")

    def to_json_dict(self) -> dict:
        """Nested dict {stat: {n: {m: count}}} plus nmax and provenance."""
        out = {"nmax": self.nmax, "provenance": self.provenance, "rank": {}, "crank": {}}
        for n in range(1, self.nmax + 1):
            out["rank"][str(n)] = {
                str(i - n): c for i, c in enumerate(self._rank[n])
            }
            out["crank"][str(n)] = {
                str(i - n): c for i, c in enumerate(self._crank[n])
            }
        return out


def build(nmax: int) -> StatTable:
    """Tally every table cell by streaming the partitions of each weight.

    One pass per n computes the rank row, the crank row, the full
    rank-set membership row, and the smallest-part total.  Rank-set
    rows exploit the structure of the membership sequence: the scan of
    parts exceeding 1 yields isolated members k - part(k), the block of
    ones yields a contiguous run, and everything from the length upward
    is a member (handled as prefix sums afterwards).
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    rank_rows: list = [None]
    crank_rows: list = [None]
    q_rows: list = [None]
    spt_tallies: list = [None]
    for n in range(1, nmax + 1):
        off = n + 2
        rank_row = [0] * (2 * n + 1)
        crank_row = [0] * (2 * n + 1)
        q_point = [0] * (2 * n + 5)
        q_block = [0] * (2 * n + 5)
        tail_at = [0] * (n + 1)
        spt_total = 0
        for lam in enumerate_partitions(n):
            length = len(lam)
            rank_row[lam[0] - length + n] += 1
            ones = 0
            i = length - 1
            while i >= 0 and lam[i] == 1:
                ones += 1
                i -= 1
            h = length - 1 - ones  # index of last part > 1, -1 if all ones
            big = 0
            for k in range(h + 1):
                v = lam[k]
                if v > ones:
                    big += 1
                q_point[k - v + off] += 1
            crank_row[(lam[0] if ones == 0 else big - ones) + n] += 1
            q_block[h + off] += 1
            q_block[length - 1 + off] -= 1
            tail_at[length] += 1
            if ones:
                spt_total += ones
            else:
                smallest = lam[h]
                r = h - 1
                while r >= 0 and lam[r] == smallest:
                    r -= 1
                spt_total += h - r
        if n == 1:
            crank_row = [WEIGHT_ONE_CRANK_ROW[m] for m in (-1, 0, 1)]
        q_row = [0] * (2 * n + 5)
        in_block = 0
        tail_sum = 0
        for idx in range(2 * n + 5):
            in_block += q_block[idx]
            v = idx - off
            if 1 <= v <= n:
                tail_sum += tail_at[v]
            q_row[idx] = q_point[idx] + in_block + tail_sum
        rank_rows.append(rank_row)
        crank_rows.append(crank_row)
        q_rows.append(q_row)
        spt_tallies.append(spt_total)
    return StatTable(nmax, rank_rows, crank_rows, q_rows, spt_tallies, "enumerated")


def _rows_from_series(nmax: int, base_exponent) -> list:
    """Shared engine for the rank and crank series rows.

    For m >= 0 the number of partitions of n with statistic value m is

      sum over k >= 1 of (-1)^(k-1) [p(n - e(k)) - p(n - e(k) - k)],

    where e(k) = k(3k-1)/2 + mk for the rank and e(k) = k(k-1)/2 + mk
    for the crank (`base_exponent` maps (k, m) to e(k)).  Rows are
    completed by the m <-> -m symmetry.  Note the crank series yields
    the weight-1 convention row on its own.
    """
    ps = partition_count_series(nmax)
    rows: list = [None] + [[0] * (2 * n + 1) for n in range(1, nmax + 1)]
    for m in range(0, nmax + 1):
        k = 1
        while (e := base_exponent(k, m)) <= nmax:
            sign = 1 if k % 2 else -1
            # every contribution lands at n >= e >= m, inside the row
            for n in range(max(e, m, 1), nmax + 1):
                rows[n][m + n] += sign * ps[n - e]
            for n in range(max(e + k, m, 1), nmax + 1):
                rows[n][m + n] -= sign * ps[n - e - k]
            k += 1
    for n in range(1, nmax + 1):
        for m in range(1, n + 1):
            rows[n][-m + n] = rows[n][m + n]
    return rows


def _bounded_part_counts(nmax: int) -> list:
    """pb[k][a] = number of partitions of a with every part <= k."""
    pb = [[1] + [0] * nmax]
    for k in range(1, nmax + 1):
        row = pb[k - 1][:]
        for a in range(k, nmax + 1):
            row[a] += row[a - k]
        pb.append(row)
    return pb


def build_accelerated(nmax: int) -> StatTable:
    """Compute the same tables arithmetically; no enumeration, no tally.

    Rank/crank rows come from `_rows_from_series`.  A q row entry for
    m >= 0 sums, over the possible m-Durfee rectangle widths j, the
    ways to fill the columns beside the rectangle (parts <= m + j) and
    the rows under it with first row exactly j (parts <= j on the rest):
    the j = 0 term degenerates to partitions with at most m parts.
    Entries for m < 0 use the conjugation complement
    q(m, n) = p(n) - q(-m - 1, n).
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    ps = partition_count_series(nmax)
    rank_rows = _rows_from_series(nmax, lambda k, m: k * (3 * k - 1) // 2 + m * k)
    crank_rows = _rows_from_series(nmax, lambda k, m: k * (k - 1) // 2 + m * k)
    pb = _bounded_part_counts(nmax)
    conv_cache: dict = {}

    def rectangle_fillings(m: int, j: int) -> list:
        # Convolution of parts <= m+j with parts <= j, up to the largest
        # remainder any n <= nmax can leave beside a (m+j) x j rectangle
        # whose first under-row is forced to j.
        key = (m, j)
        if key not in conv_cache:
            limit = nmax - j * (m + j) - j
            side, under = pb[m + j], pb[j]
            conv_cache[key] = [
                sum(side[a] * under[r - a] for a in range(r + 1)) for r in range(limit + 1)
            ]
        return conv_cache[key]

    def q_nonneg(m: int, n: int) -> int:
        total = pb[min(m, n)][n]
        j = 1
        while j * (m + j) + j <= n:
            total += rectangle_fillings(m, j)[n - j * (m + j) - j]
            j += 1
        return total

    q_rows: list = [None]
    for n in range(1, nmax + 1):
        row = []
        for m in range(-n - 2, n + 3):
            row.append(q_nonneg(m, n) if m >= 0 else ps[n] - q_nonneg(-m - 1, n))
        q_rows.append(row)
    return StatTable(nmax, rank_rows, crank_rows, q_rows, None, "accelerated")


def q_count_direct(m: int, n: int) -> int:
    """Oracle for q(m, n): literally test every partition's rank-set."""
    if n < 1:
        raise ValueError("q(m, n) requires n >= 1")
    return sum(1 for lam in enumerate_partitions(n) if rank_set_contains(lam, m))


def spt_direct(n: int) -> int:
    """Oracle for spt(n): sum the smallest-part multiplicities directly."""
    if n < 1:
        raise ValueError("spt(n) requires n >= 1")
    return sum(smallest_part_count(lam) for lam in enumerate_partitions(n))


def verify_identities(table: StatTable, nmax: int | None = None) -> VerifyReport:
    """Exact identity checks across the table, 1 <= n <= nmax.

    Covered: row sums against the pentagonal-recurrence p(n); the
    m <-> -m symmetries; the crank-cumulation/rank-set equality
    M(<= m, n) = q(m, n); the complement identities
    N(<= m+1, n) = p(n) - p_ge(m+2, n) and M(<= m, n) = p(n) - q(-m-1, n)
    and their difference form; the rank-set tail domination
    q(m, n) >= p_ge(-m+1, n) for m >= 0; the interlacing chains
    N(<= m, n) <= M(<= m, n) <= N(<= m+1, n) for m < 0 and its
    equivalent non-negative-m form, checked independently; and the
    moment identities N_1 = 0, M_2 = 2n p, and the two spt routes
    (plus the tallied route when the table carries one).
    """
    if nmax is None:
        nmax = table.nmax
    if not 1 <= nmax <= table.nmax:
        raise ValueError(f"nmax must be in 1..{table.nmax}")
    started = time.monotonic()
    rec = CheckRecorder()
    for n in range(1, nmax + 1):
        pn = partition_count(n)
        rec.expect("rank-row-sums-to-p", table.rank_total(n) == pn,
                   {"n": n, "total": table.rank_total(n), "p": pn})
        rec.expect("crank-row-sums-to-p", table.crank_total(n) == pn,
                   {"n": n, "total": table.crank_total(n), "p": pn})
        for m in range(1, n + 1):
            rec.expect("rank-symmetric-in-m",
                       table.rank_count(m, n) == table.rank_count(-m, n),
                       {"n": n, "m": m})
            rec.expect("crank-symmetric-in-m",
                       table.crank_count(m, n) == table.crank_count(-m, n),
                       {"n": n, "m": m})
        for m in range(-n - 2, n + 3):
            rec.expect("crank-cum-equals-rank-set-count",
                       table.cum_crank(m, n) == table.q_count(m, n),
                       {"n": n, "m": m, "cum_crank": table.cum_crank(m, n),
                        "q": table.q_count(m, n)})
        for m in range(-n - 2, n + 1):
            rec.expect("rank-cum-complement",
                       table.cum_rank(m + 1, n) == pn - table.p_ge(m + 2, n),
                       {"n": n, "m": m})
            rec.expect("crank-cum-complement",
                       table.cum_crank(m, n) == pn - table.q_count(-m - 1, n),
                       {"n": n, "m": m})
            rec.expect("cum-difference-transfer",
                       table.cum_rank(m + 1, n) - table.cum_crank(m, n)
                       == table.q_count(-m - 1, n) - table.p_ge(m + 2, n),
                       {"n": n, "m": m})
        for m in range(0, n + 3):
            rec.expect("rank-set-count-dominates-rank-tail",
                       table.q_count(m, n) >= table.p_ge(-m + 1, n),
                       {"n": n, "m": m, "q": table.q_count(m, n),
                        "p_ge": table.p_ge(-m + 1, n)})
        for m in range(-n - 2, 0):
            rec.expect("cum-chain-negative-m",
                       table.cum_rank(m, n) <= table.cum_crank(m, n)
                       <= table.cum_rank(m + 1, n),
                       {"n": n, "m": m,
                        "cum_rank": table.cum_rank(m, n),
                        "cum_crank": table.cum_crank(m, n),
                        "cum_rank_next": table.cum_rank(m + 1, n)})
        for m in range(0, n + 3):
            rec.expect("cum-chain-nonnegative-m",
                       table.cum_rank(m - 1, n) <= table.cum_crank(m, n)
                       <= table.cum_rank(m, n),
                       {"n": n, "m": m,
                        "cum_rank_prev": table.cum_rank(m - 1, n),
                        "cum_crank": table.cum_crank(m, n),
                        "cum_rank": table.cum_rank(m, n)})
        rec.expect("rank-first-moment-vanishes", table.moment_rank(1, n) == 0,
                   {"n": n, "N1": table.moment_rank(1, n)})
        m2_rank = table.moment_rank(2, n)
        m2_crank = table.moment_crank(2, n)
        rec.expect("crank-second-moment-is-2np", m2_crank == 2 * n * pn,
                   {"n": n, "M2": m2_crank, "2np": 2 * n * pn})
        spt_from_rank = table.spt(n)
        rec.expect("spt-moment-routes-agree",
                   2 * spt_from_rank == m2_crank - m2_rank,
                   {"n": n, "spt": spt_from_rank, "M2-N2": m2_crank - m2_rank})
        if table.has_spt_tally:
            rec.expect("spt-tally-matches-moments",
                       table.spt_tally(n) == spt_from_rank,
                       {"n": n, "tally": table.spt_tally(n), "moments": spt_from_rank})
    elapsed = int((time.monotonic() - started) * 1000)
    return VerifyReport(
        suite="identities",
        range={"nmin": 1, "nmax": nmax, "backend": table.provenance},
        checks=rec.results(),
        elapsed_ms=elapsed,
    )


def verify_bounds(table: StatTable, nmax: int | None = None) -> VerifyReport:
    """Inequality checks, integer-exact wherever the bound is algebraic.

    Square-root bounds compare squares; the sqrt(6n)/pi lower bound
    multiplies through by a rational lower approximation of pi^2, which
    is sufficient because the inequality is strict with room at desk
    scale.  The report's `info` block carries the asymptotic trend
    ratios (no pass/fail semantics): the cumulation gaps at the largest
    n in range divided by their predicted main terms.
    """
    if nmax is None:
        nmax = table.nmax
    if not 1 <= nmax <= table.nmax:
        raise ValueError(f"nmax must be in 1..{table.nmax}")
    started = time.monotonic()
    rec = CheckRecorder()
    for n in range(1, nmax + 1):
        pn = partition_count(n)
        spt_n = table.spt(n)
        abs_crank = table.abs_crank_moment(n)
        if n >= 2:
            ospt_n = table.ospt_moments(n)
            rec.expect("ospt-positive", ospt_n > 0, {"n": n, "ospt": ospt_n})
            rec.expect("ospt-at-most-half-crank-zero-gap",
                       2 * ospt_n <= pn - table.crank_count(0, n),
                       {"n": n, "ospt": ospt_n, "p": pn, "M0": table.crank_count(0, n)})
        rec.expect("spt-at-most-sqrt-2n-p",
                   spt_n * spt_n <= 2 * n * pn * pn,
                   {"n": n, "spt": spt_n, "p": pn})
        if n >= 5:
            rec.expect("spt-at-least-sqrt-6n-over-pi-p",
                       6 * n * pn * pn * PI_SQ_LO_DEN <= PI_SQ_LO_NUM * spt_n * spt_n,
                       {"n": n, "spt": spt_n, "p": pn})
            rec.expect("spt-at-most-sqrt-n-p",
                       spt_n * spt_n <= n * pn * pn,
                       {"n": n, "spt": spt_n, "p": pn})
        rec.expect("spt-at-most-abs-crank-sum",
                   spt_n <= abs_crank,
                   {"n": n, "spt": spt_n, "abs_crank_sum": abs_crank})
        if n >= 2:
            # Cauchy-Schwarz over the crank row needs every entry
            # nonnegative; the weight-1 convention row has a -1, so the
            # squared-sum bound starts at n = 2.
            rec.expect("abs-crank-sum-at-most-sqrt-2n-p",
                       abs_crank * abs_crank <= 2 * n * pn * pn,
                       {"n": n, "abs_crank_sum": abs_crank, "p": pn})
        for k in (1, 2, 3):
            rec.expect(f"crank-even-moment-dominates-k{k}",
                       table.moment_crank(2 * k, n) > table.moment_rank(2 * k, n),
                       {"n": n, "k": k,
                        "M2k": table.moment_crank(2 * k, n),
                        "N2k": table.moment_rank(2 * k, n)})
    ratios = []
    pn = partition_count(nmax)
    for m in (-1, -2, -3):
        if -m > nmax:
            continue
        gap_within = table.cum_crank(m, nmax) - table.cum_rank(m, nmax)
        gap_shift = table.cum_rank(m + 1, nmax) - table.cum_crank(m, nmax)
        main_within = -(1 + 2 * m) * math.pi**2 / (96 * nmax) * pn
        main_shift = math.pi / (4 * math.sqrt(6 * nmax)) * pn
        ratios.append({
            "m": m,
            "n": nmax,
            "crank-rank-gap-over-main-term": round(gap_within / main_within, 6),
            "shifted-rank-crank-gap-over-main-term": round(gap_shift / main_shift, 6),
        })
    elapsed = int((time.monotonic() - started) * 1000)
    return VerifyReport(
        suite="bounds",
        range={"nmin": 1, "nmax": nmax, "backend": table.provenance},
        checks=rec.results(),
        elapsed_ms=elapsed,
        info={"asymptotic-trend-ratios": ratios},
    )
