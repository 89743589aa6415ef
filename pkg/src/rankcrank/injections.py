"""Weight-preserving injections between rank-tail and rank-set symbol classes.

Fix m >= 0 and n >= 1, and write symbols for partitions of n via their
m-Durfee rectangle decomposition (alpha | beta)_(m+j)xj.  Two families:

* P(-m+1, n): symbols of partitions with rank >= -m + 1, split into
    P1: j = 0, or j >= 1 and beta[0] = j
    P2: j >= 1 and beta[0] = j - 1
    P3: j >= 2 and beta[0] <= j - 2
  (an empty beta reads as beta[0] = 0, so j = 1 with empty beta is P2);

* Q(m, n): symbols of partitions whose rank-set contains m, written
  (gamma | delta)_(m+j')xj' (so delta[0] = j' whenever j' >= 1), split into
    Q1: j' = 0, or j' >= 1 and len(delta) - len(gamma) <= -1
    Q2: j' >= 1, len(delta) - len(gamma) >= 0, and gamma[0] < m + j'
    Q3: j' >= 1, len(delta) - len(gamma) >= 0, and gamma[0] = m + j'
  (an empty gamma reads as gamma[0] = 0).

Each split is a disjoint cover of its family, P1 = Q1 as sets, and the
maps below send P2 into Q2 and P3 into Q3 injectively, preserving the
weight.  `theta` dispatches on the class (identity on P1), so it is a
weight-preserving injection of P(-m+1, n) into Q(m, n); the count gap
#Q - #P is therefore non-negative, which is the engine behind the
cumulation inequalities checked in the tables module.

Every map validates its precondition eagerly and raises ValueError on
a symbol outside its domain; nothing is silently coerced.
"""

from __future__ import annotations

import enum
import time

from .partitions import enumerate_partitions
from .report import CheckRecorder, VerifyReport
from .statistics import rank, rank_set_contains
from .symbols import MDurfeeSymbol, format_symbol, rank_at_least, rank_set_has_m, to_symbol


class SymbolClass(enum.Enum):
    """Classification of a symbol within its family (P side or Q side)."""

    P1 = ("P", 1)
    P2 = ("P", 2)
    P3 = ("P", 3)
    Q1 = ("Q", 1)
    Q2 = ("Q", 2)
    Q3 = ("Q", 3)

    @property
    def side(self) -> str:
        return self.value[0]

    @property
    def index(self) -> int:
        return self.value[1]


def classify(symbol: MDurfeeSymbol, side: str) -> SymbolClass | None:
    """Place a symbol in P1/P2/P3 or Q1/Q2/Q3, or None if not in the family.

    side "P" requires membership in P(-m+1, n) (rank >= -m + 1);
    side "Q" requires membership in Q(m, n) (m in the rank-set).
    """
    j = symbol.j
    if side == "P":
        if not rank_at_least(symbol):
            return None
        if j == 0:
            return SymbolClass.P1
        b1 = symbol.beta[0] if symbol.beta else 0
        if b1 == j:
            return SymbolClass.P1
        if b1 == j - 1:
            return SymbolClass.P2
        return SymbolClass.P3
    if side == "Q":
        if not rank_set_has_m(symbol):
            return None
        if j == 0 or len(symbol.beta) - len(symbol.alpha) <= -1:
            return SymbolClass.Q1
        g1 = symbol.alpha[0] if symbol.alpha else 0
        if g1 < symbol.m + j:
            return SymbolClass.Q2
        return SymbolClass.Q3
    raise ValueError(f"side must be 'P' or 'Q', got {side!r}")


def _require(symbol: MDurfeeSymbol, wanted: SymbolClass, op: str) -> None:
    got = classify(symbol, wanted.side)
    if got is not wanted:
        raise ValueError(
            f"{op} needs a {wanted.name} symbol, got {got.name if got else 'non-member'}:"
            f" {format_symbol(symbol)}"
        )


def theta1(symbol: MDurfeeSymbol) -> MDurfeeSymbol:
    """Identity on P1 (which coincides with Q1)."""
    _require(symbol, SymbolClass.P1, "theta1")
    return symbol


def theta2(symbol: MDurfeeSymbol) -> MDurfeeSymbol:
    """P2 -> Q2, keeping the rectangle.

    Top row drops by one (zeros are removed); bottom row gains one on
    each entry and is padded with ones back up to the old top length:

      (a_1..a_s | b_1..b_t)  ->  (a_1-1..a_s-1 | b_1+1..b_t+1, 1^(s-t)).

    The new bottom leads with (j-1)+1 = j, so m enters the rank-set.
    """
    _require(symbol, SymbolClass.P2, "theta2")
    s, t = len(symbol.alpha), len(symbol.beta)
    gamma = tuple(a - 1 for a in symbol.alpha if a > 1)
    delta = tuple(b + 1 for b in symbol.beta) + (1,) * (s - t)
    return MDurfeeSymbol(m=symbol.m, j=symbol.j, alpha=gamma, beta=delta)


def sigma(symbol: MDurfeeSymbol) -> MDurfeeSymbol:
    """Inverse of theta2 on its image: Q2 symbols whose delta ends in 1.

      (g_1..g_s' | d_1..d_t')  ->  (g_1+1..g_s'+1, 1^(t'-s') | d_1-1..d_t'-1)

    with zero bottom entries removed.
    """
    _require(symbol, SymbolClass.Q2, "sigma")
    if not symbol.beta or symbol.beta[-1] != 1:
        raise ValueError(f"sigma needs a trailing 1 in delta: {format_symbol(symbol)}")
    s, t = len(symbol.alpha), len(symbol.beta)
    alpha = tuple(g + 1 for g in symbol.alpha) + (1,) * (t - s)
    beta = tuple(d - 1 for d in symbol.beta if d > 1)
    return MDurfeeSymbol(m=symbol.m, j=symbol.j, alpha=alpha, beta=beta)


def theta3(symbol: MDurfeeSymbol) -> MDurfeeSymbol:
    """P3 -> Q3, shrinking the rectangle to (m+j-1) x (j-1).

      (a_1..a_s | b_1..b_t)
        ->  (m+j-1, a_1-1..a_s-1 | j-1, b_1+1..b_t+1, 1^(s-t+1))

    (zero top entries removed).  The image is marked by its bottom row
    ending in two 1s, which `pi` requires.
    """
    _require(symbol, SymbolClass.P3, "theta3")
    s, t = len(symbol.alpha), len(symbol.beta)
    m, j = symbol.m, symbol.j
    gamma = (m + j - 1,) + tuple(a - 1 for a in symbol.alpha if a > 1)
    delta = (j - 1,) + tuple(b + 1 for b in symbol.beta) + (1,) * (s - t + 1)
    return MDurfeeSymbol(m=m, j=j - 1, alpha=gamma, beta=delta)


def pi(symbol: MDurfeeSymbol) -> MDurfeeSymbol:
    """Inverse of theta3 on its image: Q3 symbols with len(delta) - len(gamma)
    >= 1 whose delta ends in two 1s.  The rectangle grows back to
    (m+j'+1) x (j'+1); the leading entries of both rows are consumed:

      (g_1..g_s' | d_1..d_t')
        ->  (g_2+1..g_s'+1, 1^(t'-s'-1) | d_2-1..d_t'-1)

    (zero bottom entries removed).
    """
    _require(symbol, SymbolClass.Q3, "pi")
    s, t = len(symbol.alpha), len(symbol.beta)
    if t - s < 1:
        raise ValueError(f"pi needs len(delta) - len(gamma) >= 1: {format_symbol(symbol)}")
    if t < 2 or symbol.beta[-1] != 1 or symbol.beta[-2] != 1:
        raise ValueError(f"pi needs delta to end in two 1s: {format_symbol(symbol)}")
    alpha = tuple(g + 1 for g in symbol.alpha[1:]) + (1,) * (t - s - 1)
    beta = tuple(d - 1 for d in symbol.beta[1:] if d > 1)
    return MDurfeeSymbol(m=symbol.m, j=symbol.j + 1, alpha=alpha, beta=beta)


def theta(symbol: MDurfeeSymbol) -> MDurfeeSymbol:
    """The combined injection P(-m+1, n) -> Q(m, n): dispatch by class."""
    cls = classify(symbol, "P")
    if cls is SymbolClass.P1:
        return symbol
    if cls is SymbolClass.P2:
        return theta2(symbol)
    if cls is SymbolClass.P3:
        return theta3(symbol)
    raise ValueError(f"theta needs rank >= -m + 1: {format_symbol(symbol)}")


def verify_injections(mmax: int, nmax: int, table=None) -> VerifyReport:
    """Exhaustively verify the injection machinery for 0 <= m <= mmax, 2 <= n <= nmax.

    For every partition of every n, both families are built from the
    partition-level statistics (rank and rank-set membership) and
    cross-checked against the symbol-level predicates.  Checks: the
    class splits cover each family disjointly, P1 = Q1 as sets, theta2
    and theta3 land in Q2 and Q3 with weight preserved and round-trip
    through sigma and pi, theta is globally injective, and the count
    gap #Q - #P matches q(m, n) - p_ge(-m+1, n) from the given table
    (built here if not supplied).
    """
    from . import tables  # deferred: tables imports nothing from here

    if mmax < 0 or nmax < 2:
        raise ValueError("need mmax >= 0 and nmax >= 2")
    if table is None:
        table = tables.build(nmax)
    started = time.monotonic()
    rec = CheckRecorder()
    for n in range(2, nmax + 1):
        partitions = list(enumerate_partitions(n))
        for m in range(0, mmax + 1):
            p_members: list[MDurfeeSymbol] = []
            q_members: list[MDurfeeSymbol] = []
            for lam in partitions:
                sym = to_symbol(lam, m)
                in_p = rank(lam) >= -m + 1
                in_q = rank_set_contains(lam, m)
                rec.expect(
                    "predicates-match-statistics",
                    rank_at_least(sym) == in_p and rank_set_has_m(sym) == in_q,
                    {"m": m, "n": n, "symbol": format_symbol(sym)},
                )
                p_cls = classify(sym, "P")
                q_cls = classify(sym, "Q")
                rec.expect(
                    "p-classification-covers",
                    (p_cls is not None) == in_p,
                    {"m": m, "n": n, "symbol": format_symbol(sym)},
                )
                rec.expect(
                    "q-classification-covers",
                    (q_cls is not None) == in_q,
                    {"m": m, "n": n, "symbol": format_symbol(sym)},
                )
                if in_p:
                    p_members.append(sym)
                if in_q:
                    q_members.append(sym)
                rec.expect(
                    "p1-equals-q1",
                    (p_cls is SymbolClass.P1) == (q_cls is SymbolClass.Q1),
                    {"m": m, "n": n, "symbol": format_symbol(sym)},
                )
            images = []
            for sym in p_members:
                cls = classify(sym, "P")
                image = theta(sym)
                images.append(image)
                rec.expect(
                    "theta-preserves-weight",
                    image.weight == sym.weight == n,
                    {"m": m, "n": n, "symbol": format_symbol(sym)},
                )
                expected_q = SymbolClass["Q" + str(cls.index)]
                rec.expect(
                    "theta-lands-in-matching-class",
                    classify(image, "Q") is expected_q,
                    {"m": m, "n": n, "symbol": format_symbol(sym),
                     "image": format_symbol(image)},
                )
                if cls is SymbolClass.P2:
                    rec.expect(
                        "sigma-inverts-theta2",
                        sigma(image) == sym,
                        {"m": m, "n": n, "symbol": format_symbol(sym)},
                    )
                elif cls is SymbolClass.P3:
                    rec.expect(
                        "theta3-image-marker",
                        len(image.beta) >= 2 and image.beta[-1] == image.beta[-2] == 1,
                        {"m": m, "n": n, "image": format_symbol(image)},
                    )
                    rec.expect(
                        "pi-inverts-theta3",
                        pi(image) == sym,
                        {"m": m, "n": n, "symbol": format_symbol(sym)},
                    )
            rec.expect(
                "theta-injective",
                len(set(images)) == len(images),
                {"m": m, "n": n},
            )
            rec.expect(
                "theta-image-in-q",
                set(images) <= set(q_members),
                {"m": m, "n": n},
            )
            gap = len(q_members) - len(p_members)
            rec.expect(
                "count-gap-non-negative",
                gap >= 0,
                {"m": m, "n": n, "gap": gap},
            )
            rec.expect(
                "count-gap-matches-tables",
                gap == table.q_count(m, n) - table.p_ge(-m + 1, n),
                {"m": m, "n": n, "gap": gap,
                 "q": table.q_count(m, n), "p_ge": table.p_ge(-m + 1, n)},
            )
    elapsed = int((time.monotonic() - started) * 1000)
    return VerifyReport(
        suite="injections",
        range={"mmax": mmax, "nmin": 2, "nmax": nmax},
        checks=rec.results(),
        elapsed_ms=elapsed,
    )
