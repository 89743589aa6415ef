"""m-Durfee rectangle symbols: a rectangle-anchored view of a partition.

Fix m >= 0.  The m-Durfee rectangle of a partition is the largest
(m+j) x j rectangle of cells fitting in the upper-left corner of its
Ferrers diagram (j maximal; j = 0 when the partition has at most m
parts, giving a degenerate m x 0 rectangle).  What remains splits into

* alpha: the columns strictly to the right of the rectangle, read as
  column heights, each <= m + j, and
* beta: the rows strictly below the rectangle, each <= j.

The triple is written (alpha | beta) with the rectangle as a subscript,
serialized here as ``[4,3,3,2 | 3,2,2,2]_(5x3)``.  The weight satisfies
n = j(m+j) + sum(alpha) + sum(beta), and the correspondence with
partitions is a bijection once m is fixed.

Two predicates make the symbol useful.  With j >= 1:

* rank(lambda) = -m + (len(alpha) - len(beta)), so
  rank(lambda) >= -m + 1 iff j = 0 or len(beta) + 1 <= len(alpha);
* m belongs to the rank-set of lambda iff j = 0 or beta[0] = j
  (an empty beta counts as beta[0] = 0).

Both equivalences are verified exhaustively in the test suite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from .partitions import Partition, conjugate


def _as_partition_tuple(parts: Iterable[int], label: str) -> tuple[int, ...]:
    t = tuple(parts)
    prev = None
    for v in t:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{label} entries must be positive integers, got {v!r}")
        if prev is not None and v > prev:
            raise ValueError(f"{label} must be weakly decreasing, got {t}")
        prev = v
    return t


@dataclass(frozen=True)
class MDurfeeSymbol:
    """An m-Durfee rectangle symbol (alpha | beta) with rectangle (m+j) x j.

    Invariants enforced on construction: m >= 0, j >= 0, alpha weakly
    decreasing positive with entries <= m + j, beta weakly decreasing
    positive with entries <= j (so j = 0 forces beta empty).
    """

    m: int
    j: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"m must be a non-negative integer, got {self.m!r}")
        if not isinstance(self.j, int) or self.j < 0:
            raise ValueError(f"j must be a non-negative integer, got {self.j!r}")
        object.__setattr__(self, "alpha", _as_partition_tuple(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _as_partition_tuple(self.beta, "beta"))
        if self.alpha and self.alpha[0] > self.m + self.j:
            raise ValueError(
                f"alpha entries must be <= m + j = {self.m + self.j}, got {self.alpha}"
            )
        if self.beta and self.beta[0] > self.j:
            raise ValueError(f"beta entries must be <= j = {self.j}, got {self.beta}")

    @property
    def rows(self) -> int:
        """Height of the rectangle, m + j."""
        return self.m + self.j

    @property
    def cols(self) -> int:
        """Width of the rectangle, j."""
        return self.j

    @property
    def weight(self) -> int:
        """Weight of the underlying partition: j(m+j) + |alpha| + |beta|."""
        return self.j * (self.m + self.j) + sum(self.alpha) + sum(self.beta)

    def __str__(self) -> str:
        return format_symbol(self)


def to_symbol(partition: Sequence[int], m: int) -> MDurfeeSymbol:
    """Decompose a partition against its m-Durfee rectangle.

    >>> str(to_symbol(Partition([7, 7, 6, 4, 3, 3, 2, 2, 2]), 2))
    '[4,3,3,2 | 3,2,2,2]_(5x3)'
    >>> str(to_symbol(Partition([5, 5, 1]), 3))
    '[3,2,2,2,2 | ]_(3x0)'
    """
    if m < 0:
        raise ValueError("the rectangle offset m must be >= 0")
    length = len(partition)
    if length <= m:
        return MDurfeeSymbol(m=m, j=0, alpha=tuple(conjugate(partition)), beta=())
    j = 1
    while m + j + 1 <= length and partition[m + j] >= j + 1:
        j += 1
    excess = [partition[i] - j for i in range(m + j) if partition[i] > j]
    alpha = tuple(conjugate(excess)) if excess else ()
    beta = tuple(partition[m + j:])
    return MDurfeeSymbol(m=m, j=j, alpha=alpha, beta=beta)


def from_symbol(symbol: MDurfeeSymbol) -> Partition:
    """Rebuild the partition a symbol came from (inverse of `to_symbol`).

    >>> from_symbol(MDurfeeSymbol(2, 3, (4, 3, 3, 2), (3, 2, 2, 2)))
    Partition([7, 7, 6, 4, 3, 3, 2, 2, 2])
    """
    if symbol.j == 0:
        return conjugate(symbol.alpha)
    heights = conjugate(symbol.alpha)
    rows = [symbol.j + (heights[i] if i < len(heights) else 0) for i in range(symbol.rows)]
    rows.extend(symbol.beta)
    return Partition._from_sorted(rows)


def rank_at_least(symbol: MDurfeeSymbol) -> bool:
    """Whether rank(lambda) >= -m + 1, read off the symbol alone.

    For j >= 1 the rank equals -m + (len(alpha) - len(beta)).
    """
    return symbol.j == 0 or len(symbol.beta) + 1 <= len(symbol.alpha)


def rank_set_has_m(symbol: MDurfeeSymbol) -> bool:
    """Whether m belongs to the rank-set of lambda, read off the symbol."""
    return symbol.j == 0 or (bool(symbol.beta) and symbol.beta[0] == symbol.j)


def format_symbol(symbol: MDurfeeSymbol) -> str:
    """Serialize to the two-row text form, e.g. ``[4,3,3,2 | 3,2,2,2]_(5x3)``."""
    top = ",".join(str(v) for v in symbol.alpha)
    bottom = ",".join(str(v) for v in symbol.beta)
    return f"[{top} | {bottom}]_({symbol.rows}x{symbol.cols})"


_SYMBOL_RE = re.compile(
    r"^\s*\[\s*(?P<top>[0-9,\s]*?)\s*\|\s*(?P<bottom>[0-9,\s]*?)\s*\]"
    r"\s*_\s*\(\s*(?P<rows>\d+)\s*x\s*(?P<cols>\d+)\s*\)\s*$"
)


def parse_symbol(text: str) -> MDurfeeSymbol:
    """Parse the two-row text form back into a symbol.

    >>> parse_symbol("[4,3,3,2 | 3,2,2,2]_(5x3)").weight
    36
    """
    match = _SYMBOL_RE.match(text)
    if match is None:
        raise ValueError(f"not a symbol: {text!r} (expected '[a,b | c,d]_(RxC)')")
    rows = int(match.group("rows"))
    cols = int(match.group("cols"))
    if rows < cols:
        raise ValueError(f"rectangle {rows}x{cols} has more columns than rows")

    def read(group: str) -> tuple[int, ...]:
        body = match.group(group).strip()
        if not body:
            return ()
        return tuple(int(tok) for tok in body.replace(" ", "").split(",") if tok)

    return MDurfeeSymbol(m=rows - cols, j=cols, alpha=read("top"), beta=read("bottom"))
