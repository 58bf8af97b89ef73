"""Classical Young tableaux for comparison with the Fibonacci side.

Tableaux use the French convention: ``rows[0]`` is the bottom (longest)
row.  The text form lists rows bottom-up separated by ``;``, entries by
spaces, e.g. ``"1 2;3 4;5"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .fibokostka import KostkaMatrix, SizeMismatch
from .poset import FinitePoset

MAX_SYT_N = 7

Partition = tuple[int, ...]


class YoungError(ValueError):
    pass


# ---------------------------------------------------------------- partitions


def as_partition(lam) -> Partition:
    if isinstance(lam, str):
        text = lam.strip()
        parts = [int(x) for x in text.split(",")] if "," in text else [int(x) for x in text]
    else:
        parts = [int(x) for x in lam]
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise YoungError(f"not a partition: {lam!r}")
    return tuple(parts)


def format_partition(lam: Sequence[int]) -> str:
    if all(p < 10 for p in lam):
        return "".join(str(p) for p in lam)
    return ",".join(str(p) for p in lam)


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order (``5, 41, 32, ...``)."""
    largest = n if largest is None else largest
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return tuple(out)


def dominance_leq(mu, lam) -> bool:
    """``lam >=_dom mu``: prefix sums of ``lam`` dominate those of ``mu``."""
    mu, lam = as_partition(mu), as_partition(lam)
    if sum(mu) != sum(lam):
        raise SizeMismatch(f"|{format_partition(mu)}| != |{format_partition(lam)}|")
    k = min(len(mu), len(lam))
    return all(a >= b for a, b in zip(list(accumulate(lam))[:k], list(accumulate(mu))[:k]))


def conjugate(lam: Sequence[int]) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


# ------------------------------------------------------------------ tableaux


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        lengths = [len(r) for r in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise YoungError(f"row lengths {lengths} do not form a partition")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def __str__(self) -> str:
        return format_young(self)

    def __repr__(self) -> str:
        return f"YoungTableau('{format_young(self)}')"

    def row_word(self) -> tuple[int, ...]:
        """Rows read left to right, from the top row down to the bottom row."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def pretty(self) -> str:
        width = max([len(str(x)) for x in self.entries()] + [1])
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in reversed(self.rows))


def parse_young(text: str) -> YoungTableau:
    text = text.strip()
    if text in ("", "e"):
        return YoungTableau(())
    try:
        return YoungTableau(tuple(tuple(int(x) for x in row.split()) for row in text.split(";")))
    except ValueError:
        raise YoungError(f"malformed tableau {text!r}") from None


def format_young(t: YoungTableau) -> str:
    if not t.rows:
        return "e"
    return ";".join(" ".join(str(x) for x in r) for r in t.rows)


def as_young(t) -> YoungTableau:
    if isinstance(t, YoungTableau):
        return t
    if isinstance(t, str):
        return parse_young(t)
    return YoungTableau(tuple(tuple(r) for r in t))


def is_semistandard_young(t: YoungTableau) -> bool:
    for i, r in enumerate(t.rows):
        if any(a > b for a, b in zip(r, r[1:])):
            return False
        if i and any(t.rows[i - 1][j] >= x for j, x in enumerate(r)):
            return False
    return all(x >= 1 for x in t.entries())


def is_standard_young(t: YoungTableau) -> bool:
    return sorted(t.entries()) == list(range(1, t.size + 1)) and is_semistandard_young(t)


def standard_young_tableaux(lam) -> list[YoungTableau]:
    """All SYT of shape ``lam``; entry ``k`` goes into an outer corner of the shape holding ``1..k-1``."""
    lam = as_partition(lam)
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]
    out: list[YoungTableau] = []

    def rec(k: int) -> None:
        if k > n:
            out.append(YoungTableau(tuple(tuple(r) for r in rows)))
            return
        for i, r in enumerate(rows):
            if len(r) < lam[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(k)
                rec(k + 1)
                r.pop()

    rec(1)
    return out


@lru_cache(maxsize=None)
def syt(n: int) -> tuple[YoungTableau, ...]:
    return tuple(t for lam in partitions(n) for t in standard_young_tableaux(lam))


def single_row(n: int) -> YoungTableau:
    return YoungTableau((tuple(range(1, n + 1)),) if n else ())


def superstandard(mu) -> YoungTableau:
    """Filled increasingly left to right, bottom row first."""
    mu = as_partition(mu)
    ends = list(accumulate(mu))
    return YoungTableau(tuple(tuple(range(e - p + 1, e + 1)) for p, e in zip(mu, ends)))


# ----------------------------------------------------------------------- RSK


def rsk_insert(rows: list[list[int]], x: int) -> None:
    for r in rows:
        j = next((k for k, y in enumerate(r) if y > x), None)
        if j is None:
            r.append(x)
            return
        r[j], x = x, r[j]
    rows.append([x])


def rsk_p(sigma: Sequence[int]) -> YoungTableau:
    rows: list[list[int]] = []
    for x in sigma:
        rsk_insert(rows, x)
    return YoungTableau(tuple(tuple(r) for r in rows))


# ------------------------------------------------------------- jeu de taquin


def _slide(grid: list[list[int | None]], i: int, j: int) -> None:
    """Slide the hole at row ``i``, column ``j`` outward until it leaves the shape."""
    while True:
        right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
        above = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
        if right is None and above is None:
            del grid[i][j]
            if not grid[i]:
                del grid[i]
            return
        if above is None or (right is not None and right < above):
            grid[i][j] = right
            j += 1
        else:
            grid[i][j] = above
            i += 1


def rectify(grid: list[list[int | None]]) -> YoungTableau:
    """Rectify a skew tableau; ``None`` marks cells of the inner shape."""
    grid = [list(r) for r in grid]
    while True:
        corner = None
        for i, r in enumerate(grid):
            holes = [j for j, x in enumerate(r) if x is None]
            if holes:
                j = holes[-1]
                above_filled = not (i + 1 < len(grid) and j < len(grid[i + 1]) and grid[i + 1][j] is None)
                if above_filled:
                    corner = (i, j)
                    break
        if corner is None:
            break
        _slide(grid, *corner)
    return YoungTableau(tuple(tuple(r) for r in grid if r))


def restrict_skew(t: YoungTableau, i: int, j: int) -> list[list[int | None]]:
    """Entries of ``t`` in ``[i, j]`` lowered by ``i - 1``; smaller entries become holes, larger ones are cut."""
    grid = []
    for r in t.rows:
        row = [None if x < i else x - i + 1 for x in r if x <= j]
        if row:
            grid.append(row)
    return grid


def restricted_shape(t: YoungTableau, i: int, j: int) -> Partition:
    t = as_young(t)
    if not 1 <= i <= j <= t.size:
        raise YoungError(f"bad range [{i}, {j}] for size {t.size}")
    return rectify(restrict_skew(t, i, j)).shape


def restricted_shape_by_rsk(t: YoungTableau, i: int, j: int) -> Partition:
    """Oracle: insert the row word of the skew restriction."""
    t = as_young(t)
    word = [x - i + 1 for x in t.row_word() if i <= x <= j]
    return rsk_p(word).shape


# -------------------------------------------------------------------- orders


def chain_leq(t: YoungTableau, u: YoungTableau) -> bool:
    t, u = as_young(t), as_young(u)
    if t.size != u.size:
        raise SizeMismatch(f"sizes {t.size} and {u.size}")
    n = t.size
    return all(
        dominance_leq(restricted_shape(u, i, j), restricted_shape(t, i, j))
        for i in range(1, n + 1)
        for j in range(i, n + 1)
    )


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise YoungError(f"n = {n} exceeds the bound {bound}; pass a larger bound explicitly")


@lru_cache(maxsize=None)
def _weak_order_syt(n: int) -> FinitePoset:
    perms = kernels.all_permutations(n)
    p_of = {}
    pairs = set()
    for row in perms:
        s = tuple(int(x) for x in row)
        p_of[s] = rsk_p(s)
    for s, p in p_of.items():
        for i in range(n - 1):
            if s[i] < s[i + 1]:
                q = p_of[s[:i] + (s[i + 1], s[i]) + s[i + 2:]]
                if q != p:
                    pairs.add((p, q))
    return FinitePoset.from_relation(syt(n), pairs)


def weak_order_syt(n: int, bound: int = MAX_SYT_N) -> FinitePoset:
    """Order on SYT induced by the weak order on permutations through ``rsk_p``."""
    _check_bound(n, bound)
    return _weak_order_syt(n)


@lru_cache(maxsize=None)
def _chain_order(n: int) -> FinitePoset:
    elems = syt(n)
    pairs = [(a, b) for a in elems for b in elems if a != b and chain_leq(a, b)]
    return FinitePoset.from_relation(elems, pairs)


def chain_order_syt(n: int, bound: int = MAX_SYT_N) -> FinitePoset:
    _check_bound(n, bound)
    return _chain_order(n)


# -------------------------------------------------------------------- Kostka


def _horizontal_strips(lam: Partition, k: int) -> Iterator[Partition]:
    """Shapes ``nu`` inside ``lam`` with ``lam / nu`` a horizontal strip of size ``k``."""
    lam_ext = lam + (0,)

    def rec(i: int, left: int, acc: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(lam):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lo = lam_ext[i + 1]
        for nu_i in range(lam[i], lo - 1, -1):
            take = lam[i] - nu_i
            if take > left:
                break
            yield from rec(i + 1, left - take, acc + (nu_i,))

    yield from rec(0, k, ())


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    *rest, last = mu
    return sum(_kostka(nu, tuple(rest)) for nu in _horizontal_strips(lam, last))


def kostka(lam, mu) -> int:
    """Semistandard tableaux of shape ``lam`` and content ``mu`` (largest letter stripped first)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{format_partition(lam)}| != |{format_partition(mu)}|")
    return _kostka(lam, mu)


def kostka_bruteforce(lam, mu) -> int:
    """Fill each letter's cells directly and test column strictness."""
    lam, mu = as_partition(lam), as_partition(mu)
    count = 0
    for t in _ssyt_fillings(lam, mu):
        count += is_semistandard_young(t)
    return count


def _ssyt_fillings(lam: Partition, mu: Partition) -> Iterator[YoungTableau]:
    # each letter occupies the leftmost free run after the previous letters
    # in every row, so rows are weakly increasing by construction
    def rec(k: int, filled: list[int], rows: list[list[int]]) -> Iterator[YoungTableau]:
        if k == len(mu):
            if filled == list(lam):
                yield YoungTableau(tuple(tuple(r) for r in rows))
            return
        for counts in _splits(mu[k], [lam[i] - filled[i] for i in range(len(lam))]):
            new_rows = [r + [k + 1] * c for r, c in zip(rows, counts)]
            yield from rec(k + 1, [f + c for f, c in zip(filled, counts)], new_rows)

    yield from rec(0, [0] * len(lam), [[] for _ in lam])


def _splits(total: int, caps: list[int]) -> Iterator[list[int]]:
    if not caps:
        if total == 0:
            yield []
        return
    for c in range(min(total, caps[0]), -1, -1):
        for rest in _splits(total - c, caps[1:]):
            yield [c] + rest


def kostka_by_interval(lam, mu, order: str = "chain", bound: int = MAX_SYT_N) -> int:
    """SYT of shape ``lam`` between the single row and the superstandard tableau of ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = sum(lam)
    if n != sum(mu):
        raise SizeMismatch(f"|{format_partition(lam)}| != |{format_partition(mu)}|")
    if n == 0:
        return 1
    if order == "chain":
        low, high = single_row(n), superstandard(mu)
        return sum(
            1 for t in standard_young_tableaux(lam) if chain_leq(low, t) and chain_leq(t, high)
        )
    if order == "weak":
        p = weak_order_syt(n, bound)
        return sum(1 for t in p.interval(single_row(n), superstandard(mu)) if t.shape == lam)
    raise ValueError(f"unknown order {order!r}")


class _Label(tuple):
    def __str__(self) -> str:
        return format_partition(self)


def kostka_matrix(n: int, method: str = "recurrence", bound: int = MAX_SYT_N) -> KostkaMatrix:
    """Rows ``lam``, columns ``mu``, both in reverse lexicographic order."""
    order = tuple(_Label(p) for p in partitions(n))
    if method == "recurrence":
        f = kostka
    elif method in ("chain", "weak"):
        _check_bound(n, bound)

        def f(a, b):
            return kostka_by_interval(a, b, method, bound)
    else:
        raise ValueError(f"unknown method {method!r}")
    k = len(order)
    m = np.array([[f(a, b) for b in order] for a in order], dtype=np.int64).reshape(k, k)
    return KostkaMatrix(order, m)
