"""Young-Fibonacci tableaux.

A tableau is a tuple of columns read left to right; each column is
``(bottom,)`` or ``(bottom, top)``.  Validity means strictly increasing
columns and, for every column, no entry further right greater than its
topmost entry.  The same two rules define the semistandard flavour, where
repeated entries are allowed (so a topmost entry may equal an entry on
its right, but never be exceeded).

Text form: ``"3:7 4:6 5 1:2"`` (bottom:top per column, space separated).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .poset import FinitePoset
from .snakeshape import EMPTY_TOKEN, Snakeshape, as_shape, shapes_of_size


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class YfTableau:
    columns: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        for c in cols:
            if len(c) not in (1, 2):
                raise TableauError(f"columns hold one or two cells, got {c!r}")
        object.__setattr__(self, "columns", cols)

    @property
    def shape(self) -> Snakeshape:
        return Snakeshape(tuple(len(c) for c in self.columns))

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    @property
    def tops(self) -> tuple[int, ...]:
        """Topmost entry of every column (the sole entry of a single column)."""
        return tuple(c[-1] for c in self.columns)

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.columns)

    def entries(self) -> list[int]:
        return [x for c in self.columns for x in c]

    def column_of(self, x: int) -> int:
        for j, c in enumerate(self.columns):
            if x in c:
                return j
        raise KeyError(x)

    def __str__(self) -> str:
        return format_tableau(self)

    def __repr__(self) -> str:
        return f"YfTableau('{format_tableau(self)}')"

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.columns]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "YfTableau":
        return cls(tuple(tuple(c) for c in data))

    def pretty(self) -> str:
        """Two-line drawing, top row above bottom row."""
        width = max([len(str(x)) for x in self.entries()] + [1])
        top = " ".join(str(c[1]).rjust(width) if len(c) == 2 else " " * width for c in self.columns)
        bottom = " ".join(str(c[0]).rjust(width) for c in self.columns)
        return f"{top.rstrip()}\n{bottom}" if top.strip() else bottom


EMPTY_TABLEAU = YfTableau(())


def parse_tableau(text: str) -> YfTableau:
    text = text.strip()
    if text in ("", EMPTY_TOKEN):
        return EMPTY_TABLEAU
    cols = []
    for token in text.split():
        try:
            cols.append(tuple(int(x) for x in token.split(":")))
        except ValueError:
            raise TableauError(f"malformed column {token!r}") from None
        if len(cols[-1]) > 2:
            raise TableauError(f"column {token!r} has more than two cells")
    return YfTableau(tuple(cols))


def format_tableau(t: YfTableau) -> str:
    if not t.columns:
        return EMPTY_TOKEN
    return " ".join(":".join(str(x) for x in c) for c in t.columns)


def as_tableau(t: YfTableau | str | Sequence[Sequence[int]]) -> YfTableau:
    if isinstance(t, YfTableau):
        return t
    if isinstance(t, str):
        return parse_tableau(t)
    return YfTableau(tuple(tuple(c) for c in t))


def _rules_hold(columns: Sequence[Sequence[int]]) -> bool:
    suffix_max = 0
    for c in reversed(columns):
        if len(c) == 2 and not c[0] < c[1]:
            return False
        if c[-1] < suffix_max:
            return False
        suffix_max = max(suffix_max, *c)
    return True


def is_semistandard(t: YfTableau) -> bool:
    return all(x >= 1 for x in t.entries()) and _rules_hold(t.columns)


def is_standard(t: YfTableau) -> bool:
    return sorted(t.entries()) == list(range(1, t.size + 1)) and _rules_hold(t.columns)


def require_standard(t: YfTableau) -> None:
    if not is_standard(t):
        raise TableauError(f"not a standard Young-Fibonacci tableau: {t}")


# -------------------------------------------------------------- enumeration


def _cells(u: Snakeshape) -> list[tuple[int, int]]:
    return [(j, r) for j, h in enumerate(u.parts) for r in range(h)]


def _constraints(u: Snakeshape) -> tuple[dict, dict]:
    """Per cell: cells that must hold a strictly larger entry (the top of
    its own column) and cells that must hold an entry at least as large
    (the tops of all columns to its left)."""
    tops = [(j, h - 1) for j, h in enumerate(u.parts)]
    strict, weak = {}, {}
    for j, r in _cells(u):
        strict[(j, r)] = [(j, 1)] if r == 0 and u.parts[j] == 2 else []
        weak[(j, r)] = tops[:j]
    return strict, weak


def _must_exceed(u: Snakeshape) -> dict[tuple[int, int], list[tuple[int, int]]]:
    strict, weak = _constraints(u)
    return {c: strict[c] + weak[c] for c in strict}


def _build(u: Snakeshape, filling: dict[tuple[int, int], int]) -> YfTableau:
    return YfTableau(tuple(tuple(filling[(j, r)] for r in range(h)) for j, h in enumerate(u.parts)))


def enumerate_standard(u: Snakeshape | str) -> list[YfTableau]:
    """All standard tableaux of shape ``u``.

    Entries are placed from ``n`` downwards; a cell becomes available once
    every cell that must hold a larger entry is filled.
    """
    u = as_shape(u)
    need = _must_exceed(u)
    cells = _cells(u)
    filling: dict[tuple[int, int], int] = {}
    out: list[YfTableau] = []

    def rec(x: int) -> None:
        if x == 0:
            out.append(_build(u, filling))
            return
        for c in cells:
            if c not in filling and all(d in filling for d in need[c]):
                filling[c] = x
                rec(x - 1)
                del filling[c]

    rec(u.size)
    return out


def enumerate_semistandard(u: Snakeshape | str, v: Snakeshape | str) -> list[YfTableau]:
    """Semistandard tableaux of shape ``u`` with ``v[i-1]`` entries equal to ``i``."""
    u, v = as_shape(u), as_shape(v)
    if u.size != v.size:
        raise TableauError(f"size mismatch: |{u}| = {u.size}, |{v}| = {v.size}")
    strict, weak = _constraints(u)
    cells = _cells(u)
    filling: dict[tuple[int, int], int] = {}
    out: list[YfTableau] = []

    def rec(value: int) -> None:
        if value == 0:
            out.append(_build(u, filling))
            return
        # values are placed largest first, so a cell may take the current
        # value once its strict constraints are filled and its weak ones
        # are filled or receive the same value
        avail = [c for c in cells if c not in filling and all(d in filling for d in strict[c])]
        for chosen in combinations(avail, v.parts[value - 1]):
            level = set(chosen)
            if not all(d in filling or d in level for c in chosen for d in weak[c]):
                continue
            for c in chosen:
                filling[c] = value
            rec(value - 1)
            for c in chosen:
                del filling[c]

    rec(v.length)
    return out


@lru_cache(maxsize=None)
def standard_tableaux(n: int) -> tuple[YfTableau, ...]:
    """Every standard tableau of size ``n``, grouped by shape in descending order."""
    return tuple(t for u in shapes_of_size(n) for t in enumerate_standard(u))


def hook_count(u: Snakeshape | str) -> int:
    """Number of standard tableaux of shape ``u``.

    Count the cells right to left, bottom cell before top cell; the answer
    is the product of the counter at the first cell and at the bottom cell
    of every two-boxed column.
    """
    u = as_shape(u)
    counter = 0
    product = 1
    for h in reversed(u.parts):
        counter += 1
        if counter == 1 or h == 2:
            product *= counter
        if h == 2:
            counter += 1
    return product


def hook_lengths(u: Snakeshape | str) -> list[int]:
    """Down-set sizes of the binary-tree poset of ``u``."""
    p = cano_poset(column_canonical(as_shape(u)))
    return [len(p.downset(x)) for x in p.elements]


def hook_formula(u: Snakeshape | str) -> int:
    u = as_shape(u)
    q, r = divmod(math.factorial(u.size), math.prod(hook_lengths(u)))
    assert r == 0
    return q


# -------------------------------------------------------- canonical words


def min_cano(t: YfTableau) -> tuple[int, ...]:
    """Columns right to left, each read top then bottom."""
    require_standard(t)
    return tuple(x for c in reversed(t.columns) for x in reversed(c))


def max_cano(t: YfTableau) -> tuple[int, ...]:
    """Top row left to right, then bottom row right to left."""
    require_standard(t)
    top_row = [c[1] for c in t.columns if len(c) == 2]
    bottom_row = [c[0] for c in reversed(t.columns)]
    return tuple(top_row + bottom_row)


def cano_involution(t: YfTableau) -> tuple[int, ...]:
    require_standard(t)
    word = list(range(t.size + 1))
    for c in t.columns:
        if len(c) == 2:
            a, b = c
            word[a], word[b] = b, a
    return tuple(word[1:])


def cano_poset(t: YfTableau) -> FinitePoset:
    """Bottom row read right to left is a chain; each top is covered by its bottom."""
    require_standard(t)
    covers = []
    bottoms = t.bottoms
    for j in range(len(bottoms) - 1):
        covers.append((bottoms[j + 1], bottoms[j]))
    for c in t.columns:
        if len(c) == 2:
            covers.append((c[1], c[0]))
    return FinitePoset(range(1, t.size + 1), covers)


def row_canonical(u: Snakeshape | str) -> YfTableau:
    u = as_shape(u)
    top = u.size
    low = 1
    cols = []
    for h in u.parts:
        if h == 2:
            cols.append((low, top))
            low += 1
        else:
            cols.append((top,))
        top -= 1
    return YfTableau(tuple(cols))


def column_canonical(u: Snakeshape | str) -> YfTableau:
    u = as_shape(u)
    label = 0
    cols: list[tuple[int, ...]] = []
    for h in reversed(u.parts):
        col = tuple(range(label + 1, label + h + 1))
        label += h
        cols.append(col)
    return YfTableau(tuple(reversed(cols)))


def rho_min(u: Snakeshape | str) -> int:
    return as_shape(u).parts.count(2)


def rho_max(u: Snakeshape | str) -> int:
    total = 0
    twos = 0
    for h in as_shape(u).parts:
        total += twos
        if h == 2:
            total += twos + 1
            twos += 1
    return total


def iter_fillings(u: Snakeshape, values: Sequence[int]) -> Iterator[YfTableau]:
    """Every distinct assignment of ``values`` to the cells of ``u`` (no rules applied)."""
    seen = set()
    cells = _cells(u)
    for perm in permutations(values):
        if perm in seen:
            continue
        seen.add(perm)
        yield _build(u, dict(zip(cells, perm)))
