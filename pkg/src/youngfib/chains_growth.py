"""Saturated chains, growth diagrams and evacuation.

Chain-to-tableau conversion labels the cells as the chain grows, except that
whenever the new cell is not in the first column the topmost entries of the
leading two-boxed columns slide one column to the right so that the new
label always lands on top of the first column.

Growth diagrams follow the permutation-matrix convention: column ``j`` is a
position, row ``sigma(j)`` a value, row 0 at the bottom.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .snakeshape import EMPTY, Snakeshape, as_shape, covers_down, covers_up, leading_twos, parse_shape
from .yfinsertion import insert_p
from .yftableau import YfTableau, is_standard, min_cano, require_standard


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class ShapeChain:
    shapes: tuple[Snakeshape, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shapes", tuple(as_shape(s) for s in self.shapes))

    def __len__(self) -> int:
        return len(self.shapes)

    def __str__(self) -> str:
        return format_chain(self)

    def is_saturated(self) -> bool:
        if not self.shapes or self.shapes[0] != EMPTY:
            return False
        return all(b in covers_up(a) for a, b in zip(self.shapes, self.shapes[1:]))

    def to_dot(self) -> str:
        names = [f'"{k}:{s}"' for k, s in enumerate(self.shapes)]
        lines = ["digraph chain {", "  rankdir=BT;"]
        for k, s in enumerate(self.shapes):
            lines.append(f'  {names[k]} [label="{s}"];')
        for a, b in zip(names, names[1:]):
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def parse_chain(text: str) -> ShapeChain:
    return ShapeChain(tuple(parse_shape(tok) for tok in text.split(",")))


def format_chain(c: ShapeChain) -> str:
    return ",".join(str(s) for s in c.shapes)


def classify_cover(u: Snakeshape, v: Snakeshape) -> tuple[str, int]:
    """Which covering rule takes ``u`` to ``v``.

    Returns ``("front", 0)`` for a single column attached in front,
    ``("top", m)`` for a box added on top of column ``m + 1`` (columns
    ``1..m`` being two-boxed), or ``("insert", i)`` for a single column
    inserted just after the ``i``-th leading two-boxed column.
    """
    p, q = u.parts, v.parts
    if q == (1,) + p:
        return ("front", 0)
    if 1 in p:
        k = p.index(1)
        if q == p[:k] + (2,) + p[k + 1:]:
            return ("top", k)
    for i in range(1, leading_twos(u) + 1):
        if q == p[:i] + (1,) + p[i:]:
            return ("insert", i)
    raise ChainError(f"{v} does not cover {u}")


def _grow(cols: list[list[int]], kind: str, pos: int, label: int) -> None:
    if kind == "front":
        cols.insert(0, [label])
    elif kind == "top":
        m = pos
        carried = [cols[j][1] for j in range(m)]
        cols[m].append(carried[-1] if m else label)
        for j in range(m - 1, 0, -1):
            cols[j][1] = carried[j - 1]
        if m:
            cols[0][1] = label
    else:
        i = pos
        carried = [cols[j][1] for j in range(i)]
        cols.insert(i, [carried[-1]])
        for j in range(i - 1, 0, -1):
            cols[j][1] = carried[j - 1]
        cols[0][1] = label


def chain_to_tableau(c: ShapeChain | Sequence) -> YfTableau:
    """Convert a saturated chain from the empty shape into a standard tableau."""
    c = c if isinstance(c, ShapeChain) else ShapeChain(tuple(c))
    if not c.is_saturated():
        raise ChainError(f"not a saturated chain from the empty shape: {c}")
    cols: list[list[int]] = []
    for k, (u, v) in enumerate(zip(c.shapes, c.shapes[1:]), start=1):
        kind, pos = classify_cover(u, v)
        _grow(cols, kind, pos, k)
    return YfTableau(tuple(tuple(col) for col in cols))


def restrict(word: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(x for x in word if x <= k)


def tableau_to_chain(t: YfTableau) -> ShapeChain:
    """The chain whose shapes are the insertion shapes of the restrictions
    of the minimal canonical word."""
    require_standard(t)
    w = min_cano(t)
    shapes = [insert_p(restrict(w, k)).shape for k in range(t.size + 1)]
    return ShapeChain(tuple(shapes))


def _shrink(cols: list[list[int]], kind: str, pos: int) -> list[list[int]]:
    """Undo one growth step: remove the top of column 1 and slide back."""
    cols = [list(c) for c in cols]
    if kind == "front":
        if len(cols[0]) != 1:
            raise ChainError("front column is not single")
        return cols[1:]
    if len(cols[0]) != 2:
        raise ChainError("first column has no top")
    if kind == "top":
        m = pos
        for j in range(m):
            cols[j][1] = cols[j + 1][1]
        cols[m].pop()
        return cols
    i = pos
    moved = cols[i]
    if len(moved) != 1:
        raise ChainError("inserted column is not single")
    for j in range(i - 1):
        cols[j][1] = cols[j + 1][1]
    cols[i - 1][1] = moved[0]
    del cols[i]
    return cols


def tableau_to_chain_direct(t: YfTableau) -> ShapeChain:
    """Reverse the conversion step by step, checking that exactly one
    reversal at each step leaves a standard tableau."""
    require_standard(t)
    cols = [list(c) for c in t.columns]
    shapes = [t.shape]
    while cols:
        v = Snakeshape(tuple(len(c) for c in cols))
        candidates = []
        for u in covers_down(v):
            kind, pos = classify_cover(u, v)
            try:
                prev = _shrink(cols, kind, pos)
            except (ChainError, IndexError):
                continue
            if is_standard(YfTableau(tuple(tuple(c) for c in prev))):
                candidates.append((u, prev))
        if len(candidates) != 1:
            raise ChainError(f"{len(candidates)} valid reversals from {YfTableau(tuple(map(tuple, cols)))}")
        u, cols = candidates[0]
        shapes.append(u)
    return ShapeChain(tuple(reversed(shapes)))


def canonical_labeling(c: ShapeChain | Sequence) -> YfTableau:
    """Path tableau of a chain: the cell added at step ``k`` gets label ``k``."""
    c = c if isinstance(c, ShapeChain) else ShapeChain(tuple(c))
    if not c.is_saturated():
        raise ChainError(f"not a saturated chain from the empty shape: {c}")
    cols: list[list[int]] = []
    for k, (u, v) in enumerate(zip(c.shapes, c.shapes[1:]), start=1):
        kind, pos = classify_cover(u, v)
        if kind == "front":
            cols.insert(0, [k])
        elif kind == "top":
            cols[pos].append(k)
        else:
            cols.insert(pos, [k])
    return YfTableau(tuple(tuple(col) for col in cols))


# ------------------------------------------------------------ growth diagram


def local_rule(t: Snakeshape, x: Snakeshape, y: Snakeshape, alpha: int) -> Snakeshape:
    """Fill the upper-right corner ``z`` of a square with lower-left ``t``,
    upper-left ``x`` and lower-right ``y``.

    Both edges grown: a two-boxed column in front of ``t``.  One edge grown:
    copy it across, so the opposite edge stays degenerate.  Neither grown:
    a single column in front of ``t`` under a cross, else ``t`` itself.
    """
    for name, s in (("x", x), ("y", y)):
        if s != t and s not in covers_up(t):
            raise ChainError(f"{name}={s} neither equals nor covers t={t}")
    if alpha not in (0, 1):
        raise ChainError("alpha must be 0 or 1")
    if alpha and (x != t or y != t):
        raise ChainError("a cross needs x = y = t")
    if x != t and y != t:
        return t.prepend(2)
    if x != t:
        return x
    if y != t:
        return y
    return t.prepend(1) if alpha else t


@dataclass(frozen=True)
class GrowthDiagram:
    """``grid[col][row]``, ``0 <= col, row <= n``, row 0 at the bottom."""

    sigma: tuple[int, ...]
    grid: tuple[tuple[Snakeshape, ...], ...]

    @property
    def n(self) -> int:
        return len(self.sigma)

    def at(self, col: int, row: int) -> Snakeshape:
        return self.grid[col][row]

    def crosses(self) -> list[tuple[int, int]]:
        return [(j, v) for j, v in enumerate(self.sigma, start=1)]

    def rows_top_down(self) -> list[list[str]]:
        return [[str(self.grid[c][r]) for c in range(self.n + 1)] for r in range(self.n, -1, -1)]

    def to_json(self) -> str:
        data = {
            "sigma": list(self.sigma),
            "rows_top_down": self.rows_top_down(),
            "crosses": [list(c) for c in self.crosses()],
        }
        return json.dumps(data)

    def render(self) -> str:
        rows = self.rows_top_down()
        width = max(len(s) for row in rows for s in row)
        return "\n".join(" ".join(s.rjust(width) for s in row) for row in rows)


def growth_diagram(sigma: Sequence[int]) -> GrowthDiagram:
    n = len(sigma)
    grid = [[EMPTY] * (n + 1) for _ in range(n + 1)]
    # rows bottom to top, columns left to right: each square sees its
    # three lower-left neighbours already filled
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            alpha = 1 if sigma[i - 1] == j else 0
            grid[i][j] = local_rule(grid[i - 1][j - 1], grid[i - 1][j], grid[i][j - 1], alpha)
    return GrowthDiagram(tuple(sigma), tuple(tuple(col) for col in grid))


def boundary_chains(d: GrowthDiagram) -> tuple[ShapeChain, ShapeChain]:
    """``(P_hat, Q_hat)``: right column bottom to top, top row left to right."""
    n = d.n
    p_hat = ShapeChain(tuple(d.grid[n][r] for r in range(n + 1)))
    q_hat = ShapeChain(tuple(d.grid[c][n] for c in range(n + 1)))
    return p_hat, q_hat


def audit_diagram(d: GrowthDiagram) -> list[tuple[int, int]]:
    """Squares (by upper-right corner) whose value disagrees with the local rule."""
    bad = []
    n = d.n
    if any(d.grid[0][r] != EMPTY or d.grid[r][0] != EMPTY for r in range(n + 1)):
        bad.append((0, 0))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            alpha = 1 if d.sigma[i - 1] == j else 0
            try:
                z = local_rule(d.grid[i - 1][j - 1], d.grid[i - 1][j], d.grid[i][j - 1], alpha)
            except ChainError:
                bad.append((i, j))
                continue
            if z != d.grid[i][j]:
                bad.append((i, j))
    return bad


# --------------------------------------------------------------- evacuation


def _evacuate(cols: list[list[int]], a0: int) -> tuple[list[list[int]], tuple[int, int], bool]:
    """Evacuate ``a0``; return new columns, the freed cell ``(column, row)``
    in the old column indexing, and whether that column was deleted."""
    cols = [list(c) for c in cols]
    j = next((k for k, c in enumerate(cols) if c[-1] == a0), None)
    if j is None:
        raise ChainError(f"{a0} is not a topmost entry")
    if len(cols[j]) == 1:
        del cols[j]
        return cols, (j, 0), True
    cols[j].pop()
    while True:
        a1 = cols[j][0]
        if j + 1 == len(cols):
            return cols, (j, 1), False
        right = cols[j + 1]
        a2 = right[-1]
        if a2 < a1:
            return cols, (j, 1), False
        cols[j].append(a2)
        right.pop()
        if not right:
            del cols[j + 1]
            return cols, (j + 1, 0), True
        j += 1


def evacuate_letter(t: YfTableau, a0: int) -> YfTableau:
    cols, _, _ = _evacuate([list(c) for c in t.columns], a0)
    return YfTableau(tuple(tuple(c) for c in cols))


def evacuation_steps(t: YfTableau) -> list[tuple[int, YfTableau, tuple[int, int]]]:
    """Evacuate ``n, n-1, ..., 1``; per step the letter, the remaining tableau
    and the freed cell in the coordinates of the original shape."""
    require_standard(t)
    cols = [list(c) for c in t.columns]
    origin = list(range(len(cols)))
    steps = []
    for a0 in range(t.size, 0, -1):
        cols, (j, row), deleted = _evacuate(cols, a0)
        steps.append((a0, YfTableau(tuple(tuple(c) for c in cols)), (origin[j], row)))
        if deleted:
            del origin[j]
    return steps


def evacuation_tableau(t: YfTableau) -> YfTableau:
    """Label each cell of the shape by the letter whose evacuation freed it."""
    labels: dict[tuple[int, int], int] = {}
    for a0, _, cell in evacuation_steps(t):
        labels[cell] = a0
    u = t.shape
    return YfTableau(tuple(tuple(labels[(j, r)] for r in range(h)) for j, h in enumerate(u.parts)))
