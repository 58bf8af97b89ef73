"""Snakeshapes and the Young-Fibonacci lattice.

A snakeshape is a composition into parts 1 and 2, drawn as columns of one
or two boxes.  Words are read left to right and the leftmost column is the
"front" of the shape.  The empty shape is written ``e``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

EMPTY_TOKEN = "e"


@dataclass(frozen=True, order=True)
class Snakeshape:
    """Column heights read from the front (left) column."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.parts, tuple):
            object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if p not in (1, 2):
                raise ValueError(f"snakeshape parts must be 1 or 2, got {p!r}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return format_shape(self)

    def __repr__(self) -> str:
        return f"Snakeshape('{format_shape(self)}')"

    def prepend(self, part: int) -> "Snakeshape":
        return Snakeshape((part,) + self.parts)

    def append(self, part: int) -> "Snakeshape":
        return Snakeshape(self.parts + (part,))

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Snakeshape":
        return cls(tuple(int(x) for x in data))


EMPTY = Snakeshape(())


def parse_shape(text: str) -> Snakeshape:
    """Parse a shape word such as ``"2212"`` or the empty token ``"e"``.

    Raises:
        ValueError: on any character other than '1' or '2'.
    """
    text = text.strip()
    if text == EMPTY_TOKEN:
        return EMPTY
    if not text:
        raise ValueError("empty shape word; use 'e' for the empty shape")
    for ch in text:
        if ch not in "12":
            raise ValueError(f"invalid character {ch!r} in shape word {text!r}")
    return Snakeshape(tuple(int(ch) for ch in text))


def format_shape(u: Snakeshape) -> str:
    if not u.parts:
        return EMPTY_TOKEN
    return "".join(str(p) for p in u.parts)


def as_shape(u: Snakeshape | str | Iterable[int]) -> Snakeshape:
    """Coerce a word, a sequence of parts or a shape into a :class:`Snakeshape`."""
    if isinstance(u, Snakeshape):
        return u
    if isinstance(u, str):
        return parse_shape(u)
    return Snakeshape(tuple(u))


def sort_desc(shapes: Iterable[Snakeshape]) -> list[Snakeshape]:
    """Descending lexicographic order with 2 > 1 (the order of the printed matrices)."""
    return sorted(shapes, key=lambda s: s.parts, reverse=True)


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = [(1,) + rest for rest in _compositions(n - 1)]
    if n >= 2:
        out += [(2,) + rest for rest in _compositions(n - 2)]
    return tuple(out)


def shapes_of_size(n: int) -> list[Snakeshape]:
    """All snakeshapes of size ``n``, descending lexicographic order."""
    if n < 0:
        raise ValueError("size must be non-negative")
    return sort_desc(Snakeshape(p) for p in _compositions(n))


def leading_twos(u: Snakeshape) -> int:
    """Length of the maximal run of 2s at the front of ``u``."""
    m = 0
    for p in u.parts:
        if p != 2:
            break
        m += 1
    return m


def covers_up(u: Snakeshape) -> list[Snakeshape]:
    """Shapes covering ``u`` in the Young-Fibonacci lattice."""
    parts = u.parts
    out = {Snakeshape((1,) + parts)}
    if 1 in parts:
        k = parts.index(1)
        out.add(Snakeshape(parts[:k] + (2,) + parts[k + 1:]))
    for i in range(1, leading_twos(u) + 1):
        out.add(Snakeshape(parts[:i] + (1,) + parts[i:]))
    return sort_desc(out)


def covers_down(v: Snakeshape) -> list[Snakeshape]:
    """Shapes covered by ``v``, by deleting each removable cell.

    Removable cells are the first single-boxed column and the top cell of
    each column in the leading run of two-boxed columns.
    """
    parts = v.parts
    out = set()
    if 1 in parts:
        k = parts.index(1)
        out.add(Snakeshape(parts[:k] + parts[k + 1:]))
    for i in range(leading_twos(v)):
        out.add(Snakeshape(parts[:i] + (1,) + parts[i + 1:]))
    return sort_desc(out)


def v_one_minus(v: Snakeshape) -> Counter:
    """Multiset of shapes from ``v`` by deleting one part 1 or lowering one part 2."""
    parts = v.parts
    out: Counter = Counter()
    for i, p in enumerate(parts):
        if p == 1:
            out[Snakeshape(parts[:i] + parts[i + 1:])] += 1
        else:
            out[Snakeshape(parts[:i] + (1,) + parts[i + 1:])] += 1
    return out


@lru_cache(maxsize=None)
def chain_count(u: Snakeshape) -> int:
    """Number of saturated chains from the empty shape to ``u``."""
    if not u.parts:
        return 1
    return sum(chain_count(w) for w in covers_down(u))


def lattice_levels(n: int) -> list[list[Snakeshape]]:
    """Ranks ``0..n`` of the lattice, each level in descending order."""
    return [shapes_of_size(k) for k in range(n + 1)]


def lattice_to_dot(n: int) -> str:
    """DOT digraph of the lattice up to rank ``n``, one ``rank=same`` layer per level."""
    lines = ["digraph YFL {", "  rankdir=BT;"]
    for level in lattice_levels(n):
        names = " ".join(f'"{s}";' for s in level)
        lines.append(f"  {{ rank=same; {names} }}")
    for level in lattice_levels(n - 1) if n > 0 else []:
        for u in level:
            for v in covers_up(u):
                lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
