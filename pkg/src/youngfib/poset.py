"""Finite posets given by their cover relation.

Elements may be any hashable values.  The order relation is derived lazily
by transitive closure, stored as Python-int bitsets indexed by element
position, which keeps closure, intervals and lattice checks cheap for the
few-hundred-element posets this package builds.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from typing import Callable, Hashable, Iterable, Iterator, Sequence


class PosetError(ValueError):
    pass


class FinitePoset:
    """A finite poset stored as its cover relation.

    ``covers`` holds pairs ``(x, y)`` meaning ``x`` is covered by ``y``.
    Construction checks that the cover digraph is acyclic and irreducible.
    """

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[tuple], *, check: bool = True):
        self.elements: tuple = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError("duplicate elements")
        self.covers = frozenset(covers)
        self._ups: list[list[int]] = [[] for _ in self.elements]
        self._downs: list[list[int]] = [[] for _ in self.elements]
        for x, y in self.covers:
            if x not in self.index or y not in self.index:
                raise PosetError(f"cover ({x!r}, {y!r}) mentions an unknown element")
            if x == y:
                raise PosetError(f"self-cover on {x!r}")
            self._ups[self.index[x]].append(self.index[y])
            self._downs[self.index[y]].append(self.index[x])
        self._above: list[int] | None = None
        self._below: list[int] | None = None
        if check:
            self._closure()
            self._check_irreducible()

    @classmethod
    def from_relation(cls, elements: Iterable[Hashable], pairs: Iterable[tuple]) -> "FinitePoset":
        """Build from any generating relation: close transitively, keep the covers."""
        elements = tuple(elements)
        idx = {e: i for i, e in enumerate(elements)}
        succ: list[set[int]] = [set() for _ in elements]
        for x, y in pairs:
            if x != y:
                succ[idx[x]].add(idx[y])
        above = _closure_bits(succ)
        for i in range(len(elements)):
            if any((above[j] >> i) & 1 for j in _bits(above[i] & ~(1 << i))):
                raise PosetError("relation has a cycle")
        covers = []
        for i, e in enumerate(elements):
            strict = above[i] & ~(1 << i)
            # y covers x when y > x and nothing strictly between
            between = 0
            for j in _bits(strict):
                between |= above[j] & ~(1 << j)
            for j in _bits(strict & ~between):
                covers.append((e, elements[j]))
        return cls(elements, covers)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    # ------------------------------------------------------------ closure

    def _closure(self) -> None:
        if self._above is not None:
            return
        order = self._topological_indices()
        above = [1 << i for i in range(len(self.elements))]
        for i in reversed(order):
            for j in self._ups[i]:
                above[i] |= above[j]
        below = [1 << i for i in range(len(self.elements))]
        for i in order:
            for j in self._downs[i]:
                below[i] |= below[j]
        self._above, self._below = above, below

    def _topological_indices(self) -> list[int]:
        indeg = [len(d) for d in self._downs]
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self._ups[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != len(self.elements):
            raise PosetError("cover relation has a cycle")
        return order

    def _check_irreducible(self) -> None:
        for i, ups in enumerate(self._ups):
            for j in ups:
                for k in ups:
                    if k != j and (self._above[k] >> j) & 1:
                        raise PosetError(
                            f"cover ({self.elements[i]!r}, {self.elements[j]!r}) is implied transitively"
                        )

    def leq(self, x, y) -> bool:
        self._closure()
        return bool((self._above[self.index[x]] >> self.index[y]) & 1)

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def upset(self, x) -> list:
        self._closure()
        return [self.elements[j] for j in _bits(self._above[self.index[x]])]

    def downset(self, x) -> list:
        self._closure()
        return [self.elements[j] for j in _bits(self._below[self.index[x]])]

    def upper_covers(self, x) -> list:
        return [self.elements[j] for j in self._ups[self.index[x]]]

    def lower_covers(self, x) -> list:
        return [self.elements[j] for j in self._downs[self.index[x]]]

    def relation(self) -> set[tuple]:
        """All pairs ``(x, y)`` with ``x <= y``."""
        self._closure()
        return {
            (x, self.elements[j])
            for i, x in enumerate(self.elements)
            for j in _bits(self._above[i])
        }

    def minimal_elements(self) -> list:
        return [e for i, e in enumerate(self.elements) if not self._downs[i]]

    def maximal_elements(self) -> list:
        return [e for i, e in enumerate(self.elements) if not self._ups[i]]

    # ------------------------------------------------------------ derived

    def interval(self, a, b) -> list:
        """Elements ``x`` with ``a <= x <= b``, in element order."""
        if not self.leq(a, b):
            raise PosetError(f"{a!r} is not below {b!r}")
        mask = self._above[self.index[a]] & self._below[self.index[b]]
        return [self.elements[j] for j in _bits(mask)]

    def linear_extensions(self) -> Iterator[tuple]:
        """Yield every linear extension, smallest element first."""
        n = len(self.elements)
        indeg = [len(d) for d in self._downs]
        prefix: list[int] = []

        def rec() -> Iterator[tuple]:
            if len(prefix) == n:
                yield tuple(self.elements[i] for i in prefix)
                return
            for i in range(n):
                if indeg[i] == 0:
                    indeg[i] = -1
                    for j in self._ups[i]:
                        indeg[j] -= 1
                    prefix.append(i)
                    yield from rec()
                    prefix.pop()
                    for j in self._ups[i]:
                        indeg[j] += 1
                    indeg[i] = 0

        yield from rec()

    def count_linear_extensions(self) -> int:
        """Count linear extensions by dynamic programming over down-closed sets."""
        n = len(self.elements)
        if n > 24:
            raise PosetError("linear extension counting is limited to 24 elements")
        down = [sum(1 << j for j in self._downs[i]) for i in range(n)]
        counts = {0: 1}
        for _ in range(n):
            nxt: dict[int, int] = defaultdict(int)
            for ideal, c in counts.items():
                for i in range(n):
                    if not (ideal >> i) & 1 and down[i] & ~ideal == 0:
                        nxt[ideal | (1 << i)] += c
            counts = nxt
        return sum(counts.values())

    def join(self, a, b):
        """Least upper bound of ``a`` and ``b``, or ``None``."""
        self._closure()
        common = self._above[self.index[a]] & self._above[self.index[b]]
        for j in _bits(common):
            if self._above[j] & common == common:
                return self.elements[j]
        return None

    def meet(self, a, b):
        self._closure()
        common = self._below[self.index[a]] & self._below[self.index[b]]
        for j in _bits(common):
            if self._below[j] & common == common:
                return self.elements[j]
        return None

    def covers_json(self, key: Callable = str) -> str:
        data = {key(e): sorted(key(y) for y in self.upper_covers(e)) for e in self.elements}
        return json.dumps(data, indent=2, sort_keys=True)


class RankedPoset(FinitePoset):
    """A finite poset with a rank function supplied by the caller."""

    def __init__(self, elements, covers, rank: dict, *, check: bool = True):
        super().__init__(elements, covers, check=check)
        self.rank = dict(rank)
        missing = [e for e in self.elements if e not in self.rank]
        if missing:
            raise PosetError(f"rank missing for {missing[0]!r}")

    def rank_levels(self) -> dict[int, list]:
        levels: dict[int, list] = defaultdict(list)
        for e in self.elements:
            levels[self.rank[e]].append(e)
        return dict(sorted(levels.items()))

    def covers_respect_rank(self) -> bool:
        return all(self.rank[y] == self.rank[x] + 1 for x, y in self.covers)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closure_bits(succ: Sequence[set[int]]) -> list[int]:
    n = len(succ)
    above = [1 << i for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = above[i]
            for j in succ[i]:
                acc |= above[j]
            if acc != above[i]:
                above[i] = acc
                changed = True
    return above


def poset_interval(p: FinitePoset, a, b) -> list:
    return p.interval(a, b)


def linear_extensions(p: FinitePoset) -> list[tuple]:
    return list(p.linear_extensions())


def is_graded(p: FinitePoset) -> bool:
    """True when some rank function sends every minimal element to 0 and
    raises by exactly one along each cover."""
    rank: dict[int, int] = {}
    queue = deque()
    for i, d in enumerate(p._downs):
        if not d:
            rank[i] = 0
            queue.append(i)
    while queue:
        i = queue.popleft()
        for j in p._ups[i]:
            r = rank[i] + 1
            if j in rank:
                if rank[j] != r:
                    return False
            else:
                rank[j] = r
                queue.append(j)
    # every downward cover must agree as well
    return all(rank[y] == rank[x] + 1 for x in range(len(p)) for y in p._ups[x])


def is_lattice(p: FinitePoset) -> bool:
    els = p.elements
    for i, a in enumerate(els):
        for b in els[i + 1:]:
            if p.join(a, b) is None or p.meet(a, b) is None:
                return False
    return True


def to_dot(p: FinitePoset, name: str = "P", label: Callable = str, rank: dict | None = None) -> str:
    """DOT digraph, edges pointing up; rank-aligned layers when ranks are known."""
    if rank is None and isinstance(p, RankedPoset):
        rank = p.rank
    ids = {e: f"n{i}" for i, e in enumerate(p.elements)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for e in p.elements:
        lines.append(f'  {ids[e]} [label="{label(e)}"];')
    if rank is not None:
        levels: dict[int, list] = defaultdict(list)
        for e in p.elements:
            levels[rank[e]].append(ids[e])
        for r in sorted(levels):
            lines.append(f"  {{ rank=same; {'; '.join(levels[r])}; }}")
    for x, y in sorted(p.covers, key=lambda c: (p.index[c[0]], p.index[c[1]])):
        lines.append(f"  {ids[x]} -> {ids[y]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
