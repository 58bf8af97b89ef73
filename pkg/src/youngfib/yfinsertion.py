"""The Young-Fibonacci insertion ``sigma -> (P(sigma), Q(sigma))``.

Reading the permutation right to left, each letter not yet matched is paired
with the largest unmatched letter to its left, provided that letter is
greater.  Pairs become two-boxed columns (smaller letter at the bottom),
unmatched letters become single columns, and columns are ordered by
decreasing topmost letter.  The recording tableau puts, for a pair
``(a, b)``, the position of ``b`` at the bottom and the position of ``a``
on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .yftableau import YfTableau, cano_poset, require_standard

Permutation = tuple[int, ...]

MAX_CLASS_N = 10


class PermutationError(ValueError):
    pass


def parse_permutation(text: str) -> Permutation:
    """Digit string (``"2715643"``) or comma separated integers (``"10,2,..."``)."""
    text = text.strip()
    if not text:
        raise PermutationError("empty permutation")
    tokens = text.split(",") if "," in text else list(text)
    letters = []
    for tok in tokens:
        tok = tok.strip()
        if not tok.isdigit():
            raise PermutationError(f"invalid token {tok!r} in permutation {text!r}")
        letters.append(int(tok))
    return check_permutation(letters)


def check_permutation(word: Iterable[int]) -> Permutation:
    word = tuple(int(x) for x in word)
    if sorted(word) != list(range(1, len(word) + 1)):
        bad = next(
            (x for x in word if not 1 <= x <= len(word) or word.count(x) > 1),
            None,
        )
        raise PermutationError(f"not a permutation of 1..{len(word)}: offending letter {bad}")
    return word


def format_permutation(sigma: Sequence[int]) -> str:
    if len(sigma) <= 9:
        return "".join(str(x) for x in sigma)
    return ",".join(str(x) for x in sigma)


def inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for pos, letter in enumerate(sigma, start=1):
        inv[letter - 1] = pos
    return tuple(inv)


def is_involution(sigma: Sequence[int]) -> bool:
    return all(sigma[sigma[i] - 1] == i + 1 for i in range(len(sigma)))


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]
    singles: frozenset[int]
    positions: dict[int, int] = field(compare=False, hash=False)


def match_letters(sigma: Sequence[int]) -> Matching:
    """Right-to-left scan pairing each unmatched letter with the largest
    unmatched greater letter on its left."""
    matched: set[int] = set()
    pairs = []
    for p in range(len(sigma) - 1, -1, -1):
        x = sigma[p]
        if x in matched:
            continue
        best = 0
        for y in sigma[:p]:
            if y > x and y > best and y not in matched:
                best = y
        if best:
            matched.update((x, best))
            pairs.append((x, best))
    singles = frozenset(x for x in sigma if x not in matched)
    positions = {x: p for p, x in enumerate(sigma, start=1)}
    return Matching(frozenset(pairs), singles, positions)


def _columns(m: Matching) -> list[tuple[int, ...]]:
    cols = [tuple(pair) for pair in m.pairs] + [(c,) for c in m.singles]
    cols.sort(key=lambda c: c[-1], reverse=True)
    return cols


def insert_p(sigma: Sequence[int]) -> YfTableau:
    return YfTableau(tuple(_columns(match_letters(sigma))))


def insert_pq(sigma: Sequence[int]) -> tuple[YfTableau, YfTableau]:
    m = match_letters(sigma)
    cols = _columns(m)
    pos = m.positions
    q = tuple((pos[c[1]], pos[c[0]]) if len(c) == 2 else (pos[c[0]],) for c in cols)
    return YfTableau(tuple(cols)), YfTableau(q)


def inv_set(sigma: Sequence[int]) -> set[tuple[int, int]]:
    """Pairs ``(j, i)`` with ``i < j`` and ``j`` to the left of ``i``."""
    pos = {x: p for p, x in enumerate(sigma)}
    n = len(sigma)
    return {(j, i) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[j] < pos[i]}


def noninv_set(sigma: Sequence[int]) -> set[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``i < j`` and ``i`` to the left of ``j``."""
    pos = {x: p for p, x in enumerate(sigma)}
    n = len(sigma)
    return {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i] < pos[j]}


def inversions(sigma: Sequence[int]) -> int:
    return len(inv_set(sigma))


def fibo_class(t: YfTableau, bound: int = MAX_CLASS_N) -> list[Permutation]:
    """Permutations whose insertion tableau is ``t``, via the canonical poset."""
    require_standard(t)
    if t.size > bound:
        raise PermutationError(f"class enumeration limited to n <= {bound}, got {t.size}")
    return sorted(cano_poset(t).linear_extensions())


def tableau_key(t: YfTableau, n: int | None = None) -> int:
    """Same packing as :func:`kernels.insertion_keys`, computed from a tableau."""
    n = t.size if n is None else n
    partner = [0] * (n + 1)
    for c in t.columns:
        if len(c) == 2:
            partner[c[0]], partner[c[1]] = c[1], c[0]
    return sum(partner[v] * (n + 1) ** (v - 1) for v in range(1, n + 1))


def fibo_class_bruteforce(t: YfTableau) -> list[Permutation]:
    """Filter all of S_n by insertion tableau (batched kernel)."""
    require_standard(t)
    perms = kernels.all_permutations(t.size)
    keys = kernels.insertion_keys(perms)
    hit = perms[keys == tableau_key(t)]
    return [tuple(int(x) for x in row) for row in hit]


def weak_interval(low: Sequence[int], high: Sequence[int]) -> list[Permutation]:
    """Permutations between ``low`` and ``high`` in the weak order, by inversion-set containment."""
    n = len(low)
    perms = kernels.all_permutations(n)
    masks = kernels.inversion_masks(perms)
    lo = kernels.inversion_masks(np.asarray([low]))[0]
    hi = kernels.inversion_masks(np.asarray([high]))[0]
    ok = ((lo & ~masks) == 0) & ((masks & ~hi) == 0)
    return [tuple(int(x) for x in row) for row in perms[ok]]


def involutions(n: int) -> list[Permutation]:
    perms = kernels.all_permutations(n)
    inv_rows = np.argsort(perms, axis=1) + 1
    ok = (inv_rows == perms).all(axis=1)
    return [tuple(int(x) for x in row) for row in perms[ok]]


def involution_count(n: int) -> int:
    """Number of involutions in S_n, by the closed sum over matchings."""
    return sum(
        factorial(n) // (factorial(n - 2 * k) * factorial(k) * 2**k) for k in range(n // 2 + 1)
    )

