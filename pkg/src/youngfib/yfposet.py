"""Weak orders on Young-Fibonacci tableaux and on permutations.

The order on tableaux of size ``n`` is generated by *shifting an entry*:
the bottom entry ``a`` of a column moves into the column on its left.

* left neighbour single-boxed with entry ``c > a``: the neighbour becomes
  ``(a, c)``; if ``a`` had a top ``b`` it falls into ``a``'s place,
  otherwise ``a``'s column disappears;
* left neighbour two-boxed with bottom ``c > a``: ``a`` takes ``c``'s
  place; then ``c`` takes ``a``'s place if ``c < b`` (``b`` being ``a``'s
  old top, if any), otherwise ``c`` becomes a new single column between
  them and ``b`` falls down.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import kernels
from .poset import RankedPoset
from .yfinsertion import Permutation, insert_p, inversions
from .yftableau import YfTableau, is_standard, min_cano, require_standard, standard_tableaux

MAX_ORDER_N = 8


class BoundError(ValueError):
    pass


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BoundError(f"n = {n} exceeds the bound {bound}; pass a larger bound explicitly")


def shift_entry(t: YfTableau, j: int) -> YfTableau | None:
    """Shift the bottom entry of column ``j`` (0-based); ``None`` if not allowed."""
    if j == 0:
        return None
    cols = [list(c) for c in t.columns]
    here, left = cols[j], cols[j - 1]
    a = here[0]
    b = here[1] if len(here) == 2 else None
    c = left[0]
    if a > c:
        return None
    if len(left) == 1:
        cols[j - 1] = [a, c]
        if b is None:
            del cols[j]
        else:
            cols[j] = [b]
    else:
        cols[j - 1] = [a, left[1]]
        if b is None or c < b:
            cols[j] = [c] if b is None else [c, b]
        else:
            cols[j] = [b]
            cols.insert(j, [c])
    return YfTableau(tuple(tuple(col) for col in cols))


def shift_targets(t: YfTableau) -> list[YfTableau]:
    require_standard(t)
    out = []
    for j in range(1, len(t.columns)):
        s = shift_entry(t, j)
        if s is not None and s not in out:
            out.append(s)
    return out


def yft_rank(t: YfTableau) -> int:
    return inversions(min_cano(t))


@lru_cache(maxsize=None)
def _weak_order_yft(n: int) -> RankedPoset:
    elements = standard_tableaux(n)
    covers = [(t, s) for t in elements for s in shift_targets(t)]
    rank = {t: yft_rank(t) for t in elements}
    return RankedPoset(elements, covers, rank)


def weak_order_yft(n: int, bound: int = MAX_ORDER_N) -> RankedPoset:
    """All standard tableaux of size ``n`` ordered by shifting; rank is the
    inversion number of the minimal canonical word."""
    _check_bound(n, bound)
    return _weak_order_yft(n)


def top_element(p: RankedPoset):
    tops = p.maximal_elements()
    if len(tops) != 1:
        raise ValueError(f"{len(tops)} maximal elements")
    return tops[0]


def bottom_element(p: RankedPoset):
    bottoms = p.minimal_elements()
    if len(bottoms) != 1:
        raise ValueError(f"{len(bottoms)} minimal elements")
    return bottoms[0]


def adjacent_swap(sigma: Permutation, i: int) -> Permutation:
    """``sigma`` times the adjacent transposition of positions ``i, i+1`` (1-based)."""
    s = list(sigma)
    s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


@lru_cache(maxsize=None)
def _weak_order_sn(n: int) -> RankedPoset:
    perms = [tuple(int(x) for x in row) for row in kernels.all_permutations(n)]
    covers = [
        (s, adjacent_swap(s, i))
        for s in perms
        for i in range(1, n)
        if s[i - 1] < s[i]
    ]
    ranks = kernels.inversion_counts(kernels.all_permutations(n))
    rank = {s: int(r) for s, r in zip(perms, ranks)}
    return RankedPoset(perms, covers, rank, check=n <= 6)


def weak_order_sn(n: int, bound: int = MAX_ORDER_N) -> RankedPoset:
    """Right weak order on S_n; covers swap an ascent at adjacent positions."""
    _check_bound(n, bound)
    return _weak_order_sn(n)


def weak_leq(sigma, tau) -> bool:
    """``sigma <= tau`` in the weak order, by inversion-set containment."""
    m = kernels.inversion_masks(np.asarray([sigma, tau]))
    return bool(m[0] & ~m[1] == 0)


def induced_yft_relation(n: int) -> set[tuple[YfTableau, YfTableau]]:
    """Pairs ``(P(tau1), P(tau2))`` over all ``tau1 <= tau2`` in S_n."""
    perms = kernels.all_permutations(n)
    masks = kernels.inversion_masks(perms)
    keys = kernels.insertion_keys(perms)
    leq = kernels.submask_matrix(masks, masks)
    # one representative tableau per key
    rep: dict[int, YfTableau] = {}
    for row, k in zip(perms, keys):
        if int(k) not in rep:
            rep[int(k)] = insert_p(tuple(int(x) for x in row))
    pairs = set()
    key_list = [int(k) for k in keys]
    uniq = sorted(set(key_list))
    pos = {k: i for i, k in enumerate(uniq)}
    idx = np.array([pos[k] for k in key_list])
    reach = np.zeros((len(uniq), len(uniq)), dtype=bool)
    a, b = np.nonzero(leq)
    reach[idx[a], idx[b]] = True
    for i, j in zip(*np.nonzero(reach)):
        pairs.add((rep[uniq[i]], rep[uniq[j]]))
    return pairs


def is_valid_shift_output(t: YfTableau) -> bool:
    return all(is_standard(s) and s.size == t.size for s in shift_targets(t))
