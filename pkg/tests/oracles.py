"""Slow, definition-level oracles kept independent of the package code."""

from __future__ import annotations

import bisect
from itertools import permutations, product


def shapes(n):
    """Compositions of n into 1s and 2s, as tuples, descending lex order."""
    out = [c for k in range(n + 1) for c in product((2, 1), repeat=k) if sum(c) == n]
    return sorted(out, reverse=True)


def yf_valid(cols):
    """Column strictness plus: nothing right of a column exceeds its top."""
    for j, c in enumerate(cols):
        if len(c) == 2 and c[0] >= c[1]:
            return False
        for d in cols[j + 1:]:
            for x in d:
                if x > c[-1]:
                    return False
    return True


def fill(shape, values):
    it = iter(values)
    return tuple(tuple(next(it) for _ in range(h)) for h in shape)


def standard_yft(shape):
    n = sum(shape)
    return {fill(shape, p) for p in permutations(range(1, n + 1)) if yf_valid(fill(shape, p))}


def semistandard_yft(shape, content):
    letters = [i + 1 for i, m in enumerate(content) for _ in range(m)]
    return {fill(shape, p) for p in set(permutations(letters)) if yf_valid(fill(shape, p))}


def yf_insert(sigma):
    """Pairing read right to left; returns (P, Q) as tuples of columns."""
    word = list(sigma)
    used = set()
    cols = []
    for i in reversed(range(len(word))):
        x = word[i]
        if x in used:
            continue
        bigger = [y for y in word[:i] if y > x and y not in used]
        if bigger:
            y = max(bigger)
            used |= {x, y}
            cols.append((x, y))
        else:
            used.add(x)
            cols.append((x,))
    cols.sort(key=lambda c: -c[-1])
    pos = {x: i + 1 for i, x in enumerate(word)}
    q = tuple((pos[c[1]], pos[c[0]]) if len(c) == 2 else (pos[c[0]],) for c in cols)
    return tuple(cols), q


def inversions(sigma):
    return {(sigma[i], sigma[j]) for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j]}


def weak_leq(a, b):
    return inversions(a) <= inversions(b)


def linear_extensions(elements, covers):
    """Orderings that list every covered element before its cover."""
    out = []
    for p in permutations(elements):
        where = {x: i for i, x in enumerate(p)}
        if all(where[x] < where[y] for x, y in covers):
            out.append(p)
    return out


def rsk_shape(word):
    rows = []
    for x in word:
        for r in rows:
            k = bisect.bisect_right(r, x)
            if k == len(r):
                r.append(x)
                break
            r[k], x = x, r[k]
        else:
            rows.append([x])
    return tuple(len(r) for r in rows)


def partitions(n, top=None):
    top = n if top is None else top
    if n == 0:
        return [()]
    return [(k,) + rest for k in range(min(n, top), 0, -1) for rest in partitions(n - k, k)]


def ssyt_count(lam, mu):
    """Every filling of the diagram with the content, tested for rows and columns."""
    letters = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    count = 0
    for p in set(permutations(letters)):
        it = iter(p)
        rows = [[next(it) for _ in range(k)] for k in lam]
        ok = all(r[i] <= r[i + 1] for r in rows for i in range(len(r) - 1))
        ok = ok and all(rows[i][j] < rows[i + 1][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1])))
        count += ok
    return count


def involution_count(n):
    return sum(1 for p in permutations(range(1, n + 1)) if all(p[p[i] - 1] == i + 1 for i in range(n)))
