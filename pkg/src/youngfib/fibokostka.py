"""Young-Fibonacci numbers and Okada's Kostka analogues.

``n_number(u, v)`` counts semistandard tableaux of shape ``u`` and content
``v``; ``okada_k(u, v)`` is the coefficient of ``s_u`` in ``h_v`` in
Okada's algebra.  Both come from memoized recurrences that peel the first
part of ``u`` (and the last, respectively first, part of ``v``).  The
interval method recounts ``okada_k`` as tableaux of shape ``u`` lying
between the row canonical tableau of ``v`` and the top of the weak order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .snakeshape import EMPTY, Snakeshape, as_shape, covers_up, shapes_of_size, v_one_minus
from .yfposet import MAX_ORDER_N, _check_bound, top_element, weak_order_yft
from .yftableau import enumerate_semistandard, row_canonical


class SizeMismatch(ValueError):
    pass


def _pair(u, v) -> tuple[Snakeshape, Snakeshape]:
    u, v = as_shape(u), as_shape(v)
    if u.size != v.size:
        raise SizeMismatch(f"|{u}| = {u.size} but |{v}| = {v.size}")
    return u, v


@dataclass(frozen=True)
class KostkaMatrix:
    """Square matrix indexed by ``order`` (rows ``u``, columns ``v``)."""

    order: tuple
    entries: np.ndarray

    def __post_init__(self) -> None:
        k = len(self.order)
        if self.entries.shape != (k, k):
            raise ValueError(f"expected a {k}x{k} matrix, got {self.entries.shape}")

    def __getitem__(self, key) -> int:
        u, v = key
        idx = {str(s): i for i, s in enumerate(self.order)}
        return int(self.entries[idx[str(u)], idx[str(v)]])

    def rows(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def to_text(self, dot_zero: bool = False) -> str:
        labels = [str(s) for s in self.order]
        cells = [["." if dot_zero and x == 0 else str(x) for x in row] for row in self.rows()]
        lw = max(len(s) for s in labels)
        cw = max([len(s) for s in labels] + [len(c) for row in cells for c in row])
        head = " " * lw + " | " + " ".join(s.rjust(cw) for s in labels)
        lines = [head, "-" * len(head)]
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(lw) + " | " + " ".join(c.rjust(cw) for c in row))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [str(s) for s in self.order])
        for lab, row in zip(self.order, self.rows()):
            w.writerow([str(lab)] + row)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"order": [str(s) for s in self.order], "entries": self.rows()})


# ------------------------------------------------------ Young-Fibonacci N


@lru_cache(maxsize=None)
def _n(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    if not u:
        return 1 if not v else 0
    if u == (2,) and v == (2,):
        return 0
    first, rest = u[0], u[1:]
    body, last = v[:-1], v[-1]
    if first == 1:
        return _n(rest, body) if last == 1 else _n(rest, body + (1,))
    lowered = v_one_minus(Snakeshape(body))
    if last == 1:
        return sum(m * _n(rest, w.parts) for w, m in lowered.items())
    return sum(m * _n(rest, w.parts + (1,)) for w, m in lowered.items())


def n_number(u, v) -> int:
    """Young-Fibonacci number ``N_{u,v}`` by recurrence."""
    u, v = _pair(u, v)
    return _n(u.parts, v.parts)


def n_number_bruteforce(u, v) -> int:
    u, v = _pair(u, v)
    return len(enumerate_semistandard(u, v))


@lru_cache(maxsize=None)
def n_matrix(n: int) -> KostkaMatrix:
    order = tuple(shapes_of_size(n))
    m = np.array([[n_number(u, v) for v in order] for u in order], dtype=np.int64).reshape(len(order), len(order))
    return KostkaMatrix(order, m)


def zero_pair_count(n: int) -> int:
    """Number of pairs ``(u, v)`` of size ``n`` with ``N_{u,v} = 0``."""
    if n < 2:
        raise ValueError("zero_pair_count needs n >= 2")
    return int((n_matrix(n).entries == 0).sum())


# ------------------------------------------------------------- Okada's K


@lru_cache(maxsize=None)
def _k(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    if not u:
        return 1 if not v else 0
    a, rest_u = u[0], u[1:]
    b, rest_v = v[0], v[1:]
    if a == b:
        return _k(rest_u, rest_v)
    if a == 1:
        return 0
    return sum(_k(w.parts, rest_v) for w in covers_up(Snakeshape(rest_u)))


def okada_k(u, v) -> int:
    u, v = _pair(u, v)
    return _k(u.parts, v.parts)


def okada_k_by_interval(u, v, bound: int = MAX_ORDER_N) -> int:
    """Tableaux of shape ``u`` in the interval from ``rT_v`` up to the top."""
    u, v = _pair(u, v)
    _check_bound(u.size, bound)
    if u.size == 0:
        return 1
    p = weak_order_yft(u.size, bound)
    return sum(1 for t in p.interval(row_canonical(v), top_element(p)) if t.shape == u)


@lru_cache(maxsize=None)
def _okada_matrix(n: int, method: str) -> KostkaMatrix:
    order = tuple(shapes_of_size(n))
    f = okada_k if method == "recurrence" else okada_k_by_interval
    m = np.array([[f(u, v) for v in order] for u in order], dtype=np.int64).reshape(len(order), len(order))
    return KostkaMatrix(order, m)


def okada_matrix(n: int, method: str = "recurrence", bound: int = MAX_ORDER_N) -> KostkaMatrix:
    if method not in ("recurrence", "interval"):
        raise ValueError(f"unknown method {method!r}")
    if method == "interval":
        _check_bound(n, bound)
    return _okada_matrix(n, method)


def matrix_diff(a: KostkaMatrix, b: KostkaMatrix) -> list[tuple[str, str, int, int]]:
    """Cells where two matrices over the same order disagree."""
    out = []
    for i, u in enumerate(a.order):
        for j, v in enumerate(a.order):
            x, y = int(a.entries[i, j]), int(b.entries[i, j])
            if x != y:
                out.append((str(u), str(v), x, y))
    return out


__all__ = [
    "EMPTY",
    "KostkaMatrix",
    "SizeMismatch",
    "matrix_diff",
    "n_matrix",
    "n_number",
    "n_number_bruteforce",
    "okada_k",
    "okada_k_by_interval",
    "okada_matrix",
    "zero_pair_count",
]
