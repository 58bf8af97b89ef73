"""Exhaustive invariant suites behind ``youngfib verify``.

Each check takes the requested bound ``n`` and caps it at its own limit;
it returns ``None`` on success or a short description of the first
counterexample.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional

from . import kernels
from .chains_growth import (
    ChainError,
    audit_diagram,
    boundary_chains,
    canonical_labeling,
    chain_to_tableau,
    evacuate_letter,
    evacuation_tableau,
    growth_diagram,
    tableau_to_chain,
    tableau_to_chain_direct,
)
from .fibokostka import n_number, n_number_bruteforce, okada_k, okada_k_by_interval, zero_pair_count
from .poset import FinitePoset, is_graded
from .snakeshape import chain_count, covers_down, covers_up, shapes_of_size
from .yfinsertion import (
    fibo_class,
    fibo_class_bruteforce,
    insert_p,
    insert_pq,
    involution_count,
    involutions,
    inverse,
    weak_interval,
)
from .yfposet import (
    bottom_element,
    induced_yft_relation,
    shift_targets,
    top_element,
    weak_order_sn,
    weak_order_yft,
    yft_rank,
)
from .yftableau import (
    cano_involution,
    column_canonical,
    enumerate_semistandard,
    enumerate_standard,
    hook_count,
    hook_formula,
    is_semistandard,
    is_standard,
    iter_fillings,
    max_cano,
    min_cano,
    rho_max,
    rho_min,
    row_canonical,
    standard_tableaux,
)
from .youngside import (
    chain_leq,
    chain_order_syt,
    kostka,
    kostka_bruteforce,
    kostka_by_interval,
    partitions,
    restricted_shape,
    restricted_shape_by_rsk,
    rsk_p,
    standard_young_tableaux,
    syt,
    weak_order_syt,
)

Result = Optional[str]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    limit: int
    run: Callable[[int], Result]


@dataclass
class Outcome:
    check: Check
    n: int
    failure: Result
    seconds: float

    @property
    def ok(self) -> bool:
        return self.failure is None


CHECKS: list[Check] = []


def check(suite: str, limit: int):
    def wrap(fn: Callable[[int], Result]) -> Callable[[int], Result]:
        CHECKS.append(Check(suite, fn.__name__.lstrip("_"), limit, fn))
        return fn

    return wrap


def _perms(n: int):
    return permutations(range(1, n + 1))


# ----------------------------------------------------------------- lattice


@check("snakeshape", 12)
def lattice_sizes_fibonacci(n: int) -> Result:
    a, b = 1, 1
    for k in range(n + 1):
        if len(shapes_of_size(k)) != a:
            return f"|shapes_of_size({k})| = {len(shapes_of_size(k))}, expected {a}"
        a, b = b, a + b
    return None


@check("snakeshape", 10)
def covers_are_inverse(n: int) -> Result:
    for k in range(n):
        for u in shapes_of_size(k):
            for v in covers_up(u):
                if u not in covers_down(v):
                    return f"{v} covers {u} but covers_down({v}) misses it"
    return None


@check("snakeshape", 10)
def differential_up_down(n: int) -> Result:
    for k in range(n + 1):
        for u in shapes_of_size(k):
            if len(covers_up(u)) != len(covers_down(u)) + 1:
                return f"{u}: {len(covers_up(u))} up covers, {len(covers_down(u))} down covers"
    return None


@check("snakeshape", 12)
def chain_counts_square_sum(n: int) -> Result:
    for k in range(n + 1):
        total = sum(chain_count(u) ** 2 for u in shapes_of_size(k))
        if total != math.factorial(k):
            return f"n={k}: sum of squares {total}"
    return None


# ----------------------------------------------------------------- tableaux


@check("yftableau", 7)
def hook_chain_enumeration(n: int) -> Result:
    for k in range(n + 1):
        for u in shapes_of_size(k):
            tabs = enumerate_standard(u)
            counts = {hook_count(u), hook_formula(u), chain_count(u), len(tabs)}
            if len(counts) != 1:
                return f"{u}: counts {sorted(counts)}"
            if not all(is_standard(t) and t.shape == u for t in tabs):
                return f"{u}: enumerated a non-standard tableau"
    return None


@check("yftableau", 5)
def semistandard_oracle(n: int) -> Result:
    for k in range(1, n + 1):
        for u in shapes_of_size(k):
            for v in shapes_of_size(k):
                values = [i + 1 for i, m in enumerate(v.parts) for _ in range(m)]
                brute = {t for t in iter_fillings(u, values) if is_semistandard(t)}
                fast = set(enumerate_semistandard(u, v))
                if brute != fast:
                    return f"shape {u}, content {v}: {len(fast)} vs {len(brute)}"
    return None


@check("yftableau", 7)
def canonical_tableaux_ranks(n: int) -> Result:
    for k in range(1, n + 1):
        for u in shapes_of_size(k):
            ranks = {t: yft_rank(t) for t in enumerate_standard(u)}
            lo, hi = min(ranks.values()), max(ranks.values())
            if ranks[column_canonical(u)] != lo or lo != rho_min(u):
                return f"{u}: min rank {lo}, cT rank {ranks[column_canonical(u)]}, rho_min {rho_min(u)}"
            if ranks[row_canonical(u)] != hi or hi != rho_max(u):
                return f"{u}: max rank {hi}, rT rank {ranks[row_canonical(u)]}, rho_max {rho_max(u)}"
            if sum(r == lo for r in ranks.values()) != 1 or sum(r == hi for r in ranks.values()) != 1:
                return f"{u}: rank extreme not unique"
    return None


# ---------------------------------------------------------------- insertion


@check("yfinsertion", 7)
def insertion_is_bijective(n: int) -> Result:
    for k in range(1, n + 1):
        seen = {}
        for s in _perms(k):
            pq = insert_pq(s)
            if pq in seen:
                return f"{s} and {seen[pq]} share (P, Q)"
            if pq[0].shape != pq[1].shape or not (is_standard(pq[0]) and is_standard(pq[1])):
                return f"{s}: bad pair {pq[0]} / {pq[1]}"
            seen[pq] = s
        if len(seen) != math.factorial(k):
            return f"n={k}: {len(seen)} pairs"
    return None


@check("yfinsertion", 7)
def bijection_counts(n: int) -> Result:
    for k in range(1, n + 1):
        f = [len(enumerate_standard(u)) for u in shapes_of_size(k)]
        if sum(x * x for x in f) != math.factorial(k):
            return f"n={k}: sum f_u^2 = {sum(x * x for x in f)}"
        if sum(f) != involution_count(k) or len(involutions(k)) != involution_count(k):
            return f"n={k}: sum f_u = {sum(f)}, involutions {len(involutions(k))}"
    return None


@check("yfinsertion", 6)
def inverse_swaps_tableaux(n: int) -> Result:
    for k in range(1, n + 1):
        for s in _perms(k):
            p, q = insert_pq(s)
            if insert_p(inverse(s)) != q:
                return f"P({inverse(s)}) != Q({s})"
    return None


@check("yfinsertion", 7)
def involution_round_trip(n: int) -> Result:
    for k in range(1, n + 1):
        for s in involutions(k):
            if cano_involution(insert_p(s)) != s:
                return f"involution {s}"
        for t in standard_tableaux(k):
            if insert_p(cano_involution(t)) != t:
                return f"tableau {t}"
    return None


@check("yfinsertion", 6)
def class_triple_equality(n: int) -> Result:
    for k in range(1, n + 1):
        for t in standard_tableaux(k):
            a = fibo_class(t)
            b = sorted(fibo_class_bruteforce(t))
            c = sorted(weak_interval(min_cano(t), max_cano(t)))
            if not a == b == c:
                return f"{t}: class sizes {len(a)}, {len(b)}, {len(c)}"
            if a[0] != min_cano(t) or a[-1] != max_cano(t):
                return f"{t}: canonical words are not the extremes"
    return None


# ------------------------------------------------------------------ chains


@check("chains_growth", 7)
def chain_round_trip(n: int) -> Result:
    for k in range(n + 1):
        for t in standard_tableaux(k):
            c = tableau_to_chain(t)
            if chain_to_tableau(c) != t:
                return f"{t} -> {c} -> {chain_to_tableau(c)}"
            try:
                d = tableau_to_chain_direct(t)
            except (ChainError, AssertionError) as exc:
                return f"{t}: direct reversal failed ({exc})"
            if d != c:
                return f"{t}: direct reversal {d} vs {c}"
    return None


@check("chains_growth", 6)
def growth_equivalence(n: int) -> Result:
    for k in range(1, n + 1):
        for s in _perms(k):
            d = growth_diagram(s)
            bad = audit_diagram(d)
            if bad:
                return f"{s}: squares {bad[:3]} violate the local rule"
            p_hat, q_hat = boundary_chains(d)
            p, q = insert_pq(s)
            if chain_to_tableau(p_hat) != p or chain_to_tableau(q_hat) != q:
                return f"{s}: boundary chains give {chain_to_tableau(p_hat)}, {chain_to_tableau(q_hat)}"
    return None


@check("chains_growth", 6)
def evacuation_commutes(n: int) -> Result:
    for k in range(1, n + 1):
        for s in _perms(k):
            p = insert_p(s)
            for a in p.tops:
                if evacuate_letter(p, a) != insert_p([x for x in s if x != a]):
                    return f"{s}, letter {a}"
    return None


@check("chains_growth", 6)
def evacuation_is_path_tableau(n: int) -> Result:
    for k in range(1, n + 1):
        for s in _perms(k):
            p_hat, _ = boundary_chains(growth_diagram(s))
            if evacuation_tableau(insert_p(s)) != canonical_labeling(p_hat):
                return f"{s}"
    return None


# ------------------------------------------------------------------- posets


@check("yfposet", 7)
def yft_order_graded(n: int) -> Result:
    for k in range(1, n + 1):
        p = weak_order_yft(k)
        if not is_graded(p) or not p.covers_respect_rank():
            return f"n={k}: not graded by the inversion statistic"
        try:
            bot, top = bottom_element(p), top_element(p)
        except ValueError as exc:
            return f"n={k}: {exc}"
        if p.rank[bot] != 0 or p.rank[top] != max(p.rank.values()):
            return f"n={k}: extremes at ranks {p.rank[bot]}, {p.rank[top]}"
        if len(p) != len(standard_tableaux(k)):
            return f"n={k}: {len(p)} elements"
    return None


@check("yfposet", 6)
def shift_covers_sound(n: int) -> Result:
    for k in range(1, n + 1):
        for t in standard_tableaux(k):
            for s in shift_targets(t):
                if not is_standard(s) or yft_rank(s) != yft_rank(t) + 1:
                    return f"{t} -> {s}"
                if t in shift_targets(s):
                    return f"{t} <-> {s}"
    return None


@check("yfposet", 5)
def order_preservation(n: int) -> Result:
    for k in range(1, n + 1):
        p = weak_order_yft(k)
        rel = p.relation()
        induced = induced_yft_relation(k)
        # the induced relation is sound but not transitive from n = 4 on;
        # its closure is the shift order
        if not induced <= rel:
            extra = next(iter(induced - rel))
            return f"n={k}: {extra[0]} / {extra[1]} induced but not ordered"
        closure = FinitePoset.from_relation(p.elements, [x for x in induced if x[0] != x[1]])
        if closure.relation() != rel:
            return f"n={k}: closure of the induced relation differs from the shift order"
    return None


@check("yfposet", 5)
def sn_order_is_containment(n: int) -> Result:
    for k in range(1, n + 1):
        p = weak_order_sn(k)
        perms = kernels.all_permutations(k)
        masks = kernels.inversion_masks(perms)
        leq = kernels.submask_matrix(masks, masks)
        rows = [tuple(int(x) for x in r) for r in perms]
        for i, a in enumerate(rows):
            for j, b in enumerate(rows):
                if p.leq(a, b) != bool(leq[i, j]):
                    return f"{a} vs {b}"
    return None


# ------------------------------------------------------------------- kostka


@check("fibokostka", 6)
def n_recurrence_vs_enumeration(n: int) -> Result:
    for k in range(1, n + 1):
        for u in shapes_of_size(k):
            for v in shapes_of_size(k):
                if n_number(u, v) != n_number_bruteforce(u, v):
                    return f"N[{u},{v}]: {n_number(u, v)} vs {n_number_bruteforce(u, v)}"
    return None


@check("fibokostka", 12)
def zero_pairs_fibonacci(n: int) -> Result:
    for k in range(2, n + 1):
        if zero_pair_count(k) != len(shapes_of_size(k - 2)):
            return f"n={k}: {zero_pair_count(k)} zeros, expected {len(shapes_of_size(k - 2))}"
    return None


@check("fibokostka", 6)
def okada_two_methods(n: int) -> Result:
    for k in range(1, n + 1):
        for u in shapes_of_size(k):
            for v in shapes_of_size(k):
                if okada_k(u, v) != okada_k_by_interval(u, v):
                    return f"K[{u},{v}]: {okada_k(u, v)} vs {okada_k_by_interval(u, v)}"
    return None


@check("fibokostka", 8)
def okada_standard_column(n: int) -> Result:
    for k in range(1, n + 1):
        ones = "1" * k
        for u in shapes_of_size(k):
            if not okada_k(u, ones) == hook_count(u) == chain_count(u):
                return f"K[{u},{ones}] = {okada_k(u, ones)}, hook {hook_count(u)}"
    return None


# ---------------------------------------------------------------- youngside


@check("youngside", 6)
def rsk_counts(n: int) -> Result:
    for k in range(1, n + 1):
        shapes = {}
        for s in _perms(k):
            lam = rsk_p(s).shape
            shapes[lam] = shapes.get(lam, 0) + 1
        for lam in partitions(k):
            f = len(standard_young_tableaux(lam))
            if shapes.get(lam, 0) != f * f:
                return f"shape {lam}: {shapes.get(lam, 0)} permutations, f = {f}"
    return None


@check("youngside", 6)
def rectification_oracle(n: int) -> Result:
    for k in range(1, n + 1):
        for t in syt(k):
            for i in range(1, k + 1):
                for j in range(i, k + 1):
                    if restricted_shape(t, i, j) != restricted_shape_by_rsk(t, i, j):
                        return f"{t} on [{i},{j}]"
    return None


@check("youngside", 5)
def kostka_methods(n: int) -> Result:
    for k in range(1, n + 1):
        for lam in partitions(k):
            for mu in partitions(k):
                vals = {
                    kostka(lam, mu),
                    kostka_bruteforce(lam, mu),
                    kostka_by_interval(lam, mu, "chain"),
                    kostka_by_interval(lam, mu, "weak"),
                }
                if len(vals) != 1:
                    return f"K[{lam},{mu}]: {sorted(vals)}"
    return None


@check("youngside", 5)
def chain_equals_weak(n: int) -> Result:
    for k in range(1, n + 1):
        elems = syt(k)
        for a in elems:
            if not chain_leq(a, a):
                return f"{a} not reflexive"
        # FinitePoset construction already rejects cycles
        c = chain_order_syt(k)
        if c.relation() != weak_order_syt(k).relation():
            return f"n={k}: chain and weak orders differ"
        closed = {(a, b) for a in elems for b in elems if chain_leq(a, b)}
        if closed != c.relation() | {(a, a) for a in elems}:
            return f"n={k}: chain_leq is not transitive"
    return None


# ------------------------------------------------------------------- driver


SUITES = sorted({c.suite for c in CHECKS})


def run_suite(suite: str, n: int, on_result: Callable[[Outcome], None] | None = None) -> list[Outcome]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    out = []
    for c in CHECKS:
        if suite not in ("all", c.suite):
            continue
        k = min(n, c.limit)
        start = time.perf_counter()
        failure = c.run(k)
        o = Outcome(c, k, failure, time.perf_counter() - start)
        out.append(o)
        if on_result:
            on_result(o)
    return out

