"""Exhaustive enumeration of surface-kernel generating vectors.

Coordinates are restricted to elements of the right order, and the last one is
forced to be the inverse of the prefix product, so the traversal visits
``prod_{i < r-1} #{x : ord(x) = m_i}`` prefixes. Surjectivity is tested last.
Work is split over the first coordinate; partial results are merged in
canonical order, so counts and samples do not depend on the worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from gonalkit.action import GeneratingVector
from gonalkit.errors import BudgetExceeded, InvalidParameterError, NonHyperbolicError, UnsupportedCaseError
from gonalkit.group_engine import FiniteGroup, GroupElement, build_dihedral_product
from gonalkit.signature_rh import Signature, reduced_area

DEFAULT_MAX_SPACE = 10**8
_CLOCK_STRIDE = 4096


@dataclass(frozen=True)
class SearchBudget:
    max_space: int = DEFAULT_MAX_SPACE
    time_limit: Optional[float] = None  # seconds


@dataclass(frozen=True)
class EnumerationResult:
    total_count: int
    search_space_size: int
    elapsed: float
    sample: tuple[GeneratingVector, ...] = ()
    classes_up_to_conjugation: Optional[int] = None
    solutions: Optional[tuple[GeneratingVector, ...]] = None

    def to_dict(self) -> dict:
        # elapsed is left out so the JSON stays byte-stable
        return {
            "total_count": self.total_count,
            "search_space_size": self.search_space_size,
            "classes_up_to_conjugation": self.classes_up_to_conjugation,
            "sample": [gv.words() for gv in self.sample],
        }


@dataclass(frozen=True)
class VectorClass:
    representative: GeneratingVector
    members: tuple[tuple[GeneratingVector, GroupElement], ...]  # (v, g) with g rep g^-1 = v


def search_space_size(G: FiniteGroup, sig: Signature) -> int:
    counts = _order_classes(G)
    return math.prod(len(counts.get(m, ())) for m in sig.periods[:-1])


def _order_classes(G: FiniteGroup) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for i, k in enumerate(G.order_table):
        classes.setdefault(k, []).append(i)
    return classes


def _generates(table: list[list[int]], gens: Sequence[int], order: int) -> bool:
    gens = sorted(set(gens) - {0})
    seen = bytearray(order)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        row = table[stack.pop()]
        for g in gens:
            y = row[g]
            if not seen[y]:
                seen[y] = 1
                reached += 1
                if reached == order:
                    return True
                stack.append(y)
    return reached == order


def _search_branch(p, periods, firsts, sample_limit, collect, deadline):
    """Count solutions whose first coordinate lies in ``firsts``."""
    G = build_dihedral_product(p)
    table, inv, orders = G.table, G.inverse_table, G.order_table
    classes = _order_classes(G)
    cands = [classes.get(m, []) for m in periods[:-1]]
    last_period = periods[-1]
    r = len(periods)
    count = 0
    samples: list[tuple[int, ...]] = []
    found: list[tuple[int, ...]] = []
    steps = 0
    prefix = [0] * r

    def walk(depth, acc):
        nonlocal count, steps
        if depth == r - 1:
            steps += 1
            if deadline is not None and steps % _CLOCK_STRIDE == 0 and time.time() > deadline:
                raise TimeoutError
            last = inv[acc]
            if orders[last] != last_period:
                return
            prefix[depth] = last
            if not _generates(table, prefix, G.order):
                return
            count += 1
            if len(samples) < sample_limit:
                samples.append(tuple(prefix))
            if collect:
                found.append(tuple(prefix))
            return
        row = table[acc]
        for x in cands[depth]:
            prefix[depth] = x
            walk(depth + 1, row[x])

    for x in firsts:
        prefix[0] = x
        walk(1, x)
    return count, samples, found


def enumerate_generating_vectors(
    G: FiniteGroup,
    sig: Signature,
    budget: SearchBudget = SearchBudget(),
    *,
    sample: int = 0,
    workers: int = 1,
    collect: bool = False,
) -> EnumerationResult:
    """Count every generating vector of ``G`` for ``sig``.

    With ``collect=True`` all solutions are returned and classified up to
    simultaneous conjugation.
    """
    if sig.h != 0:
        raise UnsupportedCaseError("enumeration handles orbit genus 0 only")
    if reduced_area(sig) <= 0:
        raise NonHyperbolicError(f"signature {sig} is not hyperbolic")
    space = search_space_size(G, sig)
    if space > budget.max_space:
        raise BudgetExceeded(
            f"search space {space} exceeds budget {budget.max_space}", space, budget.max_space
        )
    start = time.time()
    deadline = start + budget.time_limit if budget.time_limit is not None else None
    firsts = _order_classes(G).get(sig.periods[0], [])
    try:
        if workers > 1 and len(firsts) > 1:
            chunks = [[x] for x in firsts]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_search_branch, G.p, sig.periods, chunk, sample, collect, deadline)
                    for chunk in chunks
                ]
                parts = [f.result() for f in futures]
        else:
            parts = [_search_branch(G.p, sig.periods, firsts, sample, collect, deadline)]
    except TimeoutError:
        raise BudgetExceeded(
            f"wall-clock limit of {budget.time_limit}s reached (search space {space})",
            space,
            budget.max_space,
        ) from None
    elapsed = time.time() - start

    count = sum(part[0] for part in parts)
    elements = G.elements

    def to_vector(t):
        return GeneratingVector(G, sig, tuple(elements[i] for i in t))

    samples = [t for part in parts for t in part[1]][:sample]
    solutions = None
    n_classes = None
    if collect:
        solutions = tuple(to_vector(t) for part in parts for t in part[2])
        n_classes = len(classify_up_to_conjugation(list(solutions))) if solutions else 0
    return EnumerationResult(
        total_count=count,
        search_space_size=space,
        elapsed=elapsed,
        sample=tuple(to_vector(t) for t in samples),
        classes_up_to_conjugation=n_classes,
        solutions=solutions,
    )


def _conjugation_rows(G: FiniteGroup) -> list[list[int]]:
    """``rows[g][x]`` is the index of ``g x g^-1``."""
    t, inv = G.table, G.inverse_table
    return [[t[t[g][x]][inv[g]] for x in range(G.order)] for g in range(G.order)]


def classify_up_to_conjugation(vectors: Sequence[GeneratingVector]) -> list[VectorClass]:
    """Orbits under simultaneous conjugation, each led by its minimal tuple."""
    if not vectors:
        return []
    G, sig = vectors[0].group, vectors[0].sig
    if any(v.group != G or v.sig != sig for v in vectors):
        raise InvalidParameterError("vectors must share one group and one signature")
    rows = _conjugation_rows(G)
    inv = G.inverse_table
    elements = G.elements
    grouped: dict[tuple, list] = {}
    for v in vectors:
        idx = [G.index(x) for x in v.images]
        # canonical indices sort exactly like the (a, b, c, e) keys
        best, best_h = min((tuple(row[i] for i in idx), h) for h, row in enumerate(rows))
        # h v h^-1 = rep, so v = h^-1 rep h
        grouped.setdefault(best, []).append((v, elements[inv[best_h]]))
    return [
        VectorClass(GeneratingVector(G, sig, tuple(elements[i] for i in key)), tuple(grouped[key]))
        for key in sorted(grouped)
    ]
