"""Exact computation of signed and k-tuple total domination parameters.

Two branch-and-bound engines live here.  ``optimize_signed`` searches the
2^n labellings f: V -> {-1,+1} under a per-vertex open-neighbourhood
constraint f(N(v)) <= b or >= b; ``ktuple_total_domination`` searches vertex
subsets D under |N(v) & D| >= k.  Both are exact, deterministic, and sized
for desk-scale graphs (caps overridable through SIGDOM_NODE_CAP).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from collections.abc import Sequence

from .graphs import Graph, max_degree, min_degree

SIGNED_SIZE_CAP = 30
ENUMERATION_SIZE_CAP = 24
SUBSET_SIZE_CAP = 30

_ENV_CAP = "SIGDOM_NODE_CAP"


def _size_cap(default: int) -> int:
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_CAP} must be an integer, got {raw!r}") from exc


def _require_positive_min_degree(g: Graph) -> None:
    if g.n == 0 or min_degree(g) == 0:
        raise ValueError("isolated vertex: solvers need minimum degree >= 1")


def _require_size(g: Graph, default_cap: int, what: str) -> None:
    cap = _size_cap(default_cap)
    if g.n > cap:
        raise ValueError(
            f"{what} capped at n <= {cap} (set {_ENV_CAP} to override)"
        )


@dataclass(frozen=True)
class SignedProblem:
    """One of the three +-1 labelling problems.

    direction:  'max' or 'min' on the total weight f(V).
    sense/bound: the per-vertex constraint, f(N(v)) <= bound or >= bound.
    Only the three studied instantiations are constructible.
    """

    direction: str
    sense: str
    bound: int

    _ALLOWED = {("max", "le", 0), ("min", "ge", 1), ("max", "le", 1)}

    def __post_init__(self) -> None:
        if (self.direction, self.sense, self.bound) not in self._ALLOWED:
            raise ValueError(
                "supported problems: (max, le, 0), (min, ge, 1), (max, le, 1)"
            )

    @property
    def maximize(self) -> bool:
        return self.direction == "max"


#: maximise f(V) subject to f(N(v)) <= 0 everywhere (ISTDF / istdn).
INVERSE_SIGNED_TOTAL = SignedProblem("max", "le", 0)
#: minimise f(V) subject to f(N(v)) >= 1 everywhere (STDF / stdn).
SIGNED_TOTAL = SignedProblem("min", "ge", 1)
#: maximise f(V) subject to f(N(v)) <= 1 everywhere (negative decision / st2in).
NEGATIVE_DECISION = SignedProblem("max", "le", 1)


@dataclass(frozen=True)
class SignedFunction:
    """A total labelling V -> {-1,+1} with its weight and neighbourhood sums."""

    values: tuple[int, ...]
    weight: int
    nbr_sums: tuple[int, ...]

    @classmethod
    def from_values(cls, g: Graph, values: Sequence[int]) -> "SignedFunction":
        vals = tuple(values)
        if len(vals) != g.n:
            raise ValueError(f"labelling has {len(vals)} entries for n={g.n}")
        if any(v not in (-1, 1) for v in vals):
            raise ValueError("labels must be -1 or +1")
        plus = 0
        for v, s in enumerate(vals):
            if s == 1:
                plus |= 1 << v
        sums = tuple(
            2 * (g.adj[v] & plus).bit_count() - g.degree(v) for v in range(g.n)
        )
        return cls(vals, sum(vals), sums)

    def minus_vertices(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.values) if s == -1)

    def plus_vertices(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.values) if s == 1)


@dataclass(frozen=True)
class ParameterResult:
    """Exact optimum with an achieving witness and search-size diagnostics."""

    value: int
    witness: "SignedFunction | frozenset[int]"
    nodes_explored: int


def is_feasible(g: Graph, f: SignedFunction, problem: SignedProblem) -> bool:
    """True iff every vertex meets the problem's neighbourhood constraint."""
    if len(f.values) != g.n:
        raise ValueError(f"labelling has {len(f.values)} entries for n={g.n}")
    if problem.sense == "le":
        return all(s <= problem.bound for s in f.nbr_sums)
    return all(s >= problem.bound for s in f.nbr_sums)


def _branch_order(g: Graph) -> list[int]:
    # Descending degree, ties by index: high-degree vertices constrain the
    # most neighbourhoods early, and the total order makes runs reproducible.
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def optimize_signed(g: Graph, problem: SignedProblem) -> ParameterResult:
    """Exact optimum of a SignedProblem by depth-first branch and bound.

    Pruning: (i)+(ii) a neighbourhood that cannot be repaired even if all of
    its unlabelled vertices take the favourable sign kills the branch;
    (iii) an optimistic completion (remaining vertices all take the
    objective-favourable sign, feasibility ignored) that cannot strictly
    beat the incumbent kills the branch.  The incumbent starts from the
    always-feasible uniform labelling, so the search is never unseeded.
    """
    _require_positive_min_degree(g)
    _require_size(g, SIGNED_SIZE_CAP, "signed solver")
    n = g.n
    order = _branch_order(g)
    le = problem.sense == "le"
    bound = problem.bound
    maximize = problem.maximize

    seed = -1 if le else 1
    best_vals = [seed] * n
    best = seed * n

    vals = [0] * n
    labeled = [0] * n          # sum of labelled neighbours
    slack = list(g.degrees())  # number of unlabelled neighbours
    nodes = 0
    first = 1 if maximize else -1
    neighbor_lists = [list(g.neighbors(v)) for v in range(n)]

    def violated(v: int) -> bool:
        if le:
            return labeled[v] - slack[v] > bound
        return labeled[v] + slack[v] < bound

    def dfs(i: int, weight: int) -> None:
        nonlocal best, best_vals, nodes
        if i == n:
            if (maximize and weight > best) or (not maximize and weight < best):
                best = weight
                best_vals = vals.copy()
            return
        u = order[i]
        rest = n - i - 1
        for s in (first, -first):
            w2 = weight + s
            optimistic = w2 + rest if maximize else w2 - rest
            if maximize and optimistic <= best:
                continue
            if not maximize and optimistic >= best:
                continue
            nodes += 1
            vals[u] = s
            ok = True
            for v in neighbor_lists[u]:
                labeled[v] += s
                slack[v] -= 1
                if ok and violated(v):
                    ok = False
            if ok:
                dfs(i + 1, w2)
            for v in neighbor_lists[u]:
                labeled[v] -= s
                slack[v] += 1
            vals[u] = 0

    dfs(0, 0)
    witness = SignedFunction.from_values(g, best_vals)
    return ParameterResult(best, witness, nodes)


def istdn(g: Graph) -> ParameterResult:
    """Maximum weight over labellings with f(N(v)) <= 0 everywhere."""
    return optimize_signed(g, INVERSE_SIGNED_TOTAL)


def stdn(g: Graph) -> ParameterResult:
    """Minimum weight over labellings with f(N(v)) >= 1 everywhere."""
    return optimize_signed(g, SIGNED_TOTAL)


def st2in(g: Graph) -> ParameterResult:
    """Maximum weight over labellings with f(N(v)) <= 1 everywhere."""
    return optimize_signed(g, NEGATIVE_DECISION)


def enumerate_maximum_istdfs(g: Graph) -> list[SignedFunction]:
    """All labellings achieving istdn(g), sorted by value vector.

    Same search as optimize_signed but with the optimum pinned first, so the
    bound keeps ties instead of discarding them.
    """
    _require_positive_min_degree(g)
    _require_size(g, ENUMERATION_SIZE_CAP, "optimum enumeration")
    target = istdn(g).value
    n = g.n
    order = _branch_order(g)
    vals = [0] * n
    labeled = [0] * n
    slack = list(g.degrees())
    neighbor_lists = [list(g.neighbors(v)) for v in range(n)]
    found: list[tuple[int, ...]] = []

    def dfs(i: int, weight: int) -> None:
        if i == n:
            if weight == target:
                found.append(tuple(vals))
            return
        u = order[i]
        rest = n - i - 1
        for s in (1, -1):
            w2 = weight + s
            if w2 + rest < target:
                continue
            vals[u] = s
            ok = True
            for v in neighbor_lists[u]:
                labeled[v] += s
                slack[v] -= 1
                if ok and labeled[v] - slack[v] > 0:
                    ok = False
            if ok:
                dfs(i + 1, w2)
            for v in neighbor_lists[u]:
                labeled[v] -= s
                slack[v] += 1
            vals[u] = 0

    dfs(0, 0)
    found.sort()
    return [SignedFunction.from_values(g, vals) for vals in found]


# ---------------------------------------------------------------------------
# k-tuple total domination
# ---------------------------------------------------------------------------


def _greedy_cover(g: Graph, k: int) -> set[int]:
    """Feasible k-tuple total dominating set by max-coverage greedy."""
    n = g.n
    need = [k] * n
    chosen: set[int] = set()
    outstanding = k * n
    while outstanding > 0:
        best_v = -1
        best_gain = 0
        for v in range(n):
            if v in chosen:
                continue
            gain = sum(1 for u in g.neighbors(v) if need[u] > 0)
            if gain > best_gain:
                best_gain = gain
                best_v = v
        # gain is always positive while demands remain (k <= delta)
        chosen.add(best_v)
        for u in g.neighbors(best_v):
            if need[u] > 0:
                need[u] -= 1
                outstanding -= 1
    return chosen


def _solve_ktuple(g: Graph, k: int, lower: int) -> ParameterResult:
    n = g.n
    big_delta = max_degree(g)
    order = _branch_order(g)
    neighbor_lists = [list(g.neighbors(v)) for v in range(n)]

    seed = _greedy_cover(g, k)
    best = len(seed)
    best_set = frozenset(seed)
    nodes = 0
    if best == lower:
        return ParameterResult(best, best_set, nodes)

    need = [k] * n          # remaining demand of each vertex
    avail = list(g.degrees())  # undecided neighbours that could still serve
    chosen: list[int] = []
    outstanding = k * n

    def dfs(i: int) -> None:
        nonlocal best, best_set, nodes, outstanding
        if best == lower:
            return
        if outstanding == 0:
            if len(chosen) < best:
                best = len(chosen)
                best_set = frozenset(chosen)
            return
        if i == n:
            return
        # each future pick settles at most big_delta units of demand
        if len(chosen) + (outstanding + big_delta - 1) // big_delta >= best:
            return
        u = order[i]
        for take in (True, False):
            nodes += 1
            delta_out = 0
            ok = True
            for v in neighbor_lists[u]:
                if take:
                    if need[v] > 0:
                        delta_out += 1
                    need[v] -= 1
                avail[v] -= 1
                if need[v] > avail[v]:
                    ok = False
            if take:
                outstanding -= delta_out
                chosen.append(u)
            if ok:
                dfs(i + 1)
            if take:
                chosen.pop()
                outstanding += delta_out
            for v in neighbor_lists[u]:
                if take:
                    need[v] += 1
                avail[v] += 1

    dfs(0)
    return ParameterResult(best, best_set, nodes)


def ktuple_chain(g: Graph, k: int) -> list[ParameterResult]:
    """Exact minima for every tuple level 1..k.

    Solved in ascending order so each optimum seeds the next level's lower
    bound (removing one vertex from a level-j set leaves a level-(j-1) set,
    hence the minima ascend by at least one per level).
    """
    _require_positive_min_degree(g)
    _require_size(g, SUBSET_SIZE_CAP, "subset solver")
    delta = min_degree(g)
    if not 1 <= k <= delta:
        raise ValueError(f"k must satisfy 1 <= k <= {delta}, got {k}")
    big_delta = max_degree(g)
    results: list[ParameterResult] = []
    prev = None
    for level in range(1, k + 1):
        lower = max(level + 1, -(-level * g.n // big_delta))
        if prev is not None:
            lower = max(lower, prev + 1)
        res = _solve_ktuple(g, level, lower)
        results.append(res)
        prev = res.value
    return results


def ktuple_total_domination(g: Graph, k: int) -> ParameterResult:
    """Minimum size of a set D with |N(v) & D| >= k for every vertex v."""
    return ktuple_chain(g, k)[-1]


def total_domination(g: Graph) -> ParameterResult:
    """Minimum size of a set D meeting every open neighbourhood (k = 1)."""
    return ktuple_total_domination(g, 1)
