#!/usr/bin/env python3
"""Regenerate the bundled graph6 corpora under data/.

Produces, deduplicated up to isomorphism and census-checked:

  connected_upto8.g6   every connected graph on 2..8 vertices
  cubic_upto10.g6      every connected 3-regular graph on 4..10 vertices
  quartic_5to9.g6      every connected 4-regular graph on 5..9 vertices

Isomorph rejection uses the lexicographically least adjacency encoding,
found by a pruned depth-first search over vertex orderings.  All counts are
asserted against the published censuses before anything is written, so a
bug here cannot silently ship a wrong corpus.  Runtime is a few minutes.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations, permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sigdom.graphs import Graph, is_connected, parse_graph6, write_graph6

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

ALL_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
CUBIC_CONNECTED_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}
QUARTIC_CONNECTED_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def canonical_graph6(g: Graph) -> str:
    """graph6 of the relabelling that minimises the adjacency bit string.

    Positions are filled depth-first; a partial ordering is cut as soon as
    its next adjacency column exceeds the incumbent's, and candidates are
    tried in ascending column order so the first leaf is already greedy-min.
    Candidate columns are maintained incrementally (shift in one bit per
    newly placed vertex).
    """
    n = g.n
    if n <= 1:
        return write_graph6(g)
    adj = g.adj
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    cur_cols: list[int] = []
    placed: list[int] = []
    version = 0

    def dfs(i: int, eq: bool, cols: dict[int, int]) -> None:
        nonlocal best_cols, best_perm, version
        if i == n:
            # arriving non-eq means strictly smaller than the incumbent
            if best_cols is None or not eq:
                best_cols = cur_cols.copy()
                best_perm = placed.copy()
                version += 1
            return
        cands = sorted((col, v) for v, col in cols.items())
        my_eq = eq
        my_version = version
        for col, v in cands:
            if best_cols is not None and my_eq:
                bound = best_cols[i]
                if col > bound:
                    break
                child_eq = col == bound
            else:
                child_eq = False
            placed.append(v)
            cur_cols.append(col)
            child_cols = {
                w: c << 1 | (adj[w] >> v & 1) for w, c in cols.items() if w != v
            }
            dfs(i + 1, child_eq, child_cols)
            cur_cols.pop()
            placed.pop()
            if version != my_version:
                # the incumbent now extends our own prefix
                my_version = version
                my_eq = True

    dfs(0, False, {v: 0 for v in range(n)})
    assert best_perm is not None
    pos = [0] * n
    for p, v in enumerate(best_perm):
        pos[v] = p
    return write_graph6(Graph(n, [(pos[u], pos[v]) for u, v in g.edges()]))


def _brute_canonical_graph6(g: Graph) -> str:
    best = None
    for perm in permutations(range(n := g.n)):
        relabelled = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        s = write_graph6(relabelled)
        if best is None or s < best:
            best = s
    return best


def self_test(trials: int = 120) -> None:
    rng = random.Random(20240311)
    for _ in range(trials):
        n = rng.randint(1, 6)
        edges = [e for e in combinations(range(n), 2) if rng.random() < rng.random()]
        g = Graph(n, edges)
        fast = canonical_graph6(g)
        slow = _brute_canonical_graph6(g)
        assert fast == slow, f"canonical mismatch on {write_graph6(g)}: {fast} != {slow}"
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_graph6(h) == fast, "canonical form not relabelling-invariant"


# ---------------------------------------------------------------------------
# All connected graphs on <= 8 vertices, by vertex augmentation
# ---------------------------------------------------------------------------


def _components(g: Graph) -> list[int]:
    masks = []
    left = g.vertex_mask()
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            reach = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                reach |= g.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        masks.append(seen)
        left &= ~seen
    return masks


def connected_corpus(n_max: int = 8) -> dict[int, list[str]]:
    """All connected graphs per order, canonical graph6, census-checked."""
    levels: dict[int, set[str]] = {1: {write_graph6(Graph(1))}}
    for k in range(1, n_max):
        final = k + 1 == n_max
        grown: set[str] = set()
        for g6 in levels[k]:
            g = parse_graph6(g6)
            comps = _components(g)
            old_edges = list(g.edges())
            for subset in range(1 << k):
                if final and any(not subset & c for c in comps):
                    continue  # new vertex cannot reconnect; child is disconnected
                edges = old_edges + [
                    (v, k) for v in range(k) if subset >> v & 1
                ]
                grown.add(canonical_graph6(Graph(k + 1, edges)))
        levels[k + 1] = grown
        if not final:
            assert len(grown) == ALL_GRAPH_COUNTS[k + 1], (
                f"graph census mismatch at n={k + 1}: {len(grown)}"
            )
    out: dict[int, list[str]] = {}
    for n in range(2, n_max + 1):
        conn = sorted(s for s in levels[n] if is_connected(parse_graph6(s)))
        assert len(conn) == CONNECTED_COUNTS[n], (
            f"connected census mismatch at n={n}: {len(conn)}"
        )
        out[n] = conn
    return out


# ---------------------------------------------------------------------------
# Connected r-regular graphs by constrained labelled search
# ---------------------------------------------------------------------------


def _cheap_invariant(g: Graph) -> tuple:
    """Fast label-invariant fingerprint: per-vertex triangle counts, BFS
    distance profiles, codegree multisets split by adjacency, and closed
    walk counts of length 4..6.

    Not guaranteed complete; the census assertions downstream turn any
    collision between distinct classes into a loud failure instead of a
    wrong corpus.
    """
    n = g.n
    tri = []
    codeg = []
    sq = [[0] * n for _ in range(n)]  # A^2 entries via popcounts
    for v in range(n):
        t = 0
        pairs = []
        row = sq[v]
        for u in range(n):
            common = (g.adj[v] & g.adj[u]).bit_count()
            row[u] = common
            if u == v:
                continue
            linked = g.adj[v] >> u & 1
            pairs.append((linked, common))
            if linked:
                t += common
        tri.append(t // 2)
        codeg.append(tuple(sorted(pairs)))
    cube = [[0] * n for _ in range(n)]  # A^3 = A^2 * A
    for i in range(n):
        bi = sq[i]
        ci = cube[i]
        for j in range(n):
            w = g.adj[j]
            total = 0
            while w:
                k = (w & -w).bit_length() - 1
                w &= w - 1
                total += bi[k]
            ci[j] = total
    walks = []
    for i in range(n):
        d4 = sum(x * x for x in sq[i])
        d5 = sum(b * c for b, c in zip(sq[i], cube[i]))
        d6 = sum(x * x for x in cube[i])
        walks.append((d4, d5, d6))
    profiles = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        layer = [s]
        hist = []
        while layer:
            hist.append(len(layer))
            nxt = []
            for u in layer:
                w = g.adj[u]
                while w:
                    v = (w & -w).bit_length() - 1
                    w &= w - 1
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            layer = nxt
        nbr_tri = tuple(sorted(tri[u] for u in range(n) if g.adj[s] >> u & 1))
        profiles.append((tri[s], walks[s], nbr_tri, tuple(hist), codeg[s]))
    return (n, g.m, tuple(sorted(profiles)))


CANON_SAMPLE_STRIDE = 25


def regular_corpus(n: int, r: int, expected: int) -> list[str]:
    """Canonical graph6 of every connected r-regular graph on n vertices.

    Labelled search with N(0) fixed to {1..r} (safe: every class has such a
    labelling), completing one vertex at a time.  Leaves are bucketed by a
    cheap invariant; the first member of each bucket plus every
    CANON_SAMPLE_STRIDE-th one is canonicalised (cheap insurance against an
    invariant collision), and the class count is checked against the
    published census ``expected``.
    """
    if n * r % 2 or r >= n:
        raise ValueError(f"no {r}-regular graphs on {n} vertices")
    deg = [0] * n
    adjrows = [0] * n
    buckets: dict[tuple, set[str]] = {}
    bucket_hits: dict[tuple, int] = {}

    deg[0] = r
    for v in range(1, r + 1):
        deg[v] = 1
        adjrows[0] |= 1 << v
        adjrows[v] |= 1

    def complete(u: int) -> None:
        if u == n:
            # every earlier vertex was completed to degree r before moving on
            edges = [
                (a, b)
                for a in range(n)
                for b in range(a + 1, n)
                if adjrows[a] >> b & 1
            ]
            h = Graph(n, edges)
            if is_connected(h):
                inv = _cheap_invariant(h)
                hits = bucket_hits.get(inv, 0) + 1
                bucket_hits[inv] = hits
                if hits == 1 or hits % CANON_SAMPLE_STRIDE == 0:
                    buckets.setdefault(inv, set()).add(canonical_graph6(h))
            return
        need = r - deg[u]
        if need == 0:
            complete(u + 1)
            return
        cands = [w for w in range(u + 1, n) if deg[w] < r]
        if len(cands) < need:
            return
        for chosen in combinations(cands, need):
            deg[u] = r
            for w in chosen:
                deg[w] += 1
                adjrows[u] |= 1 << w
                adjrows[w] |= 1 << u
            complete(u + 1)
            deg[u] = r - need
            for w in chosen:
                deg[w] -= 1
                adjrows[u] &= ~(1 << w)
                adjrows[w] &= ~(1 << u)

    complete(1)
    classes = sorted(set().union(*buckets.values()))
    assert len(classes) == expected, (
        f"{r}-regular census mismatch at n={n}: found {len(classes)} classes "
        f"in {len(buckets)} buckets, expected {expected}"
    )
    return classes


def main() -> int:
    t0 = time.time()
    print("self-testing canonical form ...", flush=True)
    self_test()
    DATA_DIR.mkdir(exist_ok=True)

    print("enumerating connected graphs up to n=8 ...", flush=True)
    conn = connected_corpus(8)
    lines = [g6 for n in sorted(conn) for g6 in conn[n]]
    (DATA_DIR / "connected_upto8.g6").write_text("\n".join(lines) + "\n")
    print(f"  {len(lines)} graphs  ({time.time() - t0:.0f}s)", flush=True)

    print("enumerating connected cubic graphs up to n=10 ...", flush=True)
    cubic_lines = []
    for n in (4, 6, 8, 10):
        got = regular_corpus(n, 3, CUBIC_CONNECTED_COUNTS[n])
        cubic_lines += got
        print(f"  n={n}: {len(got)}  ({time.time() - t0:.0f}s)", flush=True)
    (DATA_DIR / "cubic_upto10.g6").write_text("\n".join(cubic_lines) + "\n")

    print("enumerating connected 4-regular graphs on 5..9 vertices ...", flush=True)
    quartic_lines = []
    for n in (5, 6, 7, 8, 9):
        got = regular_corpus(n, 4, QUARTIC_CONNECTED_COUNTS[n])
        quartic_lines += got
        print(f"  n={n}: {len(got)}  ({time.time() - t0:.0f}s)", flush=True)
    (DATA_DIR / "quartic_5to9.g6").write_text("\n".join(quartic_lines) + "\n")

    print(f"done in {time.time() - t0:.0f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
