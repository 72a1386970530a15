"""Small simple graphs and induced-embedding search.

An embedding of g1 into g2 is an injection on vertices such that images
are adjacent exactly when the sources are (checked across all pairs, also
between different components).  The search is plain backtracking with
degree pruning; every graph here has at most a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Graph:
    n: int
    edges: list
    component_of: list = None
    adj: list = field(init=False)

    def __post_init__(self):
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            if a == b:
                raise ValueError("loops not allowed")
            adj[a].add(b)
            adj[b].add(a)
        self.adj = adj
        if self.component_of is None:
            self.component_of = self._components()

    def _components(self):
        comp = [-1] * self.n
        c = 0
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            stack = [s]
            comp[s] = c
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if comp[w] < 0:
                        comp[w] = c
                        stack.append(w)
            c += 1
        return comp

    def degree(self, v):
        return len(self.adj[v])


def _search_order(g: Graph):
    """Vertices grouped by component (largest first); inside a component a
    DFS order, so every vertex after the first has an already-placed
    neighbor."""
    by_comp = {}
    for v in range(g.n):
        by_comp.setdefault(g.component_of[v], []).append(v)
    comps = sorted(by_comp.values(), key=len, reverse=True)
    order = []
    for verts in comps:
        start = max(verts, key=g.degree)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(g.adj[v], key=g.degree, reverse=True):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return order


def find_embedding(sub: Graph, big: Graph, allowed=None, forbidden=None,
                   on_place=None, on_unplace=None, accept=None):
    """First induced embedding of `sub` into `big`, as a dict, or None.

    allowed: optional set of usable big vertices.
    forbidden: optional dict big vertex -> set of big vertices; a pair
        (x, y) with y in forbidden[x] may not both be in the image.
    on_place/on_unplace: hooks (sub_v, big_v); on_place returning False
        rejects the placement.
    accept: predicate on the completed mapping; search continues through
        further embeddings until it returns True.
    """
    if sub.n > big.n:
        return None
    order = _search_order(sub)
    allowed = set(range(big.n)) if allowed is None else set(allowed)
    mapping = {}
    used = set()

    def candidates(v):
        placed_nb = [mapping[u] for u in sub.adj[v] if u in mapping]
        if placed_nb:
            cand = set(big.adj[placed_nb[0]])
            for img in placed_nb[1:]:
                cand &= big.adj[img]
            cand &= allowed
        else:
            cand = allowed - used
        return cand

    def ok(v, w):
        if w in used or big.degree(w) < sub.degree(v):
            return False
        for u, img in mapping.items():
            if (img in big.adj[w]) != (u in sub.adj[v]):
                return False
            if forbidden and img in forbidden.get(w, ()):
                return False
        return True

    def rec(k):
        if k == len(order):
            return accept is None or accept(mapping)
        v = order[k]
        for w in sorted(candidates(v)):
            if not ok(v, w):
                continue
            mapping[v] = w
            used.add(w)
            # an on_place hook always applies its state change (even when
            # rejecting); the matching on_unplace undoes it
            viable = on_place is None or on_place(v, w)
            if viable and rec(k + 1):
                return True
            if on_unplace is not None:
                on_unplace(v, w)
            del mapping[v]
            used.discard(w)
        return False

    if rec(0):
        return dict(mapping)
    return None
