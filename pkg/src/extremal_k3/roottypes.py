"""Formal ADE sums: closed formulas, Gram matrices, Dynkin graphs and the
rank-18 enumerations used by the classification and the embedding checks.

String grammar for a root type: terms joined by '+', each term an optional
multiplicity followed by family letter and index, e.g. "6A3", "2A1+4A4",
"D10+E8".  Multiplicity 1 is omitted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .exact import IntegralLattice
from .graphs import Graph, find_embedding


class RootTypeParseError(ValueError):
    def __init__(self, text, pos, msg):
        super().__init__(f"cannot parse root type {text!r} at position {pos}: {msg}")
        self.pos = pos


_FAMILY_ORDER = {"A": 0, "D": 1, "E": 2}


def _check_component(family, n):
    if family == "A" and n >= 1:
        return
    if family == "D" and n >= 4:
        return
    if family == "E" and n in (6, 7, 8):
        return
    raise ValueError(f"invalid ADE component {family}{n}")


@dataclass(frozen=True)
class RootType:
    """Multiset of ADE components, canonically sorted."""

    components: tuple  # tuple of (family, n), one entry per copy

    def __post_init__(self):
        comps = tuple(sorted(((f, int(n)) for f, n in self.components),
                             key=lambda c: (_FAMILY_ORDER[c[0]], c[1])))
        for f, n in comps:
            _check_component(f, n)
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, text):
        comps = []
        pos = 0
        for term in text.split("+"):
            m = re.fullmatch(r"(\d*)([ADE])(\d+)", term.strip())
            if not m:
                raise RootTypeParseError(text, pos, f"bad term {term!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            if mult < 1:
                raise RootTypeParseError(text, pos, "multiplicity must be >= 1")
            comps.extend([(m.group(2), int(m.group(3)))] * mult)
            pos += len(term) + 1
        if not comps:
            raise RootTypeParseError(text, 0, "empty root type")
        return cls(tuple(comps))

    def __str__(self):
        parts = []
        i = 0
        comps = self.components
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            mult = j - i
            f, n = comps[i]
            parts.append(f"{mult if mult > 1 else ''}{f}{n}")
            i = j
        return "+".join(parts)

    def __add__(self, other):
        return RootType(self.components + other.components)


EMPTY = RootType.__new__(RootType)
object.__setattr__(EMPTY, "components", ())


def rank_of(s: RootType) -> int:
    return sum(n for _, n in s.components)


def root_count_formula(s: RootType) -> int:
    total = 0
    for f, n in s.components:
        if f == "A":
            total += n * n + n
        elif f == "D":
            total += 2 * n * n - 2 * n
        else:
            total += {6: 72, 7: 126, 8: 240}[n]
    return total


def eu_of(s: RootType) -> int:
    return sum(n + (1 if f == "A" else 2) for f, n in s.components)


def component_edges(family, n):
    """Edges of the finite Dynkin diagram on vertices 0..n-1."""
    if family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        # path 0..n-2 with vertex n-1 forked off n-3
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: path 0..n-2 with vertex n-1 attached to vertex 2
    return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]


def component_gram(family, n):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for a, b in component_edges(family, n):
        g[a][b] = g[b][a] = 1
    return g


def gram_of(s: RootType) -> IntegralLattice:
    """Block diagonal negated Cartan matrix in canonical component order."""
    r = rank_of(s)
    g = [[0] * r for _ in range(r)]
    off = 0
    for f, n in s.components:
        block = component_gram(f, n)
        for i in range(n):
            for j in range(n):
                g[off + i][off + j] = block[i][j]
        off += n
    return IntegralLattice(tuple(tuple(row) for row in g))


def dynkin_graph(s: RootType) -> Graph:
    edges = []
    off = 0
    comp_of = []
    for ci, (f, n) in enumerate(s.components):
        edges.extend((off + a, off + b) for a, b in component_edges(f, n))
        comp_of.extend([ci] * n)
        off += n
    return Graph(n=off, edges=edges, component_of=comp_of)


# ---------------------------------------------------------------------------
# discriminant group structure from the component list (no SNF needed)


def cyclic_orders_of(s: RootType):
    """Orders of the obvious cyclic generators of the discriminant group."""
    orders = []
    for f, n in s.components:
        if f == "A":
            if n + 1 > 1:
                orders.append(n + 1)
        elif f == "D":
            orders.extend([2, 2] if n % 2 == 0 else [4])
        elif n == 6:
            orders.append(3)
        elif n == 7:
            orders.append(2)
    return orders


def discriminant_length(s: RootType) -> int:
    orders = cyclic_orders_of(s)
    primes = set()
    for o in orders:
        p = 2
        x = o
        while x > 1:
            if x % p == 0:
                primes.add(p)
                while x % p == 0:
                    x //= p
            p += 1
    return max((sum(1 for o in orders if o % p == 0) for p in primes), default=0)


def check_N2(s: RootType) -> bool:
    """length(D) <= 20 - rank, the unique-primitive-embedding condition."""
    return discriminant_length(s) <= 20 - rank_of(s)


# ---------------------------------------------------------------------------
# enumerations


_ALL_COMPONENTS = (
    [("E", n) for n in (8, 7, 6)]
    + [("D", m) for m in range(18, 3, -1)]
    + [("A", l) for l in range(18, 0, -1)]
)


def _euler(comp):
    f, n = comp
    return n + (1 if f == "A" else 2)


def enumerate_root_types(target_rank, eu_max=None, exact_rank=True,
                         prune=None):
    """All root types with rank == target_rank (or <= if exact_rank is
    False), optionally bounded by eu; prune(partial RootType) -> False cuts
    the subtree (only monotone predicates are sound here)."""
    out = []
    comps = []

    def rec(idx, rank_left, eu_left):
        for i in range(idx, len(_ALL_COMPONENTS)):
            f, n = _ALL_COMPONENTS[i]
            if n > rank_left:
                continue
            e = _euler((f, n))
            if eu_left is not None and e > eu_left:
                continue
            comps.append((f, n))
            if prune is None or prune(comps):
                if not exact_rank or rank_left == n:
                    out.append(RootType(tuple(comps)))
                rec(i, rank_left - n, None if eu_left is None else eu_left - e)
            comps.pop()

    rec(0, target_rank, eu_max)
    return sorted(out, key=str)


def enumerate_list_L():
    """All root types with rank 18 and eu <= 24 (the classification input)."""
    return enumerate_root_types(18, eu_max=24, exact_rank=True)


def enumerate_N_lists():
    """(rank-18 types satisfying N2, all rank <= 18 types satisfying N2)."""
    def n2_prune(comps):
        # N2 violation is monotone under adding components
        s = RootType(tuple(comps))
        return check_N2(s)

    all_n1_n2 = [s for s in enumerate_root_types(18, exact_rank=False,
                                                 prune=n2_prune)
                 if check_N2(s)]
    rank18 = [s for s in all_n1_n2 if rank_of(s) == 18]
    return rank18, all_n1_n2


# ---------------------------------------------------------------------------
# embeddings


def graph_embeds(g1: Graph, g2: Graph):
    """An induced embedding of g1 into g2, or None."""
    return find_embedding(g1, g2)


@lru_cache(maxsize=None)
def _embeds_cached(s1_str, s2_str):
    g1 = dynkin_graph(RootType.parse(s1_str))
    g2 = dynkin_graph(RootType.parse(s2_str))
    return graph_embeds(g1, g2) is not None


def verify_extension_lemma(progress=None):
    """Check every rank<=18 type satisfying (N2) embeds into some rank-18
    (N2) type.  Returns (failures, witness map)."""
    rank18, all_types = enumerate_N_lists()
    rank18_set = {str(s) for s in rank18}
    witnesses = {}
    failures = []
    for s in all_types:
        name = str(s)
        if name in rank18_set:
            witnesses[name] = name
            continue
        target = _find_extension_target(s, rank18, rank18_set)
        if target is None:
            failures.append(name)
        else:
            witnesses[name] = target
        if progress:
            progress(name, witnesses.get(name))
    return failures, witnesses


def _find_extension_target(s, rank18, rank18_set):
    # cheap route: complete with extra disjoint components; the identity
    # inclusion is then an embedding
    deficit = 18 - rank_of(s)
    if deficit > 0:
        for extra in enumerate_root_types(deficit, exact_rank=True):
            cand = s + extra
            if str(cand) in rank18_set:
                return str(cand)
    # fall back to a genuine graph search over the 297 candidates
    for t in rank18:
        if _embeds_cached(str(s), str(t)):
            return str(t)
    return None
