"""Weighted marked graphs indexing boundary strata.

Two species appear.  ``DistinguishedTree`` is a tree whose vertex 0 is
distinguished (it is fixed by every symmetry considered here) and whose
vertices carry non-negative integer weights.  ``CircuitGraph`` is a
connected multigraph with first Betti number exactly 1 and no self-loops,
so it contains a unique circuit, possibly of length 2 (a double edge).

Markings attach to vertices either as labelled legs or, in collapsed form,
as per-vertex leg counts.  Both species serialize to a canonical string:
trees use the classic sorted-subtree encoding rooted at the distinguished
vertex, and circuit graphs serialize the cycle of hanging rooted trees in
its lexicographically minimal rotation or reflection.  Equal canonical
strings mean isomorphic objects (isomorphisms fix vertex 0 for trees), so
deduplication is a set membership test.

Grammar of the canonical strings (stable; also used by the CLI):

    tree    := term                      rooted at the distinguished vertex
    term    := "(" weight ";" legs ";" "[" children "]" ")"
    children:= "" | term ("," term)*     child terms sorted as strings
    legs    := count | "{" label ("," label)* "}"   labels ascending
    circuit := "C[" term ("|" term)* "]" one term per circuit vertex, in the
                                         minimal rotation/reflection; each
                                         term's children are its hanging trees
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

__all__ = ["DistinguishedTree", "CircuitGraph"]


def _normalized_edges(edges) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in edges))


def _adjacency(n: int, edges) -> list[list[int]]:
    """Neighbour lists, repeating a neighbour once per parallel edge."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _is_connected(n: int, edges) -> bool:
    adj = _adjacency(n, edges)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def _validate_common(weights, edges, leg_counts, leg_labels) -> None:
    n = len(weights)
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    if any(w < 0 for w in weights):
        raise ValueError(f"negative vertex weight in {weights}")
    for a, b in edges:
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a},{b}) out of range for {n} vertices")
    if len(leg_counts) != n:
        raise ValueError("leg_counts length must match vertex count")
    if any(c < 0 for c in leg_counts):
        raise ValueError(f"negative leg count in {leg_counts}")
    if leg_labels is not None:
        if len(leg_labels) != n:
            raise ValueError("leg_labels length must match vertex count")
        seen: set[int] = set()
        for v, labels in enumerate(leg_labels):
            if len(labels) != leg_counts[v]:
                raise ValueError(f"vertex {v}: {len(labels)} labels vs count {leg_counts[v]}")
            for lab in labels:
                if lab in seen:
                    raise ValueError(f"leg label {lab} used twice")
                seen.add(lab)


def _apply_perm(perm, weights, edges, leg_counts, leg_labels):
    n = len(weights)
    w = [0] * n
    c = [0] * n
    labs = [None] * n if leg_labels is not None else None
    for i in range(n):
        w[perm[i]] = weights[i]
        c[perm[i]] = leg_counts[i]
        if labs is not None:
            labs[perm[i]] = leg_labels[i]
    e = tuple((perm[a], perm[b]) for a, b in edges)
    return tuple(w), e, tuple(c), tuple(labs) if labs is not None else None


@dataclass(frozen=True)
class DistinguishedTree:
    """Weighted tree with distinguished vertex 0 and marking legs.

    ``weights[0]`` is the distinguished vertex's weight (called e in the
    dimension formulas); the other vertices are the k "extra" vertices.
    ``leg_labels`` is optional: when absent the object only records how
    many legs sit on each vertex.
    """

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    leg_counts: tuple[int, ...]
    leg_labels: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "edges", _normalized_edges(self.edges))
        object.__setattr__(self, "leg_counts", tuple(self.leg_counts))
        if self.leg_labels is not None:
            object.__setattr__(
                self, "leg_labels", tuple(tuple(sorted(l)) for l in self.leg_labels)
            )
        _validate_common(self.weights, self.edges, self.leg_counts, self.leg_labels)
        n = self.n_vertices
        if len(self.edges) != n - 1 or not _is_connected(n, self.edges):
            raise ValueError("edge set is not a tree on the given vertices")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("parallel edges are not allowed in a tree")

    @property
    def n_vertices(self) -> int:
        return len(self.weights)

    @property
    def k(self) -> int:
        """Number of non-distinguished vertices."""
        return len(self.weights) - 1

    @property
    def distinguished_weight(self) -> int:
        return self.weights[0]

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def marking_count(self) -> int:
        return sum(self.leg_counts)

    def valence(self, v: int) -> int:
        """Incident edges plus legs at v."""
        deg = sum(1 for a, b in self.edges if v in (a, b))
        return deg + self.leg_counts[v]

    def _leg_token(self, v: int) -> str:
        if self.leg_labels is None:
            return str(self.leg_counts[v])
        return "{" + ",".join(str(x) for x in self.leg_labels[v]) + "}"

    def _term(self, v: int, parent: int, adj) -> str:
        kids = sorted(self._term(u, v, adj) for u in adj[v] if u != parent)
        return f"({self.weights[v]};{self._leg_token(v)};[{','.join(kids)}])"

    @cached_property
    def canonical_key(self) -> str:
        """Root-fixed canonical serialization; equal keys mean isomorphic."""
        return self._term(0, -1, _adjacency(self.n_vertices, self.edges))

    def skeleton_automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All vertex permutations fixing 0 that preserve weights and edges.

        Legs are ignored: these are the symmetries acting on leg-count
        profiles.  Brute force is fine at the supported sizes (at most 5
        vertices).
        """
        n = self.n_vertices
        edge_set = set(self.edges)
        found = []
        for tail in itertools.permutations(range(1, n)):
            perm = (0,) + tail
            if any(self.weights[perm[i]] != self.weights[i] for i in range(n)):
                continue
            mapped = {(min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in self.edges}
            if mapped == edge_set:
                found.append(perm)
        return tuple(found)

    def relabeled(self, perm) -> "DistinguishedTree":
        """The same tree with vertex i renamed perm[i]; perm must fix 0."""
        if perm[0] != 0:
            raise ValueError("relabelings of a distinguished tree must fix vertex 0")
        w, e, c, labs = _apply_perm(perm, self.weights, self.edges, self.leg_counts, self.leg_labels)
        return DistinguishedTree(w, e, c, labs)


@dataclass(frozen=True)
class CircuitGraph:
    """Connected weighted multigraph with exactly one independent cycle.

    Edges form a multiset (a pair listed twice is a double edge, the
    length-2 circuit); self-loops are rejected.  Connectedness plus
    edge count == vertex count pins the first Betti number to 1.
    """

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    leg_counts: tuple[int, ...]
    leg_labels: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "edges", _normalized_edges(self.edges))
        object.__setattr__(self, "leg_counts", tuple(self.leg_counts))
        if self.leg_labels is not None:
            object.__setattr__(
                self, "leg_labels", tuple(tuple(sorted(l)) for l in self.leg_labels)
            )
        _validate_common(self.weights, self.edges, self.leg_counts, self.leg_labels)
        n = self.n_vertices
        if n < 2:
            raise ValueError("a circuit needs at least 2 vertices")
        if len(self.edges) != n:
            raise ValueError(
                f"{len(self.edges)} edges on {n} vertices: first Betti number is not 1"
            )
        if not _is_connected(n, self.edges):
            raise ValueError("graph is not connected")

    @property
    def n_vertices(self) -> int:
        return len(self.weights)

    @property
    def k(self) -> int:
        """Vertex count minus one, mirroring the tree convention."""
        return len(self.weights) - 1

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def marking_count(self) -> int:
        return sum(self.leg_counts)

    def valence(self, v: int) -> int:
        deg = sum((a == v) + (b == v) for a, b in self.edges)
        return deg + self.leg_counts[v]

    @cached_property
    def circuit(self) -> tuple[int, ...]:
        """The unique cycle's vertices, in traversal order.

        Found by stripping valence-1 vertices (edge valence, with
        multiplicity) until only the 2-core remains, then walking it.
        """
        n = self.n_vertices
        inc: list[list[int]] = [[] for _ in range(n)]
        for idx, (a, b) in enumerate(self.edges):
            inc[a].append(idx)
            inc[b].append(idx)
        alive_e = [True] * len(self.edges)
        alive_v = [True] * n
        stripped = True
        while stripped:
            stripped = False
            for v in range(n):
                if not alive_v[v]:
                    continue
                live = [i for i in inc[v] if alive_e[i]]
                if len(live) == 1:
                    alive_e[live[0]] = False
                    alive_v[v] = False
                    stripped = True
        members = [v for v in range(n) if alive_v[v]]
        start = min(members)
        order = [start]
        cur, prev_edge = start, -1
        while True:
            nxt_edge = min(
                i for i in inc[cur] if alive_e[i] and i != prev_edge
            )
            a, b = self.edges[nxt_edge]
            nxt = b if a == cur else a
            if nxt == start:
                break
            order.append(nxt)
            cur, prev_edge = nxt, nxt_edge
        return tuple(order)

    @property
    def circuit_weight(self) -> int:
        """Sum of the weights on the circuit (e in the dimension formulas)."""
        return sum(self.weights[v] for v in self.circuit)

    def _leg_token(self, v: int) -> str:
        if self.leg_labels is None:
            return str(self.leg_counts[v])
        return "{" + ",".join(str(x) for x in self.leg_labels[v]) + "}"

    def _hang_term(self, v: int, parent: int, adj) -> str:
        kids = sorted(self._hang_term(u, v, adj) for u in adj[v] if u != parent)
        return f"({self.weights[v]};{self._leg_token(v)};[{','.join(kids)}])"

    @cached_property
    def canonical_key(self) -> str:
        """Minimal rotation/reflection of the cycle of hanging-tree terms."""
        cyc = self.circuit
        on_circuit = set(cyc)
        hang_edges = [
            (a, b) for a, b in self.edges if not (a in on_circuit and b in on_circuit)
        ]
        adj = _adjacency(self.n_vertices, hang_edges)
        terms = [self._hang_term(v, -1, adj) for v in cyc]
        m = len(terms)
        best = None
        for seq in (terms, terms[::-1]):
            for r in range(m):
                cand = tuple(seq[r:] + seq[:r])
                if best is None or cand < best:
                    best = cand
        return "C[" + "|".join(best) + "]"

    def skeleton_automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All weight- and edge-multiset-preserving vertex permutations."""
        n = self.n_vertices
        target = self.edges
        found = []
        for perm in itertools.permutations(range(n)):
            if any(self.weights[perm[i]] != self.weights[i] for i in range(n)):
                continue
            mapped = _normalized_edges((perm[a], perm[b]) for a, b in self.edges)
            if mapped == target:
                found.append(perm)
        return tuple(found)

    def relabeled(self, perm) -> "CircuitGraph":
        w, e, c, labs = _apply_perm(perm, self.weights, self.edges, self.leg_counts, self.leg_labels)
        return CircuitGraph(w, e, c, labs)
