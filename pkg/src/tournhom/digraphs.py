"""Core digraph, tournament and quantum-digraph types.

Vertices are dense integers 0..n-1.  Adjacency is stored as big-int bit
masks (bit u of out_mask(v) is set iff the arc (v, u) is present), which
makes neighborhood intersection the cheap primitive the homomorphism
search needs.  All types are immutable after construction.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

__all__ = [
    "Digraph",
    "Tournament",
    "RootedDigraph",
    "QuantumDigraph",
    "make_tournament",
    "transitive_tournament",
    "random_tournament",
    "disjoint_union",
    "induced_subdigraph",
    "is_acyclic",
    "are_isomorphic",
    "parse_digraph",
    "format_digraph",
    "load_digraph",
    "save_digraph",
    "load_tournament",
    "load_rooted",
    "load_quantum",
    "save_quantum",
]


class Digraph:
    """A loopless digraph with at most one arc per ordered pair."""

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        out = [0] * n
        inn = [0] * n
        for u, v in arc_set:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.arcs = arc_set
        self._out = tuple(out)
        self._in = tuple(inn)

    # -- adjacency access -------------------------------------------------

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def out_neighbors(self, v: int) -> set[int]:
        return _bits_to_set(self._out[v])

    def in_neighbors(self, v: int) -> set[int]:
        return _bits_to_set(self._in[v])

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    def max_out_degree(self) -> int:
        return max((m.bit_count() for m in self._out), default=0)

    def max_in_degree(self) -> int:
        return max((m.bit_count() for m in self._in), default=0)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        """Arcs in ascending (u, v) order; the canonical iteration order."""
        return sorted(self.arcs)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        # label-sensitive equality
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, arcs={len(self.arcs)})"


class Tournament(Digraph):
    """A complete orientation: exactly one arc per unordered vertex pair."""

    __slots__ = ()

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        super().__init__(n, arcs)
        for u in range(n):
            for v in range(u + 1, n):
                fwd = self.has_arc(u, v)
                bwd = self.has_arc(v, u)
                if fwd and bwd:
                    raise ValueError(f"double orientation on pair ({u}, {v})")
                if not fwd and not bwd:
                    raise ValueError(f"missing arc on pair ({u}, {v})")


@dataclass(frozen=True)
class RootedDigraph:
    """A digraph with an ordered pair of distinguished root vertices."""

    graph: Digraph
    roots: tuple[int, int]

    def __post_init__(self):
        z, w = self.roots
        if not (0 <= z < self.graph.n and 0 <= w < self.graph.n):
            raise ValueError(f"roots {self.roots} out of range")
        if z == w:
            raise ValueError("roots must be distinct")

    @property
    def z(self) -> int:
        return self.roots[0]

    @property
    def w(self) -> int:
        return self.roots[1]

    def roots_nonadjacent(self) -> bool:
        z, w = self.roots
        return not (self.graph.has_arc(z, w) or self.graph.has_arc(w, z))


@dataclass(frozen=True)
class QuantumDigraph:
    """A finite formal rational combination of digraphs."""

    terms: tuple[tuple[Fraction, Digraph], ...]

    @staticmethod
    def of(terms: Iterable[tuple[Fraction | int, Digraph]]) -> "QuantumDigraph":
        return QuantumDigraph(tuple((Fraction(c), g) for c, g in terms))

    def normalized(self) -> "QuantumDigraph":
        """Merge isomorphic duplicate terms and drop zero coefficients."""
        groups: list[tuple[Digraph, Fraction]] = []
        for coef, g in self.terms:
            for idx, (rep, acc) in enumerate(groups):
                if rep == g or are_isomorphic(rep, g):
                    groups[idx] = (rep, acc + coef)
                    break
            else:
                groups.append((g, coef))
        return QuantumDigraph(tuple((c, g) for g, c in groups if c != 0))


# -- constructors ----------------------------------------------------------


def make_tournament(arcs: Iterable[tuple[int, int]], n: int) -> Tournament:
    """Validate an arc set as a tournament on 0..n-1."""
    return Tournament(n, arcs)


def transitive_tournament(n: int) -> Tournament:
    """The tournament with arc (i, j) iff i < j."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Tournament(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def random_tournament(n: int, seed: int) -> Tournament:
    """Orient each pair independently with probability 1/2; pure in (n, seed)."""
    return _draw_tournament(random.Random(seed), n)


def _draw_tournament(rng: random.Random, n: int) -> Tournament:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return Tournament(n, arcs)


def disjoint_union(a: Digraph, b: Digraph) -> Digraph:
    """Concatenate vertex sets, shifting b's labels by a.n."""
    shifted = ((u + a.n, v + a.n) for u, v in b.arcs)
    return Digraph(a.n + b.n, list(a.arcs) + list(shifted))


def induced_subdigraph(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Restrict to a vertex subset, relabeled 0..k-1 in ascending order."""
    sub = sorted(set(vertices))
    for v in sub:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(sub)}
    arcs = [(index[u], index[v]) for u, v in g.arcs if u in index and v in index]
    return Digraph(len(sub), arcs)


def is_acyclic(g: Digraph) -> bool:
    """True iff g has a topological order (Kahn's algorithm)."""
    indeg = [g.in_degree(v) for v in range(g.n)]
    stack = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        m = g.out_mask(v)
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            indeg[u] -= 1
            if indeg[u] == 0:
                stack.append(u)
    return seen == g.n


# -- isomorphism (for quantum-term merging; terms stay small) --------------


def _degree_profile(g: Digraph) -> list[tuple[int, int]]:
    return sorted((g.out_degree(v), g.in_degree(v)) for v in range(g.n))


def are_isomorphic(a: Digraph, b: Digraph, max_nodes: int = 10**6) -> bool:
    """Exhaustive isomorphism test with degree pruning."""
    if a.n != b.n or len(a.arcs) != len(b.arcs):
        return False
    if _degree_profile(a) != _degree_profile(b):
        return False
    if a.arcs == b.arcs:
        return True
    n = a.n
    # order a's vertices by connectivity to already-ordered ones
    order: list[int] = []
    left = set(range(n))
    while left:
        best = max(
            left,
            key=lambda v: (
                sum(1 for u in order if a.has_arc(u, v) or a.has_arc(v, u)),
                a.degree(v),
                -v,
            ),
        )
        order.append(best)
        left.remove(best)
    images = [-1] * n
    used = 0
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal used, nodes
        if i == n:
            return True
        v = order[i]
        dv = (a.out_degree(v), a.in_degree(v))
        for cand in range(n):
            if used >> cand & 1:
                continue
            if (b.out_degree(cand), b.in_degree(cand)) != dv:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if a.has_arc(u, v) != b.has_arc(images[u], cand):
                    ok = False
                    break
                if a.has_arc(v, u) != b.has_arc(cand, images[u]):
                    ok = False
                    break
            if not ok:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise RuntimeError("isomorphism search budget exceeded")
            images[v] = cand
            used |= 1 << cand
            if extend(i + 1):
                return True
            used ^= 1 << cand
            images[v] = -1
        return False

    return extend(0)


# -- text format -----------------------------------------------------------
#
# line 1: "digraph <n>"; optional "roots <z> <w>"; then one arc "u v" per line.


def format_digraph(g: Digraph, roots: tuple[int, int] | None = None) -> str:
    lines = [f"digraph {g.n}"]
    if roots is not None:
        lines.append(f"roots {roots[0]} {roots[1]}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> tuple[Digraph, tuple[int, int] | None]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("digraph"):
        raise ValueError("expected 'digraph <n>' header")
    n = int(lines[0].split()[1])
    roots = None
    body = lines[1:]
    if body and body[0].startswith("roots"):
        parts = body[0].split()
        roots = (int(parts[1]), int(parts[2]))
        body = body[1:]
    arcs = []
    for ln in body:
        u, v = ln.split()
        arcs.append((int(u), int(v)))
    return Digraph(n, arcs), roots


def load_digraph(path: str | Path) -> Digraph:
    g, _ = parse_digraph(Path(path).read_text())
    return g


def save_digraph(path: str | Path, g: Digraph, roots: tuple[int, int] | None = None) -> None:
    Path(path).write_text(format_digraph(g, roots))


def load_tournament(path: str | Path) -> Tournament:
    g = load_digraph(path)
    return Tournament(g.n, g.arcs)


def load_rooted(path: str | Path) -> RootedDigraph:
    g, roots = parse_digraph(Path(path).read_text())
    if roots is None:
        raise ValueError(f"{path}: no roots line")
    return RootedDigraph(g, roots)


# -- quantum digraph JSON ----------------------------------------------------
#
# {"terms": [{"coef": "<num>/<den>", "graph": "<path-or-inline>"}], ...}
# A graph string starting with "digraph" is inline; anything else is a path
# resolved relative to the JSON file.  An optional "meta" block may carry
# evaluator hints; it is ignored by the loader here.


def _coef_to_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _coef_from_str(s: str) -> Fraction:
    return Fraction(s)


def save_quantum(path: str | Path, q: QuantumDigraph, meta: dict | None = None) -> None:
    doc: dict = {
        "terms": [
            {"coef": _coef_to_str(c), "graph": format_digraph(g)} for c, g in q.terms
        ]
    }
    if meta is not None:
        doc["meta"] = meta
    Path(path).write_text(json.dumps(doc, indent=1))


def load_quantum(path: str | Path) -> QuantumDigraph:
    q, _ = load_quantum_with_meta(path)
    return q


def load_quantum_with_meta(path: str | Path) -> tuple[QuantumDigraph, dict | None]:
    path = Path(path)
    doc = json.loads(path.read_text())
    terms = []
    for t in doc["terms"]:
        spec = t["graph"]
        if spec.lstrip().startswith("digraph"):
            g, _ = parse_digraph(spec)
        else:
            g = load_digraph(path.parent / spec)
        terms.append((_coef_from_str(t["coef"]), g))
    return QuantumDigraph(tuple(terms)), doc.get("meta")


def _bits_to_set(mask: int) -> set[int]:
    out = set()
    while mask:
        b = mask & -mask
        out.add(b.bit_length() - 1)
        mask ^= b
    return out
