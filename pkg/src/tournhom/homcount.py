"""Exact homomorphism counting and enumeration between digraphs.

Counting walks a static search plan: pattern vertices are placed one at a
time, each candidate image drawn from the intersection of neighborhoods of
the images of already-placed pattern neighbors (big-int masks).  When the
unplaced part of the pattern splits into weakly connected components, the
counts of the components multiply, so disjoint unions never blow up the
search.  Counts are exact Python integers; densities exact Fractions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .digraphs import Digraph, QuantumDigraph, RootedDigraph
from .errors import BudgetExceededError, EnumerationCapError

__all__ = [
    "count_hom",
    "count_hom_bruteforce",
    "count_hom_rooted",
    "count_hom_rooted_bruteforce",
    "density",
    "conditional_density",
    "eval_quantum",
    "iter_homs",
    "rooted_count_matrix",
    "is_hom",
]

BRUTE_FORCE_BUDGET = 10**8


# -- search plans ------------------------------------------------------------

_PLACE, _SPLIT = 0, 1


def _weak_components(F: Digraph, vertices: frozenset[int]) -> list[frozenset[int]]:
    left = set(vertices)
    comps = []
    while left:
        seed = min(left)
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            m = (F.out_mask(v) | F.in_mask(v))
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if u in left and u not in comp:
                    comp.add(u)
                    frontier.append(u)
        comps.append(frozenset(comp))
        left -= comp
    comps.sort(key=min)
    return comps


def _find_triangle(F: Digraph, comp: frozenset[int]) -> tuple[int, int, int] | None:
    """Smallest directed 3-cycle inside comp, or None."""
    comp_mask = 0
    for v in comp:
        comp_mask |= 1 << v
    for u in sorted(comp):
        m = F.out_mask(u) & comp_mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            back = F.out_mask(v) & F.in_mask(u) & comp_mask
            if back:
                w = (back & -back).bit_length() - 1
                return (u, v, w)
    return None


def _adjacency_count(F: Digraph, v: int, placed_mask: int) -> int:
    return ((F.out_mask(v) | F.in_mask(v)) & placed_mask).bit_count()


def _greedy_pick(F: Digraph, comp: frozenset[int], placed_mask: int) -> int:
    # vertices constrained in both directions stay inside one strong component
    # of the host, so prefer them; one-way-dominated vertices roam widely
    def key(v: int):
        into = (F.in_mask(v) & placed_mask).bit_count()
        out = (F.out_mask(v) & placed_mask).bit_count()
        return (min(into, out), into + out, F.degree(v), -v)

    return max(comp, key=key)


def _constraints(F: Digraph, v: int, placed: Sequence[int]) -> tuple[tuple[int, bool], ...]:
    """(u, True) demands image(v) in out-neighbors of image(u); False: in-neighbors."""
    cons = []
    for u in placed:
        if F.has_arc(u, v):
            cons.append((u, True))
        if F.has_arc(v, u):
            cons.append((u, False))
    return tuple(cons)


def _build_plan(F: Digraph, pinned: tuple[int, ...]):
    """Search plan: nested (_PLACE, v, constraints, child) / (_SPLIT, children)."""

    def make(remaining: frozenset[int], placed: tuple[int, ...], pending: tuple[int, ...]):
        if not remaining:
            return None
        comps = _weak_components(F, remaining)
        if len(comps) > 1:
            children = []
            for comp in comps:
                sub_pending = tuple(p for p in pending if p in comp)
                children.append(make(comp, placed, sub_pending))
            return (_SPLIT, tuple(children))
        comp = comps[0]
        pending = tuple(p for p in pending if p in remaining)
        placed_mask = 0
        for u in placed:
            placed_mask |= 1 << u
        if pending:
            v = pending[0]
            rest = pending[1:]
        elif placed and any(_adjacency_count(F, v, placed_mask) for v in comp):
            v = _greedy_pick(F, comp, placed_mask)
            rest = ()
        else:
            tri = _find_triangle(F, comp)
            if tri is not None:
                v, *r = tri
                rest = tuple(r)
            else:
                v = _greedy_pick(F, comp, placed_mask)
                rest = ()
        child = make(remaining - {v}, placed + (v,), rest)
        return (_PLACE, v, _constraints(F, v, placed), child)

    free = frozenset(range(F.n)) - set(pinned)
    return make(free, tuple(pinned), ())


@lru_cache(maxsize=512)
def _plan_for(F: Digraph, pinned: tuple[int, ...]):
    return _build_plan(F, pinned)


def _linear_order(F: Digraph, pinned: tuple[int, ...]) -> list[int]:
    """Flat placement order for enumeration (no component splitting)."""
    order = list(pinned)
    remaining = set(range(F.n)) - set(pinned)
    pending: list[int] = []
    while remaining:
        placed_mask = 0
        for u in order:
            placed_mask |= 1 << u
        pending = [p for p in pending if p in remaining]
        if pending:
            v = pending.pop(0)
        else:
            comps = _weak_components(F, frozenset(remaining))
            comp = comps[0]
            if order and any(_adjacency_count(F, v, placed_mask) for v in comp):
                v = _greedy_pick(F, comp, placed_mask)
            else:
                tri = _find_triangle(F, comp)
                if tri is not None:
                    v = tri[0]
                    pending = list(tri[1:])
                else:
                    v = _greedy_pick(F, comp, placed_mask)
        order.append(v)
        remaining.remove(v)
    return order


# -- counting ----------------------------------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, max_nodes: int | None):
        self.left = max_nodes

    def spend(self, k: int = 1) -> None:
        if self.left is not None:
            self.left -= k
            if self.left < 0:
                raise BudgetExceededError("homomorphism search budget exceeded")


def _count_plan(plan, images: list[int], host: Digraph, full: int, budget: _Budget) -> int:
    if plan is None:
        return 1
    if plan[0] == _SPLIT:
        total = 1
        for child in plan[1]:
            c = _count_plan(child, images, host, full, budget)
            if c == 0:
                return 0
            total *= c
        return total
    _, v, cons, child = plan
    mask = full
    out = host.out_mask
    inn = host.in_mask
    for u, fwd in cons:
        mask &= out(images[u]) if fwd else inn(images[u])
        if not mask:
            return 0
    budget.spend()
    if child is None:
        return mask.bit_count()
    total = 0
    while mask:
        b = mask & -mask
        mask ^= b
        images[v] = b.bit_length() - 1
        total += _count_plan(child, images, host, full, budget)
    return total


def _check_pinned_arcs(F: Digraph, host: Digraph, pins: dict[int, int]) -> bool:
    for u, gu in pins.items():
        for v, gv in pins.items():
            if u != v and F.has_arc(u, v) and not host.has_arc(gu, gv):
                return False
    return True


def count_hom(F: Digraph, T: Digraph, max_nodes: int | None = None) -> int:
    """Exact number of arc-preserving maps V(F) -> V(T)."""
    if F.n == 0:
        return 1
    if T.n == 0:
        return 0
    images = [-1] * F.n
    plan = _plan_for(F, ())
    return _count_plan(plan, images, T, (1 << T.n) - 1, _Budget(max_nodes))


def count_hom_rooted(
    F: RootedDigraph, T: Digraph, x: int, y: int, max_nodes: int | None = None
) -> int:
    """Homomorphisms with the roots (z, w) sent to (x, y); x = y is allowed."""
    if not (0 <= x < T.n and 0 <= y < T.n):
        raise ValueError("root images out of range")
    z, w = F.roots
    if x == y and (F.graph.has_arc(z, w) or F.graph.has_arc(w, z)):
        return 0
    pins = {z: x, w: y}
    if not _check_pinned_arcs(F.graph, T, pins):
        return 0
    images = [-1] * F.graph.n
    images[z] = x
    images[w] = y
    plan = _plan_for(F.graph, (z, w))
    return _count_plan(plan, images, T, (1 << T.n) - 1, _Budget(max_nodes))


def count_hom_bruteforce(F: Digraph, T: Digraph, budget: int = BRUTE_FORCE_BUDGET) -> int:
    """Oracle: enumerate all |V(T)|^|V(F)| maps."""
    if F.n == 0:
        return 1
    if T.n == 0:
        return 0
    if T.n**F.n > budget:
        raise BudgetExceededError(f"{T.n}^{F.n} maps exceed budget {budget}")
    arcs = list(F.arcs)
    total = 0
    for images in itertools.product(range(T.n), repeat=F.n):
        if all(T.has_arc(images[u], images[v]) for u, v in arcs):
            total += 1
    return total


def count_hom_rooted_bruteforce(
    F: RootedDigraph, T: Digraph, x: int, y: int, budget: int = BRUTE_FORCE_BUDGET
) -> int:
    z, w = F.roots
    free = [v for v in range(F.graph.n) if v not in (z, w)]
    if T.n == 0:
        return 0
    if T.n ** len(free) > budget:
        raise BudgetExceededError(f"{T.n}^{len(free)} maps exceed budget {budget}")
    arcs = list(F.graph.arcs)
    total = 0
    images = [-1] * F.graph.n
    images[z] = x
    images[w] = y
    for assignment in itertools.product(range(T.n), repeat=len(free)):
        for v, g in zip(free, assignment):
            images[v] = g
        if all(T.has_arc(images[u], images[v]) for u, v in arcs):
            total += 1
    return total


def is_hom(F: Digraph, T: Digraph, images: Sequence[int]) -> bool:
    return all(T.has_arc(images[u], images[v]) for u, v in F.arcs)


# -- densities ----------------------------------------------------------------


def density(F: Digraph, T: Digraph, max_nodes: int | None = None) -> Fraction:
    """hom(F, T) / |V(T)|^|V(F)| as an exact rational."""
    if T.n == 0:
        raise ValueError("empty host")
    return Fraction(count_hom(F, T, max_nodes), T.n**F.n)


def conditional_density(
    F: RootedDigraph, T: Digraph, x: int, y: int, max_nodes: int | None = None
) -> Fraction:
    """hom_{x,y}(F, T) / |V(T)|^(|V(F)|-2)."""
    if T.n == 0:
        raise ValueError("empty host")
    return Fraction(count_hom_rooted(F, T, x, y, max_nodes), T.n ** (F.graph.n - 2))


def eval_quantum(g: QuantumDigraph, T: Digraph, max_nodes: int | None = None) -> Fraction:
    """Sum of coef * density(term) over the merged terms, exact."""
    total = Fraction(0)
    for coef, term in g.normalized().terms:
        total += coef * density(term, T, max_nodes)
    return total


def disjoint_union_density_check(F1: Digraph, F2: Digraph, T: Digraph) -> bool:
    """Exact multiplicativity of densities under disjoint union."""
    from .digraphs import disjoint_union

    return density(disjoint_union(F1, F2), T) == density(F1, T) * density(F2, T)


# -- enumeration ---------------------------------------------------------------


def iter_homs(
    F: Digraph,
    T: Digraph,
    root_images: dict[int, int] | None = None,
    cap: int | None = None,
    max_nodes: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every homomorphism as an image tuple, in a deterministic order.

    Raises EnumerationCapError after `cap` maps have been produced.
    """
    pins = dict(root_images or {})
    if T.n == 0 and F.n > 0:
        return
    if not _check_pinned_arcs(F, T, pins):
        return
    order = _linear_order(F, tuple(pins))
    cons = []
    for i, v in enumerate(order):
        cons.append(_constraints(F, v, order[:i]))
    images = [-1] * F.n
    for v, g in pins.items():
        if not (0 <= g < T.n):
            raise ValueError("pinned image out of range")
        images[v] = g
    full = (1 << T.n) - 1
    budget = _Budget(max_nodes)
    produced = 0
    start = len(pins)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal produced
        if i == len(order):
            produced += 1
            if cap is not None and produced > cap:
                raise EnumerationCapError(f"more than {cap} homomorphisms")
            yield tuple(images)
            return
        v = order[i]
        mask = full
        for u, fwd in cons[i]:
            mask &= T.out_mask(images[u]) if fwd else T.in_mask(images[u])
            if not mask:
                return
        budget.spend()
        while mask:
            b = mask & -mask
            mask ^= b
            images[v] = b.bit_length() - 1
            yield from rec(i + 1)
        images[v] = -1

    if F.n == 0:
        yield ()
        return
    yield from rec(start)


# -- all-root-pairs sweep -------------------------------------------------------


def rooted_count_matrix(
    F: RootedDigraph, T: Digraph, max_nodes: int | None = None
) -> list[list[int]]:
    """Matrix S with S[x][y] = hom_{x,y}(F, T), computed in one global sweep.

    Requires non-adjacent roots: root candidate masks are then independent,
    so every full placement of the non-root part contributes an outer
    product of the two masks.  Independent components of the non-root part
    contribute elementwise-multiplied matrices.
    """
    if not F.roots_nonadjacent():
        raise ValueError("sweep requires non-adjacent roots")
    n = T.n
    z, w = F.roots
    G = F.graph
    free = frozenset(range(G.n)) - {z, w}
    total: list[list[int]] | None = None
    budget = _Budget(max_nodes)
    full = (1 << n) - 1
    for comp in _weak_components(G, free):
        S = [[0] * n for _ in range(n)]
        order = _sweep_order(G, comp)
        cons = [_constraints(G, v, order[:i]) for i, v in enumerate(order)]
        zdir = [_root_dir(G, z, v) for v in order]
        wdir = [_root_dir(G, w, v) for v in order]
        images = [-1] * G.n
        _sweep(T, order, cons, zdir, wdir, images, S, 0, full, full, full, budget)
        if total is None:
            total = S
        else:
            for x in range(n):
                tx, sx = total[x], S[x]
                for y in range(n):
                    tx[y] *= sx[y]
    if total is None:
        total = [[1] * n for _ in range(n)]
    return total


def _root_dir(G: Digraph, root: int, v: int) -> tuple[bool, bool]:
    """(root->v, v->root) arc flags; digons carry both constraints."""
    return (G.has_arc(root, v), G.has_arc(v, root))


def _sweep_order(G: Digraph, comp: frozenset[int]) -> list[int]:
    order: list[int] = []
    remaining = set(comp)
    pending: list[int] = []
    while remaining:
        placed_mask = 0
        for u in order:
            placed_mask |= 1 << u
        pending = [p for p in pending if p in remaining]
        if pending:
            v = pending.pop(0)
        elif order and any(
            _adjacency_count(G, v, placed_mask) for v in remaining
        ):
            v = _greedy_pick(G, frozenset(remaining), placed_mask)
        else:
            tri = _find_triangle(G, frozenset(remaining))
            if tri is not None:
                v = tri[0]
                pending = list(tri[1:])
            else:
                v = _greedy_pick(G, frozenset(remaining), placed_mask)
        order.append(v)
        remaining.remove(v)
    return order


def _sweep(T, order, cons, zdir, wdir, images, S, i, zmask, wmask, full, budget):
    if i == len(order):
        zm = zmask
        while zm:
            zb = zm & -zm
            zm ^= zb
            row = S[zb.bit_length() - 1]
            wm = wmask
            while wm:
                wb = wm & -wm
                wm ^= wb
                row[wb.bit_length() - 1] += 1
        return
    v = order[i]
    mask = full
    for u, fwd in cons[i]:
        mask &= T.out_mask(images[u]) if fwd else T.in_mask(images[u])
        if not mask:
            return
    budget.spend()
    (z_fwd, z_bwd), (w_fwd, w_bwd) = zdir[i], wdir[i]
    while mask:
        b = mask & -mask
        mask ^= b
        g = b.bit_length() - 1
        zm = zmask
        if z_fwd:
            zm &= T.in_mask(g)
        if z_bwd:
            zm &= T.out_mask(g)
        if not zm:
            continue
        wm = wmask
        if w_fwd:
            wm &= T.in_mask(g)
        if w_bwd:
            wm &= T.out_mask(g)
        if not wm:
            continue
        images[v] = g
        _sweep(T, order, cons, zdir, wdir, images, S, i + 1, zm, wm, full, budget)
    images[v] = -1
