"""Gadget digraph constructions and their base-tournament sampler.

The base tournament must avoid large one-sided bicliques and large
transitive subtournaments while keeping all degrees below 2n/3; a random
tournament has all three properties with decent probability once the two
size parameters are calibrated to n (the asymptotic values sqrt(n) and
2n/13 - sqrt(n) are meaningless at desk scale, so defaults come from a
first-moment calculation and both thresholds stay explicit inputs).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .digraphs import Digraph, RootedDigraph, Tournament, _draw_tournament, induced_subdigraph
from .errors import BudgetExceededError, SamplingError

__all__ = [
    "BaseTournament",
    "BaseReport",
    "Gadget",
    "DoubledGadget",
    "GadgetFamily",
    "check_degree_bound",
    "find_one_way_biclique",
    "largest_transitive_subtournament",
    "find_transitive_subtournament",
    "default_biclique_size",
    "default_transitive_threshold",
    "sample_base_tournament",
    "check_base_conditions",
    "make_k_sequence",
    "build_gadget",
    "symmetrize",
    "build_necklace",
    "build_family",
]


# -- condition checkers -------------------------------------------------------


def check_degree_bound(T: Tournament, bound: int) -> tuple[bool, int | None]:
    """All out- and in-degrees <= bound; witness is a violating vertex."""
    for v in range(T.n):
        if T.out_degree(v) > bound or T.in_degree(v) > bound:
            return False, v
    return True, None


def find_one_way_biclique(
    T: Digraph, a: int, max_nodes: int = 10**7
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Disjoint A1, A2 of size a with every arc A1 -> A2, or None.

    Exact branch and bound: A1 is grown in ascending vertex order while C,
    the common out-neighborhood, shrinks; A2 must fit inside C \\ A1.
    """
    if a < 1:
        raise ValueError("a must be positive")
    n = T.n
    full = (1 << n) - 1
    nodes = 0

    def rec(start: int, a1_mask: int, size: int, C: int):
        nonlocal nodes
        if size == a:
            avail = C & ~a1_mask
            if avail.bit_count() >= a:
                a2 = []
                m = avail
                while len(a2) < a:
                    b = m & -m
                    m ^= b
                    a2.append(b.bit_length() - 1)
                return tuple(_mask_to_sorted(a1_mask)), tuple(a2)
            return None
        for v in range(start, n - (a - size) + 1):
            C2 = C & T.out_mask(v)
            if (C2 & ~a1_mask & ~(1 << v)).bit_count() < a:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceededError("one-way biclique search budget exceeded")
            got = rec(v + 1, a1_mask | (1 << v), size + 1, C2)
            if got is not None:
                return got
        return None

    return rec(0, 0, 0, full)


def _mask_to_sorted(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def find_transitive_subtournament(
    T: Digraph, size: int, max_nodes: int = 10**7
) -> tuple[int, ...] | None:
    """A vertex set of the given size inducing a transitive subtournament, or None."""
    got, witness = _transitive_search(T, stop_at=size, max_nodes=max_nodes)
    return tuple(witness) if got >= size else None


def largest_transitive_subtournament(
    T: Digraph, max_nodes: int = 10**7
) -> tuple[int, tuple[int, ...]]:
    """Exact maximum transitive subtournament (size, witness)."""
    got, witness = _transitive_search(T, stop_at=None, max_nodes=max_nodes)
    return got, tuple(witness)


def _transitive_search(T: Digraph, stop_at: int | None, max_nodes: int):
    # a transitive set has a unique topological order, so growing chains by
    # successive domination visits every transitive subset exactly once
    n = T.n
    by_out_degree = sorted(range(n), key=lambda v: (-T.out_degree(v), v))
    best = 0
    best_chain: list[int] = []
    chain: list[int] = []
    nodes = 0

    def ext(C: int) -> bool:
        nonlocal best, best_chain, nodes
        if len(chain) > best:
            best = len(chain)
            best_chain = list(chain)
            if stop_at is not None and best >= stop_at:
                return True
        if len(chain) + C.bit_count() <= best:
            return False
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError("transitive subtournament search budget exceeded")
        for v in by_out_degree:
            if C >> v & 1:
                chain.append(v)
                if ext(C & T.out_mask(v)):
                    return True
                chain.pop()
        return False

    ext((1 << n) - 1)
    return best, best_chain


# -- base tournament sampling ---------------------------------------------------


@dataclass(frozen=True)
class BaseReport:
    n: int
    a: int
    t3: int
    degree_bound: int
    max_out_degree: int
    max_in_degree: int
    largest_one_way_biclique: int
    largest_transitive: int
    tries_used: int
    seed: int


@dataclass(frozen=True)
class BaseTournament:
    """A sampled base tournament together with its measured condition report."""

    tournament: Tournament
    report: BaseReport

    @property
    def n(self) -> int:
        return self.tournament.n


def default_biclique_size(n: int) -> int:
    """ceil(sqrt(n)); measured feasible at desk scale for random tournaments."""
    if n < 1:
        raise ValueError("n must be positive")
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def default_transitive_threshold(n: int) -> int:
    """Smallest t with expected transitive t-subset count <= 1/2.

    The asymptotic threshold ceil(2n/13 - sqrt(n)) is kept as a lower clamp
    once it turns positive; below that it would demand cycle-free-free sets
    of size < 3, which no tournament on 4+ vertices can satisfy.
    """
    t = 3
    while math.comb(n, t) * math.factorial(t) / 2 ** (t * (t - 1) // 2) > 0.5:
        t += 1
    asymptotic = math.ceil(2 * n / 13 - math.sqrt(n))
    return max(t, asymptotic, 3)


def check_base_conditions(
    T: Tournament, a: int, t3: int, max_nodes: int = 10**7
) -> tuple[bool, dict]:
    """Evaluate the three base conditions; details include witnesses on failure."""
    bound = (2 * T.n) // 3
    ok1, bad_vertex = check_degree_bound(T, bound)
    details: dict = {"degree_bound": bound}
    if not ok1:
        details["degree_witness"] = bad_vertex
        return False, details
    biclique = find_one_way_biclique(T, a, max_nodes)
    if biclique is not None:
        details["biclique_witness"] = biclique
        return False, details
    trans = find_transitive_subtournament(T, t3, max_nodes)
    if trans is not None:
        details["transitive_witness"] = trans
        return False, details
    return True, details


def sample_base_tournament(
    n: int,
    a: int | None = None,
    t3: int | None = None,
    seed: int = 0,
    max_tries: int = 200,
    max_nodes: int = 10**7,
) -> BaseTournament:
    """Draw random tournaments until one meets all three conditions."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if a is None:
        a = default_biclique_size(n)
    if t3 is None:
        t3 = default_transitive_threshold(n)
    if a < 1 or t3 < 3:
        raise ValueError("need a >= 1 and t3 >= 3")
    rng = random.Random(seed)
    bound = (2 * n) // 3
    failures = {"degree": 0, "biclique": 0, "transitive": 0}
    last_details: dict = {}
    for attempt in range(1, max_tries + 1):
        T = _draw_tournament(rng, n)
        ok1, witness = check_degree_bound(T, bound)
        if not ok1:
            failures["degree"] += 1
            last_details = {"degree_witness": witness}
            continue
        biclique = find_one_way_biclique(T, a, max_nodes)
        if biclique is not None:
            failures["biclique"] += 1
            last_details = {"biclique_witness": biclique}
            continue
        trans = find_transitive_subtournament(T, t3, max_nodes)
        if trans is not None:
            failures["transitive"] += 1
            last_details = {"transitive_witness": trans}
            continue
        report = BaseReport(
            n=n,
            a=a,
            t3=t3,
            degree_bound=bound,
            max_out_degree=T.max_out_degree(),
            max_in_degree=T.max_in_degree(),
            largest_one_way_biclique=_largest_biclique_size(T, a, max_nodes),
            largest_transitive=largest_transitive_subtournament(T, max_nodes)[0],
            tries_used=attempt,
            seed=seed,
        )
        return BaseTournament(T, report)
    raise SamplingError(
        f"no base tournament in {max_tries} tries "
        f"(n={n}, a={a}, t3={t3}; failures {failures}; last {last_details})"
    )


def _largest_biclique_size(T: Tournament, a: int, max_nodes: int) -> int:
    # the sampled tournament has no a x a one-way biclique; scan downward
    for size in range(a - 1, 0, -1):
        if find_one_way_biclique(T, size, max_nodes) is not None:
            return size
    return 0


# -- gadget family ---------------------------------------------------------------


def _k_interval(m: int) -> tuple[int, int]:
    """Integers strictly inside (2m/3 + 2, 5m/6) as [lo, hi]."""
    lo = (2 * m + 6) // 3 + 1
    hi = (5 * m - 1) // 6
    return lo, hi


def make_k_sequence(m: int, s: int) -> list[int]:
    """Top s integers in the admissible open interval, descending, gaps >= 2."""
    if s < 1:
        raise ValueError("s must be positive")
    lo, hi = _k_interval(m)
    capacity = 0 if hi < lo else (hi - lo) // 2 + 1
    if capacity < s:
        m_min = m + 1
        while True:
            lo2, hi2 = _k_interval(m_min)
            if hi2 >= lo2 and (hi2 - lo2) // 2 + 1 >= s:
                break
            m_min += 1
        raise ValueError(
            f"interval ({2 * m / 3 + 2:g}, {5 * m / 6:g}) holds only {capacity} "
            f"spaced values, need {s}; smallest feasible m is {m_min}"
        )
    return [hi - 2 * i for i in range(s)]


@dataclass(frozen=True)
class Gadget:
    """Base tournament plus two non-adjacent roots split by the threshold k.

    Vertices 0..m-1 copy the base; z = m points to every base vertex below k
    which points on to w = m+1, and the remaining base vertices reverse both
    arcs.  Every pair except {z, w} is adjacent.
    """

    rooted: RootedDigraph
    m: int
    k: int

    @property
    def z(self) -> int:
        return self.rooted.roots[0]

    @property
    def w(self) -> int:
        return self.rooted.roots[1]


def build_gadget(base: Tournament | BaseTournament, k: int) -> Gadget:
    f0 = base.tournament if isinstance(base, BaseTournament) else base
    m = f0.n
    if not 0 < k < m:
        raise ValueError(f"k={k} out of range (0, {m})")
    z, w = m, m + 1
    arcs = list(f0.arcs)
    for v in range(m):
        if v < k:
            arcs.append((z, v))
            arcs.append((v, w))
        else:
            arcs.append((v, z))
            arcs.append((w, v))
    return Gadget(RootedDigraph(Digraph(m + 2, arcs), (z, w)), m, k)


def degree_bound_ok(g: Gadget) -> bool:
    """max degree strictly below 5m/6 (holds when the base obeys its bound)."""
    graph = g.rooted.graph
    return 6 * max(graph.max_out_degree(), graph.max_in_degree()) < 5 * g.m


@dataclass(frozen=True)
class DoubledGadget:
    """Two mirrored copies of a gadget glued with swapped roots.

    Layout: 0..m-1 left copy, m..2m-1 right copy, z = 2m, w = 2m+1.  The
    left copy realizes the original root pattern on (z, w); the right copy
    realizes it on (w, z).  Conditional counts into any host are symmetric
    in the two roots.
    """

    rooted: RootedDigraph
    m: int
    k: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def z(self) -> int:
        return self.rooted.roots[0]

    @property
    def w(self) -> int:
        return self.rooted.roots[1]

    def left_pattern(self) -> RootedDigraph:
        """The left copy with the shared roots, as a standalone rooted pattern."""
        return _half_pattern(self, self.left)

    def right_pattern(self) -> RootedDigraph:
        return _half_pattern(self, self.right)


def _half_pattern(dg: DoubledGadget, half: tuple[int, ...]) -> RootedDigraph:
    keep = sorted(half) + [dg.z, dg.w]
    sub = induced_subdigraph(dg.rooted.graph, keep)
    m = len(half)
    return RootedDigraph(sub, (m, m + 1))


def load_doubled(path) -> DoubledGadget:
    """Read a doubled gadget saved in the standard layout (left copy first,
    right copy second, roots last); k is recovered from the z out-arcs."""
    from .digraphs import load_rooted

    rooted = load_rooted(path)
    n = rooted.graph.n
    if n % 2 != 0 or n < 4:
        raise ValueError("doubled gadget files have 2m+2 vertices")
    m = (n - 2) // 2
    if rooted.roots != (2 * m, 2 * m + 1):
        raise ValueError("doubled gadget roots must be the last two vertices")
    z = rooted.roots[0]
    k = sum(1 for v in range(m) if rooted.graph.has_arc(z, v))
    return DoubledGadget(
        rooted, m, k, tuple(range(m)), tuple(range(m, 2 * m))
    )


def symmetrize(g: Gadget) -> DoubledGadget:
    """Glue a mirror image onto the gadget so root order stops mattering."""
    m, k = g.m, g.k
    base_arcs = [(u, v) for u, v in g.rooted.graph.arcs if u < m and v < m]
    z, w = 2 * m, 2 * m + 1
    arcs = list(base_arcs)
    arcs.extend((u + m, v + m) for u, v in base_arcs)
    for v in range(m):
        if v < k:
            arcs.extend([(z, v), (v, w), (w, m + v), (m + v, z)])
        else:
            arcs.extend([(v, z), (w, v), (m + v, w), (z, m + v)])
    rooted = RootedDigraph(Digraph(2 * m + 2, arcs), (z, w))
    return DoubledGadget(rooted, m, k, tuple(range(m)), tuple(range(m, 2 * m)))


def build_necklace(F: RootedDigraph, ell: int) -> Digraph:
    """Cyclic chain of ell copies of F, root w of each glued to root z of the next."""
    if ell < 3:
        raise ValueError("necklace length must be at least 3")
    z, w = F.roots
    free = [v for v in range(F.graph.n) if v not in (z, w)]
    block = len(free)
    n = ell * (F.graph.n - 1)
    arcs = []
    for i in range(ell):
        mapping = {z: i, w: (i + 1) % ell}
        for idx, v in enumerate(free):
            mapping[v] = ell + i * block + idx
        arcs.extend((mapping[u], mapping[v]) for u, v in F.graph.arcs)
    return Digraph(n, arcs)


@dataclass(frozen=True)
class GadgetFamily:
    """One gadget and its doubled form per threshold value."""

    m: int
    k: tuple[int, ...]
    base: Tournament
    gadgets: tuple[Gadget, ...]
    doubled: tuple[DoubledGadget, ...]

    @property
    def s(self) -> int:
        return len(self.k)


def build_family(
    base: Tournament | BaseTournament,
    s: int | None = None,
    k_values: list[int] | None = None,
    enforce_interval: bool = True,
) -> GadgetFamily:
    """Construct the gadget family; toy families may bypass the k interval."""
    f0 = base.tournament if isinstance(base, BaseTournament) else base
    m = f0.n
    if k_values is None:
        if s is None:
            raise ValueError("need s or k_values")
        k_values = make_k_sequence(m, s)
    elif enforce_interval:
        lo, hi = _k_interval(m)
        for k in k_values:
            if not lo <= k <= hi:
                raise ValueError(f"k={k} outside admissible interval [{lo}, {hi}]")
        for k1, k2 in zip(k_values, k_values[1:]):
            if not k1 > k2 + 1:
                raise ValueError("k values must descend with gaps of at least 2")
    gadgets = tuple(build_gadget(f0, k) for k in k_values)
    return GadgetFamily(
        m=m,
        k=tuple(k_values),
        base=f0,
        gadgets=gadgets,
        doubled=tuple(symmetrize(g) for g in gadgets),
    )


def rotational_tournament(n: int) -> Tournament:
    """i beats i+1 .. i+(n-1)/2 mod n; defined for odd n, always strongly cyclic."""
    if n % 2 == 0:
        raise ValueError("rotational tournaments need odd n")
    half = (n - 1) // 2
    return Tournament(n, [(i, (i + d) % n) for i in range(n) for d in range(1, half + 1)])


@lru_cache(maxsize=16)
def toy_family(m: int = 3, k_values: tuple[int, ...] = (2,), seed: int = 1) -> GadgetFamily:
    """Small family for identity tests; the k interval is deliberately ignored.

    Odd m uses the rotational base (deterministic and cycle-rich, so toy
    hosts are rarely degenerate); even m falls back to a seeded draw.
    """
    if m % 2 == 1:
        f0 = rotational_tournament(m)
    else:
        f0 = _draw_tournament(random.Random(seed), m)
    return build_family(f0, k_values=list(k_values), enforce_interval=False)
