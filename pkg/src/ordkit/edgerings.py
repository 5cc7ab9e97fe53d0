"""Edge ideals, the poset <-> Cohen-Macaulay bipartite dictionary, and
letterplace machinery with squarefree Alexander duality.

Ground sets carry variable names; product ground sets use dotted names like
``v.1`` so a doubled vertex set or a product of two preorders stays readable
in rendered output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import OrdkitError
from .monomials import MonomialIdeal, contains, minimalize
from .relations import (
    MonotoneMap,
    Preorder,
    Relation,
    _bits,
    antichains,
    classify,
    monotone_maps,
)

CM_SIDE_CAP = 10
DUAL_GROUND_CAP = 20


@dataclass(frozen=True)
class NamedIdeal:
    """A monomial ideal over a named ground set of variables."""

    ground: tuple[str, ...]
    ideal: MonomialIdeal

    def __post_init__(self):
        if len(set(self.ground)) != len(self.ground):
            raise OrdkitError("edge-rings", "ideal", "duplicate ground set names")
        if self.ideal.nvars != len(self.ground):
            raise OrdkitError(
                "edge-rings",
                "ideal",
                f"{self.ideal.nvars} variables but {len(self.ground)} ground names",
            )


@dataclass(frozen=True)
class SquarefreeIdeal(NamedIdeal):
    def __post_init__(self):
        super().__post_init__()
        for g in self.ideal.gens:
            if any(e > 1 for e in g):
                raise OrdkitError("edge-rings", "ideal", f"generator {g} is not squarefree")

    def supports(self) -> list[int]:
        return [sum(1 << i for i, e in enumerate(g) if e) for g in self.ideal.gens]


@dataclass(frozen=True)
class SimpleGraph:
    """No loops, no multi-edges; vertices carry names."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise OrdkitError("edge-rings", "graph", "duplicate vertex names")
        n = len(self.vertices)
        seen = set()
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n):
                raise OrdkitError("edge-rings", "graph", f"edge ({a}, {b}) out of range")
            if a == b:
                raise OrdkitError("edge-rings", "graph", f"loop at vertex {self.vertices[a]}")
            if a > b or (a, b) in seen:
                raise OrdkitError("edge-rings", "graph", "edges must be sorted pairs without repeats")
            seen.add((a, b))


@dataclass(frozen=True)
class BipartiteGraph:
    """A relation between two named sides, stored as bit rows over side B."""

    a_names: tuple[str, ...]
    b_names: tuple[str, ...]
    relation: tuple[int, ...]

    def __post_init__(self):
        if len(self.relation) != len(self.a_names):
            raise OrdkitError("edge-rings", "bipartite", "one relation row per A-vertex required")
        full = (1 << len(self.b_names)) - 1
        if any(row & ~full for row in self.relation):
            raise OrdkitError("edge-rings", "bipartite", "relation row has bits beyond side B")

    def has(self, i: int, j: int) -> bool:
        return bool(self.relation[i] >> j & 1)


@dataclass(frozen=True)
class CMWitness:
    """A matching A -> B and the partial order it reads off the relation."""

    matching: tuple[int, ...]
    poset: Preorder


def edge_ideal(g: SimpleGraph) -> SquarefreeIdeal:
    """One quadratic squarefree generator per edge."""
    n = len(g.vertices)
    gens = []
    for a, b in g.edges:
        exps = [0] * n
        exps[a] = exps[b] = 1
        gens.append(tuple(exps))
    return SquarefreeIdeal(g.vertices, minimalize(n, gens))


def doubled_names(names: Sequence[str]) -> tuple[str, ...]:
    return tuple(f"{v}.1" for v in names) + tuple(f"{v}.2" for v in names)


def doubled_poset_ideal(order: Preorder, names: Sequence[str] | None = None) -> SquarefreeIdeal:
    """Generators (v,1)(w,2) for every v <= w in a partial order."""
    if not classify(order).partial_order:
        raise OrdkitError("edge-rings", "doubled_poset_ideal", "preorder is not antisymmetric")
    n = order.n
    names = tuple(names) if names is not None else tuple(f"v{i}" for i in range(n))
    if len(names) != n:
        raise OrdkitError("edge-rings", "doubled_poset_ideal", "one name per point required")
    gens = []
    for v, w in order.pairs():
        exps = [0] * (2 * n)
        exps[v] += 1
        exps[n + w] += 1
        gens.append(tuple(exps))
    return SquarefreeIdeal(doubled_names(names), minimalize(2 * n, gens))


def quotient_identify(ideal: SquarefreeIdeal) -> NamedIdeal:
    """Substitute (v,2) -> (v,1), modelling the variable-difference quotient."""
    bases: dict[str, set[str]] = {}
    for name in ideal.ground:
        stem, dot, copy = name.rpartition(".")
        if dot != "." or copy not in ("1", "2"):
            raise OrdkitError(
                "edge-rings", "quotient_identify", f"ground name {name!r} is not of the form base.1/base.2"
            )
        bases.setdefault(stem, set()).add(copy)
    if any(copies != {"1", "2"} for copies in bases.values()):
        stem = next(s for s, c in bases.items() if c != {"1", "2"})
        raise OrdkitError("edge-rings", "quotient_identify", f"ground set is not doubled at {stem!r}")
    base_names = tuple(sorted(bases, key=lambda s: ideal.ground.index(f"{s}.1")))
    index = {name: i for i, name in enumerate(base_names)}
    gens = []
    for g in ideal.ideal.gens:
        exps = [0] * len(base_names)
        for pos, e in enumerate(g):
            stem = ideal.ground[pos].rpartition(".")[0]
            exps[index[stem]] += e
        gens.append(tuple(exps))
    return NamedIdeal(base_names, minimalize(len(base_names), gens))


def kdim_artinian(ideal: MonomialIdeal, names: Sequence[str] | None = None) -> int:
    """Count the monomials outside an artinian ideal by bounded enumeration."""
    bounds = []
    for v in range(ideal.nvars):
        power = next(
            (g[v] for g in ideal.gens if g[v] > 0 and all(e == 0 for i, e in enumerate(g) if i != v)),
            None,
        )
        if power is None:
            label = names[v] if names is not None else f"x{v}"
            raise OrdkitError(
                "edge-rings", "kdim_artinian", f"not artinian: no pure power of variable {label}"
            )
        bounds.append(power)
    return sum(
        1 for m in itertools.product(*(range(b) for b in bounds)) if not contains(ideal, m)
    )


def antichain_dimension(order: Preorder) -> int:
    """Antichain count; the standard monomials of the poset quotient ideal."""
    if not classify(order).partial_order:
        raise OrdkitError("edge-rings", "antichain_dimension", "preorder is not antisymmetric")
    return len(antichains(order))


def _perfect_matchings(g: BipartiteGraph) -> Iterator[tuple[int, ...]]:
    """Matchings as B-index tuples over A in order, lexicographically ascending."""
    size = len(g.a_names)
    used = 0
    pick: list[int] = []

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if i == size:
            yield tuple(pick)
            return
        for j in _bits(g.relation[i] & ~used):
            used |= 1 << j
            pick.append(j)
            yield from extend(i + 1)
            pick.pop()
            used ^= 1 << j

    yield from extend(0)


def is_cm_bipartite(g: BipartiteGraph) -> CMWitness | None:
    """Search for a matching that turns the relation into a partial order.

    Candidate diagonals are perfect matchings of the graph itself, since a
    reflexive identification must use actual edges; the lexicographically
    smallest matching that validates wins.
    """
    if len(g.a_names) > CM_SIDE_CAP or len(g.b_names) > CM_SIDE_CAP:
        raise OrdkitError("edge-rings", "is_cm_bipartite", f"side exceeds guard {CM_SIDE_CAP}")
    if len(g.a_names) != len(g.b_names):
        return None
    n = len(g.a_names)
    for matching in _perfect_matchings(g):
        rows = tuple(
            sum(1 << j for j in range(n) if g.has(i, matching[j])) for i in range(n)
        )
        try:
            order = Preorder(Relation(n, rows))
        except OrdkitError:
            continue
        if classify(order).partial_order:
            return CMWitness(matching, order)
    return None


def has_linear_resolution_shape(g: BipartiteGraph) -> bool:
    """True when the A-side neighborhoods form a chain under inclusion,
    equivalently when total orders on both sides make the relation an up-set
    of the product order."""
    hoods = sorted(g.relation, key=lambda mask: bin(mask).count("1"))
    return all(a & ~b == 0 for a, b in zip(hoods, hoods[1:]))


def letterplace(
    p: Preorder,
    q: Preorder,
    p_names: Sequence[str] | None = None,
    q_names: Sequence[str] | None = None,
) -> SquarefreeIdeal:
    """Generators are the graphs of all order preserving maps p -> q."""
    p_names = tuple(p_names) if p_names is not None else tuple(f"p{i}" for i in range(p.n))
    q_names = tuple(q_names) if q_names is not None else tuple(f"q{j}" for j in range(q.n))
    if len(p_names) != p.n or len(q_names) != q.n:
        raise OrdkitError("edge-rings", "letterplace", "one name per point required")
    ground = tuple(f"{a}.{b}" for a in p_names for b in q_names)
    gens = []
    for f in monotone_maps(p, q):
        exps = [0] * (p.n * q.n)
        for x in range(p.n):
            exps[x * q.n + f(x)] = 1
        gens.append(tuple(exps))
    return SquarefreeIdeal(ground, minimalize(p.n * q.n, gens))


def co_letterplace(
    order: Preorder,
    maps: Sequence[Sequence[int]],
    depth: int | None = None,
    names: Sequence[str] | None = None,
) -> SquarefreeIdeal:
    """Generators are the graphs of an explicit down-set of maps into {0..depth}."""
    if not classify(order).partial_order:
        raise OrdkitError("edge-rings", "co_letterplace", "preorder is not antisymmetric")
    n = order.n
    names = tuple(names) if names is not None else tuple(f"v{i}" for i in range(n))
    if len(names) != n:
        raise OrdkitError("edge-rings", "co_letterplace", "one name per point required")
    listed = []
    for f in maps:
        f = tuple(f)
        if len(f) != n or any(v < 0 for v in f):
            raise OrdkitError("edge-rings", "co_letterplace", f"map {f} has the wrong shape")
        listed.append(f)
    d = depth if depth is not None else max((max(f) for f in listed), default=0)
    target = Preorder.chain(d + 1)
    for f in listed:
        if any(v > d for v in f):
            raise OrdkitError("edge-rings", "co_letterplace", f"map {f} exceeds depth {d}")
        MonotoneMap(order, target, f)  # raises when not order preserving
    listed_set = set(listed)
    for g in monotone_maps(order, target):
        if g.values in listed_set:
            continue
        if any(all(a <= b for a, b in zip(g.values, f)) for f in listed_set):
            raise OrdkitError(
                "edge-rings",
                "co_letterplace",
                f"down-set violation: missing pointwise-smaller map {g.values}",
            )
    ground = tuple(f"{v}.{k}" for v in names for k in range(d + 1))
    gens = []
    for f in sorted(listed_set):
        exps = [0] * (n * (d + 1))
        for x in range(n):
            exps[x * (d + 1) + f[x]] = 1
        gens.append(tuple(exps))
    return SquarefreeIdeal(ground, minimalize(n * (d + 1), gens))


def alexander_dual(ideal: SquarefreeIdeal) -> SquarefreeIdeal:
    """Minimal transversals of the generator supports, over the same ground set.

    Equivalently the generators of the intersection of the variable primes
    spanned by each support.
    """
    if ideal.ideal.is_zero:
        raise OrdkitError("edge-rings", "alexander_dual", "the zero ideal has no dual here")
    supports = ideal.supports()
    universe = 0
    for s in supports:
        universe |= s
    if bin(universe).count("1") > DUAL_GROUND_CAP:
        raise OrdkitError("edge-rings", "alexander_dual", f"support union exceeds guard {DUAL_GROUND_CAP}")
    positions = list(_bits(universe))
    hitting = []
    for choice in range(1 << len(positions)):
        mask = 0
        for k in _bits(choice):
            mask |= 1 << positions[k]
        if all(mask & s for s in supports):
            hitting.append(mask)
    minimal = [
        m for m in hitting if all(not (h != m and h & ~m == 0) for h in hitting)
    ]
    n = len(ideal.ground)
    gens = [tuple(1 if mask >> i & 1 else 0 for i in range(n)) for mask in minimal]
    return SquarefreeIdeal(ideal.ground, minimalize(n, gens))
