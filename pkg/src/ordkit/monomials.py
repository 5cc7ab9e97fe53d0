"""Monomial ideals, their associated preorders, and strong stability.

Monomials are exponent tuples.  The zero ideal has no generators; the unit
ideal is generated by the all-zero exponent vector.  Both are legal inputs:
their associated preorder is the coarse one, the defining implication being
vacuous for the first and universally true for the second.

Everything here is characteristic-free combinatorics.  In characteristic
zero, strong stability coincides with invariance under upper triangular
coordinate changes; no group action is computed here.  The up-set bijection
is implemented for the standard chain on the variables; the variant over an
arbitrary total preorder in place of the chain is a deliberate extension
point, not guessed at.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import OrdkitError
from .relations import Preorder, Relation, classify

Monomial = tuple[int, ...]

STABILIZER_CAP = 8


def divides(a: Monomial, b: Monomial) -> bool:
    return all(ai <= bi for ai, bi in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


@dataclass(frozen=True)
class MonomialIdeal:
    """A minimal generating set, deduplicated and sorted for determinism."""

    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.nvars < 0:
            raise OrdkitError("monomial-ideals", "ideal", "negative variable count")
        for g in self.gens:
            if len(g) != self.nvars:
                raise OrdkitError(
                    "monomial-ideals", "ideal", f"generator {g} has wrong length for {self.nvars} variables"
                )
            if any(e < 0 for e in g):
                raise OrdkitError("monomial-ideals", "ideal", f"negative exponent in {g}")
        if tuple(sorted(set(self.gens))) != self.gens:
            raise OrdkitError("monomial-ideals", "ideal", "generators must be sorted and distinct")
        for a in self.gens:
            for b in self.gens:
                if a != b and divides(a, b):
                    raise OrdkitError("monomial-ideals", "ideal", f"generator {a} divides {b}")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def max_degree(self) -> int:
        return max((degree(g) for g in self.gens), default=0)


def minimalize(nvars: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Divisibility-minimal antichain generating the same ideal."""
    pool = sorted(set(tuple(g) for g in gens))
    kept = [g for g in pool if not any(h != g and divides(h, g) for h in pool)]
    return MonomialIdeal(nvars, tuple(kept))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != ideal.nvars:
        raise OrdkitError(
            "monomial-ideals", "contains", f"monomial has {len(m)} exponents, ideal has {ideal.nvars} variables"
        )
    return any(divides(g, m) for g in ideal.gens)


def _exchange(g: Monomial, src: int, dst: int) -> Monomial:
    out = list(g)
    out[src] -= 1
    out[dst] += 1
    return tuple(out)


def associated_preorder(ideal: MonomialIdeal) -> Preorder:
    """x <= y when multiplying any monomial into the ideal via x also works via y.

    Checked on generators only: x <= y iff y*(g/x) lies in the ideal for every
    minimal generator g divisible by x.  A witness x*m in the ideal that has
    m itself outside forces a generator g dividing x*m with g/x dividing m,
    so the generator-level check is equivalent to the quantified definition.
    """
    n = ideal.nvars
    rows = []
    for x in range(n):
        row = 0
        for y in range(n):
            if all(
                contains(ideal, _exchange(g, x, y)) for g in ideal.gens if g[x] > 0
            ):
                row |= 1 << y
        rows.append(row)
    return Preorder(Relation(n, tuple(rows)))


def associated_preorder_by_definition(ideal: MonomialIdeal, bound: int | None = None) -> Preorder:
    """Quantified form of the associated preorder, for cross-checking.

    Tests x <= y against every monomial of total degree up to ``bound``
    (default: the maximal generator degree, which any minimal counterexample
    m = g/x stays under).
    """
    n = ideal.nvars
    limit = ideal.max_degree() if bound is None else bound
    pool = list(monomials_up_to_degree(n, limit))
    rows = []
    for x in range(n):
        row = 0
        for y in range(n):
            ok = True
            for m in pool:
                with_x = tuple(e + (i == x) for i, e in enumerate(m))
                with_y = tuple(e + (i == y) for i, e in enumerate(m))
                if contains(ideal, with_x) and not contains(ideal, with_y):
                    ok = False
                    break
            if ok:
                row |= 1 << y
        rows.append(row)
    return Preorder(Relation(n, tuple(rows)))


def monomials_up_to_degree(nvars: int, bound: int) -> Iterator[Monomial]:
    """Every exponent vector of total degree at most ``bound``."""
    if nvars == 0:
        yield ()
        return
    for total in range(bound + 1):
        for cuts in itertools.combinations(range(total + nvars - 1), nvars - 1):
            prev = -1
            out = []
            for c in cuts:
                out.append(c - prev - 1)
                prev = c
            out.append(total + nvars - 2 - prev)
            yield tuple(out)


def is_strongly_stable(ideal: MonomialIdeal, order: Sequence[int] | None = None) -> bool:
    """Closure under swapping a variable for any larger one, generator by generator.

    ``order`` lists the variables from largest to smallest; default is the
    standard order x0 > x1 > ... > x(n-1).
    """
    n = ideal.nvars
    order = tuple(range(n)) if order is None else tuple(order)
    if sorted(order) != list(range(n)):
        raise OrdkitError("monomial-ideals", "is_strongly_stable", f"{order} is not a permutation")
    for g in ideal.gens:
        for pos_j, var_j in enumerate(order):
            if g[var_j] == 0:
                continue
            for var_i in order[:pos_j]:
                if not contains(ideal, _exchange(g, var_j, var_i)):
                    return False
    return True


def is_most_degenerate(ideal: MonomialIdeal) -> bool:
    """True when the associated preorder is total."""
    return classify(associated_preorder(ideal)).total


def permute_monomial(m: Monomial, perm: Sequence[int]) -> Monomial:
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[perm[i]] = e
    return tuple(out)


def permute_ideal(ideal: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(ideal.nvars, tuple(sorted(permute_monomial(g, perm) for g in ideal.gens)))


def stabilizer(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """All variable permutations fixing the ideal."""
    if ideal.nvars > STABILIZER_CAP:
        raise OrdkitError(
            "monomial-ideals", "stabilizer", f"{ideal.nvars} variables exceeds guard {STABILIZER_CAP}"
        )
    gens = set(ideal.gens)
    return [
        perm
        for perm in itertools.permutations(range(ideal.nvars))
        if {permute_monomial(g, perm) for g in gens} == gens
    ]


def chain_point(m: Monomial) -> tuple[int, ...]:
    """Partial-sum coordinates of a monomial: u_i = e_1 + ... + e_i."""
    out = []
    acc = 0
    for e in m:
        acc += e
        out.append(acc)
    return tuple(out)


def chain_monomial(u: Sequence[int]) -> Monomial:
    """Inverse of chain_point on weakly increasing vectors."""
    prev = 0
    out = []
    for v in u:
        out.append(v - prev)
        prev = v
    return tuple(out)


def _dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(u, v))


def ss_to_upset(ideal: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Minimal points of the up-set of weakly increasing vectors matching the ideal."""
    if not is_strongly_stable(ideal):
        raise OrdkitError(
            "monomial-ideals", "ss_to_upset", "ideal is not strongly stable for the standard order"
        )
    points = [chain_point(g) for g in ideal.gens]
    minimal = [u for u in points if not any(v != u and _dominates(u, v) for v in points)]
    return tuple(sorted(set(minimal)))


def upset_to_ss(chains: Iterable[Sequence[int]], nvars: int) -> MonomialIdeal:
    """The strongly stable ideal whose monomials map onto the given up-set."""
    pts = []
    for u in chains:
        u = tuple(u)
        if len(u) != nvars:
            raise OrdkitError(
                "monomial-ideals", "upset_to_ss", f"chain {u} has wrong length for {nvars} variables"
            )
        if any(e < 0 for e in u) or any(a > b for a, b in zip(u, u[1:])):
            raise OrdkitError("monomial-ideals", "upset_to_ss", f"chain {u} is not weakly increasing")
        pts.append(u)
    if not pts:
        return MonomialIdeal(nvars, ())
    bound = max(u[-1] for u in pts) if nvars else 0
    members = [
        m
        for m in monomials_up_to_degree(nvars, bound)
        if any(_dominates(chain_point(m), u) for u in pts)
    ]
    return minimalize(nvars, members)
