"""Preorders on labeled finite point sets.

Points are the integers ``0..n-1``.  A relation is stored as ``n`` machine
words: bit ``y`` of ``rows[x]`` is set when the pair ``(x, y)`` is in the
relation, read as ``x <= y``.  Reflexive-transitive closure, refinement,
quotients and Hom-sets are then word-parallel row operations.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import OrdkitError

MAX_POINTS = 16
ENUMERATION_CAP = 5
CANONICAL_CAP = 8


def _env_cap(stated: int) -> int:
    """Enumeration guard, lowered (never raised) by ORDKIT_MAX_N."""
    raw = os.environ.get("ORDKIT_MAX_N")
    if raw is None:
        return stated
    try:
        return min(stated, int(raw))
    except ValueError:
        return stated


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Relation:
    """A binary relation on ``n`` points with no order axioms assumed."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_POINTS:
            raise OrdkitError(
                "order-core", "relation", f"point count {self.n} outside 1..{MAX_POINTS}"
            )
        if len(self.rows) != self.n:
            raise OrdkitError(
                "order-core", "relation", f"expected {self.n} rows, got {len(self.rows)}"
            )
        full = (1 << self.n) - 1
        for x, row in enumerate(self.rows):
            if row & ~full:
                raise OrdkitError("order-core", "relation", f"row {x} has bits beyond point {self.n - 1}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise OrdkitError("order-core", "relation", f"pair ({x}, {y}) out of range for n={n}")
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in _bits(self.rows[x])]


@dataclass(frozen=True)
class Preorder:
    """A reflexive and transitive relation; ``le(x, y)`` reads ``x <= y``."""

    rel: Relation

    def __post_init__(self):
        rows = self.rel.rows
        for x in range(self.n):
            if not rows[x] >> x & 1:
                raise OrdkitError("order-core", "preorder", f"not reflexive: missing {x} <= {x}")
            for y in _bits(rows[x]):
                if rows[y] & ~rows[x]:
                    z = next(_bits(rows[y] & ~rows[x]))
                    raise OrdkitError(
                        "order-core",
                        "preorder",
                        f"not transitive: {x} <= {y} and {y} <= {z} but not {x} <= {z}",
                    )

    @property
    def n(self) -> int:
        return self.rel.n

    @property
    def rows(self) -> tuple[int, ...]:
        return self.rel.rows

    def le(self, x: int, y: int) -> bool:
        return self.rel.has(x, y)

    def pairs(self) -> list[tuple[int, int]]:
        return self.rel.pairs()

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in self.rel.pairs() if x != y]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Preorder":
        """Reflexive-transitive closure of the listed pairs."""
        return closure(Relation.from_pairs(n, pairs))

    @classmethod
    def discrete(cls, n: int) -> "Preorder":
        return cls(Relation(n, tuple(1 << x for x in range(n))))

    @classmethod
    def coarse(cls, n: int) -> "Preorder":
        full = (1 << n) - 1
        return cls(Relation(n, (full,) * n))

    @classmethod
    def chain(cls, n: int) -> "Preorder":
        """Ascending chain 0 <= 1 <= ... <= n-1."""
        full = (1 << n) - 1
        return cls(Relation(n, tuple((full >> x) << x for x in range(n))))


@dataclass(frozen=True)
class PropertyFlags:
    partial_order: bool
    equivalence: bool
    total: bool
    discrete: bool
    coarse: bool


@dataclass(frozen=True)
class BubbleDecomposition:
    """Mutual-comparability classes and the partial order they inherit."""

    blocks: tuple[tuple[int, ...], ...]
    quotient: Preorder


@dataclass(frozen=True)
class MonotoneMap:
    """An order preserving map between two preorders."""

    source: Preorder
    target: Preorder
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source.n:
            raise OrdkitError(
                "order-core",
                "monotone-map",
                f"expected {self.source.n} values, got {len(self.values)}",
            )
        for v in self.values:
            if not 0 <= v < self.target.n:
                raise OrdkitError("order-core", "monotone-map", f"value {v} outside target points")
        for x, y in self.source.pairs():
            if not self.target.le(self.values[x], self.values[y]):
                raise OrdkitError(
                    "order-core",
                    "monotone-map",
                    f"not monotone: {x} <= {y} but f({x}) = {self.values[x]} "
                    f"is not below f({y}) = {self.values[y]}",
                )

    def __call__(self, x: int) -> int:
        return self.values[x]


def closure(r: Relation) -> Preorder:
    """Smallest preorder containing ``r`` (reflexive-transitive closure)."""
    rows = list(r.rows)
    for x in range(r.n):
        rows[x] |= 1 << x
    for k in range(r.n):
        bit = 1 << k
        for x in range(r.n):
            if rows[x] & bit:
                rows[x] |= rows[k]
    return Preorder(Relation(r.n, tuple(rows)))


def classify(p: Preorder) -> PropertyFlags:
    n, rows = p.n, p.rows
    diagonal = tuple(1 << x for x in range(n))
    full = (1 << n) - 1
    antisymmetric = all(not (p.le(x, y) and p.le(y, x)) for x in range(n) for y in range(x + 1, n))
    symmetric = all(rows[x] >> y & 1 == rows[y] >> x & 1 for x in range(n) for y in range(x + 1, n))
    total = all(p.le(x, y) or p.le(y, x) for x in range(n) for y in range(x + 1, n))
    return PropertyFlags(
        partial_order=antisymmetric,
        equivalence=symmetric,
        total=total,
        discrete=rows == diagonal,
        coarse=rows == (full,) * n,
    )


def bubbles(p: Preorder) -> BubbleDecomposition:
    """Blocks of mutual comparability and the induced partial order on them."""
    seen: dict[int, int] = {}
    blocks: list[tuple[int, ...]] = []
    for x in range(p.n):
        if x in seen:
            continue
        members = tuple(y for y in _bits(p.rows[x]) if p.le(y, x))
        for y in members:
            seen[y] = len(blocks)
        blocks.append(members)
    reps = [block[0] for block in blocks]
    rows = tuple(
        sum(1 << j for j, rj in enumerate(reps) if p.le(ri, rj)) for ri in reps
    )
    quotient = Preorder(Relation(len(blocks), rows))
    return BubbleDecomposition(tuple(blocks), quotient)


def refines(p: Preorder, q: Preorder) -> bool:
    """True when every comparability of ``p`` also holds in ``q``."""
    if p.n != q.n:
        raise OrdkitError("order-core", "refines", f"size mismatch: {p.n} vs {q.n}")
    return all(pr & ~qr == 0 for pr, qr in zip(p.rows, q.rows))


def up_sets(p: Preorder) -> list[int]:
    """All upward-closed subsets as bit masks, ascending."""
    out = []
    for mask in range(1 << p.n):
        if all(p.rows[x] & ~mask == 0 for x in _bits(mask)):
            out.append(mask)
    return out


def antichains(p: Preorder) -> list[int]:
    """All subsets with no two distinct comparable members, as masks."""
    comparable = [
        sum(1 << y for y in range(p.n) if y != x and (p.le(x, y) or p.le(y, x)))
        for x in range(p.n)
    ]
    out = []
    for mask in range(1 << p.n):
        if all(mask & comparable[x] == 0 for x in _bits(mask)):
            out.append(mask)
    return out


def _string_key(mask: int, n: int) -> int:
    """Value of the row mask read as a bit string with column 0 first."""
    rev = 0
    for y in range(n):
        if mask >> y & 1:
            rev |= 1 << (n - 1 - y)
    return rev


def encode(p: Preorder) -> int:
    """Packed bit encoding: the incidence matrix read row-major."""
    code = 0
    for row in p.rows:
        code = code << p.n | _string_key(row, p.n)
    return code


def decode(n: int, code: int) -> Preorder:
    mask = (1 << n) - 1
    keys = []
    for _ in range(n):
        keys.append(code & mask)
        code >>= n
    return Preorder(Relation(n, tuple(_string_key(k, n) for k in reversed(keys))))


def _transitive(rows: Sequence[int]) -> bool:
    for row in rows:
        for y in _bits(row):
            if rows[y] & ~row:
                return False
    return True


def enumerate_preorders(n: int, first_row: int | None = None) -> Iterator[Preorder]:
    """Every preorder on n labeled points, ascending in the packed encoding.

    ``first_row`` restricts the stream to one row-0 value, which partitions
    the search space for data-parallel counting.
    """
    cap = _env_cap(ENUMERATION_CAP)
    if not 1 <= n <= cap:
        raise OrdkitError("order-core", "enumerate_preorders", f"n={n} outside guard 1..{cap}")
    choices = [
        sorted((m for m in range(1 << n) if m >> x & 1), key=lambda m: _string_key(m, n))
        for x in range(n)
    ]
    if first_row is not None:
        choices[0] = [first_row] if first_row >> 0 & 1 else []
    for rows in itertools.product(*choices):
        if _transitive(rows):
            yield Preorder(Relation(n, rows))


def first_rows(n: int) -> list[int]:
    """Row-0 values in enumeration order; the partition keys for --jobs."""
    return sorted((m for m in range(1 << n) if m & 1), key=lambda m: _string_key(m, n))


def relabel(p: Preorder, perm: Sequence[int]) -> Preorder:
    """Rename point x to perm[x]."""
    rows = [0] * p.n
    for x in range(p.n):
        for y in _bits(p.rows[x]):
            rows[perm[x]] |= 1 << perm[y]
    return Preorder(Relation(p.n, tuple(rows)))


def canonical_form(p: Preorder) -> int:
    """Minimum packed encoding over all relabelings."""
    if p.n > CANONICAL_CAP:
        raise OrdkitError(
            "order-core", "canonical_form", f"n={p.n} exceeds factorial-search guard {CANONICAL_CAP}"
        )
    return min(encode(relabel(p, perm)) for perm in itertools.permutations(range(p.n)))


def are_isomorphic(p: Preorder, q: Preorder) -> bool:
    return p.n == q.n and canonical_form(p) == canonical_form(q)


def monotone_maps(p: Preorder, q: Preorder) -> list[MonotoneMap]:
    """All order preserving maps p -> q, lexicographic in the value tuples."""
    out: list[MonotoneMap] = []
    values = [0] * p.n

    def assign(x: int):
        if x == p.n:
            out.append(MonotoneMap(p, q, tuple(values)))
            return
        for v in range(q.n):
            ok = True
            for y in range(x):
                if p.le(x, y) and not q.le(v, values[y]):
                    ok = False
                    break
                if p.le(y, x) and not q.le(values[y], v):
                    ok = False
                    break
            if ok:
                values[x] = v
                assign(x + 1)

    assign(0)
    return out


def check_galois_connection(f: MonotoneMap, g: MonotoneMap) -> bool:
    """True when f(q) <= p exactly where q <= g(p); f sits in the left-adjoint slot."""
    if f.source != g.target or f.target != g.source:
        raise OrdkitError(
            "order-core", "check_galois_connection", "endpoint mismatch between the two maps"
        )
    q_side, p_side = f.source, f.target
    for q in range(q_side.n):
        for p in range(p_side.n):
            if p_side.le(f(q), p) != q_side.le(q, g(p)):
                return False
    return True


def truncated_chain_map(d: int, fn: Callable[[int], int]) -> MonotoneMap:
    """fn restricted to the chain {0..d}, with values clamped into range."""
    c = Preorder.chain(d + 1)
    return MonotoneMap(c, c, tuple(min(max(fn(k), 0), d) for k in range(d + 1)))
