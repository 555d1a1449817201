"""Weights, dominance, and partitions for the supported Cartan families.

Three families are supported: GL(n) with integer-vector weights, SL2 with a
single integer coordinate <wt, alpha_check>, and Sp(2n) with weights in the
standard epsilon-coordinate lattice.  dom_w picks the dominant representative
of a Weyl orbit: sort for GL, absolute value for SL2, absolute values then
sort for Sp.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

GL = "GL"
SL2 = "SL2"
SP = "Sp"

_FAMILIES = (GL, SL2, SP)


class ContextMismatch(ValueError):
    """Two weights or crystals from different Cartan contexts were combined."""


class NotDominant(ValueError):
    """A weight that must be dominant is not."""


@dataclass(frozen=True)
class CartanContext:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.family == SL2 and self.rank != 1:
            raise ValueError("SL2 has rank 1")

    def index_set(self) -> range:
        """Dynkin node labels: 1..n-1 for GL(n), 1..n for Sp(2n), {1} for SL2."""
        if self.family == GL:
            return range(1, self.rank)
        if self.family == SP:
            return range(1, self.rank + 1)
        return range(1, 2)

    def simple_root(self, i: int) -> tuple[int, ...]:
        n = self.rank
        if i not in self.index_set():
            raise ValueError(f"node {i} not in index set of {self}")
        if self.family == SL2:
            return (2,)
        coords = [0] * n
        if self.family == SP and i == n:
            coords[n - 1] = 2
        else:
            coords[i - 1] = 1
            coords[i] = -1
        return tuple(coords)

    def zero(self) -> "Weight":
        return Weight(self, (0,) * self.rank)

    def weight(self, coords: Sequence[int]) -> "Weight":
        return Weight(self, tuple(coords))

    def __str__(self) -> str:
        if self.family == SL2:
            return "SL2"
        if self.family == GL:
            return f"GL({self.rank})"
        return f"Sp({2 * self.rank})"


@dataclass(frozen=True)
class Weight:
    context: CartanContext
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.context.rank:
            raise ValueError(f"coords {self.coords} do not match rank {self.context.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        _same_context(self, other)
        return Weight(self.context, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_context(self, other)
        return Weight(self.context, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def _same_context(a: Weight, b: Weight) -> None:
    if a.context != b.context:
        raise ContextMismatch(f"{a.context} vs {b.context}")


def is_dominant(w: Weight) -> bool:
    c = w.coords
    if w.context.family == GL:
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1))
    if w.context.family == SL2:
        return c[0] >= 0
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and c[-1] >= 0


def dom_w(w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of w.

    >>> ctx = CartanContext('GL', 4)
    >>> dom_w(ctx.weight([1, 2, 1, 0])).coords
    (2, 1, 1, 0)
    >>> dom_w(CartanContext('Sp', 2).weight([-1, 2])).coords
    (2, 1)
    """
    fam = w.context.family
    if fam == GL:
        return Weight(w.context, tuple(sorted(w.coords, reverse=True)))
    if fam == SL2:
        return Weight(w.context, (abs(w.coords[0]),))
    return Weight(w.context, tuple(sorted((abs(c) for c in w.coords), reverse=True)))


def weyl_orbit(w: Weight) -> frozenset[tuple[int, ...]]:
    """All coordinate vectors in the Weyl orbit of w."""
    fam = w.context.family
    if fam == GL:
        return frozenset(permutations(w.coords))
    if fam == SL2:
        m = w.coords[0]
        return frozenset({(m,), (-m,)})
    out = set()
    for perm in permutations(w.coords):
        for signs in product(*[((1,) if c == 0 else (1, -1)) for c in perm]):
            out.add(tuple(s * c for s, c in zip(signs, perm)))
    return frozenset(out)


@dataclass(frozen=True)
class Partition:
    """A partition; trailing zeros are stripped so equality ignores them."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"{parts} has negative parts")
        object.__setattr__(self, "parts", parts)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), 0 beyond the length."""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"{self} does not fit in {n} rows")
        return self.parts + (0,) * (n - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(other.length()))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate(Partition((4, 2, 1))).parts
    (3, 2, 1, 1)
    """
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part > i) for i in range(p.parts[0])))


def strip_check(inner: Partition, outer: Partition, kind: str) -> bool:
    """True when outer/inner is a horizontal or vertical strip.

    Horizontal: at most one added box per column, i.e. outer[i+1] <= inner[i].
    Vertical: at most one added box per row.
    """
    if kind not in ("horizontal", "vertical"):
        raise ValueError(f"kind must be horizontal or vertical, got {kind!r}")
    if not outer.contains(inner):
        return False
    rows = outer.length()
    if kind == "horizontal":
        return all(outer.part(i + 1) <= inner.part(i) for i in range(rows))
    return all(outer.part(i) - inner.part(i) <= 1 for i in range(rows))


def partition_of_weight(w: Weight) -> Partition:
    """Read a dominant nonnegative weight as a partition; guards corrupt input."""
    if not is_dominant(w) or any(c < 0 for c in w.coords):
        raise NotDominant(f"{w.coords} is not a partition-shaped weight")
    return Partition(w.coords)


def weight_of_partition(ctx: CartanContext, p: Partition) -> Weight:
    return Weight(ctx, p.padded(ctx.rank))


# -- JSON forms --------------------------------------------------------------


def context_to_json(ctx: CartanContext) -> dict:
    return {"family": ctx.family, "rank": ctx.rank}


def context_from_json(obj: dict) -> CartanContext:
    return CartanContext(obj["family"], int(obj["rank"]))


def weight_to_json(w: Weight) -> dict:
    return {"family": w.context.family, "rank": w.context.rank, "coords": list(w.coords)}


def weight_from_json(obj: dict) -> Weight:
    ctx = CartanContext(obj["family"], int(obj["rank"]))
    return Weight(ctx, tuple(int(c) for c in obj["coords"]))
