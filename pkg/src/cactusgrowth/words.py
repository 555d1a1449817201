"""Highest-weight words of minuscule tensor products and the local move.

A highest-weight element of C_1 (x) ... (x) C_r with minuscule factors is
encoded lattice-side as its sequence of partial weights 0 = w_0, ..., w_r:
every corner is dominant and every difference w_k - w_{k-1} lies in the Weyl
orbit of the k-th factor's minuscule weight.  Edge labels are redundant and
omitted.  The elementary move tau_i replaces w_i by dom_W(w_{i-1} + w_{i+1}
- w_i) and swaps the factor descriptors at i and i+1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .crystal import Crystal, build_minuscule
from .weights import (
    GL,
    SL2,
    SP,
    CartanContext,
    Weight,
    dom_w,
    is_dominant,
    weyl_orbit,
)


class InvalidStep(ValueError):
    """A corner pair is not a valid minuscule step."""


@dataclass(frozen=True)
class StepKind:
    """Descriptor of one minuscule tensor factor.

    name 'vector' covers the GL(n) vector crystal (= exterior power 1) and
    the Sp(2n) vector crystal; 'exterior' with k covers GL(n) wedge powers;
    'sl2' is the SL2 doublet.
    """

    name: str
    k: int = 1

    def __post_init__(self):
        if self.name not in ("vector", "exterior", "sl2"):
            raise ValueError(f"unknown step kind {self.name!r}")

    def orbit(self, ctx: CartanContext) -> frozenset[tuple[int, ...]]:
        fund = self.fundamental_weight(ctx)
        return weyl_orbit(Weight(ctx, fund))

    def fundamental_weight(self, ctx: CartanContext) -> tuple[int, ...]:
        if ctx.family == SL2:
            if self.name not in ("sl2", "vector"):
                raise InvalidStep(f"{self} invalid in {ctx}")
            return (1,)
        if self.name == "sl2":
            raise InvalidStep(f"{self} invalid in {ctx}")
        if ctx.family == SP:
            if self.name != "vector":
                raise InvalidStep(f"{self} invalid in {ctx}")
            return (1,) + (0,) * (ctx.rank - 1)
        k = 1 if self.name == "vector" else self.k
        if not 0 <= k <= ctx.rank:
            raise InvalidStep(f"exterior power {k} out of range for {ctx}")
        return (1,) * k + (0,) * (ctx.rank - k)

    def crystal(self, ctx: CartanContext) -> Crystal:
        if ctx.family == SL2:
            return build_minuscule(ctx, "sl2")
        if self.name == "exterior":
            return build_minuscule(ctx, "exterior", self.k)
        return build_minuscule(ctx, "vector")

    def __str__(self) -> str:
        if self.name == "exterior" and self.k != 1:
            return f"exterior({self.k})"
        return self.name


VECTOR = StepKind("vector")
SL2_STEP = StepKind("sl2")


def exterior(k: int) -> StepKind:
    return StepKind("exterior", k)


def step_is_valid(ctx: CartanContext, kind: StepKind, start: Weight, end: Weight) -> bool:
    if not (is_dominant(start) and is_dominant(end)):
        return False
    diff = tuple(a - b for a, b in zip(end.coords, start.coords))
    return diff in kind.orbit(ctx)


def infer_step_kind(ctx: CartanContext, start: Weight, end: Weight) -> StepKind:
    """Recover the factor descriptor from a single corner pair."""
    diff = tuple(a - b for a, b in zip(end.coords, start.coords))
    if ctx.family == SL2:
        if diff in ((1,), (-1,)):
            return SL2_STEP
        raise InvalidStep(f"{start} -> {end} is not an SL2 step")
    if ctx.family == SP:
        if sum(abs(d) for d in diff) == 1:
            return VECTOR
        raise InvalidStep(f"{start} -> {end} is not an Sp vector step")
    if all(d in (0, 1) for d in diff):
        k = sum(diff)
        return VECTOR if k == 1 else exterior(k)
    raise InvalidStep(f"{start} -> {end} is not a GL exterior-power step")


@dataclass(frozen=True)
class HighestWeightWord:
    """Corner-sequence encoding of a highest weight word."""

    context: CartanContext
    steps: tuple[StepKind, ...]
    corners: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = len(self.steps)
        if len(self.corners) != r + 1:
            raise ValueError(f"{r} steps need {r + 1} corners, got {len(self.corners)}")
        if any(c != 0 for c in self.corners[0]):
            raise InvalidStep("a highest weight word starts at the zero weight")
        for k in range(r):
            a, b = self.corner(k), self.corner(k + 1)
            if not step_is_valid(self.context, self.steps[k], a, b):
                raise InvalidStep(f"corner {k}: {a} -> {b} is not a valid {self.steps[k]} step")

    @property
    def r(self) -> int:
        return len(self.steps)

    def corner(self, k: int) -> Weight:
        return Weight(self.context, self.corners[k])

    def weight(self) -> Weight:
        return self.corner(self.r)

    def replace_corner(self, k: int, w: Weight, swap_steps: Optional[tuple[int, int]] = None) -> "HighestWeightWord":
        corners = list(self.corners)
        corners[k] = w.coords
        steps = list(self.steps)
        if swap_steps is not None:
            a, b = swap_steps
            steps[a], steps[b] = steps[b], steps[a]
        return HighestWeightWord(self.context, tuple(steps), tuple(corners))

    def __str__(self) -> str:
        return " -> ".join("[" + ",".join(map(str, c)) + "]" for c in self.corners)


def word_from_corners(ctx: CartanContext, corners: Sequence[Sequence[int]],
                      steps: Optional[Sequence[StepKind]] = None) -> HighestWeightWord:
    """Build a word from raw corner vectors, inferring descriptors if absent."""
    tuples = tuple(tuple(int(x) for x in c) for c in corners)
    if steps is None:
        steps = tuple(
            infer_step_kind(ctx, Weight(ctx, tuples[k]), Weight(ctx, tuples[k + 1]))
            for k in range(len(tuples) - 1)
        )
    return HighestWeightWord(ctx, tuple(steps), tuples)


def complete_cell(kappa: Weight, lam: Weight, nu: Weight) -> Weight:
    """The minuscule local rule: the fourth corner mu = dom_W(kappa + nu - lam).

    kappa is the bottom-left corner, lam top-left, nu top-right; the result
    completes the cell so that (kappa -> mu) carries the top factor and
    (mu -> nu) the left factor.
    """
    ctx = kappa.context
    kind_left = infer_step_kind(ctx, kappa, lam)
    kind_top = infer_step_kind(ctx, lam, nu)
    mu = dom_w(kappa + nu - lam)
    if not (step_is_valid(ctx, kind_top, kappa, mu) and step_is_valid(ctx, kind_left, mu, nu)):
        raise InvalidStep(f"cell ({kappa}, {lam}, {nu}) does not complete minuscule-wise")
    return mu


def cell_is_valid(kappa: Weight, lam: Weight, nu: Weight, mu: Weight) -> bool:
    """Independent cell validator: checks the rule in both orientations."""
    try:
        if complete_cell(kappa, lam, nu) != mu:
            return False
        return complete_cell(kappa, mu, nu) == lam
    except InvalidStep:
        return False


def tau(w: HighestWeightWord, i: int) -> HighestWeightWord:
    """The local move at position i (1 <= i <= r-1)."""
    if not 1 <= i <= w.r - 1:
        raise ValueError(f"tau index {i} out of range for r={w.r}")
    mid = dom_w(w.corner(i - 1) + w.corner(i + 1) - w.corner(i))
    out = w.replace_corner(i, mid, swap_steps=(i - 1, i))
    return out


def tau_word(w: HighestWeightWord, indices: Iterable[int]) -> HighestWeightWord:
    """Apply a sequence of local moves, rightmost entry first."""
    for i in reversed(list(indices)):
        w = tau(w, i)
    return w


def commutor_prefix(w: HighestWeightWord, split: int) -> HighestWeightWord:
    """Move the factor at position `split` past the whole suffix.

    Realizes the factorized commutor tau_{r-1} o ... o tau_{split}; with
    split = r-1 it is a single local move.
    """
    if not 1 <= split <= w.r - 1:
        raise ValueError(f"split {split} out of range for r={w.r}")
    for i in range(split, w.r):
        w = tau(w, i)
    return w


def word_to_json(w: HighestWeightWord) -> dict:
    return {
        "context": {"family": w.context.family, "rank": w.context.rank},
        "steps": [str(s) for s in w.steps],
        "corners": [list(c) for c in w.corners],
    }


def word_from_json(obj: dict) -> HighestWeightWord:
    ctx = CartanContext(obj["context"]["family"], int(obj["context"]["rank"]))
    steps = None
    if obj.get("steps"):
        steps = tuple(parse_step_kind(s) for s in obj["steps"])
    return word_from_corners(ctx, obj["corners"], steps)


def parse_step_kind(text: str) -> StepKind:
    t = text.strip()
    if t == "vector":
        return VECTOR
    if t == "sl2":
        return SL2_STEP
    if t.startswith("exterior(") and t.endswith(")"):
        return exterior(int(t[len("exterior("):-1]))
    if t.startswith("exterior:"):
        return exterior(int(t.split(":", 1)[1]))
    raise ValueError(f"unknown step descriptor {text!r}")


def syt_to_word(rows: Sequence[Sequence[int]], rank: Optional[int] = None) -> HighestWeightWord:
    """Encode a standard tableau as a GL highest weight word: the k-th corner
    is the shape of the entries <= k."""
    rows = [list(r) for r in rows]
    r = sum(len(row) for row in rows)
    n = rank if rank is not None else max(len(rows), 1)
    if len(rows) > n:
        raise ValueError(f"tableau with {len(rows)} rows does not fit GL({n})")
    ctx = CartanContext(GL, n)
    corners = []
    for k in range(r + 1):
        shape = tuple(sum(1 for v in row if v <= k) for row in rows)
        corners.append(shape + (0,) * (n - len(rows)))
    return word_from_corners(ctx, corners)


def word_to_syt(w: HighestWeightWord) -> tuple[tuple[int, ...], ...]:
    """Inverse of syt_to_word: rows of the standard tableau."""
    if w.context.family != GL:
        raise ValueError("only GL words encode standard tableaux")
    rows: list[list[int]] = [[] for _ in range(w.context.rank)]
    for k in range(1, w.r + 1):
        diff = [a - b for a, b in zip(w.corners[k], w.corners[k - 1])]
        if sum(diff) != 1 or not all(d in (0, 1) for d in diff):
            raise ValueError("word is not single-box (vector) valued")
        rows[diff.index(1)].append(k)
    return tuple(tuple(row) for row in rows if row)


def enumerate_hw_words(ctx: CartanContext, kinds: Sequence[StepKind]) -> list[HighestWeightWord]:
    """All highest weight words with the given factor sequence."""
    zero = (0,) * ctx.rank
    partial: list[tuple[tuple[int, ...], ...]] = [(zero,)]
    for kind in kinds:
        orbit = kind.orbit(ctx)
        grown = []
        for corners in partial:
            last = corners[-1]
            for diff in orbit:
                nxt = tuple(a + b for a, b in zip(last, diff))
                if is_dominant(Weight(ctx, nxt)):
                    grown.append(corners + (nxt,))
        partial = grown
    return [HighestWeightWord(ctx, tuple(kinds), corners) for corners in partial]
