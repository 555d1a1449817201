"""Growth diagrams built from the minuscule local rule.

All diagrams are grids of dominant weights whose unit cells satisfy
mu = dom_W(kappa + nu - lambda) (kappa bottom-left, lambda top-left,
nu top-right, mu bottom-right).  Triangular diagrams compute the prefix
reversal s(1,r) (evacuation), two-row diagrams compute promotion
(= s(1,r) s(2,r), rightmost factor acting first), rectangular diagrams
compute rectification, and cylindrical windows carry the general action:
crossing the wall of s(p,q) reflects a diagonal band of the window and
local-rule completion supplies the rest.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cactus import CactusGen, CactusWord, act_word, reduce_to_s1q
from .weights import CartanContext, Weight, dom_w, is_dominant
from .words import (
    HighestWeightWord,
    InvalidStep,
    StepKind,
    complete_cell,
    cell_is_valid,
    infer_step_kind,
    word_from_corners,
)


class BadPath(ValueError):
    """A path through the cylinder is malformed or underdetermines it."""


# -- triangular diagrams and evacuation --------------------------------------


def triangle_rows(w: HighestWeightWord) -> list[list[Weight]]:
    """Rows of the triangular growth diagram with top edge w.

    Row a holds gamma(a, b) for b = a..r; gamma(a, a) = 0 and each new row
    is filled left to right by the local rule.
    """
    ctx = w.context
    r = w.r
    rows = [[w.corner(k) for k in range(r + 1)]]
    for a in range(1, r + 1):
        prev = rows[a - 1]
        row = [ctx.zero()]
        for b in range(a, r):
            kappa = row[-1]
            lam = prev[b - (a - 1)]
            nu = prev[b + 1 - (a - 1)]
            row.append(dom_w(kappa + nu - lam))
        rows.append(row)
    return rows


def evacuation(w: HighestWeightWord) -> HighestWeightWord:
    """The prefix reversal s(1,r) read off the right edge of the triangle."""
    rows = triangle_rows(w)
    r = w.r
    # gamma(a, b) sits at rows[a][b - a]; the right edge is column b = r
    corners = [rows[r - k][k].coords for k in range(r + 1)]
    return HighestWeightWord(w.context, tuple(reversed(w.steps)), tuple(corners))


def prefix_reversal(w: HighestWeightWord, q: int) -> HighestWeightWord:
    """Apply s(1,q): evacuate the length-q prefix, fixing the suffix corners."""
    if not 2 <= q <= w.r:
        raise ValueError(f"prefix length {q} out of range for r={w.r}")
    prefix = HighestWeightWord(w.context, w.steps[:q], w.corners[: q + 1])
    ev = evacuation(prefix)
    steps = ev.steps + w.steps[q:]
    corners = ev.corners + w.corners[q + 1:]
    return HighestWeightWord(w.context, steps, corners)


def act_gen(g: CactusGen, w: HighestWeightWord) -> HighestWeightWord:
    """The action of a single generator, via its s(1,*) reduction."""
    reduced = reduce_to_s1q(g, w.r)
    for h in reversed(reduced.gens):
        w = prefix_reversal(w, h.q)
    return w


def act(g: CactusWord, w: HighestWeightWord) -> HighestWeightWord:
    """Group action on highest weight words; rightmost generator acts first."""
    if g.r != w.r:
        raise ValueError(f"word on {g.r} strands cannot act on a length-{w.r} tensor word")
    return act_word(g, w, act_gen)


# -- two-row diagrams and promotion ------------------------------------------


def promotion(w: HighestWeightWord) -> HighestWeightWord:
    """Bottom edge of the two-row growth diagram with top edge w.

    Equals the action of s(1,r) s(2,r); the factor sequence rotates one
    step to the left.
    """
    r = w.r
    if r == 0:
        return w
    ctx = w.context
    bottom = [ctx.zero()]
    for j in range(1, r):
        bottom.append(dom_w(bottom[-1] + w.corner(j + 1) - w.corner(j)))
    bottom.append(w.weight())
    steps = w.steps[1:] + (w.steps[0],)
    return HighestWeightWord(ctx, steps, tuple(b.coords for b in bottom))


def promotion_inverse(w: HighestWeightWord) -> HighestWeightWord:
    """Top edge of the two-row diagram whose bottom edge is w."""
    r = w.r
    if r == 0:
        return w
    ctx = w.context
    top = [None] * (r + 1)
    top[r] = w.weight()
    for j in range(r - 1, 0, -1):
        top[j] = dom_w(w.corner(j - 1) + top[j + 1] - w.corner(j))
    top[0] = ctx.zero()
    steps = (w.steps[-1],) + w.steps[:-1]
    return HighestWeightWord(ctx, steps, tuple(t.coords for t in top))


# -- rectangular diagrams and rectification ----------------------------------


@dataclass(frozen=True)
class RectDiagram:
    """Completed (m+1) x (n+1) grid; grid[i][j] is the weight at row i
    (top row 0), column j (left column 0)."""

    grid: tuple[tuple[Weight, ...], ...]
    top_steps: tuple[StepKind, ...]
    left_steps: tuple[StepKind, ...]

    def bottom_row(self) -> tuple[Weight, ...]:
        return self.grid[-1]

    def right_column(self) -> tuple[Weight, ...]:
        return tuple(row[-1] for row in self.grid)


def complete_rectangle(
    top_corners: Sequence[Weight],
    left_corners: Sequence[Weight],
) -> RectDiagram:
    """Fill the rectangle from its top row and left column.

    left_corners runs bottom-to-top and must end at top_corners[0]; the
    bottom row is the rectified version of the top word and the right
    column its companion.
    """
    if left_corners[-1] != top_corners[0]:
        raise InvalidStep("top row and left column do not share their corner")
    ctx = top_corners[0].context
    m = len(left_corners) - 1
    n = len(top_corners) - 1
    top_steps = tuple(infer_step_kind(ctx, top_corners[j], top_corners[j + 1]) for j in range(n))
    left_steps = tuple(infer_step_kind(ctx, left_corners[i], left_corners[i + 1]) for i in range(m))
    rows = [list(top_corners)]
    for i in range(1, m + 1):
        prev = rows[i - 1]
        row = [left_corners[m - i]]
        for j in range(1, n + 1):
            row.append(complete_cell(row[-1], prev[j - 1], prev[j]))
        rows.append(row)
    return RectDiagram(tuple(tuple(r) for r in rows), top_steps, left_steps)


def rectify_skew(top_corners: Sequence[Weight], left_word: HighestWeightWord) -> HighestWeightWord:
    """Rectification through a rectangle: left column the (highest weight)
    padding word, top row the skew corner path; returns the bottom row as a
    highest weight word."""
    left = [left_word.corner(k) for k in range(left_word.r + 1)]
    diag = complete_rectangle(top_corners, left)
    return word_from_corners(left_word.context, [w.coords for w in diag.bottom_row()])


# -- cylindrical windows -------------------------------------------------------


@dataclass(frozen=True)
class CylWindow:
    """Rows 0..depth-1 of a cylindrical growth diagram.

    Row i holds gamma(i, i..i+r); gamma(i, i) = 0, gamma(i, i+r) = shape,
    and row i+1 is the promotion of row i.  Words are read with the factor
    sequence of row 0 rotating left once per row.
    """

    context: CartanContext
    steps: tuple[StepKind, ...]
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def depth(self) -> int:
        return len(self.rows)

    def value(self, i: int, j: int) -> Weight:
        if not (0 <= i < self.depth and i <= j <= i + self.r):
            raise KeyError(f"({i}, {j}) outside the window")
        return Weight(self.context, self.rows[i][j - i])

    def row_word(self, i: int) -> HighestWeightWord:
        steps = self.steps[i % self.r:] + self.steps[: i % self.r]
        return HighestWeightWord(self.context, steps, self.rows[i])

    def shape(self) -> Weight:
        return Weight(self.context, self.rows[0][-1])


def build_cylinder(w: HighestWeightWord, depth: int) -> CylWindow:
    """The unique window of `depth` rows with w on its top row."""
    rows = [w.corners]
    cur = w
    for _ in range(depth - 1):
        cur = promotion(cur)
        rows.append(cur.corners)
    return CylWindow(w.context, w.steps, tuple(rows))


def validate_window(win: CylWindow) -> bool:
    """Independent cell-by-cell check of every unit square and boundary."""
    r = win.r
    shape = win.rows[0][-1]
    for i, row in enumerate(win.rows):
        if any(c != 0 for c in row[0]) or row[-1] != shape:
            return False
        if not all(is_dominant(Weight(win.context, c)) for c in row):
            return False
    for i in range(win.depth - 1):
        for j in range(i + 1, i + r):
            kappa = win.value(i + 1, j)
            lam = win.value(i, j)
            nu = win.value(i, j + 1)
            mu = win.value(i + 1, j + 1)
            if not cell_is_valid(kappa, lam, nu, mu):
                return False
    return True


def cylinder_from_path(
    ctx: CartanContext,
    path: Sequence[tuple[int, int]],
    labels: Sequence[Sequence[int]],
    depth: Optional[int] = None,
) -> CylWindow:
    """Reconstruct a window from the labels along a monotone path.

    The path starts on the zero diagonal (i_0 = j_0), each step is (-1, 0)
    or (0, 1), and it ends on the shape diagonal j - i = r.  The window
    spanned by the path's rows (or `depth` rows from the topmost) is filled
    by local-rule completion from the boundary conditions.
    """
    if not path or path[0][0] != path[0][1]:
        raise BadPath("path must start on the main diagonal")
    r = len(path) - 1
    for (i0, j0), (i1, j1) in zip(path, path[1:]):
        if (i1 - i0, j1 - j0) not in ((-1, 0), (0, 1)):
            raise BadPath(f"illegal path step {(i0, j0)} -> {(i1, j1)}")
    if path[-1][1] - path[-1][0] != r:
        raise BadPath("path must end on the shape diagonal")
    if len(labels) != r + 1:
        raise BadPath(f"need {r + 1} labels, got {len(labels)}")

    known: dict[tuple[int, int], tuple[int, ...]] = {}
    for (i, j), lab in zip(path, labels):
        known[(i, j)] = tuple(lab)
    top = min(i for i, _ in path)
    bottom = max(i for i, _ in path)
    if depth is None:
        depth = bottom - top + 1
    shape = tuple(labels[-1])
    if any(c != 0 for c in labels[0]):
        raise BadPath("path must start at the zero weight")
    for i in range(top, top + max(depth, bottom - top + 1)):
        known[(i, i)] = (0,) * ctx.rank
        known[(i, i + r)] = shape

    sweep_bottom = max(top + depth - 1, bottom)

    def fill_sweep() -> bool:
        changed = False
        for i in range(top, sweep_bottom):
            for j in range(i + 1, i + r):
                corners = {
                    "kappa": known.get((i + 1, j)),
                    "lam": known.get((i, j)),
                    "nu": known.get((i, j + 1)),
                    "mu": known.get((i + 1, j + 1)),
                }
                missing = [k for k, v in corners.items() if v is None]
                if len(missing) != 1:
                    continue
                get = lambda k: Weight(ctx, corners[k])
                if missing == ["mu"]:
                    known[(i + 1, j + 1)] = dom_w(get("kappa") + get("nu") - get("lam")).coords
                elif missing == ["lam"]:
                    known[(i, j)] = dom_w(get("kappa") + get("nu") - get("mu")).coords
                else:
                    continue
                changed = True
        return changed

    while fill_sweep():
        pass
    rows = []
    for i in range(top, top + depth):
        row = []
        for j in range(i, i + r + 1):
            if (i, j) not in known:
                raise BadPath(f"path does not determine vertex ({i}, {j})")
            row.append(known[(i, j)])
        rows.append(tuple(row))
    top_word = word_from_corners(ctx, rows[0])
    win = CylWindow(ctx, top_word.steps, tuple(rows))
    if not validate_window(win):
        raise InvalidStep("completed window fails cell validation")
    return win


def wall_cross(g: CactusGen, win: CylWindow) -> CylWindow:
    """Cross the wall of s(p,q): reflect the band between the diagonals of
    p-1 and q and complete by local rules.

    New row p-1 reads the old column q upside down on the reflected range,
    gamma'(p-1, j) = gamma(p+q-1-j, q) for p-1 <= j <= q, and is unchanged
    beyond q; completion upward recovers the new top row, which equals the
    action of s(p,q) on the old top row.
    """
    p, q = g.p, g.q
    r = win.r
    if q > r:
        raise ValueError(f"{g} out of bounds for r={r}")
    deep = win if win.depth >= q + 1 else build_cylinder(win.row_word(0), q + 1)
    ctx = win.context
    band = [deep.value(p + q - 1 - j, q) for j in range(p - 1, q + 1)]
    tail = [deep.value(p - 1, j) for j in range(q + 1, p - 1 + r + 1)]
    anchor_corners = band + tail

    rows_up: list[list[Weight]] = [anchor_corners]
    shape = deep.shape()
    for k in range(p - 2, -1, -1):
        below = rows_up[0]
        row: list[Weight] = [None] * (r + 1)
        row[r] = shape
        row[0] = ctx.zero()
        for t in range(r - 1, 0, -1):
            # cell at (k, k+t): kappa = gamma'(k+1, k+t), mu = gamma'(k+1, k+t+1)
            kappa = below[t - 1]
            nu = row[t + 1]
            mu = below[t]
            row[t] = dom_w(kappa + nu - mu)
        rows_up.insert(0, row)

    new_perm_steps = list(win.steps)
    new_perm_steps[p - 1: q] = reversed(new_perm_steps[p - 1: q])
    top = HighestWeightWord(ctx, tuple(new_perm_steps), tuple(wt.coords for wt in rows_up[0]))
    out = build_cylinder(top, win.depth)
    if out.rows[p - 1] != tuple(wt.coords for wt in anchor_corners):
        raise InvalidStep("wall crossing failed to re-derive its anchor row")
    return out


# -- ascii rendering -----------------------------------------------------------


def render_word_ascii(w: HighestWeightWord) -> str:
    return "  ".join(_shape_str(c) for c in w.corners)


def render_window_ascii(win: CylWindow) -> str:
    cells = [[_shape_str(c) for c in row] for row in win.rows]
    width = max(len(s) for row in cells for s in row) + 1
    lines = []
    for i, row in enumerate(cells):
        pad = " " * (width * i)
        lines.append(pad + "".join(s.ljust(width) for s in row))
    return "\n".join(lines)


def render_triangle_ascii(w: HighestWeightWord) -> str:
    rows = triangle_rows(w)
    cells = [[_shape_str(wt.coords) for wt in row] for row in rows]
    width = max(len(s) for row in cells for s in row) + 1
    lines = []
    for i, row in enumerate(cells):
        pad = " " * (width * i)
        lines.append(pad + "".join(s.ljust(width) for s in row))
    return "\n".join(lines)


def _shape_str(coords: Sequence[int]) -> str:
    trimmed = list(coords)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    if not trimmed:
        return "[]"
    return "[" + "".join(str(c) for c in trimmed) + "]" if all(0 <= c <= 9 for c in trimmed) else str(tuple(trimmed))
