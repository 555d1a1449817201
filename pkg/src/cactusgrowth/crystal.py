"""Finite normal crystals as explicit labelled graphs.

A crystal is a finite set with partial injective nilpotent raising maps e_i
and a weight per element; f_i, eps_i and phi_i are derived.  Tensor products
follow the rule e_i(x (x) y) = e_i(x) (x) y when phi_i(x) >= eps_i(y), else
x (x) e_i(y).  Constructors cover the minuscule crystals used by the local
rules: GL(n) exterior powers of the vector representation, the SL2 doublet,
and the Sp(2n) vector representation.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .weights import GL, SL2, SP, CartanContext, ContextMismatch, Weight, weyl_orbit

DEFAULT_SIZE_CAP = 10**6


class CyclicGraph(ValueError):
    """A raising map has a cycle, violating nilpotence."""


class BadParameter(ValueError):
    """Invalid constructor parameter."""


class SizeLimit(RuntimeError):
    """A tensor power exceeded the configured element cap."""


class Crystal:
    """Explicit finite crystal: elements 0..n-1 with labels and e_i maps."""

    def __init__(
        self,
        context: CartanContext,
        labels: Iterable[str],
        e_maps: dict[int, dict[int, int]],
        element_weights: Iterable[tuple[int, ...]],
    ):
        self.context = context
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self.weights = tuple(tuple(w) for w in element_weights)
        if len(self.weights) != self.n:
            raise ValueError("weights and labels disagree in length")
        self.e_maps = {i: dict(e_maps.get(i, {})) for i in context.index_set()}
        self._f_maps = {i: {y: x for x, y in m.items()} for i, m in self.e_maps.items()}
        self._validate()
        self._eps_cache: dict[tuple[int, int], int] = {}
        self._phi_cache: dict[tuple[int, int], int] = {}

    def _validate(self) -> None:
        for i, m in self.e_maps.items():
            if len(set(m.values())) != len(m):
                raise ValueError(f"e_{i} is not injective")
            for x in m:
                seen = {x}
                y = x
                while y in m:
                    y = m[y]
                    if y in seen:
                        raise CyclicGraph(f"e_{i} has a cycle through element {x}")
                    seen.add(y)
            root = self.context.simple_root(i)
            for x, y in m.items():
                got = tuple(a - b for a, b in zip(self.weights[y], self.weights[x]))
                if got != root:
                    raise ValueError(
                        f"weight mismatch on e_{i}: wt({self.labels[y]}) - wt({self.labels[x]}) = {got} != {root}"
                    )

    # -- basic queries -------------------------------------------------------

    def weight(self, x: int) -> Weight:
        return Weight(self.context, self.weights[x])

    def e(self, i: int, x: int) -> Optional[int]:
        return self.e_maps[i].get(x)

    def f(self, i: int, x: int) -> Optional[int]:
        return self._f_maps[i].get(x)

    def eps(self, i: int, x: int) -> int:
        key = (i, x)
        if key not in self._eps_cache:
            k, y = 0, x
            while y in self.e_maps[i]:
                y = self.e_maps[i][y]
                k += 1
            self._eps_cache[key] = k
        return self._eps_cache[key]

    def phi(self, i: int, x: int) -> int:
        key = (i, x)
        if key not in self._phi_cache:
            k, y = 0, x
            while y in self._f_maps[i]:
                y = self._f_maps[i][y]
                k += 1
            self._phi_cache[key] = k
        return self._phi_cache[key]

    def is_highest_weight(self, x: int) -> bool:
        return all(self.eps(i, x) == 0 for i in self.context.index_set())

    def highest_weight_elements(self) -> list[int]:
        return [x for x in range(self.n) if self.is_highest_weight(x)]

    def rectify(self, x: int) -> int:
        """The highest weight element in the connected component of x,
        reached by exhaustively applying raising operators."""
        moved = True
        while moved:
            moved = False
            for i in self.context.index_set():
                y = self.e_maps[i].get(x)
                if y is not None:
                    x = y
                    moved = True
                    break
        return x

    def components(self) -> list[list[int]]:
        """Connected components of the underlying (e union f) graph."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for m in self.e_maps.values():
            for x, y in m.items():
                adj[x].append(y)
                adj[y].append(x)
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return f"Crystal({self.context}, n={self.n})"


def tensor(b: Crystal, c: Crystal, size_cap: int = DEFAULT_SIZE_CAP) -> Crystal:
    """Tensor product crystal on the set B x C."""
    if b.context != c.context:
        raise ContextMismatch(f"{b.context} vs {c.context}")
    n = b.n * c.n
    if n > size_cap:
        raise SizeLimit(f"tensor product would have {n} elements (cap {size_cap})")
    idx = lambda x, y: x * c.n + y
    labels = [f"{lx}(x){ly}" for lx in b.labels for ly in c.labels]
    wts = [tuple(a + d for a, d in zip(b.weights[x], c.weights[y])) for x in range(b.n) for y in range(c.n)]
    e_maps: dict[int, dict[int, int]] = {}
    for i in b.context.index_set():
        m: dict[int, int] = {}
        for x in range(b.n):
            for y in range(c.n):
                if b.phi(i, x) >= c.eps(i, y):
                    ex = b.e(i, x)
                    if ex is not None:
                        m[idx(x, y)] = idx(ex, y)
                else:
                    ey = c.e(i, y)
                    if ey is not None:
                        m[idx(x, y)] = idx(x, ey)
        e_maps[i] = m
    return Crystal(b.context, labels, e_maps, wts)


def tensor_power(c: Crystal, r: int, size_cap: int = DEFAULT_SIZE_CAP) -> Crystal:
    if r < 0:
        raise BadParameter("tensor power needs r >= 0")
    out = trivial_crystal(c.context)
    for _ in range(r):
        out = tensor(out, c, size_cap=size_cap)
    return out


def trivial_crystal(context: CartanContext) -> Crystal:
    return Crystal(context, ("1",), {}, ((0,) * context.rank,))


def decompose(c: Crystal, r: int, size_cap: int = DEFAULT_SIZE_CAP) -> dict[tuple[int, ...], tuple[int, int]]:
    """Component census of the r-th tensor power of c.

    Returns {highest weight coords: (component count, component size)};
    the totals satisfy sum(count * size) == len(c)^r.
    """
    power = tensor_power(c, r, size_cap=size_cap)
    out: dict[tuple[int, ...], tuple[int, int]] = {}
    for comp in power.components():
        hws = [x for x in comp if power.is_highest_weight(x)]
        if len(hws) != 1:
            raise ValueError(f"component with {len(hws)} highest weight elements")
        key = power.weights[hws[0]]
        count, size = out.get(key, (0, 0))
        if count and size != len(comp):
            raise ValueError(f"components of weight {key} have unequal sizes")
        out[key] = (count + 1, len(comp))
    total = sum(count * size for count, size in out.values())
    if total != c.n**r:
        raise ValueError(f"census total {total} != {c.n}^{r}")
    return out


def build_minuscule(context: CartanContext, which: str, k: int = 1) -> Crystal:
    """Constructors for the supported minuscule crystals.

    which: 'vector' (GL(n) or Sp(2n)), 'exterior' with 1 <= k <= n (GL(n)),
    or 'sl2' (the two-element SL2 crystal).
    """
    fam = context.family
    n = context.rank
    if which == "sl2" or fam == SL2:
        if fam != SL2 or which not in ("sl2", "vector"):
            raise BadParameter(f"{which!r} needs an SL2 context")
        return Crystal(context, ("+", "-"), {1: {1: 0}}, ((1,), (-1,)))
    if fam == GL and which == "vector":
        which, k = "exterior", 1
    if fam == GL and which == "exterior":
        if not 0 <= k <= n:
            raise BadParameter(f"exterior power k={k} out of range for GL({n})")
        subsets = list(combinations(range(1, n + 1), k))
        index = {s: j for j, s in enumerate(subsets)}
        labels = ["".join(str(a) for a in s) for s in subsets]
        wts = [tuple(1 if a in s else 0 for a in range(1, n + 1)) for s in subsets]
        e_maps: dict[int, dict[int, int]] = {}
        for i in context.index_set():
            m = {}
            for s in subsets:
                if i + 1 in s and i not in s:
                    t = tuple(sorted(set(s) - {i + 1} | {i}))
                    m[index[s]] = index[t]
            e_maps[i] = m
        return Crystal(context, labels, e_maps, wts)
    if fam == SP and which == "vector":
        labels = [str(a) for a in range(1, n + 1)] + [f"-{a}" for a in range(n, 0, -1)]
        wts = [tuple(1 if b == a else 0 for b in range(1, n + 1)) for a in range(1, n + 1)]
        wts += [tuple(-1 if b == a else 0 for b in range(1, n + 1)) for a in range(n, 0, -1)]
        e_maps = {i: {} for i in context.index_set()}
        for a in range(1, n):
            e_maps[a][a] = a - 1
        e_maps[n][n] = n - 1
        for a in range(n - 1, 0, -1):
            e_maps[a][2 * n - a] = 2 * n - a - 1
        return Crystal(context, labels, e_maps, wts)
    raise BadParameter(f"no minuscule constructor for {which!r} in {context}")


def crystal_to_json(c: Crystal) -> dict:
    return {
        "context": {"family": c.context.family, "rank": c.context.rank},
        "elements": list(c.labels),
        "weights": [list(w) for w in c.weights],
        "edges": {str(i): sorted([x, y] for x, y in m.items()) for i, m in c.e_maps.items()},
    }


def weyl_orbit_weights(c: Crystal) -> bool:
    """True when the Weyl group acts transitively on the weights of c."""
    wts = {w for w in c.weights}
    first = Weight(c.context, c.weights[0])
    return wts == set(weyl_orbit(first))
