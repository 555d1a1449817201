"""Exact seminormal representations of the Hecke algebra H_r(q).

The representation attached to a shape of size r has the standard tableaux
of that shape as basis, ordered row-reading lexicographically.  Matrices
are exact rational functions of q throughout.

Conventions, fixed by requiring the defining relations to hold exactly
(u_i^2 = -[2] u_i, the modified braid relation, distant commutation, and
tau_i^2 = 1):

    a = c(i+1) - c(i)   (signed axial distance, c = column - row)

    u_i   T = -([a-1]/[a]) T + coeff * (T with i, i+1 swapped)
    tau_i T =     (1/[a])  T + coeff * (T with i, i+1 swapped)

with coeff = 1 when a > 0 and [a-1][a+1]/[a]^2 when a < 0, and the swap
term dropped when the swapped filling is not standard (so u_i acts by 0 on
an adjacent same-row pair and by -[2] on an adjacent same-column pair).
t_i = q + u_i, and the multiplicative Jucys-Murphy element
J_i = (t_i ... t_1)(t_1 ... t_i) is diagonal with entries q^(2 c(i+1)).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .cactus import CactusWord, s_to_tau
from .oracles import StandardTableau, enumerate_syt
from .qalgebra import LaurentPoly, QMatrix, RationalFunction, q_int


class IndexOutOfRange(ValueError):
    """Generator index outside 1..r-1 for the representation."""


@dataclass(frozen=True)
class ContentData:
    """Content vector c(1..r) and axial distances of a standard tableau."""

    tableau: StandardTableau
    contents: tuple[int, ...]

    @staticmethod
    def of(t: StandardTableau) -> "ContentData":
        return ContentData(t, tuple(t.content(k) for k in range(1, t.n + 1)))

    def axial(self, i: int) -> int:
        return self.contents[i] - self.contents[i - 1]


class SeminormalRep:
    """Basis bookkeeping for one irreducible seminormal representation."""

    def __init__(self, shape: Sequence[int]):
        self.shape = tuple(s for s in shape if s)
        self.r = sum(self.shape)
        self.basis: tuple[StandardTableau, ...] = tuple(
            sorted(enumerate_syt(self.shape), key=lambda t: t.rows)
        )
        self.dimension = len(self.basis)
        self._index = {t.rows: k for k, t in enumerate(self.basis)}
        self._contents = [ContentData.of(t) for t in self.basis]

    def index(self, t: StandardTableau) -> int:
        return self._index[t.rows]

    def swap(self, k: int, i: int) -> Union[int, None]:
        """Index of the basis tableau with i and i+1 exchanged, or None when
        that filling is not standard."""
        t = self.basis[k]
        rows = tuple(tuple({i: i + 1, i + 1: i}.get(v, v) for v in row) for row in t.rows)
        try:
            return self._index[StandardTableau(rows).rows]
        except ValueError:
            return None

    def content(self, k: int, entry: int) -> int:
        return self._contents[k].contents[entry - 1]

    def axial(self, k: int, i: int) -> int:
        return self._contents[k].axial(i)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.r - 1:
            raise IndexOutOfRange(f"generator index {i} out of range for r={self.r}")

    def __repr__(self) -> str:
        return f"SeminormalRep(shape={self.shape}, dim={self.dimension})"


def _ratio(num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
    return RationalFunction(num, den)


def _swap_coeff(a: int) -> RationalFunction:
    if a > 0:
        return RationalFunction.one()
    return _ratio(q_int(a - 1) * q_int(a + 1), q_int(a) * q_int(a))


def u_matrix(rep: SeminormalRep, i: int) -> QMatrix:
    """Matrix of the Hecke generator u_i (columns indexed by input tableaux)."""
    rep._check_index(i)
    zero = RationalFunction.zero()
    cols = []
    for k in range(rep.dimension):
        a = rep.axial(k, i)
        col = [zero] * rep.dimension
        col[k] = -_ratio(q_int(a - 1), q_int(a))
        j = rep.swap(k, i)
        if j is not None:
            col[j] = _swap_coeff(a)
        cols.append(col)
    return QMatrix([[cols[c][r] for c in range(rep.dimension)] for r in range(rep.dimension)])


def t_matrix(rep: SeminormalRep, i: int, inverse: bool = False) -> QMatrix:
    """t_i = q + u_i; the inverse is q^-1 + u_i."""
    scalar = RationalFunction.q_power(-1 if inverse else 1)
    return u_matrix(rep, i) + QMatrix.identity(rep.dimension).scale(scalar)


def tau_matrix(rep: SeminormalRep, i: int) -> QMatrix:
    """The involutive local-rule generator tau_i."""
    rep._check_index(i)
    zero = RationalFunction.zero()
    cols = []
    for k in range(rep.dimension):
        a = rep.axial(k, i)
        col = [zero] * rep.dimension
        col[k] = _ratio(LaurentPoly.one(), q_int(a))
        j = rep.swap(k, i)
        if j is not None:
            col[j] = _swap_coeff(a)
        cols.append(col)
    return QMatrix([[cols[c][r] for c in range(rep.dimension)] for r in range(rep.dimension)])


def jm_matrix(rep: SeminormalRep, i: int, power: Union[int, Fraction] = 1) -> QMatrix:
    """J_i^power, diagonal with entries q^(2 c(i+1) power); power may be a
    half-integer.  J_0 is the identity."""
    power = Fraction(power)
    if power not in (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2)):
        raise ValueError(f"unsupported power {power}")
    if not 0 <= i <= rep.r - 1:
        raise IndexOutOfRange(f"Jucys-Murphy index {i} out of range for r={rep.r}")
    diag = []
    for k in range(rep.dimension):
        exponent = Fraction(2 * rep.content(k, i + 1)) * power
        if exponent.denominator != 1:
            raise ValueError("half powers need even content doubling")
        diag.append(RationalFunction.q_power(int(exponent)))
    return QMatrix.diagonal(diag)


def jm_word_product(rep: SeminormalRep, i: int) -> QMatrix:
    """J_i computed from its braid word (t_i ... t_1)(t_1 ... t_i)."""
    if not 0 <= i <= rep.r - 1:
        raise IndexOutOfRange(f"Jucys-Murphy index {i} out of range for r={rep.r}")
    out = QMatrix.identity(rep.dimension)
    for k in range(i, 0, -1):
        out = out * t_matrix(rep, k)
    for k in range(1, i + 1):
        out = out * t_matrix(rep, k)
    return out


def sigma_vv(rep: SeminormalRep) -> QMatrix:
    """The two-factor commutor 1 + (2/[2]) u_1; equals tau_1."""
    if rep.r < 2:
        raise IndexOutOfRange("sigma_VV needs r >= 2")
    two_over = RationalFunction(LaurentPoly(2), q_int(2))
    return QMatrix.identity(rep.dimension) + u_matrix(rep, 1).scale(two_over)


def t_squared_inverse_sqrt(rep: SeminormalRep) -> QMatrix:
    """(t_1^2)^(-1/2) via the two-term spectral formula
    q^-1 (1 + u_1/[2]) + q (-u_1/[2])."""
    if rep.r < 2:
        raise IndexOutOfRange("needs r >= 2")
    u = u_matrix(rep, 1)
    coeff = RationalFunction(LaurentPoly({-1: 1}) - LaurentPoly({1: 1}), q_int(2))
    return QMatrix.identity(rep.dimension).scale(RationalFunction.q_power(-1)) + u.scale(coeff)


def tau_via_jm(rep: SeminormalRep, i: int) -> QMatrix:
    """tau_i = J_(i-1)^(1/2) t_i J_i^(-1/2): the unitarised factorization."""
    half = Fraction(1, 2)
    return jm_matrix(rep, i - 1, half) * t_matrix(rep, i) * jm_matrix(rep, i, -half)


def cactus_matrix(w: CactusWord, rep: SeminormalRep) -> QMatrix:
    """Image of a cactus word: convert each generator to its tau word and
    multiply, rightmost generator acting first."""
    out = QMatrix.identity(rep.dimension)
    taus = {i: tau_matrix(rep, i) for i in range(1, rep.r)} if rep.r >= 2 else {}
    for g in w.gens:
        for i in s_to_tau(g):
            if i >= rep.r:
                raise IndexOutOfRange(f"tau_{i} out of range for r={rep.r}")
        mat = QMatrix.identity(rep.dimension)
        for i in s_to_tau(g):
            mat = mat * taus[i]
        out = out * mat
    return out


def tau_word_matrix(indices: Sequence[int], rep: SeminormalRep) -> QMatrix:
    out = QMatrix.identity(rep.dimension)
    for i in indices:
        out = out * tau_matrix(rep, i)
    return out
