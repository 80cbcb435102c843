"""Structure of the Lorentz Lie algebra o(n,1).

The algebra is presented on its standard basis: the rotation generators
``a_ij = e_ij - e_ji`` for 1 <= i < j <= n spanning the compact part
k = so(n), and the boost generators ``s_i = e_{i,n+1} + e_{n+1,i}`` for
1 <= i <= n spanning the noncompact part p.  Basis order is fixed once and
for all: all alphas in lexicographic order, then s_1 .. s_n.  Golden files
and adjoint matrices depend on this ordering.

Brackets come in two independent implementations that the test suite holds
to exact agreement: index rules (StructureTable) and matrix commutators
(bracket_matrix on the basis matrices).  Everything at this level is exact
integer arithmetic; floating point enters only in downstream analysis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np


class Metric(Enum):
    """Inner product in force on o(n,1).

    CANONICAL is the positive form built from the Killing form and the
    Cartan involution; its Gram matrix on the standard basis is
    (2n-2) * identity.  SCALED divides by 2(n-1), normalizing the Gram
    matrix to the identity (and the quotient hyperbolic space to
    curvature -1).
    """

    CANONICAL = "canonical"
    SCALED = "scaled"


def gram_diagonal(n: int, metric: Metric) -> float:
    """Diagonal entry of the Gram matrix on the standard basis."""
    if metric is Metric.CANONICAL:
        return float(2 * n - 2)
    return 1.0


@dataclass(frozen=True, order=True)
class BasisIndex:
    """One standard basis element: Alpha(i, j) with i < j, or Sigma(i).

    ``kind`` is 'a' for rotations, 's' for boosts.  Sigma stores j = 0 so
    that lexicographic dataclass ordering is never consulted across kinds
    (the module's basis order is defined by basis_indices, not by sorting).
    """

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind == "a":
            if not (1 <= self.i < self.j):
                raise ValueError(f"alpha requires 1 <= i < j, got ({self.i}, {self.j})")
        elif self.kind == "s":
            if self.i < 1 or self.j != 0:
                raise ValueError(f"sigma requires i >= 1 and no j, got ({self.i}, {self.j})")
        else:
            raise ValueError(f"unknown basis kind {self.kind!r}")

    @property
    def is_compact(self) -> bool:
        return self.kind == "a"

    def label(self) -> str:
        return f"a{self.i}{self.j}" if self.kind == "a" else f"s{self.i}"


def alg_dim(n: int) -> int:
    """dim o(n,1) = n(n+1)/2."""
    return n * (n + 1) // 2


def compact_dim(n: int) -> int:
    """dim so(n) = n(n-1)/2, the number of alpha generators."""
    return n * (n - 1) // 2


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"o(n,1) requires n >= 2, got n={n}")


@lru_cache(maxsize=None)
def basis_indices(n: int) -> tuple[BasisIndex, ...]:
    """Standard basis order: a_12, a_13, ..., a_{n-1,n}, s_1, ..., s_n."""
    _check_n(n)
    idx = [BasisIndex("a", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    idx += [BasisIndex("s", i) for i in range(1, n + 1)]
    return tuple(idx)


def lorentz_form(n: int) -> np.ndarray:
    """The (n+1)x(n+1) diagonal form J = diag(1,...,1,-1) defining O(n,1)."""
    _check_n(n)
    J = np.eye(n + 1, dtype=np.int64)
    J[n, n] = -1
    return J


def build_basis(n: int) -> list[tuple[BasisIndex, np.ndarray]]:
    """Standard basis matrices of o(n,1), as (index, (n+1)x(n+1) int matrix).

    Every returned matrix M satisfies J M^T J = -M exactly.
    """
    _check_n(n)
    out = []
    for b in basis_indices(n):
        M = np.zeros((n + 1, n + 1), dtype=np.int64)
        if b.kind == "a":
            M[b.i - 1, b.j - 1] = 1
            M[b.j - 1, b.i - 1] = -1
        else:
            M[b.i - 1, n] = 1
            M[n, b.i - 1] = 1
        out.append((b, M))
    return out


@lru_cache(maxsize=None)
def _basis_matrix_stack(n: int) -> np.ndarray:
    """(d, n+1, n+1) int64 stack of the basis matrices, cached."""
    return np.stack([M for _, M in build_basis(n)])


def bracket_matrix(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix commutator AB - BA.  Exact on integer inputs."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"bracket_matrix needs equal square shapes, got {A.shape} and {B.shape}")
    return A @ B - B @ A


class StructureTable:
    """Signed bracket table [e_a, e_b] = sign * e_c over the standard basis.

    Entries are stored for a < b in basis order only; antisymmetry supplies
    the rest by construction.  Built purely from the index rules:

        [a_ij, a_kl] = d_jk a_il + d_jl a_ki + d_il a_jk + d_ki a_lj
        [a_ij, s_k]  = d_kj s_i - d_ik s_j
        [s_i,  s_j]  = a_ij

    with a_ji read as -a_ij.  The matrix commutator is the independent
    oracle for every entry.
    """

    def __init__(self, n: int):
        _check_n(n)
        self.n = n
        self.indices = basis_indices(n)
        self.dim = len(self.indices)
        self._pos = {b: k for k, b in enumerate(self.indices)}
        self._entries: dict[tuple[int, int], tuple[int, int]] = {}
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                e = self._bracket_rule(self.indices[a], self.indices[b])
                if e is not None:
                    self._entries[(a, b)] = e

    def _alpha(self, i: int, j: int) -> tuple[int, int] | None:
        if i == j:
            return None
        if i < j:
            return (1, self._pos[BasisIndex("a", i, j)])
        return (-1, self._pos[BasisIndex("a", j, i)])

    def _bracket_rule(self, x: BasisIndex, y: BasisIndex) -> tuple[int, int] | None:
        if x.kind == "a" and y.kind == "a":
            i, j, k, l = x.i, x.j, y.i, y.j
            # at most one delta fires for distinct ordered pairs
            if j == k:
                return self._alpha(i, l)
            if j == l:
                return self._alpha(k, i)
            if i == l:
                return self._alpha(j, k)
            if i == k:
                return self._alpha(l, j)
            return None
        if x.kind == "a" and y.kind == "s":
            i, j, k = x.i, x.j, y.i
            if k == j:
                return (1, self._pos[BasisIndex("s", i)])
            if k == i:
                return (-1, self._pos[BasisIndex("s", j)])
            return None
        if x.kind == "s" and y.kind == "a":
            e = self._bracket_rule(y, x)
            return None if e is None else (-e[0], e[1])
        return self._alpha(x.i, y.i)

    def entry(self, a: int, b: int) -> tuple[int, int] | None:
        """(sign, c) with [e_a, e_b] = sign * e_c, or None when zero."""
        if a == b:
            return None
        if a < b:
            return self._entries.get((a, b))
        e = self._entries.get((b, a))
        return None if e is None else (-e[0], e[1])

    @property
    def tensor(self) -> np.ndarray:
        """Dense int64 tensor C with [e_a, e_b] = sum_c C[a,b,c] e_c."""
        C = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for (a, b), (sign, c) in self._entries.items():
            C[a, b, c] = sign
            C[b, a, c] = -sign
        return C

    def to_triples(self) -> list[tuple[str, str, str]]:
        """Nonzero entries (a < b) as label triples, for golden-file dumps."""
        out = []
        for (a, b), (sign, c) in sorted(self._entries.items()):
            lhs = self.indices[c].label()
            out.append((self.indices[a].label(), self.indices[b].label(),
                        lhs if sign > 0 else "-" + lhs))
        return out

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "brackets": self.to_triples()})


@lru_cache(maxsize=None)
def structure_table(n: int) -> StructureTable:
    return StructureTable(n)


@lru_cache(maxsize=None)
def structure_tensor(n: int) -> np.ndarray:
    """Cached dense structure tensor as float64 (read-only)."""
    C = structure_table(n).tensor.astype(float)
    C.setflags(write=False)
    return C


class AlgebraVector:
    """Coefficient vector over the standard basis of o(n,1).

    Immutable after construction; the coefficient array is copied in and
    write-protected.  The k part lives on the alpha coordinates, the p part
    on the sigma coordinates.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        _check_n(n)
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (alg_dim(n),):
            raise ValueError(f"o({n},1) vector needs {alg_dim(n)} coefficients, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, *_):
        raise AttributeError("AlgebraVector is immutable")

    def __repr__(self):
        return f"AlgebraVector(n={self.n}, coeffs={self.coeffs!r})"

    def k_part(self) -> "AlgebraVector":
        out = self.coeffs.copy()
        out[compact_dim(self.n):] = 0.0
        return AlgebraVector(self.n, out)

    def p_part(self) -> "AlgebraVector":
        out = self.coeffs.copy()
        out[:compact_dim(self.n)] = 0.0
        return AlgebraVector(self.n, out)


def basis_vector(n: int, b: BasisIndex | int) -> AlgebraVector:
    """Unit coefficient vector for one basis element (by index or position)."""
    pos = b if isinstance(b, int) else basis_indices(n).index(b)
    coeffs = np.zeros(alg_dim(n))
    coeffs[pos] = 1.0
    return AlgebraVector(n, coeffs)


def _require_same_n(v: AlgebraVector, w: AlgebraVector) -> int:
    if v.n != w.n:
        raise ValueError(f"dimension mismatch: n={v.n} vs n={w.n}")
    return v.n


def bracket(v: AlgebraVector, w: AlgebraVector, table: StructureTable | None = None) -> AlgebraVector:
    """Bilinear extension of the structure table to coefficient vectors."""
    n = _require_same_n(v, w)
    if table is not None and table.n != n:
        raise ValueError(f"table is for n={table.n}, vectors have n={n}")
    C = structure_tensor(n) if table is None else table.tensor.astype(float)
    return AlgebraVector(n, np.einsum("a,b,abc->c", v.coeffs, w.coeffs, C))


@lru_cache(maxsize=None)
def _ad_stack(n: int) -> np.ndarray:
    """(d, d, d) stack: _ad_stack(n)[a] is ad(e_a) in basis coordinates."""
    AD = np.transpose(structure_table(n).tensor.astype(float), (0, 2, 1))
    AD.setflags(write=False)
    return AD


def ad_matrix(v: AlgebraVector) -> np.ndarray:
    """Matrix of ad(v): column b holds the coefficients of [v, e_b]."""
    return np.einsum("a,aij->ij", v.coeffs, _ad_stack(v.n))


def killing(v: AlgebraVector, w: AlgebraVector) -> float:
    """Killing form B(v, w) = tr(ad v o ad w)."""
    _require_same_n(v, w)
    return float(np.trace(ad_matrix(v) @ ad_matrix(w)))


def cartan_theta(v: AlgebraVector) -> AlgebraVector:
    """Cartan involution: +1 on k, -1 on p (matrix form: X -> -X^T)."""
    out = v.coeffs.copy()
    out[compact_dim(v.n):] *= -1.0
    return AlgebraVector(v.n, out)


def inner(v: AlgebraVector, w: AlgebraVector, metric: Metric = Metric.CANONICAL) -> float:
    """Positive inner product -B(v, theta w); diagonal on the standard basis."""
    n = _require_same_n(v, w)
    return gram_diagonal(n, metric) * float(v.coeffs @ w.coeffs)


def matrix_of(v: AlgebraVector) -> np.ndarray:
    """Expand a coefficient vector to its (n+1)x(n+1) matrix."""
    return np.einsum("a,aij->ij", v.coeffs, _basis_matrix_stack(v.n).astype(float))
