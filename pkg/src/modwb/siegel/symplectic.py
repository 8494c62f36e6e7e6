"""Integer symplectic matrices, their action on Siegel upper half space, congruence subgroups."""

import random
from dataclasses import dataclass

import numpy as np

from ..errors import NotPositiveDefinite, NotSymplectic, PreconditionError

__all__ = [
    "SiegelPoint",
    "SymplecticMatrix",
    "automorphy_matrix",
    "congruence_member",
    "random_principal_congruence",
    "sp_action",
    "standard_generators",
]

CONGRUENCE_KINDS = ("full", "principal", "gamma1", "gamma0")


def _int_matrix(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def _matmul(x, y):
    n, m = len(x), len(y[0])
    return tuple(tuple(sum(x[i][l] * y[l][j] for l in range(len(y))) for j in range(m)) for i in range(n))


def _transpose(x):
    return tuple(zip(*x))


@dataclass(frozen=True)
class SymplecticMatrix:
    """gamma = (A B; C D) in Sp(2g, Z), stored as a 2g x 2g tuple of integer rows."""

    entries: tuple

    def __post_init__(self):
        m = _int_matrix(self.entries)
        n = len(m)
        if n == 0 or n % 2 or any(len(r) != n for r in m):
            raise NotSymplectic("need a square matrix of even size")
        object.__setattr__(self, "entries", m)
        j = self.J(n // 2).entries
        if _matmul(_matmul(_transpose(m), j), m) != j:
            raise NotSymplectic("gamma^T J gamma != J")

    @property
    def g(self):
        return len(self.entries) // 2

    def _block(self, r, c):
        g = self.g
        return tuple(row[c * g:(c + 1) * g] for row in self.entries[r * g:(r + 1) * g])

    @property
    def A(self):
        return self._block(0, 0)

    @property
    def B(self):
        return self._block(0, 1)

    @property
    def C(self):
        return self._block(1, 0)

    @property
    def D(self):
        return self._block(1, 1)

    @classmethod
    def from_blocks(cls, A, B, C, D):
        A, B, C, D = (_int_matrix(x) for x in (A, B, C, D))
        top = [a + b for a, b in zip(A, B)]
        bottom = [c + d for c, d in zip(C, D)]
        return cls(tuple(top + bottom))

    @classmethod
    def identity(cls, g):
        return cls(tuple(tuple(int(i == j) for j in range(2 * g)) for i in range(2 * g)))

    @classmethod
    def J(cls, g):
        n = 2 * g
        rows = [[0] * n for _ in range(n)]
        for i in range(g):
            rows[i][g + i] = 1
            rows[g + i][i] = -1
        # bypass validation: J is the reference form itself
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", _int_matrix(rows))
        return obj

    @classmethod
    def translation(cls, S):
        """(I S; 0 I) for an integral symmetric S."""
        S = _int_matrix(S)
        g = len(S)
        if _transpose(S) != S:
            raise NotSymplectic("translation needs a symmetric matrix")
        eye = _identity(g)
        return cls.from_blocks(eye, S, _zeros(g), eye)

    @classmethod
    def lower_translation(cls, S):
        """(I 0; S I) for an integral symmetric S."""
        S = _int_matrix(S)
        g = len(S)
        eye = _identity(g)
        return cls.from_blocks(eye, _zeros(g), S, eye)

    @classmethod
    def rotation(cls, U):
        """(U 0; 0 U^{-T}) for U in GL(g, Z)."""
        U = _int_matrix(U)
        Uf = np.array(U, dtype=float)
        det = round(np.linalg.det(Uf))
        if abs(det) != 1:
            raise NotSymplectic("rotation needs a unimodular matrix")
        inv_t = _int_matrix(np.rint(np.linalg.inv(Uf).T))
        return cls.from_blocks(U, _zeros(len(U)), _zeros(len(U)), inv_t)

    def __matmul__(self, other):
        return SymplecticMatrix(_matmul(self.entries, other.entries))

    def inverse(self):
        """gamma^{-1} = (D^T -B^T; -C^T A^T)."""
        neg = lambda m: tuple(tuple(-x for x in r) for r in m)  # noqa: E731
        return SymplecticMatrix.from_blocks(
            _transpose(self.D), neg(_transpose(self.B)), neg(_transpose(self.C)), _transpose(self.A))

    def to_numpy(self):
        return np.array(self.entries, dtype=np.int64)


def _identity(g):
    return tuple(tuple(int(i == j) for j in range(g)) for i in range(g))


def _zeros(g):
    return tuple((0,) * g for _ in range(g))


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """Omega in H_g: complex symmetric with positive-definite imaginary part."""

    omega: np.ndarray

    def __post_init__(self):
        om = np.array(self.omega, dtype=complex)
        if om.ndim != 2 or om.shape[0] != om.shape[1]:
            raise PreconditionError("Omega must be square")
        if not np.array_equal(om, om.T):
            raise PreconditionError("Omega must be symmetric")
        y = om.imag
        for r in range(1, om.shape[0] + 1):
            if np.linalg.det(y[:r, :r]) <= 1e-12:
                raise NotPositiveDefinite("Im(Omega) is not positive definite")
        om.setflags(write=False)
        object.__setattr__(self, "omega", om)

    @classmethod
    def symmetrized(cls, m):
        m = np.asarray(m, dtype=complex)
        return cls((m + m.T) / 2)

    @classmethod
    def scalar(cls, g, z):
        return cls(np.eye(g) * complex(z))

    @property
    def g(self):
        return self.omega.shape[0]

    @property
    def imag_min_eigenvalue(self):
        return float(np.linalg.eigvalsh(self.omega.imag).min())


def automorphy_matrix(gamma, point):
    """C Omega + D."""
    return np.array(gamma.C, dtype=float) @ point.omega + np.array(gamma.D, dtype=float)


def sp_action(gamma, point, max_condition=1e12):
    """(A Omega + B)(C Omega + D)^{-1}, symmetrized against roundoff."""
    if gamma.g != point.g:
        raise PreconditionError("degree mismatch between gamma and Omega")
    A = np.array(gamma.A, dtype=float)
    B = np.array(gamma.B, dtype=float)
    m = automorphy_matrix(gamma, point)
    if np.linalg.cond(m) > max_condition:
        raise PreconditionError("C Omega + D is numerically singular")
    # X = (A Om + B) M^{-1}  <=>  M^T X^T = (A Om + B)^T
    x = np.linalg.solve(m.T, (A @ point.omega + B).T).T
    return SiegelPoint.symmetrized(x)


def congruence_member(gamma, N, which):
    """Membership of gamma in Gamma_g ("full"), Gamma_g(N) ("principal"),
    Gamma_{g,1}(N) ("gamma1") or Gamma_{g,0}(N) ("gamma0")."""
    if which not in CONGRUENCE_KINDS:
        raise ValueError(f"unknown subgroup {which!r}; expected one of {CONGRUENCE_KINDS}")
    if N < 1:
        raise ValueError("N must be positive")
    if which == "full":
        return True
    g = gamma.g

    def is_zero(m):
        return all(x % N == 0 for r in m for x in r)

    def is_identity(m):
        return all((x - (i == j)) % N == 0 for i, r in enumerate(m) for j, x in enumerate(r))

    if which == "gamma0":
        return is_zero(gamma.C)
    if which == "gamma1":
        return is_zero(gamma.C) and is_identity(gamma.A) and is_identity(gamma.D)
    return is_identity(gamma.entries) if g else True


def standard_generators(g):
    """J together with the elementary translations (I E_ij + E_ji; 0 I)."""
    gens = [SymplecticMatrix.J(g)]
    for i in range(g):
        for j in range(i, g):
            S = [[0] * g for _ in range(g)]
            S[i][j] = S[j][i] = 1
            gens.append(SymplecticMatrix.translation(S))
    return gens


def random_principal_congruence(g, N, rng=None, length=6, size=2):
    """A random word in generators of Gamma_g(N)."""
    rng = rng or random.Random()
    gamma = SymplecticMatrix.identity(g)
    for _ in range(length):
        kind = rng.randrange(3)
        if kind < 2 or g == 1:
            S = [[0] * g for _ in range(g)]
            for i in range(g):
                for j in range(i, g):
                    S[i][j] = S[j][i] = N * rng.randint(-size, size)
            step = SymplecticMatrix.translation(S) if kind == 0 else SymplecticMatrix.lower_translation(S)
        else:
            i, j = rng.sample(range(g), 2)
            U = [[int(a == b) for b in range(g)] for a in range(g)]
            U[i][j] = N * rng.randint(-size, size)
            step = SymplecticMatrix.rotation(U)
        gamma = gamma @ step
    return gamma
