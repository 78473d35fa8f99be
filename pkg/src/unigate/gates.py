"""Dense small-matrix numerics for SU(d)/SO(d) gates.

Validation, Frobenius distances, eigen/normal-form decompositions and the
branch-fixed matrix logarithm.  Eigen-decomposition is computed via a
Schur-form reduction (complex Schur for unitary input, real Schur for
orthogonal input): the transformation returned by the QR iteration is unitary
resp. orthogonal by construction, so eigenvectors stay orthonormal even on the
degenerate spectra that permutation-like gates produce.  The strictly
off-diagonal part of the Schur factor of a normal matrix is rounding noise;
it is checked against the exp round-trip tolerance and then dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.linalg

from .config import DEFAULT, Tolerances
from .errors import (
    BadDimension,
    DetNotOne,
    DimensionMismatch,
    NotReal,
    NotUnitary,
    NumericalFailure,
)

TWO_PI = 2.0 * np.pi


class GroupKind(str, Enum):
    SU = "SU"
    SO = "SO"


def as_group(value) -> GroupKind:
    if isinstance(value, GroupKind):
        return value
    return GroupKind(str(value).upper())


def frob(a: np.ndarray) -> float:
    """Frobenius norm ``sqrt(tr(A A^dag))``."""
    return float(np.linalg.norm(a))


@dataclass(frozen=True)
class GateMatrix:
    """A validated element of SU(d) or SO(d).

    ``entries`` is stored complex for both groups; for SO the imaginary part
    passed validation as negligible and is kept only for uniform arithmetic.
    """

    group: GroupKind
    dim: int
    entries: np.ndarray
    unitarity_defect: float
    det_defect: float

    def inverse(self) -> "GateMatrix":
        return GateMatrix(self.group, self.dim, self.entries.conj().T.copy(),
                          self.unitarity_defect, self.det_defect)

    def __matmul__(self, other: "GateMatrix") -> "GateMatrix":
        if not isinstance(other, GateMatrix):
            return NotImplemented
        if other.dim != self.dim or other.group != self.group:
            raise DimensionMismatch("cannot multiply gates from different groups")
        return _wrap(self.entries @ other.entries, self.group)

    def power(self, n: int) -> "GateMatrix":
        return _wrap(np.linalg.matrix_power(self.entries, n), self.group)

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.entries))


def _wrap(entries: np.ndarray, group: GroupKind) -> GateMatrix:
    """Fast constructor for products of already-validated gates."""
    d = entries.shape[0]
    udef = frob(entries.conj().T @ entries - np.eye(d))
    ddef = abs(np.linalg.det(entries) - 1.0)
    return GateMatrix(group, d, entries, float(udef), float(ddef))


def validate_gate(raw, group, tol: Tolerances = DEFAULT) -> GateMatrix:
    """Validate a raw d x d array as an element of SU(d) or SO(d).

    Raises NotUnitary / DetNotOne / NotReal / BadDimension on invariant
    violations; tolerances come from ``tol.gate``.
    """
    group = as_group(group)
    arr = np.asarray(raw, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise BadDimension(f"expected a square matrix, got shape {arr.shape}")
    d = arr.shape[0]
    if d < 2:
        raise BadDimension(f"dimension must be >= 2, got {d}")
    if group is GroupKind.SO:
        im = float(np.abs(arr.imag).max())
        if im > tol.gate:
            raise NotReal(f"SO gate has imaginary entries up to {im:.3e}")
        arr = arr.real.astype(float).astype(complex)
    udef = frob(arr.conj().T @ arr - np.eye(d))
    if udef > tol.gate:
        raise NotUnitary(f"unitarity defect {udef:.3e} exceeds {tol.gate:.1e}")
    ddef = abs(np.linalg.det(arr) - 1.0)
    if ddef > tol.gate:
        raise DetNotOne(f"determinant defect {ddef:.3e} exceeds {tol.gate:.1e}")
    arr = arr.copy()
    arr.setflags(write=False)
    return GateMatrix(group, d, arr, float(udef), float(ddef))


def hs_distance(a: GateMatrix, b: GateMatrix) -> float:
    """Hilbert-Schmidt (Frobenius) distance ``||a - b||``."""
    if a.dim != b.dim or a.group != b.group:
        raise DimensionMismatch("gates live in different groups")
    return frob(a.entries - b.entries)


@dataclass(frozen=True)
class SpectralData:
    """Eigen data of a gate in the package's branch conventions.

    SU: ``angles`` are the d spectral angles in [0, 2*pi), paired with the
    columns of the unitary ``diagonalizer``.  SO: ``angles`` are the rotation
    angles in (0, 2*pi), one per 2x2 block of the real normal form, and
    ``fixed_dim`` counts the trailing eigenvalue-1 directions; the
    ``diagonalizer`` is special orthogonal.
    """

    group: GroupKind
    dim: int
    angles: tuple
    diagonalizer: np.ndarray
    fixed_dim: int = 0

    def normal_form(self) -> np.ndarray:
        """The diagonal (SU) or block-diagonal rotation form (SO)."""
        if self.group is GroupKind.SU:
            return np.diag(np.exp(1j * np.asarray(self.angles)))
        blocks = [np.array([[np.cos(p), np.sin(p)], [-np.sin(p), np.cos(p)]])
                  for p in self.angles]
        blocks.append(np.eye(self.fixed_dim))
        return scipy.linalg.block_diag(*blocks)

    def reconstruct(self) -> np.ndarray:
        v = self.diagonalizer
        if self.group is GroupKind.SU:
            return (v * np.exp(1j * np.asarray(self.angles))) @ v.conj().T
        return v @ self.normal_form() @ v.T

    def log_matrix(self) -> np.ndarray:
        """Branch-fixed logarithm X with exp(X) = gate."""
        v = self.diagonalizer
        if self.group is GroupKind.SU:
            x = (v * (1j * np.asarray(self.angles))) @ v.conj().T
            return 0.5 * (x - x.conj().T)
        blocks = [np.array([[0.0, p], [-p, 0.0]]) for p in self.angles]
        blocks.append(np.zeros((self.fixed_dim, self.fixed_dim)))
        x = v @ scipy.linalg.block_diag(*blocks) @ v.T
        return 0.5 * (x - x.T)


def _su_decompose(g: GateMatrix, tol: Tolerances) -> SpectralData:
    t, v = scipy.linalg.schur(np.asarray(g.entries), output="complex")
    off = t - np.diag(np.diag(t))
    if frob(off) > tol.exp:
        raise NumericalFailure(
            f"Schur form off-diagonal norm {frob(off):.3e} too large")
    lam = np.diag(t)
    lam = lam / np.abs(lam)
    angles = np.mod(np.angle(lam), TWO_PI)
    # Snap eigenvalues near 1 to angle 0 so the log branch is noise-stable.
    near_one = np.minimum(angles, TWO_PI - angles) <= tol.spec
    angles[near_one] = 0.0
    order = np.argsort(angles, kind="stable")
    angles = angles[order]
    v = np.ascontiguousarray(v[:, order])
    total = np.mod(angles.sum(), TWO_PI)
    if min(total, TWO_PI - total) > tol.spec * max(1, g.dim):
        raise NumericalFailure(
            f"spectral angles sum to {total:.3e} mod 2*pi, not 0")
    return SpectralData(GroupKind.SU, g.dim, tuple(angles), v)


def _so_decompose(g: GateMatrix, tol: Tolerances) -> SpectralData:
    d = g.dim
    t, v = scipy.linalg.schur(np.asarray(g.entries.real, dtype=float),
                              output="real")
    v = v.copy()
    angles = []
    pairs = []        # column index pairs per rotation block
    fixed = []        # eigenvalue +1 columns
    minus = []        # eigenvalue -1 columns, paired up afterwards
    i = 0
    while i < d:
        if i + 1 < d and abs(t[i + 1, i]) > tol.spec:
            c = 0.5 * (t[i, i] + t[i + 1, i + 1])
            s = 0.5 * (t[i, i + 1] - t[i + 1, i])
            phi = float(np.arctan2(s, c))
            if phi < 0.0:
                v[:, i + 1] *= -1.0
                phi = -phi
            if phi <= tol.spec:
                fixed.extend([i, i + 1])
            else:
                pairs.append((i, i + 1))
                angles.append(phi)
            i += 2
        else:
            (fixed if t[i, i] > 0.0 else minus).append(i)
            i += 1
    if len(minus) % 2:
        raise NumericalFailure("odd count of -1 eigenvalues in SO gate")
    for a, b in zip(minus[0::2], minus[1::2]):
        pairs.append((a, b))
        angles.append(np.pi)
    perm = [k for p in pairs for k in p] + fixed
    v = np.ascontiguousarray(v[:, perm])
    fixed_dim = len(fixed)
    if np.linalg.det(v) < 0.0:
        if fixed_dim:
            v[:, -1] *= -1.0
        else:
            # Flip the orientation of the last rotation plane instead; its
            # angle moves to the (pi, 2*pi) branch, still a valid normal form.
            v[:, 2 * len(angles) - 1] *= -1.0
            angles[-1] = TWO_PI - angles[-1]
    data = SpectralData(GroupKind.SO, d, tuple(angles), v, fixed_dim)
    err = frob(data.reconstruct() - g.entries)
    if err > tol.exp:
        raise NumericalFailure(f"SO normal form reconstruction error {err:.3e}")
    return data


def spectral_decompose(g: GateMatrix, tol: Tolerances = DEFAULT) -> SpectralData:
    """Eigen-decomposition (SU) or real normal form (SO) of a gate."""
    if g.group is GroupKind.SU:
        return _su_decompose(g, tol)
    return _so_decompose(g, tol)


def principal_log(g: GateMatrix, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Branch-fixed logarithm: anti-Hermitian X with exp(X) = g.

    SU: X = V diag(i*phi_1, ..., i*phi_d) V^dag with every phi_i in [0, 2*pi)
    (so e.g. -I maps to diag(i*pi, i*pi), never the -i*pi branch).  SO: the
    antisymmetric block form with angles in (0, 2*pi) and a zero block on the
    fixed space.
    """
    data = spectral_decompose(g, tol)
    x = data.log_matrix()
    err = frob(scipy.linalg.expm(x) - g.entries)
    if err > tol.exp:
        raise NumericalFailure(f"exp(log g) misses g by {err:.3e}")
    return x


def random_gate(group, d: int, rng=None) -> GateMatrix:
    """Haar-ish random element of SU(d) or SO(d)."""
    group = as_group(group)
    rng = np.random.default_rng(rng)
    if group is GroupKind.SO:
        m = scipy.stats.special_ortho_group.rvs(d, random_state=rng)
        return validate_gate(m, group)
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    det = np.linalg.det(q)
    q = q / det ** (1.0 / d)
    return validate_gate(q, group)


import scipy.stats  # noqa: E402  (kept after scipy.linalg to group imports)
