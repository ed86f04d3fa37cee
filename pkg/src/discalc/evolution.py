"""Spectral heat, Schroedinger and wave flows, plus a path-sum oracle.

Flows are computed through a full symmetric eigendecomposition; the
Feynman path enumerator is the independent exact route used in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import GraphComplex
from .forms import Form, OperatorMatrix, dirac, laplacian_block, total_dim
from .numcore import DomainError


SYMMETRY_TOL = 1e-12
RECONSTRUCT_TOL = 1e-9
ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, orthonormal
    source: str

    def reconstruct(self) -> np.ndarray:
        return self.eigenvectors @ (self.eigenvalues[:, None] * self.eigenvectors.T)


def sym_eigen(m, source: str = "operator") -> SpectralDecomposition:
    """Full eigendecomposition of a symmetric matrix, deterministic ordering.

    Eigenvalues ascend; each eigenvector is sign-fixed so its first
    component of nonnegligible size is positive.
    """
    if isinstance(m, OperatorMatrix):
        m = m.data
    a = np.asarray(m, dtype=float)
    if a.size and np.abs(a - a.T).max() > SYMMETRY_TOL:
        raise DomainError("matrix is not symmetric")
    w, q = np.linalg.eigh(a)
    order = np.argsort(w, kind="stable")
    w = w[order]
    q = q[:, order]
    for i in range(q.shape[1]):
        col = q[:, i]
        nz = np.nonzero(np.abs(col) > 1e-9)[0]
        if len(nz) and col[nz[0]] < 0:
            q[:, i] = -col
    scale = max(np.abs(a).max(), 1.0) if a.size else 1.0
    if a.size:
        assert np.abs(q.T @ q - np.eye(len(w))).max() < ORTHONORMAL_TOL
        assert np.abs(q @ (w[:, None] * q.T) - a).max() < RECONSTRUCT_TOL * scale
    return SpectralDecomposition(w, q, source)


def heat_flow(c: GraphComplex, k: int, f0: Form, t: float) -> Form:
    """e^(-L_k t) f0; degree-preserving."""
    if t < 0:
        raise DomainError("heat flow needs t >= 0")
    if f0.degree != k:
        raise DomainError("form degree mismatch")
    dec = sym_eigen(laplacian_block(c, k), source=f"L_{k}")
    v = np.asarray(f0.values, dtype=float)
    out = dec.eigenvectors @ (np.exp(-dec.eigenvalues * t) * (dec.eigenvectors.T @ v))
    return Form(c, k, out)


def schrodinger_flow(c: GraphComplex, f0, t: float) -> np.ndarray:
    """e^(itD) f0 on the full form space; unitary."""
    v = np.asarray(f0, dtype=complex)
    if len(v) != total_dim(c):
        raise DomainError("state length must equal the total number of simplices")
    dec = sym_eigen(dirac(c), source="Dirac")
    return dec.eigenvectors @ (np.exp(1j * dec.eigenvalues * t) * (dec.eigenvectors.T @ v))


def wave_flow(c: GraphComplex, f0, g0, t: float, harmonic_tol: float = 1e-9) -> np.ndarray:
    """cos(Dt) f0 + sin(Dt) D+ g0 for initial value f0 and velocity g0.

    g0 must have no harmonic (ker D) component; its harmonic norm is
    reported otherwise.
    """
    dec = sym_eigen(dirac(c), source="Dirac")
    f = np.asarray(f0, dtype=float)
    g = np.asarray(g0, dtype=float)
    if len(f) != total_dim(c) or len(g) != total_dim(c):
        raise DomainError("state length must equal the total number of simplices")
    w = dec.eigenvalues
    scale = max(np.abs(w).max(), 1.0)
    kernel = np.abs(w) <= 1e-9 * scale
    gk = dec.eigenvectors.T @ g
    hnorm = float(np.linalg.norm(gk[kernel]))
    if hnorm > harmonic_tol:
        raise DomainError(f"initial velocity has harmonic component of norm {hnorm:.3e}")
    fk = dec.eigenvectors.T @ f
    inv_w = np.where(kernel, 0.0, 1.0 / np.where(kernel, 1.0, w))
    coeffs = np.cos(w * t) * fk + np.sin(w * t) * inv_w * gk
    return dec.eigenvectors @ coeffs


def wave_velocity(c: GraphComplex, f0, g0, t: float) -> np.ndarray:
    """Time derivative of the wave flow: -D sin(Dt) f0 + cos(Dt) g0."""
    dec = sym_eigen(dirac(c), source="Dirac")
    f = np.asarray(f0, dtype=float)
    g = np.asarray(g0, dtype=float)
    w = dec.eigenvalues
    fk = dec.eigenvectors.T @ f
    gk = dec.eigenvectors.T @ g
    coeffs = -w * np.sin(w * t) * fk + np.cos(w * t) * gk
    return dec.eigenvectors @ coeffs


def feynman_path_sum(m, start: int, end: int, steps: int):
    """Sum over all length-n index paths of the product of matrix entries.

    Equals the (end, start) entry of m^n exactly; enumeration is bounded
    to keep the search desk-scale.
    """
    if isinstance(m, OperatorMatrix):
        m = m.data
    mat = np.asarray(m, dtype=object)
    n = mat.shape[0]
    if steps < 0:
        raise DomainError("steps must be >= 0")
    if steps > 8 or n > 40:
        raise DomainError("path enumeration bounded to steps <= 8, dimension <= 40")

    def walk(position: int, remaining: int):
        if remaining == 0:
            return 1 if position == end else 0
        total = 0
        for nxt in range(n):
            weight = mat[nxt, position]
            if weight != 0:
                total += weight * walk(nxt, remaining - 1)
        return total

    return walk(start, steps)
