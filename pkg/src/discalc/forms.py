"""k-forms and the exterior calculus operators on a clique complex.

The matrices d, D = d + d*, L = D^2 are held as object arrays of Python
integers so that identities like d.d = 0 and L = D^2 stay exact; floats
enter only through the spectral pseudoinverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .complexes import GraphComplex, Orientation, orient_region, _faces
from .numcore import DomainError


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense matrix tagged with the form degrees it maps between."""

    data: np.ndarray
    row_degree: Optional[int]  # None for degree-mixing operators (Dirac)
    col_degree: Optional[int]

    @property
    def shape(self):
        return self.data.shape


@dataclass(frozen=True)
class Form:
    """Value vector indexed by the k-simplices in reference orientation."""

    complex_ref: GraphComplex
    degree: int
    values: np.ndarray

    def __post_init__(self):
        expected = self.complex_ref.count(self.degree)
        if len(self.values) != expected:
            raise DomainError(f"degree-{self.degree} form needs {expected} values")
        object.__setattr__(self, "values", np.asarray(self.values, dtype=object))


def _zeros(rows: int, cols: int) -> np.ndarray:
    return np.full((rows, cols), 0, dtype=object)


def exterior_derivative(c: GraphComplex, k: int) -> OperatorMatrix:
    """Signed face-sum matrix d_k: k-forms -> (k+1)-forms."""
    if k < 0:
        raise DomainError("degree must be >= 0")
    rows = c.count(k + 1)
    cols = c.count(k)
    mat = _zeros(rows, cols)
    if rows and cols:
        col_index = c.index[k]
        for r, simplex in enumerate(c.simplices[k + 1]):
            for i, f in _faces(simplex):
                mat[r, col_index[f]] = (-1) ** i
    return OperatorMatrix(mat, k + 1, k)


def codifferential(c: GraphComplex, k: int) -> OperatorMatrix:
    """Adjoint d*: k-forms -> (k-1)-forms (plain transpose of d_{k-1})."""
    if k < 1:
        raise DomainError("codifferential needs degree >= 1")
    d = exterior_derivative(c, k - 1)
    return OperatorMatrix(d.data.T, k - 1, k)


def gradient(c: GraphComplex) -> OperatorMatrix:
    return exterior_derivative(c, 0)


def curl(c: GraphComplex) -> OperatorMatrix:
    return exterior_derivative(c, 1)


def divergence(c: GraphComplex) -> OperatorMatrix:
    return codifferential(c, 1)


def total_dim(c: GraphComplex) -> int:
    return sum(c.counts())


def block_offsets(c: GraphComplex) -> list:
    offsets = [0]
    for k in range(c.top_dim + 1):
        offsets.append(offsets[-1] + c.count(k))
    return offsets


def dirac(c: GraphComplex) -> OperatorMatrix:
    """Block matrix D = d + d* on the direct sum of all form spaces."""
    n = total_dim(c)
    offsets = block_offsets(c)
    mat = _zeros(n, n)
    for k in range(c.top_dim):
        d = exterior_derivative(c, k).data
        r0, r1 = offsets[k + 1], offsets[k + 2]
        c0, c1 = offsets[k], offsets[k + 1]
        mat[r0:r1, c0:c1] = d
        mat[c0:c1, r0:r1] = d.T
    return OperatorMatrix(mat, None, None)


def laplacian(c: GraphComplex) -> OperatorMatrix:
    """L = D^2 = d d* + d* d; block-diagonal per form degree."""
    d = dirac(c).data
    return OperatorMatrix(d @ d, None, None)


def laplacian_block(c: GraphComplex, k: int) -> OperatorMatrix:
    """The degree-k block L_k = d_k* d_k + d_{k-1} d_{k-1}*."""
    dk = exterior_derivative(c, k).data
    mat = dk.T @ dk
    if k >= 1:
        dkm = exterior_derivative(c, k - 1).data
        mat = mat + dkm @ dkm.T
    return OperatorMatrix(mat, k, k)


def apply_d(F: Form) -> Form:
    d = exterior_derivative(F.complex_ref, F.degree)
    return Form(F.complex_ref, F.degree + 1, d.data @ F.values)


# ---------------------------------------------------------------------------
# Integration and the integral theorems


def integrate(form: Form, region, orientation: Orientation):
    """Signed sum of form values over an oriented region of its degree."""
    if orientation.degree != form.degree:
        raise DomainError("orientation degree does not match form degree")
    idx = form.complex_ref.index[form.degree]
    total = 0
    for s in region:
        s = tuple(s)
        if s not in orientation.signs:
            raise DomainError(f"orientation does not cover {s}")
        total = total + orientation.signs[s] * form.values[idx[s]]
    return total


def edge_value(F: Form, a: int, b: int):
    """F on the directed edge a -> b (sign-flipped when a > b)."""
    if F.degree != 1:
        raise DomainError("edge_value needs a 1-form")
    idx = F.complex_ref.index[1]
    key = (min(a, b), max(a, b))
    if key not in idx:
        raise DomainError(f"({a},{b}) is not an edge")
    v = F.values[idx[key]]
    return v if a < b else -v


def line_integral(F: Form, path) -> object:
    """Integral of a 1-form along a vertex path v_0, ..., v_m."""
    total = 0
    for a, b in zip(path, path[1:]):
        total = total + edge_value(F, a, b)
    return total


def boundary_faces(c: GraphComplex, k: int, region) -> list:
    """Faces incident to an odd number of region simplices (mod-2 boundary)."""
    counts = {}
    for s in region:
        for _, f in _faces(tuple(s)):
            counts[f] = counts.get(f, 0) + 1
    return [f for f, n in counts.items() if n % 2 == 1]


def stokes_residual(c: GraphComplex, region, F: Form, orientation: Optional[Orientation] = None):
    """int_region dF - int_boundary F; zero in exact arithmetic.

    ``region`` is a set of (k+1)-simplices for a k-form F.
    """
    k = F.degree
    if orientation is None:
        orientation = orient_region(c, k + 1, region)
    dF = apply_d(F)
    lhs = integrate(dF, region, orientation)
    idx = c.index[k]
    rhs = 0
    for f, sign in orientation.boundary_signs.items():
        rhs = rhs + sign * F.values[idx[f]]
    return lhs - rhs


# ---------------------------------------------------------------------------
# Vector-calculus products


def dot_at_vertex(F: Form, G: Form, x: int):
    """Sum of F(e) G(e) over the edges attached to x."""
    if F.degree != 1 or G.degree != 1:
        raise DomainError("dot product is defined for 1-forms")
    idx = F.complex_ref.index[1]
    total = 0
    for e, i in idx.items():
        if x in e:
            total = total + F.values[i] * G.values[i]
    return total


def form_length(F: Form, x: int) -> float:
    return math.sqrt(float(dot_at_vertex(F, F, x)))


def form_angle(F: Form, G: Form, x: int) -> float:
    lf = form_length(F, x)
    lg = form_length(G, x)
    if lf == 0 or lg == 0:
        raise DomainError("angle undefined for a zero-length form")
    cosine = float(dot_at_vertex(F, G, x)) / (lf * lg)
    return math.acos(max(-1.0, min(1.0, cosine)))


def cross_on_triangle(F: Form, G: Form, triangle) -> object:
    """F(x,y) G(x,z) - F(x,z) G(x,y) on a triangle anchored at its first vertex."""
    x, y, z = triangle
    key = tuple(sorted(triangle))
    if key not in F.complex_ref.index[2]:
        raise DomainError(f"{triangle} is not a triangle")
    return edge_value(F, x, y) * edge_value(G, x, z) - edge_value(F, x, z) * edge_value(G, x, y)


def triple_product(F: Form, G: Form, H: Form, tet) -> object:
    """3x3 determinant of edge values from the anchor of a tetrahedron."""
    x, y, z, w = tet
    key = tuple(sorted(tet))
    if len(F.complex_ref.index) < 4 or key not in F.complex_ref.index[3]:
        raise DomainError(f"{tet} is not a tetrahedron")
    m = [[edge_value(P, x, v) for v in (y, z, w)] for P in (F, G, H)]
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


# ---------------------------------------------------------------------------
# Directional derivative and gradient ascent


def directional_derivative(c: GraphComplex, f, edge):
    """df on a directed edge (a, b): f(b) - f(a)."""
    a, b = edge
    if (min(a, b), max(a, b)) not in c.index[1]:
        raise DomainError(f"({a},{b}) is not an edge")
    return f[b] - f[a]


def gradient_ascent(c: GraphComplex, f, start: int) -> list:
    """Follow the steepest positive directional derivative to a local maximum."""
    path = [start]
    current = start
    for _ in range(c.graph.vertex_count):
        candidates = [(f[w] - f[current], w) for w in c.graph.neighbors(current)]
        gain, best = max(candidates) if candidates else (0, None)
        if best is None or gain <= 0:
            return path
        current = best
        path.append(current)
    return path


# ---------------------------------------------------------------------------
# Potentials and Poisson/Maxwell


class NotGradientFieldError(ValueError):
    """The 1-form has nonzero circulation; carries a witness cycle."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


def potential(c: GraphComplex, F: Form) -> np.ndarray:
    """Solve d0 f = F by spanning-tree propagation; f(v0) = 0.

    Raises NotGradientFieldError with a violated cycle when F has
    circulation on some non-tree edge.
    """
    g = c.graph
    if g.vertex_count == 0:
        raise DomainError("empty graph")
    adj = g.adjacency()
    f = np.full(g.vertex_count, None, dtype=object)
    parent = [None] * g.vertex_count
    f[0] = 0
    order = [0]
    queue = [0]
    while queue:
        v = queue.pop(0)
        for w in sorted(adj[v]):
            if f[w] is None:
                f[w] = f[v] + edge_value(F, v, w)
                parent[w] = v
                queue.append(w)
                order.append(w)
    if any(v is None for v in f):
        raise DomainError("graph is not connected")
    for (a, b), i in c.index[1].items():
        if f[b] - f[a] != F.values[i]:
            cycle = _tree_cycle(parent, a, b)
            raise NotGradientFieldError(f"circulation on cycle through edge ({a},{b})", cycle)
    return f


def _tree_cycle(parent, a, b) -> list:
    def root_path(v):
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    pa, pb = root_path(a), root_path(b)
    common = set(pa) & set(pb)
    trimmed_a = []
    for v in pa:
        trimmed_a.append(v)
        if v in common:
            break
    trimmed_b = []
    for v in pb:
        if v in common and v == trimmed_a[-1]:
            break
        trimmed_b.append(v)
    return trimmed_a + trimmed_b[::-1] + [a]


PINV_RELATIVE_CUTOFF = 1e-9


def pinv_apply(mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Pseudoinverse action via symmetric eigendecomposition."""
    a = np.asarray(mat, dtype=float)
    w, q = np.linalg.eigh(a)
    cutoff = PINV_RELATIVE_CUTOFF * max(np.abs(w).max(), 1.0)
    inv = np.where(np.abs(w) > cutoff, 1.0 / np.where(np.abs(w) > cutoff, w, 1.0), 0.0)
    return q @ (inv * (q.T @ np.asarray(vec, dtype=float)))


def kernel_projection(mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Component of vec in the kernel (harmonic part) of a symmetric matrix."""
    a = np.asarray(mat, dtype=float)
    w, q = np.linalg.eigh(a)
    cutoff = PINV_RELATIVE_CUTOFF * max(np.abs(w).max(), 1.0)
    mask = np.abs(w) <= cutoff
    v = np.asarray(vec, dtype=float)
    return q[:, mask] @ (q[:, mask].T @ v)


class HarmonicComponentError(ValueError):
    """Right-hand side has a harmonic component the Laplacian cannot reach."""

    def __init__(self, message: str, norm: float):
        super().__init__(f"{message} (harmonic norm {norm:.3e})")
        self.norm = norm


def poisson_maxwell(c: GraphComplex, j: Form, tol: float = 1e-10):
    """Solve L A = j for a divergence-free current, return (A, F = dA).

    Checks Kirchhoff (d0* j = 0) and rejects currents with a harmonic
    component; asserts the Coulomb gauge d0* A = 0 and d1* F = j.
    """
    if j.degree != 1:
        raise DomainError("current must be a 1-form")
    d0 = exterior_derivative(c, 0).data
    jv = np.asarray(j.values, dtype=float)
    div_j = d0.T.astype(float) @ jv
    if len(div_j) and np.abs(div_j).max() > tol:
        raise DomainError("Kirchhoff violated: current has nonzero divergence")
    L1 = laplacian_block(c, 1).data
    harmonic = kernel_projection(L1, jv)
    hnorm = float(np.linalg.norm(harmonic))
    if hnorm > tol:
        raise HarmonicComponentError("current has a harmonic component", hnorm)
    av = pinv_apply(L1, jv)
    A = Form(c, 1, av)
    gauge = d0.T.astype(float) @ av
    if len(gauge) and np.abs(gauge).max() > 1e-8:
        raise ArithmeticError("Coulomb gauge violated beyond tolerance")
    d1 = exterior_derivative(c, 1).data.astype(float)
    fv = d1 @ av
    F = Form(c, 2, fv)
    if c.top_dim >= 3:
        d2 = exterior_derivative(c, 2).data.astype(float)
        if len(fv) and d2.size and np.abs(d2 @ fv).max() > 1e-8:
            raise ArithmeticError("dF != 0 beyond tolerance")
    return A, F
