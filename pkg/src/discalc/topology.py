"""Euler characteristic, Betti numbers, curvature and critical-point indices.

Everything is exact: Betti numbers come from fraction-free integer rank,
curvature and index expectations are rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .complexes import Graph, GraphComplex, build_complex, classify, connected_components, is_cycle_graph, unit_sphere
from .forms import exterior_derivative
from .numcore import DomainError


def euler_characteristic(c: GraphComplex) -> int:
    return sum((-1) ** k * v for k, v in enumerate(c.counts()))


def integer_rank(mat) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    rows = [list(int(x) for x in row) for row in mat]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        for r in range(row + 1, m):
            for cc in range(col + 1, n):
                rows[r][cc] = (rows[row][col] * rows[r][cc] - rows[r][col] * rows[row][cc]) // prev
            rows[r][col] = 0
        prev = rows[row][col]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def betti(c: GraphComplex) -> tuple:
    """b_k = v_k - rank d_k - rank d_{k-1}; satisfies Euler-Poincare exactly."""
    ranks = [integer_rank(exterior_derivative(c, k).data) for k in range(c.top_dim + 1)]
    out = []
    for k in range(c.top_dim + 1):
        below = ranks[k - 1] if k >= 1 else 0
        out.append(c.count(k) - ranks[k] - below)
    return tuple(out)


def curvature(c: GraphComplex, x: int) -> Fraction:
    """K(x) = sum_k (-1)^k V_{k-1}(x)/(k+1) over simplex counts of the sphere."""
    sphere, _ = unit_sphere(c, x)
    counts = build_complex(sphere).counts() if sphere.vertex_count else ()
    total = Fraction(1, 1)  # V_{-1} = 1 contributes 1/(0+1)
    for k, v in enumerate(counts):
        total += Fraction((-1) ** (k + 1) * v, k + 2)
    return total


def curvature_vector(c: GraphComplex) -> tuple:
    return tuple(curvature(c, x) for x in range(c.graph.vertex_count))


def surface_curvature_shortcut(c: GraphComplex, x: int) -> Fraction:
    """1 - |S(x)|/6 for cycle spheres; cross-check only."""
    sphere, _ = unit_sphere(c, x)
    if not is_cycle_graph(sphere, min_len=3):
        raise DomainError("shortcut needs a cycle unit sphere")
    return 1 - Fraction(sphere.vertex_count, 6)


# ---------------------------------------------------------------------------
# Poincare-Hopf indices


def _check_injective(f, n: int):
    values = [f[v] for v in range(n)]
    if len(set(values)) != len(values):
        raise DomainError("function must be injective")


def sub_level_sphere(c: GraphComplex, f, x: int) -> Graph:
    """S^-(x): the part of the unit sphere where f is smaller than at x."""
    lower = {y for y in c.graph.neighbors(x) if f[y] < f[x]}
    sub, _ = c.graph.induced(lower)
    return sub


def index(c: GraphComplex, f, x: int) -> int:
    """i_f(x) = 1 - chi(S^-(x))."""
    _check_injective(f, c.graph.vertex_count)
    sub = sub_level_sphere(c, f, x)
    if sub.vertex_count == 0:
        return 1
    chi = euler_characteristic(build_complex(sub))
    return 1 - chi


@dataclass(frozen=True)
class IndexReport:
    indices: tuple
    classes: tuple
    total: int


def classify_critical(c: GraphComplex, f, x: int) -> str:
    """min / max / saddle(m) / monkey / regular taxonomy of a vertex."""
    _check_injective(f, c.graph.vertex_count)
    sub = sub_level_sphere(c, f, x)
    i = index(c, f, x)
    if sub.vertex_count == 0:
        return "min"
    if is_cycle_graph(sub, min_len=3):
        return "max"
    if i == -2:
        return "monkey"
    if i < 0:
        comps = connected_components(sub)
        return f"saddle({len(comps)})"
    if i == 0:
        return "regular"
    return "critical"


def poincare_hopf(c: GraphComplex, f) -> IndexReport:
    """Per-vertex indices; the total equals the Euler characteristic."""
    n = c.graph.vertex_count
    _check_injective(f, n)
    indices = tuple(index(c, f, x) for x in range(n))
    classes = tuple(classify_critical(c, f, x) for x in range(n))
    return IndexReport(indices, classes, sum(indices))


def index_expectation(c: GraphComplex, max_vertices: int = 10) -> tuple:
    """Average of i_f(x) over all injective orderings, as exact rationals.

    Exhaustive over |V|! permutations, so capped at max_vertices.
    """
    n = c.graph.vertex_count
    if n > max_vertices:
        raise DomainError(f"exhaustive index expectation capped at {max_vertices} vertices")
    totals = [0] * n
    count = 0
    for perm in itertools.permutations(range(n)):
        count += 1
        for x in range(n):
            totals[x] += index(c, perm, x)
    return tuple(Fraction(t, count) for t in totals)


def umlaufsatz_sum(c: GraphComplex) -> Fraction:
    """Sum of boundary curvatures of a flat surface with boundary: 1 - #holes."""
    cls = classify(c)
    if cls.kind != "surface" or not cls.flat or not cls.boundary:
        raise DomainError("umlaufsatz needs a flat surface with non-empty boundary")
    return sum((curvature(c, x) for x in cls.boundary), Fraction(0))
