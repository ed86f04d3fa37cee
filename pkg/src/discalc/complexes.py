"""Finite simple graphs, their clique complexes and geometric classifiers.

Simplices of dimension k are the complete subgraphs K_{k+1}, stored as
ascending vertex tuples; the ascending order is the reference orientation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .numcore import DomainError


class NonOrientableError(ValueError):
    """Sign propagation hit a clash: the region carries no orientation."""


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset
    labels: Optional[tuple] = None

    def __post_init__(self):
        normalized = set()
        for a, b in self.edges:
            if a == b:
                raise DomainError(f"loop at vertex {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise DomainError(f"edge ({a},{b}) outside vertex range")
            normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(normalized))

    def neighbors(self, v: int) -> set:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self) -> list:
        adj = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def induced(self, vertices) -> tuple:
        """Induced subgraph; returns (graph, map new index -> old vertex)."""
        order = sorted(vertices)
        back = {old: new for new, old in enumerate(order)}
        edges = {(back[a], back[b]) for a, b in self.edges if a in back and b in back}
        return Graph(len(order), frozenset(edges)), tuple(order)

    def to_json(self) -> str:
        payload = {"vertices": self.vertex_count, "edges": sorted(list(e) for e in self.edges)}
        if self.labels is not None:
            payload["labels"] = list(self.labels)
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "Graph":
        payload = json.loads(text)
        labels = tuple(payload["labels"]) if "labels" in payload else None
        return Graph(payload["vertices"], frozenset(tuple(e) for e in payload["edges"]), labels)


@dataclass(frozen=True)
class GraphComplex:
    """A graph together with its enumerated simplex sets G_k."""

    graph: Graph
    simplices: tuple  # simplices[k] = ordered list of ascending (k+1)-tuples
    index: tuple  # index[k] = dict tuple -> position

    @property
    def top_dim(self) -> int:
        return len(self.simplices) - 1

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.top_dim else 0

    def counts(self) -> tuple:
        return tuple(len(s) for s in self.simplices)


def build_complex(g: Graph, max_dim: Optional[int] = None) -> GraphComplex:
    """Enumerate all complete subgraphs up to max_dim by clique extension."""
    adj = g.adjacency()
    levels = [[(v,) for v in range(g.vertex_count)]]
    while max_dim is None or len(levels) - 1 < max_dim:
        previous = levels[-1]
        nxt = []
        for simplex in previous:
            common = set(range(simplex[-1] + 1, g.vertex_count))
            for v in simplex:
                common &= adj[v]
            for w in sorted(common):
                if w > simplex[-1]:
                    nxt.append(simplex + (w,))
        if not nxt:
            break
        levels.append(nxt)
    index = tuple({s: i for i, s in enumerate(level)} for level in levels)
    return GraphComplex(g, tuple(tuple(level) for level in levels), index)


# ---------------------------------------------------------------------------
# Generators

_OCTAHEDRON_EDGES = [
    (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 4), (2, 5), (3, 4), (3, 5),
]

# Icosahedron: top vertex 0, upper ring 1-5, lower ring 6-10, bottom 11.
_ICOSAHEDRON_EDGES = (
    [(0, i) for i in range(1, 6)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 6 + i) for i in range(5)]
    + [(1 + (i + 1) % 5, 6 + i) for i in range(5)]
    + [(11, 6 + i) for i in range(5)]
)

_CUBE_EDGES = [
    (0, 1), (1, 2), (2, 3), (0, 3),
    (4, 5), (5, 6), (6, 7), (4, 7),
    (0, 4), (1, 5), (2, 6), (3, 7),
]


def hex_patch(radius: int) -> Graph:
    """Flat triangular-lattice disc: all hex-lattice points within a radius."""
    if radius < 1:
        raise DomainError("hex_patch needs radius >= 1")
    points = []
    for q in range(-radius, radius + 1):
        for r in range(-radius, radius + 1):
            if max(abs(q), abs(r), abs(q + r)) <= radius:
                points.append((q, r))
    points.sort()
    back = {p: i for i, p in enumerate(points)}
    directions = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]
    edges = set()
    for (q, r), i in back.items():
        for dq, dr in directions:
            j = back.get((q + dq, r + dr))
            if j is not None:
                edges.add((min(i, j), max(i, j)))
    return Graph(len(points), frozenset(edges))


def hex_annulus(radius: int = 2) -> Graph:
    """Hex patch with the central vertex removed; one hole (b_1 = 1)."""
    patch = hex_patch(radius)
    # the origin is the interior (degree-6) vertex whose neighbors are all
    # interior as well
    center = None
    degrees = [len(patch.neighbors(v)) for v in range(patch.vertex_count)]
    interior = [v for v in range(patch.vertex_count) if degrees[v] == 6]
    # the origin is adjacent only to other degree-6 vertices
    for v in interior:
        if all(degrees[w] == 6 for w in patch.neighbors(v)):
            center = v
            break
    if center is None:
        raise DomainError("no interior vertex found")
    sub, _ = patch.induced(set(range(patch.vertex_count)) - {center})
    return sub


def moebius_strip() -> Graph:
    """Triangulated Moebius band: the square of C_9 (9 triangles, odd twist)."""
    n = 9
    edges = set()
    for i in range(n):
        edges.add(tuple(sorted((i, (i + 1) % n))))
        edges.add(tuple(sorted((i, (i + 2) % n))))
    return Graph(n, frozenset(edges))


def generate(name: str, n: Optional[int] = None) -> Graph:
    """Standard graph families; fixed tables for the named polyhedra.

    ``linear`` follows the n+1-vertices convention; ``path`` takes an
    explicit vertex count instead.
    """
    if name == "complete":
        if n is None or n < 1:
            raise DomainError("complete needs n >= 1 vertices")
        return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))
    if name == "cycle":
        if n is None or n < 3:
            raise DomainError("cycle needs n >= 3")
        return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))
    if name == "wheel":
        if n is None or n < 4:
            raise DomainError("wheel needs n >= 4 rim vertices")
        rim = {(i, (i + 1) % n) for i in range(n)}
        spokes = {(i, n) for i in range(n)}
        return Graph(n + 1, frozenset(rim | spokes))
    if name == "star":
        if n is None or n < 1:
            raise DomainError("star needs n >= 1 rays")
        return Graph(n + 1, frozenset((i, n) for i in range(n)))
    if name == "linear":
        if n is None or n < 1:
            raise DomainError("linear needs n >= 1 edges")
        return Graph(n + 1, frozenset((i, i + 1) for i in range(n)))
    if name == "path":
        if n is None or n < 1:
            raise DomainError("path needs n >= 1 vertices")
        return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))
    if name == "octahedron":
        return Graph(6, frozenset(_OCTAHEDRON_EDGES))
    if name == "icosahedron":
        return Graph(12, frozenset(_ICOSAHEDRON_EDGES))
    if name == "cube":
        return Graph(8, frozenset(_CUBE_EDGES))
    if name == "hexpatch":
        return hex_patch(n if n is not None else 2)
    if name == "annulus":
        return hex_annulus(n if n is not None else 2)
    if name == "moebius":
        return moebius_strip()
    raise DomainError(f"unknown generator {name!r}")


def parse_generator(spec: str) -> Graph:
    """Parse a 'name' or 'name:param' generator string, e.g. 'cycle:7'."""
    if ":" in spec:
        name, _, param = spec.partition(":")
        return generate(name, int(param))
    return generate(spec)


# ---------------------------------------------------------------------------
# Geometric classifiers


def unit_sphere(c: GraphComplex, v: int) -> tuple:
    """Induced subgraph on the neighbors of v; returns (graph, relabel map)."""
    if not 0 <= v < c.graph.vertex_count:
        raise DomainError(f"vertex {v} out of range")
    return c.graph.induced(c.graph.neighbors(v))


def connected_components(g: Graph) -> list:
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    components = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(comp))
    return components


def is_path_graph(g: Graph) -> bool:
    """A single path P_m with m >= 2 vertices (a chain of 1-simplices)."""
    if g.vertex_count < 2 or len(g.edges) != g.vertex_count - 1:
        return False
    if len(connected_components(g)) != 1:
        return False
    degrees = sorted(len(g.neighbors(v)) for v in range(g.vertex_count))
    return degrees.count(1) == 2 and all(d <= 2 for d in degrees)


def is_cycle_graph(g: Graph, min_len: int = 3) -> bool:
    if g.vertex_count < min_len or len(g.edges) != g.vertex_count:
        return False
    if len(connected_components(g)) != 1:
        return False
    return all(len(g.neighbors(v)) == 2 for v in range(g.vertex_count))


@dataclass(frozen=True)
class Classification:
    kind: str  # "curve" | "surface" | "solid" | "other"
    boundary: tuple  # boundary vertex indices
    flat: bool = False


def _classify_graph(g: Graph) -> Classification:
    if g.vertex_count == 0:
        return Classification("other", ())
    c = build_complex(g)
    return classify(c)


def classify(c: GraphComplex) -> Classification:
    """Curve / surface / solid classification by unit-sphere shape."""
    g = c.graph
    if g.vertex_count == 0:
        return Classification("other", ())
    sphere_cache = [unit_sphere(c, v)[0] for v in range(g.vertex_count)]

    def all_curve():
        boundary = []
        for v, s in enumerate(sphere_cache):
            if len(s.edges) != 0 or s.vertex_count not in (1, 2):
                return None
            if s.vertex_count == 1:
                boundary.append(v)
        return Classification("curve", tuple(boundary))

    def all_surface():
        boundary = []
        interior_c6 = True
        for v, s in enumerate(sphere_cache):
            if is_path_graph(s):
                boundary.append(v)
            elif is_cycle_graph(s, min_len=4):
                if s.vertex_count != 6:
                    interior_c6 = False
            else:
                return None
        return Classification("surface", tuple(boundary), flat=interior_c6)

    def all_solid():
        boundary = []
        for v, s in enumerate(sphere_cache):
            sub = _classify_graph(s)
            if sub.kind != "surface":
                return None
            chi = _euler_of_graph(s)
            if sub.boundary and chi == 1:
                boundary.append(v)  # sphere is a disc: boundary point
            elif not sub.boundary and chi == 2:
                pass  # sphere is a 2-sphere: interior point
            else:
                return None
        return Classification("solid", tuple(boundary))

    for attempt in (all_curve, all_surface, all_solid):
        result = attempt()
        if result is not None:
            return result
    return Classification("other", ())


def _euler_of_graph(g: Graph) -> int:
    counts = build_complex(g).counts()
    return sum((-1) ** k * v for k, v in enumerate(counts))


# ---------------------------------------------------------------------------
# Orientations


@dataclass(frozen=True)
class Orientation:
    """Per-simplex signs (relative to ascending order) on a region, plus the
    induced orientation of the free boundary faces."""

    degree: int
    signs: dict  # simplex tuple -> +1/-1
    boundary_signs: dict  # face tuple -> +1/-1


def _faces(simplex: tuple):
    for i in range(len(simplex)):
        yield i, simplex[:i] + simplex[i + 1:]


def orient_region(c: GraphComplex, k: int, region) -> Orientation:
    """Propagate consistent orientations over a connected set of k-simplices.

    Adjacent simplices (sharing a (k-1)-face) must induce opposite
    orientations on the shared face.  The first region simplex is seeded +1.
    """
    region = [tuple(s) for s in region]
    if not region:
        raise DomainError("empty region")
    if k < 1:
        raise DomainError("orientation needs degree >= 1")
    for s in region:
        if s not in c.index[k]:
            raise DomainError(f"{s} is not a {k}-simplex of the complex")

    face_map = {}  # face -> list of (simplex, position)
    for s in region:
        for i, f in _faces(s):
            face_map.setdefault(f, []).append((s, i))

    signs = {region[0]: 1}
    queue = [region[0]]
    while queue:
        s = queue.pop()
        for i, f in _faces(s):
            for t, j in face_map[f]:
                if t == s:
                    continue
                want = -signs[s] * (-1) ** i * (-1) ** j
                if t in signs:
                    if signs[t] != want:
                        raise NonOrientableError(f"orientation clash on face {f}")
                else:
                    signs[t] = want
                    queue.append(t)
    if len(signs) != len(region):
        raise DomainError("region is not connected")

    boundary_signs = {}
    for f, incidences in face_map.items():
        if len(incidences) == 1:
            s, i = incidences[0]
            boundary_signs[f] = signs[s] * (-1) ** i
    return Orientation(k, signs, boundary_signs)


# ---------------------------------------------------------------------------
# Level curves


def level_curve(c: GraphComplex, f, cut) -> Graph:
    """Graph of sign-change edges, linked when two such edges share a triangle.

    On a boundaryless surface the result is a finite union of cycles.
    """
    g = c.graph
    values = [f[v] for v in range(g.vertex_count)]
    if len(set(values)) != len(values):
        raise DomainError("level_curve needs an injective function")
    if any(v == cut for v in values):
        raise DomainError("cut collides with a function value")
    crossing = [e for e in sorted(c.simplices[1]) if (values[e[0]] - cut) * (values[e[1]] - cut) < 0]
    back = {e: i for i, e in enumerate(crossing)}
    new_edges = set()
    for tri in c.simplices[2] if c.top_dim >= 2 else ():
        hits = [back[f2] for _, f2 in _faces(tri) if f2 in back]
        for a in range(len(hits)):
            for b in range(a + 1, len(hits)):
                new_edges.add((min(hits[a], hits[b]), max(hits[a], hits[b])))
    labels = tuple(f"{a}-{b}" for a, b in crossing)
    return Graph(len(crossing), frozenset(new_edges), labels)
