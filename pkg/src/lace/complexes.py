"""Abstract simplicial complexes and the literal subdivision constructions.

Complex file format: one facet per line, space-separated integer vertices,
``#`` starts a comment.  An empty line-free file (or a single empty facet)
is the complex {∅}.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable

import networkx as nx

from .errors import OutOfRange, ParseError, UniformityViolation
from .ftriangle import FTriangle, interior_f
from .poly import Poly, f_to_h

Face = tuple


@dataclass(frozen=True)
class SimplicialComplex:
    """Facets are sorted vertex tuples; ``carriers[v]`` (optional) is the face of
    the subdivided complex whose relative interior contains vertex v."""

    facets: tuple[Face, ...]
    carriers: dict | None = field(default=None, compare=False, repr=False, hash=False)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], carriers=None, reduce: bool = True):
        fs = {tuple(sorted(set(f))) for f in facets}
        if not fs:
            fs = {()}
        if reduce:
            fs = _maximal(fs)
        return cls(tuple(sorted(fs, key=lambda f: (len(f), f))), carriers)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """sigma_n: the (n-1)-simplex on vertices 0..n-1 (sigma_0 = {∅})."""
        return cls.from_facets([range(n)])

    @classmethod
    def boundary_of_simplex(cls, n: int) -> "SimplicialComplex":
        return cls.from_facets(itertools.combinations(range(n), n - 1))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(itertools.combinations(f, k))
        return frozenset(out)

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_dim)."""
        counts = [0] * (self.dim + 2)
        for face in self.faces:
            counts[len(face)] += 1
        return tuple(counts)

    def h_polynomial(self) -> Poly:
        return f_to_h(self.f_vector(), self.dim + 1)

    def h_vector(self) -> tuple:
        h = self.h_polynomial()
        return tuple(h[i] for i in range(self.dim + 2))

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic sum_i (-1)^i f_i, i >= -1."""
        return sum((-1) ** (i - 1) * c for i, c in enumerate(self.f_vector()))

    def skeleton(self, k: int) -> "SimplicialComplex":
        """All faces of dimension <= k."""
        if k > self.dim:
            raise OutOfRange(f"skeleton dimension {k} exceeds {self.dim}")
        pieces = []
        for f in self.facets:
            if len(f) <= k + 1:
                pieces.append(f)
            else:
                pieces.extend(itertools.combinations(f, k + 1))
        return SimplicialComplex.from_facets(pieces)

    def relabel(self, perm: dict) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(([perm[v] for v in f] for f in self.facets), reduce=False)

    def is_flag(self) -> bool:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(e for e in self.faces if len(e) == 2)
        return all(tuple(sorted(c)) in self.faces for c in nx.find_cliques(g))

    def to_text(self) -> str:
        return "".join(" ".join(map(str, f)) + "\n" for f in self.facets)

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        facets = []
        for ln in text.splitlines():
            ln = ln.split("#", 1)[0].strip()
            if not ln:
                continue
            try:
                facets.append([int(v) for v in ln.split()])
            except ValueError:
                raise ParseError(f"bad facet line {ln!r}")
        return cls.from_facets(facets)

    @classmethod
    def load(cls, path) -> "SimplicialComplex":
        return cls.from_text(Path(path).read_text())


def _maximal(fs: set) -> set:
    keep = []
    for f in sorted(fs, key=len, reverse=True):
        sf = set(f)
        if not any(sf <= set(g) for g in keep):
            keep.append(f)
    return set(keep)


def random_complex(n_vertices: int, dim: int, n_facets: int, seed: int,
                   pure: bool = False) -> SimplicialComplex:
    """m random facets from an n_vertices pool; the first has size dim+1.

    Sizes of the others are uniform in 1..dim+1 unless pure.  Duplicates and
    dominated facets are dropped.
    """
    rng = random.Random(seed)
    size = dim + 1
    facets = [rng.sample(range(n_vertices), size)]
    for _ in range(n_facets - 1):
        k = size if pure else rng.randint(1, size)
        facets.append(rng.sample(range(n_vertices), k))
    return SimplicialComplex.from_facets(facets)


# ---------------------------------------------------------------------------
# barycentric subdivision


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Chains of nonempty faces.  New vertex ids follow faces sorted by (size, vertices)."""
    nonempty = sorted((f for f in K.faces if f), key=lambda f: (len(f), f))
    ids = {f: i for i, f in enumerate(nonempty)}
    facets = []
    for F in K.facets:
        if not F:
            continue
        for perm in itertools.permutations(F):
            facets.append(tuple(sorted(ids[tuple(sorted(perm[:k]))] for k in range(1, len(F) + 1))))
    base = K.carriers
    carriers = {i: _compose_carrier(f, base) for f, i in ids.items()}
    return SimplicialComplex.from_facets(facets, carriers, reduce=False)


def _compose_carrier(face, base) -> tuple:
    if base is None:
        return face
    out = set()
    for v in face:
        out.update(base[v])
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# r-fold edgewise subdivision


def _iota(weights: tuple) -> tuple:
    return tuple(itertools.accumulate(weights))


def _compatible(a: tuple, b: tuple) -> bool:
    d = [x - y for x, y in zip(a, b)]
    return all(v in (0, 1) for v in d) or all(v in (0, -1) for v in d)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _esd_template(m: int, r: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Facets of esd_r(sigma_m) as tuples of weight vectors on positions 0..m-1."""
    if m == 0:
        return ((),)
    verts = list(_compositions(r, m))
    io = {w: _iota(w) for w in verts}
    g = nx.Graph()
    g.add_nodes_from(verts)
    for a, b in itertools.combinations(verts, 2):
        if _compatible(io[a], io[b]):
            g.add_edge(a, b)
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(g)]
    return tuple(sorted(cliques))


def _edgewise_from_facets(K: SimplicialComplex, r: int, facet_builder) -> SimplicialComplex:
    ids: dict = {}
    facets = []
    for F in K.facets:
        for cell in facet_builder(F):
            facets.append(tuple(sorted(ids.setdefault(v, len(ids)) for v in cell)))
    # relabel in a canonical order so output is independent of discovery order
    order = sorted(ids, key=lambda v: (len(v), v))
    canon = {ids[v]: i for i, v in enumerate(order)}
    facets = [tuple(sorted(canon[x] for x in f)) for f in facets]
    base = K.carriers
    carriers = {canon[ids[v]]: _compose_carrier(tuple(u for u, _ in v), base) for v in ids}
    return SimplicialComplex.from_facets(facets, carriers, reduce=False)


def edgewise_subdivision(K: SimplicialComplex, r: int) -> SimplicialComplex:
    """esd_r(K) with vertices ordered by integer label.

    Vertices of the result are maps f: V -> N with sum r and face support,
    canonicalised as sorted (vertex, weight) pairs with weight > 0.  Each
    facet of K contributes a relabelled copy of esd_r of a simplex; the
    prefix-sum condition only involves vertices of a common face, so this
    agrees with the definition over the whole vertex set (see
    ``edgewise_subdivision_literal``).
    """
    if r < 1:
        raise ValueError("r must be positive")

    def cells(F):
        for cell in _esd_template(len(F), r):
            yield [tuple((v, w) for v, w in zip(F, wt) if w) for wt in cell]

    return _edgewise_from_facets(K, r, cells)


def edgewise_subdivision_literal(K: SimplicialComplex, r: int) -> SimplicialComplex:
    """esd_r(K) straight from the definition, prefix sums over all of V(K)."""
    V = K.vertices
    pos = {v: i for i, v in enumerate(V)}

    def iota(f):
        w = [0] * len(V)
        for v, c in f:
            w[pos[v]] = c
        return _iota(tuple(w))

    def cells(F):
        verts = [tuple((v, w) for v, w in zip(F, wt) if w) for wt in _compositions(r, len(F))]
        io = {f: iota(f) for f in verts}
        g = nx.Graph()
        g.add_nodes_from(verts)
        for a, b in itertools.combinations(verts, 2):
            if _compatible(io[a], io[b]):
                g.add_edge(a, b)
        for c in nx.find_cliques(g):
            yield c

    if K.facets == ((),):
        return K
    out = _edgewise_from_facets(K, r, cells)
    return SimplicialComplex.from_facets(out.facets, out.carriers)


def colored_subdivision(K: SimplicialComplex, r: int) -> SimplicialComplex:
    """sd_r(K) = esd_r(sd(K))."""
    return edgewise_subdivision(barycentric_subdivision(K), r)


# ---------------------------------------------------------------------------
# f-triangles read off constructions


def _construct(kind: str, K: SimplicialComplex, r: int | None) -> SimplicialComplex:
    base = SimplicialComplex(K.facets, {v: (v,) for v in K.vertices})
    if kind == "trivial":
        return base
    if kind == "sd":
        return barycentric_subdivision(base)
    if kind == "esd":
        return edgewise_subdivision(base, r)
    if kind == "sd_r":
        return colored_subdivision(base, r)
    raise ParseError(f"unknown construction {kind!r}")


def carrier_face_counts(sub: SimplicialComplex) -> dict:
    """(face size, carrier) -> number of faces of ``sub`` with that carrier."""
    masks = {v: sum(1 << u for u in c) for v, c in sub.carriers.items()}
    counts: dict = {}
    for face in sub.faces:
        m = 0
        for v in face:
            m |= masks[v]
        key = (len(face), m)
        counts[key] = counts.get(key, 0) + 1
    return counts


def extract_ftriangle(kind: str, d: int, r: int | None = None) -> FTriangle:
    """f-triangle of a construction, from its values on sigma_0, ..., sigma_d.

    Uniformity is verified on sigma_d: the number of faces of each size
    carried by a face of sigma_d must depend only on that face's size and
    equal the interior count predicted by the extracted triangle.
    """
    return _extract(kind, d, r)


@lru_cache(maxsize=None)
def _extract(kind, d, r):
    if kind in ("esd", "sd_r") and (r is None or r < 1):
        raise ValueError(f"{kind} needs a positive r")
    rows = []
    for j in range(d + 1):
        sub = _construct(kind, SimplicialComplex.simplex(j), r)
        rows.append(tuple(sub.f_vector()) + (0,) * (j + 1 - len(sub.f_vector())))
    name = {"trivial": "trivial", "sd": "barycentric", "esd": f"esd_{r}", "sd_r": f"colored_{r}"}[kind]
    F = FTriangle(tuple(rows), name)
    top = _construct(kind, SimplicialComplex.simplex(d), r)
    counts = carrier_face_counts(top)
    for mask in range(1 << d):
        size = bin(mask).count("1")
        for i in range(size + 1):
            got = counts.get((i, mask), 0)
            want = interior_f(F, i, size)
            if got != want:
                raise UniformityViolation(
                    f"{name}: {got} faces of size {i} interior to carrier {mask:b}, expected {want}"
                )
    return F
