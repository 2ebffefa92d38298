"""f-triangles of uniform triangulations.

Row j of an f-triangle lists the face numbers f(0, j), ..., f(j, j) of the
triangulation restricted to a (j-1)-dimensional face, with f(0, j) = 1
counting the empty face.  Text format::

    ftriangle d=3
    0: 1
    1: 1 1
    2: 1 3 2
    3: 1 7 12 6
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .errors import OutOfRange, ParseError
from .poly import Poly, binom, f_to_h


@dataclass(frozen=True)
class FTriangle:
    rows: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for j, row in enumerate(self.rows):
            if len(row) != j + 1:
                raise ParseError(f"row {j} must have {j + 1} entries, got {len(row)}")
            if row[0] != 1:
                raise ParseError(f"f(0,{j}) must be 1 (the empty face), got {row[0]}")
            if any(v < 0 for v in row):
                raise ParseError(f"row {j} has a negative entry")
            if row[j] < 1:
                raise ParseError(f"f({j},{j}) must be at least 1")

    @property
    def d(self) -> int:
        return len(self.rows) - 1

    def f(self, i: int, j: int) -> int:
        if not 0 <= j <= self.d:
            raise OutOfRange(f"row {j} outside 0..{self.d}")
        if not 0 <= i <= j:
            return 0
        return self.rows[j][i]

    def truncate(self, d: int) -> "FTriangle":
        if d > self.d:
            raise OutOfRange(f"cannot extend an f-triangle of size {self.d} to {d}")
        return FTriangle(self.rows[: d + 1], self.name)

    def to_text(self) -> str:
        lines = [f"ftriangle d={self.d}"]
        lines += [f"{j}: " + " ".join(str(v) for v in row) for j, row in enumerate(self.rows)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "") -> "FTriangle":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("ftriangle"):
            raise ParseError("missing 'ftriangle d=<n>' header")
        try:
            d = int(lines[0].split("d=", 1)[1])
        except (IndexError, ValueError):
            raise ParseError(f"bad header {lines[0]!r}")
        rows: dict[int, tuple[int, ...]] = {}
        for ln in lines[1:]:
            head, _, body = ln.partition(":")
            try:
                rows[int(head)] = tuple(int(v) for v in body.split())
            except ValueError:
                raise ParseError(f"bad row {ln!r}")
        if sorted(rows) != list(range(d + 1)):
            raise ParseError(f"expected rows 0..{d}, got {sorted(rows)}")
        return cls(tuple(rows[j] for j in range(d + 1)), name)

    @classmethod
    def load(cls, path) -> "FTriangle":
        path = Path(path)
        return cls.from_text(path.read_text(), name=path.stem)


def trivial(d: int) -> FTriangle:
    """The identity triangulation: f(i, j) = C(j, i)."""
    return FTriangle(tuple(tuple(binom(j, i) for i in range(j + 1)) for j in range(d + 1)), "trivial")


def _stirling2(n: int, k: int) -> int:
    return _stirling_table(n)[n][k]


@lru_cache(maxsize=None)
def _stirling_table(n: int):
    S = [[0] * (n + 2) for _ in range(n + 2)]
    S[0][0] = 1
    for a in range(1, n + 1):
        for b in range(1, a + 1):
            S[a][b] = b * S[a - 1][b] + S[a - 1][b - 1]
    return S


def barycentric(d: int) -> FTriangle:
    """Barycentric subdivision: chains of i nonempty faces of a j-simplex, i! S(j+1, i+1)."""
    return FTriangle(
        tuple(tuple(math.factorial(i) * _stirling2(j + 1, i + 1) for i in range(j + 1)) for j in range(d + 1)),
        "barycentric",
    )


def edgewise(r: int, d: int) -> FTriangle:
    """f-triangle of the r-fold edgewise subdivision, read off the construction."""
    from .complexes import extract_ftriangle

    return extract_ftriangle("esd", d, r)


def colored(r: int, d: int) -> FTriangle:
    """f-triangle of the r-colored barycentric subdivision, read off the construction."""
    from .complexes import extract_ftriangle

    return extract_ftriangle("sd_r", d, r)


def builtin(kind: str, d: int, r: int | None = None) -> FTriangle:
    kind = kind.lower()
    if kind == "trivial":
        return trivial(d)
    if kind in ("barycentric", "sd"):
        return barycentric(d)
    if kind in ("edgewise", "esd"):
        if r is None:
            raise ParseError("edgewise f-triangle needs r")
        return edgewise(r, d)
    if kind in ("colored", "sd_r"):
        if r is None:
            raise ParseError("colored f-triangle needs r")
        return colored(r, d)
    raise ParseError(f"unknown f-triangle {kind!r}")


def interior_f(F: FTriangle, k: int, n: int) -> int:
    """Interior (k-1)-faces of an F-uniform triangulation of the (n-1)-simplex.

    Inclusion-exclusion over the faces of the simplex.
    """
    if not k <= n <= F.d:
        raise OutOfRange(f"need k <= n <= {F.d}, got k={k}, n={n}")
    return sum((-1) ** (n - m) * binom(n, m) * F.f(k, m) for m in range(k, n + 1))


def h_simplex(F: FTriangle, n: int) -> Poly:
    """h-polynomial of the triangulation of the (n-1)-simplex."""
    if not 0 <= n <= F.d:
        raise OutOfRange(f"n = {n} outside 0..{F.d}")
    return f_to_h(F.rows[n], n)


def h_boundary(F: FTriangle, n: int) -> Poly:
    """h-polynomial of the induced triangulation of the boundary of the (n-1)-simplex.

    Its faces are those of the full triangulation minus the interior ones.
    """
    if not 1 <= n <= F.d:
        raise OutOfRange(f"n = {n} outside 1..{F.d}")
    fvec = [F.f(i, n) - interior_f(F, i, n) for i in range(n)]
    return f_to_h(fvec, n - 1)
