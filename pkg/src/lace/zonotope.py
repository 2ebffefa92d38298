"""Lattice zonotopes: Ehrhart polynomials, h* and h*_r, brute-force counts.

File format: one generator per line (space-separated integers), optional
``translate: t1 t2 ...`` line, ``#`` comments.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from . import ftriangle as ft
from .certificate import Certificate
from .errors import CountingBoundExceeded, ParseError, PathMismatch
from .operators import colored_D, edgewise_U
from .poly import Poly, binom, format_poly, series_numerator, std_to_binomial_basis
from .roots import is_real_rooted
from .theorems import c_ineq1, certify_main_theorem

COUNT_LIMIT = 10**6


def _det(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _rank(vecs) -> int:
    rows = [[Fraction(v) for v in r] for r in vecs]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def _complement(basis, dim) -> list[tuple[int, ...]]:
    """Integer basis of the vectors orthogonal to every row of ``basis``."""
    m = [[Fraction(v) for v in r] for r in basis]
    pivots = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [v / m[r][c] for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    out = []
    for free in (c for c in range(dim) if c not in pivots):
        x = [Fraction(0)] * dim
        x[free] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -m[i][free]
        den = math.lcm(*(v.denominator for v in x))
        out.append(tuple(int(v * den) for v in x))
    return out


@dataclass(frozen=True)
class Zonotope:
    generators: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...] | None = None

    def __post_init__(self):
        lens = {len(g) for g in self.generators}
        if self.translation is not None:
            lens.add(len(self.translation))
        if len(lens) > 1:
            raise ParseError("generators and translation must share one ambient dimension")

    @property
    def ambient(self) -> int:
        if self.generators:
            return len(self.generators[0])
        return len(self.translation) if self.translation else 0

    @property
    def shift(self) -> tuple[int, ...]:
        return self.translation or (0,) * self.ambient

    @cached_property
    def dim(self) -> int:
        return _rank(self.generators) if self.generators else 0

    @classmethod
    def cube(cls, n: int, side: int = 1) -> "Zonotope":
        return cls(tuple(tuple(side if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_text(cls, text: str) -> "Zonotope":
        gens, trans = [], None
        for ln in text.splitlines():
            ln = ln.split("#", 1)[0].strip()
            if not ln:
                continue
            try:
                if ln.startswith("translate:"):
                    trans = tuple(int(v) for v in ln.split(":", 1)[1].split())
                else:
                    gens.append(tuple(int(v) for v in ln.split()))
            except ValueError:
                raise ParseError(f"bad zonotope line {ln!r}")
        return cls(tuple(gens), trans)

    @classmethod
    def load(cls, path) -> "Zonotope":
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        out = "".join(" ".join(map(str, g)) + "\n" for g in self.generators)
        if self.translation is not None:
            out += "translate: " + " ".join(map(str, self.translation)) + "\n"
        return out


def _minor_gcd(vecs) -> int:
    k, N = len(vecs), len(vecs[0])
    g = 0
    for cols in itertools.combinations(range(N), k):
        g = math.gcd(g, _det([[v[c] for c in cols] for v in vecs]))
    return g


def ehrhart_polynomial(Z: Zonotope) -> Poly:
    """sum over linearly independent subsets S of gcd(maximal minors of S) x^|S|."""
    coeffs = [0] * (Z.dim + 1)
    coeffs[0] = 1
    for k in range(1, Z.dim + 1):
        for S in itertools.combinations(Z.generators, k):
            g = _minor_gcd(S)
            coeffs[k] += g  # dependent subsets have all minors zero
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# brute force


@dataclass(frozen=True)
class _HRep:
    basis: tuple  # n independent generators spanning the affine directions
    rows: tuple  # (u, lo, hi) with lo <= u.y <= hi on the zonotope at the origin


def _hrep(Z: Zonotope) -> _HRep:
    gens = [g for g in Z.generators if any(g)]
    n = Z.dim
    basis = []
    for g in gens:
        if _rank(basis + [g]) > len(basis):
            basis.append(g)
    rows = []
    N = Z.ambient
    if n >= 1:
        seen = set()
        for S in itertools.combinations(gens, n - 1):
            if n > 1 and _rank(list(S)) < n - 1:
                continue
            # u = sum alpha_j basis_j, orthogonal to every generator in S
            cond = [[sum(s[t] * b[t] for t in range(N)) for b in basis] for s in S]
            alpha = _complement(cond, n)[0] if cond else [1] + [0] * (n - 1)
            u = [sum(alpha[j] * basis[j][t] for j in range(n)) for t in range(N)]
            den = math.lcm(*(x.denominator for x in u))
            u = [int(x * den) for x in u]
            g = math.gcd(*u)
            u = tuple(x // g for x in u)
            if u in seen or tuple(-x for x in u) in seen:
                continue
            seen.add(u)
            dots = [sum(a * b for a, b in zip(u, gen)) for gen in gens]
            rows.append((u, sum(min(0, d) for d in dots), sum(max(0, d) for d in dots)))
    return _HRep(tuple(basis), tuple(rows))


def _box(Z: Zonotope, m: int):
    t = Z.shift
    lo = [m * t[i] + m * sum(min(0, g[i]) for g in Z.generators) for i in range(Z.ambient)]
    hi = [m * t[i] + m * sum(max(0, g[i]) for g in Z.generators) for i in range(Z.ambient)]
    return lo, hi


def _enumerate(Z: Zonotope, m: int, interior: bool):
    if Z.dim == 0:
        # a single point (m * translation); it is its own relative interior
        return 1
    lo, hi = _box(Z, m)
    size = math.prod(h - l + 1 for l, h in zip(lo, hi))
    if size > COUNT_LIMIT:
        raise CountingBoundExceeded(f"bounding box of {m}Z has {size} points (limit {COUNT_LIMIT})")
    H = _hrep(Z)
    # y lies in the span of the generators iff it is orthogonal to the complement
    perp = _complement(H.basis, Z.ambient)
    t = Z.shift
    count = 0
    for y in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        y = [a - m * b for a, b in zip(y, t)]
        if any(sum(p * q for p, q in zip(w, y)) for w in perp):
            continue
        ok = True
        for u, a, b in H.rows:
            d = sum(p * q for p, q in zip(u, y))
            if interior:
                if not m * a < d < m * b:
                    ok = False
                    break
            elif not m * a <= d <= m * b:
                ok = False
                break
        count += ok
    return count


def count_lattice_points(Z: Zonotope, m: int) -> int:
    """#(mZ ∩ Z^N) by enumerating the bounding box."""
    return _enumerate(Z, m, interior=False)


def count_interior_points(Z: Zonotope, m: int = 1) -> int:
    """Lattice points in the relative interior of mZ."""
    return _enumerate(Z, m, interior=True)


# ---------------------------------------------------------------------------
# h* and h*_r


def hstar(Z: Zonotope) -> Poly:
    iota = ehrhart_polynomial(Z)
    return series_numerator([iota(m) for m in range(Z.dim + 1)], Z.dim)


def hstar_r_series(Z: Zonotope, r: int) -> Poly:
    """(1-x)^n (1 + sum_{m>=1} (iota(rm) - iota(rm-1)) x^m), truncated to degree n."""
    n = Z.dim
    iota = ehrhart_polynomial(Z)
    g = [Fraction(1)] + [iota(r * m) - iota(r * m - 1) for m in range(1, n + 1)]
    return Poly(sum(((-1) ** j * binom(n, j) * g[i - j] for j in range(i + 1)), Fraction(0)) for i in range(n + 1))


def binomial_coefficients(Z: Zonotope) -> list[Fraction]:
    """c with iota(Z; x) = sum c_i x^i (1+x)^(n-i)."""
    return std_to_binomial_basis(ehrhart_polynomial(Z), Z.dim)


def hstar_r(Z: Zonotope, r: int) -> Poly:
    """h*_r by three routes (series, U^n_r(h*), D_{n,r}(c)); they must agree."""
    if r < 1:
        raise ValueError("r must be positive")
    n = Z.dim
    a = hstar_r_series(Z, r)
    b = edgewise_U(n, r, hstar(Z))
    c = colored_D(n, r, Poly(binomial_coefficients(Z)))
    if not a == b == c:
        raise PathMismatch(f"h*_{r}: series {a}, U^n_r(h*) {b}, D_n,r(c) {c}")
    return a


def interior_point_exists(Z: Zonotope) -> bool:
    """(-1)^n iota(Z; -1) >= 1; a point counts as its own relative interior."""
    if Z.dim == 0:
        return True
    return (-1) ** Z.dim * ehrhart_polynomial(Z)(-1) >= 1


def certify_zonotope(Z: Zonotope, r: int) -> Certificate:
    """Real-rootedness of h*_r, plus the decomposition when an interior point exists."""
    n = Z.dim
    cert = Certificate(f"zonotope of dimension {n}, r = {r}", "holds")
    c = binomial_coefficients(Z)
    hr = hstar_r(Z, r)
    interior = interior_point_exists(Z)
    cert.witnesses.append({
        "dimension": n,
        "ehrhart": ehrhart_polynomial(Z).to_json(),
        "hstar": hstar(Z).to_json(),
        "hstar_r": hr.to_json(),
        "c": [str(v) for v in c],
        "interior_point": interior,
    })
    ok = cert.report("c nonnegative integers", all(v >= 0 and v.denominator == 1 for v in c))
    rr = is_real_rooted(hr, subject=f"h*_{r} = {format_poly(hr)}")
    cert.parts.append(rr)
    ok &= cert.report("(a) h*_r real-rooted", bool(rr))
    if interior:
        for name, holds in c_ineq1(c):
            ok &= cert.report(name, holds)
        F = ft.barycentric(n) if r == 1 else ft.colored(r, n)
        sub = certify_main_theorem(F, n, Poly(c), "a")
        dec = sub.witnesses[0] if sub.witnesses else None
        if dec is not None and Poly.from_json(dec["a"]) + Poly.from_json(dec["b"]).shift(1) != hr:
            raise PathMismatch("decomposition does not reconstruct h*_r")
        cert.parts.append(sub)
        ok &= cert.report("(b) nonnegative real-rooted symmetric decomposition",
                          sub.verdict in ("nonneg_real_rooted_sym_decomp", "interlacing_sym_decomp"))
    if not ok:
        cert.verdict = "fails"
    return cert
