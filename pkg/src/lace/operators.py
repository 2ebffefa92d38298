"""Subdivision operators and the polynomials p_{F,n,k}.

For an f-triangle F the operator D_{F,n} sends h(Delta, x) to the
h-polynomial of the F-uniform triangulation of Delta.  It is determined by
the images p_{F,n,k} = D_{F,n}(x^k), which are generated row by row from
F alone:

    theta_m   = h_F(sigma_m) - sum_{k<m} p_{m-1,k}      (stored as p_{m-1,m})
    p_{m,k}   = x * sum_{i<k} p_{m-1,i} + sum_{i=k..m} p_{m-1,i}

Operators that also have a closed description (barycentric D_n through its
generating function, D_{n,r} through the Veronese composition and through
its own series) are computed both ways and compared; a disagreement raises
PathMismatch instead of picking one answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import ftriangle as ft
from .errors import DegreeExceedsBound, InconsistentFTriangle, OutOfRange, PathMismatch
from .ftriangle import FTriangle, h_boundary, h_simplex, interior_f
from .poly import (
    ONE,
    ZERO,
    Poly,
    SymDecomp,
    binom,
    binomial_basis_to_std,
    geometric_block,
    reverse,
    series_numerator,
    symmetric_decomposition,
    veronese,
)


def _coeffs(h: Poly, n: int) -> list[Fraction]:
    if len(h.coeffs) - 1 > n:
        raise DegreeExceedsBound(f"deg({h}) exceeds n = {n}")
    return [h[i] for i in range(n + 1)]


# ---------------------------------------------------------------------------
# the p_{F,n,k} engine


@dataclass(frozen=True)
class PRowTable:
    """rows[m] = (p_{m,0}, ..., p_{m,m}); thetas[m] = theta_F(sigma_m) = p_{m-1,m}."""

    F: FTriangle
    n: int
    rows: tuple[tuple[Poly, ...], ...]
    thetas: tuple[Poly, ...]

    def p(self, m: int, k: int) -> Poly:
        if k == m + 1:
            return self.theta(m + 1)
        if not 0 <= k <= m <= self.n:
            raise OutOfRange(f"p_({m},{k}) not in table of size {self.n}")
        return self.rows[m][k]

    def theta(self, m: int) -> Poly:
        if not 1 <= m <= self.n:
            raise OutOfRange(f"theta({m}) not in table of size {self.n}")
        return self.thetas[m]

    def Q(self, m: int) -> tuple[Poly, ...]:
        """(p_{m,0}, ..., p_{m,m})."""
        return self.rows[m]

    def P(self, m: int) -> tuple[Poly, ...]:
        """(p_{m-1,0}, ..., p_{m-1,m-1}, theta_m)."""
        return self.rows[m - 1] + (self.thetas[m],)

    def to_json(self) -> dict:
        return {
            "ftriangle": [list(r) for r in self.F.rows[: self.n + 1]],
            "rows": {str(m): [p.to_json() for p in row] for m, row in enumerate(self.rows)},
            "theta": {str(m): self.thetas[m].to_json() for m in range(1, self.n + 1)},
        }


def build_p_rows(F: FTriangle, n: int) -> PRowTable:
    """Rows 0..n of p_{F,m,k}, with the consistency checks run on every row.

    Raises InconsistentFTriangle when a row breaks the reflection symmetry
    x^m p_{m,k}(1/x) = p_{m,m-k}, when theta is not symmetric, or when the
    boundary sum disagrees with the h-polynomial of the boundary computed
    independently from interior face counts.
    """
    if not 0 <= n <= F.d:
        raise OutOfRange(f"n = {n} outside 0..{F.d}")
    return _build_p_rows(F, n)


@lru_cache(maxsize=256)
def _build_p_rows(F: FTriangle, n: int) -> PRowTable:
    rows: list[tuple[Poly, ...]] = [(ONE,)]
    thetas: list[Poly] = [ZERO]
    x = Poly([0, 1])
    for m in range(1, n + 1):
        prev = rows[-1]
        bdry = sum(prev, ZERO)
        if bdry != h_boundary(F, m):
            raise InconsistentFTriangle(
                f"row {m}: sum of p_({m - 1},k) is {bdry}, boundary h-polynomial is {h_boundary(F, m)}"
            )
        theta = h_simplex(F, m) - bdry
        if reverse(theta, m) != theta:
            raise InconsistentFTriangle(f"theta({m}) = {theta} is not symmetric about {m}/2")
        ext = prev + (theta,)
        # prefix/suffix sums give every p_{m,k} in O(m) additions
        suffix = [ZERO] * (m + 2)
        for i in range(m, -1, -1):
            suffix[i] = suffix[i + 1] + ext[i]
        row = []
        prefix = ZERO
        for k in range(m + 1):
            row.append(prefix * x + suffix[k])
            prefix = prefix + ext[k]
        for k in range(m + 1):
            if reverse(row[k], m) != row[m - k]:
                raise InconsistentFTriangle(f"p_({m},{k}) reflected is not p_({m},{m - k})")
        if row[0] != h_simplex(F, m):
            raise InconsistentFTriangle(f"p_({m},0) differs from h_F(sigma_{m})")
        rows.append(tuple(row))
        thetas.append(theta)
    return PRowTable(F, n, tuple(rows), tuple(thetas))


def feasibility_report(F: FTriangle, n: int | None = None) -> list[tuple[str, bool]]:
    """Operational stand-ins for feasibility; none of them proves infeasibility."""
    n = F.d if n is None else n
    out = []
    out.append(("interior face counts nonnegative",
                all(interior_f(F, k, m) >= 0 for m in range(n + 1) for k in range(m + 1))))
    try:
        table = build_p_rows(F, n)
        out.append(("engine consistency", True))
        out.append(("p_(m,k) nonnegative",
                    all(c >= 0 for row in table.rows for p in row for c in p.coeffs)))
    except InconsistentFTriangle:
        out.append(("engine consistency", False))
    return out


def apply_DF(F: FTriangle, n: int, h: Poly) -> Poly:
    """D_{F,n}(h) = sum_k c_k p_{F,n,k}."""
    c = _coeffs(h, n)
    table = build_p_rows(F, n)
    return _combine(c, table.rows[n])


def _combine(c, polys) -> Poly:
    out: list[Fraction] = []
    for ck, p in zip(c, polys):
        if ck:
            if len(p.coeffs) > len(out):
                out.extend([Fraction(0)] * (len(p.coeffs) - len(out)))
            for i, v in enumerate(p.coeffs):
                out[i] += ck * v
    return Poly(out)


def apply_EF(F: FTriangle, fpoly: Poly) -> Poly:
    """E_F(x^m) = sum_k f°_F(k, m) x^k, extended linearly."""
    if len(fpoly.coeffs) - 1 > F.d:
        raise DegreeExceedsBound(f"deg({fpoly}) exceeds the f-triangle size {F.d}")
    out = [Fraction(0)] * len(fpoly.coeffs)
    for m, c in enumerate(fpoly.coeffs):
        if c:
            for k in range(m + 1):
                out[k] += c * interior_f(F, k, m)
    return Poly(out)


# ---------------------------------------------------------------------------
# barycentric, edgewise and colored operators


def bary_D_series(n: int, h: Poly) -> Poly:
    """D_n(h) as the numerator of sum_m f(m) x^m, f = sum c_i x^i (1+x)^(n-i)."""
    f = binomial_basis_to_std(_coeffs(h, n), n)
    return series_numerator([f(m) for m in range(n + 1)], n)


def bary_D(n: int, h: Poly, check: bool = True) -> Poly:
    out = bary_D_series(n, h)
    if check:
        other = apply_DF(ft.barycentric(n), n, h)
        if other != out:
            raise PathMismatch(f"D_{n}({h}): series gives {out}, barycentric f-triangle gives {other}")
    return out


def edgewise_U(n: int, r: int, h: Poly) -> Poly:
    """U^n_r(h) = S^r_0((1 + x + ... + x^(r-1))^n h)."""
    if r < 1:
        raise ValueError("r must be positive")
    _coeffs(h, n)
    return veronese(geometric_block(r) ** n * h, r, 0)


def colored_D_series(n: int, r: int, h: Poly) -> Poly:
    """D_{n,r}(h) from f(0) + sum_{m>=1} (f(rm) - f(rm-1)) x^m = D_{n,r}(h)/(1-x)^n."""
    f = binomial_basis_to_std(_coeffs(h, n), n)
    g = [f(0)] + [f(r * m) - f(r * m - 1) for m in range(1, n + 1)]
    return Poly(
        sum(((-1) ** j * binom(n, j) * g[i - j] for j in range(i + 1)), Fraction(0))
        for i in range(n + 1)
    )


def colored_D(n: int, r: int, h: Poly, check: bool = True) -> Poly:
    """D_{n,r} = U^n_r o D_n."""
    out = edgewise_U(n, r, bary_D(n, h, check=check))
    if check:
        other = colored_D_series(n, r, h)
        if other != out:
            raise PathMismatch(f"D_({n},{r})({h}): composition gives {out}, series gives {other}")
    return out


# ---------------------------------------------------------------------------
# the polynomials p^<r,j>_{n,k}


@dataclass(frozen=True)
class ColoredPTable:
    """entries[(n, j, k)] = p^<r,j>_{n,k}."""

    r: int
    n: int
    entries: dict

    def __getitem__(self, key) -> Poly:
        return self.entries[key]

    def row(self, n: int, j: int) -> tuple[Poly, ...]:
        return tuple(self.entries[(n, j, k)] for k in range(n + 1))

    def concatenated(self, n: int) -> tuple[Poly, ...]:
        """(P^<r,r-1>_n, ..., P^<r,1>_n, P^<r,0>_n)."""
        out: tuple[Poly, ...] = ()
        for j in range(self.r - 1, -1, -1):
            out += self.row(n, j)
        return out

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "entries": [
                {"n": m, "j": j, "k": k, "p": p.to_json()}
                for (m, j, k), p in sorted(self.entries.items())
            ],
        }


def colored_p_by_definition(n: int, r: int) -> dict:
    """p^<r,j>_{m,k} = S^r_j((1 + ... + x^(r-1))^m p_{m,k}) for m <= n."""
    bary = build_p_rows(ft.barycentric(n), n)
    block = geometric_block(r)
    out = {}
    for m in range(n + 1):
        gm = block ** m
        for k in range(m + 1):
            prod = gm * bary.rows[m][k]
            for j in range(r):
                out[(m, j, k)] = veronese(prod, r, j)
    return out


def colored_p_by_recurrence(n: int, r: int) -> dict:
    """The same polynomials from row 0 = (1 for j = 0, else 0) and the Veronese recurrence."""
    x = Poly([0, 1])
    out = {(0, j, 0): (ONE if j == 0 else ZERO) for j in range(r)}
    for m in range(1, n + 1):
        rowsum = [sum((out[(m - 1, j, i)] for i in range(m)), ZERO) for j in range(r)]
        for j in range(r):
            above = sum(rowsum[j + 1:], ZERO)
            below = sum(rowsum[:j], ZERO)
            prev = [out[(m - 1, j, i)] for i in range(m)]
            for k in range(m + 1):
                head = sum(prev[:k], ZERO)
                tail = sum(prev[k:], ZERO)
                out[(m, j, k)] = (above + head) * x + tail + below
    return out


def colored_p_table(n: int, r: int) -> ColoredPTable:
    if r < 1:
        raise ValueError("r must be positive")
    a = colored_p_by_definition(n, r)
    b = colored_p_by_recurrence(n, r)
    for key in a:
        if a[key] != b[key]:
            m, j, k = key
            raise PathMismatch(f"p^<{r},{j}>_({m},{k}): definition {a[key]} vs recurrence {b[key]}")
    return ColoredPTable(r, n, a)


def colored_theta(n: int, r: int, table: ColoredPTable | None = None) -> Poly:
    """theta_{F_r}(sigma_n) = x * sum_{j=1}^{r-1} sum_{k<n} p^<r,j>_{n-1,k}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = table if table is not None and table.n >= n - 1 else colored_p_table(n - 1, r)
    total = sum((table[(n - 1, j, k)] for j in range(1, r) for k in range(n)), ZERO)
    return total.shift(1)


# ---------------------------------------------------------------------------
# closed-form symmetric decompositions


def _prefix(c):
    out, acc = [], Fraction(0)
    for v in c:
        acc += v
        out.append(acc)
    return out


def _closed_form_wrt_n(table: PRowTable, n: int, c) -> SymDecomp:
    if n == 0:
        return SymDecomp(0, Poly([c[0]]), ZERO)
    x = Poly([0, 1])
    head = _prefix(c)  # c_0 + ... + c_i
    tail = _prefix(c[::-1])  # c_n + ... + c_{n-i}
    prev = table.rows[n - 1]
    a = table.thetas[n] * head[n]
    b = ZERO
    for i in range(n):
        a = a + prev[i] * Poly([head[i], head[n - i - 1]])
        b = b + prev[i] * (tail[i] - head[i])
    return SymDecomp(n, a, b)


def symdecomp_closed_form(F: FTriangle, n: int, h: Poly, wrt: int | None = None) -> SymDecomp:
    """Symmetric decomposition of D_{F,n}(h) from prefix sums of h and row n-1.

    ``wrt`` is n (default) or n-1; the latter needs c_n = 0 and goes through
    the reflected polynomial x^n h(1/x): if that decomposes as (A, B) with
    respect to n, then D_{F,n}(h) decomposes as (B, A/x) with respect to n-1.
    The result is compared against the generic triangular solve.
    """
    wrt = n if wrt is None else wrt
    c = _coeffs(h, n)
    table = build_p_rows(F, n)
    if wrt == n:
        dec = _closed_form_wrt_n(table, n, c)
    elif wrt == n - 1:
        if c[n] != 0:
            raise DegreeExceedsBound("decomposition with respect to n-1 needs c_n = 0")
        refl = _closed_form_wrt_n(table, n, c[::-1])
        a = refl.b
        b = Poly(refl.a.coeffs[1:]) if refl.a else ZERO
        if refl.a and refl.a[0] != 0:
            raise PathMismatch("reflected decomposition has a nonzero constant term")
        dec = SymDecomp(n - 1, a, b)
    else:
        raise ValueError(f"decomposition is with respect to n or n-1, got {wrt}")
    generic = symmetric_decomposition(_combine(c, table.rows[n]), wrt)
    if generic != dec:
        raise PathMismatch(f"closed form {dec} vs triangular solve {generic}")
    return dec
