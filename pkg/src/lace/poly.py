"""Exact dense univariate polynomials over the rationals.

A :class:`Poly` stores its coefficients low-to-high as a tuple of
:class:`fractions.Fraction` with trailing zeros trimmed, so the zero
polynomial is the empty tuple and has degree ``-inf``.  Everything in
this module is exact; floats are rejected at construction.

Besides ring arithmetic the module holds the handful of basis changes
that the operator code is built on: reflection ``x^n p(1/x)``, the
symmetric ``(a, b)`` decomposition, the binomial basis
``x^i (1+x)^(n-i)``, h-polynomials from f-vectors, Veronese sections,
gamma expansions and the numerator of a rational generating function.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import BadSectionIndex, DegreeExceedsBound, NotSymmetric, ParseError

NEG_INF = float("-inf")

# ---------------------------------------------------------------------------
# binomial coefficients

_DEFAULT_BINOM_BOUND = 64


def _binom_bound() -> int:
    raw = os.environ.get("LACE_BINOM_CACHE")
    if raw is None:
        return _DEFAULT_BINOM_BOUND
    try:
        return max(0, int(raw))
    except ValueError:
        raise ParseError(f"LACE_BINOM_CACHE must be an integer, got {raw!r}")


_pascal: list[list[int]] = []


def _build_pascal(bound: int) -> None:
    _pascal.clear()
    row = [1]
    for _ in range(bound + 1):
        _pascal.append(row)
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n.  Served from a Pascal table."""
    if k < 0 or n < 0 or k > n:
        return 0
    if not _pascal:
        _build_pascal(_binom_bound())
    if n < len(_pascal):
        return _pascal[n][k]
    return math.comb(n, k)


def reset_binomial_cache(bound: int | None = None) -> None:
    """Rebuild the Pascal table (re-reading ``LACE_BINOM_CACHE`` if no bound)."""
    _build_pascal(_binom_bound() if bound is None else bound)


# ---------------------------------------------------------------------------
# the polynomial type


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        try:
            return Fraction(c.strip())
        except ValueError:
            raise ParseError(f"not a rational number: {c!r}")
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(cs)
    while end and cs[end - 1] == 0:
        end -= 1
    return tuple(cs[:end])


class Poly:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([_as_fraction(c) for c in coeffs]))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        # caller guarantees Fractions and trimmed
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(_coerce(other), -1))

    def __rsub__(self, other):
        return add(_coerce(other), scale(self, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs or k == 0:
            return self
        return Poly._raw((Fraction(0),) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly._raw(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list):
            raise ParseError("polynomial JSON must be an array")
        out = []
        for c in data:
            if isinstance(c, bool) or not isinstance(c, (int, str)):
                raise ParseError(f"bad coefficient {c!r}")
            out.append(_as_fraction(c))
        return cls(out)


def _coerce(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly._raw(_trim(out))


def scale(p: Poly, c) -> Poly:
    c = _as_fraction(c)
    if c == 0:
        return ZERO
    return Poly._raw(tuple(c * a for a in p.coeffs))


def mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return Poly._raw(_trim(out))


def poly_sum(polys: Iterable[Poly]) -> Poly:
    out: list[Fraction] = []
    for p in polys:
        cs = p.coeffs
        if len(cs) > len(out):
            out.extend([Fraction(0)] * (len(cs) - len(out)))
        for i, c in enumerate(cs):
            out[i] += c
    return Poly._raw(_trim(out))


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lc = q.coeffs[-1]
    if len(r) - 1 < dq:
        return ZERO, p
    quo = [Fraction(0)] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / lc
        quo[k] = c
        if c:
            for i, qc in enumerate(q.coeffs):
                r[k + i] -= c * qc
    return Poly._raw(_trim(quo)), Poly._raw(_trim(r[:dq]))


def exact_div(p: Poly, q: Poly) -> Poly:
    quo, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError(f"{q} does not divide {p}")
    return quo


# ---------------------------------------------------------------------------
# reflection and symmetric decompositions


def _check_bound(p: Poly, n: int) -> None:
    if n < 0 and p:
        raise DegreeExceedsBound(f"bound {n} is negative but p = {p} is nonzero")
    if len(p.coeffs) - 1 > n:
        raise DegreeExceedsBound(f"deg({p}) = {p.degree} exceeds bound {n}")


def reverse(p: Poly, n: int) -> Poly:
    """``x^n p(1/x)``; requires deg(p) <= n."""
    _check_bound(p, n)
    if not p:
        return ZERO
    cs = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    return Poly._raw(_trim(cs[::-1]))


def is_symmetric(p: Poly, n: int) -> bool:
    if len(p.coeffs) - 1 > n:
        return False
    return reverse(p, n) == p


@dataclass(frozen=True)
class SymDecomp:
    """``p = a + x b`` with ``a`` symmetric about n/2 and ``b`` about (n-1)/2."""

    n: int
    a: Poly
    b: Poly

    def reconstruct(self) -> Poly:
        return self.a + self.b.shift(1)

    def is_valid(self) -> bool:
        if self.n == 0:
            return self.b.is_zero() and len(self.a.coeffs) <= 1
        return is_symmetric(self.a, self.n) and is_symmetric(self.b, self.n - 1)

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a.to_json(), "b": self.b.to_json()}


def symmetric_decomposition(p: Poly, n: int) -> SymDecomp:
    """Unique ``(a, b)`` with ``p = a + x b`` symmetric w.r.t. n.

    Solved as a triangular system from both ends: a_0 = p_0, then
    alternately b_{n-1-i} = p_{n-i} - a_{n-i} and a_{i+1} = p_{i+1} - b_i,
    using a_{n-i} = a_i and b_i = b_{n-1-i}.
    """
    _check_bound(p, n)
    if n <= 0:
        return SymDecomp(max(n, 0), p, ZERO)
    a = [Fraction(0)] * (n + 1)
    b = [Fraction(0)] * n
    a[0] = a[n] = p[0]
    for i in range(n):
        # b_{n-1-i} from the coefficient of x^{n-i}, where a_{n-i} = a_i is known
        b[n - 1 - i] = p[n - i] - a[n - i]
        b[i] = b[n - 1 - i]
        if i + 1 <= n - i - 1:
            a[i + 1] = p[i + 1] - b[i]
            a[n - i - 1] = a[i + 1]
    return SymDecomp(n, Poly._raw(_trim(a)), Poly._raw(_trim(b)))


# ---------------------------------------------------------------------------
# bases


def binomial_basis_to_std(c: Sequence, n: int) -> Poly:
    """``sum_i c_i x^i (1+x)^(n-i)``."""
    if len(c) != n + 1:
        raise ValueError(f"need n+1 = {n + 1} coefficients, got {len(c)}")
    out = [Fraction(0)] * (n + 1)
    for i, ci in enumerate(c):
        ci = _as_fraction(ci)
        if ci:
            for k in range(n - i + 1):
                out[i + k] += ci * binom(n - i, k)
    return Poly._raw(_trim(out))


def std_to_binomial_basis(f: Poly, n: int) -> list[Fraction]:
    """Inverse of :func:`binomial_basis_to_std`.

    Substituting x = y/(1-y) turns the basis element x^i (1+x)^(n-i) into
    y^i/(1-y)^n, so the c_i are the coefficients of (1-y)^n f(y/(1-y)),
    i.e. c_m = sum_k f_k (-1)^(m-k) C(n-k, m-k).
    """
    _check_bound(f, n)
    c = [Fraction(0)] * (n + 1)
    for k, fk in enumerate(f.coeffs):
        if fk:
            for m in range(k, n + 1):
                c[m] += fk * (-1) ** (m - k) * binom(n - k, m - k)
    return c


def f_to_h(fvec: Sequence, n: int) -> Poly:
    """h-polynomial ``sum_i fvec[i] x^i (1-x)^(n-i)`` with fvec[i] = f_{i-1}."""
    if len(fvec) > n + 1:
        raise DegreeExceedsBound(f"f-vector of length {len(fvec)} exceeds n + 1 = {n + 1}")
    out = [Fraction(0)] * (n + 1)
    for i, fi in enumerate(fvec):
        fi = _as_fraction(fi)
        if fi:
            for k in range(n - i + 1):
                out[i + k] += fi * (-1) ** k * binom(n - i, k)
    return Poly._raw(_trim(out))


def h_to_f(h: Poly, n: int) -> list[Fraction]:
    """f-vector (f_{-1}, ..., f_{n-1}) whose h-polynomial is ``h``."""
    _check_bound(h, n)
    return [
        sum((h[k] * binom(n - k, i - k) for k in range(i + 1)), Fraction(0))
        for i in range(n + 1)
    ]


def veronese(p: Poly, r: int, k: int) -> Poly:
    """k-th Veronese r-section: coefficient m of the result is p_{rm+k}."""
    if r < 1 or not 0 <= k < r:
        raise BadSectionIndex(f"need r >= 1 and 0 <= k < r, got r={r}, k={k}")
    return Poly._raw(_trim(list(p.coeffs[k::r])))


def geometric_block(r: int) -> Poly:
    """``1 + x + ... + x^(r-1)``."""
    return Poly([1] * r)


def gamma_expansion(p: Poly, n: int) -> list[Fraction]:
    """Coordinates of a symmetric p in the basis x^i (1+x)^(n-2i)."""
    _check_bound(p, n)
    if not is_symmetric(p, n):
        raise NotSymmetric(f"{p} is not symmetric with respect to {n}")
    rest = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    gammas = []
    for i in range(n // 2 + 1):
        g = rest[i]
        gammas.append(g)
        if g:
            for k in range(n - 2 * i + 1):
                rest[i + k] -= g * binom(n - 2 * i, k)
    if any(rest):
        raise NotSymmetric(f"{p} left a nonzero remainder in the gamma basis")
    return gammas


def is_gamma_positive(p: Poly, n: int) -> bool:
    try:
        return all(g >= 0 for g in gamma_expansion(p, n))
    except NotSymmetric:
        return False


def is_nonnegative(p: Poly) -> bool:
    return all(c >= 0 for c in p.coeffs)


def is_unimodal(p: Poly) -> bool:
    cs = p.coeffs
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i >= len(cs) - 1


def is_log_concave(p: Poly) -> bool:
    cs = p.coeffs
    return all(cs[i] * cs[i] >= cs[i - 1] * cs[i + 1] for i in range(1, len(cs) - 1))


def series_numerator(values: Sequence, n: int) -> Poly:
    """``(1-x)^(n+1) sum_m f(m) x^m`` for f of degree <= n given by f(0..n)."""
    if len(values) != n + 1:
        raise ValueError(f"need n+1 = {n + 1} values, got {len(values)}")
    vals = [_as_fraction(v) for v in values]
    out = [
        sum((((-1) ** j) * binom(n + 1, j) * vals[i - j] for j in range(i + 1)), Fraction(0))
        for i in range(n + 1)
    ]
    return Poly._raw(_trim(out))


def series_coeffs(p: Poly, denom_power: int, terms: int) -> list[Fraction]:
    """First ``terms`` coefficients of ``p(x) / (1-x)^denom_power``."""
    out = []
    for m in range(terms):
        if denom_power == 0:
            out.append(p[m])
        else:
            out.append(sum(
                (p[i] * binom(m - i + denom_power - 1, denom_power - 1) for i in range(min(m, len(p.coeffs) - 1) + 1)),
                Fraction(0),
            ))
    return out


# ---------------------------------------------------------------------------
# text formats


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def format_poly(p: Poly, var: str = "x") -> str:
    """Human form, low degree first: ``1 + 34x + 19x^2``."""
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = _format_coeff(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else _format_coeff(mag) + mono
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)(\(?\d+(?:/\d+)?\)?)?(?:\*?(x)(?:\^(\d+))?)?")


def parse_poly(text: str) -> Poly:
    """Parse ``1,0,0,1`` (coefficients low-to-high) or ``1 + 3x - x^2``."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if "," in s or re.fullmatch(r"-?\d+(/\d+)?", s):
        try:
            return Poly(Fraction(tok.strip()) for tok in s.split(","))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot parse coefficient list {text!r}")
    s = s.replace(" ", "")
    pos = 0
    out: dict[int, Fraction] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"cannot parse polynomial {text!r} near position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2).strip("()")) if m.group(2) else Fraction(1)
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        out[k] = out.get(k, Fraction(0)) + sign * coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ParseError(f"cannot parse polynomial {text!r} near position {pos}")
    deg = max(out)
    return Poly(out.get(i, 0) for i in range(deg + 1))
