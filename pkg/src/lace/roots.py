"""Exact real-root certification: Sturm counts, root isolation, interlacing.

Internally everything runs on primitive integer coefficient lists (low to
high).  Clearing denominators and dividing out the content only rescales
by positive constants, which leaves every sign the Sturm machinery looks
at unchanged, and keeps Python's big ints in charge instead of Fraction.

Sign evaluation at a rational a/b (b > 0) uses the homogenized value
sum c_i a^i b^(d-i), which has the same sign as p(a/b).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Sequence

from .certificate import Certificate
from .errors import EndpointIsRoot, NotRealRooted
from .poly import Poly, divmod_poly, exact_div, format_poly

DEFAULT_WIDTH = Fraction(1, 2**20)

IntPoly = list  # list[int], low to high, no trailing zeros


# ---------------------------------------------------------------------------
# integer polynomial kernel


def to_intpoly(p: Poly) -> IntPoly:
    """Primitive integer multiple of p with positive leading coefficient."""
    if not p:
        return []
    den = reduce(lambda a, c: a * c.denominator // math.gcd(a, c.denominator), p.coeffs, 1)
    ints = [int(c * den) for c in p.coeffs]
    return _primitive(ints, keep_sign=False)


def _trim(a: IntPoly) -> IntPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a: IntPoly, keep_sign: bool = True) -> IntPoly:
    if not a:
        return a
    g = reduce(math.gcd, a, 0)
    if not keep_sign and a[-1] < 0:
        g = -g
    if g not in (1,):
        a = [c // g for c in a]
    return a


def _deriv(a: IntPoly) -> IntPoly:
    return _trim([i * c for i, c in enumerate(a)][1:])


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    delta = len(r) - 1 - db
    if delta < 0:
        return r
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        r = [x * lc for x in r]
        if c:
            off = k - db
            for i, y in enumerate(b):
                r[off + i] -= c * y
        r.pop()
    # the loop multiplied by lc exactly delta + 1 times
    return _trim(r)


def _signed_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of rem(a, b) over Q, made primitive."""
    delta = len(a) - len(b) + 1
    r = _prem(a, b)
    if b[-1] < 0 and delta % 2 == 1:
        r = [-x for x in r]
    return _primitive(r)


def _exact_quo(a: IntPoly, b: IntPoly) -> IntPoly:
    """a / b over Q, for b dividing a; result made primitive, sign kept."""
    r = [Fraction(x) for x in a]
    db = len(b) - 1
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] / b[-1]
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    den = reduce(lambda x, c: x * c.denominator // math.gcd(x, c.denominator), q, 1)
    return _primitive([int(c * den) for c in q])


def _gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(list(a), keep_sign=False), _primitive(list(b), keep_sign=False)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_prem(a, b), keep_sign=False) if len(b) > 1 else []
        if len(a) == 1:
            return [1]
    return _primitive(a, keep_sign=False) if a else a


def square_free_factors(a: IntPoly) -> list[IntPoly]:
    """Yun's algorithm: [s_1, s_2, ...] with a = c * prod s_k^k, s_k square-free."""
    if len(a) <= 1:
        return []
    a = _primitive(list(a), keep_sign=False)
    da = _deriv(a)
    if len(_gcd(a, da)) == 1:
        return [a]
    # Yun needs b = a/g and c = a'/g with the same g, so do it over Q
    pa = Poly(a)
    g = _monic_gcd(pa, pa.derivative())
    b = exact_div(pa, g)
    c = exact_div(pa.derivative(), g)
    factors = []
    while b.degree > 0:
        d = c - b.derivative()
        s = _monic_gcd(b, d)
        factors.append(to_intpoly(s) if s.degree > 0 else [1])
        b = exact_div(b, s)
        c = exact_div(d, s)
    while factors and factors[-1] == [1]:
        factors.pop()
    return factors


def _monic_gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return p * (1 / p.coeffs[-1]) if p else p


def sign_at(a: IntPoly, x: Fraction) -> int:
    x = Fraction(x)
    return _sign_at_frac(a, x.numerator, x.denominator)


def _sign_at_frac(a: IntPoly, num: int, den: int) -> int:
    # homogeneous Horner: value = sum_i a_i num^i den^(d-i)
    if not a:
        return 0
    v = a[-1]
    dp = den
    for c in reversed(a[:-1]):
        v = v * num + c * dp
        dp *= den
    return (v > 0) - (v < 0)


def sturm_chain(a: IntPoly) -> list[IntPoly]:
    chain = [a, _primitive(_deriv(a))]
    while len(chain[-1]) > 1:
        r = _signed_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return chain


def _variations(signs) -> int:
    count = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _var_at(chain, x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    return _variations(_sign_at_frac(c, num, den) for c in chain)


def _var_at_inf(chain, sign: int) -> int:
    return _variations(
        (1 if c[-1] > 0 else -1) * (sign if (len(c) - 1) % 2 else 1) for c in chain
    )


def cauchy_bound(a: IntPoly) -> Fraction:
    """Power of two strictly larger than every |root| of a."""
    lc = abs(a[-1])
    m = max(abs(c) for c in a[:-1]) if len(a) > 1 else 0
    bound = 1 + -(-m // lc)
    return Fraction(1 << (bound - 1).bit_length() if bound > 1 else 2)


# ---------------------------------------------------------------------------
# public operations


class RootInterval(NamedTuple):
    lo: Fraction
    hi: Fraction
    multiplicity: int


class IsolatingIntervals(tuple):
    """Disjoint intervals, ascending, one distinct real root each."""

    @property
    def root_count(self) -> int:
        return sum(iv.multiplicity for iv in self)


def sturm_root_count(p: Poly, lo, hi) -> int:
    """Distinct real roots of p in (lo, hi]."""
    if not p:
        raise ValueError("the zero polynomial has no root count")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    a = to_intpoly(p)
    if len(a) == 1:
        return 0
    if sign_at(a, lo) == 0 or sign_at(a, hi) == 0:
        raise EndpointIsRoot(f"an endpoint of ({lo}, {hi}] is a root of {p}")
    chain = sturm_chain(square_free_part(a))
    return _var_at(chain, lo) - _var_at(chain, hi)


def square_free_part(a: IntPoly) -> IntPoly:
    if len(a) <= 1:
        return a
    return _exact_quo(a, _gcd(a, _deriv(a)))


def _nonroot_split(s: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """Midpoint of (lo, hi), nudged by dyadic steps until it is not a root of s."""
    mid = (lo + hi) / 2
    k = 2
    while sign_at(s, mid) == 0:
        mid = lo + (hi - lo) * (Fraction(1, 2) + Fraction(1, 2**k))
        k += 1
    return mid


def _isolate_squarefree(s: IntPoly, chain=None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (lo, hi) for the real roots of square-free s, ascending.

    Endpoints are never roots, so s(lo) s(hi) < 0 on every interval.
    """
    if len(s) <= 1:
        return []
    chain = chain or sturm_chain(s)
    B = cauchy_bound(s)
    out = []
    stack = [(-B, B, _var_at(chain, -B), _var_at(chain, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = _nonroot_split(s, lo, hi)
        vmid = _var_at(chain, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    return out


def refine(s: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change interval of s down to the given width."""
    slo = sign_at(s, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = sign_at(s, mid)
        if sm == 0:
            eps = min(width, hi - lo) / 4
            return mid - eps, mid + eps
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _multiplicities(factors: list[IntPoly], intervals) -> list[int]:
    mults = []
    for lo, hi in intervals:
        m = 0
        for k, f in enumerate(factors, start=1):
            if sign_at(f, lo) * sign_at(f, hi) < 0:
                m = k
                break
        mults.append(m)
    return mults


def isolate_roots(p: Poly, width: Fraction | None = DEFAULT_WIDTH) -> IsolatingIntervals:
    """Disjoint rational intervals around the real roots of a real-rooted p."""
    if not p:
        raise ValueError("the zero polynomial has no isolated roots")
    a = to_intpoly(p)
    if len(a) == 1:
        return IsolatingIntervals()
    factors = square_free_factors(a)
    s = reduce(_mul, factors)
    chain = sturm_chain(s)
    if _var_at_inf(chain, -1) - _var_at_inf(chain, 1) != len(s) - 1:
        raise NotRealRooted(f"{p} has non-real roots")
    ivs = _isolate_squarefree(s, chain)
    if width is not None:
        ivs = _refine_all(s, ivs, Fraction(width))
    mults = _multiplicities(factors, ivs)
    return IsolatingIntervals(RootInterval(lo, hi, m) for (lo, hi), m in zip(ivs, mults))


def _refine_all(s, ivs, width):
    out = [refine(s, lo, hi, width) for lo, hi in ivs]
    # keep going wherever neighbours still touch
    w = width
    while any(out[i][1] >= out[i + 1][0] for i in range(len(out) - 1)):
        w /= 2
        out = [refine(s, lo, hi, w) for lo, hi in out]
    return out


def _real_root_data(p: Poly):
    """(is_real_rooted, factors, s, chain, distinct_real_count)."""
    a = to_intpoly(p)
    factors = square_free_factors(a)
    if not factors:
        return True, [], a, None, 0
    s = reduce(_mul, factors)
    chain = sturm_chain(s)
    distinct = _var_at_inf(chain, -1) - _var_at_inf(chain, 1)
    return distinct == len(s) - 1, factors, s, chain, distinct


def is_real_rooted(p: Poly, subject: str | None = None, width: Fraction | None = None) -> Certificate:
    """Certificate for real-rootedness (the zero polynomial counts as real-rooted).

    A positive verdict lists one interval per distinct root; the square-free
    part changes sign across each, and the multiplicities add up to deg p.
    """
    cert = Certificate(subject or f"real-rootedness of {format_poly(p)}", "real_rooted")
    if not p or len(p.coeffs) == 1:
        cert.report("degree <= 0", True)
        return cert
    ok, factors, s, chain, distinct = _real_root_data(p)
    cert.report(f"distinct real roots ({distinct}) = degree of square-free part ({len(s) - 1})", ok)
    if not ok:
        cert.verdict = "not_real_rooted"
        cert.witnesses.append({"sturm_distinct_real_roots": distinct, "square_free_degree": len(s) - 1})
        return cert
    ivs = _isolate_squarefree(s, chain)
    if width is not None:
        ivs = _refine_all(s, ivs, Fraction(width))
    mults = _multiplicities(factors, ivs)
    for (lo, hi), m in zip(ivs, mults):
        cert.witnesses.append({"lo": lo, "hi": hi, "multiplicity": m})
    cert.report("multiplicities sum to degree", sum(mults) == p.degree)
    return cert


def verify_real_rooted(p: Poly, cert: Certificate) -> bool:
    """Independent re-check of a positive real-rootedness certificate by sign evaluation."""
    if not p or len(p.coeffs) == 1:
        return True
    a = to_intpoly(p)
    s = square_free_part(a)
    ivs = sorted((w["lo"], w["hi"]) for w in cert.witnesses)
    if len(ivs) != len(s) - 1:
        return False
    if sum(w["multiplicity"] for w in cert.witnesses) != p.degree:
        return False
    for i, (lo, hi) in enumerate(ivs):
        if not lo < hi or sign_at(s, lo) * sign_at(s, hi) >= 0:
            return False
        if i and ivs[i - 1][1] > lo:
            return False
    return True


# ---------------------------------------------------------------------------
# interlacing


def _descending_roots(mults_by_root: list[int]) -> list[int]:
    """Expand multiplicities into a list of root indices, largest root first."""
    out = []
    for idx in range(len(mults_by_root) - 1, -1, -1):
        out.extend([idx] * mults_by_root[idx])
    return out


def interlace_pattern(alpha: Sequence, beta: Sequence) -> str | None:
    """Check ... <= alpha_2 <= beta_2 <= alpha_1 <= beta_1 on descending root lists.

    Returns None when the pattern holds, otherwise a description of the
    first violated relation.
    """
    na, nb = len(alpha), len(beta)
    if not na <= nb <= na + 1:
        return f"root counts {na} and {nb} cannot alternate"
    for i in range(na):
        if not alpha[i] <= beta[i]:
            return f"alpha_{i + 1} > beta_{i + 1}"
        if i + 1 < nb and not beta[i + 1] <= alpha[i]:
            return f"beta_{i + 2} > alpha_{i + 1}"
    return None


def interlaces(p: Poly, q: Poly, subject: str | None = None) -> Certificate:
    """Does p interlace q?  Roots alpha of p, beta of q, both descending.

    The zero polynomial interlaces and is interlaced by every real-rooted
    polynomial.  Shared roots are found exactly: all roots of p and q are
    isolated as roots of the square-free part of p*q, and the
    multiplicity of each in p and q is read off the Yun factors.
    """
    cert = Certificate(subject or f"{format_poly(p)} interlaces {format_poly(q)}", "interlaces")
    okp, fp, _, _, _ = _real_root_data(p)
    okq, fq, _, _, _ = _real_root_data(q)
    if not okp:
        raise NotRealRooted(f"{p} is not real-rooted")
    if not okq:
        raise NotRealRooted(f"{q} is not real-rooted")
    if not p or not q:
        cert.report("zero polynomial convention", True)
        return cert
    sp = reduce(_mul, fp, [1])
    sq = reduce(_mul, fq, [1])
    g = _gcd(sp, sq)
    s = _mul(sp, _exact_quo(sq, g)) if len(g) > 1 else _mul(sp, sq)
    ivs = _isolate_squarefree(_primitive(s, keep_sign=False)) if len(s) > 1 else []
    mp = _multiplicities(fp, ivs)
    mq = _multiplicities(fq, ivs)
    for (lo, hi), a, b in zip(ivs, mp, mq):
        if a:
            cert.witnesses.append({"lo": lo, "hi": hi, "multiplicity": a, "of": "p"})
        if b:
            cert.witnesses.append({"lo": lo, "hi": hi, "multiplicity": b, "of": "q"})
    failure = interlace_pattern(_descending_roots(mp), _descending_roots(mq))
    cert.report("root alternation" if failure is None else f"root alternation: {failure}", failure is None)
    if failure is not None:
        cert.verdict = "not_interlaces"
    return cert


def is_interlacing_sequence(seq: Sequence[Poly], subject: str | None = None) -> Certificate:
    """Pairwise check that seq[i] interlaces seq[j] for all i < j."""
    cert = Certificate(subject or f"interlacing sequence of length {len(seq)}", "interlacing_sequence")
    for i, p in enumerate(seq):
        if not is_real_rooted(p):
            raise NotRealRooted(f"entry {i} ({p}) is not real-rooted")
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            sub = interlaces(seq[i], seq[j], subject=f"entry {i} interlaces entry {j}")
            if not sub:
                cert.verdict = "not_interlacing_sequence"
                cert.report(f"({i},{j})", False)
                cert.parts.append(sub)
                return cert
    cert.report(f"all {len(seq) * (len(seq) - 1) // 2} pairs", True)
    return cert


def recipe_transform(seq: Sequence[Poly], k: int) -> Poly:
    """``x * sum_{i<k} p_i + sum_{i>=k} p_i``."""
    if not 0 <= k <= len(seq):
        raise ValueError(f"k must lie in [0, {len(seq)}], got {k}")
    head = Poly()
    tail = Poly()
    for i, p in enumerate(seq):
        if i < k:
            head = head + p
        else:
            tail = tail + p
    return head.shift(1) + tail
