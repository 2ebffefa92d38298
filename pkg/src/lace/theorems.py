"""Hypothesis checks and certification for the real-rootedness results.

Everything here is a finite check: given F, n and h, decide the stated
hypotheses exactly, compute the objects involved, and certify the
conclusions with Sturm-based witnesses.  When hypotheses hold but a
conclusion fails, the verdict is ``counterexample``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .certificate import Certificate
from .errors import DegreeExceedsBound
from .ftriangle import FTriangle, h_simplex
from .operators import apply_DF, build_p_rows, symdecomp_closed_form
from .poly import Poly, format_poly, is_nonnegative
from .roots import interlaces, is_interlacing_sequence, is_real_rooted


def _prefix(c):
    out, acc = [], 0
    for v in c:
        acc += v
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# inequality systems on coefficient / h-vectors


def c_ineq1(c: Sequence) -> list[tuple[str, bool]]:
    """c_0 + ... + c_i <= c_n + ... + c_{n-i} for 0 <= i <= n/2."""
    n = len(c) - 1
    head, tail = _prefix(c), _prefix(list(c)[::-1])
    return [(f"c-ineq1@i={i}", head[i] <= tail[i]) for i in range(n // 2 + 1)]


def c_ineq2(c: Sequence) -> list[tuple[str, bool]]:
    """c_0 + ... + c_i >= c_{n-1} + ... + c_{n-i} for 1 <= i <= n/2."""
    n = len(c) - 1
    head = _prefix(c)
    out = []
    for i in range(1, n // 2 + 1):
        rhs = sum(c[n - i:n])
        out.append((f"c-ineq2@i={i}", head[i] >= rhs))
    return out


def ratio_a(c: Sequence) -> list[tuple[str, bool]]:
    """c_i c_{n-i-1} <= c_{i+1} c_{n-i} for 0 <= i <= n-1."""
    n = len(c) - 1
    return [(f"ratio@i={i}", c[i] * c[n - i - 1] <= c[i + 1] * c[n - i]) for i in range(n)]


def ratio_b(c: Sequence) -> list[tuple[str, bool]]:
    """c_i c_{n-i-1} >= c_{i+1} c_{n-i} for 1 <= i < n-1."""
    n = len(c) - 1
    return [(f"ratio-rev@i={i}", c[i] * c[n - i - 1] >= c[i + 1] * c[n - i]) for i in range(1, n - 1)]


def ratio_chain(c: Sequence, variant: str = "a") -> list[tuple[str, bool]]:
    """All-pairs form of the ratio condition: c_i c_{n-j} <= c_j c_{n-i} for i < j.

    The neighbour products in ratio_a/ratio_b stop being transitive once some
    pair c_k, c_{n-k} is zero; this version compares every pair directly.
    Variant "b" reverses the inequality and uses 1 <= i < j <= n-1.
    """
    n = len(c) - 1
    lo, hi = (0, n) if variant == "a" else (1, n - 1)
    out = []
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            lhs, rhs = c[i] * c[n - j], c[j] * c[n - i]
            out.append((f"chain@i={i},j={j}", lhs <= rhs if variant == "a" else lhs >= rhs))
    return out


def _tzanakii(h: Sequence) -> list[tuple[str, bool]]:
    # ratios h_i / h_{n-i} for 1 <= i <= n-1 must decrease; ratios with a
    # zero numerator or denominator are dropped before comparing neighbours
    n = len(h) - 1
    kept = [i for i in range(1, n) if h[i] != 0 and h[n - i] != 0]
    out = []
    for a, b in zip(kept, kept[1:]):
        out.append((f"tzanakii@i={a},j={b}", h[a] * h[n - b] >= h[b] * h[n - a]))
    return out


def hvec_inequalities(hvec: Sequence, which: str) -> list[tuple[str, bool]]:
    """Per-index report for one of CMstar, tzanaki, tzanakii, c1, c2."""
    h = [Fraction(v) for v in hvec]
    n = len(h) - 1
    if which == "CMstar":
        return [(name.replace("c-ineq1", "CMstar"), ok) for name, ok in c_ineq1(h)]
    if which == "c1":
        return c_ineq1(h)
    if which == "c2":
        return [("c_n=0", h[n] == 0)] + c_ineq2(h)
    if which == "tzanaki":
        return [(name.replace("ratio", "tzanaki"), ok) for name, ok in ratio_a(h)]
    if which == "tzanakii":
        return _tzanakii(h)
    raise ValueError(f"unknown inequality system {which!r}")


# ---------------------------------------------------------------------------
# strong interlacing


def strong_interlacing_check(F: FTriangle, n: int, include_top: bool = False) -> Certificate:
    """Conditions (i) and (ii) of strong interlacing with respect to n.

    (i) covers 2 <= m < n, or 2 <= m <= n with include_top.  The derived
    interlacing property (each Q_{F,m} = (p_{m,0}, ..., p_{m,m}) an
    interlacing sequence) is checked and reported as well.
    """
    return _strong(F, n, include_top)


@lru_cache(maxsize=128)
def _strong(F: FTriangle, n: int, include_top: bool) -> Certificate:
    table = build_p_rows(F, n)
    cert = Certificate(f"strong interlacing of {F.name or 'F'} with respect to {n}", "strong_interlacing")
    ok = True
    top = n + 1 if include_top else n
    for m in range(2, top):
        sub = is_real_rooted(h_simplex(F, m), subject=f"h_F(sigma_{m})")
        cert.parts.append(sub)
        ok &= cert.report(f"(i) h_F(sigma_{m}) real-rooted", bool(sub))
    for m in range(2, n + 1):
        theta = table.theta(m)
        name = f"(ii) theta(sigma_{m})"
        if not theta:
            ok &= cert.report(f"{name} = 0", True)
            continue
        good = cert.report(f"{name} has degree {m - 1}", theta.degree == m - 1)
        good &= cert.report(f"{name} nonnegative", is_nonnegative(theta))
        rr = is_real_rooted(theta, subject=f"theta(sigma_{m}) = {format_poly(theta)}")
        cert.parts.append(rr)
        good &= cert.report(f"{name} real-rooted", bool(rr))
        if rr:
            lace = interlaces(h_simplex(F, m - 1), theta,
                              subject=f"h_F(sigma_{m - 1}) interlaces theta(sigma_{m})")
            cert.parts.append(lace)
            good &= cert.report(f"{name} interlaced by h_F(sigma_{m - 1})", bool(lace))
        ok &= good
    for m in range(n + 1):
        seq = table.Q(m)
        if all(is_nonnegative(p) and is_real_rooted(p) for p in seq):
            sub = is_interlacing_sequence(seq, subject=f"Q_F,{m}")
            ok &= cert.report(f"Q_F,{m} interlacing", bool(sub))
        else:
            ok &= cert.report(f"Q_F,{m} interlacing", False)
    if not ok:
        cert.verdict = "not_strong_interlacing"
    return cert


# ---------------------------------------------------------------------------
# the main theorem


def certify_main_theorem(F: FTriangle, n: int, h: Poly, variant: str = "a",
                         check_strong: bool = True) -> Certificate:
    """Check the hypotheses on h (and F) and certify the decomposition of D_{F,n}(h).

    variant "a": decomposition with respect to n; "b": with respect to n-1.
    The verdict names the strongest conclusion reached:
    interlacing_sym_decomp > nonneg_real_rooted_sym_decomp > nonneg_sym_decomp,
    or ``counterexample`` when the hypotheses hold and the promised
    conclusion does not.
    """
    if variant not in ("a", "b"):
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    if len(h.coeffs) - 1 > n:
        raise DegreeExceedsBound(f"deg({h}) exceeds n = {n}")
    c = [h[i] for i in range(n + 1)]
    cert = Certificate(f"decomposition of D_F,{n}({format_poly(h)}), variant {variant}", "")
    hyp = True
    if check_strong:
        strong = strong_interlacing_check(F, n)
        hyp &= cert.report(f"strong interlacing w.r.t. {n}", bool(strong))
    hyp &= cert.report("c nonnegative", all(v >= 0 for v in c))
    if variant == "a":
        wrt = n
        for name, ok in c_ineq1(c):
            hyp &= cert.report(name, ok)
        ratio = ratio_a(c)
    else:
        wrt = n - 1
        if n == 0:
            raise ValueError("variant b needs n >= 1")
        hyp &= cert.report("c_n=0", c[n] == 0)
        for name, ok in c_ineq2(c):
            hyp &= cert.report(name, ok)
        ratio = ratio_b(c)
    ratio_ok = True
    for name, ok in ratio:
        ratio_ok &= cert.report(name, ok)

    if variant == "b" and c[n] != 0:
        cert.verdict = "no_decomposition"
        return cert
    dec = symdecomp_closed_form(F, n, h, wrt)
    cert.witnesses.append({"n": wrt, "a": dec.a.to_json(), "b": dec.b.to_json()})

    nonneg = is_nonnegative(dec.a) and is_nonnegative(dec.b)
    ra = is_real_rooted(dec.a, subject=f"a = {format_poly(dec.a)}")
    rb = is_real_rooted(dec.b, subject=f"b = {format_poly(dec.b)}")
    cert.parts += [ra, rb]
    rooted = bool(ra) and bool(rb)
    laced = False
    if rooted:
        lace = interlaces(dec.b, dec.a, subject="b interlaces a")
        cert.parts.append(lace)
        laced = bool(lace)

    if nonneg and rooted and laced:
        achieved = 3
    elif nonneg and rooted:
        achieved = 2
    elif nonneg:
        achieved = 1
    else:
        achieved = 0
    promised = (3 if ratio_ok else 2) if hyp else 0
    if achieved < promised:
        cert.verdict = "counterexample"
    else:
        cert.verdict = ["no_nonneg_sym_decomp", "nonneg_sym_decomp",
                        "nonneg_real_rooted_sym_decomp", "interlacing_sym_decomp"][achieved]
    return cert


def main_theorem_holds(cert: Certificate) -> bool:
    return cert.verdict != "counterexample"


# ---------------------------------------------------------------------------
# skeleta


def skeleton_theorem_check(F: FTriangle, gamma_hvec: Sequence, n: int) -> Certificate:
    """Delta = (n-1)-skeleton of an n-dimensional Gamma with the given h-vector.

    (a) h_F(Delta) has an interlacing symmetric decomposition w.r.t. n;
    (b) h_F(Delta) interlaces h_F(Gamma).
    """
    g = [Fraction(v) for v in gamma_hvec]
    if len(g) != n + 2:
        raise ValueError(f"Gamma h-vector must have {n + 2} entries, got {len(g)}")
    cert = Certificate(f"skeleton theorem, n = {n}, h(Gamma) = {list(gamma_hvec)}", "holds")
    cert.report("h(Gamma) nonnegative", all(v >= 0 for v in g))
    hd = Poly(_prefix(g[: n + 1]))
    hg = Poly(g)
    cert.report(f"strong interlacing w.r.t. {n + 1}", bool(strong_interlacing_check(F, n + 1)))
    part_a = certify_main_theorem(F, n, hd, "a", check_strong=True)
    part_a.subject = f"(a) {part_a.subject}"
    cert.parts.append(part_a)
    ok_a = cert.report("(a) interlacing decomposition", part_a.verdict == "interlacing_sym_decomp")
    hf_delta = apply_DF(F, n, hd)
    hf_gamma = apply_DF(F, n + 1, hg)
    cert.witnesses.append({"h_F(Delta)": hf_delta.to_json(), "h_F(Gamma)": hf_gamma.to_json()})
    rd = is_real_rooted(hf_delta)
    rg = is_real_rooted(hf_gamma)
    ok_b = bool(rd) and bool(rg)
    if ok_b:
        lace = interlaces(hf_delta, hf_gamma, subject="(b) h_F(Delta) interlaces h_F(Gamma)")
        cert.parts.append(lace)
        ok_b = bool(lace)
    cert.report("(b) h_F(Delta) interlaces h_F(Gamma)", ok_b)
    if not (ok_a and ok_b):
        cert.verdict = "fails"
    return cert
