"""Randomized batch runs shared by the scripts and the acceptance suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import ftriangle as ft
from .complexes import (
    barycentric_subdivision,
    colored_subdivision,
    edgewise_subdivision,
    random_complex,
)
from .operators import apply_DF, bary_D, colored_D, edgewise_U
from .poly import Poly
from .roots import is_real_rooted
from .theorems import (
    c_ineq1,
    c_ineq2,
    certify_main_theorem,
    ratio_a,
    ratio_b,
    skeleton_theorem_check,
    strong_interlacing_check,
)


@dataclass(frozen=True)
class CorpusEntry:
    family: str  # barycentric | esd | colored
    n: int
    r: int = 1

    @property
    def label(self) -> str:
        return f"{self.family}(n={self.n}, r={self.r})" if self.family != "barycentric" else f"barycentric(n={self.n})"

    def ftriangle(self) -> ft.FTriangle:
        if self.family == "barycentric":
            return ft.barycentric(self.n)
        if self.family == "esd":
            return ft.edgewise(self.r, self.n)
        return ft.colored(self.r, self.n)

    def operator(self, h: Poly) -> Poly:
        if self.family == "barycentric":
            return bary_D(self.n, h)
        if self.family == "esd":
            return edgewise_U(self.n, self.r, h)
        return colored_D(self.n, self.r, h)


def default_corpus(max_bary: int = 6, max_esd: int = 5, max_colored_n: int = 5,
                   max_colored_r: int = 4) -> list[CorpusEntry]:
    out = [CorpusEntry("barycentric", n) for n in range(1, max_bary + 1)]
    out += [CorpusEntry("esd", n, r) for n in range(1, max_esd + 1) for r in (n, n + 1)]
    out += [CorpusEntry("colored", n, r) for r in range(2, max_colored_r + 1) for n in range(1, max_colored_n + 1)]
    return out


def _holds(report) -> bool:
    return all(ok for _, ok in report)


def random_h(rng: random.Random, n: int, variant: str, max_coeff: int = 9) -> list[int]:
    """Nonnegative integer coefficients satisfying the inequalities of the variant.

    Three generators are mixed: plain rejection sampling, random vectors
    repaired by raising c_n (variant a) or c_0 (variant b), and monotone
    vectors, which also meet the ratio conditions.
    """
    mode = rng.randrange(3)
    while True:
        c = [rng.randint(0, max_coeff) for _ in range(n + 1)]
        if variant == "b":
            c[n] = 0
        if mode == 2:
            c = sorted(c) if variant == "a" else sorted(c[:n], reverse=True) + [0]
        check = c_ineq1 if variant == "a" else c_ineq2
        if not _holds(check(c)):
            if mode == 0:
                continue
            if variant == "a":
                pre, suf, deficit = 0, 0, 0
                for i in range(n // 2 + 1):
                    pre += c[i]
                    suf += c[n - i]
                    deficit = max(deficit, pre - suf)
                c[n] += deficit
            else:
                deficit = 0
                pre = c[0]
                for i in range(1, n // 2 + 1):
                    pre += c[i]
                    deficit = max(deficit, sum(c[n - i:n]) - pre)
                c[0] += deficit
        if any(c):
            return c


@dataclass
class MainTheoremBatch:
    samples: int = 1000
    seed: int = 0
    max_coeff: int = 9
    variants: tuple[str, ...] = ("a", "b")
    unrestricted: bool = True
    corpus: list[CorpusEntry] = field(default_factory=default_corpus)


@dataclass
class BatchResult:
    runs: int = 0
    interlacing_claims: int = 0
    operator_checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def run_main_theorem_batch(cfg: MainTheoremBatch, progress=None) -> BatchResult:
    """Certify the main theorem and real-rootedness of the named operators on random h."""
    res = BatchResult()
    t0 = time.perf_counter()
    for entry in cfg.corpus:
        F = entry.ftriangle()
        n = entry.n
        strong = strong_interlacing_check(F, n)
        if not strong:
            res.failures.append((entry.label, "strong interlacing", strong.failed_conditions()))
            continue
        rng = random.Random(f"{cfg.seed}:{entry.label}")
        for variant in cfg.variants:
            for _ in range(cfg.samples):
                c = random_h(rng, n, variant, cfg.max_coeff)
                h = Poly(c)
                cert = certify_main_theorem(F, n, h, variant)
                res.runs += 1
                ratio = ratio_a(c) if variant == "a" else ratio_b(c)
                if _holds(ratio):
                    res.interlacing_claims += 1
                if cert.verdict == "counterexample" or not _only_ratio(cert):
                    res.failures.append((entry.label, variant, c, cert.verdict, cert.failed_conditions()))
                img = entry.operator(h)
                res.operator_checks += 1
                if img != apply_DF(F, n, h):
                    res.failures.append((entry.label, "operator mismatch", c))
                elif not is_real_rooted(img):
                    res.failures.append((entry.label, "operator image not real-rooted", c))
        if cfg.unrestricted:
            # real-rootedness of the image needs only nonnegative coefficients
            for _ in range(cfg.samples):
                c = [rng.randint(0, cfg.max_coeff) for _ in range(n + 1)]
                if not any(c):
                    continue
                res.operator_checks += 1
                if not is_real_rooted(entry.operator(Poly(c))):
                    res.failures.append((entry.label, "operator image not real-rooted", c))
        if progress:
            progress(entry, res)
    res.seconds = time.perf_counter() - t0
    return res


def _only_ratio(cert) -> bool:
    return all(name.startswith("ratio") for name in cert.failed_conditions())


@dataclass
class SkeletonBatch:
    samples: int = 50
    seed: int = 0
    max_entry: int = 5
    max_n: int = 4


def skeleton_families(n: int) -> list[CorpusEntry]:
    """F-triangles of size n+1 used for the skeleton check at dimension n."""
    return [
        CorpusEntry("barycentric", n + 1),
        CorpusEntry("colored", n + 1, 2),
        CorpusEntry("colored", n + 1, 3),
        CorpusEntry("esd", n + 1, n + 1),
        CorpusEntry("esd", n + 1, n + 2),
    ]


def run_skeleton_batch(cfg: SkeletonBatch) -> BatchResult:
    res = BatchResult()
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    for n in range(1, cfg.max_n + 1):
        for entry in skeleton_families(n):
            F = entry.ftriangle()
            for _ in range(cfg.samples):
                gamma = [1] + [rng.randint(0, cfg.max_entry) for _ in range(n + 1)]
                cert = skeleton_theorem_check(F, gamma, n)
                res.runs += 1
                if not cert:
                    res.failures.append((entry.label, gamma, cert.failed_conditions()))
    res.seconds = time.perf_counter() - t0
    return res


@dataclass
class OracleBatch:
    complexes: int = 60
    seed: int = 0
    max_dim: int = 3
    rs: tuple[int, ...] = (1, 2, 3)


def run_oracle_batch(cfg: OracleBatch) -> BatchResult:
    """Constructed subdivisions against the operators on random complexes."""
    res = BatchResult()
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    for i in range(cfg.complexes):
        dim = rng.randint(0, cfg.max_dim)
        K = random_complex(rng.randint(dim + 1, dim + 4), dim, rng.randint(1, 5), seed=rng.randrange(10**9))
        n = K.dim + 1
        h = K.h_polynomial()
        if barycentric_subdivision(K).h_polynomial() != bary_D(n, h):
            res.failures.append(("sd", K.facets))
        for r in cfg.rs:
            if edgewise_subdivision(K, r).h_polynomial() != edgewise_U(n, r, h):
                res.failures.append((f"esd_{r}", K.facets))
            if colored_subdivision(K, r).h_polynomial() != colored_D(n, r, h):
                res.failures.append((f"sd_{r}", K.facets))
            res.operator_checks += 2
        res.runs += 1
    res.seconds = time.perf_counter() - t0
    return res
