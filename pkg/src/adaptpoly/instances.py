"""Seeded structured instance generation for tests and the CLI.

Five families mirror the structures the adaptive representations target:
fully random dense, random sparse, dense chunks separated by long gaps,
arithmetic-progression (spaced) supports with optional off-pattern noise,
and chunky-of-spaced combinations. Generation is a pure function of the
spec, so identical specs yield byte-identical files.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from adaptpoly.poly import DensePoly, SparsePoly

FAMILIES = ("random-dense", "random-sparse", "chunky", "spaced", "combined")


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    p: int = 9973
    seed: int = 0
    degree: int = 256        # random-dense degree / random-sparse exponent bound
    terms: int = 32          # random-sparse term count
    chunks: int = 8          # chunky / combined chunk count
    chunk_len: int = 16      # chunky chunk length
    gap_len: int = 64        # chunky / combined gap length
    spacing: int = 8         # spaced / combined progression step
    core_len: int = 32       # spaced core length / combined per-chunk core length
    noise: int = 0           # spaced / combined off-pattern term count
    jitter: float = 0.0      # chunky length jitter fraction

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family: {self.family!r}")
        if self.p < 2:
            raise ValueError("modulus must be at least 2")


def _jittered(rng: random.Random, base: int, jitter: float) -> int:
    if jitter <= 0:
        return base
    return max(1, round(base * (1.0 + jitter * (2.0 * rng.random() - 1.0))))


def generate(spec: InstanceSpec):
    """Returns (kind, poly) where kind is the natural file representation."""
    rng = random.Random(spec.seed)
    p = spec.p
    fam = spec.family

    if fam == "random-dense":
        n = spec.degree + 1
        coeffs = [rng.randrange(p) for _ in range(n)]
        coeffs[0] = rng.randrange(1, p)
        coeffs[-1] = rng.randrange(1, p)
        return "dense", DensePoly(coeffs)

    if fam == "random-sparse":
        t = min(spec.terms, spec.degree + 1)
        exps = sorted(rng.sample(range(spec.degree + 1), t))
        sp = SparsePoly()
        sp.terms = [(rng.randrange(1, p), e) for e in exps]
        return "sparse", sp

    if fam == "chunky":
        coeffs: list = []
        for c in range(spec.chunks):
            if c > 0:
                coeffs.extend([0] * _jittered(rng, spec.gap_len, spec.jitter))
            ln = _jittered(rng, spec.chunk_len, spec.jitter)
            block = [rng.randrange(p) for _ in range(ln)]
            block[0] = rng.randrange(1, p)
            block[-1] = rng.randrange(1, p)
            coeffs.extend(block)
        return "dense", DensePoly(coeffs)

    if fam == "spaced":
        k = spec.spacing
        d = rng.randrange(k) if k > 1 else 0
        top = d + (spec.core_len - 1) * k
        coeffs = [0] * (top + 1)
        for i in range(spec.core_len):
            coeffs[d + i * k] = rng.randrange(1, p)
        if spec.noise > 0 and k > 1:
            off_class = [e for e in range(top) if e % k != d % k]
            for e in sorted(rng.sample(off_class, min(spec.noise, len(off_class)))):
                coeffs[e] = rng.randrange(1, p)
        return "dense", DensePoly(coeffs)

    # combined: chunks of shared-spacing cores separated by gaps
    k = spec.spacing
    coeffs = []
    offset = 0
    chunk_spans = []
    for c in range(spec.chunks):
        if c > 0:
            offset += spec.gap_len
            coeffs.extend([0] * spec.gap_len)
        span = (spec.core_len - 1) * k + 1
        block = [0] * span
        for i in range(spec.core_len):
            block[i * k] = rng.randrange(1, p)
        chunk_spans.append((offset, span))
        coeffs.extend(block)
        offset += span
    if spec.noise > 0 and k > 1:
        candidates = []
        for off, span in chunk_spans:
            candidates.extend(off + r for r in range(span) if r % k != 0)
        for e in sorted(rng.sample(candidates, min(spec.noise, len(candidates)))):
            coeffs[e] = rng.randrange(1, p)
    return "dense", DensePoly(coeffs)
