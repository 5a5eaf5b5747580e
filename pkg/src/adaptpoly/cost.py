"""Cost model for dense multiplication: the per-coefficient ratio delta(n).

Every conversion decision in this library consults delta(n), the modeled
cost of a length-n dense multiplication divided by n. Shipped models:

  schoolbook  delta(n) = n
  karatsuba   delta(n) = n below the kernel threshold, then
              threshold * (n/threshold)^(log2(3) - 1)  (continuous join)
  fftlike     delta(n) = 1 + log2(n)   (selection-only; no FFT kernel runs)

All models saturate to an infinite sentinel above the dense-length cap.
delta must be increasing and concave in the discrete sense
delta(a+d) - delta(a) >= delta(b+d) - delta(b) for a < b; validate_model
checks both exhaustively up to a limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INF_COST = float("inf")

KINDS = ("schoolbook", "karatsuba", "fftlike")

_LOG2_3_M1 = math.log2(3.0) - 1.0

DEFAULT_THRESHOLD = 32
DEFAULT_CAP = 2**31


@dataclass(frozen=True)
class CostModel:
    kind: str = "karatsuba"
    threshold: int = DEFAULT_THRESHOLD
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown cost model kind: {self.kind!r}")
        if self.threshold < 1:
            raise ValueError("threshold must be positive")
        if self.cap < 1:
            raise ValueError("cap must be positive")

    def delta(self, n: int) -> float:
        """Modeled ring ops per output coefficient for a length-n dense product."""
        if n <= 0:
            raise ValueError(f"delta argument must be positive: {n}")
        if n > self.cap:
            return INF_COST
        if self.kind == "schoolbook":
            return float(n)
        if self.kind == "karatsuba":
            t = self.threshold
            if n <= t:
                return float(n)
            return t * (n / t) ** _LOG2_3_M1
        return 1.0 + math.log2(n)

    def mult_cost(self, n: int, m: int) -> float:
        """Blocked dense-multiplication model: max(n,m) * delta(min(n,m))."""
        if n <= 0 or m <= 0:
            raise ValueError(f"operand lengths must be positive: {n}, {m}")
        if n < m:
            n, m = m, n
        if n > self.cap:
            return INF_COST
        return n * self.delta(m)


@dataclass(frozen=True)
class ModelReport:
    ok: bool
    # First violating triple (a, b, d) with the two compared differences,
    # or None when the model passes.
    violation: tuple[int, int, int, float, float] | None = None
    message: str = "ok"


def validate_model(model: CostModel, limit: int, delta=None, rel_eps: float = 1e-9) -> ModelReport:
    """Check monotonicity and the concavity axiom for every a < b, d >= 1, b+d <= limit.

    The quantified axiom is equivalent to: for each d, the difference
    delta(n+d) - delta(n) is nonincreasing in n (adjacent pairs imply all
    pairs by transitivity), which this verifies for every d. A small
    relative epsilon absorbs float roundoff in the fractional-power model.
    """
    if limit > model.cap:
        raise ValueError("limit must not exceed the model cap")
    if limit < 2:
        return ModelReport(True)
    fn = delta if delta is not None else model.delta
    vals = np.array([fn(n) for n in range(1, limit + 1)], dtype=float)
    tol = rel_eps * np.maximum(1.0, np.abs(vals[:-1]))

    mono = vals[1:] - vals[:-1]
    bad = np.nonzero(mono < -tol)[0]
    if bad.size:
        n = int(bad[0]) + 1
        return ModelReport(
            False,
            (n, n + 1, 0, float(vals[n - 1]), float(vals[n])),
            f"not nondecreasing at n={n}: delta({n})={vals[n-1]} > delta({n+1})={vals[n]}",
        )

    for d in range(1, limit):
        diff = vals[d:] - vals[:-d]  # delta(n+d) - delta(n) for n = 1..limit-d
        if diff.size < 2:
            continue
        bad = np.nonzero(diff[1:] - diff[:-1] > tol[: diff.size - 1])[0]
        if bad.size:
            a = int(bad[0]) + 1
            b = a + 1
            return ModelReport(
                False,
                (a, b, d, float(diff[a - 1]), float(diff[b - 1])),
                f"concavity violated at a={a}, b={b}, d={d}: "
                f"delta(a+d)-delta(a)={diff[a-1]} < delta(b+d)-delta(b)={diff[b-1]}",
            )
    return ModelReport(True)
