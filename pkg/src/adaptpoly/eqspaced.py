"""Equal-spaced representation: a dense core on an arithmetic progression.

A polynomial is split as (core composed with x^spacing) shifted by x^shift,
plus a small sparse noise part holding the off-progression terms. The
conversion scans candidate spacings downward from a telescoping-sum bound,
using the pair-cancellation majority vote on residues per candidate; the
multiplication splits both cores over the lcm of the spacings so that the
sub-product grid writes every output coefficient exactly once.
"""

from __future__ import annotations

import math

from adaptpoly.cost import CostModel
from adaptpoly.errors import CapacityError
from adaptpoly.poly import DensePoly, SparsePoly, mul_coeff_lists, sparse_mul


class EqualSpacedPoly:
    """core composed with x^spacing, shifted by x^shift, plus sparse noise."""

    __slots__ = ("core", "spacing", "shift", "noise")

    def __init__(self, core, spacing: int, shift: int, noise: SparsePoly | None = None):
        core = list(core)
        noise = noise if noise is not None else SparsePoly()
        if spacing < 1:
            raise ValueError("spacing must be positive")
        if shift < 0:
            raise ValueError("shift must be nonnegative")
        if not core or core[0] == 0 or core[-1] == 0:
            raise ValueError("core must start and end with nonzero coefficients")
        if spacing == 1 and not noise.is_zero():
            raise ValueError("spacing 1 admits no noise terms")
        for _, e in noise.terms:
            if e % spacing == shift % spacing:
                raise ValueError("noise exponent lies on the core progression")
        t = sum(1 for c in core if c != 0) + noise.term_count()
        if 1 << noise.term_count() > t:
            raise ValueError("noise term count exceeds the log2 bound")
        self.core = core
        self.spacing = spacing
        self.shift = shift
        self.noise = noise

    @property
    def degree(self) -> int:
        d = self.shift + (len(self.core) - 1) * self.spacing
        if self.noise.terms:
            d = max(d, self.noise.degree)
        return d

    def term_count(self) -> int:
        return sum(1 for c in self.core if c != 0) + self.noise.term_count()

    def core_terms(self) -> list:
        """The core part expanded to absolute (coeff, exponent) terms."""
        k, d = self.spacing, self.shift
        return [(c, d + i * k) for i, c in enumerate(self.core) if c != 0]

    def __repr__(self):
        return (
            f"EqualSpacedPoly(core={self.core!r}, spacing={self.spacing}, "
            f"shift={self.shift}, noise={self.noise.terms!r})"
        )


def k_bound(terms: int, max_exp: int) -> int:
    """Largest spacing worth scanning for an exponent set of this shape.

    For 32 or more terms the telescoping-sum argument caps any viable
    spacing at n/(t - 1 - 2*log2 t); below that the scan simply starts at
    the largest exponent.
    """
    if terms < 1:
        raise ValueError("need at least one term")
    if max_exp < 0:
        raise ValueError("max exponent must be nonnegative")
    if terms < 32:
        return max_exp
    return int(max_exp / (terms - 1 - 2 * math.log2(terms)))


def _majority_residue(exps: list, k: int) -> int:
    """Boyer-Moore pass over exps mod k; returns the surviving residue."""
    d = exps[0] % k
    j = 1
    for e in exps[1:]:
        r = e % k
        if r == d:
            j += 1
        elif j > 0:
            j -= 1
        else:
            d = r
            j = 1
    return d


def spacing_scan(exps: list, t_bound: int, k_start: int):
    """Scan spacings k_start..2 over an exponent list; first accepted wins.

    Acceptance: the off-progression set S satisfies 2^|S| <= t_bound
    (exact-integer form of |S| <= log2 t). Returns (k, members, noise_exps)
    or None if no spacing of at least 2 is acceptable.
    """
    t = len(exps)
    for k in range(k_start, 1, -1):
        d = _majority_residue(exps, k)
        members = [e for e in exps if e % k == d]
        if (1 << (t - len(members))) <= t_bound:
            return k, members, [e for e in exps if e % k != d]
    return None


def es_convert(f: DensePoly) -> EqualSpacedPoly:
    """Largest-spacing equal-spaced form of a dense polynomial.

    Up to four terms are handled by the trivial spacing e_t - e_1; beyond
    that candidate spacings are scanned downward from k_bound. The shift
    is normalized to the least exponent of the accepted progression so the
    core has a nonzero constant coefficient.
    """
    if f.is_zero():
        raise ValueError("cannot convert the zero polynomial")
    coeffs = f.coeffs
    exps = f.exponents()
    t = len(exps)
    if t <= 4:
        k = max(exps[-1], 1) if t == 1 else max(exps[-1] - exps[0], 1)
        d0 = exps[0] % k
        members = [e for e in exps if e % k == d0]
        noise_exps = [e for e in exps if e % k != d0]
    else:
        found = spacing_scan(exps, t, k_bound(t, exps[-1]))
        if found is None:
            k, members, noise_exps = 1, exps, []
        else:
            k, members, noise_exps = found
    d = members[0]
    core = [0] * ((members[-1] - d) // k + 1)
    for e in members:
        core[(e - d) // k] = coeffs[e]
    noise = SparsePoly()
    noise.terms = [(coeffs[e], e) for e in noise_exps]
    return EqualSpacedPoly(core, k, d, noise)


def es_to_dense(f: EqualSpacedPoly, cap: int = CostModel().cap) -> DensePoly:
    """Exact reconstruction core(x^spacing)*x^shift + noise."""
    if f.degree + 1 > cap:
        raise CapacityError(f"dense length {f.degree + 1} exceeds cap {cap}")
    out = [0] * (f.degree + 1)
    for i, c in enumerate(f.core):
        out[f.shift + i * f.spacing] = c
    for c, e in f.noise.terms:
        out[e] = c
    return DensePoly(out)


#: Running count of sub-product grid invocations (collision checks live there).
grid_invocations = 0


def grid_accumulate(out, stamps, serial, core_f, k, core_g, ell, shift, field, model) -> None:
    """All sub-product placements for one core pair, written at stride lcm(k, ell).

    Splits each core by index residue so every (i, j) cell is a plain dense
    product landing at shift + i*k + j*ell + q*lcm. Distinct cells can never
    hit the same position; the stamp array enforces that (an AssertionError
    here means the no-collision guarantee was violated). Positions already
    stamped by an earlier serial accumulate with a counted ring addition.
    """
    global grid_invocations
    grid_invocations += 1
    r = math.gcd(k, ell)
    s = k * ell // r
    nf = s // k
    ng = s // ell
    p = field.p
    adds = 0
    for i in range(nf):
        fi = core_f[i::nf]
        if not fi:
            continue
        for j in range(ng):
            gj = core_g[j::ng]
            if not gj:
                continue
            prod = mul_coeff_lists(fi, gj, field, model)
            base = shift + i * k + j * ell
            for q, v in enumerate(prod):
                pos = base + q * s
                st = stamps[pos]
                if st == serial:
                    raise AssertionError(
                        f"sub-product collision at position {pos} (cell {i},{j})"
                    )
                stamps[pos] = serial
                if st == 0:
                    out[pos] = v
                else:
                    out[pos] = (out[pos] + v) % p
                    adds += 1
    field.tally(0, adds)


def _add_terms(out: list, terms, p: int, field) -> None:
    adds = 0
    for c, e in terms:
        out[e] = (out[e] + c) % p
        adds += 1
    field.tally(0, adds)


def es_mul(f: EqualSpacedPoly, g: EqualSpacedPoly, field, model: CostModel | None = None) -> DensePoly:
    """Exact product of two equal-spaced polynomials (dense result).

    The core-by-core part runs the sub-product grid; the three products
    involving a noise part run heap-based sparse multiplication and are
    added into the output buffer.
    """
    model = model if model is not None else CostModel()
    out_len = f.degree + g.degree + 1
    if out_len > model.cap:
        raise CapacityError(f"product length {out_len} exceeds cap {model.cap}")
    out = [0] * out_len
    stamps = [0] * out_len
    grid_accumulate(
        out, stamps, 1, f.core, f.spacing, g.core, g.spacing, f.shift + g.shift, field, model
    )
    p = field.p
    f_core = SparsePoly()
    f_core.terms = f.core_terms()
    g_core = SparsePoly()
    g_core.terms = g.core_terms()
    if not g.noise.is_zero():
        _add_terms(out, sparse_mul(f_core, g.noise, field).terms, p, field)
    if not f.noise.is_zero():
        _add_terms(out, sparse_mul(g_core, f.noise, field).terms, p, field)
    if not f.noise.is_zero() and not g.noise.is_zero():
        _add_terms(out, sparse_mul(f.noise, g.noise, field).terms, p, field)
    return DensePoly(out)


def _cell_lengths(core_len: int, parts: int) -> list:
    return [(core_len - i + parts - 1) // parts for i in range(parts)]


def es_model_cost(f: EqualSpacedPoly, g: EqualSpacedPoly, model: CostModel) -> float:
    """Modeled ring ops of es_mul: grid cells plus the sparse cross products."""
    r = math.gcd(f.spacing, g.spacing)
    s = f.spacing * g.spacing // r
    total = 0.0
    for lf in _cell_lengths(len(f.core), s // f.spacing):
        if lf == 0:
            continue
        for lg in _cell_lengths(len(g.core), s // g.spacing):
            if lg:
                total += model.mult_cost(lf, lg)
    tf = sum(1 for c in f.core if c != 0)
    tg = sum(1 for c in g.core if c != 0)
    nf = f.noise.term_count()
    ng = g.noise.term_count()
    return total + tf * ng + tg * nf + nf * ng
