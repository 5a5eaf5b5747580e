"""Dense and sparse univariate polynomials over a prime field.

DensePoly holds the coefficient array (index = exponent); SparsePoly holds
sorted nonzero (coefficient, exponent) terms. Both are immutable by
convention: operations return fresh objects and never mutate inputs.
Multiplication dispatches to the kernel layer; unequal dense lengths are
handled by splitting the longer operand into blocks of the shorter length.
"""

from __future__ import annotations

from adaptpoly.cost import DEFAULT_CAP, CostModel
from adaptpoly.errors import CapacityError

MAX_EXPONENT = 2**63 - 1


class DensePoly:
    """Coefficient array, normalized so the last entry is nonzero (empty = zero)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    def exponents(self) -> list[int]:
        return [e for e, c in enumerate(self.coeffs) if c != 0]

    def __eq__(self, other):
        return isinstance(other, DensePoly) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"DensePoly({self.coeffs!r})"


class SparsePoly:
    """Sorted nonzero terms (coeff, exp) with strictly increasing exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        ts = [(int(c), int(e)) for c, e in terms]
        prev = -1
        for c, e in ts:
            if c == 0:
                raise ValueError("sparse term with zero coefficient")
            if e < 0:
                raise ValueError("negative exponent")
            if e <= prev:
                raise ValueError("exponents must be strictly increasing")
            if e > MAX_EXPONENT:
                raise CapacityError(f"exponent exceeds machine word: {e}")
            prev = e
        self.terms = ts

    @property
    def degree(self) -> int:
        return self.terms[-1][1] if self.terms else -1

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def exponents(self) -> list[int]:
        return [e for _, e in self.terms]

    def coefficients(self) -> list[int]:
        return [c for c, _ in self.terms]

    def __eq__(self, other):
        return isinstance(other, SparsePoly) and other.terms == self.terms

    def __hash__(self):
        return hash(tuple(self.terms))

    def __repr__(self):
        return f"SparsePoly({self.terms!r})"


def to_sparse(f: DensePoly) -> SparsePoly:
    sp = SparsePoly()
    sp.terms = [(c, e) for e, c in enumerate(f.coeffs) if c != 0]
    return sp


def to_dense(f: SparsePoly, cap: int = DEFAULT_CAP) -> DensePoly:
    if f.is_zero():
        return DensePoly()
    if f.degree + 1 > cap:
        raise CapacityError(f"dense length {f.degree + 1} exceeds cap {cap}")
    coeffs = [0] * (f.degree + 1)
    for c, e in f.terms:
        coeffs[e] = c
    out = DensePoly()
    out.coeffs = coeffs
    return out


def add_into(dst: list, off: int, src: list, p: int) -> int:
    """Accumulate src into dst at offset; returns the number of ring additions."""
    for i, v in enumerate(src):
        dst[off + i] = (dst[off + i] + v) % p
    return len(src)


def mul_coeff_lists(a: list, b: list, field, model: CostModel) -> list:
    """Product of two raw coefficient lists under the blocked kernel scheme.

    The longer operand is cut into ceil(n/m) blocks of the shorter length m;
    each block product runs on the kernel picked by the model threshold and
    is accumulated at its offset. Kernel op counts land in the field tally.
    """
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return []
    if n < m:
        a, b, n, m = b, a, m, n
    p = field.p
    from adaptpoly.kernels import dense_kernel_mul

    if n == m:
        prod, muls, adds = dense_kernel_mul(a, b, p, model.threshold)
        field.tally(muls, adds)
        return prod
    out = [0] * (n + m - 1)
    for off in range(0, n, m):
        block = a[off : off + m]
        prod, muls, adds = dense_kernel_mul(block, b, p, model.threshold)
        field.tally(muls, adds)
        field.tally(0, add_into(out, off, prod, p))
    return out


def dense_mul(f: DensePoly, g: DensePoly, field, model: CostModel | None = None) -> DensePoly:
    """Exact dense product; raises CapacityError past the model's length cap."""
    model = model if model is not None else CostModel()
    if f.is_zero() or g.is_zero():
        return DensePoly()
    result_len = f.length + g.length - 1
    if result_len > model.cap:
        raise CapacityError(f"product length {result_len} exceeds cap {model.cap}")
    return DensePoly(mul_coeff_lists(f.coeffs, g.coeffs, field, model))


def sparse_mul(f: SparsePoly, g: SparsePoly, field) -> SparsePoly:
    """Heap-merged sparse product; cancelled terms are dropped."""
    if f.is_zero() or g.is_zero():
        return SparsePoly()
    if f.degree + g.degree > MAX_EXPONENT:
        raise CapacityError("product exponent would overflow a machine word")
    from adaptpoly.kernels import sparse_kernel_mul

    cs, es, muls, adds = sparse_kernel_mul(
        f.coefficients(), f.exponents(), g.coefficients(), g.exponents(), field.p
    )
    field.tally(muls, adds)
    out = SparsePoly()
    out.terms = list(zip(cs, es))
    return out


def kronecker_pack(nvars: int, maxdeg: int, terms) -> SparsePoly:
    """Pack n-variate terms (coeff, (d1..dn)) into one variable, base 2*maxdeg.

    Exponent vector (d1,...,dn) maps to sum(di * (2*maxdeg)^(i-1)). The
    doubled base leaves headroom so packed products of operands with
    per-variable degrees < maxdeg unpack correctly.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if maxdeg < 1:
        raise ValueError("degree bound must be positive")
    base = 2 * maxdeg
    packed = {}
    for coeff, exps in terms:
        if len(exps) != nvars:
            raise ValueError(f"expected {nvars} exponents, got {len(exps)}")
        if coeff == 0:
            continue
        code = 0
        scale = 1
        for d in exps:
            if d < 0 or d >= maxdeg:
                raise ValueError(f"per-variable degree out of range [0, {maxdeg}): {d}")
            code += d * scale
            scale *= base
        if code > MAX_EXPONENT:
            raise CapacityError("packed exponent exceeds machine word")
        if code in packed:
            raise ValueError("duplicate exponent vector")
        packed[code] = coeff
    out = SparsePoly()
    out.terms = sorted(((c, e) for e, c in packed.items()), key=lambda t: t[1])
    return out


def kronecker_unpack(f: SparsePoly, nvars: int, maxdeg: int) -> list:
    """Invert kronecker_pack: returns [(coeff, (d1..dn)), ...] sorted by code."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if maxdeg < 1:
        raise ValueError("degree bound must be positive")
    base = 2 * maxdeg
    out = []
    for c, e in f.terms:
        exps = []
        rest = e
        for _ in range(nvars):
            rest, d = divmod(rest, base)
            exps.append(d)
        if rest:
            raise ValueError(f"exponent {e} does not fit {nvars} variables at bound {maxdeg}")
        out.append((c, tuple(exps)))
    return out
