"""Top-level multiplication façade: pick a representation, multiply, report.

The pipeline mirrors the conversion machinery: compute the common chunk
size, convert both operands to chunky form, optionally detect shared
spacings (combined), then multiply in the cheapest representation. The
auto strategy compares model costs only (decisions must precede the
multiplication); measured operation counts are recorded afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from adaptpoly import chunky as _chunky
from adaptpoly import combined as _combined
from adaptpoly import eqspaced as _es
from adaptpoly.cost import INF_COST, CostModel
from adaptpoly.errors import CapacityError
from adaptpoly.poly import DensePoly, SparsePoly, dense_mul, sparse_mul, to_dense, to_sparse
from adaptpoly.ring import PrimeField, counted

STRATEGY_ORDER = ("dense", "sparse", "chunky", "equal-spaced", "combined")
STRATEGIES = STRATEGY_ORDER + ("auto",)


@dataclass
class MultiplyReport:
    strategy: str
    requested: str
    output_kind: str
    costs: dict = dc_field(default_factory=dict)
    chunk_size: int | None = None
    spacing_f: int | None = None
    spacing_g: int | None = None
    noise_f: int | None = None
    noise_g: int | None = None
    mul_count: int = 0
    add_count: int = 0
    trivial: bool = False

    def to_kv(self) -> list:
        """Flat key=value lines (stable order) for the CLI stats output."""
        lines = [
            f"strategy={self.strategy}",
            f"requested={self.requested}",
            f"output={self.output_kind}",
            f"trivial={int(self.trivial)}",
        ]
        for name in STRATEGY_ORDER:
            if name in self.costs:
                lines.append(f"cost.{name}={self.costs[name]:.6g}")
        for key in ("chunk_size", "spacing_f", "spacing_g", "noise_f", "noise_g"):
            val = getattr(self, key)
            if val is not None:
                lines.append(f"{key}={val}")
        lines.append(f"mul_count={self.mul_count}")
        lines.append(f"add_count={self.add_count}")
        return lines


def explain(report: MultiplyReport) -> str:
    """Deterministic human-readable rendering of a multiply report."""
    if report.trivial:
        return "trivial: zero operand\n"
    lines = [f"strategy: {report.strategy} (requested {report.requested})"]
    lines.append(f"output representation: {report.output_kind}")
    lines.append("model costs:")
    for name in STRATEGY_ORDER:
        if name in report.costs:
            marker = " <-- chosen" if name == report.strategy else ""
            lines.append(f"  {name}: {report.costs[name]:.6g}{marker}")
    if report.chunk_size is not None:
        lines.append(f"chunk size: {report.chunk_size}")
    if report.spacing_f is not None:
        lines.append(
            f"spacing: f={report.spacing_f} g={report.spacing_g} "
            f"(noise {report.noise_f}/{report.noise_g})"
        )
    lines.append(f"measured: mul={report.mul_count} add={report.add_count}")
    return "\n".join(lines) + "\n"


def _dense_length(f) -> int:
    return f.length if isinstance(f, DensePoly) else f.degree + 1


def multiply(f, g, field: PrimeField, strategy: str = "auto", model: CostModel | None = None):
    """Multiply two polynomials under a strategy; returns (product, report).

    The product representation follows the inputs: dense only when both
    operands are dense. Zero operands short-circuit with a trivial report.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy: {strategy!r}")
    model = model if model is not None else CostModel()
    kind = "dense" if isinstance(f, DensePoly) and isinstance(g, DensePoly) else "sparse"

    if f.is_zero() or g.is_zero():
        zero = DensePoly() if kind == "dense" else SparsePoly()
        return zero, MultiplyReport(
            strategy="trivial", requested=strategy, output_kind=kind, trivial=True
        )

    cf = counted(field)
    costs: dict = {}

    lf, lg = _dense_length(f), _dense_length(g)
    costs["dense"] = model.mult_cost(lf, lg) if lf + lg - 1 <= model.cap else INF_COST
    tf, tg = f.term_count(), g.term_count()
    costs["sparse"] = float(tf) * float(tg)

    k_chunk = _chunky.optimal_chunk_size(f, g, model)
    fc = _chunky.chunky_convert(f, k_chunk, model)
    gc = _chunky.chunky_convert(g, k_chunk, model)
    costs["chunky"] = _chunky.chunky_model_cost(fc, gc, model)

    ef = eg = None
    if kind == "dense":
        ef = _es.es_convert(f)
        eg = _es.es_convert(g)
        costs["equal-spaced"] = _es.es_model_cost(ef, eg, model)
    elif strategy == "equal-spaced":
        raise ValueError("equal-spaced strategy requires dense inputs")

    csp_f = csp_g = None
    if strategy in ("combined", "auto"):
        csp_f = _combined.space_chunks(fc, model)
        csp_g = _combined.space_chunks(gc, model)
        cost_comb = _combined.combined_model_cost(csp_f, csp_g, model)
        if cost_comb > costs["chunky"]:
            # Spacing did not pay off against the chunky baseline for this
            # operand pair; degrade to the spacing-1 view so the combined
            # route is never costlier than pure chunky.
            csp_f = _combined.from_chunky(fc)
            csp_g = _combined.from_chunky(gc)
            cost_comb = _combined.combined_model_cost(csp_f, csp_g, model)
        costs["combined"] = cost_comb

    if strategy == "auto":
        chosen = min(
            (name for name in STRATEGY_ORDER if name in costs),
            key=lambda name: (costs[name], STRATEGY_ORDER.index(name)),
        )
    else:
        chosen = strategy

    if chosen == "dense":
        fd = f if isinstance(f, DensePoly) else to_dense(f, model.cap)
        gd = g if isinstance(g, DensePoly) else to_dense(g, model.cap)
        result = dense_mul(fd, gd, cf, model)
    elif chosen == "sparse":
        fs = f if isinstance(f, SparsePoly) else to_sparse(f)
        gs = g if isinstance(g, SparsePoly) else to_sparse(g)
        result = sparse_mul(fs, gs, cf)
    elif chosen == "chunky":
        if kind == "dense":
            out_len = f.degree + g.degree + 1
            if out_len > model.cap:
                raise CapacityError(f"product length {out_len} exceeds cap {model.cap}")
            buf = [0] * out_len
            _chunky.chunky_mul(fc, gc, cf, model, out=buf)
            result = DensePoly(buf)
        else:
            result = _chunky.chunky_to_output(_chunky.chunky_mul(fc, gc, cf, model), "sparse")
    elif chosen == "equal-spaced":
        result = _es.es_mul(ef, eg, cf, model)
    else:
        result = _combined.combined_mul(csp_f, csp_g, cf, model, target=kind)

    if kind == "dense" and isinstance(result, SparsePoly):
        result = to_dense(result, model.cap)
    elif kind == "sparse" and isinstance(result, DensePoly):
        result = to_sparse(result)

    report = MultiplyReport(
        strategy=chosen,
        requested=strategy,
        output_kind=kind,
        costs=costs,
        chunk_size=k_chunk,
        mul_count=cf.counter.mul_count,
        add_count=cf.counter.add_count,
    )
    if csp_f is not None:
        report.spacing_f = csp_f.spacing
        report.spacing_g = csp_g.spacing
        report.noise_f = csp_f.noise.term_count()
        report.noise_g = csp_g.noise.term_count()
    if chosen == "equal-spaced":
        report.spacing_f = ef.spacing
        report.spacing_g = eg.spacing
        report.noise_f = ef.noise.term_count()
        report.noise_g = eg.noise.term_count()
    return result, report
