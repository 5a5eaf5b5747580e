"""Command-line front end: gen, mul, bench, kbench.

Exit codes: 0 success, 2 parse/usage error, 3 modulus mismatch,
4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time

from adaptpoly import kernels
from adaptpoly.adaptive import multiply
from adaptpoly.cost import CostModel
from adaptpoly.errors import CapacityError, ParseError
from adaptpoly.instances import FAMILIES, InstanceSpec, generate
from adaptpoly.ring import make_field
from adaptpoly.textio import read_poly_file, serialize_poly, write_poly_file

ALGO_CHOICES = ("dense", "sparse", "chunky", "eqspace", "combined", "auto")
_ALGO_MAP = {"eqspace": "equal-spaced"}

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MODULUS = 3
EXIT_CAPACITY = 4


def _model_from_args(args) -> CostModel:
    return CostModel(kind=args.model, threshold=args.threshold, cap=args.cap)


def _add_model_flags(sub) -> None:
    sub.add_argument("--model", choices=("schoolbook", "karatsuba", "fftlike"),
                     default="karatsuba")
    sub.add_argument("--threshold", type=int, default=32)
    sub.add_argument("--cap", type=int, default=2**31)


def _spec_from_args(args) -> InstanceSpec:
    return InstanceSpec(
        family=args.family, p=args.modulus, seed=args.seed, degree=args.degree,
        terms=args.terms, chunks=args.chunks, chunk_len=args.chunk_len,
        gap_len=args.gap_len, spacing=args.spacing, core_len=args.core_len,
        noise=args.noise, jitter=args.jitter,
    )


def _add_spec_flags(sub) -> None:
    sub.add_argument("--family", choices=FAMILIES, required=True)
    sub.add_argument("--modulus", type=int, default=9973)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--degree", type=int, default=256)
    sub.add_argument("--terms", type=int, default=32)
    sub.add_argument("--chunks", type=int, default=8)
    sub.add_argument("--chunk-len", dest="chunk_len", type=int, default=16)
    sub.add_argument("--gap-len", dest="gap_len", type=int, default=64)
    sub.add_argument("--spacing", type=int, default=8)
    sub.add_argument("--core-len", dest="core_len", type=int, default=32)
    sub.add_argument("--noise", type=int, default=0)
    sub.add_argument("--jitter", type=float, default=0.0)


def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    _, poly = generate(spec)
    write_poly_file(args.out, spec.p, poly)
    return EXIT_OK


def cmd_mul(args) -> int:
    try:
        pa, fa = read_poly_file(args.a)
        pb, fb = read_poly_file(args.b)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if pa != pb:
        print(f"modulus mismatch: {pa} vs {pb}", file=sys.stderr)
        return EXIT_MODULUS
    field = make_field(pa)
    algo = _ALGO_MAP.get(args.algo, args.algo)
    model = _model_from_args(args)
    try:
        product, report = multiply(fa, fb, field, strategy=algo, model=model)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = serialize_poly(pa, product)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as fh:
            fh.write("\n".join(report.to_kv()) + "\n")
    return EXIT_OK


def _parse_bench_line(line: str, lineno: int) -> dict:
    fields: dict = {}
    for tok in line.split():
        if "=" not in tok:
            raise ParseError(f"line {lineno}: bad token {tok!r}")
        key, val = tok.split("=", 1)
        fields[key] = val
    for req in ("family", "algos"):
        if req not in fields:
            raise ParseError(f"line {lineno}: missing {req}=")
    return fields


_INT_SPEC_KEYS = ("degree", "terms", "chunks", "chunk_len", "gap_len",
                  "spacing", "core_len", "noise")


def cmd_bench(args) -> int:
    try:
        with open(args.matrix, "r", encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        print(f"cannot read matrix: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rows = ["instance\tstrategy\tmodel_cost\tmul_count\tadd_count\twall_time_s"]
    try:
        for lineno, raw in enumerate(raw_lines, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = _parse_bench_line(line, lineno)
            p = int(fields.get("p", 9973))
            seed_a = int(fields.get("seed_a", fields.get("seed", 0)))
            seed_b = int(fields.get("seed_b", seed_a + 1))
            kwargs = {k: int(fields[k]) for k in _INT_SPEC_KEYS if k in fields}
            if "jitter" in fields:
                kwargs["jitter"] = float(fields["jitter"])
            spec_a = InstanceSpec(family=fields["family"], p=p, seed=seed_a, **kwargs)
            spec_b = InstanceSpec(family=fields["family"], p=p, seed=seed_b, **kwargs)
            _, fa = generate(spec_a)
            _, fb = generate(spec_b)
            field = make_field(p)
            model = CostModel(
                kind=fields.get("model", "karatsuba"),
                threshold=int(fields.get("threshold", 32)),
                cap=int(fields.get("cap", 2**31)),
            )
            label = f"{fields['family']}[seeds={seed_a},{seed_b}]"
            for algo in fields["algos"].split(","):
                algo = algo.strip()
                strategy = _ALGO_MAP.get(algo, algo)
                t0 = time.perf_counter()
                _, report = multiply(fa, fb, field, strategy=strategy, model=model)
                wall = time.perf_counter() - t0
                cost = report.costs.get(report.strategy, 0.0)
                rows.append(
                    f"{label}\t{algo}\t{cost:.6g}\t{report.mul_count}"
                    f"\t{report.add_count}\t{wall:.6f}"
                )
    except (ParseError, ValueError) as exc:
        print(f"bench error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    table = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)
    return EXIT_OK


def cmd_kbench(args) -> int:
    """Compare the compiled kernel core against the pure-Python fallback."""
    import random as _random

    from adaptpoly import _pykernels

    p = args.modulus
    make_field(p)  # validates primality
    sizes = [int(s) for s in args.sizes.split(",")]
    impls = [("python", _pykernels)]
    if kernels.have_compiled():
        impls.insert(0, ("compiled", kernels.compiled_kernels))
    else:
        print("# compiled kernel core not available; python rows only", file=sys.stderr)
    rows = ["kernel\top\tn\tseconds\tmuls"]
    rng = _random.Random(args.seed)
    for n in sizes:
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        ea = sorted(rng.sample(range(16 * n), n))
        eb = sorted(rng.sample(range(16 * n), n))
        for name, impl in impls:
            t0 = time.perf_counter()
            _, muls, _ = impl.karatsuba_mul(a, b, p, args.threshold)
            rows.append(f"{name}\tdense-karatsuba\t{n}\t{time.perf_counter() - t0:.6f}\t{muls}")
            t0 = time.perf_counter()
            _, _, muls, _ = impl.sparse_heap_mul(a, ea, b, eb, p)
            rows.append(f"{name}\tsparse-heap\t{n}\t{time.perf_counter() - t0:.6f}\t{muls}")
    table = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adaptpoly",
                                     description="adaptive polynomial multiplication")
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="generate a structured random polynomial file")
    _add_spec_flags(gen)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    mul = subs.add_parser("mul", help="multiply two polynomial files")
    mul.add_argument("a")
    mul.add_argument("b")
    mul.add_argument("--algo", choices=ALGO_CHOICES, default="auto")
    _add_model_flags(mul)
    mul.add_argument("--out", default=None)
    mul.add_argument("--stats", default=None)
    mul.set_defaults(func=cmd_mul)

    bench = subs.add_parser("bench", help="run a benchmark matrix of instances x strategies")
    bench.add_argument("matrix")
    bench.add_argument("--out", default=None)
    bench.set_defaults(func=cmd_bench)

    kbench = subs.add_parser("kbench", help="benchmark compiled vs pure-Python kernels")
    kbench.add_argument("--sizes", default="256,1024,4096")
    kbench.add_argument("--modulus", type=int, default=9973)
    kbench.add_argument("--threshold", type=int, default=32)
    kbench.add_argument("--seed", type=int, default=0)
    kbench.add_argument("--out", default=None)
    kbench.set_defaults(func=cmd_kbench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
