"""Polynomial text format shared by the library and the CLI.

    poly v1 mod <p>
    dense <c0> <c1> ... <cd>          (single line)
  or
    term <coeff> <exp>                (one per line, strictly increasing exp)

Blank lines and '#' comments are ignored. Coefficients must be canonical
residues in [0, p). A header-only file is the sparse zero polynomial; a
bare 'dense' line is the dense zero.
"""

from __future__ import annotations

from adaptpoly.errors import ParseError
from adaptpoly.poly import DensePoly, SparsePoly


def parse_poly(text: str):
    """Parse polynomial text; returns (modulus, poly) with the encoded kind."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty polynomial file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "poly" or head[1] != "v1" or head[2] != "mod":
        raise ParseError(f"bad header: {lines[0]!r}")
    try:
        p = int(head[3])
    except ValueError:
        raise ParseError(f"bad modulus: {head[3]!r}") from None
    if p < 2:
        raise ParseError(f"bad modulus: {p}")

    body = lines[1:]
    if not body:
        return p, SparsePoly()
    if body[0].startswith("dense"):
        if len(body) != 1:
            raise ParseError("dense polynomial must be a single line")
        fields = body[0].split()
        try:
            coeffs = [int(v) for v in fields[1:]]
        except ValueError:
            raise ParseError(f"bad dense coefficient in {body[0]!r}") from None
        _check_residues(coeffs, p)
        return p, DensePoly(coeffs)
    terms = []
    for line in body:
        fields = line.split()
        if len(fields) != 3 or fields[0] != "term":
            raise ParseError(f"bad term line: {line!r}")
        try:
            c, e = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"bad term line: {line!r}") from None
        terms.append((c, e))
    _check_residues([c for c, _ in terms], p)
    try:
        return p, SparsePoly(terms)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _check_residues(coeffs, p: int) -> None:
    for c in coeffs:
        if c < 0 or c >= p:
            raise ParseError(f"coefficient {c} not a canonical residue mod {p}")


def serialize_poly(p: int, poly) -> str:
    lines = [f"poly v1 mod {p}"]
    if isinstance(poly, DensePoly):
        lines.append(("dense " + " ".join(str(c) for c in poly.coeffs)).rstrip())
    elif isinstance(poly, SparsePoly):
        lines.extend(f"term {c} {e}" for c, e in poly.terms)
    else:
        raise TypeError(f"not a polynomial: {poly!r}")
    return "\n".join(lines) + "\n"


def read_poly_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_poly(fh.read())


def write_poly_file(path: str, p: int, poly) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_poly(p, poly))
