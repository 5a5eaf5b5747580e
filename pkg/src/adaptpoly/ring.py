"""Arithmetic over a word-sized prime field, with an op-counting variant.

Elements are canonical residues in [0, p) stored as plain ints. A field
object only carries the modulus and the arithmetic; polynomials hold bare
residue lists and pass the field into operations. The counted variant
tracks coefficient multiplications and additions/subtractions so that
operation-count claims can be checked against a live run.
"""

from __future__ import annotations

MAX_MODULUS = 2**63 - 1

# Deterministic Miller-Rabin witnesses for all n < 3.3e24 (covers 63-bit).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class OpCounter:
    """Mutable tally of ring multiplications and additions/subtractions."""

    __slots__ = ("mul_count", "add_count")

    def __init__(self):
        self.mul_count = 0
        self.add_count = 0

    def reset(self) -> None:
        self.mul_count = 0
        self.add_count = 0

    def snapshot(self) -> tuple[int, int]:
        return self.mul_count, self.add_count

    def __repr__(self):
        return f"OpCounter(mul={self.mul_count}, add={self.add_count})"


class PrimeField:
    """Z/pZ for a word-sized prime p; values are canonical residues."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or p > MAX_MODULUS:
            raise ValueError(f"modulus must be an integer in [2, 2^63): {p!r}")
        if not _is_prime(p):
            raise ValueError(f"modulus is not prime: {p}")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def tally(self, muls: int, adds: int) -> None:
        """Record a batch of kernel-performed operations. No-op when uncounted."""

    @property
    def counter(self) -> OpCounter | None:
        return None

    def __repr__(self):
        return f"{type(self).__name__}({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((PrimeField, self.p))


class CountedPrimeField(PrimeField):
    """Same arithmetic as PrimeField; every op lands in a private counter.

    One counter per instance; not safe for concurrent mutation.
    """

    __slots__ = ("_counter",)

    def __init__(self, p: int):
        super().__init__(p)
        self._counter = OpCounter()

    def add(self, a: int, b: int) -> int:
        self._counter.add_count += 1
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        self._counter.add_count += 1
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        self._counter.mul_count += 1
        return a * b % self.p

    def tally(self, muls: int, adds: int) -> None:
        self._counter.mul_count += muls
        self._counter.add_count += adds

    @property
    def counter(self) -> OpCounter:
        return self._counter


def make_field(p: int) -> PrimeField:
    """Construct Z/pZ, validating that p is a prime below 2^63."""
    return PrimeField(p)


def counted(field: PrimeField) -> CountedPrimeField:
    """A fresh op-counting field over the same modulus."""
    return CountedPrimeField(field.p)
