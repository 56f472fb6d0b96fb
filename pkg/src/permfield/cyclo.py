"""Exact arithmetic in Z[zeta_p] for prime p.

Character sums are compared with zero or with plain integers exactly, so
their values live here rather than in floating point.  A value is stored on
the basis {1, zeta, ..., zeta^(p-2)} padded with a final zero coordinate:
the relation 1 + zeta + ... + zeta^(p-1) = 0 folds any zeta^(p-1) term into
the others, which makes the representation unique and equality a plain
coordinate comparison.  For p = 2 the value is just the integer c_0.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import MixedPrimes, NonIntegralDivision


class CycInt:
    """An element of Z[zeta_p] in canonical coordinates."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Sequence[int]):
        if len(coords) > p:
            raise ValueError(f"at most {p} coordinates expected")
        c = list(coords) + [0] * (p - len(coords))
        last = c[p - 1]
        if last:
            c = [x - last for x in c[: p - 1]] + [0]
        self.p = p
        self.coords = tuple(int(x) for x in c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, ())

    @classmethod
    def from_int(cls, p: int, k: int) -> "CycInt":
        return cls(p, (k,))

    @classmethod
    def from_power_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """sum of counts[j] * zeta^j over j; counts indexed by exponent."""
        acc = [0] * p
        for j, k in enumerate(counts):
            acc[j % p] += int(k)
        return cls(p, acc)

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "CycInt") -> None:
        if self.p != other.p:
            raise MixedPrimes(f"cannot mix Z[zeta_{self.p}] and Z[zeta_{other.p}]")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.p, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.p, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, [-a for a in self.coords])

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out = [0] * self.p
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        out[(i + j) % self.p] += a * b
        return CycInt(self.p, out)

    __rmul__ = __mul__

    def scale(self, k: int) -> "CycInt":
        return CycInt(self.p, [a * k for a in self.coords])

    def divexact(self, k: int) -> "CycInt":
        """Coordinate-wise division by a nonzero integer that must be exact."""
        if k == 0:
            raise ZeroDivisionError("division of a cyclotomic integer by 0")
        if any(a % k for a in self.coords):
            raise NonIntegralDivision(f"{self} is not divisible by {k}")
        return CycInt(self.p, [a // k for a in self.coords])

    # -- predicates and views -------------------------------------------------

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def as_integer(self) -> Optional[int]:
        """The value as a plain integer when it is one, else None."""
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.as_integer() == other
        return (
            isinstance(other, CycInt)
            and self.p == other.p
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coords))

    def __repr__(self) -> str:
        k = self.as_integer()
        if k is not None:
            return f"CycInt({self.p}, {k})"
        return f"CycInt({self.p}, {list(self.coords)})"


def root_power(p: int, j: int) -> CycInt:
    """zeta_p^j in canonical coordinates (j taken mod p)."""
    e = [0] * p
    e[j % p] = 1
    return CycInt(p, e)
