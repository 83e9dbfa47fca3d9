"""Value types: solutions, their type tag, the gcd factorization, and bounds."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .arith import gcd, is_prime


class SolutionError(ValueError):
    """Base class for rejected (p, x, y, z) inputs."""


class NotPrimeError(SolutionError):
    pass


class OrderingError(SolutionError):
    pass


class EquationError(SolutionError):
    pass


class InconsistencyError(RuntimeError):
    """A derived structure contradicts its own definition (an arithmetic bug)."""


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p


class SolutionType(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Solution:
    """An ordered triple x <= y <= z with 4/p = 1/x + 1/y + 1/z.

    Build through :func:`make_solution`; direct construction skips validation.
    """

    p: int
    x: int
    y: int
    z: int

    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def ascii(self) -> str:
        return f"4/{self.p} = 1/{self.x} + 1/{self.y} + 1/{self.z}"


def make_solution(p: int, x: int, y: int, z: int) -> Solution:
    require_prime(p)
    if not 1 <= x <= y <= z:
        raise OrderingError(f"ordering 1 <= x <= y <= z violated by ({x}, {y}, {z})")
    lhs = 4 * x * y * z
    rhs = p * (y * z + x * z + x * y)
    if lhs != rhs:
        raise EquationError(
            f"4/{p} != 1/{x} + 1/{y} + 1/{z} (4xyz={lhs}, p(yz+xz+xy)={rhs})"
        )
    return Solution(p, x, y, z)


@dataclass(frozen=True)
class Factorization:
    """x = x0*a*b*d, y = y0*a*c*d, z = z0*b*c*d with d = gcd(x, y, z)."""

    d: int
    a: int
    b: int
    c: int
    x0: int
    y0: int
    z0: int
    c_star: Optional[int] = None

    def reconstruct(self) -> tuple[int, int, int]:
        return (
            self.x0 * self.a * self.b * self.d,
            self.y0 * self.a * self.c * self.d,
            self.z0 * self.b * self.c * self.d,
        )

    def pairwise_coprime(self) -> bool:
        return gcd(self.a, self.b) == 1 and gcd(self.a, self.c) == 1 and gcd(self.b, self.c) == 1


@dataclass(frozen=True)
class Bounds:
    """Inclusive integer interval; empty when lo > hi."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))
