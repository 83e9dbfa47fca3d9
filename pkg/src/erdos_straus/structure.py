"""Type classification, the gcd factorization of a solution, and executable checks
of the structural facts every solution is supposed to satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .arith import ceil_div, gcd
from .model import Factorization, InconsistencyError, Solution, SolutionType
from .reduction import (
    corollary1_x_bounds,
    lemma1_x_bounds,
    lemma1_y_bounds,
    theorem1_residual,
    x_from_y,
    z_from_xy,
)

CHECK_NAMES = (
    "prop1",
    "prop2",
    "lemma1_bounds",
    "lemma2",
    "lemma3",
    "lemma4",
    "lemma5",
    "eq3_identity",
    "eq4_z",
    "eq5_x",
    "corollary1_bounds",
)


class StructureViolation(RuntimeError):
    """The gcd pattern of a solution matches neither Type I nor Type II."""


def classify(s: Solution) -> SolutionType:
    gx, gy, gz = gcd(s.x, s.p), gcd(s.y, s.p), gcd(s.z, s.p)
    if gx == 1 and gz == s.p:
        if gy == 1:
            return SolutionType.TYPE_I
        if gy == s.p:
            return SolutionType.TYPE_II
    raise StructureViolation(
        f"{s.ascii()} has gcd pattern (x,y,z)~p = ({gx}, {gy}, {gz}), neither Type I nor II"
    )


def factorize(s: Solution) -> Factorization:
    x, y, z, p = s.x, s.y, s.z, s.p
    d = gcd(gcd(x, y), z)
    a = gcd(x, y) // d
    b = gcd(x, z) // d
    c = gcd(y, z) // d
    x0, rx = divmod(x, a * b * d)
    y0, ry = divmod(y, a * c * d)
    z0, rz = divmod(z, b * c * d)
    c_star = c // p if c % p == 0 else None
    f = Factorization(d, a, b, c, x0, y0, z0, c_star)
    if rx or ry or rz or f.reconstruct() != (x, y, z) or not f.pairwise_coprime():
        raise InconsistencyError(f"factorization of {s.ascii()} is inconsistent: {f}")
    return f


def check_lemma5(f: Factorization, t: SolutionType, p: int) -> bool:
    if t is SolutionType.TYPE_I:
        return f.x0 == 1 and f.y0 == 1 and f.z0 == p
    return f.x0 == 1 and f.y0 == 1 and f.z0 == 1 and f.c % p == 0


def check_propositions(s: Solution) -> bool:
    divides = [v % s.p == 0 for v in s.triple()]
    return any(divides) and not all(divides)


def check_lemma3(s: Solution) -> bool:
    p2 = s.p * s.p
    return s.y % p2 != 0 and s.z % p2 != 0


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class VerificationReport:
    solution: Solution
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def verify_all(s: Solution) -> VerificationReport:
    """Run every named structural check on s; failures become report entries."""
    p, x, y, z = s.p, s.x, s.y, s.z
    checks = []
    divides = {"x": x % p == 0, "y": y % p == 0, "z": z % p == 0}
    checks.append(Check("prop1", any(divides.values()), {"p_divides": divides}))
    checks.append(Check("prop2", not all(divides.values()), {"p_divides": divides}))

    xb = lemma1_x_bounds(p)
    yb = lemma1_y_bounds(p, x) if 4 * x > p else None
    checks.append(
        Check(
            "lemma1_bounds",
            x in xb and yb is not None and y in yb,
            {"x_bounds": [xb.lo, xb.hi], "y_bounds": None if yb is None else [yb.lo, yb.hi]},
        )
    )
    checks.append(Check("lemma2", gcd(x, p) == 1, {"gcd_x_p": gcd(x, p)}))
    checks.append(
        Check("lemma3", check_lemma3(s), {"y_mod_p2": y % (p * p), "z_mod_p2": z % (p * p)})
    )
    checks.append(
        Check(
            "lemma4",
            gcd(y, p) != p or gcd(z, p) == p,
            {"gcd_y_p": gcd(y, p), "gcd_z_p": gcd(z, p)},
        )
    )

    t: Optional[SolutionType]
    try:
        t = classify(s)
    except StructureViolation:
        t = None
    f = factorize(s)
    checks.append(
        Check(
            "lemma5",
            t is not None and check_lemma5(f, t, p),
            {
                "type": None if t is None else str(t),
                "d": f.d, "a": f.a, "b": f.b, "c": f.c,
                "x0": f.x0, "y0": f.y0, "z0": f.z0, "c_star": f.c_star,
            },
        )
    )

    residual = theorem1_residual(p, x, y)
    checks.append(
        Check(
            "eq3_identity",
            residual == 0,
            {
                "lhs": 4 * x * y - (x + y) * p,
                "gcd_y_p": gcd(y, p),
                "gcd_xy_xplusy": gcd(x * y, x + y),
                "residual": residual,
            },
        )
    )
    z_formula = z_from_xy(p, x, y) if residual == 0 else None
    checks.append(Check("eq4_z", z_formula == z, {"z_formula": z_formula}))

    x_formula = x_from_y(p, y) if 4 * y > p else None
    holds = x_formula == x
    if t is SolutionType.TYPE_I:
        eq5_pass, note = holds, "required (Type I)"
    else:
        eq5_pass = True
        note = "holds (Type II, not guaranteed)" if holds else "fails (Type II, not required)"
    checks.append(
        Check("eq5_x", eq5_pass, {"x_formula": x_formula, "holds": holds, "note": note})
    )

    cb = corollary1_x_bounds(p)
    checks.append(
        Check("corollary1_bounds", x in cb, {"x_bounds": [cb.lo, cb.hi], "ceil_p_2": ceil_div(p, 2)})
    )
    return VerificationReport(s, tuple(checks))
