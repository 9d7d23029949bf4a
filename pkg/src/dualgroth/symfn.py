"""Elementary and complete symmetric polynomial evaluators.

Arguments may include a prefix of literal ones, a contiguous block of
t-variables and the x-variables x1..xm.  Conventions: degree 0 gives 1,
negative degree gives 0, and a negative ones-count is clamped to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .polyring import Poly
from .shapes import Partition, SkewShape


def gen_binomial(a: int, k: int) -> int:
    """Binomial coefficient with integer upper argument: a(a-1)...(a-k+1)/k!."""
    if k < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for i in range(k):
        num *= a - i
    return num // factorial(k)


def _args(ones: int, t_lo: int, t_hi: int, m: int) -> list[Poly]:
    out: list[Poly] = [Poly.one()] * max(ones, 0)
    out += [Poly.t(j) for j in range(t_lo, t_hi + 1)]
    out += [Poly.x(i) for i in range(1, m + 1)]
    return out


def _elementary(args: list[Poly], degree: int) -> Poly:
    if degree < 0:
        return Poly.zero()
    coeffs = [Poly.one()] + [Poly.zero()] * degree
    for arg in args:
        for k in range(min(degree, len(args)), 0, -1):
            coeffs[k] = coeffs[k] + coeffs[k - 1] * arg
    return coeffs[degree]


def _complete(args: list[Poly], degree: int) -> Poly:
    if degree < 0:
        return Poly.zero()
    coeffs = [Poly.one()] + [Poly.zero()] * degree
    for arg in args:
        for k in range(1, degree + 1):
            coeffs[k] = coeffs[k] + coeffs[k - 1] * arg
    return coeffs[degree]


@dataclass(frozen=True)
class SymSpec:
    """A symmetric-polynomial evaluation request over (1^ones, t_lo..t_hi, x1..xm)."""

    kind: str  # "elementary" | "complete"
    degree: int
    m: int
    ones: int = 0
    t_lo: int = 1
    t_hi: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("elementary", "complete"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "complete" and self.t_hi >= self.t_lo:
            raise ValueError("complete symmetric polynomials take no t-arguments here")

    def evaluate(self) -> Poly:
        args = _args(self.ones, self.t_lo, self.t_hi, self.m)
        if self.kind == "elementary":
            return _elementary(args, self.degree)
        return _complete(args, self.degree)


def elem_sym(degree: int, m: int, *, ones: int = 0, t_range: tuple[int, int] | None = None) -> Poly:
    """e_degree over (1^ones, t_lo..t_hi, x1..xm); ones clamped below at 0."""
    t_lo, t_hi = t_range if t_range is not None else (1, 0)
    return SymSpec("elementary", degree, m, ones=ones, t_lo=t_lo, t_hi=t_hi).evaluate()


def complete_sym(degree: int, m: int, *, ones: int = 0) -> Poly:
    """h_degree over (1^ones, x1..xm)."""
    return SymSpec("complete", degree, m, ones=ones).evaluate()


def complete_sym_single(degree: int, ones: int, var_index: int) -> Poly:
    """h_degree over (1^ones, x_{var_index}) - a one-variable column evaluation."""
    args = [Poly.one()] * max(ones, 0) + [Poly.x(var_index)]
    return _complete(args, degree)


def phi_power_h(level: int, degree: int, m: int) -> Poly:
    """The level-th power of the ones-prefixing map applied to h_degree.

    Equals sum_k C(level+k-1, k) * h_{degree-k}(x1..xm); for level >= 0 this
    agrees with h_degree(1^level, x1..xm).  Negative degree gives 0.
    """
    if degree < 0:
        return Poly.zero()
    total = Poly.zero()
    for k in range(degree + 1):
        c = gen_binomial(level + k - 1, k)
        if c:
            total = total + c * complete_sym(degree - k, m)
    return total


def schur_jt(shape: SkewShape, m: int) -> Poly:
    """Skew Schur polynomial via the classical h-determinant (top-degree oracle)."""
    from .detkit import PolyMatrix, det  # local import to avoid a cycle

    lam, mu = shape.outer, shape.inner
    n = lam.length
    entries = tuple(
        tuple(
            complete_sym(lam.part(i) - i - mu.part(j) + j, m)
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )
    return det(PolyMatrix(entries))
