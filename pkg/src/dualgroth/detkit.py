"""Exact determinants of polynomial matrices and the determinantal routes.

Every constructor returns a square matrix of Poly entries; ``det`` uses
cofactor expansion memoized on column subsets, which is division-free and
comfortably fast at the sizes that arise here (n <= 8).
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import Poly, exact_divide
from .shapes import Partition, SkewShape
from .symfn import complete_sym, complete_sym_single, elem_sym, phi_power_h


class FormulaUsageError(ValueError):
    """A formula was applied outside its domain (for example to a skew shape)."""


@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Poly:
        """1-based access."""
        return self.entries[i - 1][j - 1]


def det(mat: PolyMatrix) -> Poly:
    """Exact determinant; the 0x0 determinant is 1."""
    n = mat.n
    if n == 0:
        return Poly.one()
    rows = mat.entries
    full = (1 << n) - 1
    memo: dict[int, Poly] = {0: Poly.one()}

    def rec(mask: int) -> Poly:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = n - bin(mask).count("1")
        total = Poly.zero()
        sign = 1
        for c in range(n):
            bit = 1 << c
            if not mask & bit:
                continue
            e = rows[row][c]
            if not e.is_zero:
                sub = rec(mask & ~bit)
                total = total + (e * sub if sign > 0 else -(e * sub))
            sign = -sign
        memo[mask] = total
        return total

    return rec(full)


def jt_e_matrix(outer: Partition, inner: Partition, n: int, m: int, refined: bool = False) -> PolyMatrix:
    """The e-generator matrix whose determinant is the skew polynomial.

    Entry (i, j) is e_{oc_i - i - ic_j + j} over a ones-prefix of length
    oc_i - 1 - ic_j (plain) or the t-block t_{ic_j+1}..t_{oc_i-1} (refined)
    followed by x1..xm, where oc / ic are the conjugate parts.
    """
    if not outer.contains(inner):
        raise ValueError("inner partition must be contained in the outer one")
    if n < max(outer.part(1), inner.part(1)):
        raise ValueError(f"matrix size n={n} must be at least the largest part")
    oc = outer.conjugate()
    ic = inner.conjugate()
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            degree = oc.part(i) - i - ic.part(j) + j
            if refined:
                row.append(elem_sym(degree, m, t_range=(ic.part(j) + 1, oc.part(i) - 1)))
            else:
                row.append(elem_sym(degree, m, ones=max(oc.part(i) - 1 - ic.part(j), 0)))
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def jt_h_dual_matrix(outer: Partition, inner: Partition, n: int, m: int) -> PolyMatrix:
    """The h-generator matrix: entry (i, j) is the (i-j)-th ones-prefix power
    applied to h_{outer_i - i - inner_j + j}."""
    if not outer.contains(inner):
        raise ValueError("inner partition must be contained in the outer one")
    if n < max(outer.length, inner.length):
        raise ValueError(f"matrix size n={n} must be at least both lengths")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            row.append(phi_power_h(i - j, outer.part(i) - i - inner.part(j) + j, m))
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def h_straight_matrix(outer: Partition, m: int, variant: str) -> PolyMatrix:
    """Straight-shape h-matrices: variant "phi" uses row-shifted prefix powers,
    variant "positive" uses h over an explicit ones-prefix of length i-1."""
    if variant not in ("phi", "positive"):
        raise ValueError(f"unknown variant {variant!r}")
    n = outer.length
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            degree = outer.part(i) - i + j
            if variant == "phi":
                row.append(phi_power_h(i - j, degree, m))
            else:
                row.append(complete_sym(degree, m, ones=i - 1))
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def vandermonde(n: int) -> Poly:
    """The product of (x_i - x_j) over i < j; 1 for n <= 1."""
    out = Poly.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (Poly.x(i) - Poly.x(j))
    return out


def bialternant_numerator(outer: Partition, n: int) -> PolyMatrix:
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            row.append(complete_sym_single(outer.part(i) + n - i, i - 1, j))
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def bialternant(outer: Partition, n: int) -> Poly:
    """The alternant ratio in n variables; requires n >= length of the partition."""
    if n < outer.length:
        raise ValueError(f"need at least {outer.length} variables, got {n}")
    numerator = det(bialternant_numerator(outer, n))
    return exact_divide(numerator, vandermonde(n))


FORMULAS = ("oracle", "jt_e", "jt_e_refined", "jt_h_dual", "h_phi", "h_positive", "bialternant")

_STRAIGHT_ONLY = ("h_phi", "h_positive", "bialternant")
_REFINED_CAPABLE = ("oracle", "jt_e", "jt_e_refined")


def g_via(formula: str, shape: SkewShape, m: int, *, refined: bool = False, n: int | None = None) -> Poly:
    """Compute the skew dual Grothendieck polynomial by the chosen route.

    Straight-shape-only routes reject a nonempty inner shape.  A refined
    route with ``refined=False`` is specialized at t = 1 before returning.
    """
    from .tableaux import dual_grothendieck  # local import to avoid a cycle

    if formula not in FORMULAS:
        raise FormulaUsageError(f"unknown formula {formula!r}; choose from {FORMULAS}")
    if refined and formula not in _REFINED_CAPABLE:
        raise FormulaUsageError(f"formula {formula!r} has no refined variant")
    if formula in _STRAIGHT_ONLY and not shape.is_straight():
        raise FormulaUsageError(f"formula {formula!r} applies to straight shapes only")
    lam, mu = shape.outer, shape.inner

    if formula == "oracle":
        return dual_grothendieck(shape, m, refined=refined)
    if formula in ("jt_e", "jt_e_refined"):
        use_refined = refined or formula == "jt_e_refined"
        size = n if n is not None else max(lam.part(1), mu.part(1))
        result = det(jt_e_matrix(lam, mu, size, m, refined=use_refined))
        if use_refined and not refined:
            result = result.set_t_to_one()
        return result
    if formula == "jt_h_dual":
        size = n if n is not None else max(lam.length, mu.length)
        return det(jt_h_dual_matrix(lam, mu, size, m))
    if formula == "h_phi":
        return det(h_straight_matrix(lam, m, "phi"))
    if formula == "h_positive":
        return det(h_straight_matrix(lam, m, "positive"))
    # bialternant: evaluated in n = m variables
    if m < lam.length:
        raise FormulaUsageError(
            f"bialternant needs at least {lam.length} variables, got m={m}")
    return bialternant(lam, m)
