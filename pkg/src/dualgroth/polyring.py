"""Sparse exact polynomials in two variable families x1..xm and t1..tL.

Coefficients are arbitrary-precision Python integers.  Terms are stored
keyed by a pair of exponent tuples (x-block, t-block) with trailing zeros
stripped, which makes the stripped tuples compare exactly like their
zero-padded counterparts.

Two orders are used:

* canonical order (serialization, leading terms): descending graded-lex
  with the x-block before the t-block;
* display order (text output): ascending total degree, t-carrying terms
  first, as in ``t1*x1 + t1*x2 + x1*x2``.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Iterator, Mapping


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


Exps = tuple[int, ...]
Key = tuple[Exps, Exps]


def _strip(exps: Iterable[int]) -> Exps:
    out = list(exps)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _add_exps(a: Exps, b: Exps) -> Exps:
    if len(a) < len(b):
        a, b = b, a
    merged = list(a)
    for i, e in enumerate(b):
        merged[i] += e
    return _strip(merged)


def _sub_exps(a: Exps, b: Exps) -> Exps | None:
    """a - b elementwise, or None if any entry would go negative."""
    if len(b) > len(a) and any(e > 0 for e in b[len(a):]):
        return None
    out = list(a)
    for i, e in enumerate(b):
        if i >= len(out):
            if e:
                return None
            continue
        out[i] -= e
        if out[i] < 0:
            return None
    return _strip(out)


def _neg(exps: Exps) -> tuple[int, ...]:
    # Trailing sentinel emulates zero-padding so that stripped tuples of
    # different lengths compare like their padded forms (descending lex).
    return tuple(-e for e in exps) + (1,)


def _canonical_key(key: Key):
    xe, te = key
    return (-(sum(xe) + sum(te)), _neg(xe), _neg(te))


def _display_key(key: Key):
    xe, te = key
    return (sum(xe) + sum(te), _neg(te), _neg(xe))


class Poly:
    """An immutable sparse polynomial with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int] | None = None):
        clean: dict[Key, int] = {}
        if terms:
            for (xe, te), c in terms.items():
                if c == 0:
                    continue
                k = (_strip(xe), _strip(te))
                c = clean.get(k, 0) + c
                if c:
                    clean[k] = c
                else:
                    del clean[k]
        self._terms = clean

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def integer(c: int) -> "Poly":
        return Poly({((), ()): int(c)})

    @staticmethod
    def one() -> "Poly":
        return Poly.integer(1)

    @staticmethod
    def x(i: int) -> "Poly":
        if i < 1:
            raise ValueError("x-variable indices are 1-based")
        return Poly({((0,) * (i - 1) + (1,), ()): 1})

    @staticmethod
    def t(j: int) -> "Poly":
        if j < 1:
            raise ValueError("t-variable indices are 1-based")
        return Poly({((), (0,) * (j - 1) + (1,)): 1})

    @staticmethod
    def monomial(coeff: int, x_exps: Iterable[int] = (), t_exps: Iterable[int] = ()) -> "Poly":
        return Poly({(_strip(x_exps), _strip(t_exps)): int(coeff)})

    # -- inspection ---------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def num_x(self) -> int:
        """Smallest m such that the polynomial lives in x1..xm."""
        return max((len(xe) for xe, _ in self._terms), default=0)

    @property
    def num_t(self) -> int:
        return max((len(te) for _, te in self._terms), default=0)

    @property
    def has_t(self) -> bool:
        return any(te for _, te in self._terms)

    def terms(self) -> Iterator[tuple[Key, int]]:
        """Terms in canonical (descending graded-lex) order."""
        for k in sorted(self._terms, key=_canonical_key):
            yield k, self._terms[k]

    def coefficient(self, x_exps: Iterable[int] = (), t_exps: Iterable[int] = ()) -> int:
        return self._terms.get((_strip(x_exps), _strip(t_exps)), 0)

    def constant_value(self) -> int:
        """The value of a constant polynomial; error if non-constant."""
        if self.is_zero:
            return 0
        if len(self._terms) == 1 and ((), ()) in self._terms:
            return self._terms[((), ())]
        raise ValueError("polynomial is not constant")

    def total_degree(self) -> int:
        return max((sum(xe) + sum(te) for xe, te in self._terms), default=0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        p = Poly.__new__(Poly)
        p._terms = out
        return p

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p._terms = {k: -c for k, c in self._terms.items()}
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly.zero()
            p = Poly.__new__(Poly)
            p._terms = {k: c * other for k, c in self._terms.items()}
            return p
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Key, int] = {}
        for (xa, ta), ca in self._terms.items():
            for (xb, tb), cb in other._terms.items():
                k = (_add_exps(xa, xb), _add_exps(ta, tb))
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
        p = Poly.__new__(Poly)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "Poly":
        if exp < 0:
            raise ValueError("negative powers are not defined")
        result = Poly.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == Poly.integer(other)._terms
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- specializations ----------------------------------------------
    def set_t_to_one(self) -> "Poly":
        """Substitute 1 for every t-variable."""
        out: dict[Key, int] = {}
        for (xe, te), c in self._terms.items():
            k = (xe, ())
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        p = Poly.__new__(Poly)
        p._terms = out
        return p

    def top_component(self) -> "Poly":
        """The terms of maximal total x-degree; requires a t-free polynomial."""
        if self.has_t:
            raise ValueError("top_component requires a t-free polynomial")
        if self.is_zero:
            return Poly.zero()
        top = max(sum(xe) for xe, _ in self._terms)
        return Poly({k: c for k, c in self._terms.items() if sum(k[0]) == top})

    def swap_x(self, i: int, j: int) -> "Poly":
        """Exchange the variables x_i and x_j."""
        out: dict[Key, int] = {}
        for (xe, te), c in self._terms.items():
            width = max(len(xe), i, j)
            exps = list(xe) + [0] * (width - len(xe))
            exps[i - 1], exps[j - 1] = exps[j - 1], exps[i - 1]
            k = (_strip(exps), te)
            out[k] = out.get(k, 0) + c
        return Poly(out)

    # -- text / JSON --------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key in sorted(self._terms, key=_display_key):
            xe, te = key
            c = self._terms[key]
            factors = [f"t{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(te) if e]
            factors += [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(xe) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append((c < 0, body))
        first_neg, first_body = pieces[0]
        out = ("-" if first_neg else "") + first_body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json_terms(self, m: int | None = None, L: int | None = None) -> list[dict]:
        """Canonically ordered term list; exponent vectors padded to m / L."""
        m = self.num_x if m is None else m
        L = self.num_t if L is None else L
        if m < self.num_x or L < self.num_t:
            raise ValueError("requested widths are narrower than the polynomial")
        out = []
        for (xe, te), c in self.terms():
            out.append({
                "c": str(c),
                "x": list(xe) + [0] * (m - len(xe)),
                "t": list(te) + [0] * (L - len(te)),
            })
        return out

    def to_json(self, m: int | None = None, L: int | None = None) -> str:
        return json.dumps(self.to_json_terms(m, L), separators=(",", ":"))

    @staticmethod
    def from_json_terms(terms: list[dict]) -> "Poly":
        out: dict[Key, int] = {}
        for term in terms:
            k = (_strip(term["x"]), _strip(term["t"]))
            out[k] = out.get(k, 0) + int(term["c"])
        return Poly(out)

    @staticmethod
    def from_json(text: str) -> "Poly":
        return Poly.from_json_terms(json.loads(text))

    _FACTOR_RE = re.compile(r"^([xt])(\d+)(?:\^(\d+))?$")

    @staticmethod
    def parse(text: str) -> "Poly":
        """Parse the human-readable form, e.g. ``"t1*x1 + 3*x2^2 - 5"``."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        if text == "0":
            return Poly.zero()
        chunks = re.split(r"(?=[+-])", text.replace(" ", ""))
        result = Poly.zero()
        for chunk in chunks:
            if not chunk:
                continue
            sign = 1
            while chunk and chunk[0] in "+-":
                if chunk[0] == "-":
                    sign = -sign
                chunk = chunk[1:]
            if not chunk:
                raise ValueError(f"dangling sign in polynomial text: {text!r}")
            coeff = sign
            xe: dict[int, int] = {}
            te: dict[int, int] = {}
            for factor in chunk.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                match = Poly._FACTOR_RE.match(factor)
                if not match:
                    raise ValueError(f"bad factor {factor!r} in polynomial text")
                family, idx, exp = match.group(1), int(match.group(2)), int(match.group(3) or 1)
                target = xe if family == "x" else te
                target[idx] = target.get(idx, 0) + exp
            def vec(d: dict[int, int]) -> Exps:
                if not d:
                    return ()
                width = max(d)
                return _strip(d.get(i, 0) for i in range(1, width + 1))
            result = result + Poly.monomial(coeff, vec(xe), vec(te))
        return result

    # -- leading-term machinery ----------------------------------------
    def leading(self) -> tuple[Key, int]:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        k = min(self._terms, key=_canonical_key)
        return k, self._terms[k]


def specialize_t_one(p: Poly) -> Poly:
    return p.set_t_to_one()


def top_component(p: Poly) -> Poly:
    return p.top_component()


def exact_divide(num: Poly, den: Poly) -> Poly:
    """The exact quotient num / den; raises ExactDivisionError otherwise."""
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return Poly.zero()
    (dxe, dte), dc = den.leading()
    quotient: dict[Key, int] = {}
    rem = num
    while not rem.is_zero:
        (rxe, rte), rc = rem.leading()
        qx = _sub_exps(rxe, dxe)
        qt = _sub_exps(rte, dte)
        if qx is None or qt is None or rc % dc != 0:
            raise ExactDivisionError("nonzero remainder in exact division")
        qc = rc // dc
        quotient[(qx, qt)] = quotient.get((qx, qt), 0) + qc
        rem = rem - Poly.monomial(qc, qx, qt) * den
    return Poly(quotient)
