"""Exact integer polynomial arithmetic and the delta-basis transforms.

Univariate polynomials of degree <= d are dense coefficient tuples of
length d+1, index k = coefficient of x^k (trailing zeros allowed).
Multivariate polynomials of multidegree <= a are sparse dicts mapping
exponent tuples b (componentwise b <= a) to integer coefficients.

Besides the monomial basis, both spaces carry a second basis in which the
Dehn-Sommerville identities are diagonal:

    univariate:    delta_i = (x+1)^i * x^(d-i),        0 <= i <= d
    multivariate:  delta_b = x^b * (x+1)^(a-b),        b <= a

Note the index conventions differ on purpose (they match how the two bases
are enumerated in the change-of-basis formulas): the univariate index is
the power of (x+1), the multivariate index is the power of x.

All arithmetic uses Python's arbitrary-precision integers, so results are
exact at any size.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, ValidationError

ExponentVec = tuple[int, ...]


class IntPoly:
    """Dense exact-integer univariate polynomial with an explicit degree bound.

    Equality compares polynomial values (padding with trailing zeros is
    irrelevant); the degree bound only fixes the storage length.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int], degree_bound: int | None = None):
        cs = tuple(int(c) for c in coeffs)
        if degree_bound is not None:
            if degree_bound < 0:
                raise ValidationError("degree bound must be >= 0")
            if len(cs) > degree_bound + 1:
                raise ValidationError(
                    f"{len(cs)} coefficients exceed degree bound {degree_bound}"
                )
            cs = cs + (0,) * (degree_bound + 1 - len(cs))
        elif not cs:
            cs = (0,)
        self.coeffs = cs

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def padded(self, degree_bound: int) -> IntPoly:
        """Same polynomial stored with a (weakly) larger degree bound."""
        if degree_bound < self.degree:
            raise ValidationError("cannot shrink below the actual degree")
        return IntPoly(self.coeffs[: self.degree + 1], degree_bound)

    def _stripped(self) -> tuple[int, ...]:
        return self.coeffs[: self.degree + 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._stripped() == other._stripped()

    def __hash__(self) -> int:
        return hash(self._stripped())

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def scaled(self, c: int) -> IntPoly:
        return IntPoly([c * ck for ck in self.coeffs])

    def __mul__(self, other: IntPoly) -> IntPoly:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPoly(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflected(self) -> IntPoly:
        """p(-x)."""
        return IntPoly([(-1) ** k * c for k, c in enumerate(self.coeffs)])

    def shifted(self, c: int) -> IntPoly:
        """p(x+c), expanded by the binomial theorem."""
        n = len(self.coeffs)
        out = [0] * n
        for j, pj in enumerate(self.coeffs):
            if pj:
                for k in range(j + 1):
                    out[k] += pj * comb(j, k) * c ** (j - k)
        return IntPoly(out, self.degree_bound)

    @staticmethod
    def monomial(k: int, c: int = 1, degree_bound: int | None = None) -> IntPoly:
        return IntPoly([0] * k + [c], degree_bound)

    def __repr__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(f"{c:+d}")
            else:
                x = "x" if k == 1 else f"x^{k}"
                if c == 1:
                    terms.append(f"+{x}")
                elif c == -1:
                    terms.append(f"-{x}")
                else:
                    terms.append(f"{c:+d}{x}")
        body = "".join(terms).lstrip("+") or "0"
        return f"IntPoly({body}, d={self.degree_bound})"


class DeltaCoeffs:
    """Coefficients on the univariate delta basis (x+1)^i x^(d-i), 0 <= i <= d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValidationError("delta coefficients need degree bound >= 0")
        self.coeffs = cs

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DeltaCoeffs):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DeltaCoeffs({list(self.coeffs)})"


def delta_expand(c: DeltaCoeffs) -> IntPoly:
    """Expand sum_i c_i (x+1)^i x^(d-i) into the monomial basis."""
    d = c.degree_bound
    out = [0] * (d + 1)
    for i, ci in enumerate(c.coeffs):
        if ci:
            # (x+1)^i x^(d-i): coefficient of x^k is C(i, k-(d-i))
            for k in range(d - i, d + 1):
                out[k] += ci * comb(i, k - (d - i))
    return IntPoly(out, d)


def monomial_to_delta(p: IntPoly) -> DeltaCoeffs:
    """Write p on the delta basis: x^k = sum_i (-1)^(d-k-i) C(d-k,i) (x+1)^i x^(d-i)."""
    d = p.degree_bound
    out = [0] * (d + 1)
    for k, pk in enumerate(p.coeffs):
        if pk:
            for i in range(d - k + 1):
                out[i] += pk * (-1) ** (d - k - i) * comb(d - k, i)
    return DeltaCoeffs(out)


def mcomb(u: ExponentVec, v: ExponentVec) -> int:
    """Multi-binomial prod_i C(u_i, v_i); zero when some v_i > u_i or v_i < 0."""
    acc = 1
    for ui, vi in zip(u, v):
        if vi < 0 or vi > ui:
            return 0
        acc *= comb(ui, vi)
    return acc


def exponents_below(a: ExponentVec) -> Iterator[ExponentVec]:
    """All exponent vectors b with 0 <= b <= a componentwise, lexicographic."""
    return product(*(range(ai + 1) for ai in a))


def _vec_add(u: ExponentVec, v: ExponentVec) -> ExponentVec:
    return tuple(x + y for x, y in zip(u, v))


def _vec_sub(u: ExponentVec, v: ExponentVec) -> ExponentVec:
    return tuple(x - y for x, y in zip(u, v))


def _vec_leq(u: ExponentVec, v: ExponentVec) -> bool:
    return all(x <= y for x, y in zip(u, v))


class MPoly:
    """Sparse exact-integer multivariate polynomial with multidegree bound a."""

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: Mapping[ExponentVec, int], bound: ExponentVec):
        bound = tuple(int(x) for x in bound)
        if any(x < 0 for x in bound):
            raise ValidationError("multidegree bound must be componentwise >= 0")
        clean: dict[ExponentVec, int] = {}
        for b, cb in coeffs.items():
            b = tuple(int(x) for x in b)
            if len(b) != len(bound) or any(x < 0 for x in b) or not _vec_leq(b, bound):
                raise DomainError(f"exponent {b} outside bound {bound}")
            if cb:
                clean[b] = int(cb)
        self.coeffs = clean
        self.bound = bound

    def coeff(self, b: ExponentVec) -> int:
        return self.coeffs.get(tuple(b), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def _joint_bound(self, other: MPoly) -> ExponentVec:
        if len(self.bound) != len(other.bound):
            raise DomainError(
                f"variable count mismatch: {len(self.bound)} vs {len(other.bound)}"
            )
        return tuple(max(x, y) for x, y in zip(self.bound, other.bound))

    def __add__(self, other: MPoly) -> MPoly:
        bound = self._joint_bound(other)
        out = dict(self.coeffs)
        for b, cb in other.coeffs.items():
            out[b] = out.get(b, 0) + cb
        return MPoly(out, bound)

    def __sub__(self, other: MPoly) -> MPoly:
        bound = self._joint_bound(other)
        out = dict(self.coeffs)
        for b, cb in other.coeffs.items():
            out[b] = out.get(b, 0) - cb
        return MPoly(out, bound)

    def scaled(self, c: int) -> MPoly:
        return MPoly({b: c * cb for b, cb in self.coeffs.items()}, self.bound)

    def specialized(self) -> IntPoly:
        """Substitute x_i -> x for all i, collapsing to total degree."""
        out = [0] * (sum(self.bound) + 1)
        for b, cb in self.coeffs.items():
            out[sum(b)] += cb
        return IntPoly(out)

    def items_sorted(self) -> list[tuple[ExponentVec, int]]:
        return sorted(self.coeffs.items())

    def __repr__(self) -> str:
        return f"MPoly({dict(self.items_sorted())}, bound={self.bound})"


class MDeltaCoeffs:
    """Coefficients on the multivariate delta basis x^b (x+1)^(a-b), b <= a."""

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: Mapping[ExponentVec, int], bound: ExponentVec):
        bound = tuple(int(x) for x in bound)
        clean: dict[ExponentVec, int] = {}
        for b, cb in coeffs.items():
            b = tuple(int(x) for x in b)
            if len(b) != len(bound) or any(x < 0 for x in b) or not _vec_leq(b, bound):
                raise DomainError(f"delta key {b} outside bound {bound}")
            if cb:
                clean[b] = int(cb)
        self.coeffs = clean
        self.bound = bound

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MDeltaCoeffs):
            return NotImplemented
        return self.coeffs == other.coeffs and self.bound == other.bound

    def __repr__(self) -> str:
        return f"MDeltaCoeffs({dict(sorted(self.coeffs.items()))}, bound={self.bound})"


def mdelta_expand(c: MDeltaCoeffs) -> MPoly:
    """Expand sum_b c_b x^b (x+1)^(a-b) into the monomial basis."""
    a = c.bound
    out: dict[ExponentVec, int] = {}
    for b, cb in c.coeffs.items():
        if not cb:
            continue
        rest = _vec_sub(a, b)
        # x^b (x+1)^(a-b): monomial x^e for b <= e <= a, coefficient mcomb(a-b, e-b)
        for extra in exponents_below(rest):
            e = _vec_add(b, extra)
            out[e] = out.get(e, 0) + cb * mcomb(rest, extra)
    return MPoly(out, a)


def mmonomial_to_delta(p: MPoly) -> MDeltaCoeffs:
    """Write p on the multivariate delta basis.

    A single monomial x^b expands as
    sum over b <= b' <= a of (-1)^(|b'|-|b|) C(a-b, a-b') x^b' (x+1)^(a-b').
    """
    a = p.bound
    out: dict[ExponentVec, int] = {}
    for b, pb in p.coeffs.items():
        if not pb:
            continue
        rest = _vec_sub(a, b)
        for extra in exponents_below(rest):
            bp = _vec_add(b, extra)
            sign = -1 if sum(extra) % 2 else 1
            out[bp] = out.get(bp, 0) + pb * sign * mcomb(rest, _vec_sub(a, bp))
    return MDeltaCoeffs(out, a)
