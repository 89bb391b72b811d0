"""Face-count invariants: f/h vectors, Euler characteristics, multiplicities.

Vectors are plain int tuples: an f-vector is (f_-1, f_0, ..., f_{d-1})
with f_-1 = 1 for the empty face; an h-vector is (h_0, ..., h_d). The
multiplicity of a face F is

    m_F = sum over faces G >= F of (-1)^(d-|G|)
        = (-1)^(d-1-|F|) * chi_reduced(link(F)),

and the error of a face is eps_F = chi_reduced(link(F)) - (-1)^(d-1-|F|)
= (-1)^(d-1-|F|) (m_F - 1). Both quantities come with two independent
computation routes, kept deliberately distinct for differential testing.
"""

from __future__ import annotations

from math import comb
from typing import Iterable

from .complexes import Complex, FaceTuple, face_mask, mask_vertices
from .errors import DomainError, PreconditionError, ValidationError
from .poly import IntPoly

FVector = tuple[int, ...]
HVector = tuple[int, ...]


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def f_vector(cx: Complex) -> FVector:
    """(f_-1, f_0, ..., f_{d-1}): face counts by cardinality."""
    return tuple(len(g) for g in cx.masks_by_card)


def check_f_vector(f: Iterable[int]) -> FVector:
    f = tuple(int(x) for x in f)
    if not f or f[0] != 1:
        raise ValidationError("f-vector must start with f_-1 = 1")
    if f[-1] < 1 and len(f) > 1:
        raise ValidationError("top face count must be >= 1")
    return f


def h_vector(f: Iterable[int]) -> HVector:
    """h-vector from an f-vector: coefficients of sum_i f_{i-1} x^i (1-x)^(d-i)."""
    f = check_f_vector(f)
    d = len(f) - 1
    return tuple(
        sum(_sign(k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def h_to_f(h: Iterable[int]) -> FVector:
    """Inverse transform, from f(x) = h(x+1) on the reversed polynomials."""
    h = tuple(int(x) for x in h)
    d = len(h) - 1
    return tuple(
        sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1)
    )


def f_tilde(f: Iterable[int]) -> IntPoly:
    """Generating polynomial sum_i f_{i-1} x^i (ascending coefficients)."""
    f = tuple(f)
    return IntPoly(f, len(f) - 1)


def h_tilde(h: Iterable[int]) -> IntPoly:
    h = tuple(h)
    return IntPoly(h, len(h) - 1)


def euler_from_f(f: Iterable[int]) -> int:
    """chi = f_0 - f_1 + f_2 - ... (empty face excluded)."""
    f = tuple(f)
    return sum(_sign(i - 1) * f[i] for i in range(1, len(f)))


def reduced_euler_from_f(f: Iterable[int]) -> int:
    """chi_reduced = chi - 1 (the empty face contributes -1)."""
    return euler_from_f(f) - 1


def euler(cx: Complex) -> int:
    return euler_from_f(f_vector(cx))


def reduced_euler(cx: Complex) -> int:
    return reduced_euler_from_f(f_vector(cx))


def _reduced_euler_masks(faces: Iterable[int]) -> int:
    acc = 0
    for m in faces:
        acc += _sign(m.bit_count() - 1)
    return acc


def multiplicity(cx: Complex, face: Iterable[int], method: str = "superset-sum") -> int:
    """m_F by one of the two defining formulas.

    method 'superset-sum': sum of (-1)^(d-|G|) over faces G containing F.
    method 'link-euler':   (-1)^(d-1-|F|) * chi_reduced(link(F)).
    """
    fmask = face_mask(face)
    if fmask not in cx.face_set:
        raise DomainError(f"face {mask_vertices(fmask)} is not in the complex")
    d = cx.d
    if method == "superset-sum":
        return sum(
            _sign(d - g.bit_count()) for g in cx.face_set if g & fmask == fmask
        )
    if method == "link-euler":
        link = cx.link_mask(fmask)
        chi_r = _reduced_euler_masks(link.face_set)
        return _sign(d - 1 - fmask.bit_count()) * chi_r
    raise ValidationError(f"unknown method {method!r}")


class MultiplicityTable:
    """Multiplicities m_F for every face of a complex, keyed by face mask."""

    __slots__ = ("complex", "by_mask")

    def __init__(self, cx: Complex, by_mask: dict[int, int]):
        self.complex = cx
        self.by_mask = by_mask

    @property
    def d(self) -> int:
        return self.complex.d

    @property
    def m_empty(self) -> int:
        return self.by_mask[0]

    def m(self, face: Iterable[int]) -> int:
        fmask = face_mask(face)
        if fmask not in self.by_mask:
            raise DomainError(f"face {mask_vertices(fmask)} is not in the complex")
        return self.by_mask[fmask]

    def items(self) -> list[tuple[FaceTuple, int]]:
        """(face, m) pairs ordered by cardinality then mask."""
        out = []
        for group in self.complex.masks_by_card:
            for mask in group:
                out.append((mask_vertices(mask), self.by_mask[mask]))
        return out

    def poly(self) -> IntPoly:
        """sum over faces of m_F x^|F|, degree bound d."""
        out = [0] * (self.d + 1)
        for mask, m in self.by_mask.items():
            out[mask.bit_count()] += m
        return IntPoly(out, self.d)

    def epsilon_mask(self, fmask: int) -> int:
        return _sign(self.d - 1 - fmask.bit_count()) * (self.by_mask[fmask] - 1)

    def epsilon_sums_by_card(self) -> list[int]:
        """sum of eps_F over faces of each cardinality, index = |F|."""
        out = [0] * (self.d + 1)
        for mask, m in self.by_mask.items():
            c = mask.bit_count()
            out[c] += _sign(self.d - 1 - c) * (m - 1)
        return out

    def reciprocity_witness(self) -> FaceTuple | None:
        """A non-empty face with m_F not in {0,1}, or None if reciprocal."""
        for group in self.complex.masks_by_card[1:]:
            for mask in group:
                if self.by_mask[mask] not in (0, 1):
                    return mask_vertices(mask)
        return None

    def semi_eulerian_witness(self) -> FaceTuple | None:
        """A non-empty face with m_F != 1, or None if semi-Eulerian."""
        for group in self.complex.masks_by_card[1:]:
            for mask in group:
                if self.by_mask[mask] != 1:
                    return mask_vertices(mask)
        return None

    def is_reciprocal(self) -> bool:
        return self.reciprocity_witness() is None

    def is_semi_eulerian(self) -> bool:
        return self.semi_eulerian_witness() is None

    def is_eulerian(self) -> bool:
        return self.is_semi_eulerian() and self.m_empty == 1


def multiplicities(cx: Complex) -> MultiplicityTable:
    """All m_F by one descending superset sweep over the face lattice.

    Each face G contributes (-1)^(d-|G|) to every subset of G; cost is
    sum over G of 2^|G|, with no link construction.
    """
    d = cx.d
    table = {m: 0 for m in cx.face_set}
    for g in cx.face_set:
        s = _sign(d - g.bit_count())
        sub = g
        while True:
            table[sub] += s
            if sub == 0:
                break
            sub = (sub - 1) & g
    return MultiplicityTable(cx, table)


def epsilon(cx: Complex, face: Iterable[int], method: str = "link-euler") -> int:
    """Error eps_F of a face, by either defining formula.

    method 'link-euler':   chi_reduced(link(F)) - (-1)^(d-1-|F|).
    method 'multiplicity': (-1)^(d-1-|F|) * (m_F - 1).
    """
    fmask = face_mask(face)
    if fmask not in cx.face_set:
        raise DomainError(f"face {mask_vertices(fmask)} is not in the complex")
    d = cx.d
    if method == "link-euler":
        link = cx.link_mask(fmask)
        return _reduced_euler_masks(link.face_set) - _sign(d - 1 - fmask.bit_count())
    if method == "multiplicity":
        m = multiplicity(cx, mask_vertices(fmask), method="superset-sum")
        return _sign(d - 1 - fmask.bit_count()) * (m - 1)
    raise ValidationError(f"unknown method {method!r}")


def interior_f_vector(
    cx: Complex, table: MultiplicityTable | None = None
) -> tuple[int, ...]:
    """(f^int_0, ..., f^int_{d-1}): counts of non-empty faces with m_F = 1.

    Requires a reciprocal complex (every non-empty m_F in {0,1}).
    """
    if table is None:
        table = multiplicities(cx)
    witness = table.reciprocity_witness()
    if witness is not None:
        raise PreconditionError("complex is not reciprocal", witness)
    out = [0] * cx.d
    for mask, m in table.by_mask.items():
        if mask and m == 1:
            out[mask.bit_count() - 1] += 1
    return tuple(out)


def boundary_f_vector(
    cx: Complex, table: MultiplicityTable | None = None
) -> tuple[int, ...]:
    """(f^bd_-1, f^bd_0, ..., f^bd_{d-1}) with f^bd_-1 = 1 (empty face)."""
    if table is None:
        table = multiplicities(cx)
    witness = table.reciprocity_witness()
    if witness is not None:
        raise PreconditionError("complex is not reciprocal", witness)
    out = [0] * (cx.d + 1)
    out[0] = 1
    for mask, m in table.by_mask.items():
        if mask and m == 0:
            out[mask.bit_count()] += 1
    return tuple(out)
