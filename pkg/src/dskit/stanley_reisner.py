"""Hilbert-series identities for the face ring, in exact closed form.

The single-graded Hilbert series of the face ring of a complex is
h(L)/(1-L)^d; with a balanced coloring, the color-graded series is
h(w)/prod_i (1-w_i)^(a_i) with the flag h-polynomial on top. Denominators
stay symbolic (just the exponent), so every equality check clears them and
compares integer polynomials. No ring or ideal machinery is involved: the
series are computed from face counts directly.

The reciprocity route: substituting L = x/(x+1) into the series (after the
sign-twisted 1/L evaluation) lands exactly on the face-multiplicity count
sum_F m_F x^|F|, which this module cross-checks against the direct
multiplicity computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balanced import Coloring, _face_b_vectors, multiplicity_mpoly
from .complexes import Complex
from .enumeration import MultiplicityTable, f_vector, h_vector, multiplicities
from .poly import (
    DeltaCoeffs,
    ExponentVec,
    IntPoly,
    MDeltaCoeffs,
    MPoly,
    delta_expand,
    exponents_below,
    mcomb,
    mdelta_expand,
)
from .relations import RelationReport, _base_context, _report


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class RationalSeries:
    """numerator / (1-L)^e, or numerator / prod (1-w_i)^(e_i) when graded."""

    numerator: IntPoly | MPoly
    denominator_exponent: int | ExponentVec


def _numerator_from_faces(f: tuple[int, ...]) -> IntPoly:
    """sum_i f_{i-1} L^i (1-L)^(d-i), expanded by polynomial arithmetic."""
    d = len(f) - 1
    one_minus = IntPoly([1, -1])
    acc = IntPoly([0], d)
    for i, fi in enumerate(f):
        term = IntPoly.monomial(i, fi)
        for _ in range(d - i):
            term = term * one_minus
        acc = acc + term
    return acc.padded(d)


def hilbert_series(cx: Complex) -> RationalSeries:
    """Hilbert series h(L)/(1-L)^d of the face ring.

    The h-polynomial numerator is verified against the cleared-denominator
    face-count sum before it is returned.
    """
    f = f_vector(cx)
    h = IntPoly(h_vector(f), cx.d)
    direct = _numerator_from_faces(f)
    assert h == direct, "h-vector route disagrees with face-count route"
    return RationalSeries(h, cx.d)


def hilbert_series_colored(cx: Complex, coloring: Coloring) -> RationalSeries:
    """Color-graded series: numerator sum_F w^b(F) (1-w)^(a-b(F))."""
    a = coloring.a
    out: dict[ExponentVec, int] = {}
    for _, bf in _face_b_vectors(cx, coloring):
        rest = tuple(x - y for x, y in zip(a, bf))
        for extra in exponents_below(rest):
            e = tuple(x + y for x, y in zip(bf, extra))
            out[e] = out.get(e, 0) + _sign(sum(extra)) * mcomb(rest, extra)
    return RationalSeries(MPoly(out, a), a)


def verify_sr_reciprocity(
    cx: Complex, table: MultiplicityTable | None = None
) -> RelationReport:
    """Series route of the f=h reciprocity equals the multiplicity route.

    Clearing denominators in the 1/L evaluation of the series at
    L = x/(x+1) turns the numerator n into sum_i n_i (x+1)^i x^(d-i);
    that polynomial must match sum_F m_F x^|F| coefficientwise.
    """
    if table is None:
        table = multiplicities(cx)
    series = hilbert_series(cx)
    d = cx.d
    lhs = delta_expand(DeltaCoeffs(series.numerator.coeffs))
    rhs = table.poly()
    ctx = _base_context(cx, table)
    ctx.update(
        {
            "numerator": series.numerator.coeffs,
            "denominator_exponent": series.denominator_exponent,
            "lhs": lhs.coeffs,
            "rhs": rhs.coeffs,
        }
    )
    return _report(
        "sr-reciprocity",
        [f"x^{k}" for k in range(d + 1)],
        [lhs.coeff(k) - rhs.coeff(k) for k in range(d + 1)],
        ctx,
    )


def verify_sr_reciprocity_colored(
    cx: Complex, coloring: Coloring, table: MultiplicityTable | None = None
) -> RelationReport:
    """Color-graded series route equals the multivariate multiplicity route."""
    if table is None:
        table = multiplicities(cx)
    a = coloring.a
    series = hilbert_series_colored(cx, coloring)
    n = series.numerator
    # n_b (x+1)^b x^(a-b): delta element indexed by a-b
    swapped = {
        tuple(x - y for x, y in zip(a, b)): nb for b, nb in n.coeffs.items()
    }
    lhs = mdelta_expand(MDeltaCoeffs(swapped, a))
    rhs = multiplicity_mpoly(cx, coloring, table)
    ctx = _base_context(cx, table)
    ctx.update(
        {
            "a": a,
            "numerator": n.items_sorted(),
            "lhs": lhs.items_sorted(),
            "rhs": rhs.items_sorted(),
        }
    )
    labels = ["x^(" + ",".join(str(x) for x in e) + ")" for e in exponents_below(a)]
    residuals = [lhs.coeff(e) - rhs.coeff(e) for e in exponents_below(a)]
    return _report("sr-reciprocity-colored", labels, residuals, ctx)
