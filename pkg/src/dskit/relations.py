"""Dehn-Sommerville identities verified as exact coefficientwise checks.

Every verifier compares polynomials in the monomial basis after exact
closed-form expansion (the substitutions x/(x+1) and (x+1)/x never happen
symbolically) and returns a RelationReport carrying labelled residuals
LHS_k - RHS_k, so a failing identity localizes the violated index.

The universal identities:

    fh-tilde:     sum_i h_i x^i (x+1)^(d-i)            == f_tilde(x)
    reciprocity:  sum_i h_i (x+1)^i x^(d-i)            == sum_F m_F x^|F|
    ds-h:         sum_i (h_i-h_{d-i}) (x+1)^i x^(d-i)  == sum_F (m_F-1) x^|F|
                  h_{d-i}-h_i == (-1)^i sum_F C(d-|F|,i) eps_F

hold for every complex. The f-versions (ds-f, ds-f-inverse, macdonald)
require a reciprocal complex; semi-eulerian-h requires a semi-Eulerian
one. Vector-level residual functions are exposed separately so identities
can be checked on bare (f, f_int) data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .complexes import Complex, FaceTuple
from .enumeration import (
    MultiplicityTable,
    boundary_f_vector,
    check_f_vector,
    euler_from_f,
    f_tilde,
    f_vector,
    h_vector,
    multiplicities,
    reduced_euler_from_f,
)
from .errors import PreconditionError, ValidationError
from .homology import FieldSpec, is_homology_manifold
from .poly import DeltaCoeffs, IntPoly, delta_expand


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _jsonify(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonify(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonify(x) for k, x in v.items()}
    return v


@dataclass
class RelationReport:
    """Verdict of one relation with labelled per-index residuals."""

    relation: str
    holds: bool
    labels: tuple[str, ...]
    residuals: tuple[int, ...]
    context: dict = field(default_factory=dict)
    skipped: str | None = None

    def residual(self, label: str) -> int:
        return self.residuals[self.labels.index(label)]

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "holds": self.holds,
            "skipped": self.skipped,
            "labels": list(self.labels),
            "residuals": [str(r) for r in self.residuals],
            "context": _jsonify(self.context),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RelationReport":
        return cls(
            relation=data["relation"],
            holds=bool(data["holds"]),
            labels=tuple(data["labels"]),
            residuals=tuple(int(r) for r in data["residuals"]),
            context=data.get("context", {}),
            skipped=data.get("skipped"),
        )


def _report(relation: str, labels, residuals, context) -> RelationReport:
    labels = tuple(labels)
    residuals = tuple(int(r) for r in residuals)
    assert len(labels) == len(residuals)
    return RelationReport(
        relation=relation,
        holds=all(r == 0 for r in residuals),
        labels=labels,
        residuals=residuals,
        context=context,
    )


def _skipped(relation: str, reason: str, context: dict) -> RelationReport:
    return RelationReport(
        relation=relation,
        holds=True,
        labels=(),
        residuals=(),
        context=context,
        skipped=reason,
    )


def _base_context(cx: Complex, table: MultiplicityTable) -> dict:
    return {
        "d": cx.d,
        "chi_reduced": reduced_euler_from_f(f_vector(cx)),
        "m_empty": table.m_empty,
    }


# -- classification -----------------------------------------------------


@dataclass
class Classification:
    """Complex-class flags with witness faces for each failed flag."""

    reciprocal: bool
    semi_eulerian: bool
    eulerian: bool
    homology_manifold: bool
    field: FieldSpec
    witnesses: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "reciprocal": self.reciprocal,
            "semi_eulerian": self.semi_eulerian,
            "eulerian": self.eulerian,
            "homology_manifold": self.homology_manifold,
            "field": str(self.field),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def classify(cx: Complex, fld: FieldSpec = FieldSpec(0)) -> Classification:
    """Flags {reciprocal, semi_eulerian, eulerian, homology_manifold}."""
    table = multiplicities(cx)
    witnesses: dict[str, FaceTuple] = {}
    rec_w = table.reciprocity_witness()
    if rec_w is not None:
        witnesses["reciprocal"] = rec_w
    semi_w = table.semi_eulerian_witness()
    if semi_w is not None:
        witnesses["semi_eulerian"] = semi_w
    eulerian = semi_w is None and table.m_empty == 1
    if not eulerian:
        witnesses["eulerian"] = semi_w if semi_w is not None else ()
    verdict = is_homology_manifold(cx, fld)
    if not verdict.is_manifold:
        witnesses["homology_manifold"] = verdict.witness
    return Classification(
        reciprocal=rec_w is None,
        semi_eulerian=semi_w is None,
        eulerian=eulerian,
        homology_manifold=verdict.is_manifold,
        field=fld,
        witnesses=witnesses,
    )


# -- universal polynomial identities -------------------------------------


def verify_fh_tilde(cx: Complex, table: MultiplicityTable | None = None) -> RelationReport:
    """sum_i h_i x^i (x+1)^(d-i) recovers the f-polynomial (always holds)."""
    if table is None:
        table = multiplicities(cx)
    f = f_vector(cx)
    h = h_vector(f)
    d = cx.d
    lhs = delta_expand(DeltaCoeffs(tuple(reversed(h))))  # index i of h = power of x
    rhs = f_tilde(f)
    ctx = _base_context(cx, table)
    ctx.update({"lhs": lhs.coeffs, "rhs": rhs.coeffs, "h": h})
    return _report(
        "fh-tilde",
        [f"x^{k}" for k in range(d + 1)],
        [lhs.coeff(k) - rhs.coeff(k) for k in range(d + 1)],
        ctx,
    )


def verify_reciprocity(cx: Complex, table: MultiplicityTable | None = None) -> RelationReport:
    """sum_i h_i (x+1)^i x^(d-i) counts faces with multiplicity (always holds)."""
    if table is None:
        table = multiplicities(cx)
    f = f_vector(cx)
    h = h_vector(f)
    d = cx.d
    lhs = delta_expand(DeltaCoeffs(h))
    rhs = table.poly()
    ctx = _base_context(cx, table)
    ctx.update({"lhs": lhs.coeffs, "rhs": rhs.coeffs, "h": h})
    return _report(
        "reciprocity",
        [f"x^{k}" for k in range(d + 1)],
        [lhs.coeff(k) - rhs.coeff(k) for k in range(d + 1)],
        ctx,
    )


def verify_ds_h(cx: Complex, table: MultiplicityTable | None = None) -> RelationReport:
    """h-version Dehn-Sommerville for arbitrary complexes (always holds).

    Checks the polynomial identity and all d+1 scalar error-sum relations.
    """
    if table is None:
        table = multiplicities(cx)
    f = f_vector(cx)
    h = h_vector(f)
    d = cx.d
    lhs = delta_expand(DeltaCoeffs([h[i] - h[d - i] for i in range(d + 1)]))
    rhs = table.poly() - f_tilde(f)
    labels = [f"x^{k}" for k in range(d + 1)]
    residuals = [lhs.coeff(k) - rhs.coeff(k) for k in range(d + 1)]
    eps_by_card = table.epsilon_sums_by_card()
    for i in range(d + 1):
        scalar_rhs = _sign(i) * sum(
            comb(d - c, i) * eps_by_card[c] for c in range(d + 1)
        )
        labels.append(f"i={i}")
        residuals.append((h[d - i] - h[i]) - scalar_rhs)
    ctx = _base_context(cx, table)
    ctx.update({"lhs": lhs.coeffs, "rhs": rhs.coeffs, "h": h})
    return _report("ds-h", labels, residuals, ctx)


# -- f-version identities (reciprocal complexes) -------------------------


def ds_f_residuals(
    f: Sequence[int], f_int: Sequence[int], m_empty: int
) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Residuals of f_{k-1} = sum_{i>=k} (-1)^(d-i) C(i,k) f^int_{i-1}.

    Index k=0 uses the extra (-1)^d m_empty term, and 'chi' is the
    Euler-characteristic form chi = (-1)^(d-1) chi(interior).
    """
    f = check_f_vector(f)
    d = len(f) - 1
    if len(f_int) != d:
        raise ValidationError(f"interior vector must have length d={d}")
    labels = []
    residuals = []
    for k in range(d + 1):
        rhs = sum(_sign(d - i) * comb(i, k) * f_int[i - 1] for i in range(max(k, 1), d + 1))
        if k == 0:
            rhs += _sign(d) * m_empty
        labels.append(f"k={k}")
        residuals.append(f[k] - rhs)
    chi_int = sum(_sign(i - 1) * f_int[i - 1] for i in range(1, d + 1))
    labels.append("chi")
    residuals.append(euler_from_f(f) - _sign(d - 1) * chi_int)
    return tuple(labels), tuple(residuals)


def ds_f_inverse_residuals(
    f: Sequence[int], f_int: Sequence[int]
) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Residuals of f^int_{k-1} = sum_{i>=k} (-1)^(d-i) C(i,k) f_{i-1}, k >= 1."""
    f = check_f_vector(f)
    d = len(f) - 1
    if len(f_int) != d:
        raise ValidationError(f"interior vector must have length d={d}")
    labels = []
    residuals = []
    for k in range(1, d + 1):
        rhs = sum(_sign(d - i) * comb(i, k) * f[i] for i in range(k, d + 1))
        labels.append(f"k={k}")
        residuals.append(f_int[k - 1] - rhs)
    return tuple(labels), tuple(residuals)


def _require_reciprocal(table: MultiplicityTable) -> None:
    witness = table.reciprocity_witness()
    if witness is not None:
        raise PreconditionError("complex is not reciprocal", witness)


def _interior_from_table(table: MultiplicityTable) -> tuple[int, ...]:
    out = [0] * table.d
    for mask, m in table.by_mask.items():
        if mask and m == 1:
            out[mask.bit_count() - 1] += 1
    return tuple(out)


def verify_ds_f(cx: Complex, table: MultiplicityTable | None = None) -> RelationReport:
    """f-version Dehn-Sommerville on a reciprocal complex."""
    if table is None:
        table = multiplicities(cx)
    _require_reciprocal(table)
    f = f_vector(cx)
    f_int = _interior_from_table(table)
    labels, residuals = ds_f_residuals(f, f_int, table.m_empty)
    ctx = _base_context(cx, table)
    ctx.update({"f": f, "f_int": f_int})
    return _report("ds-f", labels, residuals, ctx)


def verify_ds_f_inverse(cx: Complex, table: MultiplicityTable | None = None) -> RelationReport:
    """Interior face numbers as the same linear combinations of face numbers."""
    if table is None:
        table = multiplicities(cx)
    _require_reciprocal(table)
    f = f_vector(cx)
    f_int = _interior_from_table(table)
    labels, residuals = ds_f_inverse_residuals(f, f_int)
    ctx = _base_context(cx, table)
    ctx.update({"f": f, "f_int": f_int})
    return _report("ds-f-inverse", labels, residuals, ctx)


def verify_semi_eulerian_h(cx: Complex, table: MultiplicityTable | None = None) -> RelationReport:
    """h_{d-i} - h_i = (-1)^i C(d,i) (chi_reduced - (-1)^(d-1)) on semi-Eulerian input."""
    if table is None:
        table = multiplicities(cx)
    witness = table.semi_eulerian_witness()
    if witness is not None:
        raise PreconditionError("complex is not semi-Eulerian", witness)
    f = f_vector(cx)
    h = h_vector(f)
    d = cx.d
    chi_r = reduced_euler_from_f(f)
    gap = chi_r - _sign(d - 1)
    labels = [f"i={i}" for i in range(d + 1)]
    residuals = [(h[d - i] - h[i]) - _sign(i) * comb(d, i) * gap for i in range(d + 1)]
    ctx = _base_context(cx, table)
    ctx.update({"h": h, "eulerian": table.m_empty == 1, "palindrome": gap == 0})
    return _report("semi-eulerian-h", labels, residuals, ctx)


# -- Macdonald's relation (Appendix-style weaker form) --------------------


def macdonald_two_q(f: Sequence[int], f_boundary: Sequence[int]) -> IntPoly:
    """The doubled Macdonald polynomial 2Q(x) = 2*P(Delta,x) - P(boundary,x).

    P(.,x) alternates face counts: P = sum_k (-1)^k f_{k-1} x^k. The
    doubling keeps every coefficient integral (Q itself has halves).
    """
    f = check_f_vector(f)
    d = len(f) - 1
    fb = tuple(int(x) for x in f_boundary)
    if len(fb) != d + 1 or fb[0] != 1:
        raise ValidationError("boundary f-vector must be (1, f^bd_0, ..., f^bd_{d-1})")
    return IntPoly([_sign(k) * (2 * f[k] - fb[k]) for k in range(d + 1)], d)


def macdonald_residuals(
    f: Sequence[int], f_boundary: Sequence[int], chi_reduced: int
) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Residuals of (-1)^d Q(-x) = Q(1+x) + cte, doubled to stay integral.

    cte is 0 when d-1 is odd and chi_reduced when d-1 is even.
    """
    q2 = macdonald_two_q(f, f_boundary)
    d = q2.degree_bound
    lhs = q2.reflected().scaled(_sign(d))
    rhs = q2.shifted(1)
    cte2 = 0 if (d - 1) % 2 else 2 * chi_reduced
    labels = tuple(f"x^{k}" for k in range(d + 1))
    residuals = [lhs.coeff(k) - rhs.coeff(k) for k in range(d + 1)]
    residuals[0] -= cte2
    return labels, tuple(residuals)


def macdonald_q(cx: Complex, table: MultiplicityTable | None = None) -> IntPoly:
    """Doubled Macdonald polynomial 2Q of a reciprocal complex.

    The boundary counts are the multiplicity-zero faces (which on a
    homology manifold coincide with the homological boundary).
    """
    if table is None:
        table = multiplicities(cx)
    _require_reciprocal(table)
    return macdonald_two_q(f_vector(cx), boundary_f_vector(cx, table))


def verify_macdonald(
    cx: Complex,
    table: MultiplicityTable | None = None,
    boundary_f: Sequence[int] | None = None,
) -> RelationReport:
    """Macdonald's polynomial relation on a reciprocal complex.

    boundary_f overrides the multiplicity-derived boundary counts (used to
    probe alternative solutions of the relation). Residuals are doubled.
    The context records whether the full f-version Dehn-Sommerville holds
    for the implied interior counts; the polynomial relation is strictly
    weaker, so ds-f holding forces this relation to hold as well.
    """
    if table is None:
        table = multiplicities(cx)
    _require_reciprocal(table)
    f = f_vector(cx)
    fb = tuple(boundary_f) if boundary_f is not None else boundary_f_vector(cx, table)
    chi_r = reduced_euler_from_f(f)
    labels, residuals = macdonald_residuals(f, fb, chi_r)
    implied_int = tuple(f[k] - fb[k] for k in range(1, len(f)))
    _, ds_res = ds_f_residuals(f, implied_int, table.m_empty)
    ctx = _base_context(cx, table)
    ctx.update(
        {
            "f": f,
            "f_boundary": fb,
            "implied_f_int": implied_int,
            "ds_f_holds": all(r == 0 for r in ds_res),
            "residuals_doubled": True,
        }
    )
    return _report("macdonald", labels, residuals, ctx)


# -- batch driver ---------------------------------------------------------

RELATION_NAMES = (
    "fh-tilde",
    "reciprocity",
    "ds-f",
    "ds-f-inverse",
    "ds-h",
    "semi-eulerian-h",
    "macdonald",
)


def verify_relation(cx: Complex, name: str, table: MultiplicityTable | None = None) -> RelationReport:
    """Dispatch a single relation by CLI name."""
    if table is None:
        table = multiplicities(cx)
    dispatch = {
        "fh-tilde": verify_fh_tilde,
        "reciprocity": verify_reciprocity,
        "ds-f": verify_ds_f,
        "ds-f-inverse": verify_ds_f_inverse,
        "ds-h": verify_ds_h,
        "semi-eulerian-h": verify_semi_eulerian_h,
        "macdonald": verify_macdonald,
    }
    if name not in dispatch:
        raise ValidationError(f"unknown relation {name!r}")
    return dispatch[name](cx, table)


def verify_all(cx: Complex) -> list[RelationReport]:
    """Run every relation, skipping those whose precondition fails."""
    table = multiplicities(cx)
    reports = []
    for name in RELATION_NAMES:
        try:
            reports.append(verify_relation(cx, name, table))
        except PreconditionError as exc:
            ctx = _base_context(cx, table)
            if exc.witness is not None:
                ctx["witness"] = list(exc.witness)
            reports.append(_skipped(name, str(exc), ctx))
    return reports
