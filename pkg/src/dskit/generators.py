"""Deterministic construction of the example complexes and seeded random ones.

Families:

    simplex-boundary d          boundary of the d-simplex (a (d-1)-sphere)
    cross-polytope-boundary d   boundary of the d-cross-polytope; vertices
                                2i-1, 2i are antipodal and share color i
    cylinder                    6-vertex triangulated annulus (manifold
                                with boundary)
    subdivided-triangle         triangle split into 3 by a center vertex
    glued-triangles k           k triangles sharing the edge {1,2}
    glued-tetrahedra k          k tetrahedra sharing the edge {1,2}
    double-banana               two octahedron boundaries glued along an
                                antipodal vertex pair
    double-banana-minus-triangle  the above minus the facet {2,4,6}
    barycentric-subdivision     of a given complex; new vertices are the
                                old non-empty faces, colored by cardinality
    random seed n density       seeded facets of mixed sizes (non-pure)

random() only consumes Random.random()/randrange(), so a fixed seed gives
bit-identical output across runs and interpreter versions.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence

from .balanced import Coloring, validate_balanced
from .complexes import Complex
from .errors import ValidationError


class Generated(NamedTuple):
    complex: Complex
    coloring: Coloring | None


def simplex_boundary(d: int) -> Generated:
    """Boundary of the d-simplex: all d-subsets of {1..d+1}."""
    if d < 1:
        raise ValidationError("simplex-boundary needs d >= 1")
    verts = list(range(1, d + 2))
    facets = [verts[:i] + verts[i + 1 :] for i in range(d + 1)]
    return Generated(Complex.from_facets(facets), None)


def cross_polytope_boundary(d: int) -> Generated:
    """Boundary of the d-cross-polytope with its canonical coloring.

    Vertices 2i-1 and 2i form the antipodal pair of color i; every facet
    picks one vertex from each pair, so the type is (1,...,1).
    """
    if d < 1:
        raise ValidationError("cross-polytope-boundary needs d >= 1")
    facets = []
    for choice in range(1 << d):
        facets.append(
            [2 * i + 1 + ((choice >> i) & 1) for i in range(d)]
        )
    cx = Complex.from_facets(facets)
    kappa = {2 * i + 1 + j: i + 1 for i in range(d) for j in (0, 1)}
    return Generated(cx, validate_balanced(cx, kappa))


CYLINDER_FACETS = ((1, 2, 4), (2, 4, 5), (2, 3, 5), (3, 5, 6), (1, 3, 6), (1, 4, 6))


def cylinder() -> Generated:
    """Triangulated annulus on 6 vertices: inner rim {1,2,3}, outer {4,5,6}."""
    return Generated(Complex.from_facets(CYLINDER_FACETS), None)


def subdivided_triangle() -> Generated:
    """Triangle {1,2,3} subdivided by the center vertex 4."""
    return Generated(Complex.from_facets([(1, 2, 4), (1, 3, 4), (2, 3, 4)]), None)


def glued_triangles(k: int = 3) -> Generated:
    """k triangles glued along the common edge {1,2}."""
    if k < 2:
        raise ValidationError("glued-triangles needs k >= 2")
    return Generated(Complex.from_facets([(1, 2, 2 + i) for i in range(1, k + 1)]), None)


def glued_tetrahedra(k: int = 3) -> Generated:
    """k tetrahedra glued along the common edge {1,2}."""
    if k < 2:
        raise ValidationError("glued-tetrahedra needs k >= 2")
    facets = [(1, 2, 2 * i + 1, 2 * i + 2) for i in range(1, k + 1)]
    return Generated(Complex.from_facets(facets), None)


def _double_banana_facets() -> list[tuple[int, ...]]:
    first = cross_polytope_boundary(3)
    # second copy on 7..12 glued along its antipodal pair (7,8) -> (1,2);
    # remaining vertices relabel downward: 9,10,11,12 -> 7,8,9,10
    relabel = {7: 1, 8: 2, 9: 7, 10: 8, 11: 9, 12: 10}
    facets = list(first.complex.facets)
    for facet in first.complex.facets:
        facets.append(tuple(sorted(relabel[v + 6] for v in facet)))
    return facets


def _double_banana_coloring() -> dict[int, int]:
    # copy-1 pairs (1,2),(3,4),(5,6) colored 1,2,3; copy-2 pairs after
    # relabelling are (1,2),(7,8),(9,10), inheriting colors 1,2,3
    kappa = {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3}
    kappa.update({7: 2, 8: 2, 9: 3, 10: 3})
    return kappa


def double_banana() -> Generated:
    """Two octahedron boundaries glued along one antipodal vertex pair."""
    cx = Complex.from_facets(_double_banana_facets())
    return Generated(cx, validate_balanced(cx, _double_banana_coloring()))


def double_banana_minus_triangle() -> Generated:
    """Double banana with the facet {2,4,6} removed (reciprocal, has boundary)."""
    facets = [f for f in _double_banana_facets() if f != (2, 4, 6)]
    cx = Complex.from_facets(facets)
    return Generated(cx, validate_balanced(cx, _double_banana_coloring()))


def barycentric_subdivision(cx: Complex) -> Generated:
    """Barycentric subdivision: vertices are old faces, facets are chains.

    New vertex ids follow cardinality-then-mask order of the old faces.
    When the input is pure the cardinality coloring makes the result
    completely balanced of type (1,...,1); for non-pure input the complex
    is returned uncolored.
    """
    old_faces = [m for group in cx.masks_by_card[1:] for m in group]
    if not old_faces:
        return Generated(Complex.from_facets([]), None)
    vid = {m: i + 1 for i, m in enumerate(old_faces)}
    facets = []

    def chains(prefix: list[int], current: int, facet_mask: int):
        if current == facet_mask:
            facets.append(tuple(prefix))
            return
        rest = facet_mask & ~current
        while rest:
            bit = rest & -rest
            nxt = current | bit
            prefix.append(vid[nxt])
            chains(prefix, nxt, facet_mask)
            prefix.pop()
            rest ^= bit
    for g in cx.facet_masks:
        chains([], 0, g)
    sd = Complex.from_facets(facets)
    if not cx.is_pure():
        return Generated(sd, None)
    kappa = {vid[m]: m.bit_count() for m in old_faces}
    return Generated(sd, validate_balanced(sd, kappa, a=(1,) * cx.d))


def random_complex(seed: int, n: int, density: float) -> Generated:
    """Seeded random complex with facets of mixed sizes (often non-pure)."""
    if n < 1:
        raise ValidationError("random needs n >= 1")
    if not 0 < density <= 1:
        raise ValidationError("density must be in (0, 1]")
    rng = random.Random(seed)
    draws = max(1, round(density * 2 * n))
    max_size = min(n, 6)
    facets = []
    for _ in range(draws):
        size = 1 + rng.randrange(max_size)
        verts: set[int] = set()
        while len(verts) < size:
            verts.add(1 + rng.randrange(n))
        facets.append(sorted(verts))
    return Generated(Complex.from_facets(facets), None)


FAMILIES = (
    "simplex-boundary",
    "cross-polytope-boundary",
    "cylinder",
    "subdivided-triangle",
    "glued-triangles",
    "glued-tetrahedra",
    "double-banana",
    "double-banana-minus-triangle",
    "barycentric-subdivision",
    "random",
)


def gen(family: str, params: Sequence[str] = (), base: Complex | None = None) -> Generated:
    """Dispatch a family by CLI name with string parameters."""

    def want(k: int) -> list[str]:
        if len(params) != k:
            raise ValidationError(
                f"family {family!r} takes {k} parameter(s), got {len(params)}"
            )
        return list(params)

    def as_int(tok: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise ValidationError(f"expected integer parameter, got {tok!r}")

    if family == "simplex-boundary":
        return simplex_boundary(as_int(want(1)[0]))
    if family == "cross-polytope-boundary":
        return cross_polytope_boundary(as_int(want(1)[0]))
    if family == "cylinder":
        want(0)
        return cylinder()
    if family == "subdivided-triangle":
        want(0)
        return subdivided_triangle()
    if family == "glued-triangles":
        return glued_triangles(as_int(params[0]) if params else 3)
    if family == "glued-tetrahedra":
        return glued_tetrahedra(as_int(params[0]) if params else 3)
    if family == "double-banana":
        want(0)
        return double_banana()
    if family == "double-banana-minus-triangle":
        want(0)
        return double_banana_minus_triangle()
    if family == "barycentric-subdivision":
        if base is None:
            raise ValidationError("barycentric-subdivision needs an input complex")
        want(0)
        return barycentric_subdivision(base)
    if family == "random":
        p = want(3)
        try:
            density = float(p[2])
        except ValueError:
            raise ValidationError(f"expected float density, got {p[2]!r}")
        return random_complex(as_int(p[0]), as_int(p[1]), density)
    raise ValidationError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
