"""Shared fixtures: independent brute-force oracles and test corpora.

The oracles deliberately avoid the library's code paths: polynomials are
bare coefficient lists multiplied term by term, complexes are sets of
frozensets closed by explicit subset enumeration, and matrix ranks use
Fraction Gaussian elimination (the library uses bitmasks, binomial closed
forms and Bareiss elimination).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from dskit import generators
from dskit.complexes import Complex

# -- polynomial oracle (plain coefficient lists) --------------------------


def opoly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def opoly_add(a, b):
    n = max(len(a), len(b))
    return opoly_trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def opoly_scale(a, c):
    return opoly_trim([c * x for x in a])


def opoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1 or 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return opoly_trim(out)


def opoly_pow(a, k):
    out = [1]
    for _ in range(k):
        out = opoly_mul(out, a)
    return out


def opoly_eq(a, b):
    return opoly_trim(list(a)) == opoly_trim(list(b))


def odelta_expand(coeffs):
    """sum_i c_i (x+1)^i x^(d-i) by repeated multiplication."""
    d = len(coeffs) - 1
    acc = [0]
    for i, c in enumerate(coeffs):
        term = opoly_mul(opoly_pow([1, 1], i), opoly_pow([0, 1], d - i))
        acc = opoly_add(acc, opoly_scale(term, c))
    return acc


# -- multivariate oracle (dicts of exponent tuples) ------------------------


def ompoly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def ompoly_scale(a, c):
    return {e: c * x for e, x in a.items() if c * x}


def ompoly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def ompoly_pow(a, k, nvars):
    out = {(0,) * nvars: 1}
    for _ in range(k):
        out = ompoly_mul(out, a)
    return out


def omvar(i, nvars):
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): 1}


def omdelta_element(b, a):
    """x^b (x+1)^(a-b) by repeated multiplication."""
    m = len(a)
    acc = {(0,) * m: 1}
    for i in range(m):
        acc = ompoly_mul(acc, ompoly_pow(omvar(i, m), b[i], m))
        xp1 = ompoly_add(omvar(i, m), {(0,) * m: 1})
        acc = ompoly_mul(acc, ompoly_pow(xp1, a[i] - b[i], m))
    return acc


# -- complex oracle (sets of frozensets) -----------------------------------


def oclosure(facets):
    faces = {frozenset()}
    for f in facets:
        f = frozenset(f)
        for k in range(len(f) + 1):
            faces.update(frozenset(c) for c in combinations(sorted(f), k))
    return faces


def olink(faces, f):
    f = frozenset(f)
    return {g for g in faces if not (g & f) and (g | f) in faces}


def ochi_reduced(faces):
    return sum((-1) ** (len(g) - 1) for g in faces)


def om_f(faces, f, d):
    """Multiplicity by the raw superset-sum definition."""
    f = frozenset(f)
    return sum((-1) ** (d - len(g)) for g in faces if f <= g)


def ofaces_of(cx: Complex):
    return {frozenset(face) for face in cx.faces()}


# -- homology oracle (Fraction Gaussian elimination) ------------------------


def orank(rows):
    if not rows or not rows[0]:
        return 0
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / lead[col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], lead)]
        rank += 1
    return rank


def obetti(faces):
    """Reduced Betti numbers over Q as a dict dim -> beta, from frozensets."""
    bycard: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        bycard.setdefault(len(f), []).append(tuple(sorted(f)))
    for group in bycard.values():
        group.sort()
    maxc = max(bycard)
    ranks = {}
    for c in range(1, maxc + 1):
        src = bycard.get(c, [])
        tgt = bycard.get(c - 1, [])
        idx = {t: i for i, t in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, s in enumerate(src):
            for pos in range(len(s)):
                sub = s[:pos] + s[pos + 1 :]
                rows[idx[sub]][j] = (-1) ** pos
        ranks[c] = orank(rows)
    return {
        c - 1: len(bycard.get(c, [])) - ranks.get(c, 0) - ranks.get(c + 1, 0)
        for c in range(0, maxc + 1)
    }


# -- corpora ---------------------------------------------------------------


def purify(cx: Complex) -> Complex:
    """Keep only the top-cardinality facets (a pure complex)."""
    top = max(len(f) for f in cx.facets)
    return Complex.from_facets([f for f in cx.facets if len(f) == top])


def named_suite():
    """Every generator family at desk scale: (name, Generated) pairs."""
    out = [
        ("simplex-boundary-2", generators.simplex_boundary(2)),
        ("simplex-boundary-3", generators.simplex_boundary(3)),
        ("simplex-boundary-4", generators.simplex_boundary(4)),
        ("cross-polytope-boundary-1", generators.cross_polytope_boundary(1)),
        ("cross-polytope-boundary-2", generators.cross_polytope_boundary(2)),
        ("cross-polytope-boundary-3", generators.cross_polytope_boundary(3)),
        ("cross-polytope-boundary-4", generators.cross_polytope_boundary(4)),
        ("cylinder", generators.cylinder()),
        ("subdivided-triangle", generators.subdivided_triangle()),
        ("glued-triangles-2", generators.glued_triangles(2)),
        ("glued-triangles-3", generators.glued_triangles(3)),
        ("glued-triangles-4", generators.glued_triangles(4)),
        ("glued-tetrahedra-2", generators.glued_tetrahedra(2)),
        ("glued-tetrahedra-3", generators.glued_tetrahedra(3)),
        ("double-banana", generators.double_banana()),
        ("double-banana-minus-triangle", generators.double_banana_minus_triangle()),
        (
            "barycentric-subdivision-octahedron",
            generators.barycentric_subdivision(
                generators.cross_polytope_boundary(3).complex
            ),
        ),
        (
            "barycentric-subdivision-cylinder",
            generators.barycentric_subdivision(generators.cylinder().complex),
        ),
        ("random-11-6", generators.random_complex(11, 6, 0.6)),
        ("random-23-8", generators.random_complex(23, 8, 0.4)),
    ]
    return out


def random_corpus(count=120, seed0=0):
    """Seeded random complexes cycling over n <= 8, many non-pure."""
    out = []
    for i in range(count):
        n = 3 + (i % 6)
        density = 0.25 + 0.15 * (i % 5)
        out.append(generators.random_complex(seed0 + i, n, density).complex)
    return out


def balanced_corpus(count=40):
    """(complex, coloring) pairs: colored families plus subdivisions of
    purified random complexes (|a| <= 6, mostly small)."""
    out = []
    for name, made in named_suite():
        if made.coloring is not None:
            out.append((name, made.complex, made.coloring))
    picked = 0
    i = 0
    while picked < count:
        n = 4 + (i % 4)
        base = purify(generators.random_complex(1000 + i, n, 0.5).complex)
        i += 1
        if base.d > 4 or base.d < 1:
            continue
        sd = generators.barycentric_subdivision(base)
        assert sd.coloring is not None
        out.append((f"sd-random-{i}", sd.complex, sd.coloring))
        picked += 1
    sphere = generators.barycentric_subdivision(generators.simplex_boundary(5).complex)
    out.append(("sd-simplex-boundary-5", sphere.complex, sphere.coloring))
    big = generators.barycentric_subdivision(Complex.from_facets([range(1, 7)]))
    out.append(("sd-full-5-simplex", big.complex, big.coloring))
    return out


@pytest.fixture(scope="session")
def suite():
    return named_suite()


@pytest.fixture(scope="session")
def randoms():
    return random_corpus()


@pytest.fixture(scope="session")
def balanced_pairs():
    return balanced_corpus()
