"""Generator families: golden counts, determinism, dispatcher validation."""

import pytest

from dskit.balanced import validate_balanced
from dskit.complexes import Complex
from dskit.enumeration import f_vector, reduced_euler
from dskit.errors import ValidationError
from dskit.generators import (
    barycentric_subdivision,
    cross_polytope_boundary,
    cylinder,
    double_banana,
    double_banana_minus_triangle,
    gen,
    glued_tetrahedra,
    glued_triangles,
    random_complex,
    simplex_boundary,
    subdivided_triangle,
)


def test_simplex_boundary_counts():
    assert f_vector(simplex_boundary(1).complex) == (1, 2)
    assert f_vector(simplex_boundary(3).complex) == (1, 4, 6, 4)
    assert reduced_euler(simplex_boundary(3).complex) == 1


def test_cross_polytope_counts():
    assert f_vector(cross_polytope_boundary(1).complex) == (1, 2)
    assert f_vector(cross_polytope_boundary(2).complex) == (1, 4, 4)
    assert f_vector(cross_polytope_boundary(3).complex) == (1, 6, 12, 8)
    made = cross_polytope_boundary(4)
    assert f_vector(made.complex) == (1, 8, 24, 32, 16)
    assert made.coloring.a == (1, 1, 1, 1)


def test_cylinder_counts():
    cx = cylinder().complex
    assert f_vector(cx) == (1, 6, 12, 6)
    assert reduced_euler(cx) == -1


def test_subdivided_triangle_counts():
    assert f_vector(subdivided_triangle().complex) == (1, 4, 6, 3)


def test_glued_families():
    assert f_vector(glued_triangles(2).complex) == (1, 4, 5, 2)
    assert f_vector(glued_triangles(3).complex) == (1, 5, 7, 3)
    assert f_vector(glued_tetrahedra(3).complex) == (1, 8, 16, 12, 3)
    with pytest.raises(ValidationError):
        glued_triangles(1)
    with pytest.raises(ValidationError):
        glued_tetrahedra(0)


def test_double_banana_counts():
    made = double_banana()
    assert f_vector(made.complex) == (1, 10, 24, 16)
    assert reduced_euler(made.complex) == 1
    assert made.coloring is not None
    # gluing vertices 1,2 belong to facets of both copies
    star1 = [f for f in made.complex.facets if 1 in f]
    assert len(star1) == 8


def test_double_banana_minus_triangle_counts():
    made = double_banana_minus_triangle()
    assert f_vector(made.complex) == (1, 10, 24, 15)
    assert (2, 4, 6) not in made.complex.facets


def test_barycentric_subdivision_octahedron():
    base = cross_polytope_boundary(3).complex
    made = barycentric_subdivision(base)
    # one new vertex per non-empty face, one facet per maximal chain
    assert f_vector(made.complex)[1] == base.num_faces - 1 == 26
    assert len(made.complex.facets) == 8 * 6
    assert made.coloring.a == (1, 1, 1)
    validate_balanced(made.complex, made.coloring.kappa, made.coloring.a)
    # subdivision preserves the Euler characteristic
    assert reduced_euler(made.complex) == reduced_euler(base)


def test_barycentric_subdivision_of_empty_and_point():
    assert barycentric_subdivision(Complex.from_facets([])).complex.num_faces == 1
    made = barycentric_subdivision(Complex.from_facets([[1]]))
    assert f_vector(made.complex) == (1, 1)


def test_barycentric_subdivision_nonpure_uncolored():
    made = barycentric_subdivision(Complex.from_facets([[1, 2, 3], [4, 5]]))
    assert made.coloring is None
    assert reduced_euler(made.complex) == reduced_euler(
        Complex.from_facets([[1, 2, 3], [4, 5]])
    )


def test_random_complex_determinism():
    a = random_complex(42, 8, 0.5).complex
    b = random_complex(42, 8, 0.5).complex
    assert a == b
    assert a.facets == (
        (1, 2, 3, 4, 5, 7),
        (1, 3, 4, 5, 7, 8),
        (2, 3, 4, 5, 6, 7),
    )
    assert random_complex(43, 8, 0.5).complex != a


def test_random_complex_mixes_sizes():
    sizes = set()
    for seed in range(30):
        cx = random_complex(seed, 8, 0.6).complex
        sizes.update(len(f) for f in cx.facets)
    assert len(sizes) >= 4  # non-pure corpus overall


def test_random_complex_validation():
    with pytest.raises(ValidationError):
        random_complex(1, 0, 0.5)
    with pytest.raises(ValidationError):
        random_complex(1, 5, 0.0)
    with pytest.raises(ValidationError):
        random_complex(1, 5, 1.5)


def test_gen_dispatcher():
    made = gen("cross-polytope-boundary", ["3"])
    assert f_vector(made.complex) == (1, 6, 12, 8)
    assert gen("glued-triangles", []).complex == glued_triangles(3).complex
    base = glued_triangles(3).complex
    sd = gen("barycentric-subdivision", [], base=base)
    assert sd.complex == barycentric_subdivision(base).complex
    with pytest.raises(ValidationError):
        gen("no-such-family", [])
    with pytest.raises(ValidationError):
        gen("cylinder", ["3"])
    with pytest.raises(ValidationError):
        gen("random", ["1", "2"])
    with pytest.raises(ValidationError):
        gen("random", ["1", "5", "abc"])
    with pytest.raises(ValidationError):
        gen("simplex-boundary", ["x"])
