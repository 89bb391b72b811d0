"""f/h vectors, Euler characteristics, multiplicities and interior splits."""

import random

import pytest

from dskit.complexes import Complex
from dskit.enumeration import (
    epsilon,
    euler,
    f_vector,
    h_to_f,
    h_vector,
    interior_f_vector,
    multiplicities,
    multiplicity,
    reduced_euler,
)
from dskit.errors import DomainError, PreconditionError
from dskit.generators import (
    cross_polytope_boundary,
    cylinder,
    glued_tetrahedra,
    glued_triangles,
    subdivided_triangle,
)
from dskit.poly import DeltaCoeffs, delta_expand

from conftest import ofaces_of, om_f, opoly_add, opoly_mul, opoly_pow, opoly_scale


def oracle_h_vector(f):
    """Expand sum_i f_{i-1} x^i (1-x)^(d-i) with bare list arithmetic."""
    d = len(f) - 1
    acc = [0]
    for i, fi in enumerate(f):
        term = opoly_mul(opoly_pow([0, 1], i), opoly_pow([1, -1], d - i))
        acc = opoly_add(acc, opoly_scale(term, fi))
    acc = acc + [0] * (d + 1 - len(acc))
    return tuple(acc[: d + 1])


def test_f_vector_goldens():
    assert f_vector(cylinder().complex) == (1, 6, 12, 6)
    assert f_vector(cross_polytope_boundary(3).complex) == (1, 6, 12, 8)
    assert f_vector(Complex.from_facets([])) == (1,)


def test_h_vector_goldens():
    assert h_vector((1, 6, 12, 8)) == (1, 3, 3, 1)
    assert h_vector((1, 4, 8, 4)) == (1, 1, 3, -1)
    assert h_vector((1,)) == (1,)


def test_h_vector_matches_oracle_expansion():
    rng = random.Random(99)
    for _ in range(60):
        d = rng.randrange(0, 7)
        f = (1,) + tuple(rng.randrange(1, 40) for _ in range(d))
        assert h_vector(f) == oracle_h_vector(f)


def test_h_f_round_trips():
    rng = random.Random(5)
    for _ in range(40):
        d = rng.randrange(0, 7)
        f = (1,) + tuple(rng.randrange(1, 40) for _ in range(d))
        h = h_vector(f)
        assert h_to_f(h) == f
        assert h_vector(h_to_f(h)) == h


def test_h_sum_is_top_count(suite):
    # evaluate the defining relation at x = 1: sum h_i = f_{d-1}
    for _, made in suite:
        f = f_vector(made.complex)
        assert sum(h_vector(f)) == f[-1]


def test_euler_characteristics():
    cyl = cylinder().complex
    assert euler(cyl) == 0
    assert reduced_euler(cyl) == -1
    assert reduced_euler(cross_polytope_boundary(3).complex) == 1
    assert reduced_euler(Complex.from_facets([])) == -1


def test_multiplicity_paper_values():
    gt = glued_triangles(3).complex
    assert multiplicity(gt, (1, 2), "superset-sum") == 2
    assert multiplicity(gt, (1, 2), "link-euler") == 2
    gth = glued_tetrahedra(3).complex
    assert multiplicity(gth, (1, 2), "superset-sum") == -2
    assert multiplicity(gth, (1, 2), "link-euler") == -2


def test_multiplicity_of_top_facets_is_one(suite):
    for _, made in suite:
        cx = made.complex
        for facet in cx.facets:
            if len(facet) == cx.d:
                assert multiplicity(cx, facet) == 1


def test_multiplicity_rejects_non_face():
    with pytest.raises(DomainError):
        multiplicity(glued_triangles(3).complex, (3, 4))


def test_multiplicity_methods_agree_and_match_oracle(randoms):
    for cx in randoms[:40]:
        faces = ofaces_of(cx)
        for face in cx.faces():
            a = multiplicity(cx, face, "superset-sum")
            b = multiplicity(cx, face, "link-euler")
            assert a == b == om_f(faces, face, cx.d)


def test_multiplicities_octahedron_all_one():
    cx = cross_polytope_boundary(3).complex
    table = multiplicities(cx)
    assert all(m == 1 for _, m in table.items())


def test_multiplicities_cylinder_split():
    cx = cylinder().complex
    table = multiplicities(cx)
    interior_edges = {(1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6)}
    for face, m in table.items():
        if len(face) == 3 or face in interior_edges:
            assert m == 1
        elif face == ():
            assert m == -1
        else:
            assert m == 0


def test_multiplicities_single_edge():
    table = multiplicities(Complex.from_facets([[1, 2]]))
    assert table.m((1, 2)) == 1
    assert table.m((1,)) == 0
    assert table.m((2,)) == 0
    assert table.m_empty == 0


def test_multiplicities_sweep_equals_per_face(randoms):
    for cx in randoms[:30]:
        table = multiplicities(cx)
        for face, m in table.items():
            assert m == multiplicity(cx, face, "superset-sum")


def test_m_empty_is_signed_reduced_euler(randoms):
    for cx in randoms:
        table = multiplicities(cx)
        assert table.m_empty == (-1) ** (cx.d - 1) * reduced_euler(cx)


def test_central_invariant_m_poly_is_h_delta_expansion(randoms):
    # sum_F m_F x^|F| == sum_i h_i (x+1)^i x^(d-i), for every complex
    for cx in randoms:
        h = h_vector(f_vector(cx))
        assert multiplicities(cx).poly() == delta_expand(DeltaCoeffs(h))


def test_epsilon_values():
    gt = glued_triangles(3).complex
    assert epsilon(gt, (1, 2), "link-euler") == 1
    assert epsilon(gt, (1, 2), "multiplicity") == 1
    oct3 = cross_polytope_boundary(3).complex
    assert epsilon(oct3, (), "link-euler") == 0
    for face in oct3.faces():
        if face:
            assert epsilon(oct3, face) == 0  # semi-Eulerian: no error


def test_epsilon_methods_agree(randoms):
    for cx in randoms[:40]:
        for face in cx.faces():
            assert epsilon(cx, face, "link-euler") == epsilon(cx, face, "multiplicity")


def test_interior_f_vectors():
    assert interior_f_vector(cylinder().complex) == (0, 6, 6)
    assert interior_f_vector(cross_polytope_boundary(3).complex) == (6, 12, 8)
    assert interior_f_vector(subdivided_triangle().complex) == (1, 3, 3)


def test_interior_requires_reciprocal():
    with pytest.raises(PreconditionError) as err:
        interior_f_vector(glued_triangles(3).complex)
    assert err.value.witness == (1, 2)
