import math
import random
import pytest
from fractions import Fraction

from zonalg import arrangement as arrg
from zonalg.arrangement import braid, type_b, coordinate, central_face, parse_face
from zonalg.gfseries import RatPoly, eulerian_A, eulerian_B
from zonalg.polyclass import (
    NotDeformationError,
    PiElement,
    VPolytope,
    check_deformation,
    cube,
    exp_class,
    graded_component,
    hyperplane_normals,
    log_class,
    permutahedron,
    pi_equal,
    polytope_cone_weights,
    polytope_from_json,
    polytope_to_json,
    psi1,
    segment,
    simplex,
    simplex0,
    slice_polytope,
    typeB_permutahedron,
    valuation_relation,
    zonotope_face,
    zonotope_of,
)


def _pt(arr):
    return VPolytope(arr, [(Fraction(0),) * arr.d], assume_vertices=True)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_vertex_counts(d):
    assert len(permutahedron(d).verts) == math.factorial(d)
    assert len(typeB_permutahedron(d).verts) == 2 ** d * math.factorial(d)
    assert len(cube(d).verts) == 2 ** d


def test_permutahedron_face_vectors():
    p3 = permutahedron(3)
    assert p3.f_vector() == (6, 6, 1)
    assert p3.h_polynomial() == eulerian_A(3)
    pb2 = typeB_permutahedron(2)
    assert pb2.f_vector() == (8, 8, 1)
    assert pb2.h_polynomial() == eulerian_B(2)
    assert _pt(braid(2)).h_polynomial() == RatPoly.of(1)


def test_simplex_validation():
    with pytest.raises(ValueError):
        simplex(type_b(3), {1, -1})
    with pytest.raises(ValueError):
        simplex0(type_b(3), set())
    s = simplex0(type_b(2), {1})
    assert s.verts == ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))


def test_face_max_simplex_rule():
    arr = braid(4)
    dj = simplex(arr, {1, 2, 4})
    f = parse_face(arr, "3|14|2")
    assert dj.face_max(f) == simplex(arr, {1, 4})
    assert dj.face_max(central_face(arr)) == dj


def test_double_action_is_product_action():
    arr = braid(3)
    p = permutahedron(3)
    for f in arrg.faces(arr):
        for g in arrg.faces(arr):
            assert p.face_max(f).face_max(g) == p.face_max(arrg.tits_product(f, g))


def test_minkowski_and_dilate():
    arr = braid(3)
    d12 = simplex(arr, {1, 2})
    doubled = d12.minkowski(d12)
    assert doubled == d12.dilate(2)
    assert pi_equal(
        PiElement.of(permutahedron(3)),
        PiElement.of(
            simplex(arr, {1, 2}).minkowski(simplex(arr, {1, 3})).minkowski(simplex(arr, {2, 3}))
        ),
    )


def test_dilate_zero_and_negative():
    p = cube(2)
    assert p.dilate(0).verts == ((Fraction(0), Fraction(0)),)
    with pytest.raises(ValueError):
        p.dilate(-1)


def test_deformation_closure_under_sums_and_dilates():
    rng = random.Random(3)
    arr = braid(3)
    subsets = [frozenset(s) for s in [(1, 2), (1, 3), (2, 3), (1, 2, 3)]]
    for _ in range(5):
        picks = rng.sample(subsets, 2)
        p = simplex(arr, picks[0]).minkowski(simplex(arr, picks[1]))
        assert check_deformation(p)
        assert check_deformation(p.dilate(Fraction(3, 2)))


def test_non_deformation_rejected():
    # Conv{0, e1} is not a deformation of the permutahedron
    with pytest.raises(NotDeformationError):
        segment(braid(2), (1, 0))


def test_segment_volume_normalization():
    from zonalg.polyclass import _segment_length

    z = Fraction(0)
    assert _segment_length((z, z), (Fraction(1), Fraction(1))) == 1
    assert _segment_length((z, z), (Fraction(2), Fraction(2))) == 2
    assert _segment_length((z, z), (Fraction(1, 2), Fraction(1, 2))) == Fraction(1, 2)


def test_unit_square_volume():
    sq = cube(2)
    top = [fs for fs, dim in sq.lattice().items() if dim == 2]
    assert len(top) == 1 and sq.face_volume(top[0]) == 1


def test_lattice_volume_examples():
    from zonalg.polyclass import face_lattice, lattice_volume

    arr = coordinate(2)
    seg = VPolytope(arr, [(0, 0), (1, 1)], assume_vertices=True)
    assert lattice_volume(seg) == 1  # primitive lattice length
    seg2 = VPolytope(arr, [(0, 0), (2, 2)], assume_vertices=True)
    assert lattice_volume(seg2) == 2
    assert lattice_volume(cube(2)) == 1
    assert lattice_volume(VPolytope(arr, [(5, 7)], assume_vertices=True)) == 1
    lat = face_lattice(cube(2))
    assert sorted(lat.values()).count(0) == 4 and max(lat.values()) == 2


def test_lattice_volume_against_independent_oracles():
    from zonalg.polyclass import lattice_volume

    # the permutahedron is the graphical zonotope of the complete graph, so
    # its lattice volume counts spanning trees: d^(d-2)
    assert lattice_volume(permutahedron(3)) == 3
    assert lattice_volume(permutahedron(4)) == 16
    # zonotope of the type-B normals in the plane: sum over independent
    # pairs of |det| = 2 + 1 + 1 + 1 + 1 + 1
    assert lattice_volume(zonotope_of(type_b(2))) == 7
    # the octagon with vertices (±1,±2),(±2,±1): a 4x4 box minus four
    # half-unit corners
    assert lattice_volume(typeB_permutahedron(2)) == 14
    # dilation scales r-volume by lambda^r
    assert lattice_volume(permutahedron(3).dilate(2)) == 12


def test_permutahedron_edges_are_primitive():
    w = psi1(permutahedron(3))
    assert set(w.weights.values()) == {Fraction(1)}
    assert len(w.weights) == 6


def test_phi_of_interval_minus_point():
    arr = coordinate(1)
    seg3 = VPolytope(arr, [(Fraction(0),), (Fraction(3),)], assume_vertices=True)
    x = PiElement.of(seg3) - PiElement.one(arr)
    w = x.phi()
    assert w.weights == {central_face(arr): Fraction(3)}


def test_log_of_segment_and_singleton():
    arr = coordinate(2)
    l1 = segment(arr, (1, 0))
    assert pi_equal(log_class(l1), PiElement.of(l1) - PiElement.one(arr))
    assert log_class(simplex(braid(3), {2})).is_formally_zero()


def test_log_additivity_and_exp():
    arr = braid(3)
    a = simplex(arr, {1, 2})
    b = simplex(arr, {1, 2, 3})
    s = a.minkowski(b)
    assert pi_equal(log_class(s), log_class(a) + log_class(b))
    assert pi_equal(exp_class(log_class(b)), PiElement.of(b))


def test_exp_requires_zero_degree0():
    with pytest.raises(ValueError):
        exp_class(PiElement.one(braid(2)))


def test_dilation_eigenvalue_of_log():
    arr = braid(3)
    x = log_class(simplex(arr, {1, 2}))
    assert x.dilate(2).phi() == x.phi().scale(2)


def test_graded_components_sum_to_class():
    arr = braid(3)
    p = PiElement.of(simplex(arr, {1, 2, 3}))
    total = PiElement.zero(arr)
    for r in range(0, 4):
        total = total + graded_component(p, r)
    assert pi_equal(total, p)
    g1 = graded_component(p, 1)
    assert pi_equal(g1, log_class(simplex(arr, {1, 2, 3})))


def test_product_of_interval_logs():
    arr = braid(3)
    l1 = segment(arr, (1, -1, 0))
    l2 = segment(arr, (0, 1, -1))
    l3 = segment(arr, (1, 0, -1))
    assert (log_class(l1) * log_class(l2) * log_class(l3)).phi().is_zero()
    assert not (log_class(l1) * log_class(l2)).phi().is_zero()


def test_half_open_parallelogram_grading():
    arr = coordinate(2)
    y = log_class(segment(arr, (1, 0))) * log_class(segment(arr, (0, 1)))
    assert y.dilate(2).phi() == y.phi().scale(4)


def test_module_axioms_on_classes():
    arr = braid(3)
    x = PiElement.of(permutahedron(3))
    for f in arrg.faces(arr):
        for g in arrg.faces(arr):
            fg = arrg.tits_product(f, g)
            assert pi_equal(x.act_face(f).act_face(g), x.act_face(fg))
    assert pi_equal(x.act_face(central_face(arr)), x)


def test_action_by_log_identity():
    # log([p]) . H_F = log([p] . H_F) for simplex faces
    arr = braid(3)
    dj = simplex(arr, {1, 2, 3})
    for f in arrg.faces(arr):
        lhs = log_class(dj).act_face(f)
        rhs = log_class(dj.face_max(f))
        assert pi_equal(lhs, rhs)


def test_action_multiplicative():
    rng = random.Random(5)
    arr = braid(3)
    subsets = [frozenset(s) for s in [(1, 2), (1, 3), (2, 3), (1, 2, 3)]]
    pool = [PiElement.of(simplex(arr, s)) for s in subsets] + [
        PiElement.of(permutahedron(3))
    ]
    faces = arrg.faces(arr)
    for _ in range(20):
        x = pool[rng.randrange(len(pool))] + pool[rng.randrange(len(pool))].scale(
            rng.randint(-2, 2)
        )
        y = pool[rng.randrange(len(pool))]
        f = faces[rng.randrange(len(faces))]
        assert pi_equal((x * y).act_face(f), x.act_face(f) * y.act_face(f))


def test_dilation_commutes_with_action():
    arr = braid(3)
    x = PiElement.of(permutahedron(3))
    for lam in (2, Fraction(3, 2)):
        for f in arrg.faces(arr)[::2]:
            assert pi_equal(x.act_face(f).dilate(lam), x.dilate(lam).act_face(f))


def test_slices_and_valuation_relations():
    assert valuation_relation(cube(2), ("coord", 1), Fraction(1, 2)).phi().is_zero()
    arr1 = coordinate(1)
    seg = VPolytope(arr1, [(Fraction(0),), (Fraction(1),)], assume_vertices=True)
    assert valuation_relation(seg, ("coord", 1), Fraction(1, 2)).phi().is_zero()
    assert valuation_relation(permutahedron(3), ("coord", 1), Fraction(3, 2)).phi().is_zero()
    assert valuation_relation(permutahedron(2), ("diff", 1, 2), Fraction(1, 3)).phi().is_zero()
    assert valuation_relation(typeB_permutahedron(2), ("diff", 1, 2), Fraction(1, 2)).phi().is_zero()
    assert valuation_relation(typeB_permutahedron(2), ("sum", 1, 2), Fraction(1, 2)).phi().is_zero()


def test_slice_level_must_be_interior():
    with pytest.raises(ValueError):
        slice_polytope(cube(2), ("coord", 1), Fraction(2))


def test_diagonal_slice_of_hexagon_is_not_a_deformation():
    # cutting along x1 - x2 creates an edge outside the root directions
    with pytest.raises(NotDeformationError):
        slice_polytope(permutahedron(3), ("diff", 1, 2), 0)


def test_slice_pieces_cover():
    p = cube(2)
    le, ge, eq = slice_polytope(p, ("coord", 2), Fraction(1, 3))
    assert pi_equal(
        PiElement.of(le) + PiElement.of(ge) - PiElement.of(eq), PiElement.of(p)
    )


def test_phi_translation_invariance():
    rng = random.Random(11)
    arr = braid(3)
    p = simplex(arr, {1, 3})
    for _ in range(5):
        t = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        assert polytope_cone_weights(p) == polytope_cone_weights(p.translate(t))


def test_phi_homogeneity_support():
    # degree-r parts live on faces of dimension d - r
    arr = braid(4)
    x = log_class(simplex(arr, {1, 2, 4}))
    assert x.phi().support_dims() == [3]
    xx = x * log_class(simplex(arr, {1, 3}))
    assert xx.phi().support_dims() == [2]
    arrc = coordinate(3)
    y = log_class(segment(arrc, (1, 0, 0))) * log_class(segment(arrc, (0, 0, 1)))
    assert y.phi().support_dims() == [1]
    arrb = type_b(2)
    zb = log_class(simplex0(arrb, {1}))
    assert zb.phi().support_dims() == [1]
    # same in type B at full size
    arrb4 = type_b(4)
    w = log_class(simplex0(arrb4, {1, -3, 4}))
    assert w.phi().support_dims() == [3]
    ww = w * log_class(simplex(arrb4, {2, -4}))
    assert ww.phi().support_dims() == [2]


def test_dilation_is_multiplicative():
    arr = braid(3)
    x = PiElement.of(simplex(arr, {1, 2}))
    y = PiElement.of(simplex(arr, {1, 2, 3}))
    for lam in (2, Fraction(3, 2)):
        assert pi_equal((x * y).dilate(lam), x.dilate(lam) * y.dilate(lam))


def test_psi1_matches_phi_of_log():
    for p in (permutahedron(3), typeB_permutahedron(2), cube(3), simplex0(type_b(3), {1, -2})):
        d = p.arr.d
        direct = psi1(p)
        via_log = log_class(p).phi(face_dims={d - 1})
        assert direct == via_log


def test_psi1_of_simplex0_singleton():
    # the edge of Conv{0, e1} in type B lies on the flat x1 = 0's two rays
    arr = type_b(2)
    w = psi1(simplex0(arr, {1}))
    faces = sorted(arrg.face_str(f) for f in w.weights)
    assert all(v == 1 for v in w.weights.values())
    assert faces == ["-2|0:1 -1|2", "2|0:1 -1|-2"]


def test_zonotope_is_permutahedron_class():
    assert pi_equal(PiElement.of(zonotope_of(braid(3))), PiElement.of(permutahedron(3)))


@pytest.mark.parametrize("arr", [braid(3), type_b(2), coordinate(3)])
def test_zonotope_face_equals_flat_summand(arr):
    # the face of the zonotope at any face F is a translate of the summand
    # over the hyperplanes containing supp(F)
    z = zonotope_of(arr)
    for f in arrg.faces(arr):
        face_poly = z.face_max(f)
        summand = zonotope_face(arr, arrg.support(f))
        assert face_poly.normalized() == summand.normalized()


def test_graded_component_matches_log_powers():
    from math import factorial

    p = permutahedron(3)
    x = PiElement.of(p)
    lg = log_class(p)
    power = PiElement.one(p.arr)
    for r in range(0, 3):
        assert pi_equal(graded_component(x, r), power.scale(Fraction(1, factorial(r))))
        power = power * lg


@pytest.mark.parametrize("arr", [braid(3), type_b(2), coordinate(3)])
def test_zonotope_face_is_summand(arr):
    z = zonotope_of(arr)
    for fl in arrg.flats(arr):
        zx = zonotope_face(arr, fl)
        some_face = arrg.faces_with_support(arr, fl)[0]
        ip = arrg.interior_point(some_face)
        comp = _pt(arr)
        for v in hyperplane_normals(arr):
            if sum(a * b for a, b in zip(v, ip)) != 0:
                comp = comp.minkowski(segment(arr, v))
        assert pi_equal(PiElement.of(zx.minkowski(comp)), PiElement.of(z))


def test_cone_weights_json():
    w = polytope_cone_weights(simplex(braid(2), {1, 2}))
    data = w.to_json()
    assert all(set(item) == {"face", "coeff"} for item in data)


def test_polytope_json_round_trip():
    p = simplex0(type_b(2), {1, -2})
    back = polytope_from_json(polytope_to_json(p))
    assert back == p


def test_arrangement_mismatch_raises():
    with pytest.raises(ValueError):
        cube(2).minkowski(permutahedron(2))
    with pytest.raises(ValueError):
        PiElement.of(cube(2)) + PiElement.of(permutahedron(2))
