import math

import pytest

from quasipoly.construct import (
    Homothety,
    affine_hexagon,
    affine_parallelogram,
    affinely_regular_polygon_in_ring,
    attach_translates,
    construct_u_polygon_in_model_set,
    construct_u_polygon_ring,
    embed_in_model_set,
    pisot_scaler,
    regular_polygon_exact,
    _centered_copy,
)
from quasipoly.cyclo import CycInt, galois_apply, is_parallel
from quasipoly.errors import Inadmissible
from quasipoly.fields import admissible_edge_numbers
from quasipoly.geometry import affine_regularity_residual, is_u_polygon, u_class
from quasipoly.modelset import (
    BallWindow,
    contains,
    default_automorphism_reps,
    make_spec,
    preset_spec,
)


def test_regular_polygon_exact():
    deca = regular_polygon_exact(5, 10)
    assert len(deca) == 10
    rho = deca.vertices[1]
    assert rho == -CycInt.zeta(5, 3)
    assert rho**10 == CycInt.one(5)
    assert rho**5 == CycInt.from_int(5, -1)
    val = rho.embed()
    assert abs(val - complex(math.cos(math.pi / 5), math.sin(math.pi / 5))) < 1e-12

    octa = regular_polygon_exact(8, 8)
    assert octa.vertices[1] == CycInt.zeta(8)

    with pytest.raises(ValueError):
        regular_polygon_exact(5, 4)  # no 4th root of unity in Z[zeta_5]
    with pytest.raises(ValueError):
        regular_polygon_exact(8, 2)


def test_affine_parallelogram_and_hexagon():
    for n in (3, 4, 5, 7, 12):
        par = affine_parallelogram(n)
        assert len(par) == 4
        assert affine_regularity_residual(par.as_floats()) < 1e-9
        hexa = affine_hexagon(n)
        assert len(hexa) == 6
        assert hexa.is_centrally_symmetric()
        assert affine_regularity_residual(hexa.as_floats()) < 1e-9


def test_affinely_regular_dispatch():
    assert len(affinely_regular_polygon_in_ring(3, 4)) == 4
    assert len(affinely_regular_polygon_in_ring(5, 6)) == 6
    deca = affinely_regular_polygon_in_ring(5, 10)
    assert affine_regularity_residual(deca.as_floats()) < 1e-9
    dodeca = affinely_regular_polygon_in_ring(12, 12)
    assert dodeca.vertices[1] == CycInt.zeta(12)


def test_centered_copy():
    par = affine_parallelogram(5)
    centered = _centered_copy(par)
    assert centered.is_centrally_symmetric()
    # doubling the parallelogram and translating by -(1 + zeta) centers it
    expected = 2 * par.vertices[2] - CycInt.one(5) - CycInt.zeta(5)
    assert expected in centered.vertices


def test_attach_square_gives_known_octagon():
    centered = _centered_copy(affine_parallelogram(4))
    poly, dirs = attach_translates(centered)
    got = {v.embed_xy() for v in poly.vertices}
    want = {(float(x), float(y))
            for x, y in [(1, 3), (-1, 3), (-3, 1), (-3, -1), (-1, -3),
                         (1, -3), (3, -1), (3, 1)]}
    assert {(round(x), round(y)) for x, y in got} == {(round(x), round(y)) for x, y in want}
    assert len(dirs) == 4
    assert u_class(poly, dirs) == 4


def test_attach_hexagon_gives_12gon():
    poly, dirs = attach_translates(affine_hexagon(3))
    assert len(poly) == 12
    assert len(dirs) == 6
    assert u_class(poly, dirs) == 6


def test_attach_decagon_gives_icosagon():
    deca = regular_polygon_exact(5, 10)
    poly, dirs = attach_translates(deca)
    assert len(poly) == 20
    assert len(dirs) == 10
    assert u_class(poly, dirs) == 10


def test_attach_rejects_asymmetric():
    from quasipoly.geometry import Polygon

    tri = Polygon([CycInt.zero(4), CycInt.from_int(4, 2), 2 * CycInt.zeta(4)])
    with pytest.raises(ValueError):
        attach_translates(tri)


def test_attach_doubles_edges():
    for n, k in ((4, 4), (3, 6), (5, 10), (8, 8)):
        base = _centered_copy(affinely_regular_polygon_in_ring(n, k))
        poly, _ = attach_translates(base)
        assert len(poly) == 2 * len(base)


def test_construct_ring_odd_half():
    poly, dirs = construct_u_polygon_ring(5, 10)
    assert len(poly) == 10
    assert len(dirs) == 5
    assert u_class(poly, dirs) == 5


def test_construct_ring_even_half():
    poly, dirs = construct_u_polygon_ring(4, 8)
    assert len(poly) == 8
    assert u_class(poly, dirs) == 4


def test_construct_ring_inadmissible():
    with pytest.raises(Inadmissible):
        construct_u_polygon_ring(3, 10)
    with pytest.raises(Inadmissible):
        construct_u_polygon_ring(5, 14)
    try:
        construct_u_polygon_ring(5, 14)
    except Inadmissible as exc:
        assert "odd divisor" in str(exc)


def test_pisot_scaler_known_values():
    one5, z5 = CycInt.one(5), CycInt.zeta(5)
    assert pisot_scaler(5) == one5 + z5 + CycInt.zeta(5, 4)
    one8, z8 = CycInt.one(8), CycInt.zeta(8)
    assert pisot_scaler(8) == one8 + z8 + CycInt.zeta(8, 7)
    one12, z12 = CycInt.one(12), CycInt.zeta(12)
    assert pisot_scaler(12) == one12 + z12 + CycInt.zeta(12, 11)
    assert abs(pisot_scaler(5).embed().real - (1 + math.sqrt(5)) / 2) < 1e-12
    assert abs(pisot_scaler(8).embed().real - (1 + math.sqrt(2))) < 1e-12
    assert abs(pisot_scaler(12).embed().real - (1 + math.sqrt(3))) < 1e-12


def test_pisot_scaler_margins():
    for n in (5, 7, 8, 9, 11, 12):
        lam = pisot_scaler(n)
        assert lam.is_real()
        value = lam.embed().real
        assert value > 1 + 1e-3
        for a in default_automorphism_reps(n):
            assert abs(galois_apply(a, lam).embed().real) < 1 - 1e-3


def test_pisot_scaler_rejects_lattices():
    with pytest.raises(ValueError):
        pisot_scaler(4)
    with pytest.raises(ValueError):
        pisot_scaler(10)  # not canonical


def test_homothety_validation():
    with pytest.raises(ValueError):
        Homothety(scale=CycInt.zeta(5), k=1, shift=CycInt.zero(5))
    with pytest.raises(ValueError):
        Homothety(scale=CycInt.from_int(5, -2), k=1, shift=CycInt.zero(5))
    h = Homothety.identity(5)
    z = CycInt.zeta(5)
    assert h.apply(z) == z
    assert Homothety.from_dict(h.to_dict()) == h


def test_embed_identity_on_lattices():
    spec = make_spec(4)
    pts = [CycInt.from_int(4, 3), CycInt.zeta(4) * 5]
    h, embedded = embed_in_model_set(pts, spec)
    assert h.k == 0 and h.scale == CycInt.one(4) and h.shift == CycInt.zero(4)
    assert embedded == pts


def test_embed_icosagon_regression():
    spec = preset_spec("ttt5")
    poly, _ = construct_u_polygon_ring(5, 20)
    h, embedded = embed_in_model_set(poly.vertices, spec)
    assert h.k == 2  # frozen from the first verified run
    assert h.scale == pisot_scaler(5) ** 2
    assert all(contains(spec, z) for z in embedded)


def test_embed_16gon_in_ab8():
    spec = preset_spec("ab8")
    poly, _ = construct_u_polygon_ring(8, 16)
    h, embedded = embed_in_model_set(poly.vertices, spec)
    assert h.k <= 25
    assert all(contains(spec, z) for z in embedded)


def test_construct_in_model_set_directions_exactly_parallel():
    spec = preset_spec("ttt5")
    ring_poly, ring_dirs = construct_u_polygon_ring(5, 20)
    poly, dirs, homothety = construct_u_polygon_in_model_set(spec, 20)
    assert len(poly) == 20
    assert u_class(poly, dirs) == 10
    for ring_edge, edge in zip(ring_poly.edge_vectors(), poly.edge_vectors()):
        assert is_parallel(ring_edge, edge)
    assert homothety.k >= 0


def test_construct_in_model_set_inadmissible():
    spec = preset_spec("ttt5")
    with pytest.raises(Inadmissible):
        construct_u_polygon_in_model_set(spec, 14)


def test_construct_in_four_dim_internal_space():
    spec = make_spec(7, window=BallWindow(1.0))
    poly, dirs, h = construct_u_polygon_in_model_set(spec, 14, patch_radius=4.0)
    assert len(poly) == 14
    assert u_class(poly, dirs) == 7
    assert all(contains(spec, v) for v in poly.vertices)
    assert h.k <= 25


def test_construct_in_square_lattice():
    spec = make_spec(4)
    poly, dirs, h = construct_u_polygon_in_model_set(spec, 12)
    assert len(poly) == 12
    assert u_class(poly, dirs) >= 4
    assert h.k == 0
    assert all(contains(spec, v) for v in poly.vertices)


def test_full_matrix_ring_constructions():
    for n in (3, 4, 5, 7, 8, 9, 11, 12):
        for m in admissible_edge_numbers(n):
            poly, dirs = construct_u_polygon_ring(n, m)
            assert len(poly) == m
            assert is_u_polygon(poly, dirs)
            cls = u_class(poly, dirs)
            assert cls == m // 2
            if (m // 2) % 2 == 1:
                assert cls == m // 2
