import math
import random

import pytest

from quasipoly.cyclo import CycInt
from quasipoly.errors import BudgetExceeded
from quasipoly.modelset import (
    BallWindow,
    BoxWindow,
    ModelSetSpec,
    contains,
    default_automorphism_reps,
    delone_diagnostics,
    generate,
    make_spec,
    preset_spec,
    star_map,
)


def test_default_automorphism_reps():
    assert default_automorphism_reps(5) == [2]
    assert default_automorphism_reps(8) == [3]
    assert default_automorphism_reps(12) == [5]
    assert default_automorphism_reps(7) == [2, 3]
    assert default_automorphism_reps(3) == []
    assert default_automorphism_reps(4) == []


def test_spec_validation():
    with pytest.raises(ValueError):
        make_spec(2)
    # n = 2 mod 4 canonicalizes instead of failing
    assert make_spec(10).n == 5
    with pytest.raises(ValueError):
        ModelSetSpec(n=5, reps=(3,), window=BallWindow(1.0), shift=(0.0, 0.0),
                     translate=CycInt.zero(5))
    with pytest.raises(ValueError):
        BallWindow(0.0)
    with pytest.raises(ValueError):
        BoxWindow((1.0, -1.0))


def test_star_map_examples():
    spec = preset_spec("ttt5")
    assert star_map(spec, CycInt.zero(5)) == (0.0, 0.0)
    sx, sy = star_map(spec, CycInt.one(5))
    assert abs(sx - 1.0) < 1e-12 and abs(sy) < 1e-12
    sx, sy = star_map(spec, CycInt.zeta(5))  # sigma_2 sends zeta to zeta^2
    assert abs(sx - math.cos(4 * math.pi / 5)) < 1e-9
    assert abs(sy - math.sin(4 * math.pi / 5)) < 1e-9


def test_star_map_additive():
    spec = preset_spec("ttt5")
    rng = random.Random(5)
    for _ in range(50):
        z = CycInt(5, [rng.randint(-8, 8) for _ in range(4)])
        w = CycInt(5, [rng.randint(-8, 8) for _ in range(4)])
        left = star_map(spec, z + w)
        right = [a + b for a, b in zip(star_map(spec, z), star_map(spec, w))]
        assert all(abs(a - b) < 1e-9 for a, b in zip(left, right))


def test_star_map_empty_for_lattices():
    assert star_map(make_spec(4), CycInt.zeta(4)) == ()
    assert star_map(make_spec(3), CycInt.zeta(3)) == ()


def test_contains_examples():
    spec4 = make_spec(4)
    assert contains(spec4, CycInt(4, (101, -57)))

    spec = make_spec(5, window=BallWindow(1.0), shift=(0.0, 0.0))
    assert contains(spec, CycInt.zero(5))
    small = make_spec(5, window=BallWindow(0.5), shift=(0.0, 0.0))
    assert not contains(small, CycInt.one(5))  # |star(1)| = 1 > 0.5

    with pytest.raises(ValueError):
        contains(spec4, CycInt.zero(5))


def test_generate_lattice_counts():
    assert len(generate(make_spec(4), 1.5).points) == 9
    assert len(generate(make_spec(3), 1.1).points) == 7


def test_generate_frozen_count_ttt5():
    # regression value fixed by the exhaustive coordinate-box enumeration
    ps = generate(preset_spec("ttt5"), 6.0)
    assert len(ps.points) == 181


def test_generate_matches_bruteforce_small():
    spec = preset_spec("ttt5")
    radius = 3.0
    brute = []
    for c0 in range(-8, 9):
        for c1 in range(-8, 9):
            for c2 in range(-8, 9):
                for c3 in range(-8, 9):
                    z = CycInt(5, (c0, c1, c2, c3))
                    x, y = z.embed_xy()
                    if x * x + y * y <= radius * radius and contains(spec, z):
                        brute.append(z.coeffs)
    brute.sort()
    fast = [z.coeffs for z in generate(spec, radius).points]
    assert fast == brute


def test_generate_points_all_contained_and_sorted():
    ps = generate(preset_spec("ab8"), 8.0)
    ps.validate()
    coeff_lists = [z.coeffs for z in ps.points]
    assert coeff_lists == sorted(coeff_lists)


def test_generate_monotone_in_radius_and_window():
    spec_small = make_spec(5, window=BallWindow(0.9))
    spec_large = make_spec(5, window=BallWindow(1.3))
    inner = set(generate(spec_small, 4.0).points)
    with_r = set(generate(spec_small, 7.0).points)
    with_window = set(generate(spec_large, 4.0).points)
    assert inner <= with_r
    assert inner <= with_window


def test_generate_box_window():
    spec = make_spec(5, window=BoxWindow((0.9, 1.1)))
    ps = generate(spec, 5.0)
    assert len(ps.points) > 10
    ps.validate()
    for z in ps.points:
        vec = [v - s for v, s in zip(star_map(spec, z), spec.shift)]
        assert abs(vec[0]) < 0.9 and abs(vec[1]) < 1.1


def test_generate_higher_internal_dimension():
    spec = make_spec(7, window=BallWindow(1.0))
    assert spec.internal_dim == 4
    ps = generate(spec, 4.0)
    assert len(ps.points) == 14  # frozen: sparse set for this small window
    ps.validate()


def test_translate_is_metadata_only():
    moved = make_spec(5, translate=CycInt.zeta(5))
    plain = make_spec(5)
    assert generate(moved, 4.0).points == generate(plain, 4.0).points
    assert ModelSetSpec.from_dict(moved.to_dict()) == moved


def test_generate_lattice_ignores_window():
    a = generate(make_spec(4, window=BallWindow(0.2)), 3.0)
    b = generate(make_spec(4, window=BallWindow(2.0)), 3.0)
    assert a.points == b.points


def test_generate_budget_error():
    with pytest.raises(BudgetExceeded):
        generate(preset_spec("ttt5"), 30.0, budget=1000)


def test_delone_lattice_values():
    for n in (3, 4):
        ps = generate(make_spec(n), 5.0)
        min_d, hole = delone_diagnostics(ps, 5.0)
        assert abs(min_d - 1.0) < 1e-9
        assert hole < 1.0


def test_delone_ttt5_bounds():
    ps = generate(preset_spec("ttt5"), 10.0)
    min_d, hole = delone_diagnostics(ps, 10.0)
    assert min_d > 0.3
    assert hole < 3.0


def test_delone_needs_points():
    ps = generate(preset_spec("ttt5"), 10.0)
    with pytest.raises(ValueError):
        delone_diagnostics(ps, 0.1)
