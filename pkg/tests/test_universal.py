"""Generator matrices and the defining relations, across rings and parameters."""

from __future__ import annotations

import random

import pytest

from polyff.errors import MixedRings
from polyff.mat3 import Mat3
from polyff.rings import ZMod, ring_make
from polyff.universal import (
    GeneratorSet,
    PolyhedronParams,
    make_rhos,
    make_sigmas,
    survey_relations,
    verify_relations,
)

TEST_RINGS = ["zmod:2", "zmod:12", "gf:2", "gf:3", "gf:5", "gf:7^2:t^2+2", "gf:101"]


def _params(ring, x, y):
    return PolyhedronParams(ring.elem(x), ring.elem(y))


def _sample_params(spec, count, seed=5):
    ring = ring_make(spec)
    pool = list(ring.elements())
    rng = random.Random(seed)
    if len(pool) ** 2 <= count:
        return [(PolyhedronParams(x, y)) for x in pool for y in pool]
    return [PolyhedronParams(rng.choice(pool), rng.choice(pool)) for _ in range(count)]


def test_sigma0_independent_of_parameters():
    ring = ZMod(101)
    expected = Mat3.from_rows(ring, [[-1, 0, 0], [2, 1, 0], [0, 0, 1]])
    for params in _sample_params("zmod:101", 10):
        s0, _, _ = make_sigmas(params)
        assert s0 == expected


def test_sigma1_at_x_zero():
    ring = ZMod(7)
    s0, s1, s2 = make_sigmas(_params(ring, 0, 3))
    assert s1 == Mat3.from_rows(ring, [[1, 1, 0], [0, -1, 0], [0, 1, 1]])


def test_sigma2_at_y_one():
    ring = ZMod(7)
    _, _, s2 = make_sigmas(_params(ring, 2, 1))
    assert s2 == Mat3.from_rows(ring, [[1, 0, 0], [0, 1, 0], [0, 0, -1]])


def test_rhos_at_square_tiling_parameters():
    ring = ZMod(101)
    rv, re, rf = make_rhos(_params(ring, 0, -1))
    assert rv == Mat3.from_rows(ring, [[1, 1, 2], [0, -1, -2], [0, 1, 1]])
    assert rf == Mat3.from_rows(ring, [[-1, -1, 0], [2, 1, 0], [0, 1, 1]])
    assert re == Mat3.from_rows(ring, [[-1, 0, 0], [2, 1, 2], [0, 0, -1]])


def test_rho_v_at_cube_parameters():
    ring = ZMod(101)
    rv, _, _ = make_rhos(_params(ring, 0, 0))
    assert rv == Mat3.from_rows(ring, [[1, 1, 1], [0, -1, -1], [0, 1, 0]])


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_rho_e_is_involution(spec):
    for params in _sample_params(spec, 20):
        _, re, _ = make_rhos(params)
        assert re * re == Mat3.identity(params.ring)


def test_relations_at_cube_over_z101():
    report = verify_relations(_params(ZMod(101), 0, 0))
    assert report.all_passed, report.failures()


def test_relations_random_over_gf49():
    for params in _sample_params("gf:7^2:t^2+2", 25):
        assert verify_relations(params).all_passed


def test_relations_exhaustive_over_z2():
    for params in _sample_params("zmod:2", 10**9):
        assert verify_relations(params).all_passed


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_factorizations_match_explicit_rhos(spec):
    for params in _sample_params(spec, 15):
        s0, s1, s2 = make_sigmas(params)
        rv, re, rf = make_rhos(params)
        assert rv == s1 * s2
        assert re == s0 * s2
        assert rf == s0 * s1


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_generator_determinants(spec):
    for params in _sample_params(spec, 15):
        ring = params.ring
        minus_one, one = ring.from_int(-1), ring.one
        for s in make_sigmas(params):
            assert s.det() == minus_one
        for r in make_rhos(params):
            assert r.det() == one


def test_generator_set_bundles_consistently():
    gens = GeneratorSet.from_params(_params(ZMod(5), 0, 0))
    assert gens.rho_v == gens.sigma1 * gens.sigma2
    assert [name for name, _ in gens.rotations()] == ["rho_v", "rho_e", "rho_f"]


def test_params_require_one_ring():
    with pytest.raises(MixedRings):
        PolyhedronParams(ZMod(5).from_int(1), ZMod(7).from_int(1))


def test_survey_exhaustive_over_zmod12():
    survey = survey_relations(ring_make("zmod:12"), trials=144)
    assert survey.exhaustive and survey.pairs_tested == 144
    assert survey.all_passed


def test_survey_sampled_over_gf101():
    survey = survey_relations(ring_make("gf:101"), trials=50)
    assert not survey.exhaustive and survey.pairs_tested == 50
    assert survey.all_passed


def test_survey_is_deterministic():
    a = survey_relations(ring_make("gf:101"), trials=30)
    b = survey_relations(ring_make("gf:101"), trials=30)
    assert a == b
