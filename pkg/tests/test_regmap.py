"""Map reconstruction: counts, genus, dart permutations, map equivalence."""

from __future__ import annotations

from fractions import Fraction

import pytest

from polyff.errors import (
    CayleyNotRetained,
    DegreeTooLarge,
    MissingLabel,
    NonIntegralGenus,
)
from polyff.groupgen import generate
from polyff.regmap import (
    DartModel,
    analyze,
    dart_model,
    genus_exact,
    genus_formula,
    maps_equivalent,
)
from polyff.rings import ring_make
from polyff.universal import PolyhedronParams, make_rhos

from oracles import run_map_oracle


def _run(spec, x, y, **kw):
    ring = ring_make(spec)
    params = PolyhedronParams(ring.elem(x), ring.elem(y))
    group = generate(list(make_rhos(params)), labels=("rho_v", "rho_e", "rho_f"), **kw)
    return group, analyze(group)


# ---------------------------------------------------------------------------
# genus formula

@pytest.mark.parametrize("p, q, E, g", [
    (3, 4, 12, 0),   # cube
    (5, 3, 30, 0),   # icosahedron
    (3, 3, 6, 0),    # tetrahedron
    (4, 4, 8, 1),
    (4, 4, 18, 1),   # any E: the bracket vanishes
    (3, 7, 42, 2),
])
def test_genus_formula(p, q, E, g):
    assert genus_formula(p, q, E) == g
    assert genus_exact(p, q, E) == g


def test_genus_formula_fractional():
    # 13 edges: bracket is -1/6, so 2g - 2 = -13/6 and g = -1/12
    assert genus_formula(3, 4, 13) == Fraction(-1, 12)
    with pytest.raises(NonIntegralGenus):
        genus_exact(3, 4, 13)


def test_genus_formula_rejects_bad_arguments():
    with pytest.raises(ValueError):
        genus_formula(1, 4, 12)


# ---------------------------------------------------------------------------
# analyze

def test_cube_over_gf5_report():
    _, report = _run("gf:5", 0, 0)
    assert (report.p, report.q, report.e_order) == (3, 4, 2)
    assert (report.V, report.E, report.F) == (8, 12, 6)
    assert report.genus == 0 and report.euler == 2
    assert report.group_order == 24 and report.recognized == "S4"
    assert not report.degenerate


def test_square_tiling_over_z3_report():
    _, report = _run("zmod:3", 0, -1)
    assert (report.p, report.q) == (4, 4)
    assert (report.V, report.E, report.F) == (9, 18, 9)
    assert report.genus == 1 and report.euler == 0
    assert report.group_order == 36


def test_icosahedron_over_gf11_report():
    # sqrt5 = 4: x = 6, y = 6
    _, report = _run("gf:11", 6, 6)
    assert (report.p, report.q) == (5, 3)
    assert (report.V, report.E, report.F) == (12, 30, 20)
    assert report.genus == 0
    assert report.recognized == "A5"


def test_reports_match_oracle():
    for spec, x, y, n in (("zmod:3", 0, 2, 3), ("zmod:4", 0, 3, 4), ("gf:7", 4, 5, 7)):
        _, report = _run(spec, x, y)
        oracle = run_map_oracle(x, y % n, n)
        assert report.group_order == oracle["order"]
        assert (report.p, report.q, report.e_order) == (oracle["p"], oracle["q"], oracle["e"])
        if not report.degenerate:
            assert (report.V, report.E, report.F) == (oracle["V"], oracle["E"], oracle["F"])
            assert report.genus == oracle["genus"]


def test_square_tiling_over_z2_degenerate():
    _, report = _run("zmod:2", 0, -1)
    assert report.degenerate
    assert "rho_e" in report.degeneracy_reason
    assert report.V is None and report.genus is None


def test_trivial_parameters_degenerate():
    _, report = _run("zmod:2", 1, 1)
    assert report.degenerate and report.group_order == 1


def test_counts_satisfy_group_identities():
    for spec, x, y in (("gf:5", 0, 0), ("zmod:5", 0, -1), ("gf:11", 6, 6)):
        _, report = _run(spec, x, y)
        assert report.p * report.V == report.group_order
        assert report.q * report.F == report.group_order
        assert 2 * report.E == report.group_order
        assert report.euler == 2 - 2 * report.genus


def test_missing_label():
    ring = ring_make("gf:5")
    params = PolyhedronParams(ring.from_int(0), ring.from_int(0))
    group = generate(list(make_rhos(params)))  # default labels g0, g1, g2
    with pytest.raises(MissingLabel):
        analyze(group)


# ---------------------------------------------------------------------------
# dart model

def test_trivial_dart_model():
    group, _ = _run("zmod:2", 1, 1)
    model = dart_model(group)
    assert model.degree == 1
    assert model.perms() == ((0,), (0,), (0,))
    assert model.to_text() == "darts 1\nv:\ne:\nf:\n"


def test_cube_gf2_dart_model():
    group, _ = _run("gf:2", 0, 0)
    model = dart_model(group)
    assert model.degree == 6
    pv, pe, pf = model.perms()
    assert all(pf[pe[pv[i]]] == i for i in range(6))
    assert model.to_text() == "darts 6\nv: (0 1 4)(2 5 3)\ne: (0 2)(1 3)(4 5)\nf: (0 3)(1 5)(2 4)\n"


def test_square_tiling_z4_dart_involution():
    group, _ = _run("zmod:4", 0, -1)
    model = dart_model(group)
    assert model.degree == 16
    pe = model.perm_e
    assert all(pe[pe[i]] == i and pe[i] != i for i in range(16))


def test_dart_model_requires_cayley():
    group, _ = _run("gf:2", 0, 0, cayley_bound=2)
    with pytest.raises(CayleyNotRetained):
        dart_model(group)


def test_dart_export_round_trip():
    for spec, x, y in (("gf:2", 0, 0), ("zmod:4", 0, -1), ("gf:5", 0, 0)):
        group, _ = _run(spec, x, y)
        model = dart_model(group)
        text = model.to_text()
        parsed = DartModel.from_text(text)
        assert parsed == model
        assert parsed.to_text() == text


# ---------------------------------------------------------------------------
# map equivalence

def test_maps_equivalent_reflexive():
    group, _ = _run("gf:2", 0, 0)
    model = dart_model(group)
    assert maps_equivalent(model, model)


def test_cube_over_two_fields_equivalent():
    a = dart_model(_run("gf:5", 0, 0)[0])
    b = dart_model(_run("gf:7", 0, 0)[0])
    assert maps_equivalent(a, b)
    assert maps_equivalent(b, a)


def test_cube_vs_octahedron_not_equivalent():
    cube = dart_model(_run("gf:5", 0, 0)[0])
    # octahedron: x = 1/2 = 3, y = -1/3 = 3 mod 5
    octa = dart_model(_run("gf:5", 3, 3)[0])
    assert not maps_equivalent(cube, octa)


def test_equivalent_maps_have_equal_fingerprints():
    from polyff.groupgen import order_spectrum
    ga, _ = _run("gf:5", 0, 0)
    gb, _ = _run("gf:7", 0, 0)
    if maps_equivalent(dart_model(ga), dart_model(gb)):
        assert order_spectrum(ga) == order_spectrum(gb)


def test_degree_bound_enforced():
    big = DartModel(10_001, tuple(range(10_001)), tuple(range(10_001)), tuple(range(10_001)))
    with pytest.raises(DegreeTooLarge):
        maps_equivalent(big, big)
