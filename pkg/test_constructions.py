# test_constructions.py

"""
Tests für Basisfamilie, Hitting-Sets, Chow-Familie, Rank Extractor,
Reduktion, Hauptfamilie und Noether-Abbildungen.
"""
from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np
import pytest

from constructions import (
    AFFINE,
    FamilyParams,
    Provenance,
    SubspaceFamily,
    affine_restriction,
    ambient_reduction,
    basic_family,
    chow_family,
    epsilon_hitting_set,
    extractor_matrix,
    extractor_size,
    greedy_evading_member,
    infinity_restriction,
    main_family,
    noether_maps,
    rank_extractor_family,
    sample_sets,
    slicer_witness,
    spanning_points,
    vandermonde_form,
)
from errors import EmptyFamily, FieldTooSmall, InvalidParameters, NoWitness, ShapeMismatch
from field import FieldConfig
from groebner import evades
from linalg import forms_to_basis, point_on_subspace, rank_rows
from poly import MultiPoly, evaluate
from verify import (
    check_maps,
    count_meeting,
    curve_miss_oracle,
    family_failure_fraction,
    gen_affine_arrangement,
    gen_hyperbola,
    gen_linear_arrangement,
    gen_rational_normal_curve,
    hitting_failure_fraction,
    linalg_evades,
    random_subspace,
)

HALF = Fraction(1, 2)


# ==============================================================================
# PARAMETER UND STICHPROBENMENGEN
# ==============================================================================
def test_family_params_validation():
    assert FamilyParams(3, 2, 1).codim == 2
    assert FamilyParams(3, 2, 1, "1/4").eps == Fraction(1, 4)
    for bad in [(0, 1, 0), (3, 0, 1), (3, 1, 3), (3, 1, -1)]:
        with pytest.raises(InvalidParameters):
            FamilyParams(*bad)
    with pytest.raises(InvalidParameters):
        FamilyParams(3, 1, 1, Fraction(1))
    with pytest.raises(InvalidParameters):
        FamilyParams(3, 1, 1, kind='weighted')


def test_sample_sets(small_field, tiny_field):
    sets = sample_sets(2, 1, 2, small_field)
    assert [[g.value for g in B] for B in sets] == [[1, 2, 3], [4, 5, 6]]
    with pytest.raises(FieldTooSmall):
        sample_sets(2, 1, 2, tiny_field)


def test_vandermonde_form(small_field):
    assert vandermonde_form(small_field(2), 2).coeffs == (1, 2, 4)
    assert vandermonde_form(small_field(0), 3).coeffs == (1, 0, 0, 0)


# ==============================================================================
# BASISFAMILIE
# ==============================================================================
@pytest.mark.parametrize("n,d,k,size", [
    (1, 1, 0, 2),
    (2, 1, 0, 9),
    (2, 2, 1, 5),
    (3, 1, 1, 16),
    (3, 2, 1, 49),
])
def test_basic_family_size(small_field, n, d, k, size):
    H = basic_family(FamilyParams(n, d, k), small_field)
    assert len(H) == size
    assert all(W.dim_k == k for W in H.subspaces)
    assert H.provenance.construction == 'basic'
    assert H.provenance.notes == {'block_size': n * d + 1, 'sample_sets': n - k}
    assert H.degenerate_count() == 0


def test_basic_family_order(small_field):
    H = basic_family(FamilyParams(2, 1, 0), small_field)
    assert [m.index for m in H][:4] == [(1, 4), (1, 5), (1, 6), (2, 4)]


def test_basic_family_rejects_eps(small_field):
    with pytest.raises(InvalidParameters):
        basic_family(FamilyParams(2, 1, 0, HALF), small_field)


def test_basic_family_field_too_small(tiny_field):
    with pytest.raises(FieldTooSmall) as info:
        basic_family(FamilyParams(3, 2, 1), tiny_field)
    assert info.value.exit_code == 2


def test_affine_basic_family(small_field):
    H = basic_family(FamilyParams(2, 1, 0, kind=AFFINE), small_field)
    assert len(H) == 9
    for m in H:
        a, b = m.index
        W = m.subspace
        assert W.dim_k == 0
        x1, x2 = W.base_point
        assert (1 + a * x1 + a * a * x2) % 101 == 0
        assert (1 + b * x1 + b * b * x2) % 101 == 0


@pytest.mark.parametrize("n,d,k", [(2, 1, 0), (2, 2, 1), (3, 1, 1), (3, 1, 0)])
def test_basic_family_evades_arrangements(small_field, n, d, k):
    H = basic_family(FamilyParams(n, d, k), small_field)
    for seed in range(3):
        V = gen_linear_arrangement(n, n - k - 1, d, seed, small_field)
        assert any(linalg_evades(V, W) for W in H.subspaces)


@pytest.mark.slow
@pytest.mark.parametrize("n,d,k", [(n, d, k) for n in range(1, 5) for d in (1, 2) for k in range(n)])
def test_basic_family_evades_grid(small_field, n, d, k):
    H = basic_family(FamilyParams(n, d, k), small_field)
    for dim in range(n - k):
        V = gen_linear_arrangement(n, dim, d, seed=n * 100 + d * 10 + k, field=small_field)
        assert any(linalg_evades(V, W) for W in H.subspaces)


# ==============================================================================
# ZEUGEN
# ==============================================================================
def test_slicer_witness(small_field):
    (B,) = sample_sets(2, 1, 1, small_field)
    assert slicer_witness([(1, 0, 0)], B).value == 1
    assert slicer_witness([(0, 1, 0)], B).value == 1
    assert slicer_witness([(1, 100, 0)], B).value == 2
    with pytest.raises(NoWitness):
        slicer_witness([(1, 100, 0), (2, 100, 0), (3, 100, 0)], B)
    with pytest.raises(InvalidParameters):
        slicer_witness([(0, 0, 0)], B)
    with pytest.raises(NoWitness):
        slicer_witness([(1, 0, 0)], [])


def test_greedy_evading_member(small_field):
    V = gen_linear_arrangement(3, 1, 2, seed=5, field=small_field)
    index = greedy_evading_member(V, 3, 2, 1, small_field)
    assert 1 <= index[0] <= 7
    assert 8 <= index[1] <= 14
    W = forms_to_basis([vandermonde_form(small_field(g), 3) for g in index], 3)
    assert linalg_evades(V, W)
    H = basic_family(FamilyParams(3, 2, 1), small_field)
    assert index in {m.index for m in H}


# ==============================================================================
# HITTING-SETS UND CHOW-FAMILIE
# ==============================================================================
def test_epsilon_hitting_set(small_field):
    line = epsilon_hitting_set(1, 2, HALF, small_field)
    assert len(line) == 6
    assert line.points[:3] == ((1,), (2,), (3,))
    plane = epsilon_hitting_set(2, 1, HALF, small_field)
    assert len(plane) == 8
    assert plane.points[2] == (3, 9)
    with pytest.raises(FieldTooSmall):
        epsilon_hitting_set(3, 3, Fraction(1, 4), small_field)
    with pytest.raises(InvalidParameters):
        epsilon_hitting_set(2, 1, Fraction(3, 2), small_field)


def test_chow_family(small_field):
    H = chow_family(FamilyParams(2, 1, 0, HALF), small_field)
    assert len(H) == 17
    assert H.provenance.notes == {'hitting_set_size': 18, 'pruned': 1}
    first = H.members[0]
    assert first.index == (2, 8)
    assert first.subspace.basis == ((16, 91, 1),)


def test_chow_family_requires_projective_eps(small_field):
    with pytest.raises(InvalidParameters):
        chow_family(FamilyParams(2, 1, 0), small_field)
    with pytest.raises(InvalidParameters):
        chow_family(FamilyParams(2, 1, 0, HALF, AFFINE), small_field)


# ==============================================================================
# RANK EXTRACTOR UND REDUKTION
# ==============================================================================
def test_extractor_basics():
    assert extractor_size(6, 2) == 9
    assert extractor_size(6, 2, HALF) == 24
    assert extractor_matrix(2, 2, 1, 101) == [(1, 1, 1), (1, 2, 4)]
    points = spanning_points(2, 2, 1, 101)
    assert points == [(1, 0, 0), (0, 1, 0), (2, 98, 1)]
    assert rank_rows(points, 101) == 3


def test_rank_extractor_family(small_field):
    H = rank_extractor_family(2, 1, field=small_field)
    assert len(H) == 2
    assert [m.index for m in H] == [(2,), (3,)]
    assert H.members[0].subspace.basis == ((2, 98, 1),)
    assert H.provenance.notes == {'m': 1, 'size': 2, 'skipped': 1}
    with pytest.raises(InvalidParameters):
        rank_extractor_family(2, 2, field=small_field)


def test_rank_extractor_field_too_small(tiny_field):
    with pytest.raises(FieldTooSmall):
        rank_extractor_family(2, 1, HALF, tiny_field)


def test_rank_extractor_meets_few_members(small_field):
    H = rank_extractor_family(6, 2, HALF, small_field)
    assert len(H) == 24
    planes = [random_subspace(6, 2, seed, small_field) for seed in range(4)]
    planes.append(forms_to_basis(
        [vandermonde_form(small_field(g), 6) for g in (1, 2, 3, 4)], 6))
    for X in planes:
        assert count_meeting(H, X) <= 12


def _empty_family(field, n, d, k):
    return SubspaceFamily(FamilyParams(n, d, k), field, (), Provenance('basic', field.prime))


def test_ambient_reduction_shape_checks(small_field):
    with pytest.raises(ShapeMismatch):
        ambient_reduction(_empty_family(small_field, 2, 1, 0), 4, 1, 2, field=small_field)
    with pytest.raises(ShapeMismatch):
        ambient_reduction(_empty_family(small_field, 3, 2, 0), 5, 2, 2, field=small_field)
    with pytest.raises(ShapeMismatch):
        ambient_reduction(_empty_family(small_field, 4, 2, 1), 4, 2, 1, field=small_field)


# ==============================================================================
# HAUPTFAMILIE
# ==============================================================================
def test_main_family_direct_branch(small_field):
    H = main_family(FamilyParams(3, 2, 1, HALF), small_field)
    assert H.provenance.construction == 'main'
    assert H.provenance.branch == 'direct'
    assert H.provenance.notes['source'] == 'chow'
    assert H.provenance.notes['hitting_set_size'] == 98
    assert len(H) == 97


def test_main_family_linear_reduction(small_field):
    H = main_family(FamilyParams(10, 1, 8, HALF), small_field)
    assert H.provenance.construction == 'main'
    assert H.provenance.branch == 'reduction'
    assert H.provenance.notes['source'] == 'rank_extractor'
    assert len(H) == 36
    assert all(W.dim_k == 8 for W in H.subspaces)
    assert H.params == FamilyParams(10, 1, 8, HALF)


def test_main_family_reduction(small_field):
    H = main_family(FamilyParams(5, 2, 3, HALF), small_field)
    notes = H.provenance.notes
    assert H.provenance.construction == 'main'
    assert H.provenance.branch == 'reduction'
    assert notes['extractor_size'] == 36
    assert notes['inner_size'] == 96
    assert notes['extractor_eps'] == Fraction(1, 4)
    assert notes['inner_eps'] == Fraction(1, 4)
    assert len(H) == 36 * 96
    assert H.degenerate_count() == 0
    assert all(W.dim_k == 3 for W in H.subspaces[:50])
    assert H.members[0].index == (2, 2, 32)


def test_main_family_requires_eps(small_field):
    with pytest.raises(InvalidParameters):
        main_family(FamilyParams(3, 2, 1), small_field)


# ==============================================================================
# AFFINE UND UNENDLICHE EINSCHRÄNKUNG
# ==============================================================================
def test_affine_restriction(small_field):
    H = chow_family(FamilyParams(2, 1, 0, Fraction(1, 5)), small_field)
    A = affine_restriction(H)
    assert A.params.kind == AFFINE
    assert A.params.eps == HALF
    assert len(A) == len(H) == 44
    assert A.provenance.notes['projective_eps'] == Fraction(1, 5)
    assert A.provenance.notes['dropped'] == 0
    with pytest.raises(InvalidParameters):
        affine_restriction(A)
    with pytest.raises(InvalidParameters):
        affine_restriction(chow_family(FamilyParams(2, 1, 0, HALF), small_field))


def test_affine_restriction_drops_members_at_infinity(small_field):
    H = rank_extractor_family(2, 1, field=small_field)
    at_infinity = forms_to_basis([vandermonde_form(small_field(0), 2), vandermonde_form(small_field(1), 2)], 2)
    member = H.members[0]
    family = SubspaceFamily(H.params, small_field,
                            (member, type(member)((0, 1), at_infinity)), H.provenance)
    A = affine_restriction(family)
    assert len(A) == 1
    assert A.provenance.notes['dropped'] == 1
    with pytest.raises(EmptyFamily):
        affine_restriction(SubspaceFamily(H.params, small_field,
                                          (type(member)((0, 1), at_infinity),), H.provenance))


def test_affine_main_family(small_field):
    A = main_family(FamilyParams(2, 1, 0, HALF, AFFINE), small_field)
    assert A.params == FamilyParams(2, 1, 0, HALF, AFFINE)
    assert A.provenance.construction == 'main'
    assert A.provenance.notes['projective_eps'] == Fraction(1, 5)
    assert len(A) == 44


def test_infinity_restriction(small_field):
    H = chow_family(FamilyParams(2, 1, 1, HALF), small_field)
    assert len(H) == 6
    H_inf = infinity_restriction(H)
    assert H_inf.params == FamilyParams(1, 1, 0, HALF)
    assert H_inf.provenance.branch == 'infinity'
    for (g,), W in zip((m.index for m in H_inf), H_inf.subspaces):
        assert W.dim_k == 0
        assert point_on_subspace((101 - g, 1), W)
    with pytest.raises(InvalidParameters):
        infinity_restriction(chow_family(FamilyParams(2, 1, 0, HALF), small_field))


# ==============================================================================
# NOETHER-ABBILDUNGEN
# ==============================================================================
def test_noether_maps_trivial_cases(small_field):
    (identity,) = noether_maps(2, 1, 2, field=small_field)
    assert identity.matrix == ((1, 0), (0, 1))
    (empty,) = noether_maps(2, 1, 0, field=small_field)
    assert empty.r == 0 and empty.matrix == ()
    with pytest.raises(InvalidParameters):
        noether_maps(2, 1, 3, field=small_field)


def test_noether_maps_on_hyperbola(small_field):
    V = gen_hyperbola(2, small_field)
    maps = noether_maps(2, 2, 1, HALF, small_field)
    assert len(maps) == 6
    assert [m.matrix for m in maps][:2] == [((1, 1),), ((1, 2),)]
    verdicts, fraction = check_maps(maps, V)
    assert all(verdicts)
    assert fraction == 1

    exact = noether_maps(2, 2, 1, field=small_field)
    assert len(exact) == 3
    assert check_maps(exact, V)[1] == 1


def test_noether_centers_are_read_in_infinity_coordinates(small_field):
    maps = noether_maps(3, 2, 1, HALF, small_field)
    centers = main_family(FamilyParams(2, 2, 1, HALF), small_field)
    assert len(maps) == len(centers) == 10
    assert [m.index for m in maps] == [m.index for m in centers]
    assert [m.matrix for m in maps] == [tuple(f.coeffs for f in W.forms) for W in centers.subspaces]
    assert maps[1].matrix == ((1, 2, 4),)


# ==============================================================================
# VOLLSTÄNDIGKEIT DER BASISFAMILIE
# ==============================================================================
def random_form(rng, field, num_vars, degree):
    """Zufälliges homogenes Polynom ungleich null vom Grad `degree`."""
    monomials = []
    for chosen in combinations_with_replacement(range(num_vars), degree):
        exp = [0] * num_vars
        for i in chosen:
            exp[i] += 1
        monomials.append(tuple(exp))
    count = int(rng.integers(1, min(5, len(monomials)) + 1))
    picked = rng.choice(len(monomials), size=count, replace=False)
    coeffs = rng.integers(1, field.prime, size=count)
    return MultiPoly(field, num_vars, {monomials[int(i)]: int(c) for i, c in zip(picked, coeffs)})


@pytest.mark.parametrize("trials", [60, pytest.param(1000, marks=pytest.mark.slow)])
def test_basic_points_miss_every_hypersurface(small_field, trials):
    rng = np.random.default_rng(31)
    points = {}
    for _ in range(trials):
        n, d = (int(x) for x in rng.integers(1, 4, size=2))
        if (n, d) not in points:
            points[(n, d)] = [W.basis[0] for W in basic_family(FamilyParams(n, d, 0), small_field).subspaces]
        f = random_form(rng, small_field, n + 1, int(rng.integers(1, d + 1)))
        assert any(evaluate(f, q) for q in points[(n, d)])


@pytest.mark.parametrize("n,d,k", [(3, 2, 1), (4, 2, 2), (5, 1, 3), (5, 2, 4), (5, 1, 4)])
def test_basic_family_avoids_every_arrangement(small_field, n, d, k):
    H = basic_family(FamilyParams(n, d, k), small_field)
    by_index = {m.index: m.subspace for m in H}
    for seed in range(10):
        V = gen_linear_arrangement(n, n - k - 1, 1 + seed % d, seed, small_field)
        index = greedy_evading_member(V, n, d, k, small_field)
        assert linalg_evades(V, by_index[index])


# ==============================================================================
# ABNAHMELÄUFE
# ==============================================================================
@pytest.mark.slow
def test_basic_family_sizes_full_grid(small_field):
    for n in range(2, 5):
        for d in range(1, 4):
            for k in range(n):
                H = basic_family(FamilyParams(n, d, k), small_field)
                assert len(H) == (n * d + 1) ** (n - k), (n, d, k)


@pytest.mark.slow
def test_hitting_set_bound_on_random_polynomials():
    field = FieldConfig(1009)
    rng = np.random.default_rng(4)
    quarter = Fraction(1, 4)
    hitting = {m: epsilon_hitting_set(m, 3, quarter, field) for m in (1, 2, 3)}
    for _ in range(1000):
        m = int(rng.integers(1, 4))
        count = int(rng.integers(1, 7))
        exps = rng.integers(0, 4, size=(count, m))
        coeffs = rng.integers(1, 1009, size=count)
        f = MultiPoly(field, m, {tuple(int(e) for e in exp): int(c) for exp, c in zip(exps, coeffs)})
        assert hitting_failure_fraction(f, hitting[m]) <= quarter


@pytest.fixture(scope="module")
def arrangement_field():
    return FieldConfig(32003)


@pytest.fixture(scope="module")
def plane_arrangements(arrangement_field):
    return [gen_linear_arrangement(4, 2, 1 + seed % 3, seed, arrangement_field) for seed in range(200)]


@pytest.mark.slow
def test_basic_family_exact_on_plane_arrangements(arrangement_field, plane_arrangements):
    H = basic_family(FamilyParams(4, 3, 1), arrangement_field)
    assert len(H) == 13 ** 3
    for V in plane_arrangements:
        assert any(linalg_evades(V, W) for W in H.subspaces), V.name


@pytest.mark.slow
def test_chow_family_sound_on_plane_arrangements(arrangement_field, plane_arrangements):
    tenth = Fraction(1, 10)
    H = chow_family(FamilyParams(4, 3, 1, tenth), arrangement_field)
    for V in plane_arrangements:
        report = family_failure_fraction(H, V)
        assert report.fraction <= tenth, V.name


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_basic_family_misses_rational_normal_curve(small_field, n):
    V = gen_rational_normal_curve(n, small_field)
    H = basic_family(FamilyParams(n, n, n - 2), small_field)
    missing = [W for W in H.subspaces if curve_miss_oracle(V, W)]
    assert missing
    if n == 3:
        assert evades(V, missing[0])
        for W in H.subspaces[:10]:
            assert evades(V, W) == curve_miss_oracle(V, W)


@pytest.mark.slow
def test_rank_extractor_budget_on_random_planes():
    field = FieldConfig(1009)
    exact = rank_extractor_family(6, 2, field=field)
    eighth = Fraction(1, 8)
    sampled = rank_extractor_family(6, 2, eighth, field)
    assert len(sampled) == 96
    for seed in range(200):
        X = random_subspace(6, 2, seed, field)
        assert count_meeting(exact, X) <= 12
        assert Fraction(count_meeting(sampled, X), len(sampled)) <= eighth


@pytest.mark.slow
def test_affine_restriction_strongly_evades():
    field = FieldConfig(1009)
    A = affine_restriction(chow_family(FamilyParams(3, 2, 1, Fraction(1, 5)), field))
    assert A.params.eps == HALF
    varieties = [gen_affine_arrangement(3, 1, 1 + seed % 2, seed, field) for seed in range(100)]
    varieties.append(gen_hyperbola(3, field))
    for V in varieties:
        report = family_failure_fraction(A, V)
        assert report.fraction <= HALF, V.name
