import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import NONNORMAL_GENS, orthant_gens
from helpers import apply_matrix, bfs_elements, random_unimodular
from serrecheck.cone import face_intersection_of
from serrecheck.exactlin import dot, lattice_member
from serrecheck.semigroup import (
    GroupNotFull,
    PointedRequired,
    contains,
    face_group,
    new_semigroup,
)
from serrecheck.serre import (
    FACET_COUNT,
    FAILS,
    GROUP_EQUALITY,
    HOLDS,
    INCONCLUSIVE,
    check_R,
    check_face,
    find_gammas,
)

SIGMA2 = (0, 1, 0)
SIGMA3 = (0, 0, 1)
SIGMA4 = (3, -1, -1)


def face_by_forms(s, *forms):
    idx = {f.coeffs: i for i, f in enumerate(s.cone.facets)}
    return face_intersection_of(s.cone, {idx[c] for c in forms})


def witness_by_form(s, verdict):
    forms = [s.cone.facets[i].coeffs for i in sorted(verdict.face.facet_set)]
    return dict(zip(forms, verdict.gammas))


def test_codim2_faces_hold_with_published_witnesses(nonnormal_sgp):
    s = nonnormal_sgp
    expected = {
        (SIGMA2, SIGMA3): {SIGMA2: (1, 1, 0), SIGMA3: (1, 0, 1)},
        (SIGMA2, SIGMA4): {SIGMA2: (1, 1, 2), SIGMA4: (1, 0, 2)},
        (SIGMA3, SIGMA4): {SIGMA3: (1, 2, 1), SIGMA4: (1, 2, 0)},
    }
    for pair, want in expected.items():
        verdict = check_face(s, face_by_forms(s, *pair))
        assert verdict.status == HOLDS
        assert verdict.facet_count_ok and verdict.group_ok
        assert witness_by_form(s, verdict) == want


def test_witnesses_satisfy_unit_pattern(nonnormal_sgp):
    s = nonnormal_sgp
    report = check_R(s, 2)
    for v in report.verdicts:
        forms = [s.cone.facets[i] for i in sorted(v.face.facet_set)]
        for j, gamma in enumerate(v.gammas):
            assert contains(s, gamma)
            assert [f(gamma) for f in forms] == [
                1 if i == j else 0 for i in range(len(forms))
            ]


def test_r2_holds_overall(nonnormal_sgp):
    assert check_R(nonnormal_sgp, 2).overall == HOLDS


def test_r3_is_inconclusive_at_the_apex(nonnormal_sgp):
    report = check_R(nonnormal_sgp, 3)
    assert report.overall == INCONCLUSIVE
    apex = [v for v in report.verdicts if v.k == 3]
    assert len(apex) == 1
    assert apex[0].facet_count_ok and apex[0].group_ok
    assert apex[0].status == INCONCLUSIVE


def test_apex_witness_absence_confirmed_by_enumeration(nonnormal_sgp):
    # no semigroup element of bounded size hits the unit pattern either,
    # matching the generator-scan verdict
    s = nonnormal_sgp
    forms = [f.coeffs for f in s.cone.facets]
    elements = bfs_elements(s, 12 * max(dot(s.theta, g) for g in s.generators))
    for j in range(3):
        target = tuple(1 if i == j else 0 for i in range(3))
        assert not any(
            tuple(dot(f, x) for f in forms) == target for x in elements
        )


def test_orthant_holds_at_every_level():
    for n in (2, 3):
        s = new_semigroup(orthant_gens(n))
        for level in range(1, n + 1):
            assert check_R(s, level).overall == HOLDS


def test_flat_plane_semigroup_is_inconclusive_at_apex():
    # generators (1,0), (1,2), (1,3): both lattice conditions hold at the
    # apex but no witness pair exists, and enumeration confirms that
    s = new_semigroup(((1, 0), (1, 2), (1, 3)))
    report = check_R(s, 2)
    assert report.overall == INCONCLUSIVE
    apex = [v for v in report.verdicts if v.k == 2]
    assert len(apex) == 1
    assert apex[0].facet_count_ok and apex[0].group_ok
    assert apex[0].status == INCONCLUSIVE
    assert not contains(s, (1, 1))

    forms = [f.coeffs for f in s.cone.facets]
    elements = bfs_elements(s, 12 * max(dot(s.theta, g) for g in s.generators))
    for j in range(2):
        target = tuple(1 if i == j else 0 for i in range(2))
        assert not any(
            tuple(dot(f, x) for f in forms) == target for x in elements
        )


def test_group_equality_failure_detected():
    # on the facet y = 0 only (2,0) lies in S, a proper sublattice of the
    # kernel of the second coordinate form
    s = new_semigroup(((2, 0), (1, 2), (0, 1)))
    report = check_R(s, 1)
    assert report.overall == FAILS
    failing = [v for v in report.verdicts if v.status == FAILS]
    assert len(failing) == 1
    assert failing[0].reason == GROUP_EQUALITY
    # monotone: failure persists at higher levels
    assert check_R(s, 2).overall == FAILS


def test_facet_count_failure_detected():
    # cone over a unit square: the apex lies on four facets, not three
    s = new_semigroup(((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)))
    report = check_R(s, 3)
    assert report.overall == FAILS
    apex = [v for v in report.verdicts if v.k == 3]
    assert apex[0].status == FAILS
    assert apex[0].reason == FACET_COUNT
    assert check_R(s, 2).overall == HOLDS


def test_find_gammas_orthant():
    s = new_semigroup(orthant_gens(2))
    forms = [f for f in s.cone.facets if f.coeffs == (1, 0)]
    assert find_gammas(s, forms) == ((1, 0),)


def test_find_gammas_absent_returns_none(nonnormal_sgp):
    s = nonnormal_sgp
    assert find_gammas(s, s.cone.facets) is None


def test_check_face_rejects_whole_cone(nonnormal_sgp):
    whole = face_intersection_of(nonnormal_sgp.cone, ())
    with pytest.raises(ValueError):
        check_face(nonnormal_sgp, whole)


def test_check_R_validates_level(nonnormal_sgp):
    with pytest.raises(ValueError):
        check_R(nonnormal_sgp, 0)
    with pytest.raises(ValueError):
        check_R(nonnormal_sgp, 4)


def test_check_R_requires_pointed():
    s = new_semigroup(((1, 0), (-1, 0), (0, 1)))
    with pytest.raises(PointedRequired):
        check_R(s, 1)


def test_unique_decomposition_over_witness_basis(nonnormal_sgp):
    # whenever a face holds, every bounded element splits as its sigma
    # coordinates over the witnesses plus a face-group member
    s = nonnormal_sgp
    elements = bfs_elements(s, 10 * max(dot(s.theta, g) for g in s.generators))
    for v in check_R(s, 2).verdicts:
        assert v.status == HOLDS
        forms = [s.cone.facets[i].coeffs for i in sorted(v.face.facet_set)]
        grp = face_group(s, v.face)
        for x in elements:
            coords = [dot(f, x) for f in forms]
            assert all(c >= 0 for c in coords)
            rest = x
            for c, gamma in zip(coords, v.gammas):
                rest = tuple(a - c * b for a, b in zip(rest, gamma))
            assert lattice_member(rest, grp)


graded_gens = st.lists(
    st.tuples(st.just(1), st.integers(-2, 3), st.integers(-2, 3)),
    min_size=3,
    max_size=6,
).map(tuple)


@given(graded_gens, st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_level1_verdict_stable_under_permutation_and_coordinate_change(gens, seed):
    try:
        base = new_semigroup(gens)
    except GroupNotFull:
        assume(False)
    rng = random.Random(seed)
    overall = check_R(base, 1).overall

    shuffled = list(gens)
    rng.shuffle(shuffled)
    assert check_R(new_semigroup(tuple(shuffled)), 1).overall == overall

    u = random_unimodular(rng, 3)
    moved = new_semigroup(apply_matrix(gens, u))
    assert check_R(moved, 1).overall == overall
