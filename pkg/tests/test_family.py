import pytest

from toricsing.checks import FAILS, HOLDS, UNKNOWN
from toricsing.errors import ConditionIRequired
from toricsing.family import (
    FamilyPolynomial,
    canonical_stratification,
    check_admissibility,
    check_condition_I,
    check_condition_II,
    equisingularity_verdict,
    exceptional_parameters,
    is_exceptional,
    specialize,
)
from toricsing.newton import ToricPolynomial
from toricsing.polynomials import Poly
from toricsing.rationals import GaussianRational

from conftest import gr, staircase


def t_poly(*coeffs):
    return Poly([gr(c) for c in coeffs])


def staircase_family(q, d, i):
    """f = z1^2 + t z_i^d + z_{q-1} on the staircase variety."""
    v = staircase(q)
    e1 = tuple(2 if j == 0 else 0 for j in range(q + 1))
    ei = tuple(d if j == i - 1 else 0 for j in range(q + 1))
    eq1 = tuple(1 if j == q - 2 else 0 for j in range(q + 1))
    return FamilyPolynomial(v, {
        e1: t_poly(1),
        ei: t_poly(0, 1),
        eq1: t_poly(1),
    })


def constant_family(g: ToricPolynomial) -> FamilyPolynomial:
    return FamilyPolynomial(
        g.variety, {exp: t_poly(0) + Poly.constant(c)
                    for exp, c in g.terms.items()}
    )


def test_specialize_staircase():
    fam = staircase_family(5, 3, 2)
    zero = specialize(fam, "zero")
    assert set(zero.terms) == {
        (2, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)
    }
    at_one = specialize(fam, GaussianRational(1))
    assert set(at_one.terms) == {
        (2, 0, 0, 0, 0, 0), (0, 3, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)
    }
    generic = specialize(fam, "generic")
    assert len(generic.terms) == 3


def test_exceptional_parameters():
    fam = staircase_family(5, 3, 2)
    values, residuals = exceptional_parameters(fam)
    assert values == [GaussianRational(0)]
    assert not residuals
    assert is_exceptional(fam, 0)
    assert not is_exceptional(fam, 1)


def test_condition_I_staircase_holds():
    fam = staircase_family(5, 3, 2)
    verdict, values, _ = check_condition_I(fam)
    assert verdict.status == HOLDS


def test_condition_I_fails_when_boundary_moves(surface_variety):
    fam = FamilyPolynomial(
        surface_variety,
        {(1, 0, 0): t_poly(1), (0, 0, 1): t_poly(0, 1)},
    )
    verdict, _, _ = check_condition_I(fam)
    assert verdict.status == FAILS
    assert verdict.witness is not None and verdict.witness.replay()


def test_condition_I_constant_family(quartic_vertical):
    fam = constant_family(quartic_vertical)
    verdict, values, residuals = check_condition_I(fam)
    assert verdict.status == HOLDS
    assert not values and not residuals


def test_condition_II_requires_condition_I(surface_variety):
    fam = FamilyPolynomial(
        surface_variety,
        {(1, 0, 0): t_poly(1), (0, 0, 1): t_poly(0, 1)},
    )
    with pytest.raises(ConditionIRequired):
        check_condition_II(fam)


def test_condition_II_staircase():
    fam = staircase_family(5, 3, 2)
    v_zero, v_gen, details = check_condition_II(fam)
    assert v_zero.status == HOLDS
    assert v_gen.status == HOLDS
    assert not details["anomalies"]


def test_condition_II_constant_family_agrees(quartic_vertical):
    fam = constant_family(quartic_vertical)
    v_zero, v_gen, _ = check_condition_II(fam)
    assert v_zero.status == v_gen.status == HOLDS


def test_condition_II_oracle_outcome_for_c3_variant(quartic_vertical_c3):
    # the verdict for the affine-space polynomial equals the recorded
    # outcome of the exact elimination (Holds on every compact face)
    fam = constant_family(quartic_vertical_c3)
    v_zero, v_gen, _ = check_condition_II(fam)
    assert v_zero.status == HOLDS
    assert v_gen.status == HOLDS


def test_generic_failure_witness_is_sampled(surface_variety):
    # the compact segment carries (1 + (1+t) u)^2: degenerate for every t
    fam = FamilyPolynomial(
        surface_variety,
        {
            (2, 0, 0): t_poly(1),
            (1, 1, 0): t_poly(2, 2),
            (1, 0, 1): t_poly(1, 2, 1),
        },
    )
    verdict, _, _ = check_condition_I(fam)
    assert verdict.status == HOLDS
    v_zero, v_gen, details = check_condition_II(fam)
    assert v_zero.status == FAILS
    assert v_gen.status == FAILS
    assert v_gen.witness is not None and v_gen.witness.replay()
    assert "witness_sampled_at" in v_gen.trace
    assert not details["anomalies"]


def test_admissibility_staircase_instances():
    for (q, d, i) in ((5, 3, 2), (6, 2, 3)):
        fam = staircase_family(q, d, i)
        report = check_admissibility(fam)
        assert report.condition_I.status == HOLDS
        assert report.condition_II_zero.status == HOLDS
        assert report.condition_II_generic.status == HOLDS
        assert report.uniform_tameness == "infinite"
        assert report.admissible.status == HOLDS
        assert report.equisingular.status == HOLDS
        labels = {s.label() for s in report.stratification}
        full = ",".join(str(k) for k in range(1, q + 2))
        assert labels == {
            "A_{1}", "B_{1}",
            f"A_{{{full}}}", f"B_{{{full}}}",
            "C_{}", f"C_{{{q+1}}}",
        }


def test_stratification_dimensions():
    fam = staircase_family(5, 3, 2)
    strata = canonical_stratification(fam)
    by_label = {s.label(): s for s in strata}
    assert by_label["A_{1}"].dim == 1
    assert by_label["B_{1}"].dim == 2
    assert by_label["A_{1,2,3,4,5,6}"].dim == 2
    assert by_label["B_{1,2,3,4,5,6}"].dim == 3
    assert by_label["C_{}"].dim == 1
    assert by_label["C_{6}"].dim == 2
    # B sits one dimension above A on every index set
    for s in strata:
        if s.kind == "A":
            twin = by_label["B" + s.label()[1:]]
            assert twin.dim == s.dim + 1


def test_stratification_fourfold_constant_family(fourfold_poly):
    fam = constant_family(fourfold_poly)
    strata = canonical_stratification(fam)
    labels = {s.label() for s in strata}
    assert "C_{1,2,4}" in labels


def test_inadmissible_family_from_untame_polynomial(untame_c3_poly):
    fam = constant_family(untame_c3_poly)
    report = check_admissibility(fam)
    assert report.admissible.status == FAILS
    assert report.equisingular.status == UNKNOWN
    assert report.admissible.witness is not None
    assert report.admissible.witness.replay()


def test_unknown_propagates_to_equisingularity(space_c3):
    # five coplanar support points: outside the exact subclass, so the face
    # verdict is unknown and so is everything downstream
    g = ToricPolynomial(
        space_c3,
        {
            (4, 0, 0): gr(1), (0, 4, 0): gr(1), (0, 0, 4): gr(1),
            (2, 1, 1): gr(1), (1, 2, 1): gr(1),
        },
    )
    fam = constant_family(g)
    report = check_admissibility(fam)
    assert report.admissible.status == UNKNOWN
    assert report.equisingular.status == UNKNOWN


def test_condition_I_fails_blocks_all(surface_variety):
    fam = FamilyPolynomial(
        surface_variety,
        {(1, 0, 0): t_poly(1), (0, 0, 1): t_poly(0, 1)},
    )
    report = check_admissibility(fam)
    assert report.admissible.status == FAILS
    assert report.equisingular.status == UNKNOWN
    assert report.stratification == []


def test_equisingularity_verdict_is_admissibility(quartic_vertical):
    fam = constant_family(quartic_vertical)
    report = equisingularity_verdict(fam)
    assert report.admissible.status == report.equisingular.status == HOLDS


def test_specialization_coherence_outside_exceptional_values():
    from toricsing.family import is_exceptional
    from toricsing.newton import torus_form

    fams = [
        staircase_family(5, 3, 2),
        staircase_family(6, 2, 3),
    ]
    samples = [GaussianRational(x) for x in (1, -1, 2, 3)] + [
        GaussianRational("1/2"), GaussianRational(0, 1)
    ]
    for fam in fams:
        generic_supp = set(torus_form(specialize(fam, "generic")).support)
        for t0 in samples:
            if is_exceptional(fam, t0):
                continue
            supp = set(torus_form(specialize(fam, t0)).support)
            assert supp == generic_supp


def test_strata_cover_index_sets_exactly_once():
    from toricsing.checks import vanishing_split

    fam = staircase_family(5, 3, 2)
    strata = canonical_stratification(fam)
    zero = specialize(fam, "zero")
    nv, vv = vanishing_split(zero)
    a_sets = sorted(s.index_set for s in strata if s.kind == "A")
    b_sets = sorted(s.index_set for s in strata if s.kind == "B")
    c_sets = sorted(s.index_set for s in strata if s.kind == "C")
    assert a_sets == b_sets == sorted(map(tuple, nv))
    assert c_sets == sorted(map(tuple, vv))
