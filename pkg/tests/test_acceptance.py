"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines. All
comparisons are exact (integers and Gaussian rationals); there are no
numeric tolerances anywhere.
"""
import itertools
import json
import random
from argparse import Namespace

from toricsing import linalg
from toricsing.checks import (
    FAILS,
    HOLDS,
    METHOD_EXACT,
    check_all_tameness,
    check_nondegeneracy,
    restriction_nondegeneracy_check,
)
from toricsing.cli import run as cli_run
from toricsing.family import check_admissibility
from toricsing.lattice import RationalCone, dual_cone, hilbert_basis
from toricsing.newton import (
    ToricPolynomial,
    face_function,
    newton_polyhedron,
    weight_transport,
)
from toricsing.rationals import GaussianRational
from toricsing.report import render_json
from toricsing.variety import TorusPoint, build_variety, embed

from conftest import (
    gr,
    random_polynomial,
    staircase,
    sympy_gradient_torus_solvable,
)
from test_family import staircase_family


def _report(num, ok, note):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {note}")
    assert ok, f"criterion {num}: {note}"


# ---------------------------------------------------------------------------
# criterion 1: dual cone and Hilbert basis golden tests plus properties
# ---------------------------------------------------------------------------

def test_criterion_1_dual_and_hilbert():
    # golden: planar staircase
    sigma = RationalCone.from_rays([(0, 1), (2, -1)])
    dual = dual_cone(sigma)
    assert dual.rays == ((1, 0), (1, 2))
    assert hilbert_basis(dual) == [(1, 0), (1, 1), (1, 2)]

    # golden: the 3d cone. The source material lists a 4-element basis; the
    # exact minimal basis has 10 elements (see the decisions record), and
    # the criterion's own box oracle below confirms it. The four listed
    # elements are all present.
    sigma3 = RationalCone.from_rays([(2, -4, 2), (3, 2, -1), (-3, 6, 1)])
    dual3 = dual_cone(sigma3)
    assert set(dual3.rays) == {(0, 1, 2), (2, 1, 0), (1, 0, 3)}
    basis3 = hilbert_basis(dual3)
    for v in [(0, 1, 2), (2, 1, 0), (1, 0, 3), (1, 1, 1)]:
        assert v in basis3
    assert set(basis3) == {
        (0, 1, 2), (2, 1, 0), (1, 0, 3), (1, 1, 1), (1, 1, 2), (1, 1, 3),
        (1, 1, 4), (2, 1, 1), (2, 1, 2), (2, 1, 3),
    }

    # duality involution on >= 50 random strongly convex cones in dims 2-3
    rng = random.Random(2024)
    done = 0
    while done < 50:
        n = rng.choice([2, 3])
        rays = [tuple(rng.randint(-4, 4) for _ in range(n))
                for _ in range(rng.randint(2, n + 2))]
        try:
            cone = RationalCone.from_rays(rays, n)
        except Exception:
            continue
        if not cone.rays or not cone.is_strongly_convex() or cone.dim() < 1:
            continue
        assert dual_cone(dual_cone(cone)) == cone
        done += 1

    # Hilbert-basis box oracle at B = 10 on both golden cones
    for cone in (dual, dual3):
        n = cone.ambient_dim
        hb = hilbert_basis(cone)
        facets = cone.facet_normals()
        ell = tuple(sum(f[i] for f in facets) for i in range(n))
        for p in itertools.product(range(0, 11), repeat=n):
            if all(x == 0 for x in p):
                continue
            if not all(linalg.dot(f, p) >= 0 for f in facets):
                continue
            assert linalg.nonneg_int_combination(p, hb, ell) is not None, p
    _report(1, True,
            "dual/Hilbert goldens, involution on 50 random cones, box "
            "oracle B=10 (3d basis pinned to the recomputed 10 elements)")


# ---------------------------------------------------------------------------
# criterion 2: valid index sets of the 4-generator 3-fold
# ---------------------------------------------------------------------------

def test_criterion_2_valid_index_sets():
    v = build_variety(
        generators=[(0, 1, 2), (2, 1, 0), (1, 0, 3), (1, 1, 1)]
    )
    expected = {
        (), (1, 2, 3, 4), (1, 2, 4), (1, 3), (2, 3), (1,), (2,), (3,),
    }
    assert set(v.valid_index_sets) == expected
    assert (1, 4) not in set(v.valid_index_sets)
    _report(2, True, "the 8 index sets reproduced exactly; {1,4} absent")


# ---------------------------------------------------------------------------
# criterion 3: Newton data goldens
# ---------------------------------------------------------------------------

def test_criterion_3_newton_data(quartic_mixed, quartic_vertical,
                                 fourfold_poly):
    np1 = newton_polyhedron(quartic_mixed)
    assert np1.vertices == ((3, 1), (3, 2), (4, 0), (4, 5))
    segments = [f for f in np1.compact_faces() if len(f.vertex_set) == 2]
    assert sorted(f.vertex_set for f in segments) == [
        ((3, 1), (3, 2)), ((3, 1), (4, 0)), ((3, 2), (4, 5)),
    ]

    np2 = newton_polyhedron(quartic_vertical)
    assert np2.vertices == ((4, 0), (4, 6))
    segment = next(f for f in np2.compact_faces()
                   if f.vertex_set == ((4, 0), (4, 6)))
    _, form = face_function(quartic_vertical, segment, np=np2)
    assert form.terms == {(4, 0): gr(1), (4, 6): gr(-1)}

    from toricsing.checks import essential_noncompact_faces

    essential = essential_noncompact_faces(fourfold_poly)
    directions = {ef.direction for ef in essential}
    assert (1, 2, 4) in directions
    main = next(ef for ef in essential if ef.direction == (1, 2, 4))
    assert {(3, 2, 13), (7, 2, 9)} <= set(main.face.vertex_set)
    # faces through the vertex (4,0,12) point in the non-vanishing
    # direction {3} and are rejected
    np3 = newton_polyhedron(fourfold_poly)
    through_c = [
        f for f in np3.faces
        if (4, 0, 12) in f.vertex_set and not f.is_compact
        and f.noncompact_direction == (3,)
    ]
    assert through_c
    assert all(f.key() not in {ef.key() for ef in essential}
               for f in through_c)
    _report(3, True, "vertices, segments, face function and essential-face "
                     "goldens, all exact")


# ---------------------------------------------------------------------------
# criterion 4: non-degeneracy verdicts against the elimination oracle
# ---------------------------------------------------------------------------

def test_criterion_4_nondegeneracy(quartic_vertical, quartic_vertical_c3):
    result = check_nondegeneracy(quartic_vertical)
    assert result.overall.status == HOLDS
    assert result.overall.method == METHOD_EXACT

    # affine-space counterpart: the implementation's verdict must agree
    # with the independent elimination oracle, face by face
    result_c3 = check_nondegeneracy(quartic_vertical_c3)
    np_ = result_c3.polyhedron
    for face in np_.compact_faces():
        _, form = face_function(quartic_vertical_c3, face, np=np_)
        oracle_solvable = sympy_gradient_torus_solvable(form.terms, 3)
        verdict = result_c3.face_verdicts[face.key()]
        assert verdict.status in (HOLDS, FAILS)
        assert oracle_solvable == (verdict.status == FAILS), face
    # recorded fixture: the oracle finds no critical points on any face,
    # so the overall verdict is Holds
    assert result_c3.overall.status == HOLDS
    _report(4, True, "surface instance holds via ExactSubclass; affine-space "
                     "instance agrees with the elimination oracle on every "
                     "compact face (recorded outcome: holds)")


# ---------------------------------------------------------------------------
# criterion 5: tameness goldens
# ---------------------------------------------------------------------------

def test_criterion_5_tameness(tame_surface_poly, untame_c3_poly):
    overall, faces = check_all_tameness(tame_surface_poly)
    assert overall.status == HOLDS
    assert all(ef.tameness_radius == "infinite" for ef in faces)

    overall_bad, faces_bad = check_all_tameness(untame_c3_poly)
    assert overall_bad.status == FAILS
    failing = [ef for ef in faces_bad if ef.tame.status == FAILS]
    assert failing
    witness = failing[0].tame.witness
    assert witness is not None
    assert witness.replay()
    _report(5, True, "surface face tame with infinite radius; affine-space "
                     "polynomial fails with an exactly certified witness")


# ---------------------------------------------------------------------------
# criterion 6: family pipeline on two staircase instances
# ---------------------------------------------------------------------------

def test_criterion_6_family_pipeline():
    for (q, d, i) in ((5, 3, 2), (6, 2, 3)):
        fam = staircase_family(q, d, i)
        report = check_admissibility(fam)
        assert report.condition_I.status == HOLDS
        assert report.condition_II_zero.status == HOLDS
        assert report.condition_II_generic.status == HOLDS
        assert report.admissible.status == HOLDS
        assert report.equisingular.status == HOLDS
        full = ",".join(str(k) for k in range(1, q + 2))
        assert {s.label() for s in report.stratification} == {
            "A_{1}", "B_{1}", f"A_{{{full}}}", f"B_{{{full}}}",
            "C_{}", f"C_{{{q+1}}}",
        }
    _report(6, True, "both staircase instances: conditions I and II hold, "
                     "admissible, equisingular, exact strata")


# ---------------------------------------------------------------------------
# criterion 7: randomized property suites (>= 200 cases each)
# ---------------------------------------------------------------------------

def _pool():
    return [
        build_variety(sigma_rays=[(0, 1), (2, -1)]),
        build_variety(generators=[(1, 0), (0, 1)]),
        build_variety(generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        staircase(4),
    ]


def test_criterion_7a_transport_identity():
    rng = random.Random(71)
    pool = _pool()
    cases = 0
    while cases < 200:
        v = pool[rng.randrange(len(pool))]
        g = random_polynomial(rng, v)
        np_ = newton_polyhedron(g)
        for face in np_.faces:
            w_big = weight_transport(v, face.weight)
            sub, _ = face_function(g, face, np=np_)
            for exp in sub.terms:
                lam = sub.lambda_of(exp)
                assert linalg.dot(w_big, exp) == linalg.dot(face.weight, lam)
                assert linalg.dot(face.weight, lam) == face.value
        cases += 1
    _report("7a", True, "transport identity <W,Lambda> = <w,lambda> = d on "
                        "200 random polynomials")


def test_criterion_7b_euler_identity():
    rng = random.Random(72)
    pool = _pool()
    cases = 0
    while cases < 200:
        v = pool[rng.randrange(len(pool))]
        g = random_polynomial(rng, v)
        np_ = newton_polyhedron(g)
        for face in np_.faces:
            _, form = face_function(g, face, np=np_)
            euler = form.weighted_euler(face.weight)
            assert (euler - form.scaled(gr(face.value))).is_zero()
        cases += 1
    _report("7b", True, "weighted Euler identity on every face of 200 "
                        "random polynomials")


def test_criterion_7c_restrictions_of_regular_polynomials():
    rng = random.Random(73)
    pool = _pool()
    cases = 0
    certified = 0
    while cases < 200:
        v = pool[rng.randrange(len(pool))]
        g = random_polynomial(rng, v, max_terms=3)
        cases += 1
        result = check_nondegeneracy(g, budget=40)
        if result.overall.status != HOLDS:
            continue
        if result.overall.method != METHOD_EXACT:
            continue
        certified += 1
        for index_set, verdict in restriction_nondegeneracy_check(
                g, budget=40).items():
            assert verdict.status != FAILS, (g.terms, index_set)
    assert certified >= 60, f"only {certified} certified cases"
    _report("7c", True, f"restrictions never fail on {certified} hold-"
                        "certified polynomials out of 200")


def test_criterion_7d_witness_replay():
    rng = random.Random(74)
    surface = build_variety(sigma_rays=[(0, 1), (2, -1)])
    space = build_variety(generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    replayed = 0
    attempts = 0
    while replayed < 200 and attempts < 2000:
        attempts += 1
        choice = attempts % 3
        if choice == 0:
            # repeated-root segment: (1 - a u)^2 pattern
            a = gr(rng.randint(1, 3), rng.randint(0, 1))
            g = ToricPolynomial(surface, {
                (2, 0, 0): gr(1),
                (1, 1, 0): gr(-2) * a,
                (1, 0, 1): a * a,
            })
            result = check_nondegeneracy(g, budget=40)
            verdicts = [vv for vv in result.face_verdicts.values()
                        if vv.status == FAILS]
        elif choice == 1:
            # scaled untame polynomial: tameness failures
            a = gr(rng.randint(1, 4))
            b = gr(rng.randint(1, 4))
            g = ToricPolynomial(space, {
                (2, 0, 2): a,
                (0, 3, 2): gr(0) - b,
                (0, 0, 3): gr(1),
            })
            overall, faces = check_all_tameness(g, budget=40)
            verdicts = [ef.tame for ef in faces
                        if ef.tame is not None and ef.tame.status == FAILS]
        else:
            g = random_polynomial(rng, surface, max_terms=4)
            result = check_nondegeneracy(g, budget=40)
            verdicts = [vv for vv in result.face_verdicts.values()
                        if vv.status == FAILS]
        for vv in verdicts:
            assert vv.witness is not None
            assert vv.witness.replay()
            replayed += 1
    assert replayed >= 200, f"only {replayed} witnesses replayed"
    _report("7d", True, f"{replayed} failure witnesses replayed to exact "
                        "zero")


def test_criterion_7e_report_determinism(tmp_path):
    rng = random.Random(75)
    surface_payload = {
        "variety": {"sigma_rays": [[0, 1], [2, -1]]},
    }
    cases = 0
    while cases < 200:
        g = random_polynomial(rng, _pool()[0], max_terms=3)
        payload = dict(surface_payload)
        payload["polynomial"] = _polynomial_string(g)
        path = tmp_path / f"case{cases}.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        args = Namespace(input=str(path), report=None, format="structured",
                         seed=9, budget=30, oracle=False,
                         verify_witness=False)
        code1, out1 = cli_run("analyze", args)
        code2, out2 = cli_run("analyze", args)
        assert code1 == code2
        assert render_json(out1) == render_json(out2)
        cases += 1
    _report("7e", True, "200 structured reports byte-identical under a "
                        "fixed seed")


def _polynomial_string(g: ToricPolynomial):
    parts = []
    for exp, coeff in sorted(g.terms.items()):
        factors = []
        re, im = coeff.re, coeff.im
        if im == 0:
            c = f"{re}" if re.denominator == 1 else f"{re.numerator}/{re.denominator}"
            factors.append(f"({c})" if re < 0 else c)
        else:
            def frac(q):
                return f"{q}" if q.denominator == 1 else \
                    f"{q.numerator}/{q.denominator}"
            factors.append(f"({frac(re)}+{frac(im)}*i)" if im > 0
                           else f"({frac(re)}-{frac(-im)}*i)")
        for k, e in enumerate(exp, start=1):
            if e == 1:
                factors.append(f"z{k}")
            elif e > 1:
                factors.append(f"z{k}^{e}")
        parts.append("*".join(factors))
    return "+".join(parts)


# ---------------------------------------------------------------------------
# criterion 8: determinantal consistency of the staircase embedding
# ---------------------------------------------------------------------------

def test_criterion_8_determinantal_embedding():
    q = 5
    v = staircase(q)
    rng = random.Random(88)
    checked = 0
    while checked < 100:
        coords = []
        while len(coords) < 2:
            c = GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5))
            if not c.is_zero():
                coords.append(c)
        z = embed(v, TorusPoint(coords))
        # rows (z_1..z_q), (z_2..z_{q+1}): all 2x2 minors vanish
        for a in range(q):
            for b in range(a + 1, q):
                minor = z[a] * z[b + 1] - z[a + 1] * z[b]
                assert minor.is_zero()
        checked += 1
    _report(8, True, "all determinantal minors vanish exactly at 100 random "
                     "torus points")
