"""Singularity checks: non-degeneracy, essential faces, local tameness.

Every check returns a three-valued Verdict. Fails verdicts carry an exact
witness (a certified torus point, possibly with coordinates in an explicit
algebraic extension) together with the violated equations, so they can be
replayed by substitution. Holds verdicts carry the criterion that fired.
"""
from __future__ import annotations

from .errors import AnomalyDetected, FaceNotEssential, InvalidIndexSet
from . import linalg, solvers
from .lattice import in_cone_oracle
from .linalg import dot
from .newton import (
    LaurentForm,
    ToricPolynomial,
    face_function,
    newton_polyhedron,
    torus_form,
)
from .rationals import GaussianRational
from .variety import build_variety

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown"

METHOD_EXACT = "ExactSubclass"
METHOD_SYMBOLIC = "SymbolicCriterion"
METHOD_SEARCH = "RandomSearchCertified"
METHOD_CAPPED = "Capped"

_SOLVER_METHODS = {
    "monomial-face": METHOD_EXACT,
    "collinear-exact": METHOD_EXACT,
    "planar-trinomial": METHOD_EXACT,
    "planar-quadrinomial": METHOD_EXACT,
    "random-search": METHOD_SEARCH,
    "capped": METHOD_CAPPED,
    "identically-zero": METHOD_SYMBOLIC,
    "monomial-partial": METHOD_SYMBOLIC,
    "binomial-system": METHOD_SYMBOLIC,
    "curve-substitution": METHOD_SYMBOLIC,
}

DEFAULT_SEED = 1
DEFAULT_BUDGET = 400


class CertifiedWitness:
    """A solver witness bundled with the equations it violates."""

    def __init__(self, names, solver_witness, equations, context=""):
        self.names = tuple(names)
        self.point = _renamed(solver_witness, self.names)
        self.equations = [dict(e) for e in equations]
        self.context = context

    @property
    def kind(self):
        return self.point.kind

    def replay(self) -> bool:
        return self.point.verify(self.equations)

    def __repr__(self):
        return f"CertifiedWitness({self.point!r})"


def _renamed(point, names):
    """Relabel witness coordinates with the caller's variable names."""
    if isinstance(point, solvers.PointWitness):
        return solvers.PointWitness(names, point.values)
    if isinstance(point, solvers.AlgebraicWitness):
        return solvers.AlgebraicWitness(names, point.values, point.modulus)
    return point


class Verdict:
    """Three-valued outcome with evidence and optional witness."""

    def __init__(self, status, method, evidence, witness=None, trace=None):
        self.status = status
        self.method = method
        self.evidence = evidence
        self.witness = witness
        self.trace = dict(trace or {})

    @staticmethod
    def holds(method, evidence, trace=None):
        return Verdict(HOLDS, method, evidence, trace=trace)

    @staticmethod
    def fails(method, evidence, witness, trace=None):
        return Verdict(FAILS, method, evidence, witness=witness, trace=trace)

    @staticmethod
    def unknown(method, evidence, trace=None):
        return Verdict(UNKNOWN, method, evidence, trace=trace)

    def __repr__(self):
        return f"Verdict({self.status}, {self.method})"


def combine_verdicts(verdicts, holds_evidence):
    """Monotone lattice combination: Fails wins, then Unknown, then Holds."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.status == FAILS:
            return v
    for v in verdicts:
        if v.status == UNKNOWN:
            return Verdict.unknown(v.method, v.evidence, trace=v.trace)
    methods = {v.method for v in verdicts}
    method = METHOD_EXACT if methods <= {METHOD_EXACT} else METHOD_SYMBOLIC
    if not verdicts:
        method = METHOD_EXACT
    return Verdict.holds(method, holds_evidence)


def _is_exact_field(g: ToricPolynomial) -> bool:
    if g.is_zero():
        return True
    return isinstance(g.sample_coefficient(), GaussianRational)


# ---------------------------------------------------------------------------
# restrictions and vanishing varieties
# ---------------------------------------------------------------------------

def restrict(g: ToricPolynomial, index_set) -> ToricPolynomial:
    """Keep exactly the terms using only coordinates from the index set."""
    key = g.variety.require_valid_index_set(index_set)
    allowed = set(key)
    kept = {
        exp: coeff
        for exp, coeff in g.terms.items()
        if all(e == 0 or (i + 1) in allowed for i, e in enumerate(exp))
    }
    return ToricPolynomial(g.variety, kept)


def restriction_is_zero(g: ToricPolynomial, index_set) -> bool:
    """Whether the restriction vanishes identically on the orbit closure.

    Decided at lattice level: exponent-level terms may cancel after
    collection.
    """
    return torus_form(restrict(g, index_set)).is_zero()


def vanishing_split(g: ToricPolynomial):
    """Partition the valid index sets into (non-vanishing, vanishing)."""
    nonvanishing = []
    vanishing = []
    for index_set in g.variety.valid_index_sets:
        if restriction_is_zero(g, index_set):
            vanishing.append(index_set)
        else:
            nonvanishing.append(index_set)
    return nonvanishing, vanishing


# ---------------------------------------------------------------------------
# essential non-compact faces
# ---------------------------------------------------------------------------

class EssentialFace:
    """A non-compact face whose direction indexes a vanishing variety."""

    def __init__(self, face, direction, tame=None, tameness_radius=None):
        self.face = face
        self.direction = tuple(sorted(direction))
        self.tame = tame
        self.tameness_radius = tameness_radius

    def key(self):
        return self.face.key()

    def __repr__(self):
        return f"EssentialFace(I={set(self.direction)}, {self.face!r})"


def essential_noncompact_faces(g: ToricPolynomial, np=None, split=None):
    """All essential non-compact faces of the Newton polyhedron.

    A non-compact face is essential when its direction indexes a vanishing
    orbit closure. The half-line condition is re-verified explicitly for
    every direction index, through the independent membership oracle; a
    disagreement with the pairing-based direction raises AnomalyDetected.
    """
    if np is None:
        np = newton_polyhedron(g)
    if split is None:
        split = vanishing_split(g)
    vanishing = {tuple(s) for s in split[1]}
    v = g.variety
    out = []
    for face in np.faces:
        if face.is_compact:
            continue
        direction = face.noncompact_direction
        if not v.is_valid_index_set(direction):
            raise AnomalyDetected(
                f"face direction {set(direction)} is not a valid index set"
            )
        _verify_halfline_condition(v, face)
        if direction in vanishing:
            out.append(EssentialFace(face, direction))
    out.sort(key=lambda ef: ef.key())
    return out


def _verify_halfline_condition(v, face):
    """Check each b_i, i in the direction, lies in the face's recession cone
    (and no other generator does), via the simplex oracle."""
    rec_rays = [
        r for r in v.dual.rays if dot(face.weight, r) == 0
    ]
    members = set(face.noncompact_direction)
    for i, b in enumerate(v.generators, start=1):
        in_rec = bool(rec_rays) and in_cone_oracle(b, rec_rays)
        if in_rec != (i in members):
            raise AnomalyDetected(
                f"generator {i} membership in the face recession cone "
                f"disagrees with the pairing-based direction {set(members)}"
            )


# ---------------------------------------------------------------------------
# non-degeneracy
# ---------------------------------------------------------------------------

class NondegeneracyResult:
    """Per-face verdicts plus the combined one."""

    def __init__(self, overall, face_verdicts, polyhedron, warnings=()):
        self.overall = overall
        self.face_verdicts = dict(face_verdicts)
        self.polyhedron = polyhedron
        self.warnings = tuple(warnings)


def check_nondegeneracy(g: ToricPolynomial, seed=DEFAULT_SEED,
                        budget=DEFAULT_BUDGET, np=None) -> NondegeneracyResult:
    """Decide whether every compact face function is regular on the torus."""
    if np is None:
        np = newton_polyhedron(g)
    exact = _is_exact_field(g)
    warnings = []
    form = np.form
    if form.has_cancellation():
        warnings.append(
            "coefficient cancellation at lattice points "
            f"{list(form.cancelled)}: excluded from the support"
        )
    face_verdicts = {}
    for face in np.compact_faces():
        _, face_form = face_function(g, face, np=np)
        verdict = _face_nondegeneracy_verdict(
            face_form, face, g.variety.n, exact, seed, budget
        )
        face_verdicts[face.key()] = verdict
    overall = combine_verdicts(
        face_verdicts.values(),
        holds_evidence="every compact face function is regular on the torus",
    )
    return NondegeneracyResult(overall, face_verdicts, np, warnings)


def _face_nondegeneracy_verdict(face_form: LaurentForm, face, n, exact,
                                seed, budget) -> Verdict:
    outcome = solvers.decide_gradient_system(
        face_form.terms, n, face.value, exact_field=exact,
        seed=seed, face_key=str(face.key()), budget=budget,
    )
    method = _SOLVER_METHODS.get(outcome.method, METHOD_CAPPED)
    trace = {"face": face.key(), "solver": outcome.method,
             "detail": outcome.detail}
    if outcome.status == solvers.EMPTY:
        return Verdict.holds(method, outcome.detail, trace=trace)
    if outcome.status == solvers.SOLVABLE:
        if outcome.witness is None:
            if exact:
                return Verdict.unknown(
                    METHOD_CAPPED,
                    "solutions exist but no witness was constructed",
                    trace=trace,
                )
            trace["witness_pending"] = True
            return Verdict(FAILS, method,
                           outcome.detail + " (witness via specialization)",
                           witness=None, trace=trace)
        names = tuple(f"xi{i+1}" for i in range(n))
        equations = _gradient_equations(face_form, n, face.value)
        witness = CertifiedWitness(
            names, outcome.witness, equations,
            context=f"face {face.key()}",
        )
        assert witness.replay(), "witness failed replay at construction"
        return Verdict.fails(method, outcome.detail, witness, trace=trace)
    return Verdict.unknown(method, outcome.detail, trace=trace)


def _gradient_equations(face_form: LaurentForm, n, d_value):
    eqs = [m for m in solvers.euler_maps(face_form.terms, n) if m]
    if d_value == 0:
        eqs = [dict(face_form.terms)] + eqs
    return eqs


# ---------------------------------------------------------------------------
# local tameness
# ---------------------------------------------------------------------------

def check_local_tameness(g: ToricPolynomial, ef: EssentialFace,
                         seed=DEFAULT_SEED, budget=DEFAULT_BUDGET) -> Verdict:
    """Is the essential face function critical-point free for all nonzero
    frozen coordinates?

    The face function is viewed as a function of the coordinates outside
    the direction set, on the locus where every coordinate is nonzero. A
    Holds verdict certifies freeness for every nonzero frozen value (an
    infinite tameness radius); Fails carries an exact critical point.
    """
    direction = set(ef.direction)
    if not direction:
        raise FaceNotEssential("the face has an empty direction set")
    sub, _ = face_function(g, ef.face)
    r = g.variety.r
    free = [j for j in range(1, r + 1) if j not in direction]
    equations = [sub.partial(j) for j in free]
    equations = [e for e in equations if e]
    exact = _is_exact_field(g)
    outcome = solvers.decide_equation_system(
        equations, r, exact_field=exact,
        seed=seed, face_key="tame:" + str(ef.key()), budget=budget,
    )
    method = _SOLVER_METHODS.get(outcome.method, METHOD_CAPPED)
    trace = {
        "face": ef.key(),
        "direction": list(ef.direction),
        "free_variables": free,
        "solver": outcome.method,
        "detail": outcome.detail,
    }
    if outcome.status == solvers.EMPTY:
        v = Verdict.holds(method, outcome.detail, trace=trace)
        ef.tame = v
        ef.tameness_radius = "infinite"
        return v
    if outcome.status == solvers.SOLVABLE:
        if outcome.witness is None:
            if exact:
                v = Verdict.unknown(
                    METHOD_CAPPED,
                    "critical points exist but no witness was constructed",
                    trace=trace,
                )
            else:
                trace["witness_pending"] = True
                v = Verdict(FAILS, method,
                            outcome.detail + " (witness via specialization)",
                            witness=None, trace=trace)
        else:
            names = tuple(f"z{j}" for j in range(1, r + 1))
            witness = CertifiedWitness(names, outcome.witness, equations,
                                       context=f"tameness {ef.key()}")
            assert witness.replay(), "witness failed replay at construction"
            v = Verdict.fails(method, outcome.detail, witness, trace=trace)
        ef.tame = v
        ef.tameness_radius = "unknown"
        return v
    v = Verdict.unknown(method, outcome.detail, trace=trace)
    ef.tame = v
    ef.tameness_radius = "unknown"
    return v


def check_all_tameness(g: ToricPolynomial, seed=DEFAULT_SEED,
                       budget=DEFAULT_BUDGET, np=None, split=None):
    """Tameness along every vanishing variety: all essential faces."""
    faces = essential_noncompact_faces(g, np=np, split=split)
    verdicts = []
    for ef in faces:
        verdicts.append(check_local_tameness(g, ef, seed=seed, budget=budget))
    overall = combine_verdicts(
        verdicts,
        holds_evidence="every essential face function is locally tame with "
                       "infinite radius",
    )
    return overall, faces


# ---------------------------------------------------------------------------
# restrictions of a non-degenerate polynomial
# ---------------------------------------------------------------------------

def subvariety_restriction(g: ToricPolynomial, index_set):
    """The restriction as a polynomial on the face's own toric variety.

    Coordinates are re-expressed in a basis of the saturated lattice spanned
    by the chosen generators, in the order given by the index set.
    """
    v = g.variety
    key = v.require_valid_index_set(index_set)
    if not key:
        raise InvalidIndexSet("the empty index set has no ambient variety")
    gens = [v.generators[i - 1] for i in key]
    basis, _ = linalg.saturation_basis([list(b) for b in gens])
    reduced = []
    for b in gens:
        coords = linalg.coordinates_in_basis(b, basis)
        assert coords is not None
        reduced.append(coords)
    sub_v = build_variety(generators=reduced)
    kept = {}
    allowed = set(key)
    for exp, coeff in g.terms.items():
        if all(e == 0 or (i + 1) in allowed for i, e in enumerate(exp)):
            kept[tuple(exp[i - 1] for i in key)] = coeff
    return sub_v, ToricPolynomial(sub_v, kept)


def restriction_nondegeneracy_check(g: ToricPolynomial, seed=DEFAULT_SEED,
                                    budget=DEFAULT_BUDGET):
    """Non-degeneracy of every non-vanishing restriction.

    Used as a consistency property: when g itself holds, restrictions must
    never fail.
    """
    nonvanishing, _ = vanishing_split(g)
    out = {}
    for index_set in nonvanishing:
        _, sub = subvariety_restriction(g, index_set)
        out[tuple(index_set)] = check_nondegeneracy(
            sub, seed=seed, budget=budget
        ).overall
    return out
