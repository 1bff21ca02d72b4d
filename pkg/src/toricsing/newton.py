"""Polynomials on a toric variety and their Newton polyhedra.

A polynomial is stored at exponent level: a map from Lambda in N^r \\ {0}
to a nonzero coefficient. Pushing forward along the canonical embedding
collects coefficients at lattice level (lambda = sum Lambda_i b_i), which
is where the Newton polyhedron lives.

The polyhedron conv(union of lambda + dual cone) is handled through its
homogenization: the cone in R^{n+1} spanned by (lambda, 1) and (v, 0) for
the recession rays v. Faces of the polyhedron correspond to faces of that
cone which touch at least one support point, and every supporting normal
(w, -d) automatically has w in sigma. Full enumeration therefore works for
n <= 3 (cone dimension <= 4); for n = 4 only weight queries are available.
"""
from __future__ import annotations

from .errors import (
    ConstantTermForbidden,
    EmptyInput,
    EmptySupport,
    FaceEnumerationCapped,
    FaceMismatch,
    WeightNotInSigma,
)
from .lattice import RationalCone, face_lattice, in_cone_oracle
from .linalg import dot
from .rationals import GaussianRational
from .variety import ToricVariety


def field_zero(sample):
    return sample - sample


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


class ToricPolynomial:
    """A polynomial function on the variety, with no constant term."""

    __slots__ = ("variety", "terms")

    def __init__(self, variety: ToricVariety, terms):
        cleaned = {}
        r = variety.r
        for lam_exp, coeff in terms.items():
            exp = tuple(int(e) for e in lam_exp)
            if len(exp) != r:
                raise EmptyInput(
                    f"exponent {exp} has length {len(exp)}, expected {r}"
                )
            if any(e < 0 for e in exp):
                raise EmptyInput(f"negative exponent in {exp}")
            if _is_zero(coeff):
                continue
            if all(e == 0 for e in exp):
                raise ConstantTermForbidden(
                    "polynomials on the variety have no constant term"
                )
            cleaned[exp] = coeff
        object.__setattr__(self, "variety", variety)
        object.__setattr__(self, "terms", dict(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("ToricPolynomial is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def lambda_of(self, exponent):
        """The lattice point sum(Lambda_i * b_i) of an exponent vector."""
        gens = self.variety.generators
        n = self.variety.n
        return tuple(
            sum(exponent[i] * gens[i][j] for i in range(len(gens)))
            for j in range(n)
        )

    def sample_coefficient(self):
        return next(iter(self.terms.values()))

    def evaluate(self, point):
        """Evaluate at an r-tuple of coordinate values (any exact field)."""
        total = None
        for exp, coeff in self.terms.items():
            term = coeff
            for zi, e in zip(point, exp):
                for _ in range(e):
                    term = term * zi
            total = term if total is None else total + term
        if total is None:
            raise EmptySupport("cannot evaluate the zero polynomial")
        return total

    def partial(self, i):
        """Formal partial derivative with respect to z_i (1-based)."""
        out = {}
        for exp, coeff in self.terms.items():
            e = exp[i - 1]
            if e == 0:
                continue
            new = list(exp)
            new[i - 1] = e - 1
            key = tuple(new)
            add = coeff * e
            out[key] = out.get(key, field_zero(coeff)) + add
        return {k: v for k, v in out.items() if not _is_zero(v)}

    def __repr__(self):
        return f"ToricPolynomial({len(self.terms)} terms, r={self.variety.r})"


class LaurentForm:
    """The collected lattice-level form of a polynomial on the torus."""

    __slots__ = ("n", "terms", "cancelled")

    def __init__(self, n, terms, cancelled=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "terms",
            {tuple(k): v for k, v in terms.items() if not _is_zero(v)},
        )
        object.__setattr__(self, "cancelled", tuple(sorted(cancelled)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentForm is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self):
        return sorted(self.terms)

    def has_cancellation(self) -> bool:
        return bool(self.cancelled)

    def euler_derivative(self, i):
        """theta_i = xi_i d/dxi_i, which keeps the support unchanged."""
        out = {}
        for lam, coeff in self.terms.items():
            if lam[i] != 0:
                out[lam] = coeff * lam[i]
        return LaurentForm(self.n, out)

    def weighted_euler(self, w):
        """sum_i w_i theta_i, i.e. the term lambda gets factor <w, lambda>."""
        out = {}
        for lam, coeff in self.terms.items():
            f = dot(w, lam)
            if f != 0:
                out[lam] = coeff * f
        return LaurentForm(self.n, out)

    def scaled(self, factor):
        return LaurentForm(
            self.n, {lam: c * factor for lam, c in self.terms.items()}
        )

    def __sub__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            z = field_zero(c)
            out[lam] = out.get(lam, z) - c
        return LaurentForm(self.n, out)

    def evaluate(self, xi):
        """Evaluate at a torus point (exact; negative exponents allowed)."""
        total = None
        for lam, coeff in self.terms.items():
            term = coeff * xi.monomial(lam)
            total = term if total is None else total + term
        if total is None:
            sample = GaussianRational(0)
            return sample
        return total

    def __repr__(self):
        return f"LaurentForm({len(self.terms)} terms, n={self.n})"


def torus_form(g: ToricPolynomial) -> LaurentForm:
    """Collect coefficients per lattice point lambda.

    Distinct exponents with the same lambda may cancel; cancelled lattice
    points are recorded on the form.
    """
    collected = {}
    for exp, coeff in g.terms.items():
        lam = g.lambda_of(exp)
        if lam in collected:
            collected[lam] = collected[lam] + coeff
        else:
            collected[lam] = coeff
    cancelled = [lam for lam, c in collected.items() if _is_zero(c)]
    return LaurentForm(g.variety.n, collected, cancelled)


class PolyFace:
    """A face of the Newton polyhedron.

    vertex_set holds the support points attaining the minimum, not only the
    polyhedron vertices. Faces compare equal by (vertex_set, direction); the
    stored weight is one witness among many.
    """

    __slots__ = (
        "weight",
        "value",
        "vertex_set",
        "recession_rays",
        "noncompact_direction",
        "is_compact",
        "parent",
    )

    def __init__(self, weight, value, vertex_set, recession_rays,
                 noncompact_direction, parent):
        object.__setattr__(self, "weight", tuple(weight))
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "vertex_set", tuple(sorted(vertex_set)))
        object.__setattr__(self, "recession_rays", tuple(recession_rays))
        object.__setattr__(
            self, "noncompact_direction", tuple(sorted(noncompact_direction))
        )
        object.__setattr__(self, "is_compact", not noncompact_direction)
        object.__setattr__(self, "parent", parent)

    def __setattr__(self, name, value):
        raise AttributeError("PolyFace is immutable")

    def key(self):
        return (self.vertex_set, self.noncompact_direction)

    def __eq__(self, other):
        if not isinstance(other, PolyFace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        kind = "compact" if self.is_compact else f"I={set(self.noncompact_direction)}"
        return f"PolyFace({list(self.vertex_set)}, {kind}, w={self.weight})"


class NewtonPolyhedron:
    """conv(union of (lambda + dual cone)) over the collected support."""

    __slots__ = ("variety", "support", "recession", "form",
                 "_facets", "_vertices", "_faces")

    def __init__(self, variety, form: LaurentForm):
        if form.is_zero():
            raise EmptySupport("the collected torus form has no terms")
        object.__setattr__(self, "variety", variety)
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "support", tuple(form.support))
        object.__setattr__(self, "recession", variety.dual)
        if variety.n + 1 <= 4:
            self._enumerate()
        else:
            object.__setattr__(self, "_facets", None)
            object.__setattr__(self, "_vertices", None)
            object.__setattr__(self, "_faces", None)

    def __setattr__(self, name, value):
        raise AttributeError("NewtonPolyhedron is immutable")

    # -- construction ----------------------------------------------------

    def _enumerate(self):
        n = self.variety.n
        gens = [s + (1,) for s in self.support]
        gens += [tuple(v) + (0,) for v in self.recession.rays]
        cone = RationalCone(n + 1, gens)
        vertices = tuple(
            sorted(r[:-1] for r in cone.rays if r[-1] == 1)
        )
        facets = []
        for normal in cone.facet_normals():
            w, c = normal[:-1], normal[-1]
            facets.append((w, -c))
        faces = {}
        for cf in face_lattice(cone):
            normal = cf.supporting_normal
            w, c = normal[:-1], normal[-1]
            attaining = [
                s for s in self.support if dot(w, s) + c == 0
            ]
            if not attaining:
                continue
            face = self._face_from_weight_data(w, -c, attaining)
            faces.setdefault(face.key(), face)
        ordered = sorted(
            faces.values(),
            key=lambda f: (len(f.vertex_set), f.vertex_set,
                           f.noncompact_direction),
        )
        object.__setattr__(self, "_facets", tuple(facets))
        object.__setattr__(self, "_vertices", vertices)
        object.__setattr__(self, "_faces", tuple(ordered))

    def _face_from_weight_data(self, w, d, attaining):
        gens = self.variety.generators
        direction = tuple(
            i for i, b in enumerate(gens, start=1) if dot(w, b) == 0
        )
        recession_rays = tuple(gens[i - 1] for i in direction)
        return PolyFace(
            weight=w,
            value=d,
            vertex_set=attaining,
            recession_rays=recession_rays,
            noncompact_direction=direction,
            parent=self,
        )

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self):
        if self._vertices is None:
            raise FaceEnumerationCapped(
                "full face enumeration is unavailable at this dimension; "
                "use weight queries"
            )
        return self._vertices

    @property
    def faces(self):
        if self._faces is None:
            raise FaceEnumerationCapped(
                "full face enumeration is unavailable at this dimension; "
                "use weight queries"
            )
        return self._faces

    def face_of_weight(self, w) -> PolyFace:
        """The face where <w, .> attains its minimum over the polyhedron."""
        ww = tuple(int(x) for x in w)
        gens = self.variety.generators
        if any(dot(ww, b) < 0 for b in gens):
            raise WeightNotInSigma(
                f"weight {ww} pairs negatively with a semigroup generator"
            )
        values = [dot(ww, s) for s in self.support]
        d = min(values)
        attaining = [s for s, val in zip(self.support, values) if val == d]
        return self._face_from_weight_data(ww, d, attaining)

    def compact_faces(self):
        return [f for f in self.faces if f.is_compact]

    def noncompact_faces(self):
        return [f for f in self.faces if not f.is_compact]

    def contains_lattice_point(self, lam) -> bool:
        """Exact membership of a lattice point in the polyhedron."""
        lam = tuple(int(x) for x in lam)
        if self._facets is not None:
            return all(dot(w, lam) >= d for (w, d) in self._facets)
        gens = [s + (1,) for s in self.support]
        gens += [tuple(v) + (0,) for v in self.recession.rays]
        return in_cone_oracle(lam + (1,), gens)

    def face_keys(self):
        return [f.key() for f in self.faces]

    def owns(self, face: PolyFace) -> bool:
        values = [dot(face.weight, s) for s in self.support]
        if not values:
            return False
        d = min(values)
        attaining = tuple(sorted(
            s for s, val in zip(self.support, values) if val == d
        ))
        return d == face.value and attaining == face.vertex_set

    def __repr__(self):
        return (
            f"NewtonPolyhedron(support={list(self.support)}, "
            f"recession={list(self.recession.rays)})"
        )


def newton_polyhedron(g: ToricPolynomial) -> NewtonPolyhedron:
    form = torus_form(g)
    if form.is_zero():
        raise EmptySupport("the collected torus form has no terms")
    return NewtonPolyhedron(g.variety, form)


def face_of_weight(np: NewtonPolyhedron, w) -> PolyFace:
    return np.face_of_weight(w)


def compact_boundary(np: NewtonPolyhedron):
    """All compact faces, each carrying an interior weight witness."""
    out = []
    for face in np.compact_faces():
        gens = np.variety.generators
        assert all(dot(face.weight, b) > 0 for b in gens), (
            "compact face witness must pair strictly positively with all "
            "generators"
        )
        out.append(face)
    return out


def face_function(g: ToricPolynomial, face: PolyFace, np=None):
    """The sub-polynomial of g supported on the face, and its torus form.

    Keeps every exponent whose lattice image lands on the face, including
    exponents whose collected coefficient cancelled. Pass the polynomial's
    own polyhedron as np to skip rebuilding it.
    """
    if np is None:
        form = torus_form(g)
        if (
            face.parent is not None
            and face.parent.variety is g.variety
            and face.parent.support == tuple(form.support)
        ):
            np = face.parent
        else:
            np = NewtonPolyhedron(g.variety, form)
    if not np.owns(face):
        raise FaceMismatch("face does not belong to this polynomial")
    kept = {}
    for exp, coeff in g.terms.items():
        lam = g.lambda_of(exp)
        if dot(face.weight, lam) == face.value and np.contains_lattice_point(lam):
            kept[exp] = coeff
    sub = ToricPolynomial(g.variety, kept)
    return sub, torus_form(sub)


def weight_transport(v: ToricVariety, w):
    """The pairing vector (<w, b_1>, ..., <w, b_r>)."""
    return tuple(dot(w, b) for b in v.generators)
