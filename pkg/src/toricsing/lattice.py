"""Exact rational cone geometry.

Cones are given by primitive integer ray generators. Duality runs through a
double description pass (exact rationals throughout), Hilbert bases come from
triangulation plus fundamental-parallelepiped enumeration, and face lattices
are intersections of facet boundaries. The ambient dimension is capped at 4:
anything larger raises instead of silently crawling.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    AmbientDimTooLarge,
    EmptyInput,
    NotStronglyConvex,
    UnboundedBelow,
)
from . import linalg
from .linalg import dot, primitive, is_zero_vec

AMBIENT_DIM_CAP = 4


def _check_dim(n: int):
    if n < 1:
        raise EmptyInput("ambient dimension must be at least 1")
    if n > AMBIENT_DIM_CAP:
        raise AmbientDimTooLarge(
            f"ambient dimension {n} exceeds the supported cap {AMBIENT_DIM_CAP}"
        )


class RationalVector:
    """A vector with arbitrary-precision rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(
            self, "coords", tuple(Fraction(x) for x in coords)
        )
        if not self.coords:
            raise EmptyInput("a rational vector needs at least one coordinate")

    def __setattr__(self, name, value):
        raise AttributeError("RationalVector is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, RationalVector):
            return self.coords == other.coords
        if isinstance(other, tuple):
            return self.coords == tuple(Fraction(x) for x in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"RationalVector({list(self.coords)!r})"


def _coords(v):
    """Accept RationalVector or any sequence of ints/Fractions."""
    if isinstance(v, RationalVector):
        return v.coords
    return tuple(Fraction(x) for x in v)


# ---------------------------------------------------------------------------
# double description
# ---------------------------------------------------------------------------

def _pointed_extreme_rays(ineqs, dim):
    """Extreme rays of {y in R^dim : <a, y> >= 0 for all a in ineqs}.

    The inequality matrix must have full column rank (pointed result).
    Returns primitive integer rays.
    """
    # choose dim independent inequalities to seed a simplicial cone
    chosen = []
    rest = []
    for a in ineqs:
        if len(chosen) < dim and linalg.rank(chosen + [list(a)]) > len(chosen):
            chosen.append(list(a))
        else:
            rest.append(tuple(a))
    assert len(chosen) == dim, "inequality system is not pointed"
    processed = [tuple(c) for c in chosen]

    # simplicial seed: rays r_j with <a_k, r_j> = delta_{kj}
    rays = []
    for j in range(dim):
        target = [Fraction(1 if k == j else 0) for k in range(dim)]
        sol, _ = linalg.solve_rational(chosen, target)
        assert sol is not None
        rays.append(linalg.integerize(sol))

    def active_set(r):
        return frozenset(i for i, a in enumerate(processed) if dot(a, r) == 0)

    for a in rest:
        processed.append(a)
        pos = [r for r in rays if dot(a, r) > 0]
        zero = [r for r in rays if dot(a, r) == 0]
        neg = [r for r in rays if dot(a, r) < 0]
        if not neg:
            continue
        active = {r: active_set(r) for r in rays}
        new_rays = []
        for p, q in itertools.product(pos, neg):
            common = active[p] & active[q]
            adjacent = not any(
                r is not p and r is not q and common <= active[r] for r in rays
            )
            if not adjacent:
                continue
            w = primitive(linalg.sub_vec(
                linalg.scale_vec(dot(a, p), q), linalg.scale_vec(dot(a, q), p)
            ))
            if not is_zero_vec(w) and w not in new_rays:
                new_rays.append(w)
        rays = pos + zero + new_rays
    return sorted(set(rays))


def polar_description(generators, n):
    """Dual description of {v : <g, v> >= 0 for all g in generators}.

    Returns (lineality_basis, pointed_rays), both lists of primitive integer
    vectors. The pointed rays live in the orthogonal complement of the
    lineality space, which makes the pair canonical.
    """
    gens = [tuple(int(x) for x in g) for g in generators if not is_zero_vec(g)]
    if not gens:
        basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        return basis, []
    lineality = linalg.right_kernel_basis(gens)
    lineality = _canonical_lattice_basis(lineality) if lineality else []
    rho = linalg.rank(gens)
    if rho == 0:
        return lineality, []
    basis, _ = linalg.saturation_basis(gens)
    # inequalities expressed in the row-space basis
    reduced = [tuple(dot(a, b) for b in basis) for a in gens]
    rays_reduced = _pointed_extreme_rays(reduced, rho)
    rays = []
    for y in rays_reduced:
        v = tuple(sum(y[j] * basis[j][i] for j in range(rho)) for i in range(n))
        rays.append(primitive(v))
    return lineality, sorted(set(rays))


def _canonical_lattice_basis(vectors):
    """Hermite-style canonical basis of the lattice spanned by vectors."""
    rows = [list(v) for v in vectors]
    if not rows:
        return []
    n = len(rows[0])
    # integer row echelon (Hermite normal form, row style)
    mat = [row[:] for row in rows]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        # gcd out the column below the pivot
        done = False
        while not done:
            done = True
            for i in range(r + 1, len(mat)):
                if mat[i][c] != 0:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
                    if mat[i][c] != 0:
                        mat[r], mat[i] = mat[i], mat[r]
                        done = False
        if mat[r][c] < 0:
            mat[r] = [-x for x in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return [tuple(row) for row in mat[:r] if not is_zero_vec(row)]


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------

class RationalCone:
    """A rational polyhedral cone given by primitive integer generators.

    Construction canonicalizes: generators are replaced by the extreme rays
    of the cone they span (plus a canonical basis of the lineality space, in
    both signs, when the cone is not pointed), primitivized and sorted. Two
    cones are equal exactly when their canonical data coincide.
    """

    __slots__ = ("ambient_dim", "rays", "_lineality", "_dual_gens")

    def __init__(self, ambient_dim, rays, _lineality=None, _trusted=False):
        _check_dim(ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "_dual_gens", None)
        if _trusted:
            object.__setattr__(self, "rays", tuple(rays))
            object.__setattr__(self, "_lineality", tuple(_lineality or ()))
            return
        cleaned = []
        for r in rays:
            if len(r) != ambient_dim:
                raise EmptyInput(
                    f"ray {r} has length {len(r)}, expected {ambient_dim}"
                )
            p = primitive(r)
            if not is_zero_vec(p):
                cleaned.append(p)
        if not cleaned:
            object.__setattr__(self, "rays", ())
            object.__setattr__(self, "_lineality", ())
            return
        # canonical form via double dualization
        lin_d, rays_d = polar_description(cleaned, ambient_dim)
        dual_gens = list(rays_d) + [l for v in lin_d for l in (v, tuple(-x for x in v))]
        lin_p, rays_p = polar_description(dual_gens, ambient_dim)
        all_rays = list(rays_p) + [l for v in lin_p for l in (v, tuple(-x for x in v))]
        object.__setattr__(self, "rays", tuple(sorted(all_rays)))
        object.__setattr__(self, "_lineality", tuple(lin_p))
        object.__setattr__(self, "_dual_gens", tuple(dual_gens))

    def __setattr__(self, name, value):
        raise AttributeError("RationalCone is immutable")

    @staticmethod
    def from_rays(rays, ambient_dim=None):
        rays = list(rays)
        if ambient_dim is None:
            if not rays:
                raise EmptyInput("cannot infer ambient dimension from no rays")
            ambient_dim = len(rays[0])
        return RationalCone(ambient_dim, rays)

    # -- structure -----------------------------------------------------

    @property
    def lineality_basis(self):
        return self._lineality

    def is_strongly_convex(self) -> bool:
        return not self._lineality

    def dim(self) -> int:
        if not self.rays:
            return 0
        return linalg.rank([list(r) for r in self.rays])

    def is_full_dimensional(self) -> bool:
        return self.dim() == self.ambient_dim

    def dual_generators(self):
        """Generators of the dual cone (facet normals plus dual lineality)."""
        if self._dual_gens is None:
            lin_d, rays_d = polar_description(list(self.rays), self.ambient_dim)
            gens = list(rays_d) + [
                l for v in lin_d for l in (v, tuple(-x for x in v))
            ]
            object.__setattr__(self, "_dual_gens", tuple(gens))
        return self._dual_gens

    def facet_normals(self):
        """The pointed part of the dual description (no lineality pairs)."""
        lin_d, rays_d = polar_description(list(self.rays), self.ambient_dim)
        return tuple(rays_d)

    # -- predicates ------------------------------------------------------

    def contains(self, v) -> bool:
        vv = _coords(v)
        if len(vv) != self.ambient_dim:
            raise EmptyInput("vector length does not match ambient dimension")
        return all(dot(d, vv) >= 0 for d in self.dual_generators())

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RationalCone):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rays == other.rays

    def __hash__(self):
        return hash((self.ambient_dim, self.rays))

    def __repr__(self):
        return f"RationalCone(dim={self.ambient_dim}, rays={list(self.rays)})"


class ConeFace:
    """A face of a strongly convex cone, with a witnessing normal."""

    __slots__ = ("parent", "rays", "dim", "supporting_normal")

    def __init__(self, parent, rays, dim, supporting_normal):
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "rays", tuple(sorted(rays)))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "supporting_normal", tuple(supporting_normal))

    def __setattr__(self, name, value):
        raise AttributeError("ConeFace is immutable")

    def __eq__(self, other):
        if not isinstance(other, ConeFace):
            return NotImplemented
        return self.parent == other.parent and self.rays == other.rays

    def __hash__(self):
        return hash((self.parent, self.rays))

    def __repr__(self):
        return f"ConeFace(dim={self.dim}, rays={list(self.rays)})"


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def dual_cone(cone: RationalCone) -> RationalCone:
    """The cone of vectors pairing nonnegatively with every cone element."""
    if not cone.rays:
        raise EmptyInput("dual_cone needs at least one generating ray")
    gens = cone.dual_generators()
    return RationalCone(cone.ambient_dim, gens)


def face_lattice(cone: RationalCone):
    """All faces of a strongly convex cone, from {0} up to the cone itself."""
    if not cone.is_strongly_convex():
        raise NotStronglyConvex("face lattice requires a pointed cone")
    rays = cone.rays
    normals = cone.facet_normals()
    boundary = {d: frozenset(r for r in rays if dot(d, r) == 0) for d in normals}
    face_sets = {frozenset(rays)}
    frontier = set(boundary.values())
    face_sets |= frontier
    while frontier:
        new = set()
        for f in frontier:
            for g in list(face_sets):
                h = f & g
                if h not in face_sets:
                    new.add(h)
        face_sets |= new
        frontier = new
    if rays and frozenset() not in face_sets:
        face_sets.add(frozenset())

    faces = []
    for fs in face_sets:
        members = sorted(fs)
        if fs == frozenset(rays):
            normal = tuple(0 for _ in range(cone.ambient_dim))
        else:
            active = [d for d in normals if boundary[d] >= fs]
            normal = primitive(tuple(
                sum(d[i] for d in active) for i in range(cone.ambient_dim)
            ))
        dim = linalg.rank([list(r) for r in members]) if members else 0
        faces.append(ConeFace(cone, members, dim, normal))
    faces.sort(key=lambda f: (f.dim, f.rays))
    return faces


def contains(cone: RationalCone, v) -> bool:
    """Exact membership via the dual description."""
    return cone.contains(v)


def minimize(points, recession: RationalCone, w):
    """Minimize <w, x> over conv(points) + recession.

    Returns (minimum value, tuple of attaining points). Raises UnboundedBelow
    when w pairs negatively with some recession ray.
    """
    ww = _coords(w)
    for r in recession.rays:
        if dot(ww, r) < 0:
            raise UnboundedBelow(
                f"weight {tuple(ww)} pairs negatively with recession ray {r}"
            )
    pts = [tuple(p) for p in points]
    if not pts:
        raise EmptyInput("minimize needs at least one point")
    values = [dot(ww, p) for p in pts]
    d = min(values)
    argmin = tuple(sorted(p for p, val in zip(pts, values) if val == d))
    return d, argmin


def in_cone_oracle(point, generators) -> bool:
    """Independent membership test: exact phase-1 simplex, no dual cones."""
    coeffs = linalg.nonneg_solve_exact([list(g) for g in generators], list(point))
    return coeffs is not None


# ---------------------------------------------------------------------------
# Hilbert bases
# ---------------------------------------------------------------------------

def hilbert_basis(cone: RationalCone):
    """The minimal generating set of cone ∩ Z^n as a semigroup.

    The cone must be strongly convex. Lower-dimensional cones are reduced to
    full-dimensional ones inside the saturation of their span.
    """
    if not cone.is_strongly_convex():
        raise NotStronglyConvex("Hilbert basis requires a pointed cone")
    if not cone.rays:
        return []
    d = cone.dim()
    n = cone.ambient_dim
    if d < n:
        basis, _ = linalg.saturation_basis([list(r) for r in cone.rays])
        reduced_rays = []
        for r in cone.rays:
            c = linalg.coordinates_in_basis(r, basis)
            assert c is not None, "ray not in the saturated span"
            reduced_rays.append(c)
        sub = RationalCone(d, reduced_rays)
        hb = hilbert_basis(sub)
        lifted = [
            tuple(sum(c[j] * basis[j][i] for j in range(d)) for i in range(n))
            for c in hb
        ]
        return sorted(lifted)

    facets = cone.facet_normals()
    ell = tuple(sum(f[i] for f in facets) for i in range(n))

    candidates = set(cone.rays)
    for simplex in _triangulate(cone):
        candidates.update(_parallelepiped_points(simplex))
    candidates.discard(tuple(0 for _ in range(n)))

    def member(v):
        return all(dot(f, v) >= 0 for f in facets)

    ordered = sorted(candidates, key=lambda v: (dot(ell, v), v))
    basis_out = []
    for c in ordered:
        reducible = False
        for h in basis_out:
            diff = linalg.sub_vec(c, h)
            if not is_zero_vec(diff) and member(diff):
                reducible = True
                break
        if not reducible:
            basis_out.append(c)
    return sorted(basis_out)


def _triangulate(cone: RationalCone):
    """Split a pointed cone into simplicial subcones (lists of rays)."""
    rays = list(cone.rays)
    d = cone.dim()
    if len(rays) == d:
        return [rays]
    first = rays[0]
    simplices = []
    for facet in _proper_facets(cone):
        if first in facet:
            continue
        sub = RationalCone(cone.ambient_dim, facet, _trusted=True)
        for s in _triangulate(sub):
            simplices.append(s + [first])
    return simplices


def _proper_facets(cone: RationalCone):
    """Ray sets of the codimension-one faces of a pointed cone."""
    d = cone.dim()
    out = []
    for normal in cone.facet_normals():
        rays = [r for r in cone.rays if dot(normal, r) == 0]
        if rays and linalg.rank([list(r) for r in rays]) == d - 1:
            out.append(sorted(rays))
    return out


def _parallelepiped_points(simplex_rays):
    """Nonzero lattice points of {sum t_i v_i : 0 <= t_i < 1}.

    The rays span the ambient space (the caller reduced to full dimension),
    but may sit in a lower-dimensional sublattice when called recursively on
    facets; then coordinates are taken inside the saturated span.
    """
    n = len(simplex_rays[0])
    d = len(simplex_rays)
    if d < n:
        basis, _ = linalg.saturation_basis(simplex_rays)
        reduced = [linalg.coordinates_in_basis(r, basis) for r in simplex_rays]
        pts = _parallelepiped_points(reduced)
        return [
            tuple(sum(p[j] * basis[j][i] for j in range(d)) for i in range(n))
            for p in pts
        ]
    cols = [list(col) for col in zip(*simplex_rays)]  # V with rays as columns
    u, s, _ = linalg.smith_normal_form(cols)
    diag = [s[i][i] for i in range(d)]
    if any(x == 0 for x in diag):
        raise ValueError("simplex rays are linearly dependent")
    u_inv = linalg.invert_unimodular([list(r) for r in u])
    points = set()
    for combo in itertools.product(*(range(x) for x in diag)):
        x0 = tuple(sum(u_inv[i][k] * combo[k] for k in range(d)) for i in range(d))
        t, _ = linalg.solve_rational(cols, list(x0))
        assert t is not None
        frac = [ti - (ti.numerator // ti.denominator) for ti in t]
        pt = tuple(
            int(sum(frac[j] * Fraction(cols[i][j]) for j in range(d)))
            for i in range(d)
        )
        if not is_zero_vec(pt):
            points.add(pt)
    return sorted(points)
