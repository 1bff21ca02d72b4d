"""Exact decision procedures for zero systems on algebraic tori.

Shapes handled exactly:
  * single-monomial equations (never vanish on a torus);
  * supports of affine dimension one, via univariate gcd/square-free algebra;
  * binomial equation systems, via character-lattice consistency;
  * two-dimensional supports with at most four terms, via torus
    linearization (the monomial values satisfy a linear system plus one
    multiplicative relation, which eliminates to a univariate problem);
  * single equations with several terms, via one-parameter substitution.

Everything else falls back to a seeded randomized search whose candidates
are certified by exact substitution; with no certified candidate the
outcome is honest "unknown". Witnesses are either exact Gaussian-rational
points or algebraic points: values in Q(i)[s]/(m(s)) for a stored
nonconstant modulus m, verified by polynomial arithmetic mod m.
"""
from __future__ import annotations

import hashlib
import itertools
import random
from fractions import Fraction

from . import linalg
from .linalg import dot, is_zero_vec, primitive
from .polynomials import Poly, gcd as poly_gcd
from .rationals import GaussianRational, gaussian_nth_root, gaussian_sqrt

EMPTY = "empty"          # no torus solution exists
SOLVABLE = "solvable"    # a torus solution exists
UNKNOWN = "unknown"      # outside the decidable subclass / search exhausted


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


class Outcome:
    """Result of a torus-system decision."""

    __slots__ = ("status", "witness", "method", "detail")

    def __init__(self, status, witness=None, method="", detail=""):
        self.status = status
        self.witness = witness
        self.method = method
        self.detail = detail

    def __repr__(self):
        return f"Outcome({self.status}, method={self.method})"


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

class PointWitness:
    """An exact Gaussian-rational torus point solving the equations."""

    kind = "point"

    def __init__(self, names, values):
        self.names = tuple(names)
        self.values = tuple(values)

    def verify(self, equations) -> bool:
        if any(v.is_zero() for v in self.values):
            return False
        for terms in equations:
            total = GaussianRational(0)
            for exp, coeff in terms.items():
                term = coeff
                for v, e in zip(self.values, exp):
                    if e:
                        term = term * (v ** int(e))
                total = total + term
            if not total.is_zero():
                return False
        return True

    def __repr__(self):
        pairs = ", ".join(f"{n}={v}" for n, v in zip(self.names, self.values))
        return f"PointWitness({pairs})"


class AlgebraicWitness:
    """A torus point with coordinates in Q(i)[s]/(modulus).

    The modulus is monic and nonconstant, so it has complex roots; every
    root yields a genuine solution because the verification below works
    modulo the modulus. Coordinates are certified nonzero by coprimality
    with the modulus.
    """

    kind = "algebraic"

    def __init__(self, names, value_polys, modulus: Poly):
        self.names = tuple(names)
        self.values = tuple(value_polys)
        self.modulus = modulus

    def verify(self, equations) -> bool:
        m = self.modulus
        if m.degree() < 1:
            return False
        for v in self.values:
            if v.is_zero() or poly_gcd(v, m).degree() >= 1:
                return False
        inverses = {}

        def inv(poly):
            key = poly.coeffs
            if key not in inverses:
                r = _poly_mod_inverse(poly, m)
                if r is None:
                    return None
                inverses[key] = r
            return inverses[key]

        for terms in equations:
            total = Poly.constant(GaussianRational(0))
            for exp, coeff in terms.items():
                term = Poly.constant(coeff)
                for v, e in zip(self.values, exp):
                    e = int(e)
                    if e == 0:
                        continue
                    base = v if e > 0 else inv(v)
                    if base is None:
                        return False
                    for _ in range(abs(e)):
                        term = (term * base) % m
                total = (total + term) % m
            if not total.is_zero():
                return False
        return True

    def __repr__(self):
        return (
            f"AlgebraicWitness(modulus deg {self.modulus.degree()}, "
            f"{len(self.values)} coordinates)"
        )


def _poly_extended_gcd(a: Poly, b: Poly):
    """(g, x, y) with x*a + y*b = g, over the coefficient field."""
    zero = Poly.constant(GaussianRational(0))
    one = Poly.constant(GaussianRational(1))
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def _poly_mod_inverse(v: Poly, m: Poly):
    g, x, _ = _poly_extended_gcd(v, m)
    if g.degree() != 0:
        return None
    lead = g.leading()
    return x.scale(GaussianRational(1) / lead) % m


# ---------------------------------------------------------------------------
# small utilities
# ---------------------------------------------------------------------------

def derived_rng(seed, face_key) -> random.Random:
    digest = hashlib.sha256(
        (str(seed) + "::" + str(face_key)).encode()
    ).hexdigest()
    return random.Random(int(digest[:16], 16))


_SEARCH_POOL = [
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(0, 1),
    GaussianRational(0, -1),
    GaussianRational(2),
    GaussianRational(-2),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(Fraction(-1, 2)),
    GaussianRational(3),
    GaussianRational(-3),
    GaussianRational(1, 1),
    GaussianRational(1, -1),
    GaussianRational(-1, 1),
    GaussianRational(Fraction(1, 3)),
    GaussianRational(Fraction(-1, 3)),
    GaussianRational(Fraction(3, 2)),
    GaussianRational(Fraction(-3, 2)),
    GaussianRational(Fraction(1, 2), Fraction(1, 2)),
]


def random_search(equations, n_vars, rng, budget):
    """Try exact candidates; return a verified PointWitness or None."""
    names = tuple(f"v{i+1}" for i in range(n_vars))
    # structured pass: roots of unity on few variables
    if n_vars <= 4:
        units = [GaussianRational(1), GaussianRational(-1),
                 GaussianRational(0, 1), GaussianRational(0, -1)]
        for combo in itertools.product(units, repeat=n_vars):
            w = PointWitness(names, combo)
            if w.verify(equations):
                return w
    for _ in range(budget):
        combo = tuple(rng.choice(_SEARCH_POOL) for _ in range(n_vars))
        w = PointWitness(names, combo)
        if w.verify(equations):
            return w
    return None


def euler_maps(terms, n):
    """The n Euler derivatives theta_i of a lattice-level term map."""
    out = []
    for i in range(n):
        m = {}
        for lam, coeff in terms.items():
            if lam[i]:
                m[lam] = coeff * lam[i]
        out.append(m)
    return out


def bezout_vector(gamma):
    """Integer m with <m, gamma> = gcd(gamma) (gamma nonzero)."""
    m = [0] * len(gamma)
    g = 0
    for i, x in enumerate(gamma):
        if x == 0:
            continue
        if g == 0:
            g = abs(x)
            m[i] = 1 if x > 0 else -1
            continue
        gg, a, b = _ext_gcd(g, abs(x))
        # a*g + b*|x| = gg
        m = [a * v for v in m]
        m[i] = b if x > 0 else -b
        g = gg
    assert g == linalg.vector_gcd(gamma) and g > 0
    return tuple(m)


def _ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def squarefree_part(p: Poly) -> Poly:
    if p.degree() <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return p.monic()
    return p.divmod(g)[0].monic()


def gaussian_roots(p: Poly, limit=None):
    """Some roots of p in Q(i); complete when the square-free part has
    degree at most two, best-effort beyond."""
    if p.degree() <= 0:
        return []
    work = squarefree_part(p)
    roots = []
    # peel off candidate linear roots
    changed = True
    while changed and work.degree() > 2:
        changed = False
        for cand in _SEARCH_POOL:
            if work.evaluate(cand).is_zero():
                roots.append(cand)
                x = Poly.variable()
                work = work.divmod(x - Poly.constant(cand))[0]
                changed = True
                break
    if work.degree() == 1:
        c0, c1 = work.coeffs
        roots.append(GaussianRational(0) - c0 / c1)
    elif work.degree() == 2:
        c0, c1, c2 = work.coeffs
        disc = c1 * c1 - GaussianRational(4) * c2 * c0
        s = gaussian_sqrt(disc)
        if s is not None:
            two_a = GaussianRational(2) * c2
            roots.append((GaussianRational(0) - c1 + s) / two_a)
            roots.append((GaussianRational(0) - c1 - s) / two_a)
    elif work.degree() > 2:
        for cand in _SEARCH_POOL:
            if work.evaluate(cand).is_zero():
                roots.append(cand)
    return roots


def solve_monomial_system(gammas, values):
    """Solve zeta^{gamma_i} = v_i on the torus.

    Returns ("inconsistent", None) when no complex solution exists,
    ("solved", assignments) with Gaussian-rational coordinates when a
    witness was constructed, or ("stuck", None) when solutions exist but
    the required roots are not Gaussian rational.
    """
    k = len(gammas)
    n = len(gammas[0])
    u, s, v = linalg.smith_normal_form([list(g) for g in gammas])
    # transformed right-hand sides: v'_m = prod v_i^{U_mi}
    primed = []
    for m_row in range(k):
        acc = GaussianRational(1)
        for i in range(k):
            e = u[m_row][i]
            if e:
                acc = acc * (values[i] ** int(e))
        primed.append(acc)
    eta = [GaussianRational(1)] * n
    for m_row in range(k):
        diag = s[m_row][m_row] if m_row < min(k, n) else 0
        if diag == 0:
            if primed[m_row] != GaussianRational(1):
                return "inconsistent", None
        else:
            root = gaussian_nth_root(primed[m_row], diag)
            if root is None:
                return "stuck", None
            eta[m_row] = root
    # zeta_j = prod_k eta_k^{V_jk}
    out = []
    for j in range(n):
        acc = GaussianRational(1)
        for kk in range(n):
            e = v[j][kk]
            if e:
                acc = acc * (eta[kk] ** int(e))
        out.append(acc)
    return "solved", tuple(out)


# ---------------------------------------------------------------------------
# generic-field linear algebra (coefficients in Q(i) or Q(i)(t))
# ---------------------------------------------------------------------------

def solve_field_system(rows, rhs, zero, one):
    """Solve over an exact field. Returns (particular, nullspace) or
    (None, nullspace) when inconsistent."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[rows[i][j] for j in range(n)] + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if not _is_zero(aug[i][c])), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = one / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and not _is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if not _is_zero(aug[i][n]):
            return None, _field_nullspace(aug, pivots, n, zero, one)
    sol = [zero] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol, _field_nullspace(aug, pivots, n, zero, one)


def _field_nullspace(aug, pivots, n, zero, one):
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * n
        vec[fc] = one
        for i, pc in enumerate(pivots):
            vec[pc] = zero - aug[i][fc]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# gradient systems (non-degeneracy of a face form)
# ---------------------------------------------------------------------------

def decide_gradient_system(terms, n, d_value, exact_field=True,
                           seed=0, face_key="", budget=200):
    """Does theta_i L = 0 (i = 1..n) have a solution on the torus?

    terms maps lattice exponents (length n) to nonzero coefficients; it is
    the collected face form. For d_value == 0 the value equation L = 0 is
    included instead of relying on weighted homogeneity.
    """
    supp = sorted(terms)
    k = len(supp)
    equations = [m for m in euler_maps(terms, n) if m]
    if d_value == 0:
        equations = [dict(terms)] + equations
    if k == 1:
        return Outcome(EMPTY, method="monomial-face",
                       detail="single monomial never vanishes on the torus")
    diffs = [linalg.sub_vec(l, supp[0]) for l in supp[1:]]
    dim = linalg.rank([list(d) for d in diffs])
    if dim == 1:
        return _decide_collinear(terms, supp, d_value, equations,
                                 exact_field, seed, face_key, budget)
    if dim == 2:
        return _decide_planar(terms, supp, d_value, equations,
                              exact_field, seed, face_key, budget)
    return _fallback(equations, n, exact_field, seed, face_key, budget,
                     note=f"support dimension {dim} exceeds the subclass")


def _fallback(equations, n_vars, exact_field, seed, face_key, budget, note):
    if exact_field:
        rng = derived_rng(seed, face_key)
        w = random_search(equations, n_vars, rng, budget)
        if w is not None:
            return Outcome(SOLVABLE, witness=w, method="random-search",
                           detail="witness found by seeded search")
    return Outcome(UNKNOWN, method="capped", detail=note)


def _decide_collinear(terms, supp, d_value, equations, exact_field,
                      seed, face_key, budget):
    """Support on a line: reduce to univariate square-free/gcd algebra."""
    n = len(supp[0])
    base = supp[0]
    delta = None
    for l in supp[1:]:
        d = linalg.sub_vec(l, base)
        if not is_zero_vec(d):
            delta = primitive(d)
            break
    # orient so all support points sit at nonnegative steps from the base
    steps = []
    for l in supp:
        d = linalg.sub_vec(l, base)
        j = next(i for i in range(n) if delta[i] != 0)
        steps.append(Fraction(d[j], delta[j]))
    if min(steps) < 0:
        shift = min(steps)
        base = supp[steps.index(shift)]
        steps = [s - shift for s in steps]
    assert all(s.denominator == 1 and s >= 0 for s in steps)
    degree_of = {l: int(s) for l, s in zip(supp, steps)}
    sample = next(iter(terms.values()))
    zero = sample - sample
    coeffs = [zero] * (max(degree_of.values()) + 1)
    for l, c in terms.items():
        coeffs[degree_of[l]] = coeffs[degree_of[l]] + c
    p = Poly(coeffs, zero=zero, one=sample / sample)
    pprime = p.derivative()

    parallel = linalg.rank([list(base), list(delta)]) <= 1
    if parallel and d_value != 0:
        # base = c * delta with c != 0: gradient reduces to c*P + u*P' = 0
        j = next(i for i in range(n) if delta[i] != 0)
        c = Fraction(base[j], delta[j])
        target = p.scale(c.numerator) + pprime.shift(1).scale(c.denominator)
        reason = "parallel support line: roots of c*P + u*P'"
    else:
        # independent (or d = 0): need P and P' to vanish together
        target = poly_gcd(p, pprime)
        reason = "repeated nonzero roots of the line polynomial"
    if target.degree() <= 0:
        return Outcome(EMPTY, method="collinear-exact", detail=reason)
    modulus = squarefree_part(target)
    if not exact_field:
        return Outcome(SOLVABLE, method="collinear-exact",
                       detail=reason + "; witness via specialization")
    return _witness_from_line(modulus, delta, len(supp[0]), equations,
                              reason, seed, face_key, budget)


def _witness_from_line(modulus, delta, n, equations, reason,
                       seed, face_key, budget):
    """Build a witness xi with xi^delta = root of the modulus."""
    mvec = bezout_vector(delta)  # <mvec, delta> = 1 (delta primitive)
    names = tuple(f"v{i+1}" for i in range(n))
    for root in gaussian_roots(modulus):
        if root.is_zero():
            continue
        values = tuple(root ** int(mvec[i]) for i in range(n))
        w = PointWitness(names, values)
        if w.verify(equations):
            return Outcome(SOLVABLE, witness=w, method="collinear-exact",
                           detail=reason)
    # algebraic witness: coordinates are powers of s modulo the modulus
    m = modulus
    if not m.constant_term().is_zero():
        s_poly = Poly.variable()
        values = []
        ok = True
        for i in range(n):
            e = mvec[i]
            if e >= 0:
                val = Poly([GaussianRational(0)] * e + [GaussianRational(1)]) % m
            else:
                inv = _poly_mod_inverse(s_poly, m)
                if inv is None:
                    ok = False
                    break
                val = Poly.constant(GaussianRational(1))
                for _ in range(-e):
                    val = (val * inv) % m
            values.append(val)
        if ok:
            w = AlgebraicWitness(names, values, m)
            if w.verify(equations):
                return Outcome(SOLVABLE, witness=w, method="collinear-exact",
                               detail=reason + "; algebraic witness")
    return _fallback(equations, n, True, seed, face_key, budget,
                     note=reason + "; witness construction failed")


def _decide_planar(terms, supp, d_value, equations, exact_field,
                   seed, face_key, budget):
    """Support of affine dimension two: reduce to two torus variables."""
    n = len(supp[0])
    base = supp[0]
    diffs = [linalg.sub_vec(l, base) for l in supp[1:]]
    basis, completion = linalg.saturation_basis([list(d) for d in diffs])
    assert len(basis) == 2
    w_inv = linalg.invert_unimodular([list(r) for r in completion])
    base_coords = _int_coords(base, completion)
    if d_value == 0 and all(c == 0 for c in base_coords[2:]):
        return _fallback(equations, n, exact_field, seed, face_key, budget,
                         note="zero-degree planar face outside the subclass")

    reduced = {}
    for l, c in terms.items():
        d = linalg.sub_vec(l, base)
        coords = _int_coords(d, completion)
        assert all(x == 0 for x in coords[2:])
        reduced[(coords[0], coords[1])] = c
    exps = sorted(reduced)
    k = len(exps)
    sample = next(iter(terms.values()))
    one = sample / sample
    zero = sample - sample

    if k == 3:
        # after normalizing by one term, the monomial values must solve an
        # inconsistent linear system
        return Outcome(EMPTY, method="planar-trinomial",
                       detail="three-term planar face function is regular "
                              "on the torus")
    if k == 4:
        return _decide_planar_quadrinomial(
            reduced, exps, terms, completion, w_inv, equations,
            exact_field, zero, one, seed, face_key, budget, n)
    return _fallback(equations, n, exact_field, seed, face_key, budget,
                     note=f"planar face with {k} terms exceeds the subclass")


def _int_coords(vec, completion):
    """Integer coordinates of vec in the rows of a unimodular matrix."""
    sol, _ = linalg.solve_rational(
        [list(col) for col in zip(*completion)], list(vec)
    )
    assert sol is not None and all(x.denominator == 1 for x in sol)
    return tuple(int(x) for x in sol)


def _decide_planar_quadrinomial(reduced, exps, terms, completion, w_inv,
                                equations, exact_field, zero, one,
                                seed, face_key, budget, n):
    """Four-term planar face: linearize in the three non-base monomials."""
    base_exp = (0, 0)
    assert base_exp in exps
    others = [e for e in exps if e != base_exp]
    c0 = reduced[base_exp]
    # relative exponents and coefficients
    rel = [(e[0] - base_exp[0], e[1] - base_exp[1]) for e in others]
    cs = [reduced[e] / c0 for e in others]
    rows = [
        [one, one, one],
        [one * rel[0][0], one * rel[1][0], one * rel[2][0]],
        [one * rel[0][1], one * rel[1][1], one * rel[2][1]],
    ]
    rhs = [zero - one, zero, zero]
    sol, null = solve_field_system(rows, rhs, zero, one)
    if sol is None:
        return Outcome(EMPTY, method="planar-quadrinomial",
                       detail="monomial-value system is inconsistent")
    kappas = linalg.left_kernel_basis([list(r) for r in rel])
    if not null:
        ms = sol
        if any(_is_zero(m) for m in ms):
            return Outcome(EMPTY, method="planar-quadrinomial",
                           detail="forced monomial value vanishes")
        for kappa in kappas:
            if not _relation_holds(ms, cs, kappa, one):
                return Outcome(EMPTY, method="planar-quadrinomial",
                               detail="multiplicative relation fails")
        if not exact_field:
            return Outcome(SOLVABLE, method="planar-quadrinomial",
                           detail="monomial values realizable; witness via "
                                  "specialization")
        return _witness_from_monomial_values(
            rel, [m / c for m, c in zip(ms, cs)], completion, w_inv,
            equations, n, seed, face_key, budget)
    if len(null) == 1:
        return _decide_planar_one_parameter(
            sol, null[0], cs, rel, kappas, completion, w_inv, equations,
            exact_field, zero, one, seed, face_key, budget, n)
    return _fallback(equations, n, exact_field, seed, face_key, budget,
                     note="degenerate planar system outside the subclass")


def _relation_holds(ms, cs, kappa, one):
    acc = one
    for m, c, e in zip(ms, cs, kappa):
        if e:
            acc = acc * ((m / c) ** int(e))
    return acc == one


def _witness_from_monomial_values(rel, values, completion, w_inv,
                                  equations, n, seed, face_key, budget):
    """Solve u^{rel_j} = values_j in (C*)^2 and map back to the torus."""
    status, assignment = solve_monomial_system(rel, list(values))
    if status == "inconsistent":
        return Outcome(EMPTY, method="planar-quadrinomial",
                       detail="monomial system inconsistent")
    if status == "solved":
        u_full = list(assignment) + [GaussianRational(1)] * (n - 2)
        names = tuple(f"v{i+1}" for i in range(n))
        values_xi = []
        for j in range(n):
            acc = GaussianRational(1)
            for kk in range(n):
                e = w_inv[j][kk]
                if e:
                    acc = acc * (u_full[kk] ** int(e))
            values_xi.append(acc)
        w = PointWitness(names, values_xi)
        if w.verify(equations):
            return Outcome(SOLVABLE, witness=w, method="planar-quadrinomial",
                           detail="witness from monomial-value solve")
    return _fallback(equations, n, True, seed, face_key, budget,
                     note="planar solutions exist but witness roots are not "
                          "Gaussian rational")


def _decide_planar_one_parameter(sol, direction, cs, rel, kappas,
                                 completion, w_inv, equations, exact_field,
                                 zero, one, seed, face_key, budget, n):
    """Solution family M(tau) = sol + tau*direction; eliminate with the
    single multiplicative relation."""
    m_polys = [
        Poly([sol[j], direction[j]], zero=zero, one=one) for j in range(3)
    ]
    if any(mp.is_zero() for mp in m_polys):
        return Outcome(EMPTY, method="planar-quadrinomial",
                       detail="monomial value forced to zero along the "
                              "solution family")
    if not kappas:
        return _fallback(equations, n, exact_field, seed, face_key, budget,
                         note="missing relation for planar family")
    kappa = kappas[0]
    lhs = Poly.constant(one, zero=zero, one=one)
    rhs_acc = one
    rhs_poly = Poly.constant(one, zero=zero, one=one)
    for mp, c, e in zip(m_polys, cs, kappa):
        e = int(e)
        if e > 0:
            for _ in range(e):
                lhs = lhs * mp
            rhs_acc = rhs_acc * (c ** e)
        elif e < 0:
            for _ in range(-e):
                rhs_poly = rhs_poly * mp
            rhs_acc = rhs_acc * (c ** e)
    # relation: lhs(tau) = rhs_acc^{-1}... gather as lhs - C*rhs_poly = 0
    relation = lhs - rhs_poly.scale(rhs_acc)
    product_all = Poly.constant(one, zero=zero, one=one)
    for mp in m_polys:
        product_all = product_all * mp
    if relation.is_zero():
        if not exact_field:
            return Outcome(SOLVABLE, method="planar-quadrinomial",
                           detail="relation degenerate: the whole family is "
                                  "realizable; witness via specialization")
        candidates = _tau_candidates(exact_field)
        for tau in candidates:
            values = [mp.evaluate(tau) for mp in m_polys]
            if any(_is_zero(v) for v in values):
                continue
            out = _planar_family_witness(values, cs, rel, completion, w_inv,
                                         equations, exact_field, n,
                                         seed, face_key, budget)
            if out is not None:
                return out
        return _fallback(equations, n, exact_field, seed, face_key, budget,
                         note="relation degenerate; no sample point landed")
    h = relation
    g = poly_gcd(h, product_all)
    if g.degree() >= 1:
        h = h.divmod(g)[0]
    if h.degree() < 1:
        return Outcome(EMPTY, method="planar-quadrinomial",
                       detail="all relation roots collapse a monomial value")
    if not exact_field:
        return Outcome(SOLVABLE, method="planar-quadrinomial",
                       detail="relation has admissible roots; witness via "
                              "specialization")
    for tau in gaussian_roots(h):
        values = [mp.evaluate(tau) for mp in m_polys]
        if any(_is_zero(v) for v in values):
            continue
        out = _planar_family_witness(values, cs, rel, completion, w_inv,
                                     equations, exact_field, n,
                                     seed, face_key, budget)
        if out is not None:
            return out
    return _fallback(equations, n, True, seed, face_key, budget,
                     note="planar family solvable but roots are not "
                          "Gaussian rational")


def _tau_candidates(exact_field):
    if not exact_field:
        return []
    return [GaussianRational(x) for x in (1, -1, 2, -2, 3, -3)] + [
        GaussianRational(Fraction(1, 2)), GaussianRational(0, 1)
    ]


def _planar_family_witness(values, cs, rel, completion, w_inv, equations,
                           exact_field, n, seed, face_key, budget):
    if not exact_field:
        return Outcome(SOLVABLE, method="planar-quadrinomial",
                       detail="family point realizable; witness via "
                              "specialization")
    out = _witness_from_monomial_values(
        rel, [v / c for v, c in zip(values, cs)], completion, w_inv,
        equations, n, seed, face_key, budget)
    if out.status == SOLVABLE and out.witness is not None:
        return out
    return None


# ---------------------------------------------------------------------------
# general equation systems (local tameness)
# ---------------------------------------------------------------------------

def decide_equation_system(equations, n_vars, exact_field=True,
                           seed=0, face_key="", budget=200):
    """Does the system of term maps have a common zero on the torus?

    Identically-zero equations must be removed by the caller or are removed
    here; an empty system is solvable everywhere.
    """
    eqs = [dict(e) for e in equations if e]
    names = tuple(f"v{i+1}" for i in range(n_vars))
    if not eqs:
        w = PointWitness(names, tuple(GaussianRational(1)
                                      for _ in range(n_vars)))
        return Outcome(SOLVABLE, witness=w, method="identically-zero",
                       detail="all equations vanish identically; every "
                              "torus point is a solution")
    if any(len(e) == 1 for e in eqs):
        return Outcome(EMPTY, method="monomial-partial",
                       detail="a single-monomial equation never vanishes "
                              "on the torus")
    if all(len(e) == 2 for e in eqs):
        return _decide_binomial_system(eqs, n_vars, names, exact_field,
                                       seed, face_key, budget)
    if len(eqs) == 1:
        return _decide_single_equation(eqs[0], n_vars, names, exact_field,
                                       seed, face_key, budget)
    return _fallback(eqs, n_vars, exact_field, seed, face_key, budget,
                     note="multi-equation system outside the subclass")


def _decide_binomial_system(eqs, n_vars, names, exact_field,
                            seed, face_key, budget):
    gammas = []
    values = []
    for e in eqs:
        (ea, ca), (eb, cb) = sorted(e.items())
        gamma = linalg.sub_vec(ea, eb)
        v = (cb / ca) * (-1)
        gammas.append(tuple(gamma))
        values.append(v)
    if not exact_field:
        # consistency is a rational-function identity; decide it exactly
        kernel = linalg.left_kernel_basis([list(g) for g in gammas])
        for kappa in kernel:
            acc = None
            for val, e in zip(values, kappa):
                p = val ** int(e) if e else None
                if p is not None:
                    acc = p if acc is None else acc * p
            if acc is not None and not _is_zero(acc - (acc / acc)):
                return Outcome(EMPTY, method="binomial-system",
                               detail="character relation fails")
        return Outcome(SOLVABLE, method="binomial-system",
                       detail="character relations hold; witness via "
                              "specialization")
    status, assignment = solve_monomial_system(gammas, values)
    if status == "inconsistent":
        return Outcome(EMPTY, method="binomial-system",
                       detail="character relation fails on the torus")
    if status == "solved":
        w = PointWitness(names, assignment)
        if w.verify(eqs):
            return Outcome(SOLVABLE, witness=w, method="binomial-system",
                           detail="witness from character solve")
    return _fallback(eqs, n_vars, exact_field, seed, face_key, budget,
                     note="binomial system solvable but roots are not "
                          "Gaussian rational")


def _decide_single_equation(eq, n_vars, names, exact_field,
                            seed, face_key, budget):
    """A single equation with >= 3 terms always vanishes somewhere on the
    torus; build a witness through a one-parameter substitution."""
    if not exact_field:
        return Outcome(SOLVABLE, method="curve-substitution",
                       detail="multi-term equation always vanishes on the "
                              "torus; witness via specialization")
    # cheap pass first: small rational points give far nicer witnesses than
    # the curve substitution below
    rng = derived_rng(seed, face_key)
    quick = random_search([eq], n_vars, rng, min(budget, 150))
    if quick is not None:
        return Outcome(SOLVABLE, witness=quick, method="curve-substitution",
                       detail="witness by direct search")
    exps = sorted(eq)
    mu = _separating_direction(exps, n_vars)
    projections = [dot(mu, e) for e in exps]
    shift = min(projections)
    sample = next(iter(eq.values()))
    zero = sample - sample
    coeffs = [zero] * (max(projections) - shift + 1)
    for e, proj in zip(exps, projections):
        coeffs[proj - shift] = coeffs[proj - shift] + eq[e]
    p = Poly(coeffs, zero=zero, one=sample / sample)
    assert p.term_count() >= 2
    for root in gaussian_roots(p):
        if root.is_zero():
            continue
        values = tuple(root ** int(mu[i]) for i in range(n_vars))
        w = PointWitness(names, values)
        if w.verify([eq]):
            return Outcome(SOLVABLE, witness=w, method="curve-substitution",
                           detail="witness on a one-parameter subgroup")
    m = squarefree_part(p)
    if not m.constant_term().is_zero() and m.degree() >= 1:
        s_poly = Poly.variable()
        inv = _poly_mod_inverse(s_poly, m)
        values = []
        ok = True
        for i in range(n_vars):
            e = mu[i]
            if e >= 0:
                val = Poly([GaussianRational(0)] * e +
                           [GaussianRational(1)]) % m
            else:
                if inv is None:
                    ok = False
                    break
                val = Poly.constant(GaussianRational(1))
                for _ in range(-e):
                    val = (val * inv) % m
            values.append(val)
        if ok:
            w = AlgebraicWitness(names, values, m)
            if w.verify([eq]):
                return Outcome(SOLVABLE, witness=w,
                               method="curve-substitution",
                               detail="algebraic witness on a one-parameter "
                                      "subgroup")
    return _fallback([eq], n_vars, exact_field, seed, face_key, budget,
                     note="single-equation witness construction failed")


def _separating_direction(exps, n_vars):
    """An integer direction giving distinct values on all exponents.

    Small directions keep the substituted polynomial (and hence any
    algebraic witness modulus) small, so they are tried first.
    """
    if n_vars <= 6:
        for bound in (1, 2, 3):
            for mu in itertools.product(range(bound + 1), repeat=n_vars):
                if all(m == 0 for m in mu):
                    continue
                proj = [dot(mu, e) for e in exps]
                if len(set(proj)) == len(exps):
                    return mu
    spread = 1 + max(
        max(abs(x) for x in e) if e else 0 for e in exps
    )
    for b in range(spread, 4 * spread + 2):
        mu = tuple(b ** i for i in range(n_vars))
        proj = [dot(mu, e) for e in exps]
        if len(set(proj)) == len(exps):
            return mu
    raise AssertionError("no separating direction found")
