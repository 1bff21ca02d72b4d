"""Exact integer and rational linear algebra.

Everything here operates on tuples/lists of ints or Fractions. Matrices are
lists of rows. Sizes are tiny (ambient dimension is capped at 4), so the
implementations favour clarity and exactness over asymptotics.
"""
from __future__ import annotations

import math
from fractions import Fraction


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = math.gcd(g, abs(int(x)))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = vector_gcd(v)
    if g == 0:
        return tuple(0 for _ in v)
    return tuple(int(x) // g for x in v)


def integerize(v):
    """Scale a rational vector to a primitive integer vector (same ray)."""
    denom = 1
    for x in v:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    scaled = [int(Fraction(x) * denom) for x in v]
    return primitive(scaled)


def add_vec(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub_vec(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale_vec(c, v):
    return tuple(c * a for a in v)


def is_zero_vec(v):
    return all(x == 0 for x in v)


# ---------------------------------------------------------------------------
# rational elimination
# ---------------------------------------------------------------------------

def rank(rows) -> int:
    """Rank of a matrix with int/Fraction entries."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve_rational(a_rows, b):
    """Solve A x = b over the rationals.

    Returns (particular_solution, nullspace_basis) with Fraction entries,
    or (None, nullspace_basis) if the system is inconsistent.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None, _nullspace_from_rref(aug, pivots, n)
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol, _nullspace_from_rref(aug, pivots, n)


def _nullspace_from_rref(aug, pivots, n):
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -aug[i][fc]
        basis.append(tuple(v))
    return basis


def invert_unimodular(m_rows):
    """Inverse of a unimodular integer matrix, as integer rows."""
    n = len(m_rows)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m_rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        assert all(x.denominator == 1 for x in row), "matrix was not unimodular"
        out.append(tuple(int(x) for x in row))
    return out


def mat_mul(a_rows, b_rows):
    bt = list(zip(*b_rows))
    return [tuple(dot(row, col) for col in bt) for row in a_rows]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(a_rows):
    """Return (U, S, V) with U*A*V = S diagonal, U and V unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    s = [[int(x) for x in row] for row in a_rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        s[dst] = [a + f * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + f * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in s:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # locate smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0 and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if s[t][t] < 0:
            negate_row(t)
        # clear the pivot row and column
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    add_row(i, t, -q)
                    if s[i][t] != 0:
                        swap_rows(t, i)
                        if s[t][t] < 0:
                            negate_row(t)
                        dirty = True
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    add_col(j, t, -q)
                    if s[t][j] != 0:
                        swap_cols(t, j)
                        if s[t][t] < 0:
                            negate_row(t)
                        dirty = True
        # enforce divisibility of later entries by the pivot
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if s[i][j] % s[t][t] != 0:
                    add_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
    return [tuple(r) for r in u], [tuple(r) for r in s], [tuple(r) for r in v]


def left_kernel_basis(a_rows):
    """Basis of {x integer row : x A = 0}; the lattice is saturated."""
    m = len(a_rows)
    if m == 0:
        return []
    u, s, _ = smith_normal_form(a_rows)
    n = len(a_rows[0])
    out = []
    for i in range(m):
        diag = s[i][i] if i < min(m, n) else 0
        if diag == 0:
            out.append(tuple(u[i]))
    return out


def right_kernel_basis(a_rows):
    """Basis of {x integer column : A x = 0}; the lattice is saturated."""
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    if n == 0:
        return []
    _, s, v = smith_normal_form(a_rows)
    out = []
    for j in range(n):
        diag = s[j][j] if j < min(m, n) else 0
        if diag == 0:
            out.append(tuple(v[i][j] for i in range(n)))
    return out


def saturation_basis(vectors):
    """Basis of span(vectors) ∩ Z^n together with a unimodular completion.

    Returns (basis, completion) where basis is a list of rho rows spanning the
    saturated lattice and completion is an n x n unimodular matrix whose first
    rho rows are exactly the basis.
    """
    vecs = [tuple(int(x) for x in v) for v in vectors]
    n = len(vecs[0])
    _, s, v = smith_normal_form(vecs)
    rho = sum(1 for i in range(min(len(vecs), n)) if s[i][i] != 0)
    w = invert_unimodular(v)  # rows of V^{-1}
    basis = [tuple(w[i]) for i in range(rho)]
    completion = [tuple(w[i]) for i in range(n)]
    return basis, completion


def coordinates_in_basis(vec, basis):
    """Integer coordinates of vec in the given lattice basis, or None."""
    sol, _ = solve_rational(list(zip(*[list(b) for b in basis])), list(vec))
    if sol is None:
        return None
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


# ---------------------------------------------------------------------------
# nonnegative integer combinations (semigroup membership)
# ---------------------------------------------------------------------------

def nonneg_int_combination(target, generators, functional):
    """Find a nonnegative-integer combination of generators equal to target.

    functional must pair strictly positively with every generator (it bounds
    the search). Returns a tuple of multiplicities or None.
    """
    target = tuple(int(x) for x in target)
    gens = [tuple(int(x) for x in g) for g in generators]
    values = [dot(functional, g) for g in gens]
    if any(v <= 0 for v in values):
        raise ValueError("functional must be strictly positive on generators")
    order = sorted(range(len(gens)), key=lambda i: -values[i])
    coeffs = [0] * len(gens)

    def rec(remaining, budget, pos):
        if is_zero_vec(remaining):
            return True
        if pos == len(order) or budget <= 0:
            return False
        idx = order[pos]
        g, val = gens[idx], values[idx]
        top = budget // val
        # also bound by coordinates where allowed (all generator entries >= 0
        # in the cones we use, but stay general and rely on the functional)
        for k in range(top, -1, -1):
            coeffs[idx] = k
            nxt = tuple(r - k * gi for r, gi in zip(remaining, g))
            if rec(nxt, budget - k * val, pos + 1):
                return True
        coeffs[idx] = 0
        return False

    if rec(target, dot(functional, target), 0):
        return tuple(coeffs)
    return None


# ---------------------------------------------------------------------------
# exact feasibility LP (phase-1 simplex with Bland's rule)
# ---------------------------------------------------------------------------

def nonneg_solve_exact(columns, target):
    """Decide whether target is a nonnegative rational combination of columns.

    columns: list of equal-length integer/rational vectors. Returns a list of
    Fraction coefficients or None. This is the independent membership oracle
    for cone computations (simplex, not the dual description).
    """
    if not columns:
        return [] if is_zero_vec(target) else None
    m = len(target)
    k = len(columns)
    # rows of the tableau: A x + I s = b with b >= 0 after sign flips
    a = [[Fraction(columns[j][i]) for j in range(k)] for i in range(m)]
    b = [Fraction(x) for x in target]
    for i in range(m):
        if b[i] < 0:
            b[i] = -b[i]
            a[i] = [-x for x in a[i]]
    # artificial variables get indices k..k+m-1
    tableau = [a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [b[i]]
               for i in range(m)]
    basis = list(range(k, k + m))
    total = k + m

    def objective_row():
        # phase-1 objective: sum of artificial variables, expressed in the
        # current basis
        row = [Fraction(0)] * (total + 1)
        for i, bi in enumerate(basis):
            if bi >= k:
                row = [r + c for r, c in zip(row, tableau[i])]
        return row

    obj = objective_row()
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise RuntimeError("simplex failed to terminate")
        # artificial variables never re-enter; only the k original columns do
        enter = next((j for j in range(k) if j not in basis and obj[j] > 0), None)
        if enter is None:
            break
        ratios = [(tableau[i][total] / tableau[i][enter], basis[i], i)
                  for i in range(m) if tableau[i][enter] > 0]
        if not ratios:
            break  # unbounded phase-1 cannot happen, but stay safe
        _, _, leave = min(ratios, key=lambda t: (t[0], t[1]))
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[leave])]
        basis[leave] = enter
        obj = objective_row()
    if obj[total] != 0:
        return None
    coeffs = [Fraction(0)] * k
    for i, bi in enumerate(basis):
        if bi < k:
            coeffs[bi] = tableau[i][total]
        elif tableau[i][total] != 0:
            return None
    return coeffs
