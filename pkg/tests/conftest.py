"""Shared fixtures: the standing example varieties and polynomials."""
import pytest

from toricsing.errors import ToricError
from toricsing.newton import ToricPolynomial, torus_form
from toricsing.rationals import GaussianRational
from toricsing.variety import build_variety


def gr(x, y=0):
    return GaussianRational(x, y)


def sympy_gradient_torus_solvable(terms, n):
    """Independent oracle: does the Euler-gradient system of the lattice
    form have a torus zero? Decided by a Groebner basis saturated at the
    coordinate product."""
    import sympy

    xs = sympy.symbols(f"x1:{n + 1}")
    y = sympy.Symbol("y")
    L = sympy.Integer(0)
    for lam, coeff in terms.items():
        mono = sympy.Integer(1)
        for xi, e in zip(xs, lam):
            mono *= xi ** int(e)
        c = (sympy.Rational(coeff.re.numerator, coeff.re.denominator)
             + sympy.I * sympy.Rational(coeff.im.numerator,
                                        coeff.im.denominator))
        L += c * mono
    eqs = []
    for xi in xs:
        d = sympy.expand(xi * sympy.diff(L, xi))
        if d != 0:
            eqs.append(d)
    sat = 1 - y * sympy.prod(xs)
    gb = sympy.groebner(eqs + [sat], *xs, y, order="grevlex")
    return list(gb.exprs) != [sympy.Integer(1)]


def random_polynomial(rng, variety, max_terms=4, max_exp=3,
                      gaussian=True):
    """A random nonzero polynomial on the variety with small exponents."""
    r = variety.r
    while True:
        k = rng.randint(2, max_terms)
        terms = {}
        for _ in range(k):
            exp = tuple(
                rng.randint(0, max_exp) if rng.random() < 0.7 else 0
                for _ in range(r)
            )
            if all(e == 0 for e in exp):
                continue
            if gaussian:
                c = GaussianRational(rng.randint(-3, 3), rng.randint(-1, 1))
            else:
                c = GaussianRational(rng.randint(-3, 3))
            if c.is_zero():
                c = GaussianRational(1)
            terms[exp] = c
        if not terms:
            continue
        try:
            g = ToricPolynomial(variety, terms)
        except ToricError:
            continue
        if not torus_form(g).is_zero():
            return g


@pytest.fixture(scope="session")
def surface_variety():
    """n=2 variety with dual cone ((1,0),(1,2)) and three generators."""
    return build_variety(sigma_rays=[(0, 1), (2, -1)])


@pytest.fixture(scope="session")
def space_c3():
    """Affine 3-space as a toric variety, z_k bound to the k-th axis."""
    return build_variety(generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture(scope="session")
def embedded_3fold():
    """The n=3 variety embedded in C^4 with the 4-generator system."""
    return build_variety(
        generators=[(0, 1, 2), (2, 1, 0), (1, 0, 3), (1, 1, 1)]
    )


def staircase(q):
    return build_variety(generators=[(1, j) for j in range(q + 1)])


@pytest.fixture(scope="session")
def staircase_q5():
    return staircase(5)


@pytest.fixture(scope="session")
def quartic_mixed(surface_variety):
    """z1^4 + z1^2 z2 + z1 z2^2 - z1 z2 z3^2 on the surface variety."""
    return ToricPolynomial(
        surface_variety,
        {
            (4, 0, 0): gr(1),
            (2, 1, 0): gr(1),
            (1, 2, 0): gr(1),
            (1, 1, 2): gr(-1),
        },
    )


@pytest.fixture(scope="session")
def quartic_vertical(surface_variety):
    """z1^4 + z2^4 z3 - z2^2 z3^2 on the surface variety."""
    return ToricPolynomial(
        surface_variety,
        {
            (4, 0, 0): gr(1),
            (0, 4, 1): gr(1),
            (0, 2, 2): gr(-1),
        },
    )


@pytest.fixture(scope="session")
def quartic_vertical_c3(space_c3):
    """z1^4 + z2 z3^4 - z2^2 z3^2 on affine 3-space."""
    return ToricPolynomial(
        space_c3,
        {
            (4, 0, 0): gr(1),
            (0, 1, 4): gr(1),
            (0, 2, 2): gr(-1),
        },
    )


@pytest.fixture(scope="session")
def fourfold_poly(embedded_3fold):
    """z1^2 z3^3 + z2^2 z3^3 + z3^4 - 5 z3^3 z4^3 on the embedded 3-fold."""
    return ToricPolynomial(
        embedded_3fold,
        {
            (2, 0, 3, 0): gr(1),
            (0, 2, 3, 0): gr(1),
            (0, 0, 4, 0): gr(1),
            (0, 0, 3, 3): gr(-5),
        },
    )


@pytest.fixture(scope="session")
def tame_surface_poly(surface_variety):
    """z1^2 z3^2 - z2^3 z3^2 + z3^3 on the surface variety."""
    return ToricPolynomial(
        surface_variety,
        {
            (2, 0, 2): gr(1),
            (0, 3, 2): gr(-1),
            (0, 0, 3): gr(1),
        },
    )


@pytest.fixture(scope="session")
def untame_c3_poly(space_c3):
    """z1^2 z3^2 - z2^3 z3^2 + z3^3 on affine 3-space."""
    return ToricPolynomial(
        space_c3,
        {
            (2, 0, 2): gr(1),
            (0, 3, 2): gr(-1),
            (0, 0, 3): gr(1),
        },
    )
