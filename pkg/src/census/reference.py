"""Published reference values the census and the report are checked against."""
import sympy

from src.census.models import Degree, PorcPolynomial, q, v

# at p = 2 the highest short root of types B, C and F is central, so it spans a normal set of its own
REPRESENTABLE_COUNTS = {
    ("A", 4, 2): 42,
    ("A", 4, 3): 42,
    ("B", 4, 2): 99,
    ("C", 4, 2): 99,
    ("B", 4, 3): 70,
    ("C", 4, 3): 70,
    ("D", 4, 2): 50,
    ("D", 4, 3): 50,
    ("F", 4, 2): 191,
    ("F", 4, 3): 105,
}

F4_FORMS = {
    (2, 4, 1): 186,
    (3, 10, 9): 1,
    (4, 8, 2): 2,
    (4, 8, 4): 7,
    (4, 10, 5): 2,
    (4, 11, 6): 1,
    (4, 11, 7): 1,
    (4, 12, 9): 2,
    (5, 9, 3): 2,
    (5, 9, 4): 4,
    (5, 11, 6): 2,
    (6, 10, 4): 1,
}
F4_CORES = 211
F4_CLASSES = 14

B4_FORMS = {
    (2, 4, 1): 51,
    (4, 8, 2): 1,
    (4, 11, 6): 1,
}

# k(UF4(q), D) in v = q - 1
F4_DEGREES: dict[Degree, str] = {
    (0, 0): "v**4+4*v**3+6*v**2+4*v+1",
    (1, 1): "4*v**4+8*v**3+4*v**2",
    (1, 0): "2*v**5+8*v**4+14*v**3+12*v**2+4*v",
    (2, 1): "8*v**4+16*v**3+8*v**2",
    (2, 0): "2*v**6+12*v**5+27*v**4+30*v**3+17*v**2+4*v",
    (3, 1): "12*v**4+24*v**3+12*v**2",
    (3, 0): "8*v**5+28*v**4+36*v**3+20*v**2+4*v",
    (4, 3): "8*v**4",
    (4, 2): "8*v**6/3+80*v**5/3+98*v**4/3",
    (4, 1): "10*v**6+60*v**5+114*v**4+80*v**3+8*v**2",
    (4, 0): "2*v**8+16*v**7+160*v**6/3+280*v**5/3+301*v**4/3+68*v**3+23*v**2+2*v",
    (5, 1): "8*v**5+24*v**4+24*v**3+8*v**2",
    (5, 0): "2*v**7+14*v**6+38*v**5+50*v**4+34*v**3+12*v**2+2*v",
    (6, 1): "16*v**5+40*v**4+32*v**3+8*v**2",
    (6, 0): "2*v**7+15*v**6+40*v**5+53*v**4+36*v**3+13*v**2+2*v",
    (7, 1): "4*v**6+24*v**5+48*v**4+40*v**3+12*v**2",
    (7, 0): "2*v**6+10*v**5+20*v**4+20*v**3+10*v**2+2*v",
    (8, 1): "8*v**5+32*v**4+32*v**3+8*v**2",
    (8, 0): "v**6+8*v**5+18*v**4+18*v**3+7*v**2",
    (9, 1): "8*v**5+28*v**4+24*v**3+4*v**2",
    (9, 0): "2*v**4+4*v**3+2*v**2",
    (10, 2): "16*v**4",
    (10, 1): "8*v**3",
}

F4_TOTAL = "2*q**8+4*q**7+20*q**6+46*q**5-136*q**4-16*q**3+158*q**2-94*q+17"
F4_TOTAL_AT_2 = 1933
F4_MALLE_DEGREE: Degree = (4, 3)


def in_q(expr: str) -> PorcPolynomial:
    """Parse a count written in v = q - 1 into a parity-independent polynomial in q."""
    return PorcPolynomial(sympy.sympify(expr, locals={"v": v}).subs(v, q - 1))


def f4_degree_table() -> dict[Degree, PorcPolynomial]:
    return {degree: in_q(expr) for degree, expr in F4_DEGREES.items()}


def f4_total() -> PorcPolynomial:
    return PorcPolynomial(sympy.sympify(F4_TOTAL, locals={"q": q}))
