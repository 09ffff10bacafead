from __future__ import annotations

import functools
import hashlib
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from src import messages
from src.config import config
from src.errors import PreconditionError, ZeroPolynomialError
from src.gfq.models import CubicCensus, FieldCtx

logger = logging.getLogger(__name__)

MAX_ROOT_DEGREE = 8


def moduli_path() -> Path:
    return Path(config.DATA_DIR) / "moduli.txt"


@functools.cache
def _moduli() -> dict[int, int]:
    table = {}
    for line in moduli_path().read_text().splitlines():
        if ":" in line:
            f, bits = line.split(":")
            table[int(f)] = int(bits.strip(), 2)
    return table


def moduli_checksum() -> str:
    return hashlib.sha256(moduli_path().read_bytes()).hexdigest()


def is_irreducible(modulus: int) -> bool:
    """Brute-force factor search over all polynomials of degree at most deg/2."""
    degree = modulus.bit_length() - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _poly_mod(modulus, g) == 0:
                return False
    return True


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def field_ctx(f: int, modulus: int | None = None) -> FieldCtx:
    """
    The field_ctx function builds GF(2^f) from the recorded modulus, or from an
    explicit one, after checking irreducibility.

    :param f: int: Degree of the extension
    :param modulus: int | None: Optional bit pattern of another irreducible polynomial
    :return: The field context
    """
    if modulus is None:
        if f not in _moduli():
            raise PreconditionError(messages.UNKNOWN_MODULUS.format(f=f))
        modulus = _moduli()[f]
    return _field_ctx(f, modulus)


@functools.cache
def _field_ctx(f: int, modulus: int) -> FieldCtx:
    if modulus.bit_length() - 1 != f or (f <= 20 and not is_irreducible(modulus)):
        raise PreconditionError(messages.REDUCIBLE_MODULUS.format(modulus=modulus))
    return FieldCtx(f=f, modulus=modulus)


def field_for_q(q: int) -> FieldCtx:
    if q < 2 or q & (q - 1):
        raise PreconditionError(messages.Q_OUT_OF_SCOPE.format(q=q, limit=config.NUMERIC_MAX_Q))
    return field_ctx(q.bit_length() - 1)


def trace(ctx: FieldCtx, x: int) -> int:
    t, y = 0, x
    for _ in range(ctx.f):
        t ^= y
        y = ctx.mul(y, y)
    return t


def in_ker_phi(ctx: FieldCtx, x: int) -> bool:
    """x = t^2 + t for some t, i.e. the trace of x vanishes."""
    return trace(ctx, x) == 0


def cube_roots(ctx: FieldCtx, c: int) -> list[int]:
    return [y for y in ctx.elements() if ctx.mul(ctx.mul(y, y), y) == c]


def evaluate(ctx: FieldCtx, coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.mul(acc, x) ^ c
    return acc


def count_roots(ctx: FieldCtx, coeffs: list[int]) -> int:
    """
    The count_roots function counts the distinct roots in GF(q) of the polynomial
    with low-to-high coefficients ``coeffs`` by evaluating it everywhere.

    :param ctx: FieldCtx: The field
    :param coeffs: list[int]: Coefficients, constant term first
    :return: Number of distinct roots
    """
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
    if len(coeffs) - 1 > MAX_ROOT_DEGREE:
        raise PreconditionError(messages.DEGREE_TOO_LARGE.format(degree=len(coeffs) - 1, limit=MAX_ROOT_DEGREE))
    return sum(1 for x in ctx.elements() if evaluate(ctx, coeffs, x) == 0)


def _poly_mul_mod(ctx: FieldCtx, a: list[int], b: list[int], m: list[int]) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] ^= ctx.mul(x, y)
    return _poly_rem(ctx, prod, m)


def _poly_rem(ctx: FieldCtx, a: list[int], m: list[int]) -> list[int]:
    a = list(a)
    lead_inv = ctx.inv(m[-1])
    while len(a) >= len(m):
        factor = ctx.mul(a[-1], lead_inv)
        shift = len(a) - len(m)
        for k, c in enumerate(m):
            a[shift + k] ^= ctx.mul(factor, c)
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_gcd(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    while b:
        a, b = b, _poly_rem(ctx, a, b)
    return a


def count_roots_gcd(ctx: FieldCtx, coeffs: list[int]) -> int:
    """Degree of gcd(P, X^q - X), an independent check of count_roots."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
    if len(coeffs) == 1:
        return 0
    # X^q mod P by repeated squaring of X
    x_pow = _poly_rem(ctx, [0, 1], coeffs)
    for _ in range(ctx.f):
        x_pow = _poly_mul_mod(ctx, x_pow, x_pow, coeffs)
    diff = list(x_pow) + [0] * max(0, 2 - len(x_pow))
    diff[1] ^= 1
    while diff and diff[-1] == 0:
        diff.pop()
    if not diff:
        return len(coeffs) - 1
    g = _poly_gcd(ctx, coeffs, diff)
    return len(g) - 1


def cubic_census_A(ctx: FieldCtx) -> CubicCensus:
    """Roots of X^3 + aX + b for all (a, b) with a, b nonzero."""
    census = CubicCensus(family="A", q=ctx.q, counts={0: 0, 1: 0, 3: 0})
    for a in ctx.units():
        for b in ctx.units():
            k = count_roots(ctx, [b, a, 0, 1])
            census.counts[k] = census.counts.get(k, 0) + 1
    return census


def cubic_census_B(ctx: FieldCtx) -> CubicCensus:
    """
    Roots of X^3 + (t/b + b^2)X + (t + c) over b nonzero, t nonzero with
    t != b^3, and c nonzero with c != t.
    """
    census = CubicCensus(family="B", q=ctx.q, counts={0: 0, 1: 0, 3: 0})
    for b in ctx.units():
        b_inv = ctx.inv(b)
        b2 = ctx.mul(b, b)
        b3 = ctx.mul(b2, b)
        for t in ctx.units():
            if t == b3:
                continue
            linear = ctx.mul(t, b_inv) ^ b2
            for c in ctx.units():
                if c == t:
                    continue
                k = count_roots(ctx, [t ^ c, linear, 0, 1])
                census.counts[k] = census.counts.get(k, 0) + 1
    return census


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


# closed forms as printed, keyed by (family, number of roots)
PRINTED = {
    ("A", 3): lambda q, f: Fraction((q - 1) * (q - 3 + _sign(f + 1)), 6),
    ("A", 1): lambda q, f: Fraction((q - 1) * (q - 1 + _sign(f + 1)), 2),
    ("A", 0): lambda q, f: Fraction((q - 1) * (q + _sign(f)), 3),
    ("B", 3): lambda q, f: Fraction((q - 5) * (q - 3 + _sign(f + 1)), 6),
    ("B", 1): lambda q, f: Fraction((q - 3) * (q - 1 + _sign(f)), 2),
    ("B", 0): lambda q, f: Fraction((q - 2) * (q + _sign(f + 1)), 3),
}


@dataclass
class CubicFit:
    family: str
    roots: int
    flip_sign: bool
    per_b: bool
    fits: bool
    printed_fits: bool


def _variant(family: str, k: int, flip: bool, per_b: bool):
    base = PRINTED[(family, k)]

    def formula(q: int, f: int) -> Fraction:
        value = base(q, f + 1 if flip else f)
        return value * (q - 1) if per_b else value
    return formula


def reconcile_cubic_forms(max_f: int = 6) -> list[CubicFit]:
    """
    The reconcile_cubic_forms function compares the brute-force cubic censuses for
    f = 1..max_f with the printed closed forms, trying both parity-sign conventions
    and with or without the factor q - 1 that turns a count per b into a total.

    :param max_f: int: Largest extension degree to brute force
    :return: One fit per family and root count, naming the convention that matches every f
    """
    brute = {}
    for f in range(1, max_f + 1):
        ctx = field_ctx(f)
        brute[("A", f)] = cubic_census_A(ctx).counts
        brute[("B", f)] = cubic_census_B(ctx).counts
        logger.debug("cubic census f=%d A=%s B=%s", f, brute[("A", f)], brute[("B", f)])
    fits = []
    for family, k in PRINTED:
        def matches(formula):
            return all(formula(1 << f, f) == brute[(family, f)].get(k, 0) for f in range(1, max_f + 1))

        printed_fits = matches(_variant(family, k, False, False))
        chosen = None
        for flip in (False, True):
            for per_b in (False, True):
                if chosen is None and matches(_variant(family, k, flip, per_b)):
                    chosen = (flip, per_b)
        fits.append(CubicFit(
            family=family,
            roots=k,
            flip_sign=bool(chosen and chosen[0]),
            per_b=bool(chosen and chosen[1]),
            fits=chosen is not None,
            printed_fits=printed_fits,
        ))
    return fits


def reconciled_formula(family: str, k: int):
    for fit in reconcile_cubic_forms():
        if fit.family == family and fit.roots == k and fit.fits:
            return _variant(family, k, fit.flip_sign, fit.per_b)
    return None


def frobenius_identity_holds(ctx: FieldCtx, c1: int, c2: int) -> bool:
    """Tr(c1 s + c2 s^2) vanishes for every s exactly when c1^2 = c2."""
    return all(trace(ctx, ctx.mul(c1, s) ^ ctx.mul(c2, ctx.mul(s, s))) == 0 for s in ctx.elements())
