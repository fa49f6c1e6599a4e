"""Extended scalars: N-bar, Z-bar and R-bar.

Values are plain Python numbers: ``int`` for the integer families,
``fractions.Fraction`` (or ``int``) for the real family, and ``math.inf``
for the point at infinity.  Infinity is absorbing for addition and is the
maximum of every family.
"""

from fractions import Fraction
from math import inf

INF = inf

NAT = "nat"
INT = "int"
REAL = "real"
FAMILIES = (NAT, INT, REAL)

# accepted spellings in task files and catalog names
FAMILY_ALIASES = {
    "nat": NAT, "ext-nat": NAT, "N": NAT,
    "int": INT, "ext-int": INT, "Z": INT,
    "real": REAL, "ext-real": REAL, "R": REAL,
}


def family_tag(name):
    try:
        return FAMILY_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown scalar family {name!r}") from None


def is_inf(v):
    return v == INF


def is_finite(v):
    return v != INF


def canon(family, v):
    """Return the canonical form of ``v`` in ``family`` or raise ValueError."""
    if isinstance(v, str):
        v = parse(v)
    if isinstance(v, bool):
        raise ValueError(f"boolean is not a scalar: {v!r}")
    if isinstance(v, float):
        if v == INF:
            return INF
        if family != REAL or v != v or v == -INF:
            raise ValueError(f"invalid {family} scalar {v!r}")
        v = Fraction(v)
    if family in (NAT, INT):
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"non-integer value {v} in family {family}")
            v = int(v)
        if not isinstance(v, int):
            raise ValueError(f"invalid {family} scalar {v!r}")
        if family == NAT and v < 0:
            raise ValueError(f"negative value {v} in family nat")
        return v
    if family == REAL:
        if isinstance(v, int):
            return v
        if isinstance(v, Fraction):
            return int(v) if v.denominator == 1 else v
        raise ValueError(f"invalid real scalar {v!r}")
    raise ValueError(f"unknown scalar family {family!r}")


def sub(a, b):
    """``a - b`` with ``b`` finite; ``inf - b == inf``."""
    if b == INF:
        raise ArithmeticError("cannot subtract infinity")
    return INF if a == INF else a - b


def scale(n, a):
    """``n * a`` for a nonnegative multiplier, with ``0 * inf == 0``."""
    if n == 0 or a == 0:
        return 0
    if a == INF or n == INF:
        return INF
    return n * a


def reduce_num(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def encode(v):
    """JSON-friendly form: ``"inf"``, ints as ints, fractions as ``"p/q"``."""
    if v == INF:
        return "inf"
    v = reduce_num(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def parse(v):
    """Inverse of :func:`encode`; also accepts ``"∞"`` and decimal strings."""
    if isinstance(v, str):
        s = v.strip()
        if s in ("inf", "∞", "+inf", "infinity"):
            return INF
        return reduce_num(Fraction(s))
    if isinstance(v, float) and v == INF:
        return INF
    return v


def fmt(v):
    return "∞" if v == INF else str(reduce_num(v))
