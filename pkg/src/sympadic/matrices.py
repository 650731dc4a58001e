"""Exact matrix helpers over Q (entries are Fractions, denominators p-powers).

These are the slow-but-simple routines used by the group layer: products,
inverses, symplectic forms, and conversion to the scaled-integer flat format
the kernel works with.
"""

from fractions import Fraction

from .scalars import INF


def identity(n):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def from_rows(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k_ = len(b)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(k_)) for j in range(m))
        for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def transpose(a):
    return tuple(zip(*a))


def scalar_mul(c, a):
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_inv(a):
    """Inverse by Gauss-Jordan over Q."""
    n = len(a)
    m = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def symplectic_form(n2):
    """J_{2n}: block antidiagonal (0, I_n; -I_n, 0) for n2 = 2n."""
    n = n2 // 2
    j = [[Fraction(0)] * n2 for _ in range(n2)]
    for i in range(n):
        j[i][n + i] = Fraction(1)
        j[n + i][i] = Fraction(-1)
    return tuple(tuple(row) for row in j)


def similitude(a):
    """c with a^t J a = c J, or None if a is not a symplectic similitude."""
    n2 = len(a)
    j = symplectic_form(n2)
    m = mat_mul(transpose(a), mat_mul(j, a))
    c = m[0][n2 // 2]
    if c == 0:
        return None
    for i in range(n2):
        for k in range(n2):
            if m[i][k] != c * j[i][k]:
                return None
    return c


def min_valuation(field, a):
    """Least entry valuation (INF for the zero matrix)."""
    v = INF
    for row in a:
        for x in row:
            if x != 0:
                v = min(v, field.valuation(x))
    return v


def to_scaled(field, a, scale=None):
    """(flat integer list, e) with p^e * a integral; e >= 0.

    If `scale` is given, uses that exponent (must clear all denominators).
    """
    p = field.p
    if scale is None:
        v = min_valuation(field, a)
        scale = max(0, -(0 if v is INF else v))
    f = Fraction(p) ** scale
    flat = []
    for row in a:
        for x in row:
            y = x * f
            if y.denominator != 1:
                raise ValueError(f"scale {scale} does not clear denominator of {x}")
            flat.append(y.numerator)
    return flat, scale


def rows_equal(a, b):
    return a == b


def pretty(a):
    def fmt(x):
        return str(x)

    w = max(len(fmt(x)) for row in a for x in row)
    return "\n".join(" ".join(fmt(x).rjust(w) for x in row) for row in a)
