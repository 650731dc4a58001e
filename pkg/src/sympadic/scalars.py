"""Exact model of Q_p at a configurable small prime.

Scalars are plain `fractions.Fraction` values (always in lowest terms), never
truncated p-adic expansions, so every valuation / membership question asked by
the rest of the package is decided exactly with no precision parameter.
`LocalField` bundles the prime with the handful of operations that need it:
valuation, residue representatives, unit tests.
"""

from fractions import Fraction

INF = float("inf")  # valuation of 0

LocalScalar = Fraction


def _int_valuation(n, p):
    """Exponent of p in the nonzero integer n."""
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class LocalField:
    """Q_p with uniformizer p and residue field of size q = p."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self.q = p
        self.uniformizer = Fraction(p)

    def __repr__(self):
        return f"LocalField(p={self.p})"

    def valuation(self, x):
        """p-adic valuation; +inf for 0."""
        x = Fraction(x)
        if x == 0:
            return INF
        return _int_valuation(x.numerator, self.p) - _int_valuation(x.denominator, self.p)

    def is_integral(self, x):
        return self.valuation(x) >= 0

    def is_unit(self, x):
        return self.valuation(x) == 0

    def unit_part(self, x):
        """u with x = p^v * u, v = valuation(x); undefined for 0."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("0 has no unit part")
        v = self.valuation(x)
        return x / Fraction(self.p) ** v

    def residue_reps(self, a=1):
        """The canonical representatives {0, 1, ..., p^a - 1} of O/p^a O.

        Contains 0 and 1; -1 is represented by p^a - 1.
        """
        if a < 1:
            raise ValueError(f"a must be >= 1, got {a}")
        return list(range(self.p**a))

    def residue(self, x, a=1):
        """Canonical representative of an integral x in O/p^a O."""
        x = Fraction(x)
        m = self.p**a
        if _int_valuation(x.denominator, self.p) > 0:
            raise ValueError(f"{x} is not integral")
        # denominator is a p-unit: divide in Z/p^a
        inv = pow(x.denominator, -1, m)
        return (x.numerator * inv) % m

    def unit_group_generators(self, a):
        """Integers generating (Z/p^a)^x.

        A primitive root for odd p; {-1, 5} for p = 2, a >= 3; {-1} for
        p = 2, a <= 2.
        """
        p, m = self.p, self.p**a
        if p == 2:
            if a == 1:
                return []
            if a == 2:
                return [3]
            return [m - 1, 5]
        # primitive root mod p, adjusted to stay primitive mod p^a
        for g in range(2, p):
            if all(pow(g, (p - 1) // f, p) != 1 for f in _prime_factors(p - 1)):
                break
        if a > 1 and pow(g, p - 1, p * p) == 1:
            g += p
        return [g % m]


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
