"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value of order m is a vector of rationals over the power basis
1, z, ..., z^(phi(m)-1) of Q(zeta_m), kept reduced modulo the m-th
cyclotomic polynomial, so equality of values is equality of coefficient
vectors. Everything is exact; no floating point appears anywhere.

Mixed-order arithmetic is deliberately unsupported: binary operations
demand equal orders and callers lift with :meth:`Cyclotomic.embed`
(usually to the lcm of the orders involved). This keeps the hot path
branch-free.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import UsageError

__all__ = [
    "divisors",
    "euler_phi",
    "cyclotomic_polynomial",
    "Cyclotomic",
    "zero",
    "one",
    "rational",
    "root_of_unity",
]


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def euler_phi(m: int) -> int:
    """Euler's totient. m stays small here, so trial division is fine."""
    if m < 1:
        raise UsageError("euler_phi: m must be >= 1, got %r" % (m,))
    result = m
    p, n = 2, m
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # long division of integer polynomials; den is monic and must divide num
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - dd, 0, -1):
        c = num[k + dd - 1]
        out[k - 1] = c
        if c:
            for i, d in enumerate(den):
                num[k - 1 + i] -= c * d
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, constant
    term first, monic. Computed by dividing x^m - 1 by the product of the
    polynomials of the proper divisors of m."""
    if m < 1:
        raise UsageError("cyclotomic_polynomial: m must be >= 1, got %r" % (m,))
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[int, ...], ...]:
    # zeta_m^k reduced mod Phi_m for k = 0 .. 2m-2; every exponent produced
    # by multiplication, conjugation or embedding falls in this range
    phi = euler_phi(m)
    poly = cyclotomic_polynomial(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(2 * m - 1):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        nxt = [0] * phi
        for i in range(phi - 1, 0, -1):
            nxt[i] = cur[i - 1]
        if top:
            for i in range(phi):
                nxt[i] -= top * poly[i]
        cur = nxt
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_m), immutable after construction."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise UsageError("cyclotomic order must be >= 1, got %r" % (order,))
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(order):
            raise UsageError(
                "order %d needs %d coordinates, got %d"
                % (order, euler_phi(order), len(coeffs))
            )
        self.order = order
        self.coeffs = coeffs

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise UsageError(
                    "cyclotomic order mismatch (%d vs %d); embed to a common "
                    "order first" % (self.order, other.order)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return rational(other, self.order)
        raise UsageError("cannot combine cyclotomic with %r" % (type(other),))

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclotomic(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Cyclotomic(self.order, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Cyclotomic(self.order, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, (a * other for a in self.coeffs))
        other = self._coerce(other)
        d = len(self.coeffs)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative powers not supported; use conjugate/galois")
        out = one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- field automorphisms -------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        m = self.order
        k %= m
        if gcd(k, m) != 1:
            raise UsageError("galois exponent %d not coprime to order %d" % (k, m))
        rows = _power_rows(m)
        phi = len(self.coeffs)
        out = [Fraction(0)] * phi
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * k) % m]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return Cyclotomic(m, out)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^(-1)."""
        return self.galois(self.order - 1 if self.order > 1 else 1)

    def trace(self) -> Fraction:
        """Field trace down to Q (sum over all embeddings)."""
        m = self.order
        total = zero(m)
        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                total = total + self.galois(k)
        return total.rational_value()

    def embed(self, order: int) -> "Cyclotomic":
        """Image in Q(zeta_M) under zeta_m -> zeta_M^(M/m); requires m | M."""
        m = self.order
        if order % m:
            raise UsageError("cannot embed order %d into order %d" % (m, order))
        if order == m:
            return self
        s = order // m
        rows = _power_rows(order)
        out = [Fraction(0)] * euler_phi(order)
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[j * s]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return Cyclotomic(order, out)

    # -- predicates / views --------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise UsageError("value %s is not rational" % (self,))
        return self.coeffs[0]

    def is_integer(self, k: int | None = None) -> bool:
        """True if the value is the rational integer k (any integer if k is None)."""
        if not self.is_rational or self.coeffs[0].denominator != 1:
            return False
        return k is None or self.coeffs[0] == k

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- rendering / serialization ---------------------------------------

    def render(self) -> str:
        """Human-readable polynomial in z<m>, e.g. '1 - 2/3*z3'."""
        sym = "z%d" % self.order
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                power = sym if k == 1 else "%s^%d" % (sym, k)
                body = power if abs(c) == 1 else "%s*%s" % (str(abs(c)), power)
                if c < 0:
                    body = "-" + body
            terms.append(body)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.order, self.render())

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": ["%d/%d" % (c.numerator, c.denominator) for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "Cyclotomic":
        return Cyclotomic(data["order"], [Fraction(s) for s in data["coeffs"]])


def _reduce(m: int, prod: list[Fraction]) -> list[Fraction]:
    rows = _power_rows(m)
    phi = euler_phi(m)
    out = list(prod[:phi]) + [Fraction(0)] * (phi - len(prod))
    for k in range(phi, len(prod)):
        c = prod[k]
        if c:
            row = rows[k]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


def zero(order: int = 1) -> Cyclotomic:
    return Cyclotomic(order, [0] * euler_phi(order))


def one(order: int = 1) -> Cyclotomic:
    return rational(1, order)


def rational(value, order: int = 1) -> Cyclotomic:
    coeffs = [Fraction(0)] * euler_phi(order)
    coeffs[0] = Fraction(value)
    return Cyclotomic(order, coeffs)


def root_of_unity(m: int, k: int) -> Cyclotomic:
    """zeta_m^k as an order-m value (k taken mod m)."""
    if m < 1:
        raise UsageError("root_of_unity: m must be >= 1, got %r" % (m,))
    return Cyclotomic(m, _power_rows(m)[k % m])
