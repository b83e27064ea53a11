"""Exact arithmetic for roots of unity and cyclotomic fields Q(zeta_M).

Two scalar types live here.  ``RootOfUnity`` is a root of unity stored as an
exponent in lowest terms; it is the cheap scalar used by all the modular
classification logic.  ``CycNum`` is a full element of the M-th cyclotomic
field, a rational coefficient vector reduced modulo the M-th cyclotomic
polynomial; it only appears where sums of scalars arise (matrix realization).
No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division of integer polynomials (low degree first), den monic.
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dd]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the monic M-th cyclotomic polynomial.

    Computed by dividing x^M - 1 by the product of the d-th cyclotomic
    polynomials over the proper divisors d of M; all divisions are exact.
    """
    if M < 1:
        raise ValueError("order must be a positive integer")
    if M == 1:
        return (-1, 1)
    poly = [0] * (M + 1)
    poly[0], poly[M] = -1, 1
    for d in range(1, M):
        if M % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def totient(M: int) -> int:
    """Euler phi, read off as the degree of the M-th cyclotomic polynomial."""
    return len(cyclotomic_poly(M)) - 1


@dataclass(frozen=True)
class RootOfUnity:
    """The root of unity zeta_order^exp, kept with exp/order in lowest terms.

    Canonical storage makes equality and hashing agree with equality in the
    field: RootOfUnity(4, 2) == RootOfUnity(2, 1) == -1.  Products of roots of
    different orders land in the lcm order, so the whole type is the torsion
    group of F^x.
    """

    order: int
    exp: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        e = self.exp % self.order
        g = gcd(e, self.order)
        if e == 0:
            object.__setattr__(self, "order", 1)
            object.__setattr__(self, "exp", 0)
        elif g > 1:
            object.__setattr__(self, "order", self.order // g)
            object.__setattr__(self, "exp", e // g)
        else:
            object.__setattr__(self, "exp", e)

    @staticmethod
    def one() -> "RootOfUnity":
        return RootOfUnity(1, 0)

    @staticmethod
    def minus_one() -> "RootOfUnity":
        return RootOfUnity(2, 1)

    @property
    def is_one(self) -> bool:
        return self.order == 1

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = lcm(self.order, other.order)
        return RootOfUnity(m, self.exp * (m // self.order) + other.exp * (m // other.order))

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exp * k)

    def __neg__(self) -> "RootOfUnity":
        return self * RootOfUnity(2, 1)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exp)

    def as_exponent(self, M: int) -> int:
        """Exponent e with self == zeta_M^e; requires order | M."""
        if M % self.order:
            raise ValueError("incompatible orders")
        return (self.exp * (M // self.order)) % M

    def to_json(self) -> dict:
        return {"M": self.order, "e": self.exp}

    @staticmethod
    def from_json(doc: dict) -> "RootOfUnity":
        return RootOfUnity(int(doc["M"]), int(doc["e"]))

    def __repr__(self) -> str:
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        return f"zeta({self.order})^{self.exp}"


def _as_fraction_tuple(coeffs) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coeffs)


def _reduce_mod_cyclotomic(M: int, vec: list[Fraction]) -> tuple[Fraction, ...]:
    phi = totient(M)
    poly = cyclotomic_poly(M)
    vec = list(vec) + [Fraction(0)] * max(0, phi - len(vec))
    for k in range(len(vec) - 1, phi - 1, -1):
        c = vec[k]
        if c:
            vec[k] = Fraction(0)
            # x^k = x^(k-phi) * x^phi and x^phi = -sum_{i<phi} poly[i] x^i
            for i in range(phi):
                if poly[i]:
                    vec[k - phi + i] -= c * poly[i]
    return tuple(vec[:phi])


def _fpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    db = len(b) - 1
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    inv_lead = 1 / b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + db] * inv_lead
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
    while a and not a[-1]:
        a.pop()
    return q, a


@dataclass(frozen=True)
class CycNum:
    """Element of Q(zeta_order), as rational coefficients of 1, zeta, ..., zeta^(phi-1).

    Always stored reduced modulo the order-th cyclotomic polynomial, so
    equality of values is equality of coefficient vectors.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        phi = totient(self.order)
        cs = _as_fraction_tuple(self.coeffs)
        if len(cs) != phi:
            raise ValueError(f"expected {phi} coefficients for order {self.order}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_zero", not any(cs))

    @staticmethod
    def zero(M: int) -> "CycNum":
        return CycNum(M, (Fraction(0),) * totient(M))

    @staticmethod
    def from_rational(M: int, q) -> "CycNum":
        cs = [Fraction(0)] * totient(M)
        cs[0] = Fraction(q)
        return CycNum(M, tuple(cs))

    @staticmethod
    def one(M: int) -> "CycNum":
        return CycNum.from_rational(M, 1)

    @staticmethod
    def root(M: int, e: int) -> "CycNum":
        """zeta_M^e as a field element."""
        e %= M
        vec = [Fraction(0)] * (e + 1)
        vec[e] = Fraction(1)
        return CycNum(M, _reduce_mod_cyclotomic(M, vec))

    @property
    def is_zero(self) -> bool:
        return self._zero

    def _check_order(self, other: "CycNum"):
        if self.order != other.order:
            raise ValueError("order mismatch")

    def __add__(self, other: "CycNum") -> "CycNum":
        self._check_order(other)
        return CycNum(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycNum") -> "CycNum":
        self._check_order(other)
        return CycNum(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycNum":
        return CycNum(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycNum") -> "CycNum":
        self._check_order(other)
        a, b = self.coeffs, other.coeffs
        conv = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycNum(self.order, _reduce_mod_cyclotomic(self.order, conv))

    def inverse(self) -> "CycNum":
        """Field inverse via the extended gcd against the cyclotomic polynomial."""
        if self.is_zero:
            raise ZeroDivisionError("division by zero")
        # Extended Euclid on (self, Phi_M) over Q[x]; Phi_M is irreducible,
        # so the gcd is a nonzero constant.
        r0 = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _fpoly_divmod(r0, r1)
            # s_next = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        prod[i + j] += qi * sj
            s_next = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                s_next[i] += c
            for i, c in enumerate(prod):
                s_next[i] -= c
            r0, r1 = r1, r
            s0, s1 = s1, s_next
        c = r1[0]
        inv = [si / c for si in s1]
        return CycNum(self.order, _reduce_mod_cyclotomic(self.order, inv))

    def __truediv__(self, other: "CycNum") -> "CycNum":
        self._check_order(other)
        return self * other.inverse()

    def __pow__(self, k: int) -> "CycNum":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = CycNum.one(self.order)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def scale(self, q) -> "CycNum":
        q = Fraction(q)
        return CycNum(self.order, tuple(q * c for c in self.coeffs))

    def to_json(self) -> dict:
        return {
            "M": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    @staticmethod
    def from_json(doc: dict) -> "CycNum":
        return CycNum(int(doc["M"]), tuple(Fraction(s) for s in doc["coeffs"]))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    terms.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return " + ".join(terms) if terms else "0"


def embed_root(r: RootOfUnity, M: int) -> CycNum:
    """Embed a root of unity into Q(zeta_M); requires r.order | M."""
    if M % r.order:
        raise ValueError("incompatible orders")
    return CycNum.root(M, r.exp * (M // r.order))


@lru_cache(maxsize=None)
def _root_table(M: int) -> dict[tuple[Fraction, ...], int]:
    # coefficient vector -> exponent, for recognizing roots of unity exactly
    return {CycNum.root(M, e).coeffs: e for e in range(M)}


def root_exponent(x: CycNum) -> int | None:
    """Exponent e with x == zeta_M^e, or None if x is not a root of unity."""
    return _root_table(x.order).get(x.coeffs)
