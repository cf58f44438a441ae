"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis ``1, z, ..., z^(phi(n)-1)`` reduced
modulo the n-th cyclotomic polynomial, as integer numerators over one
common positive denominator.  Keeping integers internally makes the hot
paths (reduction, Galois action) cheap; :attr:`Cyclotomic.coefficients`
exposes the same data as :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from .exceptions import NotCoprime, NotRationalInteger, OrderMismatch

__all__ = [
    "Cyclotomic",
    "as_integer",
    "cyclotomic_polynomial",
    "divisors",
    "equals",
    "euler_phi",
    "factorize",
    "galois_apply",
    "galois_orbit_representatives",
    "mobius",
    "root_of_unity",
    "trace_over_q",
]


# ---------------------------------------------------------------------------
# elementary number theory

def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    """The Moebius function: 0 unless n is squarefree, else (-1)^(#primes)."""
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _units(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1] if n > 1 else [1]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    Uses Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d with exact division.
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _exact_divide(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    # den is monic with integer coefficients
    num = num[:]
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, a in enumerate(den):
                num[i - dd + j] -= c * a
    if any(num[:dd]):
        raise ArithmeticError("cyclotomic polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the power-basis coefficients of zeta_n^k, 0 <= k < n."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    rows: list[tuple[int, ...]] = []
    for k in range(min(n, deg)):
        row = [0] * deg
        row[k] = 1
        rows.append(tuple(row))
    cur = list(rows[-1]) if rows else [0] * deg
    for _ in range(deg, n):
        # multiply by x and reduce the overflowing x^deg term
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi_poly[j]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce(n: int, vec: Sequence[int]) -> list[int]:
    """Reduce an exponent vector (length <= n, index = power of zeta) mod Phi_n."""
    rows = _reduction_rows(n)
    deg = len(rows[0]) if rows else 1
    out = list(vec[:deg]) + [0] * max(0, deg - len(vec))
    for k in range(deg, len(vec)):
        c = vec[k]
        if c:
            for j, a in enumerate(rows[k]):
                if a:
                    out[j] += c * a
    return out


# ---------------------------------------------------------------------------
# field elements

class Cyclotomic:
    """An element of Q(zeta_n) in reduced power-basis form.

    Instances are immutable.  Rational elements combine freely with elements
    of any order; otherwise both operands must share ``n`` (use
    :meth:`embed` first).
    """

    __slots__ = ("n", "nums", "den", "_hash")

    def __init__(self, n: int, coefficients: Iterable = (0,)):
        if n < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {n}")
        fracs = [Fraction(c) for c in coefficients]
        deg = euler_phi(n)
        if len(fracs) > deg:
            raise ValueError(
                f"expected at most {deg} coefficients for order {n}, got {len(fracs)}"
            )
        fracs += [Fraction(0)] * (deg - len(fracs))
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        self._set(n, [int(f * den) for f in fracs], den)

    def _set(self, n: int, nums: list[int], den: int) -> None:
        if den < 0:
            nums = [-a for a in nums]
            den = -den
        g = den
        for a in nums:
            if g == 1:
                break
            g = math.gcd(g, a)
        if g > 1:
            nums = [a // g for a in nums]
            den //= g
        self.n = n
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, nums: list[int], den: int = 1) -> Cyclotomic:
        obj = object.__new__(cls)
        obj._set(n, nums, den)
        return obj

    @classmethod
    def from_exponents(cls, n: int, counts: Sequence[int], den: int = 1) -> Cyclotomic:
        """Build ``sum_k counts[k] * zeta_n^k / den`` (``len(counts) <= n``)."""
        return cls._raw(n, _reduce(n, list(counts)), den)

    @classmethod
    def rational(cls, value, n: int = 1) -> Cyclotomic:
        q = Fraction(value)
        nums = [0] * euler_phi(n)
        nums[0] = q.numerator
        return cls._raw(n, nums, q.denominator)

    # -- inspection -------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def is_zero(self) -> bool:
        return not any(self.nums)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalInteger(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # -- field structure --------------------------------------------------

    def embed(self, N: int) -> Cyclotomic:
        """Image of this element in Q(zeta_N); requires ``n | N``."""
        if N % self.n:
            raise OrderMismatch(f"cannot embed order {self.n} into order {N}")
        if N == self.n:
            return self
        step = N // self.n
        vec = [0] * N
        for j, a in enumerate(self.nums):
            vec[j * step] = a
        return Cyclotomic._raw(N, _reduce(N, vec), self.den)

    def galois_apply(self, k: int) -> Cyclotomic:
        """Apply the automorphism zeta_n -> zeta_n^k (needs gcd(k, n) = 1)."""
        n = self.n
        if math.gcd(k, n) != 1:
            raise NotCoprime(f"gcd({k}, {n}) != 1")
        k %= n
        if k == 1 or self.is_rational():
            return self
        vec = [0] * n
        for j, a in enumerate(self.nums):
            if a:
                vec[(j * k) % n] += a
        return Cyclotomic._raw(n, _reduce(n, vec), self.den)

    def conjugate(self) -> Cyclotomic:
        return self.galois_apply(-1)

    def galois_conjugates(self) -> list[Cyclotomic]:
        """Distinct conjugates, in order of first appearance over units k."""
        seen: dict[Cyclotomic, None] = {}
        for k in _units(self.n):
            seen.setdefault(self.galois_apply(k), None)
        return list(seen)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Cyclotomic | None:
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.rational(other, self.n)
        return None

    def _align(self, other: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        if other.n == self.n:
            return self, other
        if other.is_rational():
            return self, Cyclotomic.rational(other.to_fraction(), self.n)
        if self.is_rational():
            return Cyclotomic.rational(self.to_fraction(), other.n), other
        raise OrderMismatch(f"operands live in orders {self.n} and {other.n}")

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return Cyclotomic._raw(a.n, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic._raw(self.n, [-a for a in self.nums], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        if b.is_rational():
            a, b = b, a
        if a.is_rational():
            c = a.nums[0]
            return Cyclotomic._raw(b.n, [c * y for y in b.nums], a.den * b.den)
        n = a.n
        vec = [0] * n
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        vec[(i + j) % n] += x * y
        return Cyclotomic._raw(n, _reduce(n, vec), a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            other = other.to_fraction()
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        q = Fraction(other)
        if q == 0:
            raise ZeroDivisionError("division of a cyclotomic by zero")
        return Cyclotomic._raw(self.n, [a * q.denominator for a in self.nums], self.den * q.numerator)

    def __pow__(self, e: int) -> Cyclotomic:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison and hashing ------------------------------------------

    def __eq__(self, other) -> bool:
        # structural: elements of different orders are only compared when
        # both are rational; use equals() for a checked comparison
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.n == self.n:
            return self.den == o.den and self.nums == o.nums
        if self.is_rational() and o.is_rational():
            return self.nums[0] * o.den == o.nums[0] * self.den
        return False

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.n, self.nums, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        parts: list[str] = []
        for j, a in enumerate(self.nums):
            if not a:
                continue
            c = Fraction(a, self.den)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                mono = "z" if j == 1 else f"z^{j}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic(n={self.n}, {str(self)!r})"


# ---------------------------------------------------------------------------
# functional interface

def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k, reduced."""
    if n < 1:
        raise ValueError(f"root of unity order must be >= 1, got {n}")
    vec = [0] * n
    vec[k % n] = 1
    return Cyclotomic.from_exponents(n, vec)


def galois_apply(x: Cyclotomic, k: int) -> Cyclotomic:
    return x.galois_apply(k)


def equals(a: Cyclotomic, b: Cyclotomic) -> bool:
    """Coefficient-wise equality; operands must share their order unless rational."""
    if a.n != b.n and not (a.is_rational() and b.is_rational()):
        raise OrderMismatch(f"operands live in orders {a.n} and {b.n}; embed first")
    return a == b


@lru_cache(maxsize=65536)
def trace_over_q(alpha: Cyclotomic) -> Fraction:
    """Tr_{Q(alpha)/Q}(alpha): the sum of the *distinct* Galois conjugates.

    Summing with multiplicity over Gal(Q(zeta_n)/Q) would give the trace from
    the full cyclotomic field instead, which is larger by [Q(zeta_n):Q(alpha)].
    """
    total = Cyclotomic.rational(0, alpha.n)
    for c in alpha.galois_conjugates():
        total = total + c
    return total.to_fraction()


def galois_orbit_representatives(
    values: Sequence[Cyclotomic],
) -> tuple[list[Cyclotomic], list[int]]:
    """Partition ``values`` into Galois orbits.

    Returns ``(reps, orbit_of)``: representatives in order of first
    appearance, and for every input position the index of its orbit's rep.
    """
    if not values:
        return [], []
    n = 1
    for v in values:
        n = n * v.n // math.gcd(n, v.n)
    reps: list[Cyclotomic] = []
    owner: dict[Cyclotomic, int] = {}
    orbit_of: list[int] = []
    for v in values:
        v = v.embed(n)
        idx = owner.get(v)
        if idx is None:
            idx = len(reps)
            reps.append(v)
            for c in v.galois_conjugates():
                owner[c] = idx
        orbit_of.append(idx)
    return reps, orbit_of


def as_integer(x) -> int:
    """The rational integer value of ``x``; raises NotRationalInteger otherwise."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise NotRationalInteger(f"{x} is not an integer")
        return x.numerator
    if not x.is_rational() or x.den != 1:
        raise NotRationalInteger(f"{x} is not a rational integer")
    return x.nums[0]
