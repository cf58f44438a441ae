"""Exact irreducible character tables via the Dixon-Schneider method.

The class matrices are diagonalised simultaneously over a prime field F_p
with p = 1 (mod exponent); the common eigenvectors give the central
characters mod p, and eigenvalue multiplicities recovered through the power
maps lift each character value to an exact element of Q(zeta_e).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _modp
from .cyclotomic import Cyclotomic, _reduction_rows
from .exceptions import LiftInconsistency, OrderMismatch, SplitFailure
from .permgroup import ConjugacyData, FiniteGroup

MAX_PRIME_RETRIES = 3

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "character_table",
    "class_mult_coefficients",
    "dixon_prime",
    "inner_product",
    "lift_table",
    "modular_character_basis",
]


class ClassFunction:
    """A function on G constant on conjugacy classes, one Cyclotomic per class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Sequence):
        values = tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in values)
        if len(values) != len(group.conjugacy):
            raise ValueError(
                f"class function needs {len(group.conjugacy)} values, got {len(values)}"
            )
        self.group = group
        self.values = values

    def __getitem__(self, c: int) -> Cyclotomic:
        return self.values[c]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def _check(self, other: ClassFunction) -> None:
        if other.group is not self.group:
            raise ValueError("class functions belong to different groups")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, scalar) -> ClassFunction:
        return ClassFunction(self.group, [v * scalar for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return other.group is self.group and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def galois_apply(self, k: int) -> ClassFunction:
        return ClassFunction(self.group, [v.galois_apply(k) for v in self.values])

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def __repr__(self) -> str:
        return "ClassFunction(" + ", ".join(str(v) for v in self.values) + ")"


def inner_product(f: ClassFunction, h: ClassFunction) -> Cyclotomic:
    """[f, h] = (1/|G|) sum_c |K_c| f(c) conj(h(c))."""
    f._check(h)
    G = f.group
    total = Cyclotomic.rational(0)
    for size, a, b in zip(G.conjugacy.class_sizes, f.values, h.values):
        if a.is_zero() or b.is_zero():
            continue
        total = total + a * b.conjugate() * size
    return total / G.order


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FiniteGroup
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]
    prime: int
    field_order: int

    @property
    def classes(self) -> ConjugacyData:
        return self.group.conjugacy

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def value_rows(self) -> list[list[str]]:
        return [[str(v) for v in chi] for chi in self.irreducibles]

    def linear_rows(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == 1]

    def to_json(self) -> dict:
        cd = self.classes
        return {
            "group": self.group.name,
            "order": self.group.order,
            "field_order": self.field_order,
            "prime": self.prime,
            "classes": [
                {"index": i, "size": s, "rep_order": o}
                for i, (s, o) in enumerate(zip(cd.class_sizes, cd.rep_orders))
            ],
            "rows": [
                {"degree": d, "values": vals}
                for d, vals in zip(self.degrees, self.value_rows())
            ],
        }

    def format(self) -> str:
        cd = self.classes
        header = [f"{o}{chr(97 + i) if i < 26 else '_' + str(i)}" for i, o in enumerate(cd.rep_orders)]
        cells = [header, [str(s) for s in cd.class_sizes]] + self.value_rows()
        labels = ["class", "size"] + [f"X.{i + 1}" for i in range(len(self))]
        widths = [max(len(row[c]) for row in cells) for c in range(len(header))]
        lw = max(len(x) for x in labels)
        lines = [f"zeta = exp(2*pi*i/{self.field_order}); Dixon prime {self.prime}"]
        for label, row in zip(labels, cells):
            lines.append(label.ljust(lw) + "  " + "  ".join(v.rjust(w) for v, w in zip(row, widths)))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# class algebra

def class_mult_coefficients(G: FiniteGroup, classes: ConjugacyData | None = None) -> np.ndarray:
    """a[i, j, k] = #{(x, y) in K_i x K_j : x y = z_k} for the rep z_k of K_k."""
    cd = classes or G.conjugacy
    r = len(cd)
    a = np.zeros((r, r, r), dtype=np.int64)
    cls = cd.class_of
    for k, z in enumerate(cd.class_reps):
        for x in range(G.order):
            y = G.mul(G.inv(x), z)
            a[cls[x], cls[y], k] += 1
    return a


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def dixon_prime(G: FiniteGroup, skip: int = 0) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2 sqrt(|G|), or the ``skip``-th next one."""
    if G.order == 1 and skip == 0:
        return 2
    e = G.exponent
    found = -1 if G.order > 1 else 0
    p = 1
    while True:
        p += e
        if _is_prime(p) and p * p > 4 * G.order:
            found += 1
            if found == skip:
                return p


def modular_character_basis(G: FiniteGroup, p: int, coeffs: np.ndarray | None = None) -> np.ndarray:
    """Common eigenvectors of the class matrices over F_p, one row per character.

    Row v satisfies sum_k a[i, j, k] v[k] = w_i v[j] for every class i and is
    scaled so v[0] = 1; mod p it equals the central character
    K_c -> |K_c| chi(g_c) / chi(1).
    """
    a = class_mult_coefficients(G) if coeffs is None else coeffs
    r = a.shape[0]
    mats = [a[i] % p for i in range(r)]
    spaces = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        if all(s.shape[0] == 1 for s in spaces):
            break
        nxt = []
        for B in spaces:
            d = B.shape[0]
            if d == 1:
                nxt.append(B)
                continue
            B, piv = _modp.rref(B, p)
            A = ((mats[i] @ B.T) % p)[piv, :]
            parts = []
            for lam in _modp.roots(_modp.charpoly(A, p), p):
                shifted = (A - lam * np.eye(d, dtype=np.int64)) % p
                coords = _modp.nullspace(shifted, p)
                parts.append((coords @ B) % p)
            if sum(P.shape[0] for P in parts) != d:
                raise SplitFailure(f"class matrix {i} is not diagonalisable mod {p}")
            nxt.extend(parts)
        spaces = nxt
    if any(s.shape[0] != 1 for s in spaces):
        raise SplitFailure(f"common eigenspaces do not split mod {p}")
    rows = []
    for s in spaces:
        v = s[0] % p
        if v[0] == 0:
            raise SplitFailure(f"eigenvector with vanishing identity coordinate mod {p}")
        rows.append((v * pow(int(v[0]), -1, p)) % p)
    return np.array(rows, dtype=np.int64)


def _sort_key(chi: ClassFunction, degree: int) -> tuple:
    trivial = all(v == 1 for v in chi.values)
    return (degree, not trivial, [str(v) for v in chi.values])


def lift_table(G: FiniteGroup, basis: np.ndarray, p: int) -> CharacterTable:
    """Recover exact character values from the mod-p central characters."""
    cd = G.conjugacy
    r = len(cd)
    e = G.exponent
    sizes = cd.class_sizes
    inv_sizes = np.array([pow(s, -1, p) for s in sizes], dtype=np.int64)
    inv_class = G.power_map(-1)

    # chi(1)^2 = |G| / sum_i w_i w_{i*} / |K_i|
    s = (basis * basis[:, list(inv_class)] % p * inv_sizes) % p
    ssum = s.sum(axis=1) % p
    degrees = []
    for val in ssum:
        if val == 0:
            raise LiftInconsistency(f"degenerate norm while recovering a degree mod {p}")
        target = (G.order * pow(int(val), -1, p)) % p
        d = next((d for d in range(1, math.isqrt(G.order) + 1) if d * d % p == target), None)
        if d is None:
            raise LiftInconsistency(f"no admissible degree squares to {target} mod {p}")
        degrees.append(d)
    deg = np.array(degrees, dtype=np.int64)
    theta = (basis * inv_sizes % p) * deg[:, None] % p

    z = pow(_modp.primitive_root(p), (p - 1) // e, p) if p > 2 else 1
    table = G._power_table
    values = [[None] * r for _ in range(r)]
    for c in range(r):
        o = cd.rep_orders[c]
        step = e // o
        zo_inv = pow(z, -step, p) if p > 2 else 1
        T = theta[:, [table[c][l] for l in range(o)]]
        pw = np.array([pow(zo_inv, k, p) for k in range(o)], dtype=np.int64)
        F = pw[np.outer(np.arange(o), np.arange(o)) % o]
        mult = (T @ F) % p * pow(o, -1, p) % p
        for row in range(r):
            m = mult[row]
            if m.max() > degrees[row] or int(m.sum()) != degrees[row]:
                raise LiftInconsistency(
                    f"eigenvalue multiplicities {m.tolist()} do not lift for class {c} mod {p}"
                )
            counts = [0] * e
            for j in range(o):
                counts[j * step] = int(m[j])
            values[row][c] = Cyclotomic.from_exponents(e, counts)

    chars = [ClassFunction(G, vals) for vals in values]
    order = sorted(range(r), key=lambda i: _sort_key(chars[i], degrees[i]))
    result = CharacterTable(
        group=G,
        irreducibles=tuple(chars[i] for i in order),
        degrees=tuple(degrees[i] for i in order),
        prime=p,
        field_order=e,
    )
    ok_rows, ok_cols = orthogonality(result)
    if not (ok_rows and ok_cols):
        raise LiftInconsistency(f"lifted table fails orthogonality mod {p}")
    return result


def character_table(G: FiniteGroup, prime_index: int = 0) -> CharacterTable:
    """The canonically ordered character table of G (cached per prime choice).

    ``prime_index`` selects which admissible Dixon prime to start from; on a
    split or lift failure the next admissible prime is tried, up to
    MAX_PRIME_RETRIES times.
    """
    cache = G.__dict__.setdefault("_chartable_cache", {})
    if prime_index in cache:
        return cache[prime_index]
    coeffs = class_mult_coefficients(G)
    last_error: Exception | None = None
    for attempt in range(MAX_PRIME_RETRIES + 1):
        p = dixon_prime(G, prime_index + attempt)
        try:
            if len(G.conjugacy) == 1:
                basis = np.ones((1, 1), dtype=np.int64)
            else:
                basis = modular_character_basis(G, p, coeffs)
            table = lift_table(G, basis, p)
        except (SplitFailure, LiftInconsistency) as exc:
            last_error = exc
            continue
        cache[prime_index] = table
        return table
    raise last_error  # type: ignore[misc]


# ---------------------------------------------------------------------------
# exact orthogonality

def _coefficient_tensor(rows: Sequence[ClassFunction], n: int) -> np.ndarray:
    R, C = len(rows), len(rows[0])
    V = np.zeros((R, C, n), dtype=np.int64)
    for i, chi in enumerate(rows):
        for c, v in enumerate(chi.values):
            if v.n != n:
                if not v.is_rational():
                    raise OrderMismatch(f"value of order {v.n} in a table of order {n}")
                v = Cyclotomic.rational(v.to_fraction(), n)
            if v.den != 1:
                raise LiftInconsistency(f"character value {v} is not an algebraic integer")
            V[i, c, :len(v.nums)] = v.nums
    return V


def _group_ring_gram(V: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """G[i, j] = sum_c w_c V[i, c] * conj(V[j, c]) reduced into Q(zeta_n).

    Each V[i, c] is a coefficient vector in Z[x]/(x^n - 1); conjugation
    negates exponents, products are cyclic convolutions, and the result is
    pushed through the ring map onto the reduced power basis.
    """
    R, C, n = V.shape
    absV = np.abs(V).sum(axis=2)
    bound = ((absV * weights) @ absV.T).max() if R else 0
    if bound >= 2 ** 52:
        raise OverflowError("orthogonality check would lose exactness in float64")
    W = (V * weights[None, :, None]).reshape(R, C * n).astype(np.float64)
    P = np.empty((R, R, n), dtype=np.int64)
    for s in range(n):
        Vs = np.roll(V, s, axis=2).reshape(R, C * n).astype(np.float64)
        P[:, :, s] = np.rint(W @ Vs.T).astype(np.int64)
    red = np.array(_reduction_rows(n), dtype=np.int64)
    return P @ red


def orthogonality(table: CharacterTable) -> tuple[bool, bool]:
    """(row orthogonality, column orthogonality), both checked exactly."""
    G = table.group
    cd = G.conjugacy
    n = table.field_order
    V = _coefficient_tensor(table.irreducibles, n)
    r = V.shape[0]
    sizes = np.array(cd.class_sizes, dtype=np.int64)
    rows = _group_ring_gram(V, sizes)
    want = np.zeros_like(rows)
    want[np.arange(r), np.arange(r), 0] = G.order
    cols = _group_ring_gram(V.transpose(1, 0, 2).copy(), np.ones(r, dtype=np.int64))
    want_c = np.zeros_like(cols)
    want_c[np.arange(r), np.arange(r), 0] = cd.centralizer_orders
    return bool((rows == want).all()), bool((cols == want_c).all())


def degree_sum_of_squares(table: CharacterTable) -> int:
    return sum(d * d for d in table.degrees)


def power_map_galois_consistent(table: CharacterTable) -> bool:
    """For every k prime to e: sigma_k(chi)(g) = chi(g^k) and sigma_k permutes Irr(G)."""
    G = table.group
    e = table.field_order
    rowset = {chi.values for chi in table.irreducibles}
    for k in range(1, e + 1):
        if math.gcd(k, e) != 1:
            continue
        pm = G.power_map(k)
        for chi in table.irreducibles:
            conj = chi.galois_apply(k)
            if conj.values != tuple(chi.values[pm[c]] for c in range(len(pm))):
                return False
            if conj.values not in rowset:
                return False
    return True


def rational_inner_product(f: ClassFunction, h: ClassFunction) -> Fraction:
    return inner_product(f, h).to_fraction()
