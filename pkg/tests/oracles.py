"""Independent brute-force oracles.

None of these reuse the cached class structure, power tables or character
machinery of the package: they work from raw permutation images, complex
floating point, or plain definitions.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from itertools import product

from xichar.cyclotomic import Cyclotomic


def compose(a, b):
    """Apply a, then b."""
    return tuple(b[i] for i in a)


def inverse(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def brute_closure(degree, gens):
    ident = tuple(range(degree))
    elems = {ident}
    changed = True
    while changed:
        changed = False
        for a, b in product(list(elems), list(gens) + list(elems)):
            c = compose(a, b)
            if c not in elems:
                elems.add(c)
                changed = True
    return sorted(elems)


def brute_order(a):
    ident = tuple(range(len(a)))
    k, cur = 1, a
    while cur != ident:
        cur = compose(cur, a)
        k += 1
    return k


def brute_psi(elements):
    return sum(brute_order(a) for a in elements)


def brute_classes(elements):
    """Conjugation orbits under every element, as frozensets of images."""
    remaining = set(elements)
    out = []
    for x in elements:
        if x not in remaining:
            continue
        orbit = {compose(compose(inverse(g), x), g) for g in elements}
        remaining -= orbit
        out.append(frozenset(orbit))
    return out


def brute_class_coefficient(elements, Ki, Kj, z):
    return sum(1 for x in Ki for y in Kj if compose(x, y) == z)


def brute_cyclic_subgroup_classes(elements):
    """Conjugacy classes of cyclic subgroups by conjugating whole member sets."""
    subs = set()
    for x in elements:
        members, cur = set(), tuple(range(len(x)))
        while True:
            members.add(cur)
            cur = compose(cur, x)
            if cur == tuple(range(len(x))):
                break
        subs.add(frozenset(members))
    classes = []
    seen = set()
    for S in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if S in seen:
            continue
        orbit = {frozenset(compose(compose(inverse(g), s), g) for s in S) for g in elements}
        seen |= orbit
        classes.append(orbit)
    return classes


def to_complex(x: Cyclotomic) -> complex:
    z = cmath.exp(2j * math.pi / x.n)
    return sum(complex(c) * z ** j for j, c in enumerate(x.coefficients))


def mobius_by_recursion(n: int, _memo={1: 1}) -> int:
    """mu from sum_{d | n} mu(d) = [n == 1]."""
    if n not in _memo:
        _memo[n] = -sum(mobius_by_recursion(d) for d in range(1, n) if n % d == 0)
    return _memo[n]


def primitive_root_sum(d: int) -> complex:
    return sum(cmath.exp(2j * math.pi * k / d) for k in range(1, d + 1) if math.gcd(k, d) == 1)


def elementwise_multiplicity(G, chi) -> Fraction:
    """[Xi, chi] summed over every element separately, orders recomputed from images."""
    total = Cyclotomic.rational(0)
    cls = G.conjugacy.class_of
    for x, perm in enumerate(G.elements):
        xi = G.order * brute_order(perm.images)
        total = total + chi.values[cls[x]].conjugate() * xi
    return (total / G.order).to_fraction()


def psi_cyclic_by_enumeration(n: int) -> int:
    return sum(n // math.gcd(k, n) for k in range(n))
