"""Small permutation groups with full element enumeration.

Elements are stored once, sorted lexicographically by image array, and
addressed by integer index everywhere else.  The product ``x * y`` means
"apply x, then y".
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

from .cyclotomic import factorize
from .exceptions import (
    ClosureCapExceeded,
    InvalidPermutation,
    NotLinear,
    ParseError,
    SylowSearchFailed,
)

DEFAULT_CAP = 200_000

__all__ = [
    "Coset",
    "ConjugacyData",
    "DEFAULT_CAP",
    "FiniteGroup",
    "Permutation",
    "Subgroup",
    "close_group",
    "conjugacy_classes",
    "cyclic_subgroups_up_to_conjugacy",
    "element_order",
    "exponent",
    "kernel_and_cosets",
    "parse_cycles",
    "power_map",
    "psi",
    "read_group_file",
    "sylow_subgroup",
]


# ---------------------------------------------------------------------------
# permutations

@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection on 0..{len(images) - 1}: {images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise InvalidPermutation(f"point {pt} outside 0..{degree - 1}")
                if pt in seen:
                    raise InvalidPermutation(f"point {pt} appears in more than one cycle")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise InvalidPermutation("degree mismatch in product")
        b = other.images
        return Permutation(tuple(b[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __pow__(self, k: int) -> Permutation:
        images = [0] * self.degree
        for cyc in self.cycles():
            L = len(cyc)
            for pos, pt in enumerate(cyc):
                images[pt] = cyc[(pos + k) % L]
        return Permutation(tuple(images))

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(degree: int, text: str) -> Permutation:
    """Parse disjoint-cycle notation such as ``(0 1 2)(3 4)``; ``()`` is the identity."""
    stripped = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ParseError("unexpected text between cycles", stripped, pos)
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError:
            raise ParseError("cycle entries must be integers", stripped, m.start()) from None
        pos = m.end()
    if stripped[pos:].strip() or (not cycles and stripped):
        raise ParseError("malformed cycle notation", stripped, pos)
    return Permutation.from_cycles(degree, [c for c in cycles if c])


# ---------------------------------------------------------------------------
# derived data containers

@dataclass(frozen=True)
class ConjugacyData:
    class_reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    class_of: tuple[int, ...]
    rep_orders: tuple[int, ...]
    members: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.class_reps)

    @property
    def centralizer_orders(self) -> tuple[int, ...]:
        total = sum(self.class_sizes)
        return tuple(total // s for s in self.class_sizes)


@dataclass(frozen=True)
class Subgroup:
    member_indices: frozenset[int]
    generators: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.member_indices)

    def __contains__(self, x: int) -> bool:
        return x in self.member_indices

    def sorted_members(self) -> list[int]:
        return sorted(self.member_indices)


@dataclass(frozen=True)
class Coset:
    representative: int
    subgroup: Subgroup
    member_indices: frozenset[int]


# ---------------------------------------------------------------------------
# groups

class FiniteGroup:
    """A permutation group with its complete, lexicographically sorted element list.

    Build one with :func:`close_group`.  Derived data (classes, power maps,
    exponent) is computed on first access and cached.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation], name: str = ""):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.element_index = {p.images: i for i, p in enumerate(self.elements)}
        self.name = name or f"<group of order {self.order}>"
        self._images = [p.images for p in self.elements]
        self.identity_index = self.element_index[tuple(range(degree))]
        self.generator_indices = tuple(self.element_index[g.images] for g in self.generators)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order}, degree={self.degree})"

    def __len__(self) -> int:
        return self.order

    # -- element arithmetic by index ------------------------------------

    def mul(self, i: int, j: int) -> int:
        a, b = self._images[i], self._images[j]
        return self.element_index[tuple(b[t] for t in a)]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self.element_index[p.inverse().images] for p in self.elements)

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.mul(self.mul(self.inverses[g], x), g)

    def power(self, i: int, k: int) -> int:
        return self.element_index[(self.elements[i] ** k).images]

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(p.order() for p in self.elements)

    def generate(self, gens: Iterable[int]) -> Subgroup:
        """Subgroup generated by the given element indices."""
        gens = tuple(gens)
        members = {self.identity_index}
        frontier = [self.identity_index]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(frozenset(members), gens)

    def cyclic_subgroup(self, x: int) -> Subgroup:
        members = []
        cur = self.identity_index
        while True:
            members.append(cur)
            cur = self.mul(cur, x)
            if cur == self.identity_index:
                break
        return Subgroup(frozenset(members), (x,))

    # -- cached structure ----------------------------------------------

    @cached_property
    def conjugacy(self) -> ConjugacyData:
        n = self.order
        class_of = [-1] * n
        members: list[list[int]] = []
        gens = self.generator_indices
        for x in range(n):
            if class_of[x] >= 0:
                continue
            c = len(members)
            class_of[x] = c
            orbit = [x]
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in gens:
                        z = self.conj(y, g)
                        if class_of[z] < 0:
                            class_of[z] = c
                            orbit.append(z)
                            nxt.append(z)
                frontier = nxt
            members.append(sorted(orbit))
        # elements are scanned in index order, so class reps are least indices
        # and classes come out sorted by rep; the identity has the least images
        if members[0][0] != self.identity_index:
            raise AssertionError("identity must be the first element")
        reps = tuple(m[0] for m in members)
        return ConjugacyData(
            class_reps=reps,
            class_sizes=tuple(len(m) for m in members),
            class_of=tuple(class_of),
            rep_orders=tuple(self.orders[r] for r in reps),
            members=tuple(tuple(m) for m in members),
        )

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, self.orders, 1)

    @cached_property
    def _power_table(self) -> tuple[tuple[int, ...], ...]:
        # row c, column k: class of rep_c ** k for 0 <= k < exponent
        cd = self.conjugacy
        e = self.exponent
        rows = []
        for r, o in zip(cd.class_reps, cd.rep_orders):
            base = tuple(cd.class_of[self.power(r, k)] for k in range(o))
            rows.append(tuple(base[k % o] for k in range(e)))
        return tuple(rows)

    def power_map(self, k: int) -> tuple[int, ...]:
        k %= self.exponent
        return tuple(row[k] for row in self._power_table)

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generator_indices
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)


def close_group(degree: int, generators: Sequence[Permutation],
                cap: int = DEFAULT_CAP, name: str = "") -> FiniteGroup:
    """Enumerate the group generated by ``generators`` (breadth-first closure)."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation(tuple(g))
        if g.degree != degree:
            raise InvalidPermutation(f"generator {g} has degree {g.degree}, expected {degree}")
        gens.append(g)
    gen_images = [g.images for g in gens if g.images != tuple(range(degree))]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gen_images:
                c = tuple(b[t] for t in a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    elements = [Permutation(img) for img in sorted(seen)]
    return FiniteGroup(degree, gens, elements, name=name)


def read_group_file(path: str | Path, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Load a group description: ``degree N`` header, then one generator per line."""
    degree = None
    gens: list[Permutation] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise ParseError(f"{path}:{lineno}: expected 'degree N' header", line, 0)
            degree = int(parts[1])
            continue
        try:
            gens.append(parse_cycles(degree, line))
        except ParseError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from None
    if degree is None:
        raise ParseError(f"{path}: missing 'degree N' header")
    return close_group(degree, gens, cap=cap, name=f"file:{path}")


# ---------------------------------------------------------------------------
# functional interface

def element_order(G: FiniteGroup, x: int) -> int:
    return G.orders[x]


def psi(G: FiniteGroup, subset: Iterable[int] | None = None) -> int:
    """Sum of element orders over ``subset`` (all of G by default)."""
    if subset is None:
        return sum(G.orders)
    return sum(G.orders[x] for x in subset)


def conjugacy_classes(G: FiniteGroup) -> ConjugacyData:
    return G.conjugacy


def power_map(G: FiniteGroup, classes: ConjugacyData | None = None, k: int = 1) -> tuple[int, ...]:
    return G.power_map(k)


def exponent(G: FiniteGroup) -> int:
    return G.exponent


def cyclic_subgroups_up_to_conjugacy(G: FiniteGroup) -> list[Subgroup]:
    """One cyclic subgroup per conjugacy class of cyclic subgroups.

    <x> and <y> are conjugate exactly when y is conjugate to a generator
    x^k (gcd(k, o(x)) = 1) of <x>, so class reps are merged along power maps
    instead of conjugating member sets.
    """
    cd = G.conjugacy
    table = G._power_table
    claimed = [False] * len(cd)
    out = []
    for c, (rep, o) in enumerate(zip(cd.class_reps, cd.rep_orders)):
        if claimed[c]:
            continue
        for k in range(o):
            if math.gcd(k, o) == 1:
                claimed[table[c][k]] = True
        out.append(G.cyclic_subgroup(rep))
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup grown greedily inside successive normalizers."""
    if p < 2 or factorize(p) != {p: 1}:
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order, p)
    if target == 1:
        return Subgroup(frozenset([G.identity_index]), ())
    if target == G.order:
        return Subgroup(frozenset(range(G.order)), G.generator_indices)
    p_elements = [x for x in range(G.order) if x != G.identity_index and p_part(G.orders[x], p) == G.orders[x]]
    start = max(p_elements, key=lambda x: (G.orders[x], -x))
    gens = [start]
    members = set(G.cyclic_subgroup(start).member_indices)
    while len(members) < target:
        for g in p_elements:
            if g in members:
                continue
            if all(G.conj(h, g) in members for h in gens):
                # g normalizes P, so P<g> is a p-group of order |P| * |<g>P : P|
                cyc = G.cyclic_subgroup(g).member_indices
                members = {G.mul(a, b) for a in members for b in cyc}
                gens.append(g)
                break
        else:
            raise SylowSearchFailed(f"no p-element normalizes the current {p}-subgroup")
    if len(members) != target:
        raise SylowSearchFailed(f"grew a {p}-subgroup of order {len(members)}, expected {target}")
    return Subgroup(frozenset(members), tuple(gens))


def kernel_and_cosets(G: FiniteGroup, lam) -> tuple[Subgroup, int, list[Coset]]:
    """Kernel K of a linear character, the index m, and the cosets g^d K, d = 1..m.

    ``lam`` is a class function (anything with ``values`` indexed by class);
    g is the first element (by index) whose coset generates G/K.
    """
    cd = G.conjugacy
    values = list(lam.values)
    if values[0] != 1:
        raise NotLinear(f"degree {values[0]} != 1")
    elem_val = [values[cd.class_of[x]] for x in range(G.order)]
    for s in G.generator_indices:
        for x in range(G.order):
            if elem_val[G.mul(x, s)] != elem_val[x] * elem_val[s]:
                raise NotLinear("class function is not multiplicative")
    kernel = frozenset(x for x in range(G.order) if elem_val[x] == 1)
    K = Subgroup(kernel, ())
    m = G.order // len(kernel)
    g = None
    for x in range(G.order):
        k, cur = 1, x
        while cur not in kernel:
            cur = G.mul(cur, x)
            k += 1
        if k == m:
            g = x
            break
    if g is None:
        raise NotLinear("G/Ker is not cyclic")
    cosets = []
    gd = G.identity_index
    for _ in range(1, m + 1):
        gd = G.mul(gd, g)
        cosets.append(Coset(gd, K, frozenset(G.mul(gd, z) for z in kernel)))
    return K, m, cosets
