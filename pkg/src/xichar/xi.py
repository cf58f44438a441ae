"""The order character Xi(g) = |G| o(g) and its constituents.

Multiplicities [Xi, chi] are computed two ways: as a plain inner product, and
fibre-wise by grouping elements on their character value and summing
psi(fibre) times the field trace of one value per Galois orbit.  For linear
characters a third route sums psi over the cosets of the kernel with Moebius
weights.  Minimality of |G| as the integrality constant for o(.) is read off
the denominators of [o, chi], and the Sylow restriction argument is exposed
as a runnable check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable

from .chartable import CharacterTable, ClassFunction, character_table, inner_product
from .cyclotomic import (
    Cyclotomic,
    as_integer,
    divisors,
    euler_phi,
    factorize,
    galois_orbit_representatives,
    mobius,
    trace_over_q,
)
from .exceptions import NotLinear, NotRationalInteger, WitnessUnexpectedlyIntegral
from .permgroup import FiniteGroup, kernel_and_cosets, p_part, psi, sylow_subgroup

__all__ = [
    "FiberDecomposition",
    "MinimalityReport",
    "SylowWitness",
    "XiReport",
    "linear_moebius_multiplicity",
    "minimal_m",
    "order_class_function",
    "psi_cyclic",
    "sylow_witness",
    "theorem_b_multiplicity",
    "unconjugated_multiplicity",
    "xi_class_function",
    "xi_multiplicities",
    "zero_constituent_scan",
]


@dataclass(frozen=True)
class XiReport:
    group: str
    order: int
    psi: int
    multiplicities: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def min_multiplicity(self) -> int:
        return min(self.multiplicities)

    @property
    def zero_rows(self) -> list[int]:
        return [i for i, m in enumerate(self.multiplicities) if m == 0]

    @property
    def degree_identity_holds(self) -> bool:
        return sum(m * d for m, d in zip(self.multiplicities, self.degrees)) == self.order


@dataclass(frozen=True)
class FiberDecomposition:
    row: int
    reps: tuple[Cyclotomic, ...]
    fiber_psi: tuple[int, ...]
    traces: tuple[int, ...]
    fiber_sizes: tuple[int, ...]
    # every fibre, conjugates included: value -> (size, psi)
    all_fibers: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def value(self) -> int:
        return sum(s * t for s, t in zip(self.fiber_psi, self.traces))


@dataclass(frozen=True)
class SylowWitness:
    p: int
    a: int
    b: int
    n: int
    psi_P: int
    value: Fraction


@dataclass(frozen=True)
class MinimalityReport:
    group: str
    order: int
    m_of_G: int
    order_products: tuple[Fraction, ...]
    sylow_witnesses: tuple[SylowWitness, ...] = ()

    @property
    def equals_order(self) -> bool:
        return self.m_of_G == self.order


def psi_cyclic(n: int) -> int:
    """psi(C_n) = sum over d | n of d * phi(d)."""
    return sum(d * euler_phi(d) for d in divisors(n))


def order_class_function(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, G.conjugacy.rep_orders)


def xi_class_function(G: FiniteGroup, classes=None) -> ClassFunction:
    return ClassFunction(G, [G.order * o for o in G.conjugacy.rep_orders])


def xi_multiplicities(G: FiniteGroup, table: CharacterTable | None = None) -> XiReport:
    table = table or character_table(G)
    xi = xi_class_function(G)
    mults = tuple(as_integer(inner_product(xi, chi)) for chi in table.irreducibles)
    return XiReport(G.name, G.order, psi(G), mults, table.degrees)


def unconjugated_multiplicity(G: FiniteGroup, chi: ClassFunction) -> Fraction:
    """sum_x o(x) chi(x), the form without complex conjugation."""
    total = Cyclotomic.rational(0)
    for size, o, v in zip(G.conjugacy.class_sizes, G.conjugacy.rep_orders, chi.values):
        total = total + v * (size * o)
    return total.to_fraction()


def theorem_b_multiplicity(
    G: FiniteGroup, table: CharacterTable, row: int
) -> tuple[int, FiberDecomposition]:
    """[Xi, chi] as a sum over Galois-orbit representatives alpha of psi(G_{chi,alpha}) Tr(alpha)."""
    chi = table.irreducibles[row]
    cd = G.conjugacy
    fibers: dict[Cyclotomic, list[int]] = {}
    for c, v in enumerate(chi.values):
        slot = fibers.setdefault(v, [0, 0])
        slot[0] += cd.class_sizes[c]
        slot[1] += cd.class_sizes[c] * cd.rep_orders[c]
    values = list(fibers)
    reps, orbit_of = galois_orbit_representatives(values)
    # conjugate fibres must carry equal psi (and equal size)
    for v, owner in zip(values, orbit_of):
        rep = reps[owner]
        if fibers[v] != fibers[rep]:
            raise AssertionError(
                f"fibres over {rep} and its conjugate {v} differ: {fibers[rep]} vs {fibers[v]}"
            )
    traces = []
    for a in reps:
        t = trace_over_q(a)
        if t.denominator != 1:
            raise NotRationalInteger(f"trace of {a} is not integral")
        traces.append(t.numerator)
    decomp = FiberDecomposition(
        row=row,
        reps=tuple(reps),
        fiber_psi=tuple(fibers[a][1] for a in reps),
        traces=tuple(traces),
        fiber_sizes=tuple(fibers[a][0] for a in reps),
        all_fibers={v: tuple(s) for v, s in fibers.items()},
    )
    return decomp.value, decomp


def linear_moebius_multiplicity(
    G: FiniteGroup, table: CharacterTable, row: int
) -> tuple[int, list[tuple[int, int, int]]]:
    """[Xi, lambda] = sum over d | m of psi(g^d K) mu(m / d) for a linear lambda."""
    lam = table.irreducibles[row]
    if table.degrees[row] != 1:
        raise NotLinear(f"row {row} has degree {table.degrees[row]}")
    _, m, cosets = kernel_and_cosets(G, lam)
    terms = []
    for d in divisors(m):
        coset = cosets[d - 1]
        terms.append((d, psi(G, coset.member_indices), mobius(m // d)))
    return sum(s * mu for _, s, mu in terms), terms


def sylow_witness(G: FiniteGroup, p: int, b: int, n: int | None = None) -> SylowWitness:
    """The non-integral [mu_P, 1_P] for mu = m o(.), m = p^b n with b < a.

    ``n`` defaults to the p'-part of |G|.  The value n psi(P) / p^(a-b) is
    also recomputed as (1/|P|) sum_{x in P} m o(x) and the two must agree.
    """
    order = G.order
    pa = p_part(order, p)
    a = round(math.log(pa, p)) if pa > 1 else 0
    if order % p or not 0 <= b < a:
        raise ValueError(f"need p | |G| and 0 <= b < a (p={p}, b={b}, a={a})")
    if n is None:
        n = order // pa
    if n % p == 0:
        raise ValueError("n must be prime to p")
    P = sylow_subgroup(G, p)
    psi_P = psi(G, P.member_indices)
    value = Fraction(n * psi_P, p ** (a - b))
    m = p ** b * n
    direct = Fraction(sum(m * G.orders[x] for x in P.member_indices), P.order)
    if direct != value:
        raise AssertionError(f"witness mismatch: {value} vs restriction {direct}")
    if value.denominator == 1:
        raise WitnessUnexpectedlyIntegral(
            f"[mu_P, 1_P] = {value} is integral for p={p}, b={b}, n={n}"
        )
    return SylowWitness(p=p, a=a, b=b, n=n, psi_P=psi_P, value=value)


def minimal_m(
    G: FiniteGroup, table: CharacterTable | None = None, witnesses: bool = True
) -> MinimalityReport:
    """Least m > 0 with m o(.) a generalized character: lcm of denominators of [o, chi]."""
    table = table or character_table(G)
    o = order_class_function(G)
    prods = tuple(inner_product(o, chi).to_fraction() for chi in table.irreducibles)
    m = reduce(math.lcm, (q.denominator for q in prods), 1)
    found = []
    if witnesses:
        for p, a in sorted(factorize(G.order).items()) if G.order > 1 else []:
            for b in range(a):
                found.append(sylow_witness(G, p, b))
    return MinimalityReport(G.name, G.order, m, prods, tuple(found))


def zero_constituent_scan(groups: Iterable[FiniteGroup]) -> list[dict]:
    """Per group: order, number of irreducibles, zero rows, least multiplicity.

    Every zero is re-derived through the fibre formula before it is reported.
    Failures are recorded per group and the scan moves on.
    """
    out = []
    for G in groups:
        rec: dict = {"group": G.name, "order": G.order}
        try:
            table = character_table(G)
            rep = xi_multiplicities(G, table)
            for r in rep.zero_rows:
                again, _ = theorem_b_multiplicity(G, table, r)
                if again != 0:
                    raise AssertionError(f"row {r}: direct value 0 but fibre formula gives {again}")
            rec.update(
                num_irreducibles=len(table),
                zero_rows=rep.zero_rows,
                min_multiplicity=rep.min_multiplicity,
                error=None,
            )
        except Exception as exc:  # noqa: BLE001 - recorded, scan continues
            rec.update(error=f"{type(exc).__name__}: {exc}")
        out.append(rec)
    return out
