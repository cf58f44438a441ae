"""Xi as an integer combination of permutation characters (1_C)^G, C cyclic."""

from __future__ import annotations

from dataclasses import dataclass

from .chartable import ClassFunction
from .exceptions import NonIntegralInducedValue, NoIntegerSolution
from .hnf import solve_integer
from .permgroup import FiniteGroup, Subgroup, cyclic_subgroups_up_to_conjugacy
from .xi import xi_class_function

__all__ = ["ArtinDecomposition", "InducedCharacter", "artin_decompose", "induce_trivial"]


@dataclass(frozen=True)
class InducedCharacter:
    subgroup: Subgroup
    values: tuple[int, ...]

    def as_class_function(self, G: FiniteGroup) -> ClassFunction:
        return ClassFunction(G, self.values)


@dataclass(frozen=True)
class ArtinDecomposition:
    subgroups: tuple[Subgroup, ...]
    induced: tuple[InducedCharacter, ...]
    coefficients: tuple[int, ...]
    target: tuple[int, ...]
    residual: tuple[int, ...]

    @property
    def verified(self) -> bool:
        return not any(self.residual)


def induce_trivial(G: FiniteGroup, C: Subgroup, classes=None) -> InducedCharacter:
    """(1_C)^G(g) = #{x in G : x g x^-1 in C} / |C| on each class rep g."""
    cd = G.conjugacy
    members = C.member_indices
    values = []
    for g in cd.class_reps:
        count = sum(1 for x in range(G.order) if G.conj(g, G.inv(x)) in members)
        q, rem = divmod(count, C.order)
        if rem:
            raise NonIntegralInducedValue(f"{count} conjugators is not a multiple of |C| = {C.order}")
        values.append(q)
    return InducedCharacter(C, tuple(values))


def artin_decompose(G: FiniteGroup, classes=None, xi: ClassFunction | None = None) -> ArtinDecomposition:
    """Solve sum_C x_C (1_C)^G = Xi over the integers, one C per conjugacy class of cyclic subgroups."""
    xi = xi or xi_class_function(G)
    target = tuple(v.to_fraction() for v in xi.values)
    if any(t.denominator != 1 for t in target):
        raise NoIntegerSolution("target class function is not integer valued")
    b = [int(t) for t in target]
    subs = cyclic_subgroups_up_to_conjugacy(G)
    induced = [induce_trivial(G, C) for C in subs]
    A = [[ind.values[c] for ind in induced] for c in range(len(b))]
    x = solve_integer(A, b)
    recomposed = [sum(xi_ * ind.values[c] for xi_, ind in zip(x, induced)) for c in range(len(b))]
    residual = tuple(t - r for t, r in zip(b, recomposed))
    return ArtinDecomposition(tuple(subs), tuple(induced), tuple(x), tuple(b), residual)
