"""Built-in group families and the group specifier grammar.

Grammar: ``C:n`` cyclic, ``D:n`` dihedral of order 2n, ``S:n`` / ``A:n``
symmetric and alternating (n <= 8), ``Q:n`` generalized quaternion of order
n (a power of two, 8 <= n <= 64), ``SL23``, direct products joined with
``x`` (``C:3xC:4``), or ``file:<path>`` for a group description file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .exceptions import ParseError, UnsupportedFamily
from .permgroup import DEFAULT_CAP, FiniteGroup, Permutation, close_group, read_group_file

__all__ = ["GroupSpecifier", "build_group", "default_catalog", "parse_specifier"]

_FACTOR_RE = re.compile(r"([A-Z]):(\d+)|SL23")


@dataclass(frozen=True)
class GroupSpecifier:
    # each factor is (family, parameter); SL23 has parameter 0
    factors: tuple[tuple[str, int], ...] = ()
    path: str | None = None

    @property
    def name(self) -> str:
        if self.path is not None:
            return f"file:{self.path}"
        return "x".join("SL23" if fam == "SL23" else f"{fam}:{n}" for fam, n in self.factors)

    def __str__(self) -> str:
        return self.name


def _check_family(fam: str, n: int, text: str, pos: int) -> None:
    if fam not in ("C", "D", "S", "A", "Q"):
        raise UnsupportedFamily(f"unknown family {fam!r} at position {pos} in {text!r}")
    if fam == "C" and n < 1:
        raise UnsupportedFamily(f"C:{n}: cyclic order must be >= 1")
    if fam == "D" and n < 1:
        raise UnsupportedFamily(f"D:{n}: dihedral parameter must be >= 1")
    if fam in ("S", "A") and not 1 <= n <= 8:
        raise UnsupportedFamily(f"{fam}:{n}: degree must be between 1 and 8")
    if fam == "Q" and (n < 8 or n > 64 or n & (n - 1)):
        raise UnsupportedFamily(f"Q:{n}: order must be a power of 2 in [8, 64]")


def parse_specifier(text: str) -> GroupSpecifier:
    text = text.strip()
    if text.startswith("file:"):
        path = text[5:]
        if not path:
            raise ParseError("empty path", text, 5)
        return GroupSpecifier(path=path)
    factors = []
    pos = 0
    while True:
        m = _FACTOR_RE.match(text, pos)
        if not m:
            raise ParseError("expected a group family such as C:6 or SL23", text, pos)
        if m.group(0) == "SL23":
            factors.append(("SL23", 0))
        else:
            fam, n = m.group(1), int(m.group(2))
            _check_family(fam, n, text, pos)
            factors.append((fam, n))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "x":
            raise ParseError("expected 'x' between direct factors", text, pos)
        pos += 1
    return GroupSpecifier(factors=tuple(factors))


# ---------------------------------------------------------------------------
# permutation realizations; each returns (degree, generators)

def _cycle(degree: int, *cycles) -> Permutation:
    return Permutation.from_cycles(degree, cycles)


def _regular(elements: Sequence, mul, gens: Sequence) -> tuple[int, list[Permutation]]:
    index = {g: i for i, g in enumerate(elements)}
    perms = [Permutation(tuple(index[mul(g, h)] for h in elements)) for g in gens]
    return len(elements), perms


def _cyclic(n: int):
    return n, [_cycle(n, tuple(range(n)))] if n > 1 else []


def _dihedral(n: int):
    if n == 1:
        return 2, [_cycle(2, (0, 1))]
    if n == 2:
        return 4, [Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))]
    refl = Permutation(tuple((-i) % n for i in range(n)))
    return n, [_cycle(n, tuple(range(n))), refl]


def _symmetric(n: int):
    if n == 1:
        return 1, []
    if n == 2:
        return 2, [_cycle(2, (0, 1))]
    return n, [_cycle(n, tuple(range(n))), _cycle(n, (0, 1))]


def _alternating(n: int):
    return n, [_cycle(n, (0, 1, k)) for k in range(2, n)]


def _quaternion(n: int):
    # <a, b | a^(n/2) = 1, b^2 = a^(n/4), b a b^-1 = a^-1>, elements a^i b^j
    h, q = n // 2, n // 4
    elements = [(i, j) for j in (0, 1) for i in range(h)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % h, l)
        if l == 0:
            return ((i - k) % h, 1)
        return ((i - k + q) % h, 0)

    return _regular(elements, mul, [(1, 0), (0, 1)])


def _sl23():
    mats = [
        (a, b, c, d)
        for a, b, c, d in product(range(3), repeat=4)
        if (a * d - b * c) % 3 == 1
    ]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    return _regular(mats, mul, [(1, 1, 0, 1), (1, 0, 1, 1)])


_BUILDERS = {
    "C": _cyclic,
    "D": _dihedral,
    "S": _symmetric,
    "A": _alternating,
    "Q": _quaternion,
}


def _factor(fam: str, n: int):
    if fam == "SL23":
        return _sl23()
    return _BUILDERS[fam](n)


def build_group(spec: GroupSpecifier | str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Permutation realization of a specifier; direct factors act on disjoint points."""
    if isinstance(spec, str):
        spec = parse_specifier(spec)
    if spec.path is not None:
        G = read_group_file(spec.path, cap=cap)
        G.name = spec.name
        return G
    total = 0
    parts = []
    for fam, n in spec.factors:
        deg, gens = _factor(fam, n)
        parts.append((total, deg, gens))
        total += deg
    total = max(total, 1)
    gens = []
    for offset, deg, fgens in parts:
        for g in fgens:
            images = list(range(total))
            for i, j in enumerate(g.images):
                images[offset + i] = offset + j
            gens.append(Permutation(tuple(images)))
    return close_group(total, gens, cap=cap, name=spec.name)


def default_catalog() -> list[GroupSpecifier]:
    """The groups checked by ``scan`` when no specifiers are given."""
    names = [f"C:{n}" for n in range(1, 65)]
    names += [f"D:{n}" for n in range(1, 65)]
    names += [f"S:{n}" for n in range(1, 7)]
    names += [f"A:{n}" for n in range(1, 7)]
    names += ["Q:8", "Q:16", "Q:32", "SL23"]
    names += [f"C:{m}xC:{n}" for m in range(2, 9) for n in range(m, 33) if m * n <= 64]
    return [parse_specifier(s) for s in names]
