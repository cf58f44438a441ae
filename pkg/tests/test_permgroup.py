import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import group
from oracles import (
    brute_classes,
    brute_closure,
    brute_cyclic_subgroup_classes,
    brute_order,
    brute_psi,
    psi_cyclic_by_enumeration,
)
from xichar.catalog import build_group
from xichar.chartable import character_table
from xichar.exceptions import ClosureCapExceeded, InvalidPermutation, NotLinear, ParseError
from xichar.permgroup import (
    Permutation,
    close_group,
    conjugacy_classes,
    cyclic_subgroups_up_to_conjugacy,
    element_order,
    exponent,
    kernel_and_cosets,
    p_part,
    parse_cycles,
    power_map,
    psi,
    read_group_file,
    sylow_subgroup,
)
from xichar.xi import psi_cyclic

SMALL = ["C:1", "C:2", "C:6", "D:4", "D:5", "S:3", "S:4", "A:4", "Q:8", "C:2xC:4", "SL23", "D:6"]


# -- permutations ----------------------------------------------------------

def test_permutation_product_applies_left_factor_first():
    a = Permutation.from_cycles(3, [(0, 1)])
    b = Permutation.from_cycles(3, [(1, 2)])
    # 0 -a-> 1 -b-> 2
    assert (a * b).images[0] == 2
    assert (a * b).images == (2, 0, 1)
    assert a * a.inverse() == Permutation.identity(3)


def test_permutation_validation():
    with pytest.raises(InvalidPermutation):
        Permutation((0, 0, 1))
    with pytest.raises(InvalidPermutation):
        Permutation.from_cycles(3, [(0, 3)])


def test_parse_cycles():
    assert parse_cycles(4, "(0 1 2)(3)") == Permutation((1, 2, 0, 3))
    assert parse_cycles(3, "()") == Permutation.identity(3)
    assert parse_cycles(5, "(0,4)") == Permutation((4, 1, 2, 3, 0))
    for bad in ["(0 1", "0 1", "(0 x)", "(0 1) junk"]:
        with pytest.raises(ParseError):
            parse_cycles(4, bad)


def test_cycles_and_str_round_trip():
    p = Permutation.from_cycles(6, [(0, 3, 5), (1, 2)])
    assert p.order() == 6
    assert parse_cycles(6, str(p)) == p


# -- closure ---------------------------------------------------------------

def test_close_group_examples():
    G = close_group(3, [Permutation((1, 2, 0)), Permutation((1, 0, 2))])
    assert G.order == 6
    G = close_group(1, [])
    assert G.order == 1 and G.elements[0] == Permutation.identity(1)
    G = close_group(4, [Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    assert G.order == 4


def test_close_group_cap():
    gens = [Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]), Permutation.from_cycles(5, [(0, 1)])]
    with pytest.raises(ClosureCapExceeded):
        close_group(5, gens, cap=100)
    assert close_group(5, gens, cap=120).order == 120


def test_close_group_rejects_wrong_degree():
    with pytest.raises(InvalidPermutation):
        close_group(4, [Permutation((1, 0, 2))])


@pytest.mark.parametrize("name", SMALL)
def test_closure_matches_brute_force(name):
    G = group(name)
    imgs = [g.images for g in G.generators]
    assert [e.images for e in G.elements] == brute_closure(G.degree, imgs)
    assert G.elements[G.identity_index] == Permutation.identity(G.degree)


# -- orders and psi --------------------------------------------------------

@pytest.mark.parametrize("name, expected", [
    ("C:1", 1), ("C:2", 3), ("C:4", 11), ("S:3", 13), ("Q:8", 27), ("C:2xC:2", 7),
])
def test_psi_values(name, expected):
    assert psi(group(name)) == expected


@pytest.mark.parametrize("name", SMALL)
def test_orders_and_psi_match_brute_force(name):
    G = group(name)
    for x, e in enumerate(G.elements):
        assert element_order(G, x) == brute_order(e.images) == e.order()
    assert psi(G) == brute_psi([e.images for e in G.elements])


@pytest.mark.parametrize("n", range(1, 40))
def test_psi_cyclic_closed_form(n):
    assert psi_cyclic(n) == psi_cyclic_by_enumeration(n)
    if n <= 24:
        assert psi(build_group(f"C:{n}")) == psi_cyclic(n)


@pytest.mark.parametrize("name", SMALL)
def test_psi_bounds(name):
    G = group(name)
    # orders of powers: o(x^k) = o(x) / gcd(k, o(x))
    for x in range(G.order):
        o = G.orders[x]
        for k in range(1, o + 1):
            assert G.orders[G.power(x, k)] == o // math.gcd(k, o)
        assert G.order % o == 0
    # the cyclic group of the same order maximizes psi
    assert psi(G) <= psi_cyclic(G.order)
    if G.order > 1:
        assert psi(G) > G.order


@pytest.mark.parametrize("name, expected", [("C:6", 6), ("S:3", 6), ("Q:8", 4), ("C:1", 1), ("A:4", 6)])
def test_exponent(name, expected):
    assert exponent(group(name)) == expected


# -- classes and power maps ------------------------------------------------

@pytest.mark.parametrize("name", SMALL)
def test_classes_match_brute_force(name):
    G = group(name)
    cd = conjugacy_classes(G)
    ours = {frozenset(G.elements[i].images for i in m) for m in cd.members}
    assert ours == set(brute_classes([e.images for e in G.elements]))
    assert cd.class_of[G.identity_index] == 0 and cd.class_sizes[0] == 1
    assert sum(cd.class_sizes) == G.order
    assert all(G.order % s == 0 for s in cd.class_sizes)
    # classes ordered by least member index
    assert list(cd.class_reps) == sorted(cd.class_reps)
    assert all(rep == min(m) for rep, m in zip(cd.class_reps, cd.members))


def test_s3_classes():
    cd = conjugacy_classes(group("S:3"))
    assert list(cd.class_sizes) == [1, 3, 2]
    assert list(cd.rep_orders) == [1, 2, 3]


def test_power_map_s3_squares():
    G = group("S:3")
    assert power_map(G, k=2) == (0, 0, 2)
    assert power_map(G, k=3) == (0, 1, 0)
    assert power_map(G, k=1) == (0, 1, 2)


@pytest.mark.parametrize("name", SMALL)
def test_power_map_properties(name):
    G = group(name)
    cd = G.conjugacy
    e = G.exponent
    for k in range(0, 2 * e + 2):
        pk = G.power_map(k)
        assert pk == G.power_map(k % e)
        for c, rep in enumerate(cd.class_reps):
            assert pk[c] == cd.class_of[G.power(rep, k)]
    for a in range(1, 5):
        for b in range(1, 5):
            pa, pb, pab = G.power_map(a), G.power_map(b), G.power_map(a * b)
            assert all(pb[pa[c]] == pab[c] for c in range(len(cd)))


# -- cyclic subgroups ------------------------------------------------------

@pytest.mark.parametrize("name", SMALL)
def test_cyclic_subgroups_match_member_set_conjugation(name):
    G = group(name)
    subs = cyclic_subgroups_up_to_conjugacy(G)
    brute = brute_cyclic_subgroup_classes([e.images for e in G.elements])
    assert len(subs) == len(brute)
    for C in subs:
        as_images = frozenset(G.elements[i].images for i in C.member_indices)
        assert sum(as_images in orbit for orbit in brute) == 1


def test_cyclic_subgroup_counts():
    assert len(cyclic_subgroups_up_to_conjugacy(group("S:3"))) == 3
    assert len(cyclic_subgroups_up_to_conjugacy(group("C:12"))) == 6
    assert len(cyclic_subgroups_up_to_conjugacy(group("Q:8"))) == 5
    assert len(cyclic_subgroups_up_to_conjugacy(group("C:1"))) == 1


# -- Sylow subgroups -------------------------------------------------------

def test_p_part():
    assert (p_part(24, 2), p_part(24, 3), p_part(24, 5)) == (8, 3, 1)


@pytest.mark.parametrize("name", SMALL + ["S:5", "A:5", "C:3xC:6"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_sylow_subgroup_is_a_p_subgroup_of_full_order(name, p):
    G = group(name)
    P = sylow_subgroup(G, p)
    assert P.order == p_part(G.order, p)
    members = P.member_indices
    assert G.identity_index in members
    assert all(G.mul(a, b) in members for a in members for b in members)
    assert all(p_part(G.orders[x], p) == G.orders[x] for x in members)
    # psi of a p-group is 1 mod p
    assert psi(G, members) % p == 1


def test_sylow_rejects_non_prime():
    with pytest.raises(ValueError):
        sylow_subgroup(group("S:3"), 4)


# -- kernels of linear characters ------------------------------------------

def test_kernel_and_cosets_sign_of_s3():
    G = group("S:3")
    T = character_table(G)
    sign = T.irreducibles[1]
    K, m, cosets = kernel_and_cosets(G, sign)
    assert (K.order, m) == (3, 2)
    assert cosets[-1].member_indices == K.member_indices
    assert set().union(*(c.member_indices for c in cosets)) == set(range(6))


def test_kernel_and_cosets_faithful_c4():
    G = group("C:4")
    T = character_table(G)
    faithful = [chi for chi in T.irreducibles if not chi.is_rational()][0]
    K, m, cosets = kernel_and_cosets(G, faithful)
    assert (K.order, m) == (1, 4)
    g = cosets[0].representative
    assert G.orders[g] == 4
    assert [c.representative for c in cosets] == [G.power(g, d) for d in range(1, 5)]


def test_kernel_rejects_non_linear():
    G = group("S:3")
    T = character_table(G)
    with pytest.raises(NotLinear):
        kernel_and_cosets(G, T.irreducibles[2])


# -- group files -----------------------------------------------------------

def test_read_group_file(tmp_path):
    f = tmp_path / "s4.txt"
    f.write_text("# symmetric group on 4 points\ndegree 4\n(0 1 2 3)\n(0 1)  # transposition\n\n")
    G = read_group_file(f)
    assert G.order == 24


@pytest.mark.parametrize("content", ["(0 1)\n", "degree x\n(0 1)\n", "degree 3\n(0 1\n", ""])
def test_read_group_file_errors(tmp_path, content):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    with pytest.raises(ParseError):
        read_group_file(f)


# -- random generating sets ------------------------------------------------

@st.composite
def random_perm_groups(draw):
    degree = draw(st.integers(min_value=1, max_value=5))
    ngens = draw(st.integers(min_value=0, max_value=3))
    gens = [Permutation(tuple(draw(st.permutations(range(degree))))) for _ in range(ngens)]
    return close_group(degree, gens)


@settings(max_examples=60, deadline=None)
@given(random_perm_groups())
def test_random_groups_invariants(G):
    assert 120 % G.order == 0
    cd = G.conjugacy
    assert sum(cd.class_sizes) == G.order
    brute = brute_classes([e.images for e in G.elements])
    assert len(brute) == len(cd)
    assert len(cyclic_subgroups_up_to_conjugacy(G)) == len(
        brute_cyclic_subgroup_classes([e.images for e in G.elements]))
    assert psi(G) <= psi_cyclic(G.order)
