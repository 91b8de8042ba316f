import random

import pytest
from fractions import Fraction as Q

from nilorb._linalg import dot
from nilorb.rootsys import (
    Levi,
    Weight,
    build_root_system,
    character_lattice_generators,
    coroot,
    levi_fundamental_weights,
    make_dominant,
    pairing,
    parse_weight,
    rho_levi,
    sub_root_system,
    weight_fw,
    weyl_orbit,
    weyl_order,
)

ALL_TYPES = ["A1", "A4", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


def test_positive_root_counts_and_cartan():
    expected = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120, "B4": 16, "D5": 20}
    for label, count in expected.items():
        rs = build_root_system(label)
        assert len(rs.positive_roots) == count
        for i in range(rs.rank):
            assert rs.cartan[i][i] == 2
            for j in range(rs.rank):
                if i != j:
                    assert rs.cartan[i][j] in (0, -1, -2, -3)
                    # recompute <alpha_j, alpha_i^vee> exactly
                    assert rs.cartan[i][j] == dot(rs.simple_roots[j], rs.simple_coroots[i])


def test_cartan_determinants():
    assert build_root_system("E8").cartan_determinant() == 1
    assert build_root_system("G2").cartan_determinant() == 1
    assert build_root_system("E7").cartan_determinant() == 2


def test_f4_root_lengths():
    f4 = build_root_system("F4")
    lens = [dot(a, a) for a in f4.simple_roots]
    assert lens[0] == lens[1] > lens[2] == lens[3]
    g2 = build_root_system("G2")
    assert dot(g2.simple_roots[0], g2.simple_roots[0]) < dot(g2.simple_roots[1], g2.simple_roots[1])


def test_pairing_examples():
    e8 = build_root_system("E8")
    rho = weight_fw(e8, [1] * 8)
    for cv in e8.simple_coroots:
        assert pairing(rho, cv) == 1
    zero = weight_fw(e8, [0] * 8)
    assert pairing(zero, e8.simple_coroots[3]) == 0
    lam = weight_fw(e8, [Q(x, 4) for x in (0, 1, 0, 0, 1, 0, 0, 1)])
    assert pairing(lam, e8.simple_coroots[1]) == Q(1, 4)


def test_basis_roundtrip():
    rng = random.Random(3)
    for label in ALL_TYPES:
        rs = build_root_system(label)
        coords = [Q(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rs.rank)]
        w = weight_fw(rs, coords)
        assert w.to_orth().to_fw().coords == w.coords


def test_make_dominant_paper_examples():
    e7 = build_root_system("E7")
    dom, word = make_dominant(weight_fw(e7, [1, 1, 1, 0, 1, 1, -6]))
    assert dom.coords == tuple(Q(x) for x in (1, 0, 0, 1, 0, 1, 0))
    assert len(word) <= len(e7.positive_roots)
    e6 = build_root_system("E6")
    dom, _ = make_dominant(weight_fw(e6, [Q(x, 3) for x in (-8, 3, 3, 3, 3, -8)]))
    assert dom.coords == tuple(Q(x, 3) for x in (1, 3, 1, 1, 1, 1))


def test_make_dominant_idempotent_and_word():
    rng = random.Random(5)
    for label in ALL_TYPES:
        rs = build_root_system(label)
        for _ in range(50):
            coords = [Q(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rs.rank)]
            dom, word = make_dominant(weight_fw(rs, coords))
            assert dom.is_dominant()
            assert len(word) <= len(rs.positive_roots)
            again, word2 = make_dominant(dom)
            assert again.coords == dom.coords and word2 == []


def test_weyl_orbit_divides_group_order():
    rng = random.Random(9)
    for label in ["A2", "B2", "C3", "D4", "G2", "F4"]:
        rs = build_root_system(label)
        for _ in range(3):
            coords = [Q(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rs.rank)]
            orbit = weyl_orbit(weight_fw(rs, coords))
            assert weyl_order(rs) % len(orbit) == 0


def test_sub_root_system_full_and_appendix_example():
    f4 = build_root_system("F4")
    sub = sub_root_system(f4, list(f4.simple_roots))
    assert sub.type_label() == "F4"

    e8 = build_root_system("E8")
    gamma = weight_fw(e8, [Q(x, 3) for x in (0, 1, 0, 0, 0, 0, 2, 0)])
    v = gamma.to_orth().coords
    integral = [coroot(r) for r in e8.all_roots() if dot(v, coroot(r)).denominator == 1]
    from nilorb.maximality import integral_singular_subsystems

    ints, sing = integral_singular_subsystems(gamma)
    assert ints.type_label() == "E7"
    assert sing.type_label() == "A5+A1"


def test_levi_fundamental_weights_appendix_values():
    e8 = build_root_system("E8")
    levi = Levi.standard(e8, [2, 3, 4, 5, 7, 8])
    fws = levi_fundamental_weights(levi)
    # factor order: D4 (2,3,4,5) then A2 (7,8); the appendix lists the D4
    # weights with the central-node weight third
    vals = {tuple(w.coords) for w in fws}
    assert tuple(Q(x, 2) for x in (-1, 2, 0, 0, 0, -1, 0, 0)) in vals
    assert tuple(Q(x, 3) for x in (0, 0, 0, 0, 0, -2, 3, 0)) in vals
    assert tuple(Q(x) for x in (-1, 0, 0, 1, 0, -1, 0, 0)) in vals
    # delta_jk pairing over the Levi's simple coroots
    for j, w in enumerate(fws):
        for k, beta in enumerate(levi.subsystem.simple_roots):
            assert pairing(w, coroot(beta)) == (1 if j == k else 0)


def test_levi_fw_identity_case():
    e6 = build_root_system("E6")
    levi = Levi.standard(e6, [1, 2, 3, 4, 5, 6])
    fws = levi_fundamental_weights(levi)
    for j, w in enumerate(fws):
        expect = [0] * 6
        expect[j] = 1
        # factor reordering may permute the nodes; just check membership
    vals = {tuple(w.coords) for w in fws}
    for i in range(6):
        e = [Q(0)] * 6
        e[i] = Q(1)
        assert tuple(e) in vals


def test_rho_levi_examples():
    e6 = build_root_system("E6")
    assert rho_levi(Levi.standard(e6, [1, 3, 4, 5, 6])).coords == tuple(
        Q(x, 2) for x in (2, -9, 2, 2, 2, 2)
    )
    g2 = build_root_system("G2")
    assert rho_levi(Levi.standard(g2, [1, 2])).coords == (1, 1)
    e7 = build_root_system("E7")
    assert rho_levi(Levi.standard(e7, [1, 2, 3, 5, 6])).coords == tuple(
        Q(x, 2) for x in (2, 2, 2, -5, 2, 2, -2)
    )


def test_character_lattice_examples():
    e7 = build_root_system("E7")
    from nilorb.induction import _as_roots

    theta = (2, 2, 3, 4, 3, 2, 1)
    m2 = Levi(e7, _as_roots(e7, [2, 3, 4, 5, 6, theta]))
    taus = character_lattice_generators(m2)
    assert [tuple(int(x) for x in t.coords) for t in taus] == [(1, 0, 0, 0, 0, 0, -2)]
    # standard Levi: fundamental weights of the deleted nodes
    taus = character_lattice_generators(Levi.standard(e7, [1, 2, 3, 4, 5, 6]))
    assert [tuple(int(x) for x in t.coords) for t in taus] == [(0, 0, 0, 0, 0, 0, 1)]
    # generators pair to zero against every Levi coroot
    for t in character_lattice_generators(m2):
        for beta in m2.subsystem.simple_roots:
            assert pairing(t, coroot(beta)) == 0


def test_weight_serialization():
    e7 = build_root_system("E7")
    w = weight_fw(e7, [1, 1, 1, 0, 1, 1, -6])
    assert w.serialize() == "fw:E7:[1,1,1,0,1,1,-6]"
    assert parse_weight(w.serialize()).coords == w.coords
