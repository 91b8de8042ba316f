import random

import pytest
from fractions import Fraction as Q

from nilorb import partitions as pt


def test_worked_example_operators():
    p = pt.parse_partition("9,5,4^2,3^4,1")
    assert pt.s4(p) == (1,)
    assert pt.sharp(p, (1,)) == pt.parse_partition("7,5,4^2,3^4,1")
    assert pt.mult_extract(p) == ((9, 5, 1), (4, 4), (3, 3, 3, 3))
    assert pt.g_pairs(pt.parse_partition("5^2,2^2,1^2")) == (6, 4, 3, 2, 1)
    assert pt.h_quads(pt.parse_partition("5^4,1^4")) == tuple(Q(x, 2) for x in (12, 11, 9, 8, 4, 3, 1))


def test_transpose_paper_example():
    assert pt.transpose((9, 5, 1)) == (3, 2, 2, 2, 2, 1, 1, 1, 1)
    assert pt.transpose((9, 5, 1)) == pt.parse_partition("3,2^4,1^4")


def test_rho_sequences():
    assert pt.rho_seq((3, 3, 2)) == tuple(Q(x, 2) for x in (2, 0, -2, 2, 0, -2, 1, -1))
    assert pt.rho_plus(pt.parse_partition("5/2,5/2,2,3/2,1/2"), 5) == tuple(
        Q(x, 4) for x in (3, 3, 2, 1, 0)
    )
    assert pt.rho_plus((), 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        pt.rho_plus((9,), 2)


def test_f_move():
    assert pt.f_move((2,)) == (1, 1)
    assert pt.f_move((3,)) == (2, 1)
    assert pt.f_move((2, 2)) == (2, 2)


def test_s4_small():
    assert pt.s4((1,)) == ()
    assert pt.s4((5, 1)) == (1,)
    assert pt.sharp((5, 1), (1,)) == (3, 1)


def test_mult_extract_errors():
    assert pt.mult_extract((2, 1, 1, 1, 1)) == ((2,), (), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        pt.mult_extract((3, 3, 3))


def test_type_predicates_and_collapse():
    assert pt.is_type_BD((3, 3, 1))
    assert not pt.is_type_BD((2, 1, 1))
    assert pt.is_type_C((2, 1, 1))
    assert pt.collapse_D((2, 2, 1, 1)) == (2, 2, 1, 1)
    assert pt.collapse_B((4, 2, 1)) == (3, 3, 1)
    assert pt.collapse_C((3, 1, 1, 1)) == (2, 2, 1, 1)


def test_parse_format_roundtrip():
    for text in ["9,5,4^2,3^4,1", "2^3", "1"]:
        assert pt.format_partition(pt.parse_partition(text)) == text


def test_transpose_involution_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 18)
        p = rng.choice(pt.partitions_of(n))
        assert pt.transpose(pt.transpose(p)) == p


def test_box_preserving_operators_random():
    rng = random.Random(11)
    for _ in range(200):
        base = [rng.randint(1, 7) for _ in range(rng.randint(1, 4))]
        y = pt.partition([b for b in set(base) for _ in range(2)])
        assert pt.size(pt.g_pairs(y)) == pt.size(y)
        assert pt.size(pt.hprime(y)) == pt.size(y)
        z = pt.partition([b for b in set(base) for _ in range(4)])
        assert pt.size(pt.h_quads(z)) == pt.size(z)


def test_f_dominated_by_input():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(1, 16)
        p = rng.choice(pt.partitions_of(n))
        assert pt.dominates(p, pt.f_move(p))


def test_h_equals_g_union_hprime_of_half():
    rng = random.Random(17)
    for _ in range(200):
        parts = sorted({rng.randint(1, 9) for _ in range(rng.randint(1, 4))}, reverse=True)
        z = pt.partition([a for a in parts for _ in range(4)])
        half = pt.half(z)
        lhs = pt.h_quads(z)
        rhs = pt.union(pt.g_pairs(half), pt.hprime(half))
        assert lhs == rhs


def test_collapse_is_largest_dominated():
    rng = random.Random(19)
    for _ in range(60):
        n = rng.choice([6, 8, 10])
        p = rng.choice(pt.partitions_of(n))
        q = pt.collapse_BD(p)
        assert pt.is_type_BD(q) and pt.dominates(p, q)
        for r in pt.partitions_of(n, "BD"):
            if pt.dominates(p, r):
                assert pt.dominates(q, r)
