import itertools
import json
import os
import random

import pytest

from nilorb import partitions as pt
from nilorb.induction import (
    InductionDatum,
    _as_roots,
    classical_levis,
    induce_classical,
    induce_exceptional,
    is_birationally_rigid,
    is_even,
    is_rigid,
    jacobson_morozov_levi,
    richardson_exceptional,
    rigid_induction_sources,
    spin_birigid_cover_exists,
)
from nilorb.orbits import (
    _data_dir,
    all_classical_orbits,
    classical_boxes,
    classical_orbit,
    codim,
    dim_orbit,
    exceptional_orbit,
    load_exceptional_tables,
    zero_orbit,
)
from nilorb.rootsys import Levi, build_root_system, sub_root_system


def test_classical_induction_recipe():
    # so(7) from gl(1) x so(5), orbit {0} x (2^2,1)
    datum = InductionDatum("B3", ((1,),), (2, 2, 1))
    out = induce_classical(datum)
    assert out.partition == (3, 3, 1)
    # codim preservation for this datum
    inner = codim(classical_orbit("B2", (2, 2, 1)))
    assert codim(out) == inner
    # identity induction
    datum = InductionDatum("C3", (), (4, 2))
    assert induce_classical(datum).partition == (4, 2)


def test_paper_quoted_classical_inductions():
    # Ind^{D7}_{D5+A1}(0) = (3^2, 1^8) via gl(2) x so(10)
    out = induce_classical(InductionDatum("D7", ((1, 1),), tuple([1] * 10)))
    assert out.partition == (3, 3, 1, 1, 1, 1, 1, 1, 1, 1)
    # gl(1) x so(10) inside so(12), orbit {0} x (3,2^2,1^3); value frozen from
    # the row-addition oracle, codim preserved (16 on both sides)
    out = induce_classical(InductionDatum("D6", ((1,),), (3, 2, 2, 1, 1, 1)))
    assert out.partition == (5, 2, 2, 1, 1, 1)
    assert codim(out) == codim(classical_orbit("D5", (3, 2, 2, 1, 1, 1)))


def test_codim_preserved_exhaustive_small_rank():
    for ambient in ["B2", "B3", "C2", "C3", "D3", "D4", "A3"]:
        fam = ambient[0]
        for gl_sizes, tail_boxes in classical_levis(ambient):
            from nilorb.induction import _tail_partitions

            gl_zero = tuple(tuple([1] * a) for a in gl_sizes)
            for tail in _tail_partitions(fam, tail_boxes, rigid_only=False):
                datum = InductionDatum(ambient, gl_zero, tail)
                out = induce_classical(datum)
                inner = 0
                trank = tail_boxes // 2 if fam != "B" else (tail_boxes - 1) // 2
                real_tail = (fam == "B" and trank >= 1) or (fam == "C" and trank >= 1) or (
                    fam == "D" and trank >= 2
                )
                if tail and real_tail:
                    inner = codim(classical_orbit(f"{fam}{trank}", tail))
                inner += sum(a * (a - 1) for a in gl_sizes)
                assert codim(out) == inner, (ambient, datum)


def test_induction_transitivity_random_nested():
    rng = random.Random(23)
    for _ in range(150):
        ambient = rng.choice(["B3", "B4", "C3", "C4", "D4", "D5", "B5", "C5", "D5"])
        fam = ambient[0]
        shapes = classical_levis(ambient)
        gl_sizes, tail_boxes = rng.choice([s for s in shapes if s[0]])
        from nilorb.induction import _tail_partitions

        tails = _tail_partitions(fam, tail_boxes, rigid_only=False)
        tail = rng.choice(tails)
        gl_parts = tuple(tuple([1] * a) for a in gl_sizes)
        direct = induce_classical(InductionDatum(ambient, gl_parts, tail))
        # two-step: first absorb one gl factor into the tail
        a = gl_sizes[0]
        mid_boxes = tail_boxes + 2 * a
        mid = induce_classical(InductionDatum(
            f"{fam}{mid_boxes // 2 if fam != 'B' else (mid_boxes - 1) // 2}",
            ((tuple([1] * a)),), tail))
        two_step = induce_classical(
            InductionDatum(ambient, tuple(tuple([1] * b) for b in gl_sizes[1:]), mid.partition)
        )
        assert direct.partition == two_step.partition


def test_rigidity_classical():
    assert is_birationally_rigid(classical_orbit("B2", (2, 2, 1)))
    assert is_rigid(classical_orbit("C3", (2, 1, 1, 1, 1)))
    assert not is_rigid(classical_orbit("C3", (2, 2, 1, 1)))
    assert is_birationally_rigid(classical_orbit("C3", (2, 2, 1, 1)))
    # type D exclusion (2^m, 1^2)
    assert not is_birationally_rigid(classical_orbit("D3", (2, 2, 1, 1)))
    assert is_birationally_rigid(classical_orbit("D4", (2, 2, 1, 1, 1, 1)))


def test_everything_induced_from_rigid():
    for ambient in ["B2", "B3", "B4", "C2", "C3", "C4", "D4"]:
        for orbit in all_classical_orbits(ambient):
            if orbit.decoration:
                continue
            sources = rigid_induction_sources(orbit)
            assert sources, (ambient, orbit)
            if is_rigid(orbit):
                assert any(not d.gl_partitions for d in sources)


def test_exceptional_rigidity_flags():
    assert is_birationally_rigid(exceptional_orbit("E7", "A4+A1"))
    assert not is_rigid(exceptional_orbit("E7", "A4+A1"))
    assert is_birationally_rigid(exceptional_orbit("E7", "A2+A1"))
    assert not is_rigid(exceptional_orbit("E7", "A2+A1"))
    assert is_rigid(exceptional_orbit("G2", "A1"))
    assert not is_birationally_rigid(exceptional_orbit("G2", "G2(a1)"))


def test_spin_cover_classification():
    assert spin_birigid_cover_exists(6, (5, 1)) == "spin_only"
    assert spin_birigid_cover_exists(15, (9, 5, 1)) == "spin_only"
    assert spin_birigid_cover_exists(6, (1,) * 6) == "G_equivariant"
    assert spin_birigid_cover_exists(3, (3,)) == "none"
    assert spin_birigid_cover_exists(7, (3, 2, 2)) == "none"


def test_jacobson_morozov():
    o = exceptional_orbit("G2", "G2(a1)")
    levi = jacobson_morozov_levi(o)
    assert levi.type_label() == "A1"
    assert is_even(o)
    assert jacobson_morozov_levi(exceptional_orbit("E7", "D4(a1)")).type_label() == "A5+A1"
    principal = exceptional_orbit("E6", "E6")
    assert jacobson_morozov_levi(principal).rank == 0
    assert is_even(principal)


RICHARDSON_ANCHORS = [
    ("F4", [2, 3, 4], "A2"),
    ("F4", [1, 3, 4], "F4(a3)"),
    ("E6", [1, 3, 4, 5, 6], "A2"),
    ("E6", [2, 3, 4, 5], "2A2"),
    ("E6", [2, 3, 5], "E6(a3)"),
    ("E6", [1, 2, 3, 5, 6], "D4(a1)"),
    ("E7", [1, 2, 3, 4, 5, 6], "(3A1)''"),
    ("E7", [2, 3, 4, 5, 6, 7], "A2"),
    ("E7", [1, 3, 4, 5, 6, 7], "A2+3A1"),
    ("E7", [2, 3, 4, 5, 6], "(A3+A1)''"),
    ("E7", [1, 2, 4, 5, 6, 7], "D4(a1)"),
    ("E7", [1, 2, 3, 4, 6, 7], "A3+A2+A1"),
    ("E7", [2, 3, 4, 6, 7], "D5(a1)+A1"),
    ("E7", [1, 2, 3, 5, 6], "E7(a5)"),
    ("E7", [2, 3, 5, 6], "E7(a4)"),
    ("E7", [1, 2, 4, 5, 7], "E6(a3)"),
    ("E7", [1, 2, 4, 5], "E7(a5)"),
    ("E7", [1, 2, 3, 4], "D5(a1)"),
    ("E8", [1, 2, 3, 4, 5, 6, 7], "A2"),
    ("E8", [2, 3, 4, 5, 6, 7, 8], "2A2"),
    ("E8", [1, 2, 3, 4, 5, 6, 8], "D4(a1)"),
    ("E8", [1, 3, 4, 5, 6, 7, 8], "D4(a1)+A2"),
    ("E8", [1, 3, 4, 5, 6, 7], "D4+A2"),
    ("E8", [1, 2, 3, 4, 6, 7, 8], "E8(a7)"),
]


@pytest.mark.parametrize("typ,nodes,expect", RICHARDSON_ANCHORS)
def test_richardson_paper_anchors(typ, nodes, expect):
    assert richardson_exceptional(typ, nodes).label == expect


def test_richardson_even_orbit_sweep():
    for typ, table in load_exceptional_tables().items():
        for label, rec in table.items():
            if label != typ and all(x in (0, 2) for x in rec.weighted_diagram):
                zeros = [i + 1 for i, x in enumerate(rec.weighted_diagram) if x == 0]
                assert richardson_exceptional(typ, zeros).label == label, (typ, label)


def test_extra_induction_table_rows():
    with open(os.path.join(_data_dir(), "induction_extra.json"), encoding="utf-8") as f:
        rows = json.load(f)

    def find_rep(typ, want):
        rs = build_root_system(typ)
        for k in range(1, rs.rank + 1):
            for nodes in itertools.combinations(range(1, rs.rank + 1), k):
                sg = sub_root_system(rs, [rs.simple_roots[i - 1] for i in nodes])
                if "+".join(sorted(f.label for f in sg.factors)) == "+".join(sorted(want.split("+"))):
                    return list(nodes)
        raise AssertionError(want)

    for r in rows:
        nodes = find_rep(r["ambient"], r["levi_type"])
        levi = Levi.standard(build_root_system(r["ambient"]), nodes)
        orbits = []
        for part, factor in zip(r["orbit"].split("|"), levi.factors):
            if factor.family in "EFG":
                orbits.append(exceptional_orbit(factor.label, part))
            else:
                orbits.append(classical_orbit(factor.label, pt.parse_partition(part)))
        assert induce_exceptional(r["ambient"], nodes, orbits).label == r["induced"], r


def test_induce_missing_entry_raises():
    with pytest.raises(KeyError):
        induce_exceptional("E8", [1, 2, 3, 4, 5, 6, 7], [exceptional_orbit("E7", "E6(a1)")])
