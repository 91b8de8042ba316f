import itertools

import pytest
from fractions import Fraction as Q

from nilorb import partitions as pt
from nilorb._linalg import rank as matrix_rank
from nilorb.orbits import (
    NilpotentOrbit,
    all_classical_orbits,
    all_exceptional_orbits,
    classical_boxes,
    classical_orbit,
    codim,
    dim_nilcone,
    dim_orbit,
    exceptional_orbit,
    fundamental_group_order,
    load_exceptional_tables,
    zero_orbit,
)


def test_nilcone_dimensions():
    assert dim_nilcone("G2") == 12
    assert dim_nilcone("F4") == 48
    assert dim_nilcone("E8") == 240
    assert codim(zero_orbit("G2")) == 12
    for typ in ("G2", "F4", "E6", "E7", "E8"):
        assert codim(exceptional_orbit(typ, typ)) == 0


def test_load_tables_counts_and_parity():
    tables = load_exceptional_tables()
    counts = {"G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}
    for typ, table in tables.items():
        assert len(table) == counts[typ]
        for rec in table.values():
            assert rec.dimension % 2 == 0
            assert rec.bv_dual_label in table
            assert all(x in (0, 1, 2) for x in rec.weighted_diagram)
        # weighted diagrams are unique
        assert len({rec.weighted_diagram for rec in table.values()}) == len(table)


def test_fundamental_groups():
    assert fundamental_group_order(exceptional_orbit("G2", "G2(a1)")) == (6, 2)
    assert fundamental_group_order(exceptional_orbit("E8", "E8(a7)"))[0] == 120
    assert fundamental_group_order(zero_orbit("E6")) == (1, 1)
    assert fundamental_group_order(classical_orbit("A3", (2, 2))) == (2, 2)
    assert fundamental_group_order(classical_orbit("C3", (4, 2)))[0] == 4


def test_codim_even_everywhere():
    for typ in ("G2", "F4", "E6", "E7", "E8"):
        for orbit in all_exceptional_orbits(typ):
            assert codim(orbit) % 2 == 0


def test_even_orbit_half_integrality():
    # even orbits have orbit-gamma0 denominators dividing 2 in the tables
    import csv, os
    from nilorb.orbits import _data_dir, get_record

    path = os.path.join(_data_dir(), "golden", "unipotent_tables.tsv")
    with open(path, encoding="utf-8") as f:
        for r in csv.DictReader(f, delimiter="\t"):
            if r["kind"] != "orbit":
                continue
            rec = get_record(r["type"], r["label"])
            if all(x in (0, 2) for x in rec.weighted_diagram):
                assert int(r["den"]) in (1, 2), (r["type"], r["label"])


def _form_matrix(ambient, n):
    # antidiagonal form; symmetric for so, antisymmetric-ish for sp
    J = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        if ambient[0] == "C":
            J[i][n - 1 - i] = Q(1) if i < n // 2 else Q(-1)
        else:
            J[i][n - 1 - i] = Q(1)
    return J


def _nilpotent_rep(ambient, p):
    """A partition-p nilpotent inside so(n)/sp(n) for an explicit form."""
    n = classical_boxes(ambient)
    fam = ambient[0]
    # build e block-diagonally with epsilon-twisted Jordan blocks so that
    # J e + e^T J = 0 for the block form J assembled from the pieces
    blocks = []
    forms = []
    parts = list(p)
    used = []
    # pair up parts that need pairing (even for so, odd for sp)
    need_pair = (lambda d: d % 2 == 0) if fam in "BD" else (lambda d: d % 2 == 1)
    singles, pairs = [], []
    counted = {}
    for d in parts:
        counted[d] = counted.get(d, 0) + 1
    for d, m in sorted(counted.items(), reverse=True):
        if need_pair(d):
            assert m % 2 == 0
            pairs.extend([d] * (m // 2))
        else:
            singles.extend([d] * m)
            if fam == "C":
                pass
    size = 0
    entries = {}

    def add_jordan(offset, d, sign=1):
        for i in range(d - 1):
            entries[(offset + i, offset + i + 1)] = Q(sign)

    # single blocks carry the epsilon form; a pair (d, d) carries the
    # hyperbolic form [[0, R], [sigma R, 0]] with e = shift (+) and -shift
    J = [[Q(0)] * n for _ in range(n)]
    off = 0
    for d in singles:
        add_jordan(off, d)
        for i in range(d):
            J[off + i][off + d - 1 - i] = Q((-1) ** i)
        off += d
    sigma = 1 if fam in "BD" else -1
    for d in pairs:
        add_jordan(off, d, sign=1)
        add_jordan(off + d, d, sign=-1)
        for i in range(d):
            J[off + i][off + 2 * d - 1 - i] = Q(1)
            J[off + 2 * d - 1 - i][off + i] = Q(sigma)
        off += 2 * d
    assert off == n
    e = [[entries.get((i, j), Q(0)) for j in range(n)] for i in range(n)]
    return e, J


def _lie_algebra_basis(J, fam):
    # g = {X : X^T J + J X = 0}
    n = len(J)
    rows = []
    # unknowns X_{ij}; constraints sum_k X_{ki} J_{kj} + J_{ik} X_{kj} = 0
    cons = []
    for i in range(n):
        for j in range(n):
            row = [Q(0)] * (n * n)
            for k in range(n):
                row[k * n + i] += J[k][j]
                row[k * n + j] += J[i][k]
            cons.append(row)
    return cons


def _centralizer_dim(ambient, p):
    n = classical_boxes(ambient)
    e, J = _nilpotent_rep(ambient, p)
    # membership check: e in g
    for i in range(n):
        for j in range(n):
            s = sum(e[k][i] * J[k][j] + J[i][k] * e[k][j] for k in range(n))
            assert s == 0, "representative not in the Lie algebra"
    cons = _lie_algebra_basis(J, ambient[0])
    # add [e, X] = 0 constraints
    for i in range(n):
        for j in range(n):
            row = [Q(0)] * (n * n)
            for k in range(n):
                row[k * n + j] += e[i][k]
                row[i * n + k] -= e[k][j]
            cons.append(row)
    r = matrix_rank(cons)
    return n * n - r


@pytest.mark.parametrize("ambient", ["B2", "B3", "C2", "C3", "D3", "D4"])
def test_dim_formula_vs_matrix_centralizer(ambient):
    fam = ambient[0]
    kind = "C" if fam == "C" else "BD"
    n = classical_boxes(ambient)
    dim_g = {"B": n * (n - 1) // 2, "C": n * (n + 1) // 2, "D": n * (n - 1) // 2}[fam]
    for p in pt.partitions_of(n, kind):
        orbit = classical_orbit(ambient, p)
        z = _centralizer_dim(ambient, p)
        assert dim_orbit(orbit) == dim_g - z, (ambient, p)
