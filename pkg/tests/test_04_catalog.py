"""Classification tables, dimension certificates and witnesses.
"""

from fractions import Fraction
import json
import pytest
from spherical_classes import catalog, weyl
from spherical_classes.catalog import (MINUS, ONE, TorusWord, param,
                                       spherical_classes, zeta)
from spherical_classes.errors import InvalidTypeError


def _dims(family, rank, dims):
    t = "%s%d" % (family, rank)
    return pytest.param(family, rank, dims, id=t, marks=pytest.mark.dependency(
        name="dims_%s" % t))


@pytest.mark.parametrize("family,rank,dims", [
    _dims('G', 2, {6, 8}),
    _dims('F', 4, {16, 22, 28}),
    _dims('E', 6, {22, 32, 40}),
    _dims('E', 7, {34, 52, 54, 64, 70}),
    _dims('E', 8, {58, 92, 112, 128}),
])
def test_exceptional_dimensions(family, rank, dims):
    assert {d.expected_dim for d in spherical_classes(family, rank)} == dims


def test_e7_table():
    table = spherical_classes('E', 7)
    assert [d.kind for d in table] == ['semisimple'] * 3 + ['unipotent'] * 5
    unip = {d.name: d.expected_dim for d in table if d.kind == 'unipotent'}
    assert unip == {"A1": 34, "2A1": 52, "(3A1)''": 54, "(3A1)'": 64,
                    "4A1": 70}
    semi = {d.name: d.centralizer for d in table if d.kind == 'semisimple'}
    assert semi == {"q1": "A7", "q2": "D6xA1", "q3_a": "E6xT1"}


def test_f4_table():
    table = {d.name: d for d in spherical_classes('F', 4)}
    assert table["f1"].centralizer == "C3xA1"
    assert table["f1"].expected_dim == 28
    assert table["f2"].centralizer == "B4"
    assert table["f2"].expected_dim == 16
    mixed = table["f2*x_b1(1)"]
    assert mixed.kind == 'mixed'
    assert mixed.expected_dim == 28


def test_c3_table():
    table = spherical_classes('C', 3)
    names = [d.name for d in table]
    assert names == ["sigma_1", "a_c", "c_c", "(2,1,1,1,1)", "(2,2,1,1)",
                     "(2,2,2)", "sigma_1*u", "sigma_2*u"]
    dims = [d.expected_dim for d in table]
    assert dims == [8, 12, 10, 6, 10, 12, 12, 10]


@pytest.mark.parametrize("family,n,partitions", [
    ('A', 4, [(2, 1, 1, 1), (2, 2, 1)]),
    ('C', 2, [(2, 1, 1), (2, 2)]),
    ('B', 2, [(2, 2, 1), (3, 1, 1)]),
    ('D', 4, [(2, 2, 1, 1, 1, 1), (2, 2, 2, 2), (3, 1, 1, 1, 1, 1),
              (3, 2, 2, 1)]),
])
def test_unipotent_partitions(family, n, partitions):
    assert catalog.spherical_unipotent_partitions(family, n) == partitions


def test_partitions_need_classical():
    with pytest.raises(ValueError):
        catalog.spherical_unipotent_partitions('G', 2)


def test_invalid_type():
    with pytest.raises(InvalidTypeError):
        spherical_classes('D', 3)


def test_m0_note():
    d = [d for d in spherical_classes('B', 3) if d.name == "(3,1,1,1,1)"][0]
    assert d.notes == [catalog.M0_NOTE]


@pytest.mark.parametrize("family,rank", catalog.all_types(max_rank=4))
def test_descriptor_invariants(family, rank):
    rs = spherical_classes(family, rank)[0].rs
    bound = catalog.dimension_bound(rs)
    kinds = []
    for d in spherical_classes(family, rank):
        assert d.expected_dim % 2 == 0
        assert 0 < d.expected_dim <= bound
        kinds.append(d.kind)
    assert kinds == sorted(kinds, key=catalog._kind_order.get)


def test_dimension_bound(rootsys):
    assert catalog.dimension_bound(rootsys('E', 8)) == 128
    assert catalog.dimension_bound(rootsys('A', 3)) == 8
    assert catalog.dimension_bound(rootsys('C', 3)) == 12


@pytest.mark.parametrize("family,rank", [
    ('A', 3), ('B', 3), ('C', 3), ('D', 4),
    pytest.param('G', 2, marks=pytest.mark.dependency(depends=["dims_G2"])),
    pytest.param('F', 4, marks=pytest.mark.dependency(depends=["dims_F4"])),
    pytest.param('E', 6, marks=pytest.mark.dependency(depends=["dims_E6"])),
])
def test_certify(family, rank):
    for d in spherical_classes(family, rank):
        w = catalog.certify_dimension_identity(d)
        assert weyl.is_involution(w)
        assert w.length + weyl.rank_defect(w) == d.expected_dim


def test_symmetric_flags():
    g2 = {d.name: d.is_symmetric for d in spherical_classes('G', 2)}
    assert g2 == {"h1(-1)": True, "h1(zeta3)": False, "A1": False,
                  "A1~": False}
    c2 = {d.name: d.is_symmetric for d in spherical_classes('C', 2)
          if d.kind == 'semisimple'}
    assert c2 == {"sigma_1": True, "a_c": True, "c_c": False}
    e6 = {d.name: d.is_symmetric for d in spherical_classes('E', 6)
          if d.kind == 'semisimple'}
    assert e6["p1"]


def test_torus_word(rootsys):
    rs = rootsys('G', 2)
    t = TorusWord('G', 2, 'h', [(1, zeta(3))])
    assert str(t) == "h1(zeta3)"
    assert t.simple_phases(rs) == [Fraction(2, 3), 0]
    assert not t.is_central(rs)
    assert t.is_central(rs, power=3)
    assert not t.has_parameter
    u = TorusWord('C', 2, 'diag', [param(), ONE], constraints=(2,))
    assert str(u) == "t(c,1)"
    assert u.has_parameter
    assert not u.admissible(2)
    assert u.admissible(3)
    assert u.root_phase(rs=rootsys('C', 2), root=(0, 1), order=4) == 0
    with pytest.raises(ValueError):
        TorusWord('C', 2, 'exp', [])


def test_minus_one(rootsys):
    rs = rootsys('C', 2)
    t = TorusWord('C', 2, 'diag', [MINUS, MINUS])
    assert t.is_central(rs)
    assert str(t) == "t(-1,-1)"


@pytest.mark.parametrize("family,rank", [
    ('A', 3), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4), ('E', 7),
    ('E', 8),
])
def test_witness_cells_are_not_involutions(rootsys, family, rank):
    rs = rootsys(family, rank)
    found = catalog.nonspherical_witness_specs(family, rank)
    assert found
    for spec, w in found:
        assert not weyl.is_involution(w)
        assert w.length == sum(weyl.reflection(rs, r).length
                               for r in spec.cell)


@pytest.mark.parametrize("family,rank,size", [
    ('A', 2, 3), ('A', 4, 5), ('B', 2, 5), ('B', 3, 7), ('C', 2, 4),
    ('C', 3, 6), ('D', 4, 8), ('D', 5, 10),
])
def test_witness_data(rootsys, family, rank, size):
    rs = rootsys(family, rank)
    for spec, w in catalog.nonspherical_witness_specs(family, rank):
        assert spec.guide is not None
        assert sum(spec.partition) == size
        t = spec.torus
        order = 5 if t is not None and t.has_parameter else None
        for r, c in spec.unipotent:
            assert r in rs.positive_roots
            assert all(x <= 0 for x in spec.guide.apply(r))
            if t is not None:
                assert t.root_phase(rs, r, order) == 0
        for r in spec.search:
            assert tuple(-c for c in r) in rs.positive_roots
            assert t.root_phase(rs, r, order) != 0


def test_witness_labels():
    labels = [s.label for s, w in catalog.nonspherical_witness_specs('D', 4)]
    assert labels == ["(5,1^3)", "sigma_1*u (2,2)", "sigma_1*u (3,1)",
                      "c_c*u (2,2)", "c_c*u (3,1)"]
    spec, w = catalog.nonspherical_witness_specs('B', 2)[1]
    assert spec.unipotent[1][1] == Fraction(-1, 2)
    assert w.word == (1, 2)
    spec, w = catalog.nonspherical_witness_specs('A', 3)[1]
    assert w.word == (1, 2)
    assert "s_{m-1} s_m, m = 2" in spec.description


def test_no_witness_for_sl2():
    assert catalog.nonspherical_witness_specs('A', 1) == []


def test_serialization():
    table = spherical_classes('G', 2)
    rows = json.loads(catalog.to_json(table))
    assert [r['name'] for r in rows] == ["h1(-1)", "h1(zeta3)", "A1", "A1~"]
    assert rows[0]['centralizer'] == "A1xA1"
    assert rows[2]['label'] == "A1"
    tsv = catalog.to_tsv(table).splitlines()
    assert tsv[0].split("\t") == catalog.COLUMNS
    assert len(tsv) == 5
    assert table[0].representative() == "h1(-1)"


def test_open_questions():
    notes = catalog.open_question_notes()
    assert len(notes) == 3
