"""Classical groups over F_p, Bruhat cells and the involution criterion.
"""

import random
import numpy
import pytest
from spherical_classes import catalog, matgrp, weyl
from spherical_classes.config import Config
from spherical_classes.errors import (BadPrimeError, BruhatError,
                                      InvalidTypeError, NotInGroupError,
                                      SphericalError)
from spherical_classes.fq import FqMatrix


@pytest.mark.dependency()
def test_group_order(sp4, sl2):
    assert sp4.order == 9360000
    assert sl2.order == 24
    assert matgrp.group_order('B', 2, 5) == sp4.order
    assert matgrp.group_order('D', 4, 3) == 3**12 * 80 * 8 * 80 * 728
    with pytest.raises(InvalidTypeError):
        matgrp.group_order('G', 2, 5)


def test_bad_prime():
    with pytest.raises(BadPrimeError):
        matgrp.make_group('C', 2, 2)
    with pytest.raises(BadPrimeError):
        matgrp.make_group('B', 3, 15)
    with pytest.raises(InvalidTypeError):
        matgrp.make_group('E', 6, 5)


@pytest.mark.parametrize("family,n", [('A', 2), ('B', 2), ('C', 2), ('D', 4)])
def test_generators_in_group(family, n):
    G = matgrp.make_group(family, n, 5)
    for g in G.generators():
        assert G.contains(g)
    rng = random.Random(1)
    assert G.contains(G.random_borel(rng))
    for r in G.rs.roots:
        assert G.contains(G.root_element(r, 2))


def test_not_in_group(sp4):
    g = FqMatrix.diag([2, 1, 1, 1], 5)
    assert not sp4.contains(g)
    with pytest.raises(NotInGroupError) as excinfo:
        matgrp.bruhat_cell(sp4, g)
    assert excinfo.value.identity == "g^T J g = J"


_cell_types = [('A', 1), ('A', 2), ('A', 3), ('A', 4), ('B', 2), ('B', 3),
               ('C', 2), ('C', 3), ('D', 4)]


@pytest.mark.parametrize("family,n", [
    pytest.param(f, n, marks=pytest.mark.dependency(
        name="simple_cells_%s%d" % (f, n), depends=["test_group_order"]))
    for f, n in _cell_types
])
def test_simple_root_cells(family, n):
    G = matgrp.make_group(family, n, 5)
    rs = G.rs
    assert matgrp.bruhat_cell(G, FqMatrix.identity(G.size, 5)).is_identity()
    for i, a in enumerate(rs.simple_roots):
        x = G.root_element(tuple(-c for c in a), 1)
        assert matgrp.bruhat_cell(G, x) == weyl.simple_reflection(rs, i + 1)
        assert matgrp.bruhat_cell(G, G.root_element(a, 1)).is_identity()


@pytest.mark.parametrize("family,n,p", [
    pytest.param(f, n, p, marks=pytest.mark.dependency(
        name="round_trip_%s%d_%d" % (f, n, p),
        depends=["simple_cells_%s%d" % (f, n)]))
    for f, n in _cell_types for p in (3, 5)
])
def test_cell_round_trip(family, n, p):
    G = matgrp.make_group(family, n, p)
    rng = random.Random(7)
    for w in weyl.elements(G.rs):
        g = G.random_borel(rng) * G.weyl_representative(w) * \
            G.random_borel(rng)
        assert matgrp.bruhat_cell(G, g) == w
        assert G.weyl_from_permutation(G.permutation(w)) == w


def test_elimination_matches_ranks(sp4):
    rng = random.Random(3)
    for _ in range(20):
        g = sp4.random_borel(rng)
        for _ in range(3):
            M, Minv = sp4.random_step(rng)
            g = FqMatrix(M, 5) * g
        A = matgrp._flag_array(sp4, g)
        assert matgrp.cell_permutation(A, 5) == \
            matgrp.cell_permutation_by_ranks(A, 5)


def test_odd_sign_change():
    G = matgrp.make_group('D', 4, 5)
    flag = G.flag
    pos = {b: k for k, b in enumerate(flag)}
    perm = list(range(8))
    # swap e_4 and f_4 only
    perm[pos[G.e(3)]], perm[pos[G.f(3)]] = pos[G.f(3)], pos[G.e(3)]
    with pytest.raises(BruhatError):
        G.weyl_from_permutation(perm)


def test_signed_permutation():
    G = matgrp.make_group('C', 2, 5)
    s2 = weyl.simple_reflection(G.rs, 2)
    assert G.signed_permutation(s2) == ([0, 1], [1, -1])
    s1 = weyl.simple_reflection(G.rs, 1)
    assert G.signed_permutation(s1) == ([1, 0], [1, 1])


def test_jordan_type(sp4):
    rs = sp4.rs
    u = sp4.root_element(rs.simple_roots[1], 1)
    assert matgrp.jordan_type(sp4, u) == (2, 1, 1)
    u = u * sp4.root_element(rs.simple_roots[0], 1)
    assert matgrp.jordan_type(sp4, u) == (4,)


def test_realize_classes(sp4):
    for d in catalog.spherical_classes('C', 2):
        g = matgrp.realize(sp4, d)
        assert sp4.contains(g)
    sigma = catalog.spherical_classes('C', 2)[0]
    assert matgrp.realize(sp4, sigma) == FqMatrix.diag([4, 1, 4, 1], 5)


def test_realize_type_a():
    G = matgrp.make_group('A', 2, 5)
    d = catalog.spherical_classes('A', 2)[0]
    g = matgrp.realize(G, d)
    assert g.is_diagonal()
    assert g.det() == 1
    assert len(set(g[i, i] for i in range(3))) == 2


def test_needs_larger_prime():
    from spherical_classes.errors import NeedsLargerPrimeError
    G = matgrp.make_group('A', 1, 3)
    d = catalog.spherical_classes('A', 1)[0]
    with pytest.raises(NeedsLargerPrimeError):
        matgrp.realize(G, d)


def test_jordan_decompose(sp4):
    d = [d for d in catalog.spherical_classes('C', 2)
         if d.kind == 'mixed'][0]
    g = matgrp.realize(sp4, d)
    s, u = matgrp.jordan_decompose(sp4, g)
    assert s * u == g
    assert u * s == g
    assert s == matgrp.realize_torus(sp4, d.torus)
    assert matgrp.jordan_type(sp4, u) == (2, 1, 1)


def test_centralizer(sl2):
    minus = FqMatrix.diag([2, 2], 3)
    assert matgrp.centralizer_order(sl2, minus) == 24
    assert matgrp.class_size(sl2, minus) == 1
    u = sl2.root_element((1,), 1)
    assert matgrp.class_size(sl2, u) == 4
    assert len(matgrp.elements(sl2)) == 24


def test_class_orbit(sl2):
    u = sl2.root_element((1,), 1)
    orbit = matgrp.class_orbit(sl2, u, 100)
    assert len(orbit) == 4
    assert matgrp.class_orbit(sl2, u, 2) is None


def test_report():
    G = matgrp.make_group('A', 2, 5)
    rs = G.rs
    r = matgrp.BruhatReport("x", str(G), 5, 10, 4)
    r.record(weyl.simple_reflection(rs, 1), 3)
    assert r.all_involutions
    assert not r.achieved
    r.record(weyl.from_word(rs, [1, 2]), 1)
    assert not r.all_involutions
    assert r.witness['cell'] == [1, 2]
    other = matgrp.BruhatReport("x", str(G), 5, 10, 4)
    other.record(weyl.longest_element(rs), 2)
    merged = matgrp.merge_reports([r, other])
    assert merged.achieved
    assert merged.samples == 6
    assert merged.max_value == 4


@pytest.mark.parametrize("name", [
    pytest.param(name, marks=pytest.mark.dependency(
        name="verify_exhaustive_%s" % name, depends=["round_trip_C2_5"]))
    for name in ("sigma_1", "(2,1,1)")
])
def test_verify_exhaustive(sp4, name):
    d = [d for d in catalog.spherical_classes('C', 2) if d.name == name][0]
    report = matgrp.verify_involution_criterion(sp4, d)
    assert report.mode == 'exhaustive'
    assert report.all_involutions
    assert report.achieved
    assert report.max_value == d.expected_dim


def test_verify_sampled_is_deterministic():
    G = matgrp.make_group('B', 3, 5)
    d = [d for d in catalog.spherical_classes('B', 3)
         if d.name == "(2,2,1,1,1)"][0]
    cfg = Config(environ={})
    one = matgrp.verify_involution_criterion(G, d, budget=300, seed=11,
                                             workers=1, config=cfg)
    two = matgrp.verify_involution_criterion(G, d, budget=300, seed=11,
                                             workers=1, config=cfg)
    assert one.mode == 'sampled'
    assert one.samples == 300
    assert one.cells == two.cells
    assert one.all_involutions


def _diagonal(g):
    return sorted(set(g[i, i] for i in range(g.A.shape[0])))


@pytest.mark.parametrize("family,n", [
    ('A', 3), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 4),
])
def test_witnesses(family, n):
    G = matgrp.make_group(family, n, 5)
    for spec, cell in catalog.nonspherical_witness_specs(family, n):
        g = matgrp.realize(G, spec)
        assert matgrp.bruhat_cell(G, g).is_identity()
        s, u = matgrp.jordan_decompose(G, g)
        if spec.torus is not None:
            assert s == matgrp.realize_torus(G, spec.torus)
        assert matgrp.jordan_type(G, u) == spec.partition
        h = matgrp.find_noninvolution_witness(G, spec, cell, budget=100)
        assert h is not None, spec.label
        x = h * g * h.inverse()
        assert matgrp.bruhat_cell(G, x) == cell
        assert not weyl.is_involution(cell)
        sx, ux = matgrp.jordan_decompose(G, x)
        assert matgrp.jordan_type(G, ux) == spec.partition
        for lam in _diagonal(s):
            scalar = FqMatrix.diag([lam] * G.size, 5)
            assert (sx - scalar).rank() == (s - scalar).rank()


def test_regular_unipotent_meets_coxeter_cell():
    G = matgrp.make_group('A', 2, 5)
    spec, cell = catalog.nonspherical_witness_specs('A', 2)[0]
    assert cell == weyl.coxeter_element(G.rs)
    g = matgrp.realize(G, spec)
    assert matgrp.jordan_type(G, g) == (3,)
    h = matgrp.find_noninvolution_witness(G, spec, cell, budget=0)
    assert matgrp.bruhat_cell(G, h * g * h.inverse()) == cell


def test_spherical_class_has_no_witness(sp4):
    d = [d for d in catalog.spherical_classes('C', 2)
         if d.name == "(2,1,1)"][0]
    cell = weyl.from_word(sp4.rs, [1, 2])
    assert matgrp.find_noninvolution_witness(sp4, d, cell, budget=200) \
        is None


def test_witness_needs_centralizing_unipotent(sp4):
    spec, cell = [x for x in catalog.nonspherical_witness_specs('C', 2)
                  if x[0].kind == 'mixed'][0]
    bad = spec._replace(unipotent=((sp4.rs.simple_roots[0], 1),))
    with pytest.raises(SphericalError):
        matgrp.realize(sp4, bad)


@pytest.mark.slow
def test_verify_mixed_witness_class(sp4):
    spec, cell = [x for x in catalog.nonspherical_witness_specs('C', 2)
                  if x[0].label == "c_c*u"][0]
    report = matgrp.verify_involution_criterion(sp4, spec)
    assert report.mode == 'exhaustive'
    assert not report.all_involutions
    assert cell.word in report.cells


def test_matrix_json(sp4):
    g = sp4.root_element((1, 0), 3)
    text = matgrp.matrix_to_json(g)
    assert matgrp.matrix_from_json(sp4, text) == g
    with pytest.raises(NotInGroupError):
        matgrp.matrix_from_json(sp4, "[[1, 0], [0, 1]]")


@pytest.mark.slow
@pytest.mark.dependency(depends=["verify_exhaustive_sigma_1",
                                 "verify_exhaustive_(2,1,1)"])
def test_verify_all_of_sp4(sp4):
    for d in catalog.spherical_classes('C', 2):
        report = matgrp.verify_involution_criterion(sp4, d)
        assert report.all_involutions, d
        assert report.achieved, d


def test_fq_matrix():
    A = FqMatrix([[1, 2], [3, 4]], 5)
    assert A.det() == 3
    assert (A * A.inverse()).is_identity()
    assert A ** 0 == FqMatrix.identity(2, 5)
    assert numpy.array_equal((A ** -1).A, A.inverse().A)
    assert A.rank() == 2
    assert hash(A) == hash(FqMatrix([[6, 7], [8, 9]], 5))
