"""Tables of spherical conjugacy classes of simple groups.

Classes are listed up to a central element and, for type D, up to the
diagram automorphism.  Semisimple parts are torus words: products of
``h_i(x)`` for exceptional types and diagonal eigenvalue patterns for
classical types.  Scalars are roots of unity ``(m, k)`` meaning
``zeta_m^k``, or powers ``('c', k)`` of a free parameter.
"""

from collections import namedtuple
from fractions import Fraction
import csv
import io
import itertools
import json
import logging

from .chevalley import (NilpotentSpec, build_algebra, class_dim_nilpotent,
                        class_dim_semisimple, class_dim_unipotent_partition,
                        eps_to_root, _eps_simple)
from .config import Config
from .errors import CertificationError, SphericalError
from .rootsys import build_root_system, check_type, classify_subsystem
from . import weyl

logger = logging.getLogger(__name__)

ONE = (1, 0)
MINUS = (2, 1)


def zeta(m, k=1):
    return (m, k)


def param(k=1):
    return ('c', k)


def _phase(scalar, order):
    """Phase in Q/Z of a scalar, the parameter being zeta_order."""
    base, k = scalar
    if base == 'c':
        if order is None:
            raise SphericalError("parameter needs a specialization")
        return Fraction(k, order) % 1
    return Fraction(k, base) % 1


def _scalar_str(scalar):
    base, k = scalar
    if base == 'c':
        return "c" if k == 1 else "c^%d" % k
    if scalar == ONE:
        return "1"
    if scalar == MINUS:
        return "-1"
    if base == 4 and k == 3:
        return "-zeta4"
    return "zeta%d" % base if k == 1 else "zeta%d^%d" % (base, k)


class TorusWord(object):
    """A semisimple element of the maximal torus.

    :param kind: ``'h'`` for a product of h_i(x), entries being
        (1-based i, scalar) pairs; ``'diag'`` for the torus
        coordinates of a classical matrix group.
    :param constraints: exponents k with c^k != 1 required of the
        parameter.
    """

    def __init__(self, family, rank, kind, entries, constraints=(),
                 name=None):
        if kind not in ('h', 'diag'):
            raise ValueError("invalid torus word kind %r" % kind)
        self.family = family
        self.rank = rank
        self.kind = kind
        self.entries = tuple(entries)
        self.constraints = tuple(constraints)
        self.name = name

    @property
    def has_parameter(self):
        scalars = (e[1] for e in self.entries) if self.kind == 'h' \
            else self.entries
        return any(s[0] == 'c' for s in scalars)

    def __str__(self):
        if self.kind == 'h':
            return "".join("h%d(%s)" % (i, _scalar_str(s))
                           for i, s in self.entries)
        return "t(%s)" % ",".join(_scalar_str(s) for s in self.entries)

    def __repr__(self):
        return "TorusWord(%s)" % self

    def admissible(self, order):
        """Whether c = zeta_order satisfies the parameter constraints."""
        if not self.has_parameter:
            return True
        return all(Fraction(k, order) % 1 != 0 for k in self.constraints)

    def simple_phases(self, rs, order=None):
        """Phases of alpha_j(t) for the simple roots."""
        if self.kind == 'h':
            q = [Fraction(0)] * rs.rank
            for i, s in self.entries:
                q[i - 1] += _phase(s, order)
            return [sum(q[i] * int(rs.cartan[j, i]) for i in range(rs.rank))
                    % 1 for j in range(rs.rank)]
        S = _eps_simple(rs.family, rs.rank)
        t = [_phase(s, order) for s in self.entries]
        return [sum(int(S[i, j]) * t[i] for i in range(len(t))) % 1
                for j in range(rs.rank)]

    def root_phase(self, rs, root, order=None):
        """Phase of alpha(t) for a root in simple-root coefficients."""
        ph = self.simple_phases(rs, order)
        return sum(c * p for c, p in zip(root, ph)) % 1

    def _full_diagonal(self, order):
        t = [_phase(s, order) for s in self.entries]
        if self.family == 'A':
            return t
        full = t + [-x % 1 for x in t]
        if self.family == 'B':
            full.insert(0, Fraction(0))
        return full

    def is_central(self, rs, order=None, power=1):
        if self.kind == 'h':
            return all(power * p % 1 == 0
                       for p in self.simple_phases(rs, order))
        full = self._full_diagonal(order)
        return len(set(power * x % 1 for x in full)) == 1

    def square_is_central(self, rs, order=None):
        return self.is_central(rs, order, power=2)

    def as_dict(self):
        return {'kind': self.kind, 'word': str(self),
                'constraints': ["c^%d != 1" % k for k in self.constraints]}


class ClassDescriptor(object):
    """One conjugacy class of a classification table.

    :param kind: ``'semisimple'``, ``'unipotent'`` or ``'mixed'``.
    :param torus: :class:`TorusWord` of the semisimple part.
    :param unipotent: :class:`NilpotentSpec` of the unipotent part.
    :param centralizer: description of the centralizer of the
        semisimple part.
    """

    def __init__(self, family, rank, kind, name, expected_dim, torus=None,
                 unipotent=None, centralizer=None, anchor=None, notes=()):
        self.family = family
        self.rank = rank
        self.kind = kind
        self.name = name
        self.expected_dim = expected_dim
        self.torus = torus
        self.unipotent = unipotent
        self.centralizer = centralizer
        self.anchor = anchor or "classification:%s" % family
        self.notes = list(notes)

    @property
    def rs(self):
        return build_root_system(self.family, self.rank)

    @property
    def type_name(self):
        return self.rs.name

    @property
    def is_symmetric(self):
        return is_symmetric_flag(self)

    @property
    def partition(self):
        return self.unipotent.partition if self.unipotent else None

    def __repr__(self):
        return "ClassDescriptor(%s, %s, %s, dim=%d)" % (
            self.type_name, self.kind, self.name, self.expected_dim)

    def __str__(self):
        return "%s %s" % (self.type_name, self.name)

    def representative(self):
        l = []
        if self.torus is not None:
            l.append(str(self.torus))
        if self.unipotent is not None:
            l.append("u%s" % self.unipotent.label)
        return "*".join(l)


def _good_prime(rs):
    return next(p for p in Config.GoodPrimes if p not in rs.bad_primes)


def _unipotent_partition(rs, parts, notes=()):
    spec = NilpotentSpec.from_partition(rs, parts)
    dim = class_dim_unipotent_partition(rs.family, rs.rank, parts)
    return ClassDescriptor(rs.family, rs.rank, 'unipotent', spec.label, dim,
                           unipotent=spec, notes=notes)


def _unipotent_roots(rs, labels, name=None):
    roots = [rs.simple_roots[i - 1] for i in labels]
    spec = NilpotentSpec.from_orthogonal_roots(rs, roots, name)
    dim = class_dim_nilpotent(build_algebra(rs), spec, _good_prime(rs))
    return ClassDescriptor(rs.family, rs.rank, 'unipotent', spec.label, dim,
                           unipotent=spec)


def _semisimple_h(rs, name, entries, labels, constraints=(), notes=()):
    torus = TorusWord(rs.family, rs.rank, 'h', entries, constraints, name)
    sub = classify_subsystem(rs, labels)
    return ClassDescriptor(rs.family, rs.rank, 'semisimple', name,
                           class_dim_semisimple(rs, sub), torus=torus,
                           centralizer=sub.type_name, notes=notes)


def _semisimple_diag(rs, name, entries, dim, centralizer, constraints=()):
    torus = TorusWord(rs.family, rs.rank, 'diag', entries, constraints, name)
    return ClassDescriptor(rs.family, rs.rank, 'semisimple', name, dim,
                           torus=torus, centralizer=centralizer)


def _very_even_note(parts):
    return ["very even: stored once for the two classes exchanged by the "
            "diagram automorphism"] if all(x % 2 == 0 for x in parts) else []


M0_NOTE = ("shape with m = 0; the classification statement starts at m = 1 "
           "but the arguments treat this case and isogeny forces it")


def _pow2(m, rest):
    return (2,) * m + (1,) * rest


def _classes_A(rs):
    n = rs.rank
    l = []
    for k in range(1, (n + 1) // 2 + 1):
        l.append(_semisimple_diag(
            rs, "diag(c*I%d,I%d)" % (k, n + 1 - k),
            [param()] * k + [ONE] * (n + 1 - k), 2 * k * (n + 1 - k),
            "A%dxA%dxT1" % (k - 1, n - k), constraints=(1,)))
    for m in range(1, (n + 1) // 2 + 1):
        l.append(_unipotent_partition(rs, _pow2(m, n + 1 - 2 * m)))
    if n == 1:
        for d in l:
            d.notes.append("every class of SL2 is spherical")
    return l


def _classes_C(rs):
    n = rs.rank
    l = []
    for k in range(1, n // 2 + 1):
        l.append(_semisimple_diag(
            rs, "sigma_%d" % k, [MINUS] * k + [ONE] * (n - k),
            4 * k * (n - k), "C%dxC%d" % (k, n - k)))
    l.append(_semisimple_diag(rs, "a_c", [param()] * n, n * n + n,
                              "A%dxT1" % (n - 1), constraints=(2,)))
    l.append(_semisimple_diag(rs, "c_c", [param()] + [ONE] * (n - 1),
                              4 * n - 2, "C%dxT1" % (n - 1),
                              constraints=(2,)))
    for m in range(1, n + 1):
        l.append(_unipotent_partition(rs, _pow2(m, 2 * n - 2 * m)))
    u = NilpotentSpec.from_partition(rs, _pow2(1, 2 * n - 2))
    for k in range(1, n):
        torus = TorusWord(rs.family, n, 'diag', [MINUS] * k + [ONE] * (n - k),
                          name="sigma_%d" % k)
        l.append(ClassDescriptor(
            rs.family, n, 'mixed', "sigma_%d*u" % k,
            4 * k * (n - k) + 2 * (n - k),
            torus=torus, unipotent=u, centralizer="C%dxC%d" % (k, n - k),
            notes=["u of type (2,1^%d) in the Sp%d factor"
                   % (2 * n - 2, 2 * n - 2 * k)]))
    return l


def _classes_D(rs):
    n = rs.rank
    l = []
    for k in range(1, n // 2 + 1):
        l.append(_semisimple_diag(
            rs, "sigma_%d" % k, [MINUS] * k + [ONE] * (n - k),
            4 * k * (n - k), "SO%dxSO%d" % (2 * k, 2 * n - 2 * k)))
    l.append(_semisimple_diag(rs, "a_c", [param()] * n, n * n - n,
                              "A%dxT1" % (n - 1), constraints=(2,)))
    l.append(_semisimple_diag(rs, "c_c", [param()] + [ONE] * (n - 1),
                              4 * n - 4, "D%dxT1" % (n - 1),
                              constraints=(2,)))
    for m in range(1, n // 2 + 1):
        parts = _pow2(2 * m, 2 * n - 4 * m)
        l.append(_unipotent_partition(rs, parts, _very_even_note(parts)))
    for m in range(0, n // 2):
        parts = (3,) + _pow2(2 * m, 2 * n - 3 - 4 * m)
        l.append(_unipotent_partition(rs, parts, [M0_NOTE] if m == 0 else []))
    return l


def _classes_B(rs):
    n = rs.rank
    l = []
    for k in range(1, n + 1):
        l.append(_semisimple_diag(
            rs, "rho_%d" % k, [MINUS] * k + [ONE] * (n - k),
            2 * k * (2 * n - 2 * k + 1),
            "SO%dxSO%d" % (2 * k, 2 * n - 2 * k + 1)))
    l.append(_semisimple_diag(rs, "d_c", [param()] + [ONE] * (n - 1),
                              4 * n - 2, "B%dxT1" % (n - 1),
                              constraints=(2,)))
    l.append(_semisimple_diag(rs, "b_c", [param()] * n, n * n + n,
                              "A%dxT1" % (n - 1), constraints=(2,)))
    for m in range(1, n // 2 + 1):
        l.append(_unipotent_partition(rs, _pow2(2 * m, 2 * n + 1 - 4 * m)))
    for m in range(0, (n - 1) // 2 + 1):
        parts = (3,) + _pow2(2 * m, 2 * n - 2 - 4 * m)
        l.append(_unipotent_partition(rs, parts, [M0_NOTE] if m == 0 else []))
    rho = TorusWord(rs.family, n, 'diag', [MINUS] * n, name="rho_%d" % n)
    for m in range(1, n // 2 + 1):
        u = NilpotentSpec.from_partition(rs, _pow2(2 * m, 2 * n + 1 - 4 * m))
        dim = 2 * n + class_dim_unipotent_partition(
            'D', n, _pow2(2 * m, 2 * n - 4 * m))
        l.append(ClassDescriptor(
            rs.family, n, 'mixed', "rho_%d*u" % n, dim, torus=rho,
            unipotent=u, centralizer="SO%d" % (2 * n),
            notes=["u of type (2^%d,1^%d) in SO%d"
                   % (2 * m, 2 * n - 4 * m, 2 * n)]))
    return l


def _classes_G(rs):
    return [
        _semisimple_h(rs, "h1(-1)", [(1, MINUS)], (0, 1)),
        _semisimple_h(rs, "h1(zeta3)", [(1, zeta(3))], (0, 2)),
        _unipotent_roots(rs, (2,), "A1"),
        _unipotent_roots(rs, (1,), "A1~"),
    ]


def _classes_F(rs):
    l = [
        _semisimple_h(rs, "f1", [(2, MINUS), (4, MINUS)], (0, 2, 3, 4)),
        _semisimple_h(rs, "f2", [(3, MINUS)], (0, 1, 2, 3)),
        _unipotent_roots(rs, (1,), "A1"),
        _unipotent_roots(rs, (4,), "A1~"),
        _unipotent_roots(rs, (1, 3), "A1+A1~"),
    ]
    f2 = l[1]
    u = NilpotentSpec("A1", [rs.highest_root])
    # x_{beta1} is a long root element of the B4 centralizer
    dim = f2.expected_dim + class_dim_unipotent_partition(
        'B', 4, _pow2(2, 5))
    l.append(ClassDescriptor(
        rs.family, rs.rank, 'mixed', "f2*x_b1(1)", dim, torus=f2.torus,
        unipotent=u, centralizer=f2.centralizer,
        notes=["the class meets the big cell: dim equals dim B"]))
    return l


def _exponent_word(exponents):
    return [(i + 1, param(k)) for i, k in enumerate(exponents)]


def _classes_E6(rs):
    return [
        _semisimple_h(rs, "p1", [(1, MINUS), (4, MINUS), (6, MINUS)],
                      (0, 1, 3, 4, 5, 6)),
        _semisimple_h(rs, "p2_c", _exponent_word((2, 3, 4, 6, 5, 4)),
                      (1, 2, 3, 4, 5), constraints=(3,),
                      notes=["distinct parameters give distinct classes"]),
        _unipotent_roots(rs, (1,)),
        _unipotent_roots(rs, (1, 6)),
        _unipotent_roots(rs, (1, 4, 6)),
    ]


def _three_a1_classes(rs):
    """Representatives of the two classes of type 3A1 in E7, the one of
    larger dimension first."""
    alg = build_algebra(rs)
    p = _good_prime(rs)
    found = {}
    for labels in itertools.combinations(range(1, 8), 3):
        roots = [rs.simple_roots[i - 1] for i in labels]
        if any(rs.inner(a, b) for a, b in itertools.combinations(roots, 2)):
            continue
        spec = NilpotentSpec.from_orthogonal_roots(rs, roots)
        found.setdefault(class_dim_nilpotent(alg, spec, p), labels)
        if len(found) == 2:
            break
    if len(found) != 2:
        raise SphericalError("could not separate the 3A1 classes of E7")
    hi, lo = sorted(found, reverse=True)
    return found[hi], found[lo]


def _classes_E7(rs):
    prime, second = _three_a1_classes(rs)
    central = "z*%s is spherical for every central z"
    return [
        _semisimple_h(rs, "q1", [(2, zeta(4)), (5, zeta(4, 3)), (6, MINUS),
                                 (7, zeta(4))], (0, 1, 3, 4, 5, 6, 7),
                      notes=[central % "q1"]),
        _semisimple_h(rs, "q2", [(3, MINUS), (5, MINUS), (7, MINUS)],
                      (0, 2, 3, 4, 5, 6, 7), notes=[central % "q2"]),
        _semisimple_h(rs, "q3_a", _exponent_word((2, 3, 4, 6, 5, 4, 3)),
                      (1, 2, 3, 4, 5, 6), constraints=(2,),
                      notes=["distinct parameters give distinct classes"]),
        _unipotent_roots(rs, (1,)),
        _unipotent_roots(rs, (1, 6)),
        _unipotent_roots(rs, prime, "(3A1)'"),
        _unipotent_roots(rs, second, "(3A1)''"),
        _unipotent_roots(rs, (2, 3, 5, 7)),
    ]


def _classes_E8(rs):
    return [
        _semisimple_h(rs, "r1", [(2, MINUS), (3, MINUS)],
                      (0, 2, 3, 4, 5, 6, 7, 8)),
        _semisimple_h(rs, "r2", [(2, MINUS), (5, MINUS), (7, MINUS)],
                      (0, 1, 2, 3, 4, 5, 6, 7)),
        _unipotent_roots(rs, (1,)),
        _unipotent_roots(rs, (1, 6)),
        _unipotent_roots(rs, (1, 4, 6)),
        _unipotent_roots(rs, (2, 3, 5, 7)),
    ]


_builders = {
    'A': _classes_A, 'B': _classes_B, 'C': _classes_C, 'D': _classes_D,
    'E6': _classes_E6, 'E7': _classes_E7, 'E8': _classes_E8,
    'F': _classes_F, 'G': _classes_G,
}

_kind_order = {'semisimple': 0, 'unipotent': 1, 'mixed': 2}

_catalog = {}


def dimension_bound(rs):
    """l(w0) + rk(1 - w0)."""
    w0 = weyl.longest_element(rs)
    return w0.length + weyl.rank_defect(w0)


def check_descriptor(d):
    """Validate the structural invariants of a descriptor.

    :raise SphericalError: if one fails.
    """
    rs = d.rs
    if d.expected_dim % 2:
        raise SphericalError("%r: odd dimension" % d)
    if d.expected_dim > dimension_bound(rs):
        raise SphericalError("%r: dimension exceeds l(w0) + rk(1 - w0)" % d)
    if d.kind == 'mixed':
        if d.torus is None or d.unipotent is None:
            raise SphericalError("%r: mixed class needs both parts" % d)
        for r in d.unipotent.roots:
            if d.torus.root_phase(rs, r) != 0:
                raise SphericalError("%r: unipotent part outside the "
                                     "centralizer" % d)


def spherical_classes(family, rank):
    """The spherical classes of the simple group of type (family, rank),
    semisimple first, then unipotent, then mixed.

    :raise InvalidTypeError: for an invalid type.
    """
    rank = check_type(family, rank)
    key = (family, rank)
    if key not in _catalog:
        rs = build_root_system(family, rank)
        bkey = family + str(rank) if family == 'E' else family
        l = _builders[bkey](rs)
        for d in l:
            check_descriptor(d)
        l.sort(key=lambda d: _kind_order[d.kind])
        logger.debug("catalog of %s: %d classes", rs.name, len(l))
        _catalog[key] = l
    return list(_catalog[key])


def spherical_unipotent_partitions(family, n):
    """Partitions of the spherical unipotent classes of a classical
    group, in catalog order."""
    if family not in 'ABCD':
        raise ValueError("partitions are defined for classical families")
    return [d.partition for d in spherical_classes(family, n)
            if d.kind == 'unipotent']


def certify_dimension_identity(d, workers=1):
    """An involution w of W with l(w) + rk(1 - w) equal to the dimension
    of the class.

    :raise CertificationError: if there is none.
    """
    rs = d.rs
    found = weyl.involutions_with_value(rs, d.expected_dim, first=True,
                                        workers=workers)
    if not found:
        raise CertificationError(d)
    w = found[0]
    logger.info("%s: certified by %s (l=%d, rk=%d)", d, w.word, w.length,
                weyl.rank_defect(w))
    return w


def is_symmetric_flag(d, max_order=12):
    """Whether the semisimple part squares to a central element, after
    specializing the parameter to an admissible root of unity if the
    word has one."""
    t = d.torus
    if t is None:
        return False
    rs = d.rs
    if not t.has_parameter:
        return t.square_is_central(rs)
    for order in range(2, max_order + 1):
        if t.admissible(order) and t.square_is_central(rs, order):
            return True
    return False


WitnessSpec = namedtuple("WitnessSpec",
                         ["family", "rank", "kind", "label", "cell",
                          "description", "torus", "unipotent", "partition",
                          "guide", "search"])
WitnessSpec.__doc__ = """A class excluded from the tables.

`torus` and `unipotent` give an element s u of B: `unipotent` is a
tuple of (positive root, coefficient) pairs with alpha(s) = 1, the
coefficients being rationals read mod p.  Conjugation by the Weyl
representative of `guide` followed by products of x_r(m) for the
roots r of `search` moves s u into the cell of the product of the
reflections in `cell`.  Exceptional specs only carry the cell.
"""


def _witness_element(rs, roots):
    w = weyl.WeylElement.identity(rs)
    for r in roots:
        w = w * weyl.reflection(rs, r)
    return w


def _neg(root):
    return tuple(-c for c in root)


def nonspherical_witness_specs(family, rank):
    """Classes excluded from the tables together with a Bruhat cell they
    meet whose Weyl group element is not an involution.

    :return: list of (:class:`WitnessSpec`, :class:`WeylElement`).
    """
    rank = check_type(family, rank)
    rs = build_root_system(family, rank)
    n = rank
    a = rs.simple_roots
    dim = n + 1 if family == 'A' else n
    specs = []

    def eps(plus=(), minus=(), scale=1):
        v = [0] * dim
        for i in plus:
            v[i - 1] += scale
        for i in minus:
            v[i - 1] -= scale
        return eps_to_root(rs, v)

    def add(kind, label, roots, description, torus=None, unipotent=(),
            partition=None, guide=None, search=()):
        if torus is not None and not isinstance(torus, TorusWord):
            torus = TorusWord(family, n, 'diag', *torus)
        specs.append(WitnessSpec(family, n, kind, label, tuple(roots),
                                 description, torus, tuple(unipotent),
                                 partition, guide, tuple(search)))

    w0 = weyl.longest_element(rs) if family in 'ABCD' else None

    def opposite(roots):
        return [(_neg(w0.apply(r)), 1) for r in roots]

    if family == 'A' and n >= 2:
        add('unipotent', "(3,1^%d)" % (n - 2), [a[0], a[1]],
            "x_a(n) x_a(n-1) conjugated by w0",
            unipotent=opposite([a[0], a[1]]),
            partition=(3,) + (1,) * (n - 2), guide=w0)
        add('mixed', "s*u", [a[0], a[1]],
            "s = diag(c I_2, d I_%d), u = x_a1(1); cell s_{m-1} s_m, m = 2"
            % (n - 1),
            ([param()] * 2 + [ONE] * (n - 1), (1,)),
            unipotent=[(a[0], 1)], partition=(2,) + (1,) * (n - 1),
            guide=weyl.reflection(rs, a[0]),
            search=[_neg(a[1]), _neg(eps([1], [3]))])
    elif family == 'C':
        beta2 = eps([2], scale=2)
        add('unipotent', "(4,1^%d)" % (2 * n - 4), [a[n - 2], a[n - 1]],
            "regular in an Sp4 block",
            unipotent=[(a[n - 2], 1), (a[n - 1], 1)],
            partition=(4,) + (1,) * (2 * n - 4), guide=w0)
        add('mixed', "c_c*u", [a[0], beta2], "u = x_2e2(1) centralizes s",
            ([param()] + [ONE] * (n - 1), (2,)),
            unipotent=[(beta2, 1)], partition=(2,) + (1,) * (2 * n - 2),
            guide=weyl.reflection(rs, beta2),
            search=[_neg(a[0]), _neg(eps([1, 2])), _neg(eps([1], scale=2))])
        if n >= 3:
            add('mixed', "sigma_1*u (2,2)", [a[0], a[1]],
                "u = x_a2(1) with a (2,2) component",
                ([MINUS] + [ONE] * (n - 1), ()),
                unipotent=[(a[1], 1)],
                partition=(2, 2) + (1,) * (2 * n - 4),
                guide=weyl.reflection(rs, a[1]),
                search=[_neg(a[0]), _neg(eps([1], [3]))])
    elif family == 'D':
        add('unipotent', "(5,1^%d)" % (2 * n - 5), [a[n - 3], a[n - 2],
                                                    a[n - 1]],
            "regular in an SO6 block",
            unipotent=opposite([a[n - 3], a[n - 2], a[n - 1]]),
            partition=(5,) + (1,) * (2 * n - 5), guide=w0)
        gamma = eps([2, 3])
        for sname, torus in (("sigma_1", ([MINUS] + [ONE] * (n - 1), ())),
                             ("c_c", ([param()] + [ONE] * (n - 1), (2,)))):
            add('mixed', "%s*u (2,2)" % sname, [a[0], a[1]],
                "u = x_a2(1) with a (2,2) component", torus,
                unipotent=[(a[1], 1)],
                partition=(2, 2) + (1,) * (2 * n - 4),
                guide=weyl.reflection(rs, a[1]),
                search=[_neg(a[0]), _neg(eps([1], [3]))])
            add('mixed', "%s*u (3,1)" % sname, [a[0], a[1], gamma],
                "u = x_a2(1) x_e2+e3(1) with a (3,1) component", torus,
                unipotent=[(a[1], 1), (gamma, 1)],
                partition=(3,) + (1,) * (2 * n - 3),
                guide=weyl.reflection(rs, a[1]) * weyl.reflection(rs, gamma),
                search=[_neg(a[0]), _neg(eps([1], [3])), _neg(eps([1, 3])),
                        _neg(eps([1, 2]))])
    elif family == 'B':
        add('unipotent', "(5,1^%d)" % (2 * n - 4), [a[n - 2], a[n - 1]],
            "regular in an SO5 block",
            unipotent=[(a[n - 2], 1), (a[n - 1], 1)],
            partition=(5,) + (1,) * (2 * n - 4), guide=w0)
        add('mixed', "rho_n*v (3,1)", [a[0], eps([2])],
            "u = x_a1(1) x_e1+e2(-1/2) in the centralizer of t(-1,..,-1)",
            ([MINUS] * n, ()),
            unipotent=[(a[0], 1), (eps([1, 2]), Fraction(-1, 2))],
            partition=(3,) + (1,) * (2 * n - 2), guide=w0,
            search=[_neg(eps([1])), _neg(eps([2]))])
    elif family == 'G':
        add('unipotent', "G2(a1)", [a[0], a[1]], "x_-a1(1) x_-a2(1)")
    elif family == 'F':
        add('unipotent', "A2", [a[0], a[1]], "x_-a1(1) x_-a2(1)")
    elif family == 'E':
        add('unipotent', "A2", [a[0], a[2]], "x_-a1(1) x_-a3(1)")
        if n == 7:
            add('mixed', "q2*u", [a[5], a[6]],
                "u = x_-a7(1); conjugation by x_-a6(1), then x_-a6-a7(m)",
                TorusWord(family, n, 'h', [(3, MINUS), (5, MINUS),
                                           (7, MINUS)], name="q2"))
        elif n == 8:
            add('mixed', "r2*u", [a[6], a[7]],
                "u = x_-b1(1) for the highest root b1; conjugation by "
                "s_g for g = b1 - a8, then x_-a7(1)",
                TorusWord(family, n, 'h', [(2, MINUS), (5, MINUS),
                                           (7, MINUS)], name="r2"))
    return [(s, _witness_element(rs, s.cell)) for s in specs]


def all_types(max_rank=4):
    """The types covered by a default run: classical ones up to
    `max_rank` and all exceptional ones."""
    l = [('A', r) for r in range(1, max_rank + 1)]
    l += [('B', r) for r in range(2, max_rank + 1)]
    l += [('C', r) for r in range(2, max_rank + 1)]
    l += [('D', r) for r in range(4, max_rank + 1)]
    l += [('E', 6), ('E', 7), ('E', 8), ('F', 4), ('G', 2)]
    return l


def open_question_notes():
    return [
        "B and D: the (3,2^2m,1^...) family is listed from m = 0.",
        "certify_dimension_identity returns some involution reaching the "
        "dimension, not necessarily the maximal cell of the class.",
        "Finite field sampling is a proxy for B-orbits over the closure.",
    ]


COLUMNS = ["type", "kind", "name", "representative", "label", "dim",
            "symmetric", "centralizer", "anchor", "notes"]


def to_rows(descriptors):
    rows = []
    for d in descriptors:
        rows.append({
            'type': d.type_name,
            'kind': d.kind,
            'name': d.name,
            'representative': d.representative(),
            'label': d.unipotent.label if d.unipotent else "",
            'dim': d.expected_dim,
            'symmetric': d.is_symmetric,
            'centralizer': d.centralizer or "",
            'anchor': d.anchor,
            'notes': "; ".join(d.notes),
        })
    return rows


def to_json(descriptors):
    return json.dumps(to_rows(descriptors), indent=2)


def to_tsv(descriptors):
    out = io.StringIO()
    writer = csv.DictWriter(out, COLUMNS, delimiter='\t',
                            lineterminator='\n')
    writer.writeheader()
    for row in to_rows(descriptors):
        writer.writerow(row)
    return out.getvalue()
