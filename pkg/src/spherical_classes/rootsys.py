"""Root systems of the simple types, their subsystems and the
Borel-de Siebenthal subsets of the extended basis.

Roots are integer coefficient vectors over the simple roots, numbered
as in Bourbaki.  The invariant form is kept as an integer Gram matrix
of the simple roots, scaled so that all entries are integers; long
roots are those of maximal squared length.
"""

from collections import namedtuple
import itertools
import json
import logging
import numpy

from .errors import (InvalidTypeError, NotARootError,
                     DependentSubsetError)
from .fq import int_rank

logger = logging.getLogger(__name__)

Families = "ABCDEFG"

BadPrimes = {
    'A': frozenset(),
    'B': frozenset({2}),
    'C': frozenset({2}),
    'D': frozenset({2}),
    'E6': frozenset({2, 3}),
    'E7': frozenset({2, 3}),
    'E8': frozenset({2, 3, 5}),
    'F': frozenset({2, 3}),
    'G': frozenset({2, 3}),
}

Root = namedtuple("Root", ["coeffs", "length_class"])

# Label of the negative highest root in a subset of the extended basis.
LOWEST = 0


def positive_root_count(family, rank):
    """Number of positive roots of a simple type."""
    n = rank
    if family == 'A':
        return n * (n + 1) // 2
    if family in 'BC':
        return n * n
    if family == 'D':
        return n * (n - 1)
    return {('E', 6): 36, ('E', 7): 63, ('E', 8): 120,
            ('F', 4): 24, ('G', 2): 6}[(family, rank)]


def check_type(family, rank):
    """Raise InvalidTypeError unless (family, rank) is a simple type.
    """
    if family not in Families:
        raise InvalidTypeError(family, rank, "unknown family")
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise InvalidTypeError(family, rank, "rank is not an integer")
    minrank = {'A': 1, 'B': 2, 'C': 2, 'D': 4}
    if family in minrank:
        if rank < minrank[family]:
            raise InvalidTypeError(family, rank, "rank must be at least %d"
                                   % minrank[family])
    elif family == 'E':
        if rank not in (6, 7, 8):
            raise InvalidTypeError(family, rank, "rank must be 6, 7 or 8")
    elif family == 'F':
        if rank != 4:
            raise InvalidTypeError(family, rank, "rank must be 4")
    elif family == 'G':
        if rank != 2:
            raise InvalidTypeError(family, rank, "rank must be 2")
    return rank


def _gram(family, n):
    """Integer Gram matrix of the simple roots in Bourbaki numbering.
    """
    G = numpy.zeros((n, n), dtype=numpy.int64)

    def link(i, j, v):
        G[i-1, j-1] = G[j-1, i-1] = v

    if family in 'ADE':
        for i in range(n):
            G[i, i] = 2
        if family == 'A':
            for i in range(1, n):
                link(i, i+1, -1)
        elif family == 'D':
            for i in range(1, n-1):
                link(i, i+1, -1)
            link(n-2, n, -1)
        else:
            for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8),
                         (2, 4)]:
                if i <= n and j <= n:
                    link(i, j, -1)
    elif family == 'B':
        for i in range(n - 1):
            G[i, i] = 2
        G[n-1, n-1] = 1
        for i in range(1, n):
            link(i, i+1, -1)
    elif family == 'C':
        for i in range(n - 1):
            G[i, i] = 2
        G[n-1, n-1] = 4
        for i in range(1, n-1):
            link(i, i+1, -1)
        link(n-1, n, -2)
    elif family == 'F':
        for i, v in enumerate((4, 4, 2, 2)):
            G[i, i] = v
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif family == 'G':
        G[0, 0] = 2
        G[1, 1] = 6
        link(1, 2, -3)
    return G


class RootSystem(object):
    """Immutable root datum of a simple type.

    :param family: one of the letters A to G.
    :type family: :class:`str`
    :param rank: the rank.
    :type rank: :class:`int`

    Attributes are `gram` (integer Gram matrix of the simple roots),
    `cartan` with ``cartan[i, j] = <alpha_i, alpha_j^vee>``,
    `simple_roots`, `positive_roots` (sorted by height, then
    lexicographically), `roots` (positive then negative),
    `highest_root` and `bad_primes`.
    """

    def __init__(self, family, rank):
        rank = check_type(family, rank)
        self.family = family
        self.rank = rank
        self.gram = _gram(family, rank)
        self.gram.setflags(write=False)
        diag = numpy.diag(self.gram)
        self.cartan = (2 * self.gram) // diag[numpy.newaxis, :]
        self.cartan.setflags(write=False)
        self.simple_roots = [tuple(int(x) for x in row)
                             for row in numpy.eye(rank, dtype=numpy.int64)]
        self.roots_set = self._generate()
        pos = [r for r in self.roots_set if all(c >= 0 for c in r)]
        pos.sort(key=lambda r: (sum(r), r))
        self.positive_roots = pos
        self.roots = pos + [tuple(-c for c in r) for r in pos]
        self._index = {r: i for i, r in enumerate(self.roots)}
        self.highest_root = pos[-1]
        key = self.family + str(rank) if family == 'E' else self.family
        self.bad_primes = BadPrimes[key]
        self.max_norm = int(diag.max())
        if len(pos) != positive_root_count(family, rank):
            raise AssertionError("wrong number of roots for %s" % self.name)
        logger.debug("built root system %s with %d positive roots",
                     self.name, len(pos))

    def _generate(self):
        roots = set(self.simple_roots)
        todo = list(self.simple_roots)
        while todo:
            r = todo.pop()
            for j in range(self.rank):
                s = self.reflect_simple(r, j)
                if s not in roots:
                    roots.add(s)
                    todo.append(s)
        return frozenset(roots)

    @property
    def name(self):
        return "%s%d" % (self.family, self.rank)

    def __repr__(self):
        return "RootSystem(%r, %d)" % (self.family, self.rank)

    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    @property
    def num_positive(self):
        return len(self.positive_roots)

    @property
    def dim(self):
        """Dimension of the corresponding simple group."""
        return len(self.roots) + self.rank

    @property
    def dim_borel(self):
        return self.num_positive + self.rank

    def inner(self, u, v):
        """Invariant form (scaled Gram matrix) of two coefficient vectors."""
        return int(numpy.dot(numpy.dot(u, self.gram), v))

    def norm(self, v):
        return self.inner(v, v)

    def pairing(self, u, v):
        """<u, v^vee> = 2(u, v)/(v, v)."""
        return 2 * self.inner(u, v) // self.norm(v)

    def reflect_simple(self, r, j):
        c = sum(r[i] * int(self.cartan[i, j]) for i in range(self.rank))
        r = list(r)
        r[j] -= c
        return tuple(r)

    def reflect(self, v, alpha):
        """s_alpha(v) = v - <v, alpha^vee> alpha."""
        c = self.pairing(v, alpha)
        return tuple(a - c * b for a, b in zip(v, alpha))

    def is_root(self, v):
        return tuple(v) in self._index

    def index(self, v):
        try:
            return self._index[tuple(v)]
        except KeyError:
            raise NotARootError("%s is not a root of %s" % (v, self.name))

    def is_positive(self, v):
        return tuple(v) in self._index and self._index[tuple(v)] < self.num_positive

    def height(self, v):
        return sum(v)

    def length_class(self, v):
        return 'long' if self.norm(v) == self.max_norm else 'short'

    def root(self, coeffs):
        """Return a :class:`Root` for coefficient vector `coeffs`.

        :raise NotARootError: if `coeffs` is not a root.
        """
        coeffs = tuple(int(c) for c in coeffs)
        self.index(coeffs)
        return Root(coeffs, self.length_class(coeffs))

    def extended_basis(self):
        """The simple roots labelled 1..rank and -beta1 labelled 0."""
        l = [(LOWEST, tuple(-c for c in self.highest_root))]
        l += [(i + 1, r) for i, r in enumerate(self.simple_roots)]
        return l

    def vector(self, label):
        """Coefficient vector of an extended basis label."""
        if label == LOWEST:
            return tuple(-c for c in self.highest_root)
        if not 1 <= label <= self.rank:
            raise NotARootError("no simple root alpha_%s in %s"
                                % (label, self.name))
        return self.simple_roots[label - 1]


def build_root_system(family, rank):
    """Construct the root system of type (family, rank).

    :raise InvalidTypeError: for invalid (family, rank) pairs; D2 and
        D3 are rejected rather than aliased.
    """
    return _cache(family, rank)


_systems = {}


def _cache(family, rank):
    key = (family, rank)
    if key not in _systems:
        _systems[key] = RootSystem(family, rank)
    return _systems[key]


def diagram_automorphisms(rs):
    """All permutations of the simple roots preserving the Cartan matrix.

    Each automorphism is returned as a tuple `sigma` of 0-based indices
    with ``sigma[i]`` the image of node i.  The identity comes first.
    """
    n = rs.rank
    C = rs.cartan
    result = []

    def extend(partial):
        k = len(partial)
        if k == n:
            result.append(tuple(partial))
            return
        for img in range(n):
            if img in partial or C[img, img] != C[k, k]:
                continue
            if all(C[partial[i], img] == C[i, k] and
                   C[img, partial[i]] == C[k, i] for i in range(k)):
                extend(partial + [img])

    extend([])
    result.sort()
    return result


class SubsystemSpec(object):
    """A subsystem with basis a subset of the extended basis.

    :param labels: sorted extended basis labels (0 for -beta1).
    :param pi: the basis vectors, in label order.
    :param closure: all roots of the subsystem, sorted.
    :param factors: list of (family, rank) of the simple factors,
        largest rank first.
    :param torus_rank: rank of the central torus.
    """

    def __init__(self, rs, labels, pi, closure, factors, torus_rank):
        self.rs = rs
        self.labels = tuple(labels)
        self.pi = tuple(pi)
        self.closure = tuple(closure)
        self.factors = tuple(factors)
        self.torus_rank = torus_rank

    @property
    def type_name(self):
        l = ["%s%d" % f for f in self.factors]
        if self.torus_rank:
            l.append("T%d" % self.torus_rank)
        return "x".join(l) if l else "T0"

    @property
    def num_roots(self):
        return len(self.closure)

    def label_str(self):
        return ",".join("-b1" if l == LOWEST else str(l) for l in self.labels)

    def __repr__(self):
        return "SubsystemSpec(%s, {%s}, %s)" % (self.rs.name,
                                               self.label_str(),
                                               self.type_name)

    def __eq__(self, other):
        if not isinstance(other, SubsystemSpec):
            return NotImplemented
        return self.rs == other.rs and set(self.pi) == set(other.pi)

    def __hash__(self):
        return hash((self.rs, frozenset(self.pi)))

    def as_dict(self):
        return {
            'labels': list(self.labels),
            'pi': [list(v) for v in self.pi],
            'type': self.type_name,
            'factors': [list(f) for f in self.factors],
            'torus_rank': self.torus_rank,
            'num_roots': self.num_roots,
        }


def _closure(rs, pi):
    roots = set(pi)
    roots.update(tuple(-c for c in v) for v in pi)
    todo = list(roots)
    while todo:
        r = todo.pop()
        for a in pi:
            s = rs.reflect(r, a)
            if s not in roots:
                roots.add(s)
                todo.append(s)
    return roots


def _component_type(rs, comp, ambient):
    k = len(comp)
    roots = _closure(rs, comp)
    npos = len(roots) // 2
    norms = {rs.norm(v) for v in comp}
    if len(norms) == 1:
        for fam in ('A', 'D', 'E'):
            try:
                if positive_root_count(fam, k) == npos:
                    if fam == 'D' and k < 4:
                        continue
                    if fam == 'E' and k not in (6, 7, 8):
                        continue
                    return (fam, k)
            except KeyError:
                continue
        raise AssertionError("unidentified simply laced component")
    if k == 2 and npos == 6:
        return ('G', 2)
    if k == 4 and npos == 24:
        return ('F', 4)
    longest = max(norms)
    nlong = sum(1 for r in roots if rs.norm(r) == longest) // 2
    if k == 2:
        return ('C', 2) if ambient == 'C' else ('B', 2)
    if nlong == k * (k - 1):
        return ('B', k)
    return ('C', k)


def classify_subsystem(rs, pi):
    """Closure and Cartan type of the subsystem with basis `pi`.

    :param rs: the ambient root system.
    :type rs: :class:`RootSystem`
    :param pi: extended basis labels (1..rank for simple roots, 0 for
        -beta1) or coefficient vectors.
    :return: the subsystem.
    :rtype: :class:`SubsystemSpec`
    :raise NotARootError: if an element is neither simple nor -beta1.
    :raise DependentSubsetError: if `pi` is linearly dependent.
    """
    labels = set()
    lowest = tuple(-c for c in rs.highest_root)
    for x in pi:
        if isinstance(x, int):
            rs.vector(x)
            labels.add(x)
        else:
            v = tuple(int(c) for c in x)
            if v == lowest:
                labels.add(LOWEST)
            elif v in rs.simple_roots:
                labels.add(rs.simple_roots.index(v) + 1)
            else:
                raise NotARootError("%s is neither simple nor -beta1" % (v,))
    labels = sorted(labels)
    vectors = [rs.vector(l) for l in labels]
    if vectors and int_rank(numpy.array(vectors)) < len(vectors):
        raise DependentSubsetError("subset {%s} is linearly dependent"
                                   % ",".join(map(str, labels)))
    closure = _closure(rs, vectors) if vectors else set()
    # connected components of the Dynkin graph of pi
    comps = []
    seen = set()
    for v in vectors:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        i = 0
        while i < len(comp):
            for w in vectors:
                if w not in seen and rs.inner(comp[i], w) != 0:
                    seen.add(w)
                    comp.append(w)
            i += 1
        comps.append(comp)
    factors = [_component_type(rs, c, rs.family) for c in comps]
    factors.sort(key=lambda f: (-f[1], f[0]))
    closure = sorted(closure, key=lambda r: rs.index(r))
    spec = SubsystemSpec(rs, labels, vectors, closure, factors,
                         rs.rank - len(vectors))
    logger.debug("classified %r: %d roots", spec, len(closure))
    return spec


def enumerate_semisimple_candidates(rs, dim_bound, maximal=True):
    """Proper subsets of the extended basis whose centralizer dimension
    count is compatible with `dim_bound`.

    Subsets are visited in lexicographic order of their label tuples.
    A subset is kept if ``|Phi| - |Phi(pi)| <= dim_bound`` and
    ``|Phi(pi)| < |Phi|``.  With `maximal` set, a subset whose closure
    lies strictly inside the closure of another kept subset is dropped:
    its semisimple elements have a larger class than those with the
    bigger centralizer and are excluded by the same count together
    with the symmetric subgroup argument.

    :param rs: the root system.
    :param dim_bound: usually ``l(w0) + rk(1 - w0)``.
    :type dim_bound: :class:`int`
    :return: list of :class:`SubsystemSpec`.
    """
    if dim_bound < 0:
        raise ValueError("dim_bound must be nonnegative")
    labels = [l for l, v in rs.extended_basis()]
    total = len(rs.roots)
    found = []
    for k in range(1, len(labels)):
        for sub in itertools.combinations(labels, k):
            spec = classify_subsystem(rs, list(sub))
            n = spec.num_roots
            if n < total and total - n <= dim_bound:
                found.append(spec)
    if maximal:
        closures = [frozenset(s.closure) for s in found]
        found = [s for s, c in zip(found, closures)
                 if not any(c < d for d in closures)]
    found.sort(key=lambda s: s.labels)
    logger.debug("%s: %d candidates below %d", rs.name, len(found), dim_bound)
    return found


def to_json(rs, subsystems=()):
    """Serialize a root system, and optionally subsystems, to JSON."""
    doc = {
        'family': rs.family,
        'rank': rs.rank,
        'roots': [list(r) for r in rs.positive_roots],
        'cartan': rs.cartan.tolist(),
        'beta1': list(rs.highest_root),
        'bad_primes': sorted(rs.bad_primes),
    }
    if subsystems:
        doc['subsystems'] = [s.as_dict() for s in subsystems]
    return json.dumps(doc, sort_keys=True)
