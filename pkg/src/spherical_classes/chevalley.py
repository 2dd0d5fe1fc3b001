"""Chevalley basis Lie algebras and centralizer dimensions of nilpotent
elements.

Structure constants are fixed by requiring N_{alpha,beta} = +(p+1) on
every extraspecial pair, positive roots being ordered by height and
then lexicographically.  All remaining constants follow from the
usual identities with N_{-alpha,-beta} = -N_{alpha,beta}.
"""

from fractions import Fraction
import logging
import numpy

from .errors import BadPrimeError, PartitionError, SphericalError
from .fq import is_prime, rank_mod_p

logger = logging.getLogger(__name__)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _neg(u):
    return tuple(-a for a in u)


def check_prime(rs, p):
    """Raise BadPrimeError unless p is an odd prime good for rs."""
    if p == 2 or not is_prime(p) or p in rs.bad_primes:
        raise BadPrimeError(p, set(rs.bad_primes) | {2})


class ChevalleyAlgebra(object):
    """The Lie algebra of type `rs` in a Chevalley basis.

    The basis is ``e_alpha`` for the roots in the order of
    ``rs.roots``, followed by ``h_1, ..., h_n``.
    """

    def __init__(self, rs):
        self.rs = rs
        self.nroots = len(rs.roots)
        self.dim = self.nroots + rs.rank
        self._order = {r: i for i, r in enumerate(rs.positive_roots)}
        self._extraspecial = {}
        for xi in rs.positive_roots:
            if sum(xi) == 1:
                continue
            for a in rs.positive_roots:
                b = tuple(x - y for x, y in zip(xi, a))
                if b in self._order:
                    self._extraspecial[xi] = (a, b)
                    break
        self._special = {}
        self._N = {}
        self._table = {}
        logger.debug("Chevalley algebra %s of dimension %d",
                     rs.name, self.dim)

    def __repr__(self):
        return "ChevalleyAlgebra(%s)" % self.rs.name

    def _p(self, a, b):
        """Largest p with b - p a a root."""
        p = 0
        v = b
        while True:
            v = tuple(x - y for x, y in zip(v, a))
            if not self.rs.is_root(v):
                return p
            p += 1

    def _special_pair(self, a, b):
        key = (a, b)
        if key in self._special:
            return self._special[key]
        rs = self.rs
        xi = _add(a, b)
        a1, b1 = self._extraspecial[xi]
        if (a, b) == (a1, b1):
            val = Fraction(self._p(a1, b1) + 1)
        else:
            s = Fraction(0)
            d = tuple(x - y for x, y in zip(b, a1))
            if rs.is_root(d):
                s += (self.N(b, _neg(a1)) * self.N(a, _neg(b1))
                      / rs.norm(d))
            d = tuple(x - y for x, y in zip(a, a1))
            if rs.is_root(d):
                s += (self.N(_neg(a1), a) * self.N(b, _neg(b1))
                      / rs.norm(d))
            val = -Fraction(rs.norm(xi)) / self.N(_neg(a1), _neg(b1)) * s
        self._special[key] = val
        return val

    def N(self, a, b):
        """Structure constant N_{a,b}; zero unless a + b is a root."""
        a = tuple(a)
        b = tuple(b)
        key = (a, b)
        if key in self._N:
            return self._N[key]
        rs = self.rs
        c = _add(a, b)
        if not rs.is_root(c):
            val = Fraction(0)
        else:
            pa, pb = rs.is_positive(a), rs.is_positive(b)
            if pa and pb:
                if self._order[a] < self._order[b]:
                    val = self._special_pair(a, b)
                else:
                    val = -self._special_pair(b, a)
            elif not pa and not pb:
                val = -self.N(_neg(a), _neg(b))
            else:
                c = _neg(c)
                # a + b + c = 0: N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)
                if rs.is_positive(c) == pa:
                    val = Fraction(rs.norm(c), rs.norm(b)) * self.N(c, a)
                else:
                    val = Fraction(rs.norm(c), rs.norm(a)) * self.N(b, c)
        if val.denominator != 1:
            raise AssertionError("non integral N%s" % (key,))
        self._N[key] = val
        return val

    def coroot(self, a):
        """h_a in the basis h_1, ..., h_n."""
        rs = self.rs
        na = rs.norm(a)
        return [a[i] * rs.norm(rs.simple_roots[i]) // na
                for i in range(rs.rank)]

    def root_index(self, root):
        return self.rs.index(root)

    def h_index(self, i):
        """Basis index of h_i for 1-based i."""
        return self.nroots + i - 1

    def bracket_basis(self, i, j):
        """[b_i, b_j] as a dict mapping basis index to coefficient."""
        key = (i, j)
        if key in self._table:
            return self._table[key]
        rs = self.rs
        n = self.nroots
        res = {}
        if i < n and j < n:
            a, b = rs.roots[i], rs.roots[j]
            c = _add(a, b)
            if not any(c):
                for k, v in enumerate(self.coroot(a)):
                    if v:
                        res[n + k] = v
            elif rs.is_root(c):
                res[rs.index(c)] = int(self.N(a, b))
        elif i >= n and j < n:
            v = rs.pairing(rs.roots[j], rs.simple_roots[i - n])
            if v:
                res[j] = v
        elif i < n and j >= n:
            v = rs.pairing(rs.roots[i], rs.simple_roots[j - n])
            if v:
                res[i] = -v
        self._table[key] = res
        return res

    def basis_vector(self, i):
        v = numpy.zeros(self.dim, dtype=numpy.int64)
        v[i] = 1
        return v

    def root_vector(self, root):
        return self.basis_vector(self.rs.index(root))

    def ad_matrix(self, x):
        """Matrix of ad(x) in the Chevalley basis."""
        A = numpy.zeros((self.dim, self.dim), dtype=numpy.int64)
        for k in numpy.nonzero(x)[0]:
            c = int(x[k])
            for j in range(self.dim):
                for t, v in self.bracket_basis(int(k), j).items():
                    A[t, j] += c * v
        return A

    def bracket(self, x, y):
        z = numpy.zeros(self.dim, dtype=numpy.int64)
        for i in numpy.nonzero(x)[0]:
            for j in numpy.nonzero(y)[0]:
                c = int(x[i]) * int(y[j])
                for t, v in self.bracket_basis(int(i), int(j)).items():
                    z[t] += c * v
        return z

    def _bracket_dict(self, x, j):
        res = {}
        for i, c in x.items():
            for t, v in self.bracket_basis(i, j).items():
                res[t] = res.get(t, 0) + c * v
        return res

    def jacobi_defect(self, triples=None):
        """Number of basis triples violating the Jacobi identity.

        :param triples: iterable of basis index triples; all triples
            when omitted.
        """
        if triples is None:
            r = range(self.dim)
            triples = ((i, j, k) for i in r for j in r for k in r if i < j < k)
        bad = 0

        def outer(i, inner):
            res = {}
            for t, c in inner.items():
                for u, v in self.bracket_basis(i, t).items():
                    res[u] = res.get(u, 0) + c * v
            return res

        for i, j, k in triples:
            total = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for u, v in outer(a, self.bracket_basis(b, c)).items():
                    total[u] = total.get(u, 0) + v
            if any(total.values()):
                bad += 1
        return bad


_algebras = {}


def build_algebra(rs):
    """The Chevalley algebra of rs, cached per type."""
    if rs not in _algebras:
        _algebras[rs] = ChevalleyAlgebra(rs)
    return _algebras[rs]


# Partitions

def transpose(partition):
    parts = sorted(partition, reverse=True)
    if not parts:
        return []
    return [sum(1 for x in parts if x > i) for i in range(parts[0])]


def check_partition(family, n, partition):
    """Validate a partition for the natural module of the classical
    group of type (family, n).

    :raise PartitionError: if size or parity rules are violated.
    """
    parts = sorted((int(x) for x in partition), reverse=True)
    if any(x <= 0 for x in parts):
        raise PartitionError("parts must be positive: %s" % (parts,))
    size = {'A': n + 1, 'B': 2 * n + 1, 'C': 2 * n, 'D': 2 * n}
    if family not in size:
        raise PartitionError("no partitions for family %s" % family)
    if sum(parts) != size[family]:
        raise PartitionError("%s is not a partition of %d"
                             % (parts, size[family]))
    if family == 'C':
        bad = [x for x in set(parts) if x % 2 and parts.count(x) % 2]
        if bad:
            raise PartitionError("odd parts %s need even multiplicity" % bad)
    elif family in 'BD':
        bad = [x for x in set(parts) if x % 2 == 0 and parts.count(x) % 2]
        if bad:
            raise PartitionError("even parts %s need even multiplicity" % bad)
    return tuple(parts)


def partitions(m, maxpart=None):
    """All partitions of m in decreasing lexicographic order."""
    if maxpart is None:
        maxpart = m
    if m == 0:
        yield ()
        return
    for k in range(min(m, maxpart), 0, -1):
        for rest in partitions(m - k, k):
            yield (k,) + rest


def valid_partitions(family, n):
    size = {'A': n + 1, 'B': 2 * n + 1, 'C': 2 * n, 'D': 2 * n}[family]
    result = []
    for lam in partitions(size):
        try:
            result.append(check_partition(family, n, lam))
        except PartitionError:
            pass
    return result


def is_very_even(partition):
    return all(x % 2 == 0 for x in partition)


def group_dim(family, n):
    return {'A': (n + 1)**2 - 1, 'B': n * (2*n + 1),
            'C': n * (2*n + 1), 'D': n * (2*n - 1)}[family]


def class_dim_unipotent_partition(family, n, partition):
    """Closed form dimension of the unipotent class of a partition.

    The centralizer has dimension sum(l'_i^2) - 1 in type A,
    half of sum(l'_i^2) + #odd parts in type C and half of
    sum(l'_i^2) - #odd parts in types B and D, l' being the transposed
    partition.
    """
    parts = check_partition(family, n, partition)
    sq = sum(x * x for x in transpose(parts))
    odd = sum(1 for x in parts if x % 2)
    if family == 'A':
        z = sq - 1
    elif family == 'C':
        z = (sq + odd) // 2
    else:
        z = (sq - odd) // 2
    return group_dim(family, n) - z


def _eps_simple(family, n):
    """epsilon coordinates of the simple roots, one column per root."""
    dim = n + 1 if family == 'A' else n
    S = numpy.zeros((dim, n), dtype=numpy.int64)
    for i in range(n - 1):
        S[i, i] = 1
        S[i + 1, i] = -1
    if family == 'A':
        S[n - 1, n - 1] = 1
        S[n, n - 1] = -1
    elif family == 'B':
        S[n - 1, n - 1] = 1
    elif family == 'C':
        S[n - 1, n - 1] = 2
    elif family == 'D':
        S[n - 2, n - 1] = 1
        S[n - 1, n - 1] = 1
    return S


def eps_to_root(rs, eps):
    """Simple-root coefficients of a root given in epsilon coordinates.
    """
    S = _eps_simple(rs.family, rs.rank)
    x = numpy.linalg.lstsq(S.astype(float), numpy.array(eps, dtype=float),
                           rcond=None)[0]
    r = tuple(int(round(c)) for c in x)
    if not numpy.array_equal(numpy.dot(S, r), numpy.array(eps)) \
       or not rs.is_root(r):
        raise SphericalError("%s is not a root of %s" % (eps, rs.name))
    return r


def _eps(dim, plus=(), minus=(), scale=1):
    v = [0] * dim
    for i in plus:
        v[i] += scale
    for i in minus:
        v[i] -= scale
    return v


def _chain(dim, start, length):
    return [_eps(dim, [k], [k + 1]) for k in range(start, start + length - 1)]


def partition_roots(rs, partition):
    """Positive roots whose root vectors sum to a nilpotent element of
    the given Jordan type in the natural module.

    Equal parts are paired into regular elements of gl blocks.  Even
    parts in type C are regular in sp blocks.  Left over odd parts in
    types B and D are grouped as (2a+1, 2b+1) into so blocks with roots
    eps_k - eps_{k+1} and eps_a + eps_{a+1}; in type B the largest
    left over part is regular in the odd orthogonal block.
    """
    family, n = rs.family, rs.rank
    parts = list(check_partition(family, n, partition))
    dim = n + 1 if family == 'A' else n
    vecs = []
    pos = 0
    if family == 'A':
        for x in parts:
            vecs += _chain(dim, pos, x)
            pos += x
        return [eps_to_root(rs, v) for v in vecs]
    pairs = []
    singles = []
    rest = list(parts)
    while rest:
        x = rest.pop(0)
        if family == 'C' and x % 2 == 0:
            singles.append(x)
        elif rest and rest[0] == x:
            rest.pop(0)
            pairs.append(x)
        else:
            singles.append(x)
    for x in pairs:
        vecs += _chain(dim, pos, x)
        pos += x
    if family == 'C':
        for x in singles:
            d = x // 2
            vecs += _chain(dim, pos, d)
            vecs.append(_eps(dim, [pos + d - 1], scale=2))
            pos += d
    else:
        if family == 'B':
            d = (singles.pop(0) - 1) // 2
            if d:
                vecs += _chain(dim, pos, d)
                vecs.append(_eps(dim, [pos + d - 1]))
            pos += d
        for k in range(0, len(singles), 2):
            a = (singles[k] - 1) // 2
            b = (singles[k + 1] - 1) // 2
            m = a + b + 1
            vecs += _chain(dim, pos, m)
            if a:
                vecs.append(_eps(dim, [pos + a - 1, pos + a]))
            pos += m
    return [eps_to_root(rs, v) for v in vecs]


class NilpotentSpec(object):
    """A nilpotent element given by a set of roots.

    Either `orthogonal_roots` (labels such as 2A1 or A1+A1~) or a
    `partition` of the natural module for classical families.  The
    element is the sum of the root vectors of the negatives of the
    roots.
    """

    def __init__(self, label, roots, partition=None, family=None):
        self.label = label
        self.roots = tuple(tuple(r) for r in roots)
        self.partition = None if partition is None else tuple(partition)
        self.family = family

    @classmethod
    def from_orthogonal_roots(cls, rs, roots, label=None):
        roots = [tuple(r) for r in roots]
        for r in roots:
            rs.index(r)
        for i, a in enumerate(roots):
            for b in roots[i+1:]:
                if rs.inner(a, b) != 0:
                    raise SphericalError("roots %s and %s are not orthogonal"
                                         % (a, b))
        if label is None:
            nl = sum(1 for r in roots if rs.length_class(r) == 'long')
            ns = len(roots) - nl
            l = []
            if nl:
                l.append("%sA1" % (nl if nl > 1 else ""))
            if ns:
                l.append("%sA1~" % (ns if ns > 1 else ""))
            label = "+".join(l) or "0"
        return cls(label, roots)

    @classmethod
    def from_partition(cls, rs, partition):
        roots = partition_roots(rs, partition)
        parts = check_partition(rs.family, rs.rank, partition)
        label = "(%s)" % ",".join(map(str, parts))
        return cls(label, roots, parts, rs.family)

    @property
    def is_orthogonal(self):
        return self.partition is None

    def __repr__(self):
        return "NilpotentSpec(%s)" % self.label

    def element(self, alg):
        x = numpy.zeros(alg.dim, dtype=numpy.int64)
        for r in self.roots:
            x[alg.root_index(_neg(r))] += 1
        return x


def centralizer_dim_nilpotent(alg, spec, p):
    """dim g - rank(ad e) over F_p for the element of `spec`.

    :raise BadPrimeError: if p is not good for the type.
    """
    check_prime(alg.rs, p)
    e = spec.element(alg)
    if not e.any():
        return alg.dim
    r = rank_mod_p(alg.ad_matrix(e), p)
    logger.debug("%s %s: rank of ad e over F_%d is %d",
                 alg.rs.name, spec.label, p, r)
    return alg.dim - r


def class_dim_nilpotent(alg, spec, p=None):
    """Dimension of the class of the nilpotent element of `spec`."""
    if p is None:
        p = next(q for q in (5, 7, 11, 13) if q not in alg.rs.bad_primes)
    return alg.dim - centralizer_dim_nilpotent(alg, spec, p)


def class_dim_from_orthogonal_roots(rs, roots, p=None):
    alg = build_algebra(rs)
    return class_dim_nilpotent(alg, NilpotentSpec.from_orthogonal_roots(rs,
                                                                        roots),
                               p)


def class_dim_semisimple(rs, spec):
    """|Phi| - |Phi(pi)| for the centralizer subsystem `spec`."""
    return len(rs.roots) - spec.num_roots
