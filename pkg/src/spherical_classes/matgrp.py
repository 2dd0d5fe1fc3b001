"""Classical matrix groups over prime fields and their Bruhat cells.

Matrices are written in the basis (e_1..e_n, f_1..f_n) of the forms

- C: J = ((0, I), (-I, 0)),
- D: J = ((0, I), (I, 0)),
- B: J = 1 + ((0, I), (I, 0)) in the basis (z, e_1..e_n, f_1..f_n),

and in the standard basis for SL_{n+1}.  The Borel subgroup is upper
triangular in the flag order (e_1..e_n, z, f_n..f_1), which is used for
all Bruhat cell computations.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import itertools
import json
import logging
import random

import numpy

from .chevalley import _eps_simple, check_prime, eps_to_root
from .config import Config
from .errors import (BruhatError, InvalidTypeError, NeedsLargerPrimeError,
                     NotInGroupError, SphericalError, TooLargeError)
from .fq import FqMatrix, det_mod_p, inverse_mod_p, primitive_root, \
    rank_mod_p, root_of_unity
from .rootsys import build_root_system, check_type
from . import weyl

logger = logging.getLogger(__name__)

ChunkSize = 1000


def group_order(family, n, p):
    """Order of SL_{n+1}, SO_{2n+1}, Sp_{2n} or split SO_{2n} over F_p."""
    if family == 'A':
        o = p ** (n * (n + 1) // 2)
        for i in range(2, n + 2):
            o *= p**i - 1
        return o
    if family in 'BC':
        o = p ** (n * n)
        for i in range(1, n + 1):
            o *= p**(2*i) - 1
        return o
    if family == 'D':
        o = p ** (n * (n - 1)) * (p**n - 1)
        for i in range(1, n):
            o *= p**(2*i) - 1
        return o
    raise InvalidTypeError(family, n, "no classical matrix group")


class ClassicalGroup(object):
    """SL_{n+1}, SO_{2n+1}, Sp_{2n} or SO_{2n} over F_p.

    :param family: one of A, B, C, D.
    :param n: the rank.
    :param p: an odd prime.
    """

    def __init__(self, family, n, p):
        if family not in 'ABCD' or len(family) != 1:
            raise InvalidTypeError(family, n, "no classical matrix group")
        self.rs = build_root_system(family, check_type(family, n))
        check_prime(self.rs, p)
        self.family = family
        self.n = n
        self.p = p
        self.size = {'A': n + 1, 'B': 2 * n + 1}.get(family, 2 * n)
        self.J = self._form()
        self.flag = self._flag_order()
        self.S = _eps_simple(family, n)
        self._X = {}
        for r in self.rs.roots:
            X = self._root_matrix(numpy.dot(self.S, r))
            self._X[r] = (X, numpy.dot(X, X) % p)
        self._half = pow(2, -1, p)
        self._perm_cache = {}
        logger.debug("%s", self)

    def __repr__(self):
        return "ClassicalGroup(%s, %d, %d)" % (self.family, self.n, self.p)

    def __str__(self):
        name = {'A': "SL%d", 'B': "SO%d", 'C': "Sp%d", 'D': "SO%d"}
        return "%s(F%d)" % (name[self.family] % self.size, self.p)

    @property
    def order(self):
        return group_order(self.family, self.n, self.p)

    # basis positions

    def e(self, i):
        return i + 1 if self.family == 'B' else i

    def f(self, i):
        return self.e(i) + self.n

    def _form(self):
        m, n = self.size, self.n
        J = numpy.zeros((m, m), dtype=numpy.int64)
        if self.family == 'A':
            return None
        if self.family == 'B':
            J[0, 0] = 1
        for i in range(n):
            J[self.e(i), self.f(i)] = 1
            J[self.f(i), self.e(i)] = -1 if self.family == 'C' else 1
        return J % self.p

    def _flag_order(self):
        if self.family == 'A':
            return list(range(self.size))
        l = [self.e(i) for i in range(self.n)]
        if self.family == 'B':
            l.append(0)
        return l + [self.f(i) for i in reversed(range(self.n))]

    def _root_matrix(self, eps):
        """Root vector in the Lie algebra of the group for a root given
        in epsilon coordinates."""
        m, fam = self.size, self.family
        X = numpy.zeros((m, m), dtype=numpy.int64)
        nz = [(i, int(c)) for i, c in enumerate(eps) if c]
        if fam == 'A':
            (i, _), (j, _) = sorted(nz, key=lambda x: -x[1])
            X[i, j] = 1
            return X
        e, f = self.e, self.f
        if len(nz) == 2:
            (i, a), (j, b) = nz
            if a > 0 and b < 0:
                X[e(i), e(j)] = 1
                X[f(j), f(i)] = -1
            elif a < 0 and b > 0:
                X[e(j), e(i)] = 1
                X[f(i), f(j)] = -1
            else:
                sign = 1 if fam == 'C' else -1
                if a > 0:
                    X[e(i), f(j)] = 1
                    X[e(j), f(i)] = sign
                else:
                    X[f(i), e(j)] = 1
                    X[f(j), e(i)] = sign
        else:
            (i, a), = nz
            if fam == 'C':
                if a > 0:
                    X[e(i), f(i)] = 1
                else:
                    X[f(i), e(i)] = 1
            elif a > 0:
                X[e(i), 0] = 1
                X[0, f(i)] = -1
            else:
                X[f(i), 0] = 1
                X[0, e(i)] = -1
        return X % self.p

    def root_vector(self, root):
        return self._X[tuple(root)][0]

    def _root_array(self, root, t):
        X, X2 = self._X[tuple(root)]
        p = self.p
        M = numpy.eye(self.size, dtype=numpy.int64)
        M = M + t * X + (t * t % p) * self._half * X2
        return M % p

    def root_element(self, root, t=1):
        """x_root(t) = exp(t X_root)."""
        return FqMatrix(self._root_array(root, t), self.p)

    def torus_element(self, t):
        """The diagonal matrix with torus coordinates t_1..t_n (t_1..t_n+1
        with product one for SL)."""
        p = self.p
        t = [int(x) % p for x in t]
        if self.family == 'A':
            if len(t) != self.size:
                raise ValueError("need %d torus coordinates" % self.size)
            return FqMatrix.diag(t, p)
        inv = [pow(x, -1, p) for x in t]
        d = t + inv
        if self.family == 'B':
            d = [1] + d
        return FqMatrix.diag(d, p)

    def weyl_representative(self, w):
        """A monomial matrix of the group in the cell of w."""
        g = FqMatrix.identity(self.size, self.p)
        for i in w.word:
            a = self.rs.simple_roots[i - 1]
            na = tuple(-c for c in a)
            g = g * (self.root_element(a, 1) * self.root_element(na, -1)
                     * self.root_element(a, 1))
        return g

    def generators(self):
        """x_{+-alpha_i}(1) and a torus element of order p - 1."""
        gens = []
        for a in self.rs.simple_roots:
            gens.append(self.root_element(a, 1))
            gens.append(self.root_element(tuple(-c for c in a), 1))
        g = primitive_root(self.p)
        if self.family == 'A':
            t = [g, pow(g, -1, self.p)] + [1] * (self.n - 1)
        else:
            t = [g] + [1] * (self.n - 1)
        gens.append(self.torus_element(t))
        return gens

    def contains(self, g):
        A = g.A if isinstance(g, FqMatrix) else numpy.asarray(g) % self.p
        if A.shape != (self.size, self.size):
            return False
        if self.family != 'C' and det_mod_p(A, self.p) != 1:
            return False
        if self.J is None:
            return True
        return bool(numpy.array_equal(
            numpy.dot(numpy.dot(A.T, self.J), A) % self.p, self.J))

    def check(self, g):
        if not self.contains(g):
            if self.J is None:
                raise NotInGroupError("det(g) = 1", "matrix not in %s" % self)
            raise NotInGroupError("g^T J g = J",
                                  "matrix not in %s: form check failed"
                                  % self)

    def random_borel(self, rng):
        """A random element of B as t * prod x_alpha(c_alpha)."""
        p = self.p
        t = [rng.randrange(1, p) for _ in range(self.n)]
        if self.family == 'A':
            t = t + [pow(_prod(t, p), -1, p)]
        g = self.torus_element(t)
        for r in self.rs.positive_roots:
            g = g * self.root_element(r, rng.randrange(p))
        return g

    def random_step(self, rng):
        """A random root or torus element with its inverse, as arrays."""
        p = self.p
        roots = self.rs.roots
        if rng.random() < 0.1:
            t = [rng.randrange(1, p) for _ in range(self.n)]
            if self.family == 'A':
                t = t + [pow(_prod(t, p), -1, p)]
            M = self.torus_element(t).A
            inv = [pow(x, -1, p) for x in t]
            return M, self.torus_element(inv).A
        r = roots[rng.randrange(len(roots))]
        c = rng.randrange(1, p)
        return self._root_array(r, c), self._root_array(r, p - c)

    # Weyl group embedding

    def signed_permutation(self, w):
        """w as (sigma, signs) acting on epsilon indices."""
        n, fam = self.n, self.family
        k = n + 1 if fam == 'A' else n
        sigma = list(range(k))
        signs = [1] * k
        for i in reversed(w.word):
            j = i - 1
            if fam == 'A' or j < n - 1:
                a, b = j, j + 1
                for x in range(k):
                    if sigma[x] == a:
                        sigma[x] = b
                    elif sigma[x] == b:
                        sigma[x] = a
            elif fam in 'BC':
                for x in range(k):
                    if sigma[x] == n - 1:
                        signs[x] = -signs[x]
            else:
                for x in range(k):
                    if sigma[x] == n - 1:
                        sigma[x] = n - 2
                        signs[x] = -signs[x]
                    elif sigma[x] == n - 2:
                        sigma[x] = n - 1
                        signs[x] = -signs[x]
        return sigma, signs

    def permutation(self, w):
        """The permutation of flag positions of the cell of w: column j
        goes to row perm[j]."""
        sigma, signs = self.signed_permutation(w)
        if self.family == 'A':
            return tuple(sigma)
        pos = {b: k for k, b in enumerate(self.flag)}
        perm = [None] * self.size
        for i in range(self.n):
            ei, fi = self.e(sigma[i]), self.f(sigma[i])
            if signs[i] < 0:
                ei, fi = fi, ei
            perm[pos[self.e(i)]] = pos[ei]
            perm[pos[self.f(i)]] = pos[fi]
        if self.family == 'B':
            perm[pos[0]] = pos[0]
        return tuple(perm)

    def weyl_from_permutation(self, perm):
        """The Weyl group element of a flag permutation.

        :raise BruhatError: if it is not in the embedded Weyl group.
        """
        perm = tuple(perm)
        if perm in self._perm_cache:
            return self._perm_cache[perm]
        n, fam = self.n, self.family
        if fam == 'A':
            sigma, signs = list(perm), [1] * (n + 1)
        else:
            flag = self.flag
            where = {}
            for i in range(n):
                where[self.e(i)] = (i, 1)
                where[self.f(i)] = (i, -1)
            sigma, signs = [], []
            for i in range(n):
                img = flag[perm[flag.index(self.e(i))]]
                partner = flag[perm[flag.index(self.f(i))]]
                if img not in where or partner not in where:
                    raise BruhatError("permutation %s moves z" % (perm,))
                k, s = where[img]
                if where[partner] != (k, -s):
                    raise BruhatError("permutation %s is not signed"
                                      % (perm,))
                sigma.append(k)
                signs.append(s)
            if fam == 'D' and signs.count(-1) % 2:
                raise BruhatError("odd number of sign changes in %s"
                                  % (perm,))
        cols = []
        for j in range(n):
            a = self.S[:, j]
            img = [0] * len(sigma)
            for i, c in enumerate(a):
                img[sigma[i]] += signs[i] * int(c)
            cols.append(eps_to_root(self.rs, img))
        w = weyl.WeylElement(self.rs, numpy.array(cols, dtype=numpy.int64).T)
        self._perm_cache[perm] = w
        return w


def _prod(t, p):
    r = 1
    for x in t:
        r = r * x % p
    return r


def make_group(family, n, p):
    """:raise BadPrimeError: if p is even, not prime or bad."""
    return ClassicalGroup(family, n, p)


def cell_permutation(A, p):
    """Permutation pi with A in B pi B for B the upper triangular
    matrices; column j is sent to row pi[j].

    Column j pivots on its lowest nonzero entry once the pivots of the
    earlier columns are cleared to the right, which reads off the same
    permutation as the ranks of the lower left submatrices.
    """
    h = numpy.array(A, dtype=numpy.int64) % p
    m = h.shape[0]
    perm = [0] * m
    for j in range(m):
        nz = numpy.nonzero(h[:, j])[0]
        if len(nz) == 0:
            raise BruhatError("singular matrix")
        i = int(nz[-1])
        perm[j] = i
        inv = pow(int(h[i, j]), -1, p)
        if j + 1 < m:
            factors = (h[i, j + 1:] * inv) % p
            h[:, j + 1:] = (h[:, j + 1:] - numpy.outer(h[:, j], factors)) % p
        h[:i, j] = 0
    return tuple(perm)


def cell_permutation_by_ranks(A, p):
    """The same permutation read off from r(i, j) = rank of rows i.. and
    columns ..j."""
    A = numpy.asarray(A) % p
    m = A.shape[0]

    def r(i, j):
        if i >= m or j < 0:
            return 0
        return rank_mod_p(A[i:, :j + 1], p)

    perm = [None] * m
    for j in range(m):
        for i in range(m):
            if r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1) == 1:
                perm[j] = i
    return tuple(perm)


def _flag_array(G, g):
    A = g.A if isinstance(g, FqMatrix) else numpy.asarray(g)
    return A[numpy.ix_(G.flag, G.flag)]


def bruhat_cell(G, g):
    """The Weyl group element w with g in BwB.

    :raise NotInGroupError: if g is not in G.
    :raise BruhatError: if the permutation is outside the Weyl group.
    """
    G.check(g)
    return G.weyl_from_permutation(cell_permutation(_flag_array(G, g), G.p))


def _is_involution_perm(perm):
    return all(perm[perm[j]] == j for j in range(len(perm)))


def jordan_type(G, u):
    """Partition of a unipotent matrix from the ranks of (u - 1)^k."""
    p = G.p
    N = (u.A - numpy.eye(G.size, dtype=numpy.int64)) % p
    ranks = [G.size]
    P = numpy.eye(G.size, dtype=numpy.int64)
    while ranks[-1]:
        P = numpy.dot(P, N) % p
        ranks.append(rank_mod_p(P, p))
        if len(ranks) > G.size + 1:
            raise SphericalError("matrix is not unipotent")
    ge = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    parts = []
    for k in range(len(ge)):
        nxt = ge[k + 1] if k + 1 < len(ge) else 0
        parts += [k + 1] * (ge[k] - nxt)
    return tuple(sorted(parts, reverse=True))


def _param_value(t, p):
    for c in range(2, p):
        if all(pow(c, k, p) != 1 for k in t.constraints):
            return c
    raise NeedsLargerPrimeError(
        p, "c with c^k != 1 for k in %s" % (list(t.constraints),))


def _scalar_value(s, c, p):
    base, k = s
    if base == 'c':
        return pow(c, k, p)
    if base == 1:
        return 1
    return pow(root_of_unity(base, p), k, p)


def realize_torus(G, t):
    """Diagonal matrix of a torus word over F_p.

    In type A the word only records the eigenvalue multiplicities; the
    realization picks two distinct eigenvalues with determinant one.

    :raise NeedsLargerPrimeError: if F_p lacks the scalars needed.
    """
    p = G.p
    if t.kind != 'diag' or t.family != G.family:
        raise SphericalError("%s is not a torus word of %s" % (t, G))
    if G.family == 'A':
        k = sum(1 for s in t.entries if s[0] == 'c')
        rest = G.size - k
        for mu in range(1, p):
            for lam in range(1, p):
                if lam != mu and pow(lam, k, p) * pow(mu, rest, p) % p == 1:
                    d = [lam if s[0] == 'c' else mu for s in t.entries]
                    return FqMatrix.diag(d, p)
        raise NeedsLargerPrimeError(
            p, "two eigenvalues of multiplicities %d, %d and determinant 1"
            % (k, rest))
    c = _param_value(t, p) if t.has_parameter else None
    return G.torus_element([_scalar_value(s, c, p) for s in t.entries])


def cayley(G, e):
    """(1 + e/2)(1 - e/2)^-1, a unipotent element of the Jordan type of
    the nilpotent matrix e."""
    p = G.p
    I = numpy.eye(G.size, dtype=numpy.int64)
    h = (G._half * e) % p
    return FqMatrix(numpy.dot(I + h, inverse_mod_p(I - h, p)), p)


def _coefficient(c, p):
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


def _realize_witness(G, d, g):
    p = G.p
    u = FqMatrix.identity(G.size, p)
    for r, c in d.unipotent:
        u = u * G.root_element(r, _coefficient(c, p))
    if g * u != u * g:
        raise SphericalError("%s: unipotent part does not centralize %s"
                             % (d.label, d.torus))
    if d.partition is not None:
        jt = jordan_type(G, u)
        if jt != tuple(d.partition):
            raise SphericalError("%s realized with Jordan type %s"
                                 % (d.label, jt))
    return g * u


def realize(G, d):
    """A matrix of G in the class of a descriptor or witness spec.

    Witness specs are realized as s u in B.

    :raise NeedsLargerPrimeError: if the scalars are not in F_p.
    """
    p = G.p
    g = FqMatrix.identity(G.size, p)
    if d.torus is not None:
        g = realize_torus(G, d.torus)
    if hasattr(d, 'guide'):
        g = _realize_witness(G, d, g)
    elif d.unipotent is not None:
        e = numpy.zeros((G.size, G.size), dtype=numpy.int64)
        for r in d.unipotent.roots:
            e = e + G.root_vector(tuple(-c for c in r))
        u = cayley(G, e % p)
        if d.unipotent.partition is not None:
            jt = jordan_type(G, u)
            if jt != tuple(d.unipotent.partition):
                raise SphericalError("%s realized with Jordan type %s"
                                     % (d, jt))
        g = g * u
    G.check(g)
    return g


def jordan_decompose(G, g):
    """(s, u) with g = su = us, s of order prime to p, u of p-power
    order."""
    p = G.p
    N = g.order()
    pa = 1
    m = N
    while m % p == 0:
        m //= p
        pa *= p
    e = 0 if m == 1 else pa * pow(pa, -1, m) % N
    s = g ** e
    u = g * s.inverse()
    return s, u


class BruhatReport(object):
    """Cells met by a sample of a conjugacy class.

    `cells` counts observations per reduced word; `values` holds
    (length, rk(1 - w), is involution) per word.
    """

    def __init__(self, name, group, p, budget, dim_target, mode='sampled'):
        self.name = name
        self.group = group
        self.p = p
        self.budget = budget
        self.dim_target = dim_target
        self.mode = mode
        self.cells = Counter()
        self.values = {}
        self.witness = None

    def record(self, w, count=1, conjugator=None):
        word = w.word
        if count:
            self.cells[word] += count
        if word not in self.values:
            self.values[word] = (w.length, weyl.rank_defect(w),
                                 weyl.is_involution(w))
        if self.witness is None and not self.values[word][2]:
            self.witness = {'cell': list(word),
                            'conjugator': conjugator.to_list()
                            if conjugator is not None else None}

    @property
    def all_involutions(self):
        return all(v[2] for v in self.values.values())

    @property
    def max_value(self):
        return max((v[0] + v[1] for v in self.values.values()), default=0)

    @property
    def achieved(self):
        return any(v[0] + v[1] == self.dim_target
                   for v in self.values.values())

    @property
    def samples(self):
        return sum(self.cells.values())

    def merge(self, other):
        self.cells.update(other.cells)
        self.values.update(other.values)
        if self.witness is None:
            self.witness = other.witness
        return self

    def as_dict(self):
        return {
            'class': self.name,
            'group': self.group,
            'p': self.p,
            'budget': self.budget,
            'mode': self.mode,
            'samples': self.samples,
            'cells': [{'word': list(w), 'count': c,
                       'value': self.values[w][0] + self.values[w][1],
                       'involution': self.values[w][2]}
                      for w, c in sorted(self.cells.items(),
                                         key=lambda x: (len(x[0]), x[0]))],
            'all_involutions': self.all_involutions,
            'max_value': self.max_value,
            'dim_target': self.dim_target,
            'achieved': self.achieved,
            'witness': self.witness,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)


def merge_reports(reports):
    reports = list(reports)
    result = reports[0]
    for r in reports[1:]:
        result.merge(r)
    return result


def _key(A):
    return A.tobytes()


def class_orbit(G, g, limit):
    """All conjugates of g, or None if there are more than `limit`."""
    p = G.p
    pairs = [(h.A, h.inverse().A) for h in G.generators()]
    start = g.A
    seen = {_key(start): start}
    todo = [start]
    while todo:
        x = todo.pop()
        for h, hinv in pairs:
            y = numpy.dot(numpy.dot(h, x), hinv) % p
            k = _key(y)
            if k not in seen:
                seen[k] = y
                todo.append(y)
                if len(seen) > limit:
                    return None
    return list(seen.values())


def _walk(G, g, steps, seed):
    """Cell permutations along a seeded random conjugation walk,
    together with the conjugator of the first non-involution cell."""
    p = G.p
    rng = random.Random(seed)
    x = g.A.copy()
    conj = numpy.eye(G.size, dtype=numpy.int64)
    for _ in range(len(G.rs.roots)):
        M, Minv = G.random_step(rng)
        x = numpy.dot(numpy.dot(M, x), Minv) % p
        conj = numpy.dot(M, conj) % p
    counts = Counter()
    witness = None
    for _ in range(steps):
        for _ in range(2):
            M, Minv = G.random_step(rng)
            x = numpy.dot(numpy.dot(M, x), Minv) % p
            conj = numpy.dot(M, conj) % p
        perm = cell_permutation(x[numpy.ix_(G.flag, G.flag)], p)
        counts[perm] += 1
        if witness is None and not _is_involution_perm(perm):
            witness = (perm, conj.copy())
    return counts, witness


def _walk_task(args):
    family, n, p, A, steps, seed = args
    G = ClassicalGroup(family, n, p)
    return _walk(G, FqMatrix(A, p), steps, seed)


def _sample(G, g, budget, seed, workers):
    master = random.Random(seed)
    chunks = []
    left = budget
    while left > 0:
        k = min(ChunkSize, left)
        chunks.append((G.family, G.n, G.p, g.A, k, master.getrandbits(64)))
        left -= k
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_walk_task, chunks))
    return [_walk(G, g, c[4], c[5]) for c in chunks]


def verify_involution_criterion(G, d, budget=None, seed=None, workers=None,
                                config=None):
    """Bruhat cells met by the class of d.

    The whole class is enumerated when |G| is at most
    `ExhaustiveThreshold` or `budget` is ``'exhaustive'``;
    otherwise `budget` seeded random conjugates are examined.  Central
    translates of the class are not distinguished.

    :return: a :class:`BruhatReport`.
    """
    config = config or Config()
    if seed is None:
        seed = config.DefaultSeed
    if workers is None:
        workers = config.Workers
    g = realize(G, d)
    target = getattr(d, 'expected_dim', 0)
    name = str(d) if not hasattr(d, 'cell') else d.label
    limit = config.ExhaustiveThreshold
    orbit = None
    if budget == 'exhaustive' or (budget is None and G.order <= limit):
        orbit = class_orbit(G, g, limit)
        if orbit is None and budget == 'exhaustive':
            raise TooLargeError("class of %s" % name, limit + 1, limit)
    if orbit is not None:
        report = BruhatReport(name, str(G), G.p, len(orbit), target,
                              'exhaustive')
        counts = Counter(cell_permutation(x[numpy.ix_(G.flag, G.flag)], G.p)
                         for x in orbit)
        for perm, c in sorted(counts.items()):
            report.record(G.weyl_from_permutation(perm), c)
    else:
        if budget is None:
            budget = config.SampleBudget
        report = BruhatReport(name, str(G), G.p, budget, target)
        for counts, witness in _sample(G, g, int(budget), seed, workers):
            if witness is not None and report.witness is None:
                perm, conj = witness
                report.record(G.weyl_from_permutation(perm), 0,
                              FqMatrix(conj, G.p))
            for perm, c in sorted(counts.items()):
                report.record(G.weyl_from_permutation(perm), c)
    logger.info("%s in %s: %d cells, all involutions %s, max value %d, "
                "target %d", name, G, len(report.cells),
                report.all_involutions, report.max_value, target)
    return report


def _guided_conjugators(G, d):
    """x_{r_k}(m_k) ... x_{r_1}(m_1) w' for the roots r_i of the search
    list of d and all (m_1..m_k) in F_p^k, w' the Weyl representative of
    the guide."""
    if getattr(d, 'guide', None) is None:
        return
    w = G.weyl_representative(d.guide)
    for coeffs in itertools.product(range(G.p), repeat=len(d.search)):
        h = w
        for r, m in zip(d.search, coeffs):
            if m:
                h = G.root_element(r, m) * h
        yield h


def find_noninvolution_witness(G, d, target_cell, budget=None, seed=None):
    """A conjugator h with h g h^-1 in the cell `target_cell`, g being the
    realization of d, or None when the search is inconclusive.

    The conjugators of the guide and search roots of a witness spec are
    tried first, then the identity and the elements x_{-alpha_i}(1),
    then a seeded random walk of `budget` steps.
    """
    p = G.p
    g = realize(G, d)
    target = G.permutation(target_cell)
    guided = itertools.chain(
        _guided_conjugators(G, d),
        [FqMatrix.identity(G.size, p)],
        (G.root_element(tuple(-c for c in a), 1)
         for a in G.rs.simple_roots))
    for h in guided:
        x = h * g * h.inverse()
        if cell_permutation(_flag_array(G, x), p) == target:
            return h
    if budget is None:
        budget = Config.SampleBudget
    rng = random.Random(Config.DefaultSeed if seed is None else seed)
    x = g.A.copy()
    conj = numpy.eye(G.size, dtype=numpy.int64)
    for _ in range(int(budget)):
        M, Minv = G.random_step(rng)
        x = numpy.dot(numpy.dot(M, x), Minv) % p
        conj = numpy.dot(M, conj) % p
        if cell_permutation(x[numpy.ix_(G.flag, G.flag)], p) == target:
            return FqMatrix(conj, p)
    logger.info("no conjugate of %s found in the target cell %s",
                getattr(d, 'label', d), target_cell.word)
    return None


def elements(G, limit=None):
    """All elements of G by breadth first search.

    :raise TooLargeError: if |G| exceeds the limit.
    """
    if limit is None:
        limit = Config.CentralizerLimit
    if G.order > limit:
        raise TooLargeError("element list of %s" % G, G.order, limit)
    p = G.p
    gens = [h.A for h in G.generators()]
    I = numpy.eye(G.size, dtype=numpy.int64)
    seen = {_key(I): I}
    todo = [I]
    while todo:
        x = todo.pop()
        for h in gens:
            y = numpy.dot(x, h) % p
            k = _key(y)
            if k not in seen:
                seen[k] = y
                todo.append(y)
    return list(seen.values())


def centralizer_order(G, g, limit=None):
    A = g.A
    p = G.p
    return sum(1 for h in elements(G, limit)
               if numpy.array_equal(numpy.dot(h, A) % p,
                                    numpy.dot(A, h) % p))


def class_size(G, g, limit=None):
    return G.order // centralizer_order(G, g, limit)


def matrix_to_json(g):
    return json.dumps(g.to_list())


def matrix_from_json(G, text):
    """Parse a row-major JSON matrix over the field of G."""
    rows = json.loads(text)
    A = numpy.array(rows, dtype=numpy.int64)
    if A.shape != (G.size, G.size):
        raise NotInGroupError("a %d x %d matrix" % (G.size, G.size),
                              "expected a %d x %d matrix, got shape %s"
                              % (G.size, G.size, A.shape))
    return FqMatrix(A, G.p)
