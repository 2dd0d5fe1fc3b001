"""Weyl group elements acting on simple-root coordinates.

An element is canonically its integer matrix; the column i holds the
coefficients of the image of the simple root alpha_i.  Reduced words
are derived on demand by descent.
"""

from collections import deque
from concurrent.futures import ProcessPoolExecutor
import logging
import math
import numpy

from .config import Config
from .errors import NotARootError, TooLargeError
from .fq import int_rank
from .rootsys import build_root_system

logger = logging.getLogger(__name__)


def weyl_order(rs):
    n = rs.rank
    f = rs.family
    if f == 'A':
        return math.factorial(n + 1)
    if f in 'BC':
        return 2**n * math.factorial(n)
    if f == 'D':
        return 2**(n - 1) * math.factorial(n)
    return {'E6': 51840, 'E7': 2903040, 'E8': 696729600,
            'F4': 1152, 'G2': 12}[rs.name]


def coxeter_number(rs):
    return 2 * rs.num_positive // rs.rank


class WeylElement(object):
    """An element of the Weyl group of `rs`.

    :param rs: the root system.
    :param matrix: the action on simple-root coordinates.
    :param word: optional reduced word (1-based simple reflection
        indices).  It is trusted, not rechecked.
    """

    def __init__(self, rs, matrix, word=None):
        M = numpy.array(matrix, dtype=numpy.int64)
        M.setflags(write=False)
        self.rs = rs
        self.matrix = M
        self._key = M.tobytes()
        self._length = None
        self._word = None if word is None else tuple(word)

    @classmethod
    def identity(cls, rs):
        return cls(rs, numpy.eye(rs.rank, dtype=numpy.int64), ())

    def __repr__(self):
        return "WeylElement(%s, %s)" % (self.rs.name, list(self.word))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs == other.rs and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other):
        return WeylElement(self.rs, numpy.dot(self.matrix, other.matrix))

    def apply(self, v):
        return tuple(int(x) for x in numpy.dot(self.matrix, v))

    def inverse(self):
        return from_word(self.rs, reversed(self.word))

    def is_identity(self):
        return bool(numpy.array_equal(self.matrix,
                                      numpy.eye(self.rs.rank,
                                                dtype=numpy.int64)))

    @property
    def length(self):
        if self._length is None:
            self._length = length(self)
        return self._length

    @property
    def word(self):
        if self._word is None:
            self._word = tuple(reduced_word(self))
        return self._word

    def descents(self):
        """Right descents: indices i (1-based) with w(alpha_i) < 0."""
        sums = self.matrix.sum(axis=0)
        return [i + 1 for i in range(self.rs.rank) if sums[i] < 0]

    def order(self):
        k = 1
        g = self
        while not g.is_identity():
            g = g * self
            k += 1
        return k

    def as_dict(self):
        return {
            'matrix': self.matrix.tolist(),
            'word': list(self.word),
            'length': self.length,
            'rank_defect': rank_defect(self),
        }


def simple_reflection(rs, i):
    """Matrix element s_i for 1-based i."""
    j = i - 1
    M = numpy.eye(rs.rank, dtype=numpy.int64)
    M[j, :] -= numpy.asarray(rs.cartan[:, j], dtype=numpy.int64)
    return WeylElement(rs, M, (i,))


def reflection(rs, root):
    """The reflection s_alpha in a root.

    :raise NotARootError: if `root` is not a root.
    """
    root = tuple(int(c) for c in root)
    if not rs.is_root(root):
        raise NotARootError("%s is not a root of %s" % (root, rs.name))
    cols = [rs.reflect(e, root) for e in rs.simple_roots]
    return WeylElement(rs, numpy.array(cols, dtype=numpy.int64).T)


def from_word(rs, word):
    w = WeylElement.identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


def _positive_array(rs):
    arr = getattr(rs, '_positive_array', None)
    if arr is None:
        arr = numpy.array(rs.positive_roots, dtype=numpy.int64)
        rs._positive_array = arr
    return arr


def length(w):
    """Number of positive roots sent to negative roots."""
    images = numpy.dot(_positive_array(w.rs), w.matrix.T)
    return int(numpy.count_nonzero(images.sum(axis=1) < 0))


def rank_defect(w):
    """rk(1 - w), exact over the rationals."""
    n = w.rs.rank
    return int_rank(numpy.eye(n, dtype=numpy.int64) - w.matrix)


def is_involution(w):
    M = w.matrix
    return bool(numpy.array_equal(numpy.dot(M, M),
                                  numpy.eye(w.rs.rank, dtype=numpy.int64)))


def reduced_word(w):
    """A reduced word for w, read off by repeated right descent.

    The smallest descent is removed first, so the result is
    deterministic.
    """
    rs = w.rs
    M = numpy.array(w.matrix)
    word = []
    while True:
        sums = M.sum(axis=0)
        neg = numpy.nonzero(sums < 0)[0]
        if len(neg) == 0:
            break
        i = int(neg[0]) + 1
        word.append(i)
        M = numpy.dot(M, simple_reflection(rs, i).matrix)
    if not numpy.array_equal(M, numpy.eye(rs.rank, dtype=numpy.int64)):
        raise ValueError("matrix is not in the Weyl group of %s" % rs.name)
    word.reverse()
    return word


def in_weyl_group(rs, matrix):
    """True if `matrix` (an automorphism of the root system) lies in W."""
    try:
        reduced_word(WeylElement(rs, matrix))
    except ValueError:
        return False
    return True


def longest_element(rs):
    w = WeylElement.identity(rs)
    word = []
    while True:
        sums = w.matrix.sum(axis=0)
        pos = [i for i in range(rs.rank) if sums[i] > 0]
        if not pos:
            break
        w = w * simple_reflection(rs, pos[0] + 1)
        word.append(pos[0] + 1)
    return WeylElement(rs, w.matrix, word)


def coxeter_element(rs):
    """The product s_1 s_2 ... s_n."""
    return from_word(rs, range(1, rs.rank + 1))


def elements(rs, limit=None):
    """All elements of W by breadth first search, in order of length.

    :raise TooLargeError: if |W| exceeds `limit`
        (default :attr:`Config.WeylExhaustiveLimit`).
    """
    if limit is None:
        limit = Config.WeylExhaustiveLimit
    size = weyl_order(rs)
    if size > limit:
        raise TooLargeError("W(%s)" % rs.name, size, limit)
    gens = [simple_reflection(rs, i).matrix for i in range(1, rs.rank + 1)]
    start = WeylElement.identity(rs)
    seen = {start._key}
    result = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            M = numpy.dot(w.matrix, g)
            key = M.tobytes()
            if key not in seen:
                seen.add(key)
                x = WeylElement(rs, M)
                result.append(x)
                queue.append(x)
    logger.debug("enumerated %d elements of W(%s)", len(result), rs.name)
    return result


def _charpoly(w):
    return tuple(int(round(c)) for c in numpy.poly(w.matrix.astype(float)))


def is_coxeter_element(w, exhaustive_rank=4):
    """True if w is conjugate to s_1 s_2 ... s_n.

    Up to rank `exhaustive_rank` the conjugacy class of the Coxeter
    element is enumerated; above, order and characteristic polynomial
    are compared.
    """
    rs = w.rs
    if rank_defect(w) != rs.rank:
        return False
    c = coxeter_element(rs)
    if rs.rank <= exhaustive_rank:
        cls = {(x * c * x.inverse())._key for x in elements(rs)}
        return w._key in cls
    return w.order() == coxeter_number(rs) and _charpoly(w) == _charpoly(c)


def bruhat_leq(u, w):
    """Bruhat order test u <= w.

    Walks down the reduced word of w from the right: if s is the last
    letter, then u <= w iff us <= ws when us < u, and iff u <= ws
    otherwise.
    """
    rs = w.rs
    for i in reversed(w.word):
        s = simple_reflection(rs, i)
        if i in u.descents():
            u = u * s
    return u.is_identity()


def upper_set_meet(u, v, elems=None):
    """All elements x of W with u <= x and v <= x."""
    if elems is None:
        elems = elements(u.rs)
    return [x for x in elems
            if x.length >= max(u.length, v.length)
            and bruhat_leq(u, x) and bruhat_leq(v, x)]


def _start_points(rs, d):
    """(k, first root index) pairs in search order."""
    npos = rs.num_positive
    return [(k, pos) for k in range(1, min(rs.rank, d) + 1)
            if k <= d - k <= npos for pos in range(npos)]


def _orthogonal_search(rs, d, cap, first, starts=None):
    """Products of reflections in pairwise orthogonal positive roots
    with l(w) + k = d, k being the number of roots.

    :param starts: (k, index) pairs fixing the number of roots and the
        first root, in the order of :func:`_start_points` by default.
    :return: list of matrices.
    """
    refl = []
    for r in rs.positive_roots:
        s = reflection(rs, r)
        refl.append((s.length, r, s.matrix))
    refl.sort(key=lambda t: (-t[0], rs.index(t[1])))
    npos = len(refl)
    gram = numpy.array([t[1] for t in refl], dtype=numpy.int64)
    gram = numpy.dot(numpy.dot(gram, rs.gram), gram.T)
    orth = [frozenset(numpy.nonzero(gram[i] == 0)[0].tolist())
            for i in range(npos)]
    posarr = _positive_array(rs)
    found = {}
    visited = [0]

    def ell(M):
        return int(numpy.count_nonzero(numpy.dot(posarr, M.T).sum(axis=1) < 0))

    def dfs(allowed, M, depth, k, target):
        if depth == k:
            visited[0] += 1
            if ell(M) == target:
                found.setdefault(M.tobytes(), M)
            return
        cur = ell(M)
        remaining = k - depth
        for pos in allowed:
            if visited[0] >= cap or (first and found):
                return
            if cur + remaining * refl[pos][0] < target:
                return
            nxt = [q for q in allowed if q > pos and q in orth[pos]]
            if len(nxt) < remaining - 1:
                continue
            dfs(nxt, numpy.dot(M, refl[pos][2]), depth + 1, k, target)

    if starts is None:
        starts = _start_points(rs, d)
    for k, pos in starts:
        if visited[0] >= cap or (first and found):
            break
        if k * refl[pos][0] < d - k:
            continue
        nxt = [q for q in range(npos) if q > pos and q in orth[pos]]
        if len(nxt) < k - 1:
            continue
        dfs(nxt, refl[pos][2], 1, k, d - k)
    if visited[0] >= cap:
        logger.info("involution search in %s for %d stopped at cap %d",
                    rs.name, d, cap)
    return list(found.values())


def _search_task(args):
    family, rank, d, start, cap, first = args
    rs = build_root_system(family, rank)
    return _orthogonal_search(rs, d, cap, first, [start])


def involutions_with_value(rs, d, cap=None, first=False, workers=1):
    """Involutions w with l(w) + rk(1 - w) = d.

    Every involution is a product of rk(1 - w) reflections in pairwise
    orthogonal roots, and these sets are searched in order of
    decreasing reflection length.  Results are deduplicated by
    matrix and sorted by (length, reduced word).

    :param rs: the root system.
    :param d: the target value.
    :param cap: maximum number of orthogonal sets examined
        (default :attr:`Config.InvolutionCap`), per first root when
        `workers` is more than one.
    :param first: stop at the first hit.
    :param workers: number of processes; the search is split by its
        first root.
    :return: list of :class:`WeylElement`.
    """
    if cap is None:
        cap = Config.InvolutionCap
    if d < 0 or d > rs.num_positive + rs.rank or d % 2:
        return []
    if d == 0:
        return [WeylElement.identity(rs)]
    if workers > 1:
        tasks = [(rs.family, rs.rank, d, start, cap, first)
                 for start in _start_points(rs, d)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_task, tasks))
        if first:
            parts = [next(([m] for l in parts for m in l), [])]
        matrices = {}
        for l in parts:
            for M in l:
                matrices.setdefault(M.tobytes(), M)
        found = list(matrices.values())
    else:
        found = _orthogonal_search(rs, d, cap, first)
    result = [WeylElement(rs, M) for M in found]
    result.sort(key=lambda w: (w.length, w.word))
    return result


def _stabilizer_maps(rs, spec):
    """Automorphisms of the root system mapping the set spec.pi to itself.
    """
    pi = list(spec.pi)
    basis = list(pi)
    for e in rs.simple_roots:
        if int_rank(numpy.array(basis + [e])) > len(basis):
            basis.append(e)
    extra = len(basis) - len(pi)
    if extra > 2 and weyl_order(rs) > Config.WeylExhaustiveLimit:
        raise TooLargeError("stabilizer of {%s} in W(%s)"
                            % (spec.label_str(), rs.name),
                            weyl_order(rs), Config.WeylExhaustiveLimit)
    Bm = numpy.array(basis, dtype=numpy.int64).T
    Binv = numpy.linalg.inv(Bm.astype(float))
    roots = rs.roots
    maps = []

    def extend(images):
        k = len(images)
        if k == len(basis):
            Im = numpy.array(images, dtype=numpy.int64).T
            M = numpy.rint(numpy.dot(Im, Binv)).astype(numpy.int64)
            if not numpy.array_equal(numpy.dot(M, Bm), Im):
                return
            if all(rs.is_root(numpy.dot(M, r)) for r in rs.positive_roots):
                maps.append(M)
            return
        b = basis[k]
        pool = pi if k < len(pi) else roots
        for r in pool:
            if k < len(pi) and r in images:
                continue
            if rs.norm(r) != rs.norm(b):
                continue
            if all(rs.inner(r, images[i]) == rs.inner(b, basis[i])
                   for i in range(k)):
                extend(images + [r])

    extend([])
    return maps


def subsystem_automorphisms_in_W(rs, spec, method='stabilizer'):
    """Elements of W mapping the basis set of `spec` onto itself.

    :param rs: the root system.
    :param spec: a :class:`~spherical_classes.rootsys.SubsystemSpec`.
    :param method: ``'stabilizer'`` searches automorphisms of the root
        system fixing the set and keeps those lying in W;
        ``'exhaustive'`` scans all of W.
    :return: list of (WeylElement, induced map) pairs, the induced map
        being a tuple of (label, image label) pairs.
    :raise TooLargeError: if the chosen method is beyond its limits.
    """
    label_of = {v: l for l, v in zip(spec.labels, spec.pi)}
    if method == 'exhaustive':
        candidates = [w.matrix for w in elements(rs)]
    elif method == 'stabilizer':
        candidates = [M for M in _stabilizer_maps(rs, spec)
                      if in_weyl_group(rs, M)]
    else:
        raise ValueError("invalid method %r" % method)
    result = []
    for M in candidates:
        w = WeylElement(rs, M)
        images = [w.apply(v) for v in spec.pi]
        if not all(im in label_of for im in images):
            continue
        induced = tuple((label_of[v], label_of[im])
                        for v, im in zip(spec.pi, images))
        result.append((w, induced))
    result.sort(key=lambda t: (t[0].length, t[0].word))
    logger.debug("%s: %d elements of W stabilize {%s}",
                 rs.name, len(result), spec.label_str())
    return result


def induces_nontrivial(result):
    """True if some element of the result moves a basis element."""
    return any(any(a != b for a, b in induced) for w, induced in result)
