"""Exact linear algebra over prime fields and over the integers.
"""

import logging
import numpy

from .errors import NeedsLargerPrimeError, SphericalError

logger = logging.getLogger(__name__)

scalar = numpy.int64


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _factor(n):
    f = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            f.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        f.append(n)
    return f


def primitive_root(p):
    """Smallest generator of the multiplicative group of F_p.
    """
    if not is_prime(p):
        raise SphericalError("%s is not a prime" % p)
    if p == 2:
        return 1
    qs = _factor(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("no primitive root mod %d" % p)


def root_of_unity(order, p):
    """A primitive root of unity of the given order in F_p.

    :param order: the multiplicative order wanted.
    :type order: :class:`int`
    :param p: the prime.
    :type p: :class:`int`
    :raise NeedsLargerPrimeError: if `order` does not divide p - 1.
    """
    if (p - 1) % order != 0:
        raise NeedsLargerPrimeError(p, "p = 1 mod %d" % order)
    return pow(primitive_root(p), (p - 1) // order, p)


def _reduce(A, p):
    A = numpy.array(A, dtype=scalar)
    return A % p


def _echelon(A, p):
    """Row reduce a copy of A over F_p.  Return (reduced, pivot columns).
    """
    A = _reduce(A, p).copy()
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = numpy.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i], :] = A[[i, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p
        for i in range(m):
            if i != r and A[i, c]:
                A[i, :] = (A[i, :] - A[i, c] * A[r, :]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p(A, p):
    """Exact rank of an integer matrix over F_p.
    """
    A = numpy.asarray(A)
    if A.size == 0:
        return 0
    return len(_echelon(A, p)[1])


def nullity_mod_p(A, p):
    A = numpy.asarray(A)
    return A.shape[1] - rank_mod_p(A, p)


def inverse_mod_p(A, p):
    """Inverse of a square matrix over F_p.

    :raise SphericalError: if the matrix is singular.
    """
    A = _reduce(A, p)
    n = A.shape[0]
    R, pivots = _echelon(numpy.hstack([A, numpy.eye(n, dtype=scalar)]), p)
    if pivots[:n] != list(range(n)):
        raise SphericalError("matrix is singular mod %d" % p)
    return R[:, n:].copy()


def det_mod_p(A, p):
    A = _reduce(A, p).copy()
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = numpy.nonzero(A[c:, c])[0]
        if len(nz) == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            A[[c, i], :] = A[[i, c], :]
            det = -det
        det = det * int(A[c, c]) % p
        inv = pow(int(A[c, c]), -1, p)
        for r in range(c + 1, n):
            if A[r, c]:
                A[r, :] = (A[r, :] - A[r, c] * inv * A[c, :]) % p
    return det % p


def int_rank(A):
    """Exact rank over the rationals by fraction free elimination.
    """
    rows = [[int(x) for x in row] for row in numpy.asarray(A)]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            rows[i] = [(rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j])
                       // prev for j in range(n)]
        prev = rows[r][c]
        r += 1
        if r == m:
            break
    return r


class FqMatrix(object):
    """Immutable square or rectangular matrix over the prime field F_p.

    Instances are hashable and compare equal when both the prime and
    the entries agree.
    """

    def __init__(self, A, p):
        A = _reduce(A, p)
        A.setflags(write=False)
        self.A = A
        self.p = p
        self.shape = A.shape
        self._key = (p, A.shape, A.tobytes())
        self._hash = hash(self._key)

    @classmethod
    def identity(cls, n, p):
        return cls(numpy.eye(n, dtype=scalar), p)

    @classmethod
    def diag(cls, entries, p):
        return cls(numpy.diag([int(x) % p for x in entries]), p)

    def __repr__(self):
        return "FqMatrix(%s, %d)" % (self.to_list(), self.p)

    def __str__(self):
        return str(self.A)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return self._key == other._key

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __add__(self, other):
        return FqMatrix(self.A + other.A, self.p)

    def __sub__(self, other):
        return FqMatrix(self.A - other.A, self.p)

    def __neg__(self):
        return FqMatrix(-self.A, self.p)

    def __mul__(self, other):
        if isinstance(other, FqMatrix):
            assert self.p == other.p
            return FqMatrix(numpy.dot(self.A, other.A), self.p)
        if isinstance(other, int):
            return FqMatrix(self.A * other, self.p)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = FqMatrix.identity(self.shape[0], self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __getitem__(self, idx):
        return int(self.A[idx])

    @property
    def T(self):
        return FqMatrix(self.A.T, self.p)

    def inverse(self):
        return FqMatrix(inverse_mod_p(self.A, self.p), self.p)

    def rank(self):
        return rank_mod_p(self.A, self.p)

    def det(self):
        return det_mod_p(self.A, self.p)

    def is_identity(self):
        n = self.shape[0]
        return bool(numpy.array_equal(self.A, numpy.eye(n, dtype=scalar)))

    def is_diagonal(self):
        return bool(numpy.count_nonzero(self.A - numpy.diag(numpy.diag(self.A))) == 0)

    def order(self, limit=10**6):
        """Multiplicative order, found by repeated multiplication.
        """
        g = self
        k = 1
        while not g.is_identity():
            g = g * self
            k += 1
            if k > limit:
                raise SphericalError("element order exceeds %d" % limit)
        return k

    def conjugate(self, h):
        """Return h * self * h^-1."""
        return h * self * h.inverse()

    def to_list(self):
        return [[int(x) for x in row] for row in self.A]
