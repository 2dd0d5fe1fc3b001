"""Exceptions raised by spherical_classes.

Negative findings of a verification run (a non-involution cell, an
inconclusive witness search) are reported as data and never raised.
"""


class SphericalError(Exception):
    """Base class for all errors in this package.
    """
    pass


class InvalidTypeError(SphericalError, ValueError):
    """The (family, rank) pair does not name a supported simple type.
    """
    def __init__(self, family, rank, reason=None):
        self.family = family
        self.rank = rank
        msg = "invalid type %s%s" % (family, rank)
        if reason:
            msg += ": %s" % reason
        super().__init__(msg)


class BadPrimeError(SphericalError, ValueError):
    """The prime is bad (or even, or not a prime) for the type.
    """
    def __init__(self, p, bad_primes):
        self.p = p
        self.bad_primes = frozenset(bad_primes)
        super().__init__("prime %s is not good; bad primes: %s"
                         % (p, sorted(self.bad_primes)))


class NotARootError(SphericalError, ValueError):
    pass


class DependentSubsetError(SphericalError, ValueError):
    pass


class PartitionError(SphericalError, ValueError):
    pass


class NotInGroupError(SphericalError, ValueError):
    """A matrix fails the defining identity of a classical group.
    """
    def __init__(self, identity, msg=None):
        self.identity = identity
        super().__init__(msg or "matrix fails %s" % identity)


class NeedsLargerPrimeError(SphericalError):
    """A parameter of a representative has no value in F_p.
    """
    def __init__(self, p, condition):
        self.p = p
        self.condition = condition
        super().__init__("cannot realize over F_%d: needs %s" % (p, condition))


class BruhatError(SphericalError):
    """The permutation read off a matrix lies outside the Weyl group.
    """
    pass


class CertificationError(SphericalError):
    """No involution achieves the dimension of a cataloged class.
    """
    def __init__(self, descriptor, msg=None):
        self.descriptor = descriptor
        super().__init__(msg or "no involution certifies %s" % descriptor)


class TooLargeError(SphericalError):
    """A size threshold for exhaustive computation is exceeded.
    """
    def __init__(self, what, size, limit):
        self.size = size
        self.limit = limit
        super().__init__("%s not computed: size %d exceeds limit %d"
                         % (what, size, limit))
