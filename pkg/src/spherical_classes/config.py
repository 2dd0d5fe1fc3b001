"""Run time defaults.

Class level defaults may be overridden from the environment, and
command line flags override both.
"""

import logging
import os

logger = logging.getLogger(__name__)


class Config(object):
    """Defaults for the exhaustive and sampling search routines.
    """

    ExhaustiveThreshold = 10**7
    SampleBudget = 10**5
    InvolutionCap = 10**6
    WeylExhaustiveLimit = 3 * 10**6
    CentralizerLimit = 10**7
    DefaultSeed = 0
    GoodPrimes = (5, 7, 11)
    Workers = 1

    EnvVars = {
        'Workers': 'SPHERICAL_WORKERS',
        'SampleBudget': 'SPHERICAL_BUDGET',
        'DefaultSeed': 'SPHERICAL_SEED',
    }

    def __init__(self, environ=None, **overrides):
        if environ is None:
            environ = os.environ
        for attr, var in self.EnvVars.items():
            value = environ.get(var)
            if value:
                try:
                    setattr(self, attr, int(value))
                except ValueError:
                    logger.warning("ignoring invalid value %r of %s",
                                   value, var)
        for attr, value in overrides.items():
            if not hasattr(type(self), attr):
                raise TypeError("unknown config option %s" % attr)
            if value is not None:
                setattr(self, attr, value)

    def __repr__(self):
        l = ["%s=%r" % (a, getattr(self, a))
             for a in ('Workers', 'SampleBudget', 'DefaultSeed')]
        return "Config(%s)" % ", ".join(l)
