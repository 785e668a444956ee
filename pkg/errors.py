"""
errors.py - Exception hierarchy shared by every package.

The CLI maps GraphInputError to exit code 2 and any other
RigidityError to exit code 3.
"""


class RigidityError(Exception):
    """Base class for all toolkit errors."""


class GraphInputError(RigidityError, ValueError):
    """Invalid vertex index, self-loop, malformed file or family spec."""


class HypothesisError(GraphInputError):
    """A theorem's hypothesis does not hold for the given input."""


class NoStressError(RigidityError):
    """The kernel is trivial: no nonzero stress exists."""


class ProbabilisticRankError(RigidityError):
    """A randomized rank answer failed its internal consistency check.

    Retrying with a different seed is expected to succeed.
    """


class OracleSizeError(RigidityError):
    """A brute-force oracle refused an instance that is too large."""
