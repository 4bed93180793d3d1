"""Exception types raised across the package."""


class MDZVError(Exception):
    """Base class for all package errors."""


class MalformedWord(MDZVError, ValueError):
    """A shuffle word cannot be turned into a refined term."""


class OverlapError(MDZVError, ValueError):
    """Two chains share a generator label."""


class MixedWeight(MDZVError, ValueError):
    """Terms of different weight or generator count were collected together."""


class BadDiscriminant(MDZVError, ValueError):
    """The integer does not define an imaginary quadratic field."""


class SingularTerm(MDZVError, ZeroDivisionError):
    """A denominator of a refined term vanished at some lattice point."""


class UnknownIdentity(MDZVError, KeyError):
    """No identity is registered under the requested name."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown identity"
