"""Exception types.

Argument problems raise ValueError/IndexError subclasses.  NumericalError
marks a violated structural identity, which means a construction bug rather
than bad input; the CLI maps it to exit status 1.
"""


class DimensionError(ValueError):
    """Incompatible or out-of-range dimensions."""


class NotUnitaryError(ValueError):
    pass


class NumericalError(ArithmeticError):
    """A structural identity failed beyond its tolerance."""


class ImaginaryResidueError(NumericalError):
    pass


class SubgridRelationError(NumericalError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class ProjectorError(NumericalError):
    pass


class MarginalError(NumericalError):
    pass
