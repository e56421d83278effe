"""Exception hierarchy.

Class names double as the invariant names reported by the CLI, so a
failing ``negate --dist 0.5,0.6`` prints ``SumNotOne`` verbatim.
"""


class DistributionError(ValueError):
    """Base class for every validation failure raised by this package."""


class EmptyInput(DistributionError):
    pass


class EntryOutOfRange(DistributionError):
    pass


class SumNotOne(DistributionError):
    pass


class LengthMismatch(DistributionError):
    pass


class DegenerateDimension(DistributionError):
    pass


class UniformInput(DistributionError):
    pass
