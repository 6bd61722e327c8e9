"""Exception hierarchy shared by every module."""


class SpectralEntropyError(ValueError):
    """Base class for all library errors."""


# graph construction / input
class InvalidCount(SpectralEntropyError):
    pass


class IndexOutOfRange(SpectralEntropyError):
    pass


class SelfLoop(SpectralEntropyError):
    pass


class InvalidParameter(SpectralEntropyError):
    pass


class ParseError(SpectralEntropyError):
    pass


class SizeCapExceeded(SpectralEntropyError):
    pass


# spectra
class NotSymmetric(SpectralEntropyError):
    pass


class NoConvergence(SpectralEntropyError):
    pass


class NotPositiveSemidefinite(SpectralEntropyError):
    pass


class EmptyGraph(SpectralEntropyError):
    pass


class UnsupportedCombination(SpectralEntropyError):
    pass


class RegularityRequired(SpectralEntropyError):
    pass


class MissingAux(SpectralEntropyError):
    pass


# entropy parameters
class NonPositiveQ(SpectralEntropyError):
    pass


class ParameterAtLimit(SpectralEntropyError):
    pass


# bound prerequisites
class NotRegular(SpectralEntropyError):
    pass


class NotBipartite(SpectralEntropyError):
    pass


class NotConnected(SpectralEntropyError):
    pass


class TooSmall(SpectralEntropyError):
    pass


class TooLarge(SpectralEntropyError):
    pass


class TooManyEdges(SpectralEntropyError):
    pass
