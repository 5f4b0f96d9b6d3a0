"""Exception hierarchy shared across the package."""


class QDogError(ValueError):
    """Base class for every error raised by qdog."""


class DomainError(QDogError):
    """An argument lies outside the domain of a mathematical function."""


class ParameterError(QDogError):
    """Invalid filter or pipeline parameters."""


class DegenerateKernelError(QDogError):
    """A sampled kernel has zero total weight and cannot be normalized."""


class KernelTooLargeError(QDogError):
    """Kernel side exceeds twice the smaller image dimension."""


class NonSeparableError(QDogError):
    """Separable convolution requested for a kernel that does not factor."""


class PNMError(QDogError):
    """Base class for anymap decoding failures; ``offset`` is the byte position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class MalformedHeaderError(PNMError):
    pass


class TruncatedDataError(PNMError):
    pass


class UnsupportedMagicError(PNMError):
    pass


class MaxvalOutOfRangeError(PNMError):
    pass
