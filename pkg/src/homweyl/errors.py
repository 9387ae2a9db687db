"""Exception hierarchy shared by the kernel, the algorithms and the CLI."""


class WeylError(Exception):
    """Base class for every error raised by homweyl."""


class DimensionError(WeylError, ValueError):
    """Operands live in Weyl algebras with different numbers of variables."""


class AlgorithmError(WeylError):
    """An ideal algorithm could not run on the given input."""


class Stalled(AlgorithmError):
    """A difference step annihilated a non-constant coefficient.

    Happens only for n >= 2, when the twist fixes a non-constant polynomial
    in the y's, e.g. y1 + y2 under k = (1, -1).
    """


class ZeroInput(AlgorithmError):
    pass


class AllKZero(AlgorithmError):
    pass


class KComponentZero(AlgorithmError):
    pass


class NonConstantGenerator(AlgorithmError):
    pass


class EmptyInput(AlgorithmError):
    pass


class CertificateError(WeylError):
    """A certificate does not fit the presentation it is evaluated against."""


class UnsoundNodeError(CertificateError):
    """An AlphaInv node was used although some twist component is zero."""


class ParseError(WeylError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
