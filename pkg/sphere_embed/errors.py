"""
Exception hierarchy for sphere-embed
"""


class SphereEmbedError(Exception):
    """Base class for every error raised by sphere-embed."""


class InputError(SphereEmbedError):
    """Input outside an operation's contract. The CLI maps it to exit code 2."""


class VertexOutOfRangeError(InputError):
    pass


class EmptyGroundSetError(InputError):
    pass


class EmptyFaceInFamilyError(InputError):
    pass


class GroundSetTooLargeError(InputError):
    pass


class WrongGroundSetSizeError(InputError):
    pass


class VoidComplexError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


class UnplacedVertexError(InputError):
    pass


class NotOnSphereError(InputError):
    pass


class InvalidParameterError(InputError):
    pass


class MalformedInputError(InputError):
    pass


class ConfigError(InputError):
    pass


class SearchBudgetExceededError(InputError):
    pass


class OutOfScopeError(InputError):
    """Raised by constructions that only apply to complexes on at most d+3 vertices."""


class ConstructionError(SphereEmbedError):
    """An exact construction could not be completed."""


class ConstructionFailedError(ConstructionError):
    pass


class DegenerateHullError(ConstructionError):
    pass


class ViewpointSearchFailedError(ConstructionError):
    pass


class CertificateError(SphereEmbedError):
    """An exact self-check of a computed result failed."""
