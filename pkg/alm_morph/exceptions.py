"""Custom exceptions for the alm_morph package."""


class AlmMorphError(Exception):
    """Base exception for alm_morph package."""
    pass


class ConfigurationError(AlmMorphError):
    """Configuration validation or loading error."""
    pass


class FormatError(AlmMorphError):
    """Malformed image, mask, matrix or CSV input."""
    pass


class NonConvergenceError(AlmMorphError):
    """Iterated thinning or thickening hit its pass cap without a fixed point."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class NonUniformDepthError(AlmMorphError):
    """String-matrix cells of differing lengths."""
    pass


class ChainTooLargeError(AlmMorphError):
    """Structuring chain larger than the layer it is applied to."""
    pass


class EmptyDatasetError(AlmMorphError):
    """Dataset with no samples."""
    pass


class ZeroTotalWeightError(AlmMorphError):
    """Center-of-gravity merge with zero total weight."""
    pass


class NoDelegateError(AlmMorphError):
    """Narrow path without any delegate to evaluate."""
    pass


class ExperimentError(AlmMorphError):
    """Experiment execution error."""
    pass
