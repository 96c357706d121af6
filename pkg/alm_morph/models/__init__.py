"""Domain models for alm_morph."""

from .image import BinaryImage, MaskCell, MaskOctet, TriValuedMask
from .matrix import Layer, StringMatrix
from .plane import DataPlane, Dataset, Delegate, MisoModel, NarrowPath

__all__ = [
    'BinaryImage', 'MaskCell', 'MaskOctet', 'TriValuedMask',
    'Layer', 'StringMatrix',
    'Dataset', 'DataPlane', 'Delegate', 'NarrowPath', 'MisoModel',
]
