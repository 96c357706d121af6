"""Readers and writers for images, masks, string matrices, CSV and reports."""

from .pgm import read_image, read_pgm, write_image, write_pgm, write_plane
from .reports import write_reports
from .tabular import read_dataset, read_path_points, write_dataset, write_path
from .text import read_matrices, read_octet_pair, write_masks, write_matrices

__all__ = [
    'read_pgm', 'write_pgm', 'read_image', 'write_image', 'write_plane',
    'read_dataset', 'write_dataset', 'write_path', 'read_path_points',
    'read_matrices', 'write_matrices', 'read_octet_pair', 'write_masks',
    'write_reports',
]
