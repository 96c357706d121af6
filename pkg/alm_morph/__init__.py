"""
Active Learning Method with morphological narrow paths

Main API:
    Experiment - Pipeline run over a dataset
    ExperimentResults - Pipeline run results dataclass
    load_config - Configuration loading helper
    fit, predict - Modeling pass and MISO prediction
"""

from .experiment import Experiment, ExperimentResults
from .config import load_config
from .alm import fit, predict

__all__ = ['Experiment', 'ExperimentResults', 'load_config', 'fit', 'predict']
__version__ = '0.1.0'
