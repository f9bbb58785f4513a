"""Multimodal traffic-series classifier built from frequency-domain branches."""
from .checkpoint import load_checkpoint, save_checkpoint
from .config import RunConfig, dump_config, load_config, parse_config
from .data import (
    DatasetSplit,
    TimeSeriesInstance,
    archive_split,
    label_congestion,
    load_archive,
    load_speed_matrix,
    make_folds,
    parse_ucr_ts,
)
from .errors import ParseError, TrainingDiverged, ValidationError
from .experiment import export_features, run_ablation, run_experiment
from .metrics import MetricsReport, aggregate, confusion_matrix
from .model import ModelSpec, MTPModel
from .spectral import (
    ComplexSpectrum,
    build_filterbank,
    fft_forward,
    hamming_window,
    ifft_inverse,
    js_delta,
    spectral_average_pool,
    spectrum_compress,
)
from .train import TrainConfig, train_epochs

__version__ = "0.1.0"

__all__ = [
    "aggregate",
    "archive_split",
    "build_filterbank",
    "ComplexSpectrum",
    "confusion_matrix",
    "DatasetSplit",
    "dump_config",
    "export_features",
    "fft_forward",
    "hamming_window",
    "ifft_inverse",
    "js_delta",
    "label_congestion",
    "load_archive",
    "load_checkpoint",
    "load_config",
    "load_speed_matrix",
    "make_folds",
    "MetricsReport",
    "ModelSpec",
    "MTPModel",
    "parse_config",
    "parse_ucr_ts",
    "ParseError",
    "run_ablation",
    "run_experiment",
    "RunConfig",
    "save_checkpoint",
    "spectral_average_pool",
    "spectrum_compress",
    "TimeSeriesInstance",
    "train_epochs",
    "TrainConfig",
    "TrainingDiverged",
    "ValidationError",
]
