"""Video quality metrics, distortion models and wireless channel sweeps.

Frames are 2-D ``uint8`` numpy arrays of luma samples, shaped (height, width).
Videos are lists of such frames.
"""

from ._core import (
    BrisqueModel,
    DimensionMismatch,
    InsufficientData,
    IoError,
    ModelFormatError,
    NiqeModel,
    ParseError,
    UndefinedCorrelation,
    awgn,
    bits_per_symbol,
    block_loss,
    blockiness,
    blur,
    brisque_features,
    gaussian_blur,
    jpeg,
    load,
    load_pgm_bytes,
    load_y4m_bytes,
    mse,
    natural_scene,
    pearson,
    psnr,
    run_sweep,
    save_pgm,
    save_y4m,
    score,
    ssim,
    synth_video,
    transmit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
