"""Signal decomposition by adaptive spectrum segmentation with ideal
band-pass filtering, alongside empirical-wavelet and Fourier-scan
baselines and a benchmark harness."""

__version__ = "0.1.0"

from .benchmark import (
    METHODS,
    component_rmses,
    decompose_with,
    match_modes,
    q_map,
    q_value,
    rmse,
    tfr_comparison,
    time_methods,
)
from .efd import (
    IdealFilterBank,
    apply_ideal_bank,
    build_ideal_bank,
    efd_decompose,
)
from .errors import (
    EfdkitError,
    EmptyBandError,
    InvalidInputError,
    InvalidSegmentationError,
    NumericError,
    SegmentationInfeasibleError,
)
from .ewt import (
    EwtFilterBank,
    beta,
    build_filter_bank,
    compute_gamma,
    ewt_decompose,
    reconstruction_residual,
)
from .fdm import (
    BandAnalytic,
    FibfSet,
    band_analytic,
    fdm_htl,
    fdm_lth,
    fibf_tracks,
    fourier_coefficients,
)
from .modes import ModeSet
from .segmentation import (
    MagnitudeProfile,
    Segmentation,
    find_local_maxima,
    segment_improved,
    segment_local_maxima,
    segment_lowest_minima,
)
from .spectral import (
    AnalyticSignal,
    Signal,
    Spectrum,
    analytic_signal,
    forward_spectrum,
    inverse_spectrum,
    mirror_extend,
)
from .testsignals import (
    MODE_COUNTS,
    TestSignalSpec,
    generate,
    sig1_spec,
    sig2_spec,
    sig3_spec,
    sig4_spec,
    sig5_spec,
    sig6_spec,
)
from .tfr import (
    TfrRaster,
    TfrTrack,
    benchmark_tfr,
    mode_tfr,
    raster_rmse,
    raster_tfr,
)
