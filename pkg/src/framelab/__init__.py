"""Frame-theoretic analysis of rescaled iterative systems.

The package models normal operators through their finite atomic spectral
data, materializes truncated systems ``{c_n A^n x}`` with several scaling
rules, computes frame bounds and canonical duals, and runs the decidable
checks (separation, windowed rescaling bounds, circle concentration) that
govern when such systems can be frames.
"""

from ._backend import kernel_backend
from .conditions import (ConditionReport, RadiiProfile, carleson_delta,
                         circle_concentration, condition_iii_check,
                         hardy_evaluate, rescaling_condition_b,
                         singleton_ratio_check, syndetic_gap,
                         uniform_separation_split)
from .errors import *  # noqa: F401,F403  (the exception hierarchy is the API)
from .experiments import (DEFAULT_RNG_SEED, SweepConfig, SweepReport, SweepRow,
                          norm_ratio_experiment, preset_annulus, preset_circle,
                          preset_interpolating_diagonal, run_sweep)
from .frames import (FrameReport, analysis_coefficients, bessel_bound,
                     canonical_dual, completeness_rank, frame_bounds,
                     synthesis_matrix)
from .numkernel import (hermitian_extreme_eigs, log_sum_exp,
                        solve_hermitian_psd, svd_extremes)
from .operators import (NormalOperatorModel, SpectralAtom, apply,
                        is_invertible, kernel_component, norm_ratio_sequence,
                        power_norm_log, power_norm_log_table, support_radius,
                        weighted_inner, weighted_norm)
from .systems import (ExplicitScaling, IndexSet, IterativeSystemSpec,
                      Normalized, ShiftedNormalized, SystemVector, Unscaled,
                      build_system, normalized_vector, scaling_coefficients)

__version__ = "0.1.0"
