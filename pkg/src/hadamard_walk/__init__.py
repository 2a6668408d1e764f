"""Exact and asymptotic amplitudes of the Hadamard walk on the line."""
from .analysis import compare, limiting_density, moments, transition_width
from .asymptotics import (SpinorEstimate, osc_correction, psi_airy, psi_exponential,
                          psi_oscillatory)
from .config import DEFAULT, Config, load_config
from .errors import AccuracyError, DomainError, RegimeError, ResourceError, WalkError
from .exact import ExactAmplitude, StepOrder, WalkState, evolve, path_sum_amplitude, probability
from .jacobi import jacobi_at_zero, psi_closed_form
from .regimes import Regime, RegimeLabel, classify
from .saddle import descent_contour, saddle_points
from .spectral import coin_eigs, psi_fourier, stationary_k
