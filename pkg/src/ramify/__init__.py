"""Ramification filtrations, conductors and depth for cyclic p-extensions of
complete discretely valued fields with imperfect residue field."""

__version__ = "0.1.0"

from .cdvf import DEFAULT_PRECISION, Precision  # noqa: E402
from .errors import PrecisionExhausted, RamifyError, ValidationError  # noqa: E402
from .extension import CaseLabel, ExtensionSpec, GaloisExtension, build_extension  # noqa: E402
from .ramfilt import case_label, compute_ramification  # noqa: E402
from .conductor import depth, faithful_conductor, hyodo_bounds, kato_conductor  # noqa: E402

__all__ = [
    "__version__",
    "DEFAULT_PRECISION",
    "Precision",
    "PrecisionExhausted",
    "RamifyError",
    "ValidationError",
    "CaseLabel",
    "ExtensionSpec",
    "GaloisExtension",
    "build_extension",
    "case_label",
    "compute_ramification",
    "depth",
    "faithful_conductor",
    "hyodo_bounds",
    "kato_conductor",
]
