from .commutant import (
    commutant_basis,
    commutator_operator,
    is_trivial_centralizer,
    stacked_centralizer_report,
)
from .estimation import (
    crossing_n,
    draw_sample_set,
    estimate_diversity_probability,
    isotonic_nondecreasing,
)
from .models import CentralizerReport, DiversityEstimate

__all__ = [
    "CentralizerReport",
    "DiversityEstimate",
    "commutant_basis",
    "commutator_operator",
    "crossing_n",
    "draw_sample_set",
    "estimate_diversity_probability",
    "is_trivial_centralizer",
    "isotonic_nondecreasing",
    "stacked_centralizer_report",
]
