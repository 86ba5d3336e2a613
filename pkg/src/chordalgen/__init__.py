"""Exact counting and uniform sampling of chordal graphs: labeled, with a prescribed
automorphism, and unlabeled."""

from .counting import ChordalCounter, CounterKey, DomainError, count_fixed, count_labeled, counter_for
from .exactmath import RandomStream, binomial, count_R, derangements, pow2_ceil, uniform_below, weighted_choice
from .graph import (
    EvaporationSequence,
    LabeledGraph,
    Permutation,
    evaporation_sequence,
    glue,
    is_automorphism,
    is_chordal,
    period,
    phi,
)
from .sampling import sample_fixed
from .unlabeled import BoundTable, BoundViolation, UnlabeledSampler, build_bounds, sample_perm, sample_unlabeled

__version__ = "0.1.0"
