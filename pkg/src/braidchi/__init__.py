"""Euler characteristics of proper relative braid classes.

The pipeline turns a braid word or an anchor diagram into a finite cube
complex modelling its class fiber, computes the Conley-index style pairs
(N, N^-) per component, and takes relative GF(2) homology; the resulting
Euler characteristic is an invariant of the class, and a nonzero value
forces closed integral curves of any vector field leaving the skeleton
invariant.
"""

from .diagrams import DiscreteRelativeBraid, augment, crossing_report, refine, word_to_diagram
from .homology import HomologyResult, euler_characteristic
from .words import BraidWord, left_normal_form, minimal_positive_twists, parse_word

__all__ = [
    "BraidWord",
    "DiscreteRelativeBraid",
    "HomologyResult",
    "augment",
    "crossing_report",
    "euler_characteristic",
    "left_normal_form",
    "minimal_positive_twists",
    "parse_word",
    "refine",
    "word_to_diagram",
]
