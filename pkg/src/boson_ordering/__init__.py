"""Exact standard, p- and omega-generalized normal ordering of words in a and a†."""

from .bijections import (
    contraction_to_partition,
    enumerate_Fnk,
    lemma1_forward,
    lemma1_inverse,
    lemma2_forward,
    lemma2_inverse,
    rises,
)
from .contractions import (
    CapacityError,
    Contraction,
    DotMonomial,
    Edge,
    contraction_word,
    count_contractions,
    crossing_number,
    double_dot,
    enumerate_contractions,
    p_degree,
    r_degree,
)
from .egf import egf_Spk, egf_Sxy, extract_egf_coefficient
from .normal_order import (
    NormalForm,
    normal_order_number_power_p,
    normal_order_omega,
    normal_order_p,
    normal_order_standard,
)
from .polyp import PolyP
from .stirling import (
    bell_number,
    bell_omega,
    bell_polynomial,
    stirling2,
    stirling_knm,
    stirling_omega,
    stirling_p_docagne,
    stirling_p_rec,
)
from .weights import (
    WeightMonomial,
    WeightPolynomial,
    WeightSequence,
    contraction_weight_monomial,
    predefined_sequence,
    specialize,
)
from .words import Letter, Word, number_operator_word, parse_word, word_counts

__version__ = "0.1.0"
