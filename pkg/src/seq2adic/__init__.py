"""Exact 2-adic complexity of generalized binary sequences of order 2."""

from .adic import (
    ComplexityReport,
    GaussSums,
    MersenneRing,
    analyze,
    closed_form,
    definitional_complexity,
    eq2_lhs_rhs,
    gauss_sums,
    lower_bound,
    s_of_two,
    shortcut_conditions,
)
from .numtheory import (
    InvalidPairError,
    PrimePair,
    RangeExceededError,
    gcd,
    is_prime,
    legendre_symbol,
    mod_mersenne,
    neg_one_symbol,
    odd_part,
)
from .sequence import BinarySequence, ResidueClass, classify, generate, ones_count
from .verify import CheckResult, VerificationCertificate, find_nontrivial, sweep, verify_pair

__version__ = "0.1.0"
