"""Hilbert-Samuel functions and coefficient identities for dd-sequences"""
from .samuel import (
    HilbertSamuelRecord,
    HilbertSamuelVerification,
    IdentityCheck,
    InvarianceReport,
    I_n,
    I_n_cohomological,
    I_n_invariance,
    compare_gcm_closed_form,
    gcm_hs_closed_form,
    hs_coefficients,
    hs_function,
    hs_values,
    verify_hs_identities,
)

__all__ = [
    "hs_function",
    "hs_values",
    "HilbertSamuelRecord",
    "hs_coefficients",
    "IdentityCheck",
    "HilbertSamuelVerification",
    "verify_hs_identities",
    "I_n",
    "I_n_cohomological",
    "InvarianceReport",
    "I_n_invariance",
    "gcm_hs_closed_form",
    "compare_gcm_closed_form",
]
