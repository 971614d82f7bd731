"""Circuit-cover certificates for the dual phosphorylation network."""

from ._sonc_mono import (
    CoverHits,
    DomainError,
    Eta,
    SignCase,
    ab_values,
    certify,
    classify,
    closed_form_bound,
    cover_keys,
    enumerate_covers,
    hex_coefficients,
    reduce,
    sample_case4,
    selftest,
    swap,
    table1,
    theta_sum,
)

__all__ = [
    "CoverHits",
    "DomainError",
    "Eta",
    "SignCase",
    "ab_values",
    "certify",
    "classify",
    "closed_form_bound",
    "cover_keys",
    "enumerate_covers",
    "hex_coefficients",
    "reduce",
    "sample_case4",
    "selftest",
    "swap",
    "table1",
    "theta_sum",
]
