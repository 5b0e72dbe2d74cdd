"""Certified deficiency intervals.

The lower end is always witnessed by a found presentation; the upper end is
b1 minus a lower bound for b2 (default 0, nothing better is computable from
a single non-aspherical presentation).  An asphericity certificate collapses
the interval to 1 - chi of the certified complex: user-asserted, or granted
automatically for one-relator presentations whose relator is not a proper
power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCertificate
from .linalg import rank_over_Q
from .tietze import tietze_simplify

CERT_NONE = "none"
CERT_ASSERTED = "aspherical-asserted"
CERT_ONE_RELATOR = "aspherical-validated-one-relator"


@dataclass(frozen=True)
class DeficiencyInterval:
    lower: int
    upper: int
    certificate: str

    def __post_init__(self):
        assert self.lower <= self.upper

    @property
    def is_point(self):
        return self.lower == self.upper

    def to_json(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "certificate": self.certificate,
        }


def first_betti_number(p):
    """b1 of the presented group: generators minus rational relator rank."""
    matrix = p.abelianized_relator_matrix()
    rank = rank_over_Q(matrix) if matrix else 0
    return p.num_generators - rank


def resolve_certificate(p, aspherical):
    """Certificate level for a presentation.

    aspherical=True asserts the flag (validated for one-relator input, where
    a proper-power relator is rejected); with no flag, one-relator
    presentations with a non-proper-power relator are granted automatically.
    """
    one_relator = p.num_relators == 1
    if one_relator:
        proper = p.relators[0].is_proper_power()
        if aspherical and proper:
            raise InvalidCertificate(
                "one-relator certificate rejected: the relator is a proper power"
            )
        if not proper:
            return CERT_ONE_RELATOR
    if aspherical:
        return CERT_ASSERTED
    return CERT_NONE


def deficiency_interval(p, aspherical=False, effort=50, b2_lower=0):
    """Certified interval [lower, upper] for the deficiency of the group.

    lower: best |generators| - |relators| found by simplification.
    upper: b1 - b2_lower, replaced by 1 - chi of the given complex when an
    asphericity certificate applies (then the interval is a point).
    """
    certificate = resolve_certificate(p, aspherical)
    lower = tietze_simplify(p, effort).deficiency_datum()
    if certificate != CERT_NONE:
        value = p.deficiency_datum()  # 1 - chi of the certified 2-complex
        if lower > value:
            raise InvalidCertificate(
                "certificate contradicts an achieved lower bound; "
                "the complex cannot be aspherical"
            )
        return DeficiencyInterval(lower=value, upper=value, certificate=certificate)
    upper = first_betti_number(p) - b2_lower
    assert lower <= upper, "lower bound exceeded b1-based upper bound"
    return DeficiencyInterval(lower=lower, upper=upper, certificate=certificate)
