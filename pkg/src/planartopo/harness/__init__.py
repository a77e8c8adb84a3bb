"""Random instances, the flood-fill oracle and end-to-end verification."""

from .generate import (
    GenParams,
    horseshoe,
    random_compact,
    random_holed,
    random_horseshoe,
    random_pair,
    random_partner,
    square_ring,
)
from .oracle import oracle_label, same_partition
from .verify import CampaignSummary, Report, certify_at, fuzz_campaign, verify_union

__all__ = [
    "CampaignSummary",
    "GenParams",
    "Report",
    "certify_at",
    "fuzz_campaign",
    "horseshoe",
    "oracle_label",
    "random_compact",
    "random_holed",
    "random_horseshoe",
    "random_pair",
    "random_partner",
    "same_partition",
    "square_ring",
    "verify_union",
]
