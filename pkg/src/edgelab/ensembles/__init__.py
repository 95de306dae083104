"""Wigner ensembles: entry laws, specs, sampling and cumulant machinery."""

from edgelab.ensembles.distributions import (
    FAMILIES,
    EntryDistribution,
    Family,
    cumulant,
    moment,
    moments_to_cumulants,
    sample_entries,
)
from edgelab.ensembles.expansion import cumulant_expansion_residual
from edgelab.ensembles.sampling import WignerMatrix, sample_gaussian, sample_wigner
from edgelab.ensembles.spec import (
    Beta,
    EnsembleSpec,
    SpecCheck,
    SpecReport,
    gaussian_spec,
    goe_spec,
    gue_spec,
    spec_from_mapping,
    spec_to_mapping,
    validate_spec,
    wigner_spec,
)

__all__ = [
    "FAMILIES",
    "Beta",
    "EnsembleSpec",
    "EntryDistribution",
    "Family",
    "SpecCheck",
    "SpecReport",
    "WignerMatrix",
    "cumulant",
    "cumulant_expansion_residual",
    "gaussian_spec",
    "goe_spec",
    "gue_spec",
    "moment",
    "moments_to_cumulants",
    "sample_entries",
    "sample_gaussian",
    "sample_wigner",
    "spec_from_mapping",
    "spec_to_mapping",
    "validate_spec",
    "wigner_spec",
]
