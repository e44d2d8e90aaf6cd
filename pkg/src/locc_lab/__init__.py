"""locc-lab: exact analysis of entanglement transformations.

Decides deterministic convertibility between bipartite pure states under
local operations and classical communication, computes optimal conclusive
conversion probabilities, classifies incomparable pairs by their many-copy
behaviour, and verifies or searches for entanglement catalysts - all in
exact rational arithmetic on multiplicity-compressed Schmidt spectra.
"""

from .catalog import CATALOG, fixture_names, load_fixture
from .catalysis import (
    CatalystSearchConfig,
    catalyzes,
    grid_candidates,
    multicopy_elocc_check,
    search_catalyst,
)
from .majorization import (
    Comparability,
    compare,
    majorized_by,
    majorized_by_dense,
    nielsen_deterministic,
    vidal_pmax,
    vidal_pmax_dense,
)
from .multicopy import (
    BaselineNotDeterministic,
    ExtremalWitness,
    PairClassification,
    PairKind,
    PmaxScan,
    PmaxScanRow,
    classify_pair,
    conjecture_scan,
    find_min_deterministic_k,
    multicopy_necessary,
    pmax_mes,
    pmax_scan,
    strong_incomparability_witness,
)
from .spectrum import (
    MemoryCapExceeded,
    NegativeEntry,
    OracleCapExceeded,
    Rational,
    SchmidtSpectrum,
    SumNotOne,
    as_rational,
    default_memory_cap,
    entropy,
    make_spectrum,
    maximally_entangled,
    tensor_power,
    tensor_power_dense,
    tensor_product,
)
from .statefile import StateFile, StateFileError, load_state, read_state

__version__ = "0.1.0"

__all__ = [
    "BaselineNotDeterministic",
    "CATALOG",
    "CatalystSearchConfig",
    "Comparability",
    "ExtremalWitness",
    "MemoryCapExceeded",
    "NegativeEntry",
    "OracleCapExceeded",
    "PairClassification",
    "PairKind",
    "PmaxScan",
    "PmaxScanRow",
    "Rational",
    "SchmidtSpectrum",
    "StateFile",
    "StateFileError",
    "SumNotOne",
    "as_rational",
    "catalyzes",
    "classify_pair",
    "compare",
    "conjecture_scan",
    "default_memory_cap",
    "entropy",
    "find_min_deterministic_k",
    "fixture_names",
    "grid_candidates",
    "load_fixture",
    "load_state",
    "majorized_by",
    "majorized_by_dense",
    "make_spectrum",
    "maximally_entangled",
    "multicopy_elocc_check",
    "multicopy_necessary",
    "nielsen_deterministic",
    "pmax_mes",
    "pmax_scan",
    "read_state",
    "search_catalyst",
    "strong_incomparability_witness",
    "tensor_power",
    "tensor_power_dense",
    "tensor_product",
    "vidal_pmax",
    "vidal_pmax_dense",
]
