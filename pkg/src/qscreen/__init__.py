"""qscreen: exact contour representation of q-deformed enveloping Lie
superalgebras, with machine-verified Hopf structure and a singular-vector
scanner.

Everything is computed over an exact field of rational-coefficient q/z
monomial quotients; no floating point, no polynomial gcd.
"""

from .phase import (
    ArityMismatchError,
    DenominatorVanishesError,
    PhaseScalar,
    q_number,
    q_power,
    z_power,
)
from .rootdata import (
    CATALOG,
    ConfigError,
    RootDatum,
    Weight,
    datum_from_config,
    datum_to_config,
    load_datum,
    resolve_algebra,
)
from .contour import (
    DepthExceededError,
    FaultInjection,
    ModuleContext,
    apply_cartan,
    apply_lowering,
    apply_raising,
    apply_raising_hat,
    apply_word,
    parse_word,
    render_vector,
    state,
    vacuum,
    word_token,
)
from .hopf import (
    TensorContext,
    VerificationReport,
    act_tensor_element,
    act_word_pair,
    antipode_word,
    braid_phase,
    coproduct_letter,
    coproduct_word,
    counit_word,
    run_suite,
    split_lowering,
    tensor_state,
    verify_coproduct,
    verify_hopf_axioms,
    verify_relations,
)
from .serre import ScanResult, enumerate_words, singular_scan, specialize_scan

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError", "DenominatorVanishesError", "PhaseScalar",
    "q_number", "q_power", "z_power",
    "CATALOG", "ConfigError", "RootDatum", "Weight", "datum_from_config",
    "datum_to_config", "load_datum", "resolve_algebra",
    "DepthExceededError", "FaultInjection", "ModuleContext", "apply_cartan",
    "apply_lowering", "apply_raising", "apply_raising_hat", "apply_word",
    "parse_word", "render_vector", "state", "vacuum", "word_token",
    "TensorContext", "VerificationReport", "act_tensor_element",
    "act_word_pair", "antipode_word", "braid_phase", "coproduct_letter",
    "coproduct_word", "counit_word", "run_suite", "split_lowering",
    "tensor_state", "verify_coproduct", "verify_hopf_axioms",
    "verify_relations",
    "ScanResult", "enumerate_words", "singular_scan", "specialize_scan",
]
