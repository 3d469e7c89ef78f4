"""Certificate rules, the per-word classifier and verification suites."""

from .analyze import InternalContradiction, RuleStep, SearchHit, Verdict, analyze, search
from .endgames import (
    WITNESS_ENV,
    EndgameResult,
    Witness,
    check_witness,
    default_witness_path,
    endgame_k1,
    find_witness,
    load_witness,
    low_index_endgame,
)
from .essential import PreconditionError, SuiteCheck, essential_cyclic_suite, kernel_table, z12_images
from .rules import (
    EXPECTED_M,
    CellData,
    CertificateItem,
    GateFiring,
    SigmaFormCheck,
    TauFormCheck,
    cell_data,
    check_sigma_form,
    check_tau_form,
    dual_root_certificate,
    mod12_check,
    repeated_root_gate,
)
from .suites import CORRUPTIONS, SUITES, verify_suite
