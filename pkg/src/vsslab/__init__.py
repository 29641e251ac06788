"""Desk-scale laboratory for Feldman-style verifiable secret sharing.

Exercises the gap between exponent arithmetic (mod the generator order)
and field arithmetic (mod p): shares forged by adding multiples of
p - 1 pass every commitment check yet corrupt reconstruction, letting a
dealer deny the group key. A hardened prime-order-subgroup mode makes
the same forgery impossible.
"""

from .attack import ForgeryStrategy, StrategyKind, forge_share, predict_corruption
from .errors import VsslabError
from .numtheory import (
    GroupParams,
    Mode,
    factorize,
    gen_params,
    is_prime,
    mod_exp,
    mod_inv,
    multiplicative_order,
)
from .poly import (
    SecretPolynomial,
    eval_integer,
    eval_mod,
    lagrange_weights,
    lagrange_zero,
    sample_polynomial,
)
from .protocol import (
    SCENARIO_NAMES,
    Behavior,
    BehaviorKind,
    GenSpec,
    ScenarioConfig,
    ScenarioReport,
    Verdict,
    assemble_group_key,
    build_scenario,
    reconstruct_dealer_secret,
    run_dealing_round,
    run_scenario,
    run_verification_round,
)
from .registry import get_params, load_registry, registry_names
from .rng import SplitMix64, substream
from .transcript import audit_transcript, canonical_json, render_report, report_to_dict
from .vss import (
    CommitmentVector,
    Share,
    SizeReport,
    aggregate_public_key,
    commit,
    commit_integer,
    commitment_in_group,
    range_check,
    verify_share,
)

__version__ = "0.1.0"
