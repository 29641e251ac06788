"""Canonical JSON transcripts of scenario runs, and their audit.

Schema version "1". Keys are sorted, there are no timestamps, every
field-sized integer is a decimal string (seeds and share values can
exceed what JSON numbers hold), and small structural integers (party
ids, n, t) stay as JSON numbers. Equal reports serialize to identical
bytes, which is what makes the tamper check meaningful.
"""

from __future__ import annotations

import json

from .attack import ForgeryStrategy, StrategyKind
from .errors import VsslabError
from .numtheory import GroupParams, Mode
from .protocol import (
    Behavior,
    BehaviorKind,
    DealingRound,
    GenSpec,
    ScenarioConfig,
    ScenarioReport,
    assemble_group_key,
    resolve_params,
    run_reconstruction_round,
    run_scenario,
    run_verification_round,
)
from .vss import CommitmentVector, Share, aggregate_public_key

SCHEMA_VERSION = "1"


def canonical_json(doc: dict) -> str:
    """The one serialization everything uses: sorted keys, 2-space indent."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------


def _strategy_to_dict(strategy: ForgeryStrategy) -> dict:
    return {"kind": strategy.kind.value, "multiplier": str(strategy.multiplier)}


def _behavior_to_dict(behavior: Behavior) -> dict:
    doc: dict = {"kind": behavior.kind.value}
    if behavior.kind is BehaviorKind.FALSE_SHARE_DEALER:
        doc["strategy"] = _strategy_to_dict(behavior.strategy)
        doc["targets"] = list(behavior.targets)
    return doc


def _params_ref_to_dict(ref) -> dict:
    if isinstance(ref, str):
        return {"name": ref}
    return {"bits": ref.bits, "mode": ref.mode.value}


def _share_to_dict(share: Share) -> dict:
    if share.provenance is None:
        provenance = {"kind": "honest"}
    else:
        provenance = {"kind": "forged", "strategy": _strategy_to_dict(share.provenance)}
    return {
        "dealer": share.dealer,
        "recipient": share.recipient,
        "value": str(share.value),
        "provenance": provenance,
    }


def report_to_dict(report: ScenarioReport) -> dict:
    config = report.config
    params = report.params
    return {
        "version": SCHEMA_VERSION,
        "config": {
            "scenario": config.scenario,
            "n": config.n,
            "t": config.t,
            "params_ref": _params_ref_to_dict(config.params_ref),
            "seed": str(config.seed),
            "behaviors": {
                str(pid): _behavior_to_dict(config.behaviors[pid])
                for pid in sorted(config.behaviors)
            },
        },
        "params": {
            "mode": params.mode.value,
            "p": str(params.p),
            "g": str(params.g),
            "d": str(params.d),
            "q": str(params.q) if params.q is not None else None,
        },
        "commitments": {
            str(cv.dealer): [str(c) for c in cv.c] for cv in report.commitments
        },
        "shares": [_share_to_dict(s) for s in report.shares],
        "forgery_attempts": [
            {
                "dealer": fa.dealer,
                "recipient": fa.recipient,
                "strategy": _strategy_to_dict(fa.strategy),
                "outcome": fa.outcome,
            }
            for fa in report.forgery_attempts
        ],
        "verification_matrix": [list(row) for row in report.verification_matrix],
        "aggregate_public_key": str(report.aggregate_public_key),
        "reconstructions": {
            str(r.dealer): {
                "pool": list(r.pool),
                "attempts": [
                    {
                        "subset": list(a.subset),
                        "value": str(a.value),
                        "commitment_check": a.commitment_check,
                    }
                    for a in r.attempts
                ],
                "recovered": str(r.recovered) if r.recovered is not None else None,
            }
            for r in report.reconstructions
        },
        "group_key": str(report.group_key) if report.group_key is not None else None,
        "group_key_confirmed": report.group_key_confirmed,
        "verdict": report.verdict.value,
    }


def render_report(report: ScenarioReport) -> str:
    return canonical_json(report_to_dict(report))


# ---------------------------------------------------------------------------
# decoding
# ---------------------------------------------------------------------------


def _strategy_from_dict(doc: dict) -> ForgeryStrategy:
    return ForgeryStrategy(kind=StrategyKind(doc["kind"]), multiplier=int(doc["multiplier"]))


def _behavior_from_dict(doc: dict) -> Behavior:
    kind = BehaviorKind(doc["kind"])
    if kind is BehaviorKind.FALSE_SHARE_DEALER:
        return Behavior(
            kind=kind,
            strategy=_strategy_from_dict(doc["strategy"]),
            targets=tuple(doc["targets"]),
        )
    return Behavior(kind=kind)


def config_from_dict(doc: dict) -> ScenarioConfig:
    ref_doc = doc["params_ref"]
    ref = ref_doc["name"] if "name" in ref_doc else GenSpec(
        bits=ref_doc["bits"], mode=Mode(ref_doc["mode"])
    )
    return ScenarioConfig(
        scenario=doc["scenario"],
        n=doc["n"],
        t=doc["t"],
        params_ref=ref,
        behaviors={int(pid): _behavior_from_dict(b) for pid, b in doc["behaviors"].items()},
        seed=int(doc["seed"]),
    )


def _params_from_dict(doc: dict) -> GroupParams:
    return GroupParams(
        p=int(doc["p"]),
        g=int(doc["g"]),
        d=int(doc["d"]),
        mode=Mode(doc["mode"]),
        q=int(doc["q"]) if doc["q"] is not None else None,
    )


def _share_from_dict(doc: dict) -> Share:
    provenance = None
    if doc["provenance"]["kind"] == "forged":
        provenance = _strategy_from_dict(doc["provenance"]["strategy"])
    return Share(
        dealer=doc["dealer"],
        recipient=doc["recipient"],
        value=int(doc["value"]),
        provenance=provenance,
    )


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


def audit_transcript(raw_text: str) -> list[str]:
    """Every way the transcript disagrees with the library; empty means clean.

    Two layers. Structural: params are revalidated, each verification
    matrix entry, reconstruction attempt, pool, recovered value, group
    key, and verdict is recomputed from the transcript's own shares and
    commitments and compared. Regeneration: the config is re-run from
    its seed and the resulting canonical bytes must equal the input,
    which also catches tampering in fields the structural pass cannot
    cross-check (say, a share held only by a withholding party).
    """
    problems: list[str] = []
    try:
        doc = json.loads(raw_text)
    except json.JSONDecodeError as exc:
        return [f"not valid JSON: {exc}"]

    if doc.get("version") != SCHEMA_VERSION:
        problems.append(f"unsupported schema version {doc.get('version')!r}")
        return problems

    try:
        config = config_from_dict(doc["config"])
        params = _params_from_dict(doc["params"])
        params.validate()
        config.validate(params)
        commitments = tuple(
            CommitmentVector(dealer=int(d), c=tuple(int(x) for x in cs))
            for d, cs in sorted(doc["commitments"].items(), key=lambda kv: int(kv[0]))
        )
        shares = tuple(_share_from_dict(s) for s in doc["shares"])
    except (VsslabError, KeyError, TypeError, ValueError) as exc:
        problems.append(f"transcript structure does not parse cleanly: {exc!r}")
        return problems

    try:
        resolved = resolve_params(config)
        if resolved != params:
            problems.append("params echo does not match the params_ref resolution")

        matrix = run_verification_round(shares, commitments, params)
        claimed_matrix = tuple(tuple(row) for row in doc["verification_matrix"])
        if matrix != claimed_matrix:
            problems.append("verification matrix entries do not recompute")

        aggregate = aggregate_public_key(commitments, params)
        if str(aggregate) != doc["aggregate_public_key"]:
            problems.append("aggregate public key does not recompute")

        dealing = DealingRound(
            polynomials=(), commitments=commitments, shares=shares, forgery_attempts=()
        )
        recomputed = run_reconstruction_round(dealing, matrix, config, params)
        claimed = doc["reconstructions"]
        for rec in recomputed:
            entry = claimed.get(str(rec.dealer))
            if entry is None:
                problems.append(f"dealer {rec.dealer} reconstruction missing")
                continue
            if list(rec.pool) != entry["pool"]:
                problems.append(f"dealer {rec.dealer} share pool does not recompute")
            want_attempts = [
                {
                    "subset": list(a.subset),
                    "value": str(a.value),
                    "commitment_check": a.commitment_check,
                }
                for a in rec.attempts
            ]
            if want_attempts != entry["attempts"]:
                problems.append(f"dealer {rec.dealer} reconstruction attempts do not recompute")
            want_recovered = str(rec.recovered) if rec.recovered is not None else None
            if want_recovered != entry["recovered"]:
                problems.append(f"dealer {rec.dealer} recovered secret does not recompute")

        assembly = assemble_group_key(recomputed, commitments, params, matrix)
        want_key = str(assembly.group_key) if assembly.group_key is not None else None
        if want_key != doc["group_key"]:
            problems.append("group key does not recompute")
        if assembly.confirmed != doc["group_key_confirmed"]:
            problems.append("group key confirmation flag does not recompute")
        if assembly.verdict.value != doc["verdict"]:
            problems.append(
                f"verdict does not recompute (library says {assembly.verdict.value})"
            )
    except (VsslabError, KeyError, TypeError, ValueError, IndexError) as exc:
        problems.append(f"recomputation failed on tampered structure: {exc!r}")

    try:
        regenerated = render_report(run_scenario(config))
    except VsslabError as exc:
        problems.append(f"config does not re-run: {exc!r}")
        return problems
    if regenerated != raw_text:
        problems.append("transcript differs from deterministic regeneration of its config")
    return problems
