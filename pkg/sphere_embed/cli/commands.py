"""
Command implementations: each takes a RunConfig and returns (payload, exit code)
"""

import sys
from collections import Counter, defaultdict
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from ..base_telemetry import new_run_id
from ..combinatorics import (
    Decision,
    decide_embeddability,
    decide_space_embeddability,
    ekr_embeddability,
    geodesic_dimension_bound,
    max_intersecting_family,
    star_family,
)
from ..complex_core import (
    FaceFamily,
    SimplicialComplex,
    boundary_simplex,
    complex_of,
    enumerate_complexes,
    f_vector,
    full_simplex,
    minimal_nonfaces,
    skeleton,
    vkf_complex,
)
from ..errors import ConfigError, InvalidParameterError
from ..geometry import LinearizeStatus, construct_embedding, linearize, pad_placement
from ..placement import Placement
from ..serialization import (
    certificate_to_dict,
    complex_from_dict,
    complex_to_dict,
    crosscheck_to_dict,
    family_to_dict,
    layout_to_dict,
    linearize_to_dict,
    load_json,
    placement_from_dict,
    verdict_to_dict,
    witness_to_dict,
)
from ..verify import (
    Certificate,
    Mode,
    complex_id,
    float_cross_check,
    overlap_witness,
    verify_embedding,
    verify_geodesic_embedding,
    verify_linear_embedding,
)
from .config import RunConfig
from .telemetry import SweepTelemetryCollector

EXIT_OK = 0
EXIT_NO_WITNESS = 1
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_OUT_OF_SCOPE = 4

Result = Tuple[Any, int]

DECISION_EXIT = {
    Decision.EMBEDS: EXIT_OK,
    Decision.NOT_EMBEDDABLE: EXIT_NEGATIVE,
    Decision.OUT_OF_SCOPE: EXIT_OUT_OF_SCOPE,
}


def load_complex(path: str) -> SimplicialComplex:
    return complex_from_dict(load_json(path))


def load_placement(path: str) -> Placement:
    return placement_from_dict(load_json(path))


def _with_cross_check(
    config: RunConfig,
    payload: Dict[str, Any],
    K: SimplicialComplex,
    P: Placement,
    certificate: Certificate,
) -> None:
    if config.cross_check:
        report = float_cross_check(
            K, P, certificate.mode, config.trials, config.seed, certificate=certificate
        )
        payload["cross_check"] = crosscheck_to_dict(report)


def cmd_analyze(config: RunConfig) -> Result:
    K = load_complex(config.complex_path)
    d = config.dim
    verdict = decide_embeddability(K, d)
    family = minimal_nonfaces(K)
    payload = verdict_to_dict(verdict)
    payload.update(
        {
            "complex_id": complex_id(K),
            "minimal_nonfaces": family_to_dict(family)["sets"],
            "f_vector": list(f_vector(K)),
            "ekr_k": ekr_embeddability(K, d) if K.n == d + 3 else None,
            "sphere_bound": geodesic_dimension_bound(K),
            "space": decide_space_embeddability(K, d).value,
        }
    )
    return payload, DECISION_EXIT[verdict.decision]


def cmd_embed(config: RunConfig) -> Result:
    K = load_complex(config.complex_path)
    d = config.dim
    verdict = decide_embeddability(K, d)
    constructible = verdict.decision is Decision.EMBEDS or (
        verdict.decision is Decision.OUT_OF_SCOPE and geodesic_dimension_bound(K) <= d
    )
    if not constructible:
        return verdict_to_dict(verdict), DECISION_EXIT[verdict.decision]

    if not config.linear:
        P, layout = construct_embedding(K.n, minimal_nonfaces(K))
        P = pad_placement(P, d + 1)
        certificate = verify_geodesic_embedding(K, P)
        payload = {
            "decision": verdict.decision.value,
            "status": "sphere",
            "placement": P.to_dict(),
            "layout": layout_to_dict(layout),
            "certificate": certificate_to_dict(certificate),
        }
    else:
        result = linearize(K, d)
        P = result.placement
        if result.status is LinearizeStatus.SPHERE_ONLY:
            certificate = verify_geodesic_embedding(K, P)
        else:
            certificate = verify_linear_embedding(K, P)
        payload = linearize_to_dict(result)
        payload["decision"] = verdict.decision.value
        payload["certificate"] = certificate_to_dict(certificate)
    _with_cross_check(config, payload, K, P, certificate)
    return payload, EXIT_OK if certificate.passed else EXIT_NEGATIVE


def cmd_verify(config: RunConfig) -> Result:
    K = load_complex(config.complex_path)
    P = load_placement(config.placement_path)
    certificate = verify_embedding(K, P, Mode(config.mode))
    payload = certificate_to_dict(certificate)
    _with_cross_check(config, payload, K, P, certificate)
    return payload, EXIT_OK if certificate.passed else EXIT_NEGATIVE


def cmd_witness(config: RunConfig) -> Result:
    K = load_complex(config.complex_path)
    P = load_placement(config.placement_path)
    witness = overlap_witness(K, P)
    if witness is None:
        return None, EXIT_NO_WITNESS
    return witness_to_dict(witness), EXIT_OK


def _int_params(config: RunConfig, count: int, names: str) -> List[int]:
    if len(config.params) != count:
        raise ConfigError(f"generate {config.kind} expects {names}")
    try:
        return [int(p) for p in config.params]
    except ValueError as exc:
        raise ConfigError(f"generate {config.kind} expects integers: {names}") from exc


def cross_complex(sizes: List[int], leftover: int = 0) -> SimplicialComplex:
    """Join of the boundaries of simplices on consecutive blocks, plus a simplex
    on `leftover` further vertices."""
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidParameterError("cross needs positive block sizes")
    n = sum(sizes) + leftover
    blocks = []
    start = 1
    for size in sizes:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return complex_of(n, FaceFamily(n, tuple(blocks)))


def generate_complex(config: RunConfig) -> SimplicialComplex:
    kind = config.kind
    if kind == "vkf":
        (d,) = _int_params(config, 1, "d")
        return vkf_complex(d)
    if kind == "cross":
        if len(config.params) != 1:
            raise ConfigError("generate cross expects p1,p2,...")
        try:
            sizes = [int(p) for p in config.params[0].split(",")]
        except ValueError as exc:
            raise ConfigError("generate cross expects comma-separated sizes") from exc
        return cross_complex(sizes, config.leftover)
    if kind == "star":
        n, k, c = _int_params(config, 3, "n k c")
        return complex_of(n, star_family(n, k, c))
    if kind == "simplex":
        (m,) = _int_params(config, 1, "m")
        if m < 0:
            raise InvalidParameterError("simplex needs m >= 0")
        return full_simplex(m + 1)
    if kind == "boundary":
        (m,) = _int_params(config, 1, "m")
        return boundary_simplex(m)
    if len(config.params) != 2:
        raise ConfigError("generate skeleton expects a complex file and k")
    try:
        k = int(config.params[1])
    except ValueError as exc:
        raise ConfigError("generate skeleton expects an integer k") from exc
    return skeleton(load_complex(config.params[0]), k)


def cmd_generate(config: RunConfig) -> Result:
    return complex_to_dict(generate_complex(config)), EXIT_OK


class SweepTally:
    """Counters for one enumeration sweep."""

    def __init__(self, linear: bool):
        self.linear = linear
        self.complexes = 0
        self.decisions: Counter = Counter()
        self.by_f_vector: Dict[str, Counter] = defaultdict(Counter)
        self.certificate_failures = 0
        self.linear_failures = 0
        self.ekr_violations = 0
        self.sphere_only: List[List[List[int]]] = []

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "complexes": self.complexes,
            "decisions": {d.value: self.decisions.get(d.value, 0) for d in Decision},
            "by_f_vector": {
                key: dict(c) for key, c in sorted(self.by_f_vector.items())
            },
            "certificate_failures": self.certificate_failures,
            "ekr_violations": self.ekr_violations,
        }
        if self.linear:
            payload["linear_failures"] = self.linear_failures
            payload["sphere_only"] = self.sphere_only
        return payload

    @property
    def failures(self) -> int:
        return self.certificate_failures + self.linear_failures + self.ekr_violations


def _sweep_one(
    K: SimplicialComplex,
    d: int,
    tally: SweepTally,
    collector: Optional[SweepTelemetryCollector],
) -> None:
    if collector is not None:
        collector.start_complex(K)
    verdict = decide_embeddability(K, d)
    tally.complexes += 1
    tally.decisions[verdict.decision.value] += 1
    key = ",".join(str(c) for c in f_vector(K))
    tally.by_f_vector[key][verdict.decision.value] += 1
    if K.n == d + 3 and ekr_embeddability(K, d) is not None and not verdict.embeds:
        tally.ekr_violations += 1

    certificate = None
    linear_status = None
    linear_certificate = None
    if verdict.embeds:
        P, _ = construct_embedding(K.n, minimal_nonfaces(K))
        certificate = verify_geodesic_embedding(K, P)
        if not certificate.passed:
            tally.certificate_failures += 1
        if tally.linear:
            result = linearize(K, d)
            linear_status = result.status.value
            if result.status is LinearizeStatus.SPHERE_ONLY:
                tally.sphere_only.append(complex_to_dict(K)["facets"])
                linear_certificate = verify_geodesic_embedding(K, result.placement)
            else:
                linear_certificate = verify_linear_embedding(K, result.placement)
            if not linear_certificate.passed:
                tally.linear_failures += 1
    if collector is not None:
        collector.end_complex(
            K, verdict, certificate, linear_status, linear_certificate
        )


def cmd_enumerate(config: RunConfig) -> Result:
    d = config.enumerate_dim
    tally = SweepTally(config.linear)
    collector = SweepTelemetryCollector(new_run_id()) if config.stream else None
    for K in enumerate_complexes(config.n, sample=config.sample, seed=config.seed):
        _sweep_one(K, d, tally, collector)
    payload = {
        "n": config.n,
        "d": d,
        "mode": "exhaustive" if config.sample is None else "sample",
        "sample": config.sample,
        "seed": config.seed,
    }
    payload.update(tally.to_dict())
    return payload, EXIT_OK if tally.failures == 0 else EXIT_NEGATIVE


def cmd_ekr(config: RunConfig) -> Result:
    size, family = max_intersecting_family(config.n, config.k)
    bound = comb(config.n - 1, config.k - 1)
    payload = {
        "n": config.n,
        "k": config.k,
        "max": size,
        "bound": bound,
        "family": family_to_dict(family)["sets"],
    }
    if size != bound:
        print(f"ERROR: maximum intersecting family has {size} sets, bound is {bound}",
              file=sys.stderr)
        return payload, EXIT_NEGATIVE
    return payload, EXIT_OK


COMMAND_TABLE = {
    "analyze": cmd_analyze,
    "embed": cmd_embed,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
    "ekr": cmd_ekr,
}
