"""
Per-complex telemetry for enumeration sweeps
"""

from typing import Optional

from ..base_telemetry import BaseTelemetryCollector
from ..combinatorics import Verdict
from ..complex_core import SimplicialComplex, f_vector
from ..verify import Certificate, complex_id


def _verdict(certificate: Optional[Certificate]) -> Optional[str]:
    if certificate is None:
        return None
    return "pass" if certificate.passed else "fail"


class SweepTelemetryCollector(BaseTelemetryCollector):
    """Records one line per complex processed by `enumerate --stream`."""

    def __init__(self, run_id: str, directory: Optional[str] = None):
        super().__init__(run_id, directory)
        self.processed = 0

    def start_complex(self, K: SimplicialComplex) -> str:
        item_id = complex_id(K)
        self.start_item(item_id)
        return item_id

    def end_complex(
        self,
        K: SimplicialComplex,
        verdict: Verdict,
        certificate: Optional[Certificate] = None,
        linear: Optional[str] = None,
        linear_certificate: Optional[Certificate] = None,
    ):
        checked = (certificate, linear_certificate)
        failed = any(c is not None and not c.passed for c in checked)
        record = self.end_item(
            complex_id(K),
            "failed" if failed else "passed",
            index=self.processed,
            f_vector=list(f_vector(K)),
            decision=verdict.decision.value,
            nu=verdict.nu,
            certificate=_verdict(certificate),
            linear=linear,
            linear_certificate=_verdict(linear_certificate),
        )
        self.processed += 1
        self.output_record(record)
