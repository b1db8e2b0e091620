from typing import Any, Dict

from common.utils import format_rational
from diagram_operations.data_definitions import ChordDiagram, Tangle
from diagram_operations.serializers import diagram_to_document, tangle_to_document

from .data_definitions import DeltaReport, RankReport, WeightSystemReport


def counterexample_to_document(counterexample: Any) -> Any:
    if isinstance(counterexample, Tangle):
        return tangle_to_document(counterexample)
    if isinstance(counterexample, ChordDiagram):
        return diagram_to_document(counterexample)
    if isinstance(counterexample, tuple):
        return [counterexample_to_document(part) for part in counterexample]
    return counterexample


def weight_system_report_to_document(report: WeightSystemReport, max_chords: int) -> Dict[str, Any]:
    document = {"ok": report.ok, "max_chords": max_chords, "checked": report.checked}
    if not report.ok:
        document["reason"] = report.reason
        document["value"] = format_rational(report.value)
        document["counterexample"] = counterexample_to_document(report.counterexample)
    return document


def rank_report_to_document(report: RankReport) -> Dict[str, Any]:
    bound = report.bound if isinstance(report.bound, int) else format_rational(report.bound)
    return {"k": report.k, "family": report.family, "size": list(report.size), "rank": report.rank, "bound": bound, "ok": report.ok}


def delta_report_to_document(report: DeltaReport) -> Dict[str, Any]:
    document = {
        "n": report.n,
        "theta": format_rational(report.theta),
        "samples": report.samples,
        "failures": report.failures,
        "ok": report.ok,
    }
    if report.counterexample is not None:
        document["counterexample"] = tangle_to_document(report.counterexample)
    return document
