import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, Dict, Union

from .errors import DocumentParseError


class EnhancedJSONEncoder(json.JSONEncoder):
    def default(self, o):
        if is_dataclass(o):
            return asdict(o)
        if isinstance(o, Fraction):
            return format_rational(o)
        return super().default(o)


def format_rational(value: Union[Fraction, int]) -> str:
    """Normalized "p/q" form, "p" when the denominator is 1"""
    return str(Fraction(value))


def parse_rational(value: Union[str, int]) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentParseError("Expected a rational as a 'p/q' string or an integer, got {value!r}".format(value=value))
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentParseError("Malformed rational {value!r}: {error}".format(value=value, error=e))


def load_json_document(raw: str) -> Dict[str, Any]:
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as e:
        raise DocumentParseError("Invalid JSON: {msg}".format(msg=e.msg), line=e.lineno, column=e.colno)
    if not isinstance(document, dict):
        raise DocumentParseError("A document must be a JSON object")
    return document


def render_document(document: Any, output_format: str = "json") -> str:
    """One line per document: compact JSON, or the values separated by tabs"""
    if output_format == "tsv":
        if isinstance(document, dict):
            values = document.values()
        else:
            values = [document]
        cells = []
        for value in values:
            if isinstance(value, str):
                cells.append(value)
            else:
                cells.append(json.dumps(value, cls=EnhancedJSONEncoder, separators=(",", ":")))
        return "\t".join(cells)
    return json.dumps(document, cls=EnhancedJSONEncoder, separators=(",", ":"))
