"""Text parsing and number formatting utilities."""

import math
from enum import Enum
from typing import Any


def parse_complex(text: str) -> complex:
    """Parse a complex point from the command line.

    Args:
        text (str): "re,im", a single real number, or a Python complex literal

    Returns:
        complex: The parsed point

    Examples:
        "1,0" -> (1+0j)
        "0.5" -> (0.5+0j)
        "0.3+0.4j" -> (0.3+0.4j)
    """
    text = text.strip()
    if "," in text:
        re_part, im_part = text.split(",", 1)
        return complex(float(re_part), float(im_part))
    try:
        return complex(float(text), 0.0)
    except ValueError:
        return complex(text.replace(" ", ""))


def format_float(value: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    return f"{value:.17g}"


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars, complex numbers, enums and non-finite floats for JSON."""
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, "as_dict"):
        return to_jsonable(value.as_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "tolist"):
        return to_jsonable(value.tolist())
    if isinstance(value, complex):
        return {"re": to_jsonable(value.real), "im": to_jsonable(value.imag)}
    if isinstance(value, float) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    return value
