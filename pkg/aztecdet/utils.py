from fractions import Fraction
from typing import Dict, Optional, Union

from aztecdet.dataclasses import Rational


def _format_fraction(q: Optional[Rational]) -> Optional[str]:
    if q is None:
        return None
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    return Fraction(text)


def _parse_params(text: Optional[str]) -> Dict[str, Union[int, str]]:
    """
    ``"m=2,l=2,a=1"`` -> ``{"m": 2, "l": 2, "a": 1}``; non-integer values stay strings.
    """
    params: Dict[str, Union[int, str]] = {}
    if not text:
        return params
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"parameter {item!r} is not of the form name=value")
        name, value = (part.strip() for part in item.split("=", 1))
        try:
            params[name] = int(value)
        except ValueError:
            params[name] = value
    return params


def _short(q: Optional[Rational], width: int = 40) -> str:
    text = "-" if q is None else str(Fraction(q))
    return text if len(text) <= width else f"{text[: width // 2 - 2]}...{text[-(width // 2 - 1):]}"
