"""Overpartitions with Gordon-type difference conditions: enumeration, exact
q-series, and the bijections relating them."""

from .core import (
    ClassParams, DomainError, GordonMarking, Overpartition, Part, format_overpartition, frequency,
    gordon_mark, max_mark, parse_overpartition, window,
)

__all__ = [
    "ClassParams", "DomainError", "GordonMarking", "Overpartition", "Part", "format_overpartition",
    "frequency", "gordon_mark", "max_mark", "parse_overpartition", "window",
]
