"""Overpartitions, their text/JSON forms, and the Gordon marking.

An :class:`Overpartition` stores its parts weakly decreasing by value with
the overlined copy (``~``) first inside a run of equal values, the way
overpartitions are usually written: ``10~,8~,8,8,7``.  The difference
conditions are read off this sequence.

The Gordon marking instead scans parts increasing in the order
``1~ < 1 < 2~ < 2 < ...``, which is what :attr:`Part.key` sorts by.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class DomainError(ValueError):
    """An argument lies outside the set an operation is defined on."""


class Part(NamedTuple):
    value: int
    overlined: bool = False

    @property
    def key(self) -> tuple[int, int]:
        # marking order: v~ sorts just below v
        return (self.value, 0 if self.overlined else 1)

    def __str__(self) -> str:
        return f"{self.value}~" if self.overlined else str(self.value)


@dataclass(frozen=True)
class ClassParams:
    """The pair (k, i) indexing every class; requires k >= 2 and 1 <= i <= k."""

    k: int
    i: int

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"k must be at least 2, got k={self.k}")
        if not 1 <= self.i <= self.k:
            raise DomainError(f"i must satisfy 1 <= i <= k, got k={self.k}, i={self.i}")

    @classmethod
    def all_up_to(cls, k_max: int) -> list["ClassParams"]:
        return [cls(k, i) for k in range(2, k_max + 1) for i in range(1, k + 1)]


@dataclass(frozen=True)
class Overpartition:
    parts: tuple[Part, ...] = ()

    def __init__(self, parts: Iterable = ()):
        normalized = []
        for p in parts:
            if not isinstance(p, Part):
                p = Part(*p) if isinstance(p, tuple) else Part(int(p))
            if p.value < 1:
                raise DomainError(f"parts must be positive, got {p.value}")
            normalized.append(p)
        over = Counter(p.value for p in normalized if p.overlined)
        dup = sorted(v for v, c in over.items() if c > 1)
        if dup:
            raise DomainError(f"value {dup[0]} is overlined more than once")
        normalized.sort(key=lambda p: (p.value, p.overlined), reverse=True)
        object.__setattr__(self, "parts", tuple(normalized))

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def ascending(self) -> list[Part]:
        """Parts in marking order, increasing."""
        return sorted(self.parts, key=lambda p: p.key)

    @property
    def smallest(self) -> Part | None:
        """Smallest part in marking order (v~ below v)."""
        return min(self.parts, key=lambda p: p.key) if self.parts else None

    def has(self, value: int, overlined: bool) -> bool:
        return Part(value, overlined) in self.parts

    def count_value(self, value: int) -> int:
        """Number of parts with underlying part ``value`` (either kind)."""
        return sum(1 for p in self.parts if p.value == value)

    def replace(self, remove: Iterable[Part] = (), add: Iterable[Part] = ()) -> "Overpartition":
        """Remove one copy of each part in ``remove`` and add ``add``."""
        parts = list(self.parts)
        for p in remove:
            try:
                parts.remove(p)
            except ValueError:
                raise DomainError(f"part {p} is not in {self}") from None
        parts.extend(add)
        return Overpartition(parts)

    def __str__(self) -> str:
        return format_overpartition(self)

    def to_json(self) -> dict:
        return {"parts": [{"value": p.value, "overlined": p.overlined} for p in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> "Overpartition":
        try:
            items = data["parts"]
            return cls(Part(int(d["value"]), bool(d["overlined"])) for d in items)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed overpartition JSON: {exc}") from None


_TOKEN = re.compile(r"^([0-9]+)(~?)$")


def parse_overpartition(text: str) -> Overpartition:
    """Parse ``"16,13,12,12,10~"``-style text (commas and/or spaces)."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    parts = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"malformed token {tok!r}")
        value = int(m.group(1))
        if value < 1:
            raise DomainError(f"parts must be positive, got {tok!r}")
        parts.append(Part(value, m.group(2) == "~"))
    return Overpartition(parts)


def format_overpartition(lam: Overpartition) -> str:
    return ",".join(str(p) for p in lam.parts)


def frequency(lam: Overpartition, t: int) -> tuple[int, int]:
    """Return (f_t, f_t~): copies of non-overlined t and of overlined t."""
    if t < 1:
        raise DomainError("t must be positive")
    plain = sum(1 for p in lam.parts if p.value == t and not p.overlined)
    return plain, int(Part(t, True) in lam.parts)


def window(lam: Overpartition, t: int) -> int:
    """f_t + f_t~ + f_{t+1}: the count of parts t, t~ and t+1."""
    return sum(
        1 for p in lam.parts
        if (p.value == t) or (p.value == t + 1 and not p.overlined)
    )


@dataclass(frozen=True)
class GordonMarking:
    """Marked parts in increasing order; ``entries[j] = (part, mark)``."""

    entries: tuple[tuple[Part, int], ...]
    overpartition: Overpartition = field(compare=False)

    @property
    def max_mark(self) -> int:
        return max((m for _, m in self.entries), default=0)

    def row(self, r: int) -> list[Part]:
        """The parts with mark r, increasing."""
        return [p for p, m in self.entries if m == r]

    def rows(self) -> dict[int, list[Part]]:
        return {r: self.row(r) for r in range(1, self.max_mark + 1)}

    def count(self, r: int) -> int:
        """N_r, the number of r-marked parts."""
        return sum(1 for _, m in self.entries if m == r)

    def difference(self, r: int) -> int:
        """n_r = N_r - N_{r-1}, with N_0 taken as 0."""
        return self.count(r) - (self.count(r - 1) if r > 1 else 0)

    def profile(self, k: int) -> tuple[int, ...]:
        """(N_1, ..., N_{k-1}); raises if some mark exceeds k-1."""
        if self.max_mark > k - 1:
            raise DomainError(f"marking uses mark {self.max_mark} > k-1 = {k - 1}")
        return tuple(self.count(r) for r in range(1, k))

    def marks_of_value(self, value: int) -> list[int]:
        return [m for p, m in self.entries if p.value == value]

    def to_json(self) -> dict:
        return {
            "parts": [
                {"value": p.value, "overlined": p.overlined, "mark": m}
                for p, m in self.entries
            ],
            "rows": {str(r): [str(p) for p in row] for r, row in self.rows().items()},
        }

    def subscript_form(self) -> str:
        return ",".join(f"{p}_{m}" for p, m in self.entries)

    def grid(self) -> str:
        """Plain-text picture: one line per mark, largest mark on top, one
        column for each value 1..max."""
        if not self.entries:
            return ""
        values = range(1, max(p.value for p, _ in self.entries) + 1)
        col_of = {v: v - 1 for v in values}
        width = max(len(str(p)) for p, _ in self.entries)
        lines = []
        for r in range(self.max_mark, 0, -1):
            cells = [""] * len(values)
            for p, m in self.entries:
                if m == r:
                    cells[col_of[p.value]] = str(p)
            body = " ".join(c.rjust(width) for c in cells).rstrip()
            lines.append(f"{r} | {body}")
        return "\n".join(lines)


def gordon_mark(lam: Overpartition) -> GordonMarking:
    """Assign the Gordon marking, scanning parts in increasing order.

    A part of value v may not reuse a mark already given at value v, nor a
    mark used at value v-1; when v~ is a part, the smallest mark used at
    v-1 is released for the parts of value v.
    """
    entries = []
    marks_at: dict[int, list[int]] = {}
    for p in lam.ascending():
        below = marks_at.get(p.value - 1, [])
        forbidden = set(below)
        if below and lam.has(p.value, True):
            forbidden.discard(min(below))
        forbidden.update(marks_at.get(p.value, []))
        mark = 1
        while mark in forbidden:
            mark += 1
        marks_at.setdefault(p.value, []).append(mark)
        entries.append((p, mark))
    return GordonMarking(tuple(entries), lam)


def max_mark(marking: GordonMarking) -> int:
    return marking.max_mark
