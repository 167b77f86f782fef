"""Exhaustive generation of overpartitions and exact class counts.

Every count here is obtained by filtering the full list of overpartitions
of a given weight; nothing is derived from a generating function.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from typing import Iterator

from .core import ClassParams, DomainError, GordonMarking, Overpartition, Part, gordon_mark, window


def _ordered(parts: tuple[Part, ...]) -> Overpartition:
    lam = Overpartition.__new__(Overpartition)
    object.__setattr__(lam, "parts", parts)
    return lam


def _descend(remaining: int, prev: Part | None, acc: list[Part]) -> Iterator[tuple[Part, ...]]:
    if remaining == 0:
        yield tuple(acc)
        return
    # within a value the overlined copy leads and appears at most once
    top = remaining if prev is None else prev.value
    for v in range(min(top, remaining), 0, -1):
        if prev is None or v < prev.value:
            options = (Part(v, False), Part(v, True))
        else:
            options = (Part(v, False),)
        for p in options:
            acc.append(p)
            yield from _descend(remaining - v, p, acc)
            acc.pop()


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """Every overpartition of n exactly once, in descending lexicographic
    order of the canonical (decreasing) form."""
    if n < 0:
        raise DomainError("weight must be nonnegative")
    for parts in _descend(n, None, []):
        yield _ordered(parts)


@lru_cache(maxsize=None)
def overpartitions_of(n: int) -> tuple[Overpartition, ...]:
    return tuple(enumerate_overpartitions(n))


def _descend_plain(remaining: int, top: int, acc: list[Part]) -> Iterator[tuple[Part, ...]]:
    if remaining == 0:
        yield tuple(acc)
        return
    for v in range(min(top, remaining), 0, -1):
        acc.append(Part(v, False))
        yield from _descend_plain(remaining - v, v, acc)
        acc.pop()


def enumerate_partitions(n: int) -> Iterator[Overpartition]:
    """Ordinary partitions of n (overpartitions without overlines)."""
    if n < 0:
        raise DomainError("weight must be nonnegative")
    for parts in _descend_plain(n, n, []):
        yield _ordered(parts)


# -- class predicates ---------------------------------------------------------

def satisfies_D(lam: Overpartition, p: ClassParams) -> bool:
    d = lam.parts
    span = p.k - 1
    for j in range(len(d) - span):
        gap = d[j].value - d[j + span].value
        if gap < (1 if d[j].overlined else 2):
            return False
    ones = sum(1 for q in d if q.value == 1 and not q.overlined)
    return ones <= p.i - 1


def satisfies_C(lam: Overpartition, p: ClassParams) -> bool:
    k, i = p.k, p.i
    if i == k:
        return all(q.value % k for q in lam.parts)
    banned = {0, i % (2 * k), (-i) % (2 * k)}
    return all(q.overlined or q.value % (2 * k) not in banned for q in lam.parts)


def satisfies_B(lam: Overpartition, p: ClassParams) -> bool:
    """Gordon's difference condition for ordinary partitions."""
    return not any(q.overlined for q in lam.parts) and satisfies_D(lam, p)


def smallest_overlined(lam: Overpartition) -> bool:
    """Whether the smallest part (v~ below v) is overlined."""
    return bool(lam.parts) and lam.has(lam.parts[-1].value, True)


def in_U(lam: Overpartition, p: ClassParams) -> bool:
    return smallest_overlined(lam) and satisfies_D(lam, p)


def in_I(lam: Overpartition, p: ClassParams) -> bool:
    return bool(lam.parts) and not smallest_overlined(lam) and satisfies_D(lam, p)


def _require_U(lam: Overpartition, p: ClassParams) -> None:
    if not in_U(lam, p):
        raise DomainError(f"{lam} is not in the U-class for k={p.k}, i={p.i}")


def is_in_P(lam: Overpartition, p: ClassParams, marking: GordonMarking | None = None) -> bool:
    _require_U(lam, p)
    marking = marking or gordon_mark(lam)
    return all(q.overlined for q in marking.row(1))


def q_saturated(lam: Overpartition, p: ClassParams, marking: GordonMarking) -> bool:
    """Window equality f_t + f_t~ + f_{t+1} = k-1 below the greatest
    (k-1)-marked part, plus the bottom window: exactly min(i, k-1) parts
    equal to 1.  Vacuous when the (k-1)-row is empty."""
    k = p.k
    top_row = marking.row(k - 1)
    if not top_row:
        return True
    if lam.count_value(1) != min(p.i, k - 1):
        return False
    top = top_row[-1].value
    return all(window(lam, t) == k - 1 for t in range(1, top))


def is_in_Q(lam: Overpartition, p: ClassParams, marking: GordonMarking | None = None) -> bool:
    marking = marking or gordon_mark(lam)
    return is_in_P(lam, p, marking) and q_saturated(lam, p, marking)


def profile(lam: Overpartition, p: ClassParams) -> tuple[int, ...]:
    return gordon_mark(lam).profile(p.k)


# -- counts -------------------------------------------------------------------

def _min_k(lam: Overpartition) -> int:
    """Smallest k >= 2 for which the difference condition holds."""
    d = lam.parts
    need = 2
    for j, q in enumerate(d):
        gap_needed = 1 if q.overlined else 2
        s = 1
        while j + s < len(d) and q.value - d[j + s].value < gap_needed:
            s += 1
        need = max(need, s + 1)
    return need


@lru_cache(maxsize=None)
def _d_stats(n: int) -> Counter:
    """Counter over (length, min_k, plain ones, smallest overlined, has overlines)."""
    stats = Counter()
    for lam in overpartitions_of(n):
        d = lam.parts
        ones = sum(1 for q in d if q.value == 1 and not q.overlined)
        small_over = smallest_overlined(lam)
        any_over = any(q.overlined for q in d)
        stats[(len(d), _min_k(lam), ones, small_over, any_over)] += 1
    return stats


def count_D_mn(p: ClassParams, m: int, n: int) -> int:
    if m < 0 or n < 0:
        return 0
    return sum(
        c for (length, kmin, ones, _, _), c in _d_stats(n).items()
        if length == m and kmin <= p.k and ones <= p.i - 1
    )


def count_D(p: ClassParams, n: int) -> int:
    if n < 0:
        return 0
    return sum(
        c for (_, kmin, ones, _, _), c in _d_stats(n).items()
        if kmin <= p.k and ones <= p.i - 1
    )


@lru_cache(maxsize=None)
def _b_stats(n: int) -> Counter:
    """Counter over (length, min_k, ones) for ordinary partitions of n."""
    stats = Counter()
    for lam in enumerate_partitions(n):
        stats[(len(lam.parts), _min_k(lam), sum(1 for q in lam.parts if q.value == 1))] += 1
    return stats


def count_B_mn(p: ClassParams, m: int, n: int) -> int:
    if m < 0 or n < 0:
        return 0
    return sum(
        c for (length, kmin, ones), c in _b_stats(n).items()
        if length == m and kmin <= p.k and ones <= p.i - 1
    )


def count_B(p: ClassParams, n: int) -> int:
    return sum(count_B_mn(p, m, n) for m in range(n + 1))


def count_C(p: ClassParams, n: int) -> int:
    if n < 0:
        return 0
    return sum(1 for lam in overpartitions_of(n) if satisfies_C(lam, p))


def count_F(p: ClassParams, m: int, n: int) -> int:
    """|U_{k,i}(m,n)|; the empty overpartition belongs to neither U nor I."""
    if m < 1 or n < 1:
        return 0
    return sum(
        c for (length, kmin, ones, small_over, _), c in _d_stats(n).items()
        if length == m and small_over and kmin <= p.k and ones <= p.i - 1
    )


def count_G(p: ClassParams, m: int, n: int) -> int:
    """|I_{k,i}(m,n)|."""
    if m < 1 or n < 1:
        return 0
    return count_D_mn(p, m, n) - count_F(p, m, n)


def classify_T(p: ClassParams, m: int, n: int) -> tuple[list[Overpartition], list[Overpartition]]:
    """Split the D-class members with m parts and weight n by whether the
    smallest part is overlined (U) or not (I)."""
    if m < 1:
        raise DomainError("classify_T needs m >= 1; the empty overpartition is in neither class")
    u, i_ = [], []
    for lam in overpartitions_of(n):
        if len(lam) == m and satisfies_D(lam, p):
            (u if smallest_overlined(lam) else i_).append(lam)
    return u, i_


def count_table(kind: str, p: ClassParams, n_max: int) -> dict[tuple[int, int], int]:
    """(m, n) -> count for one of the classes D, C, B, F, G.  For C, whose
    refinement by length is not part of any identity, m counts parts too."""
    counters = {"D": count_D_mn, "B": count_B_mn, "F": count_F, "G": count_G}
    if kind not in counters and kind != "C":
        raise ValueError(f"unknown class {kind!r}; expected one of D, C, B, F, G")
    table: dict[tuple[int, int], int] = {}
    for n in range(n_max + 1):
        if kind == "C":
            lengths = Counter(len(lam) for lam in overpartitions_of(n) if satisfies_C(lam, p))
            for m in range(n + 1):
                table[(m, n)] = lengths.get(m, 0)
            continue
        count = counters[kind]
        for m in range(n + 1):
            table[(m, n)] = count(p, m, n)
    return table


# -- the U/P/Q families graded by profile ---------------------------------------

@lru_cache(maxsize=None)
def _u_members(k: int, i: int, n: int) -> tuple[tuple[Overpartition, GordonMarking], ...]:
    p = ClassParams(k, i)
    return tuple((lam, gordon_mark(lam)) for lam in overpartitions_of(n) if in_U(lam, p))


def members_by_profile(kind: str, p: ClassParams, n: int) -> dict[tuple[int, ...], list[Overpartition]]:
    """Members of U, P or Q of weight n grouped by their profile."""
    groups: dict[tuple[int, ...], list[Overpartition]] = defaultdict(list)
    for lam, marking in _u_members(p.k, p.i, n):
        if kind == "P" and not is_in_P(lam, p, marking):
            continue
        if kind == "Q" and not is_in_Q(lam, p, marking):
            continue
        groups[marking.profile(p.k)].append(lam)
    return dict(groups)


def count_Q(p: ClassParams, prof: tuple[int, ...], n: int) -> int:
    return len(members_by_profile("Q", p, n).get(tuple(prof), []))


# -- the W numbers, from their recurrence alone -----------------------------------

def recurrence_W(p: ClassParams | tuple[int, int], m: int, n: int) -> int:
    k, i = (p.k, p.i) if isinstance(p, ClassParams) else p
    return _w(k, i, m, n)


@lru_cache(maxsize=None)
def _w(k: int, i: int, m: int, n: int) -> int:
    if m < 0 or n < 0 or i <= 0:
        return 0
    if m == 0 and n == 0:
        return 1
    if m == 0 or n == 0:
        return 0
    # telescoped: W_i - W_0 = sum_{j<=i} of the two shifted terms
    total = 0
    for j in range(1, i + 1):
        total += _w(k, k - j, m - j, n - m) + _w(k, k - j + 1, m - j + 1, n - m)
    return total
