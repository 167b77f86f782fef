"""The three bijections behind the sum side of the overpartition identity.

* ``phi`` peels non-overlined 1-marked parts off a U-class overpartition,
  leaving one whose 1-marked parts are all overlined (P-class) plus a
  partition into distinct parts below N_1.
* ``psi`` pushes (k-1)-marked parts down until every window below the top
  (k-1)-marked part is full (Q-class), recording the moves in a partition
  with at most N_{k-1} parts.
* ``chi`` strips one part from every row of a Q-class overpartition,
  lowering each N_r by one.

Every step recomputes the Gordon marking from scratch, so marks are never
tracked by hand.  Weight and profile bookkeeping is asserted on each call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import ClassParams, DomainError, GordonMarking, Overpartition, Part, gordon_mark, window
from .enumeration import in_U, is_in_P, is_in_Q, q_saturated


@dataclass(frozen=True)
class DistinctPartition:
    """Strictly decreasing positive parts, each at most ``bound - 1``."""

    parts: tuple[int, ...]
    bound: int

    def __init__(self, parts: Iterable[int], bound: int):
        ps = tuple(sorted((int(v) for v in parts), reverse=True))
        if any(v < 1 for v in ps):
            raise DomainError("parts must be positive")
        if any(a == b for a, b in zip(ps, ps[1:])):
            raise DomainError(f"parts of {ps} are not distinct")
        if ps and ps[0] >= bound:
            raise DomainError(f"part {ps[0]} is not below the bound {bound}")
        object.__setattr__(self, "parts", ps)
        object.__setattr__(self, "bound", bound)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class BoundedPartition:
    """Weakly decreasing positive parts, at most ``max_length`` of them."""

    parts: tuple[int, ...]
    max_length: int

    def __init__(self, parts: Iterable[int], max_length: int):
        ps = tuple(sorted((int(v) for v in parts), reverse=True))
        if any(v < 1 for v in ps):
            raise DomainError("parts must be positive")
        if len(ps) > max_length:
            raise DomainError(f"{len(ps)} parts exceed the allowed {max_length}")
        object.__setattr__(self, "parts", ps)
        object.__setattr__(self, "max_length", max_length)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


Trace = Callable[[str, Overpartition], None]


def _check_step(before: Overpartition, after: Overpartition, p: ClassParams, delta: int, what: str) -> None:
    if after.weight - before.weight != delta:
        raise AssertionError(f"{what}: weight moved by {after.weight - before.weight}, expected {delta}")
    if gordon_mark(after).max_mark > p.k - 1 or gordon_mark(after).profile(p.k) != gordon_mark(before).profile(p.k):
        raise AssertionError(f"{what}: profile changed from {before} to {after}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


# -- first reduction / dilation -------------------------------------------------

def first_reduction(lam: Overpartition, p: ClassParams) -> Overpartition:
    """Lower the largest non-overlined 1-marked part, weight -1."""
    _require(in_U(lam, p), f"first reduction: {lam} is not in the U-class")
    row = gordon_mark(lam).row(1)
    plain = [q for q in row if not q.overlined]
    _require(bool(plain), "first reduction: no non-overlined 1-marked part")
    a = plain[-1].value
    if lam.has(a + 1, False) and not lam.has(a + 1, True):
        # case 1: a -> a~ and the lowest-marked a+1 -> a
        remove, add = [Part(a + 1)], [Part(a, True)]
    else:
        # case 2: a -> (a-1)~
        remove, add = [Part(a)], [Part(a - 1, True)]
    above = [q for q in row if q.value > a]
    if above:
        b = above[0]
        remove.append(b)
        add.append(Part(b.value, False))
    mu = lam.replace(remove, add)
    _check_step(lam, mu, p, -1, "first reduction")
    return mu


def _dilation_site(row: list[Part], kind: str) -> int | None:
    if kind == "A":
        return len(row) - 1 if row and row[-1].overlined else None
    for j in range(len(row) - 2, -1, -1):
        if row[j].overlined and not row[j + 1].overlined:
            return j
    return None


def first_dilation(lam: Overpartition, p: ClassParams, kind: str) -> Overpartition:
    """Raise an overlined 1-marked part, weight +1.

    Type A acts on the largest 1-marked part when it is overlined; type B
    on the rightmost overlined 1-marked part followed by a non-overlined one.
    """
    if kind not in ("A", "B"):
        raise DomainError("dilation type must be 'A' or 'B'")
    _require(in_U(lam, p), f"first dilation: {lam} is not in the U-class")
    row = gordon_mark(lam).row(1)
    j = _dilation_site(row, kind)
    _require(j is not None, f"first dilation type {kind}: no admissible 1-marked part")
    a = row[j].value
    remove, add = [Part(a, True)], [Part(a + 1)]
    if j + 1 < len(row):
        remove.append(row[j + 1])
        add.append(Part(row[j + 1].value, True))
    try:
        mu = lam.replace(remove, add)
    except DomainError as exc:
        raise DomainError(f"first dilation type {kind}: {exc}") from None
    _require(in_U(mu, p), f"first dilation type {kind}: result {mu} leaves the U-class")
    _check_step(lam, mu, p, +1, "first dilation")
    return mu


def phi(lam: Overpartition, p: ClassParams, trace: Trace | None = None) -> tuple[Overpartition, DistinctPartition]:
    """U-class -> (P-class, distinct parts below N_1)."""
    _require(in_U(lam, p), f"phi: {lam} is not in the U-class")
    n1 = gordon_mark(lam).count(1)
    alpha, beta, t = lam, [], 1
    while any(not q.overlined for q in gordon_mark(alpha).row(1)):
        top_overlined = gordon_mark(alpha).row(1)[-1].overlined
        if not top_overlined:
            beta.append(t)
        alpha = first_reduction(alpha, p)
        if trace:
            trace("first_reduction", alpha)
        t = t + 1 if top_overlined else 1
    b = DistinctPartition(beta, n1)
    assert lam.weight == alpha.weight + b.weight
    return alpha, b


def beta_closed_form(lam: Overpartition) -> tuple[int, ...]:
    """(N_1 - i_t + 1) over the positions i_t of the non-overlined parts in
    the 1-marked row, largest first."""
    row = gordon_mark(lam).row(1)
    n1 = len(row)
    return tuple(sorted((n1 - idx for idx, q in enumerate(row) if not q.overlined), reverse=True))


def phi_inv(alpha: Overpartition, beta: DistinctPartition | Iterable[int], p: ClassParams,
            trace: Trace | None = None) -> Overpartition:
    _require(is_in_P(alpha, p) if in_U(alpha, p) else False, f"phi inverse: {alpha} is not in the P-class")
    n1 = gordon_mark(alpha).count(1)
    parts = beta.parts if isinstance(beta, DistinctPartition) else tuple(beta)
    b = DistinctPartition(parts, n1)
    lam = alpha
    for bt in b.parts:
        lam = first_dilation(lam, p, "A")
        if trace:
            trace("first_dilation_A", lam)
        for _ in range(bt - 1):
            lam = first_dilation(lam, p, "B")
            if trace:
                trace("first_dilation_B", lam)
    return lam


# -- second reduction / dilation ------------------------------------------------

def _top_row(alpha: Overpartition, p: ClassParams) -> list[Part]:
    return gordon_mark(alpha).row(p.k - 1)


def _ones_cap(p: ClassParams) -> int:
    # most parts of size 1 a P-class member can hold
    return min(p.i, p.k - 1)


def _reduction_move(alpha: Overpartition, p: ClassParams, marking: GordonMarking, t: int) -> tuple[str, Part, Part] | None:
    """The move the second reduction makes at a (k-1)-marked part of size t,
    or None when neither condition holds."""
    if t < 2:
        return None
    if alpha.count_value(t - 1) == 0:
        if not alpha.has(t, True):
            return None
        return ("condition 1", Part(t, True), Part(t - 1, True))
    if t == 2:
        if alpha.count_value(1) >= _ones_cap(p):
            return None
        low = sum(1 for q in alpha if q.value == 1 and not q.overlined)
    else:
        low = window(alpha, t - 2)
    if low >= p.k - 1:
        return None
    acc = 0
    for r in range(1, p.k):
        row = marking.row(r)
        acc += sum(1 for q in row if q.value == t - 2 or (q.value == t - 1 and not q.overlined))
        if r >= 2 and acc < r and Part(t, False) in row:
            return ("condition 2", Part(t), Part(t - 1))
    return None


def second_reduction_applies(alpha: Overpartition, p: ClassParams, index: int) -> bool:
    marking = gordon_mark(alpha)
    row = marking.row(p.k - 1)
    return 1 <= index <= len(row) and _reduction_move(alpha, p, marking, row[index - 1].value) is not None


def second_reduction(alpha: Overpartition, p: ClassParams, index: int | None = None) -> Overpartition:
    """Weight -1 move steered by the ``index``-th smallest (k-1)-marked part
    (default: the smallest one at which a move exists)."""
    _require(in_U(alpha, p) and is_in_P(alpha, p), f"second reduction: {alpha} is not in the P-class")
    marking = gordon_mark(alpha)
    row = marking.row(p.k - 1)
    if index is None:
        index = next((s for s in range(1, len(row) + 1)
                      if _reduction_move(alpha, p, marking, row[s - 1].value)), None)
        _require(index is not None, "second reduction: no (k-1)-marked part satisfies condition 1 or 2")
    _require(1 <= index <= len(row), f"second reduction: no (k-1)-marked part number {index}")
    move = _reduction_move(alpha, p, marking, row[index - 1].value)
    _require(move is not None, f"second reduction: (k-1)-marked part {row[index - 1]} meets neither condition")
    _, old, new = move
    out = alpha.replace([old], [new])
    _check_step(alpha, out, p, -1, f"second reduction ({move[0]})")
    return out


def second_dilation(alpha: Overpartition, p: ClassParams, index: int) -> Overpartition:
    """Weight +1 move steered by the ``index``-th smallest (k-1)-marked part."""
    _require(in_U(alpha, p) and is_in_P(alpha, p), f"second dilation: {alpha} is not in the P-class")
    marking = gordon_mark(alpha)
    row = marking.row(p.k - 1)
    _require(1 <= index <= len(row), f"second dilation: no (k-1)-marked part number {index}")
    here = row[index - 1]
    t = here.value
    if window(alpha, t) < p.k - 1:
        below = [(m, q) for q, m in marking.entries if q.value == t - 1]
        _require(bool(below), f"second dilation condition 1: no part of size {t - 1}")
        r, q = max(below, key=lambda e: e[0])
        old, new = (q, Part(t, True)) if r == 1 else (q, Part(t))
    elif window(alpha, t + 1) < p.k - 1:
        old, new = here, Part(t + 1, here.overlined)
    else:
        raise DomainError(f"second dilation: (k-1)-marked part {here} meets neither condition")
    out = alpha.replace([old], [new])
    _require(is_in_P(out, p) if in_U(out, p) else False, f"second dilation: result {out} leaves the P-class")
    _check_step(alpha, out, p, +1, "second dilation")
    return out


def psi(alpha: Overpartition, p: ClassParams, trace: Trace | None = None) -> tuple[Overpartition, BoundedPartition]:
    """P-class -> (Q-class, partition with at most N_{k-1} parts)."""
    _require(in_U(alpha, p) and is_in_P(alpha, p), f"psi: {alpha} is not in the P-class")
    n_top = gordon_mark(alpha).count(p.k - 1)
    delta = []
    for s in range(1, n_top + 1):
        moves = 0
        while second_reduction_applies(alpha, p, s):
            alpha = second_reduction(alpha, p, s)
            moves += 1
            if trace:
                trace("second_reduction", alpha)
        if moves:
            delta.append(moves)
    d = BoundedPartition(delta, n_top)
    if not is_in_Q(alpha, p):
        raise AssertionError(f"psi: {alpha} is not saturated")
    return alpha, d


def psi_inv(gamma: Overpartition, delta: BoundedPartition | Iterable[int], p: ClassParams,
            trace: Trace | None = None) -> Overpartition:
    _require(in_U(gamma, p) and is_in_Q(gamma, p), f"psi inverse: {gamma} is not in the Q-class")
    n_top = gordon_mark(gamma).count(p.k - 1)
    parts = delta.parts if isinstance(delta, BoundedPartition) else tuple(delta)
    d = BoundedPartition(parts, n_top)
    alpha = gamma
    for t, times in enumerate(d.parts, start=1):
        for _ in range(times):
            alpha = second_dilation(alpha, p, n_top - t + 1)
            if trace:
                trace("second_dilation", alpha)
    return alpha


# -- chi ------------------------------------------------------------------------

def chi_weight_drop(profile: tuple[int, ...], p: ClassParams) -> int:
    """N_1 + 2 N_2 + ... + 2 N_{k-1} - j + 1 with j = min(i, k-1).

    A saturated overpartition holds at most k-1 parts of size 1, so i = k
    behaves exactly like i = k-1 here.
    """
    return profile[0] + 2 * sum(profile[1:]) - _ones_cap(p) + 1


def chi(gamma: Overpartition, p: ClassParams, trace: Trace | None = None) -> Overpartition:
    """Q-class with profile (N_1, ..., N_{k-1}) -> Q-class with every N_r
    lowered by one."""
    _require(in_U(gamma, p) and is_in_Q(gamma, p), f"chi: {gamma} is not in the Q-class")
    prof = gordon_mark(gamma).profile(p.k)
    _require(prof[-1] > 0, "chi: needs at least one (k-1)-marked part")
    mu = gamma
    for idx in range(prof[0], 0, -1):
        marking = gordon_mark(mu)
        t = marking.row(1)[idx - 1].value
        paired = [r for r in range(1, p.k)
                  if any(q.value == t - 1 for q in marking.row(r)) and any(q.value == t for q in marking.row(r))]
        if paired:
            r = paired[0]
        else:
            r = max(m for q, m in marking.entries if q.value == t)
        q = next(q for q in marking.row(r) if q.value == t)
        mu = mu.replace([q], [Part(t + 1, q.overlined)])
        if trace:
            trace("chi_raise", mu)
    marking = gordon_mark(mu)
    drop = [marking.row(r)[0] for r in range(1, p.k)]
    ones, twos = sum(1 for q in drop if q.value == 1), sum(1 for q in drop if q.value == 2)
    j = _ones_cap(p)
    if (ones, twos) != (j - 1, p.k - j):
        raise AssertionError(f"chi: unexpected row minima {drop}")
    rest = list(mu.parts)
    for q in drop:
        rest.remove(q)
    if any(q.value < 3 for q in rest):
        raise AssertionError(f"chi: part below 3 survives in {mu}")
    out = Overpartition(Part(q.value - 2, q.overlined) for q in rest)
    if gamma.weight - out.weight != chi_weight_drop(prof, p):
        raise AssertionError("chi: weight ledger broken")
    if trace:
        trace("chi_strip", out)
    return out


def chi_inv(mu: Overpartition, p: ClassParams, trace: Trace | None = None) -> Overpartition:
    if mu.parts:
        _require(in_U(mu, p) and is_in_Q(mu, p), f"chi inverse: {mu} is not in the Q-class")
    prof = gordon_mark(mu).profile(p.k)
    parts = [Part(q.value + 2, q.overlined) for q in mu.parts]
    j = _ones_cap(p)
    if j == 1:
        parts += [Part(2, True)] + [Part(2)] * (p.k - 2)
    else:
        parts += [Part(1, True)] + [Part(1)] * (j - 2) + [Part(2)] * (p.k - j)
    gamma = Overpartition(parts)
    if trace:
        trace("chi_pad", gamma)
    for j in range(1, prof[0] + 2):
        marking = gordon_mark(gamma)
        q = marking.row(1)[j - 1]
        t = q.value
        if gamma.has(t + 1, True) or gamma.count_value(t + 1) == 0:
            gamma = gamma.replace([q], [Part(t - 1, True)])
        else:
            r = min(m for qq, m in marking.entries if qq.value == t + 1)
            qq = next(x for x in marking.row(r) if x.value == t + 1)
            gamma = gamma.replace([qq], [Part(t, qq.overlined)])
        if trace:
            trace("chi_lower", gamma)
    new_prof = tuple(v + 1 for v in prof)
    if gordon_mark(gamma).profile(p.k) != new_prof:
        raise AssertionError(f"chi inverse: profile {gordon_mark(gamma).profile(p.k)} != {new_prof}")
    if gamma.weight - mu.weight != chi_weight_drop(new_prof, p):
        raise AssertionError("chi inverse: weight ledger broken")
    return gamma
