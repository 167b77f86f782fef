"""Coefficient-level checks of every identity, as a stream of report cells.

A cell is a plain dict with keys ``suite``, ``check``, ``k``, ``i``, ``n``
and ``status`` ("pass" or "fail"); failing cells carry a ``witness``
describing the first mismatch.  Cells come out in (check, k, i, n) order
so reports are reproducible byte for byte.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .bijections import chi, chi_inv, chi_weight_drop, phi, phi_inv, psi, psi_inv
from .core import ClassParams, Overpartition
from .enumeration import (
    count_B_mn, count_C, count_D, count_D_mn, count_F, count_G, members_by_profile, recurrence_W,
)
from .qseries import (
    A_MINUS_ONE, A_MINUS_ONE_OVER_Q, MonomialParam, TruncatedSeries, W_series, andrews_product_side,
    andrews_sum_side, check_H_recurrence, check_H_recurrence_general, check_J_relations, jacobi_specialization,
    poch_infinite, product_side_C, profiles, rogers_ramanujan, sum_side_F, sum_side_G, sum_side_main, sum_side_Q,
)

Cell = dict
SUITES = ("thm14", "thm16", "thm17", "recurrences", "bijections", "andrews")


def _cell(suite: str, check: str, k: int, i: int, n: int, witness=None) -> Cell:
    cell = {"suite": suite, "check": check, "k": k, "i": i, "n": n,
            "status": "pass" if witness is None else "fail"}
    if witness is not None:
        cell["witness"] = witness
    return cell


def _params(k_max: int) -> list[ClassParams]:
    return ClassParams.all_up_to(k_max) if k_max >= 2 else []


def _first_m(n: int, compare: Callable[[int], dict | None]) -> dict | None:
    for m in range(n + 1):
        bad = compare(m)
        if bad is not None:
            return {"m": m, "n": n, **bad}
    return None


# -- D and C counts against the series sides -------------------------------------

def suite_thm14(k_max: int, n_max: int) -> Iterator[Cell]:
    """count_D = count_C = product side."""
    for p in _params(k_max):
        prod = product_side_C(p, n_max)
        for n in range(n_max + 1):
            vals = {"D": count_D(p, n), "C": count_C(p, n), "product": prod[n]}
            ok = len(set(vals.values())) == 1
            yield _cell("thm14", "D=C=product", p.k, p.i, n, None if ok else vals)


def suite_thm17(k_max: int, n_max: int) -> Iterator[Cell]:
    """count_D = count_C = product side = multi-sum at x = 1."""
    for p in _params(k_max):
        prod = product_side_C(p, n_max)
        total = sum_side_main(p, n_max, n_max).at_x_equals_one()
        for n in range(n_max + 1):
            vals = {"D": count_D(p, n), "C": count_C(p, n), "product": prod[n], "sum": total[n]}
            ok = len(set(vals.values())) == 1
            yield _cell("thm17", "D=C=product=sum", p.k, p.i, n, None if ok else vals)


def suite_thm16(k_max: int, n_max: int) -> Iterator[Cell]:
    """Refined by length: count_D_mn = multi-sum = W series = W recurrence."""
    for p in _params(k_max):
        sm = sum_side_main(p, n_max, n_max)
        ws = W_series(p, n_max, n_max)
        for n in range(n_max + 1):
            def compare(m):
                vals = {"D": count_D_mn(p, m, n), "sum": sm[m, n], "H": ws[m, n], "W": recurrence_W(p, m, n)}
                return None if len(set(vals.values())) == 1 else vals
            yield _cell("thm16", "D_mn=sum=H=W", p.k, p.i, n, _first_m(n, compare))


# -- recurrences and relations ------------------------------------------------------

def _enumerated_relations(p: ClassParams, n: int) -> Iterator[tuple[str, dict | None]]:
    k, i = p.k, p.i

    def d_split(m):
        a, b, c = count_D_mn(p, m, n), count_F(p, m, n), count_G(p, m, n)
        if (m, n) == (0, 0):
            return None if a == 1 else {"D": a}
        return None if a == b + c else {"D": a, "F": b, "G": c}

    def fg(m):
        if i >= 2:
            a, b = count_F(ClassParams(k, i - 1), m, n), count_G(p, m, n)
        else:
            a, b = count_G(p, m, n), count_F(ClassParams(k, k), m, n - m)
        return None if a == b else {"lhs": a, "rhs": b}

    def d_rec(m):
        lhs = count_D_mn(p, m, n) - (count_D_mn(ClassParams(k, i - 1), m, n) if i > 1 else 0)
        rhs = 0
        if k - i >= 1:
            rhs += count_D_mn(ClassParams(k, k - i), m - i, n - m)
        rhs += count_D_mn(ClassParams(k, k - i + 1), m - i + 1, n - m)
        return None if lhs == rhs else {"lhs": lhs, "rhs": rhs}

    yield "D=F+G", _first_m(n, d_split)
    yield "F/G shift", _first_m(n, fg)
    yield "D recurrence", _first_m(n, d_rec)


def suite_recurrences(k_max: int, n_max: int) -> Iterator[Cell]:
    for p in _params(k_max):
        for n in range(n_max + 1):
            for check, witness in _enumerated_relations(p, n):
                yield _cell("recurrences", check, p.k, p.i, n, witness)
        sf, sg, sm = sum_side_F(p, n_max, n_max), sum_side_G(p, n_max, n_max), sum_side_main(p, n_max, n_max)
        for n in range(n_max + 1):
            def compare(m):
                if (m, n) == (0, 0):
                    vals = {"F": sf[0, 0], "G": sg[0, 0], "main": sm[0, 0]}
                    return None if sf[0, 0] + sg[0, 0] == sm[0, 0] == 1 else {k_: str(v) for k_, v in vals.items()}
                vals = {"F": count_F(p, m, n), "F_sum": sf[m, n], "G": count_G(p, m, n), "G_sum": sg[m, n]}
                ok = vals["F"] == vals["F_sum"] and vals["G"] == vals["G_sum"]
                return None if ok else {k_: str(v) for k_, v in vals.items()}
            yield _cell("recurrences", "F/G series", p.k, p.i, n, _first_m(n, compare))
        for n in range(n_max + 1):
            groups = members_by_profile("Q", p, n)
            witness = None
            for prof in sorted(set(groups) | _profiles_up_to(p, n)):
                # the empty overpartition is the lone member of the zero profile
                got = len(groups.get(prof, [])) + (n == 0 and not any(prof))
                want = sum_side_Q(prof, p, n)[n]
                if got != want:
                    witness = {"profile": list(prof), "enumerated": got, "closed_form": str(want)}
                    break
            yield _cell("recurrences", "Q closed form", p.k, p.i, n, witness)
        ok = check_H_recurrence(p, n_max) and all(
            check_H_recurrence_general(p, a, n_max) for a in (MonomialParam.zero(), A_MINUS_ONE, A_MINUS_ONE_OVER_Q))
        yield _cell("recurrences", "H recurrence", p.k, p.i, n_max, None if ok else {"order": n_max})
        ok = jacobi_specialization(p, n_max)
        yield _cell("recurrences", "Jacobi triple product", p.k, p.i, n_max, None if ok else {"order": n_max})
    ks = tuple(range(2, min(k_max, 4) + 1))
    if ks:
        ok = check_J_relations(n_max, ks)
        yield _cell("recurrences", "J relations", max(ks), 0, n_max, None if ok else {"order": n_max})


def _profiles_up_to(p: ClassParams, n: int) -> set[tuple[int, ...]]:
    return set(profiles(p.k, n))


# -- classical sanity checks --------------------------------------------------------

def pentagonal_series(N_q: int) -> TruncatedSeries:
    """sum over all integers j of (-1)^j q^{j(3j-1)/2}."""
    s = TruncatedSeries(N_q)
    j = 0
    while j * (3 * j - 1) // 2 <= N_q:
        for e in {j * (3 * j - 1) // 2, j * (3 * j + 1) // 2}:
            if e <= N_q:
                s.c[e] += -1 if j % 2 else 1
        j += 1
    return s


def suite_andrews(k_max: int, n_max: int) -> Iterator[Cell]:
    for p in _params(k_max):
        sums = andrews_sum_side(p, n_max, n_max)
        prod = andrews_product_side(p, n_max)
        flat = sums.at_x_equals_one()
        for n in range(n_max + 1):
            def compare(m):
                a, b = count_B_mn(p, m, n), sums[m, n]
                return None if a == b else {"B": a, "sum": str(b)}
            witness = _first_m(n, compare)
            if witness is None and flat[n] != prod[n]:
                witness = {"n": n, "sum": str(flat[n]), "product": str(prod[n])}
            yield _cell("andrews", "B=sum=product", p.k, p.i, n, witness)
    for which in (1, 2):
        lhs, rhs = rogers_ramanujan(which, n_max)
        d = lhs.first_difference(rhs)
        yield _cell("andrews", f"Rogers-Ramanujan {which}", 2, 3 - which, n_max, None if d is None else {"n": d})
    d = poch_infinite(1, 1, 1, n_max).first_difference(pentagonal_series(n_max))
    yield _cell("andrews", "pentagonal", 0, 0, n_max, None if d is None else {"n": d})


# -- bijections ---------------------------------------------------------------------

def distinct_partitions(w: int, below: int) -> Iterator[tuple[int, ...]]:
    """Partitions of w into distinct parts, each < below, largest first."""
    def rec(rem, top):
        if rem == 0:
            yield ()
            return
        for v in range(min(top, rem), 0, -1):
            for rest in rec(rem - v, v - 1):
                yield (v,) + rest
    yield from rec(w, below - 1)


def bounded_partitions(w: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Partitions of w into at most max_len parts, largest first."""
    def rec(rem, top, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for v in range(min(top, rem), 0, -1):
            for rest in rec(rem - v, v, slots - 1):
                yield (v,) + rest
    yield from rec(w, w, max_len)


def _check_phi(p: ClassParams, n: int) -> dict | None:
    images = set()
    for prof, members in members_by_profile("U", p, n).items():
        for lam in members:
            alpha, beta = phi(lam, p)
            if phi_inv(alpha, beta, p) != lam:
                return {"map": "phi", "input": str(lam), "reason": "round trip"}
            images.add((prof, alpha, beta.parts))
    codomain = set()
    for prof in {im[0] for im in images} | set(_all_profiles(p, n)):
        for w in range(n + 1):
            for beta in distinct_partitions(w, prof[0]):
                for alpha in members_by_profile("P", p, n - w).get(prof, []):
                    codomain.add((prof, alpha, beta))
    if images != codomain:
        return {"map": "phi", "reason": "image != codomain", "image": len(images), "codomain": len(codomain)}
    return None


def _check_psi(p: ClassParams, n: int) -> dict | None:
    images = set()
    for prof, members in members_by_profile("P", p, n).items():
        for alpha in members:
            gamma, delta = psi(alpha, p)
            if psi_inv(gamma, delta, p) != alpha:
                return {"map": "psi", "input": str(alpha), "reason": "round trip"}
            images.add((prof, gamma, delta.parts))
    codomain = set()
    for prof in {im[0] for im in images} | set(_all_profiles(p, n)):
        for w in range(n + 1):
            for delta in bounded_partitions(w, prof[-1]):
                for gamma in members_by_profile("Q", p, n - w).get(prof, []):
                    codomain.add((prof, gamma, delta))
    if images != codomain:
        return {"map": "psi", "reason": "image != codomain", "image": len(images), "codomain": len(codomain)}
    return None


def _check_chi(p: ClassParams, n: int) -> dict | None:
    images = set()
    for prof, members in members_by_profile("Q", p, n).items():
        if prof[-1] == 0:
            continue
        for gamma in members:
            mu = chi(gamma, p)
            if chi_inv(mu, p) != gamma:
                return {"map": "chi", "input": str(gamma), "reason": "round trip"}
            images.add((prof, mu))
    codomain = set()
    for prof in _all_profiles(p, n):
        if prof[-1] == 0:
            continue
        lower = tuple(v - 1 for v in prof)
        w = n - chi_weight_drop(prof, p)
        if w < 0:
            continue
        if w == 0 and not any(lower):
            codomain.add((prof, Overpartition()))
            continue
        for mu in members_by_profile("Q", p, w).get(lower, []):
            codomain.add((prof, mu))
    if images != codomain:
        return {"map": "chi", "reason": "image != codomain", "image": len(images), "codomain": len(codomain)}
    return None


def _all_profiles(p: ClassParams, n: int) -> list[tuple[int, ...]]:
    """Profiles (N_1 >= ... >= N_{k-1}) with N_1 + ... + N_{k-1} <= n."""
    out = []

    def rec(prefix, left):
        if len(prefix) == p.k - 1:
            out.append(tuple(prefix))
            return
        top = prefix[-1] if prefix else left
        for v in range(min(top, left) + 1):
            rec(prefix + [v], left - v)

    rec([], n)
    return out


def suite_bijections(k_max: int, n_max: int) -> Iterator[Cell]:
    for p in _params(k_max):
        for n in range(n_max + 1):
            for name, fn in (("phi", _check_phi), ("psi", _check_psi), ("chi", _check_chi)):
                try:
                    witness = fn(p, n)
                except (AssertionError, ValueError) as exc:
                    witness = {"map": name, "error": str(exc)}
                yield _cell("bijections", name, p.k, p.i, n, witness)


RUNNERS: dict[str, Callable[[int, int], Iterator[Cell]]] = {
    "thm14": suite_thm14,
    "thm16": suite_thm16,
    "thm17": suite_thm17,
    "recurrences": suite_recurrences,
    "bijections": suite_bijections,
    "andrews": suite_andrews,
}


def run(suite: str, k_max: int, n_max: int) -> Iterator[Cell]:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        yield from RUNNERS[name](k_max, n_max)
