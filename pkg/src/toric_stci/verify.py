"""Set-theoretic cut-out certification.

A candidate equation set cuts the variety out set-theoretically iff the
candidates all lie in the toric ideal (forward containment, checked by normal
forms; the variety's zero set is then inside the candidates' zero set) and
every toric generator lies in the radical of the candidate ideal (reverse
containment, checked generator by generator with the Rabinowitsch trick).
Since the toric ideal is prime, the conjunction is exactly equality of zero
sets over an algebraically closed field.

The finite-field cross-check compares brute-force solution sets over F_p.
It is advisory: point-set equality over a finite field is necessary but not
sufficient for the algebraically closed claim, so it never overrides the
symbolic verdict.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .exactmath import QQ
from .groebner import (
    GroebnerBasis,
    IdealPresentation,
    buchberger,
    normal_form,
    radical_member,
)
from .polyring import ExponentOverflowError, Grevlex, MonomialOrder, Polynomial, format_poly
from .toric import (
    DEFAULT_ENUMERATION_CAP,
    PointConfiguration,
    ambient_ring,
    solution_set,
    toric_ideal,
)


@dataclass(frozen=True)
class Verdict:
    """Machine-checkable outcome of a cut-out test.  holds is true iff both
    failure lists are empty."""

    holds: bool
    forward_failures: tuple  # (candidate, nonzero normal form) pairs
    reverse_failures: tuple  # (toric generator, note) pairs
    field: str
    timings_ms: dict

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "forward_failures": [
                {"candidate": format_poly(c), "normal_form": format_poly(nf)}
                for c, nf in self.forward_failures
            ],
            "reverse_failures": [
                {"generator": format_poly(g), "note": note}
                for g, note in self.reverse_failures
            ],
            "field": self.field,
            "timings_ms": dict(self.timings_ms),
        }


@dataclass(frozen=True)
class CrossCheckReport:
    """Finite-field shadow of the zero-set equality claim."""

    p: int
    candidate_count: int
    variety_count: int
    extra_points: tuple  # points satisfying the candidates but not the toric ideal
    equal: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "candidate_solutions": self.candidate_count,
            "variety_solutions": self.variety_count,
            "candidates_minus_variety": [list(pt) for pt in self.extra_points],
            "equal": self.equal,
        }


_POWER_FAST_PATH_CAP = 64
_POWER_FAST_PATH_TERMS = 512


def _radical_member_with_fast_path(g, candidate_ideal, candidate_gb, step_limit) -> bool:
    """Radical membership with a cheap sufficient test first: if any small
    power of g reduces to zero modulo the candidate basis, g is certainly in
    the radical.  Powers are reduced as they grow, so they stay small.  Only
    when the power ladder is exhausted does the complete Rabinowitsch test
    run."""
    if candidate_gb.elements:
        try:
            power = normal_form(g, candidate_gb)
            for _ in range(_POWER_FAST_PATH_CAP):
                if power.is_zero:
                    return True
                if len(power.terms) > _POWER_FAST_PATH_TERMS:
                    break
                power = normal_form(power * g, candidate_gb)
        except ExponentOverflowError:
            pass
    return radical_member(g, candidate_ideal, step_limit=step_limit)


def certify(
    config: PointConfiguration,
    candidates: Sequence[Polynomial],
    field=QQ,
    order: MonomialOrder = None,
    step_limit: int = None,
):
    """Run both containment phases; returns (Verdict, toric Groebner basis).

    Phases run cheap-first: normal forms, then per-generator radical
    membership (a power ladder modulo the candidate basis as a sufficient
    fast path, the Rabinowitsch trick as the complete decision).
    """
    candidates = list(candidates)
    ring = ambient_ring(config, field, order)
    for c in candidates:
        if c.ring != ring:
            raise ValueError("candidate polynomial is not in the ambient ring of the configuration")
    timings = {}
    start = time.perf_counter()
    gb = toric_ideal(config, field, order, step_limit=step_limit)
    timings["toric_ideal"] = round((time.perf_counter() - start) * 1000.0, 3)

    start = time.perf_counter()
    forward = []
    for c in candidates:
        nf = normal_form(c, gb)
        if not nf.is_zero:
            forward.append((c, nf))
    timings["forward"] = round((time.perf_counter() - start) * 1000.0, 3)

    start = time.perf_counter()
    reverse = []
    candidate_ideal = IdealPresentation(ring, tuple(candidates))
    candidate_gb = buchberger(candidate_ideal, step_limit)
    for g in gb.elements:
        if not _radical_member_with_fast_path(g, candidate_ideal, candidate_gb, step_limit):
            reverse.append((g, "not in the radical of the candidate ideal"))
    timings["reverse"] = round((time.perf_counter() - start) * 1000.0, 3)

    verdict = Verdict(
        holds=not forward and not reverse,
        forward_failures=tuple(forward),
        reverse_failures=tuple(reverse),
        field=ring.field.label,
        timings_ms=timings,
    )
    return verdict, gb


def verify_cutout(
    config: PointConfiguration,
    candidates: Sequence[Polynomial],
    field=QQ,
    order: MonomialOrder = None,
    step_limit: int = None,
) -> Verdict:
    verdict, _ = certify(config, candidates, field, order, step_limit)
    return verdict


def finite_field_crosscheck(
    config: PointConfiguration,
    candidates: Sequence[Polynomial],
    p: int,
    gb: GroebnerBasis = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    step_limit: int = None,
) -> CrossCheckReport:
    """Compare the candidates' F_p zeros against the toric ideal's, reporting
    sizes, an equality flag, and up to ten separating points."""
    if gb is None:
        gb = toric_ideal(config, QQ, Grevlex(), step_limit=step_limit)
    ring = gb.ring
    cand_set = solution_set(list(candidates), p, ring=ring, cap=cap)
    var_set = solution_set(list(gb.elements), p, ring=ring, cap=cap)
    variety = set(var_set.points)
    extra = tuple(pt for pt in cand_set.points if pt not in variety)[:10]
    return CrossCheckReport(
        p=p,
        candidate_count=len(cand_set),
        variety_count=len(var_set),
        extra_points=extra,
        equal=cand_set.points == var_set.points,
    )
