"""Buchberger's algorithm and the ideal-theoretic operations built on it.

The engine is deliberately classical: normal selection strategy, the coprime
and chain criteria, full tail reduction, and a reduced (monic, auto-reduced)
basis as the canonical output.  Everything is deterministic for fixed input;
a configurable step limit turns runaway computations into hard errors rather
than silent partial answers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polyring import (
    Block,
    Grevlex,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    convert,
    exp_add,
    exp_lcm,
    exp_sub,
    format_poly,
    parse_poly,
)
from .exactmath import field_from_label

DEFAULT_STEP_LIMIT = 200_000


class StepLimitExceeded(RuntimeError):
    """The S-pair budget ran out; the computation is abandoned, not truncated."""


@dataclass(frozen=True)
class IdealPresentation:
    """A finite generating set in a fixed ring (order and field live there)."""

    ring: PolynomialRing
    generators: tuple

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"not a polynomial: {g!r}")
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if not g.is_zero:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, no term of one divisible by
    the leading term of another, sorted ascending by leading monomial."""

    __slots__ = ("elements", "ring")

    def __init__(self, elements: tuple, ring: PolynomialRing):
        self.elements = tuple(elements)
        self.ring = ring

    @property
    def is_trivial(self) -> bool:
        """Does the basis present the whole ring, i.e. equal {1}?"""
        return len(self.elements) == 1 and self.elements[0].is_constant and not self.elements[0].is_zero

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.elements == self.elements
        )

    def __repr__(self) -> str:
        return "GroebnerBasis([" + ", ".join(format_poly(g) for g in self.elements) + "])"


def divide(f: Polynomial, divisors: Sequence[Polynomial]):
    """Multivariate division with remainder: f = sum q_i g_i + r.

    First-match divisor selection, leading-term-first reduction, full tail
    reduction: no term of r is divisible by any divisor's leading term.
    Deterministic given the divisor order.
    """
    ring = f.ring
    divs = list(divisors)
    for g in divs:
        if not isinstance(g, Polynomial) or g.ring != ring:
            raise ValueError("divisor lives in a different ring")
        if g.is_zero:
            raise ValueError("zero divisor polynomial")
    key = ring.term_key
    work = dict(f.terms)
    rem = {}
    quots = [dict() for _ in divs]
    div_data = [(g.lm, g.lc, g.terms[1:]) for g in divs]
    while work:
        lead = max(work, key=key)
        c = work.pop(lead)
        for qi, (glm, glc, gtail) in enumerate(div_data):
            qexp = exp_sub(lead, glm)
            if qexp is None:
                continue
            qc = c / glc
            qd = quots[qi]
            prev = qd.get(qexp)
            qd[qexp] = qc if prev is None else prev + qc
            for te, tc in gtail:
                ne = exp_add(qexp, te)
                delta = qc * tc
                v = work.get(ne)
                v = -delta if v is None else v - delta
                if v:
                    work[ne] = v
                else:
                    work.pop(ne, None)
            break
        else:
            rem[lead] = c
    return tuple(ring.poly(q) for q in quots), ring.poly(rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The canonical cancellation combination of f and g."""
    l = exp_lcm(f.lm, g.lm)
    return f.mul_term(exp_sub(l, f.lm), f.ring.field.one / f.lc) - g.mul_term(
        exp_sub(l, g.lm), g.ring.field.one / g.lc
    )


def _reduced_basis(basis: list, ring: PolynomialRing) -> GroebnerBasis:
    key = ring.term_key
    order_idx = sorted(range(len(basis)), key=lambda i: key(basis[i].lm))
    kept = []
    for i in order_idx:
        lm = basis[i].lm
        if any(exp_sub(lm, basis[k].lm) is not None for k in kept):
            continue
        kept.append(i)
    polys = [basis[i] for i in kept]
    for i in range(len(polys)):
        others = polys[:i] + polys[i + 1 :]
        if others:
            _, r = divide(polys[i], others)
            polys[i] = r.monic()
    polys.sort(key=lambda g: key(g.lm))
    return GroebnerBasis(tuple(polys), ring)


def buchberger(ideal: IdealPresentation, step_limit: int = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal, w.r.t. its ring's order.

    Pair selection is the normal strategy (minimal lcm degree, ties broken by
    the monomial order on the lcm, then by index).  Pairs with coprime leading
    terms are skipped, as are pairs eliminated by the chain criterion.  Each
    processed pair costs one step against the limit; exceeding the limit
    raises StepLimitExceeded.  A nonzero constant remainder short-circuits to
    the basis {1}.
    """
    ring = ideal.ring
    limit = DEFAULT_STEP_LIMIT if step_limit is None else step_limit
    basis = []
    for g in ideal.generators:
        if g.is_constant:
            return GroebnerBasis((ring.one,), ring)
        basis.append(g.monic())
    if not basis:
        return GroebnerBasis((), ring)
    key = ring.term_key

    def pair_key(i: int, j: int) -> tuple:
        l = exp_lcm(basis[i].lm, basis[j].lm)
        return (sum(l), key(l), i, j)

    pairs = {}
    for i, j in itertools.combinations(range(len(basis)), 2):
        pairs[(i, j)] = pair_key(i, j)

    processed = 0
    while pairs:
        (i, j), _ = min(pairs.items(), key=lambda kv: kv[1])
        del pairs[(i, j)]
        processed += 1
        if processed > limit:
            raise StepLimitExceeded(f"S-pair budget of {limit} exhausted")
        fi, fj = basis[i], basis[j]
        l = exp_lcm(fi.lm, fj.lm)
        if l == exp_add(fi.lm, fj.lm):
            continue
        # chain criterion: some k divides the lcm and both companion pairs
        # are already settled
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if exp_sub(l, basis[k].lm) is None:
                continue
            if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
                continue
            skip = True
            break
        if skip:
            continue
        _, r = divide(s_polynomial(fi, fj), basis)
        if r.is_zero:
            continue
        if r.is_constant:
            return GroebnerBasis((ring.one,), ring)
        r = r.monic()
        new = len(basis)
        basis.append(r)
        for k in range(new):
            pairs[(k, new)] = pair_key(k, new)
    return _reduced_basis(basis, ring)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Unique remainder of f modulo the basis."""
    if f.ring != G.ring:
        raise ValueError("polynomial and basis live in different rings")
    if not G.elements:
        return f
    _, r = divide(f, G.elements)
    return r


def is_member(f: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(f, G).is_zero


def _fresh_name(taken: Sequence[str], base: str = "t") -> str:
    if base not in taken:
        return base
    i = 0
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def _order_mentions(order: MonomialOrder, names: Iterable[str]) -> bool:
    return isinstance(order, Block) and bool(set(order.front) & set(names))


def eliminate(
    ideal: IdealPresentation,
    front: Iterable[str],
    step_limit: int = None,
    result_order: MonomialOrder = None,
) -> IdealPresentation:
    """Generators of the elimination ideal: the intersection of the ideal with
    the subring omitting the front variables, read off from a block-order
    Groebner basis."""
    ring = ideal.ring
    front = tuple(sorted(set(front), key=ring.index))
    if not front:
        gb = buchberger(ideal, step_limit)
        return IdealPresentation(ring, gb.elements)
    if len(front) == ring.nvars:
        raise ValueError("cannot eliminate every variable")
    block_ring = ring.with_order(Block(front))
    gens = tuple(convert(g, block_ring) for g in ideal.generators)
    gb = buchberger(IdealPresentation(block_ring, gens), step_limit)
    front_idx = tuple(block_ring.index(v) for v in front)
    kept = [
        g
        for g in gb.elements
        if all(exps[i] == 0 for exps, _ in g.terms for i in front_idx)
    ]
    rest = tuple(v for v in ring.variables if v not in front)
    if result_order is None:
        result_order = Grevlex() if _order_mentions(ring.order, front) else ring.order
    sub = PolynomialRing(rest, ring.field, result_order)
    out = sorted((convert(g, sub) for g in kept), key=lambda h: sub.term_key(h.lm))
    return IdealPresentation(sub, tuple(out))


def saturate_ideal(ideal: IdealPresentation, f: Polynomial, step_limit: int = None) -> IdealPresentation:
    """The saturation ideal : f^infinity, via one fresh inverse variable t in
    a front elimination block and the relation t*f = 1."""
    if f.is_zero:
        raise ValueError("cannot saturate by the zero polynomial")
    ring = ideal.ring
    if f.ring != ring:
        raise ValueError("saturating polynomial lives in a different ring")
    if not ideal.generators:
        return ideal
    t = _fresh_name(ring.variables)
    ext = PolynomialRing((t,) + ring.variables, ring.field, Block((t,)))
    gens = [convert(g, ext) for g in ideal.generators]
    gens.append(ext.var(t) * convert(f, ext) - ext.one)
    inner = IdealPresentation(ext, tuple(gens))
    return eliminate(inner, (t,), step_limit=step_limit, result_order=ring.order)


def radical_member(f: Polynomial, ideal: IdealPresentation, step_limit: int = None) -> bool:
    """Does f vanish on the zero set of the ideal over the algebraic closure?

    Rabinowitsch trick: true iff 1 lies in the ideal extended by t*f - 1 with
    one fresh variable t.
    """
    if f.is_zero:
        return True
    ring = ideal.ring
    if f.ring != ring:
        raise ValueError("polynomial lives in a different ring")
    t = _fresh_name(ring.variables)
    ext = PolynomialRing((t,) + ring.variables, ring.field, Grevlex())
    gens = [convert(g, ext) for g in ideal.generators]
    gens.append(ext.var(t) * convert(f, ext) - ext.one)
    gb = buchberger(IdealPresentation(ext, tuple(gens)), step_limit)
    return gb.is_trivial


def ideal_to_json(ideal: IdealPresentation) -> dict:
    return {
        "field": ideal.ring.field.label,
        "order": ideal.ring.order.to_json(),
        "vars": list(ideal.ring.variables),
        "gens": [format_poly(g) for g in ideal.generators],
    }


def ideal_from_json(obj: dict) -> IdealPresentation:
    field = field_from_label(obj["field"])
    order = MonomialOrder.from_json(obj["order"])
    ring = PolynomialRing(tuple(obj["vars"]), field, order)
    gens = tuple(parse_poly(text, ring) for text in obj["gens"])
    return IdealPresentation(ring, gens)
