"""Toric ideals from lattice point configurations, plus finite-field
solution sets.

A configuration is a list of lattice points labelling the ambient variables;
the associated variety is the closure of the image of the monomial map they
define.  Its ideal is computed the standard way: binomials from a saturated
kernel-lattice basis, then saturation by the product of all variables, then a
reduced Groebner basis in the requested order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactmath import QQ, IntegerMatrix, PrimeField, kernel_lattice, rank
from .groebner import GroebnerBasis, IdealPresentation, buchberger, saturate_ideal
from .polyring import (
    MAX_EXPONENT,
    Grevlex,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    convert,
    substitute_monomials,
)

DEFAULT_ENUMERATION_CAP = 10_000_000


class EnumerationCapExceeded(RuntimeError):
    """p**N points is more than the enumeration budget allows."""


@dataclass(frozen=True)
class PointConfiguration:
    """Lattice points labelling ambient variables, with parameter names."""

    ambient_vars: tuple
    points: tuple
    param_vars: tuple

    def __init__(self, ambient_vars: Iterable[str], points: Iterable[Sequence[int]], param_vars: Iterable[str]):
        av = tuple(ambient_vars)
        pv = tuple(param_vars)
        pts = tuple(tuple(int(x) for x in p) for p in points)
        n = len(pv)
        if not (len(av) >= n >= 1):
            raise ValueError(f"need N >= n >= 1, got N={len(av)}, n={n}")
        if len(pts) != len(av):
            raise ValueError(f"{len(av)} ambient variables but {len(pts)} lattice points")
        for p in pts:
            if len(p) != n:
                raise ValueError(f"lattice point {p} does not have length {n}")
            for e in p:
                if e < 0 or e >= MAX_EXPONENT:
                    raise ValueError(f"lattice point entry out of range: {e}")
        object.__setattr__(self, "ambient_vars", av)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "param_vars", pv)

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient_vars)

    @property
    def param_dim(self) -> int:
        return len(self.param_vars)

    def to_json(self) -> dict:
        return {
            "n": self.param_dim,
            "vars": list(self.ambient_vars),
            "params": list(self.param_vars),
            "points": [list(p) for p in self.points],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PointConfiguration":
        config = cls(obj["vars"], obj["points"], obj["params"])
        if config.param_dim != obj["n"]:
            raise ValueError("configuration JSON: 'n' disagrees with 'params'")
        return config


def config_matrix(config: PointConfiguration) -> IntegerMatrix:
    """The n x N exponent matrix whose j-th column is the j-th lattice point."""
    n = config.param_dim
    return IntegerMatrix([[p[i] for p in config.points] for i in range(n)])


def codimension(config: PointConfiguration) -> int:
    """Ambient dimension minus the rank of the exponent matrix."""
    return config.ambient_dim - rank(config_matrix(config))


def ambient_ring(config: PointConfiguration, field=QQ, order: MonomialOrder = None) -> PolynomialRing:
    return PolynomialRing(config.ambient_vars, field, order if order is not None else Grevlex())


def parameter_ring(config: PointConfiguration, field=QQ) -> PolynomialRing:
    return PolynomialRing(config.param_vars, field, Grevlex())


def lattice_ideal_generators(config: PointConfiguration, ring: PolynomialRing) -> tuple:
    """One binomial x^{u+} - x^{u-} per saturated kernel-lattice basis vector."""
    basis = kernel_lattice(config_matrix(config))
    one = ring.field.one
    gens = []
    for v in basis:
        plus = tuple(e if e > 0 else 0 for e in v)
        minus = tuple(-e if e < 0 else 0 for e in v)
        gens.append(ring.poly({plus: one, minus: -one}))
    return tuple(gens)


def toric_ideal(
    config: PointConfiguration,
    field=QQ,
    order: MonomialOrder = None,
    step_limit: int = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the vanishing ideal of the parametrization.

    The kernel-lattice basis is saturated, so a single saturation by the
    product of all ambient variables turns the lattice-basis binomial ideal
    into the full toric ideal.  Every element of the result is a difference
    of two monic monomials.
    """
    ring = ambient_ring(config, field, order)
    gens = lattice_ideal_generators(config, ring)
    if not gens:
        return GroebnerBasis((), ring)
    all_vars = ring.monomial((1,) * ring.nvars)
    sat = saturate_ideal(IdealPresentation(ring, gens), all_vars, step_limit=step_limit)
    return buchberger(IdealPresentation(ring, tuple(convert(g, ring) for g in sat.generators)), step_limit)


def parametrization_images(config: PointConfiguration) -> tuple:
    """Exponent vectors of the monomial images of the ambient variables."""
    return config.points


def vanishes_on_parametrization(f: Polynomial, config: PointConfiguration) -> bool:
    """Exact symbolic test: does f pull back to zero along the monomial map?"""
    if f.ring.variables != config.ambient_vars:
        raise ValueError("polynomial is not in the ambient ring of the configuration")
    pring = parameter_ring(config, f.ring.field)
    return substitute_monomials(f, config.points, pring).is_zero


@dataclass(frozen=True)
class FinitePointSet:
    """All common zeros in F_p^N, sorted lexicographically."""

    p: int
    dimension: int
    points: tuple

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return tuple(pt) in set(self.points)

    def report(self) -> str:
        return "\n".join(",".join(str(c) for c in pt) for pt in self.points)

    def to_json(self) -> dict:
        return {"p": self.p, "dimension": self.dimension, "points": [list(pt) for pt in self.points]}


def solution_set(
    gens: Sequence[Polynomial],
    p: int,
    ring: PolynomialRing = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> FinitePointSet:
    """Exhaustive enumeration of F_p^N with early exit per point.

    Generators over Q are reduced mod p first.  The p**N <= cap guard keeps
    worst cases bounded; the default cap makes F_7^5 and F_13^5 instant.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring when the generator list is empty")
        ring = gens[0].ring
    field = PrimeField(p)
    nvars = ring.nvars
    if p**nvars > cap:
        raise EnumerationCapExceeded(f"{p}^{nvars} points exceeds the cap of {cap}")
    ring_p = ring if ring.field == field else PolynomialRing(ring.variables, field, ring.order)
    compiled = []
    for g in gens:
        gp = convert(g, ring_p)
        if gp.is_zero:
            continue
        if gp.is_constant:
            return FinitePointSet(p, nvars, ())
        compiled.append([(c.residue, exps) for exps, c in gp.terms])
    if not compiled:
        points = tuple(itertools.product(range(p), repeat=nvars))
        return FinitePointSet(p, nvars, points)
    max_exp = [0] * nvars
    for terms in compiled:
        for _, exps in terms:
            for j, e in enumerate(exps):
                if e > max_exp[j]:
                    max_exp[j] = e
    tables = [
        [[pow(v, e, p) for e in range(max_exp[j] + 1)] for v in range(p)]
        for j in range(nvars)
    ]
    points = []
    for pt in itertools.product(range(p), repeat=nvars):
        for terms in compiled:
            total = 0
            for c, exps in terms:
                m = c
                for j, e in enumerate(exps):
                    if e:
                        m = m * tables[j][pt[j]][e] % p
                total += m
            if total % p:
                break
        else:
            points.append(pt)
    return FinitePointSet(p, nvars, tuple(points))
