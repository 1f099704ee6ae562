"""The parametrized family of affine toric varieties under study.

For n >= 2, d >= 1 and positive integers a_1..a_{n-1}, the configuration

    T = {e_1, ..., e_{n-1}, d*e_n, a_1*e_1 + e_n, ..., a_{n-1}*e_{n-1} + e_n}

labels ambient coordinates x_1..x_n, y_1..y_{n-1} and defines the variety
parametrized by

    x_i = u_i (i < n),   x_n = u_n^d,   y_i = u_i^{a_i} * u_n.

It has codimension n-1 in affine N-space, N = 2n-1.  The interesting regime
is d divisible by at least two distinct primes; that hypothesis drives the
reported lower bound on the number of defining equations, and strict mode
enforces it.

For n = 2 and n = 3 there are explicit candidate binomial sets that cut the
variety out set-theoretically; for n >= 4 no such set is known and none is
fabricated here.  Witness reconstruction inverts the parametrization over a
prime field, constructively: it takes d-th roots of the x_n coordinate and
adjusts by roots of unity, realized as an exhaustive search over all d-th
roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactmath import QQ, PrimeField, dth_roots
from .polyring import MAX_EXPONENT, Grevlex, MonomialOrder, PolynomialRing
from .toric import PointConfiguration


class FamilyHypothesisError(ValueError):
    """Parameter validation failed (sizes, positivity, or the two-primes
    divisibility hypothesis in strict mode)."""


class CandidatesNotProvided(LookupError):
    """No candidate equation set is known for this n; nothing is guessed."""


def distinct_prime_divisors(d: int) -> tuple:
    """Ascending distinct prime divisors of d, by trial division."""
    out = []
    m = d
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class FamilyParams:
    n: int
    d: int
    a: tuple
    strict: bool
    primes: tuple  # two smallest distinct prime divisors of d, or None
    warning: str  # set in non-strict mode when the hypothesis fails

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n - 1


def make_family(n: int, d: int, a: Sequence[int], strict: bool = True) -> FamilyParams:
    """Validate family parameters.

    Strict mode rejects d without two distinct prime divisors.  Non-strict
    mode records a warning instead: the candidate equations stay well defined
    for any d >= 1, only the reported rank bounds lose their hypothesis.
    """
    if not isinstance(n, int) or n < 2:
        raise FamilyHypothesisError(f"n must be an integer >= 2: {n!r}")
    if not isinstance(d, int) or d < 1:
        raise FamilyHypothesisError(f"d must be an integer >= 1: {d!r}")
    a = tuple(int(x) for x in a)
    if len(a) != n - 1:
        raise FamilyHypothesisError(f"need exactly n-1 = {n - 1} exponents a_i, got {len(a)}")
    if any(x < 1 for x in a):
        raise FamilyHypothesisError(f"every a_i must be >= 1: {a}")
    if max(a) * d >= MAX_EXPONENT:
        raise FamilyHypothesisError(f"a_i * d = {max(a) * d} exceeds the exponent bound 2^31 - 1")
    divisors = distinct_prime_divisors(d)
    primes = divisors[:2] if len(divisors) >= 2 else None
    warning = ""
    if primes is None:
        if strict:
            raise FamilyHypothesisError(
                f"d = {d} is not divisible by two distinct primes (divisors: {list(divisors)})"
            )
        warning = (
            f"d = {d} is not divisible by two distinct primes; "
            "rank bounds are unavailable for these parameters"
        )
    return FamilyParams(n=n, d=d, a=a, strict=strict, primes=primes, warning=warning)


def _var_names(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n))


def family_config(params: FamilyParams) -> PointConfiguration:
    """The configuration T for these parameters, ambient x1..xn, y1..y{n-1}."""
    n, d = params.n, params.d
    points = []
    for i in range(n - 1):
        points.append(tuple(1 if j == i else 0 for j in range(n)))
    points.append(tuple(d if j == n - 1 else 0 for j in range(n)))
    for i in range(n - 1):
        points.append(tuple(params.a[i] if j == i else (1 if j == n - 1 else 0) for j in range(n)))
    param_vars = tuple(f"u{i}" for i in range(1, n + 1))
    return PointConfiguration(_var_names(n), points, param_vars)


def ambient_ring(params: FamilyParams, field=QQ, order: MonomialOrder = None) -> PolynomialRing:
    return PolynomialRing(_var_names(params.n), field, order if order is not None else Grevlex())


def phi(params: FamilyParams, u: Sequence) -> tuple:
    """The monomial parametrization at a parameter point, over any field."""
    n, d = params.n, params.d
    if len(u) != n:
        raise ValueError(f"parameter point must have length {n}")
    image = list(u[: n - 1])
    image.append(u[n - 1] ** d)
    for i in range(n - 1):
        image.append(u[i] ** params.a[i] * u[n - 1])
    return tuple(image)


def candidate_binomials(params: FamilyParams, field=QQ, order: MonomialOrder = None) -> tuple:
    """The built-in candidate equations: one binomial for n=2, three for n=3.

    For n >= 4 no candidate set is known to cut the variety out; rather than
    guess, this raises CandidatesNotProvided.
    """
    n, d, a = params.n, params.d, params.a
    ring = ambient_ring(params, field, order)
    one = ring.field.one
    N = params.ambient_dim

    def mono(**powers):
        exps = [0] * N
        for name, e in powers.items():
            exps[ring.index(name)] = e
        return tuple(exps)

    if n == 2:
        f = ring.poly({mono(y1=d): one, mono(x1=a[0] * d, x2=1): -one})
        return (f,)
    if n == 3:
        f1 = ring.poly({mono(y1=d): one, mono(x1=a[0] * d, x3=1): -one})
        f2 = ring.poly({mono(y2=d): one, mono(x2=a[1] * d, x3=1): -one})
        g = ring.poly(
            {
                mono(y1=d - 1, y2=1): one,
                mono(x1=a[0] * (d - 1), x2=a[1], x3=1): -one,
            }
        )
        return (f1, f2, g)
    raise CandidatesNotProvided(
        f"no built-in candidate equations for n = {n}: whether 2n-3 binomials "
        "suffice is an open problem, and nothing is guessed here"
    )


REASON_EQUATION = "equation-violated"
REASON_NO_ROOT = "no-dth-root"
REASON_UNITY = "roots-of-unity-mismatch"


@dataclass(frozen=True)
class WitnessResult:
    """Either a parameter point u with phi(u) equal to the queried point, or
    the first failed step of the reconstruction."""

    point: tuple  # tuple of PrimeFieldElement, or None
    reason: str  # one of the REASON_* constants, or "" when found

    @property
    def found(self) -> bool:
        return self.point is not None


def reconstruct_witness(params: FamilyParams, w: Sequence, p: int) -> WitnessResult:
    """Constructively invert the parametrization at a point of F_p^5 (n = 3).

    u_1, u_2 are forced to the first two coordinates.  If the x_3 coordinate
    is zero, the binomial equations force y_1 = y_2 = 0 and u_3 = 0 works.
    Otherwise u_3 must be one of the d-th roots of x_3; the root-of-unity
    adjustment that aligns y_1 and y_2 simultaneously is realized by trying
    every root.  Absence reports the first step that failed: an equation
    violated, no d-th root in F_p, or no simultaneous root-of-unity choice.
    """
    if params.n != 3:
        raise ValueError("witness reconstruction is defined for the n = 3 family only")
    field = PrimeField(p)
    point = tuple(field(c) for c in w)
    if len(point) != 5:
        raise ValueError(f"point must have length 5, got {len(point)}")
    x1, x2, x3, y1, y2 = point
    a1, a2 = params.a
    d = params.d
    u1, u2 = x1, x2
    zero = field.zero
    if x3 == zero:
        if y1 == zero and y2 == zero:
            return WitnessResult((u1, u2, zero), "")
        return WitnessResult(None, REASON_EQUATION)
    roots = dth_roots(x3, d)
    if not roots:
        return WitnessResult(None, REASON_NO_ROOT)
    for u3 in sorted(roots, key=lambda r: r.residue):
        if y1 == u1**a1 * u3 and y2 == u2**a2 * u3:
            return WitnessResult((u1, u2, u3), "")
    if y1**d != u1 ** (a1 * d) * x3 or y2**d != u2 ** (a2 * d) * x3:
        return WitnessResult(None, REASON_EQUATION)
    return WitnessResult(None, REASON_UNITY)


@dataclass(frozen=True)
class RankBounds:
    """Known bounds on the minimal number of defining equations, reported
    (not computed): the cohomological lower bound N-2 for this family and
    the general Eisenbud-Evans upper bound N.  The exact value is known to
    equal N-2 when n is 2 or 3."""

    N: int
    codim: int
    lower: int
    upper: int
    ara_known: int  # None when the exact value is open

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "codim": self.codim,
            "lower": self.lower,
            "upper": self.upper,
            "ara": self.ara_known,
        }


def rank_bounds(params: FamilyParams) -> RankBounds:
    """Reported bounds; requires strict-mode parameters, because the lower
    bound needs d divisible by two distinct primes."""
    if not params.strict or params.primes is None:
        raise FamilyHypothesisError(
            "rank bounds require strict parameters (d divisible by two distinct primes)"
        )
    N = params.ambient_dim
    return RankBounds(
        N=N,
        codim=params.n - 1,
        lower=N - 2,
        upper=N,
        ara_known=(N - 2) if params.n in (2, 3) else None,
    )
