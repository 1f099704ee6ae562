"""Sparse multivariate polynomials over Q or F_p.

A polynomial is a tuple of (exponent tuple, coefficient) terms kept sorted
strictly descending under its ring's active monomial order; the zero
polynomial is the empty tuple.  All values are immutable and all operations
are pure, so everything here is safe to share freely.

Exponents are bounded below 2**31 and every exponent addition is checked;
overflow is an error, never a silent wrap.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping, Sequence

from .exactmath import QQ, PrimeField, PrimeFieldElement

MAX_EXPONENT = 2**31

_VAR_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

LT, EQ, GT = -1, 0, 1


class ExponentOverflowError(OverflowError):
    """An exponent reached 2**31; the input degrees are too large."""


def _check_exponent(e: int) -> int:
    if e < 0:
        raise ValueError(f"negative exponent: {e}")
    if e >= MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {e} exceeds 2^31 - 1")
    return e


def exp_add(a: tuple, b: tuple) -> tuple:
    return tuple(_check_exponent(x + y) for x, y in zip(a, b))


def exp_sub(a: tuple, b: tuple):
    """a - b componentwise, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def exp_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x >= y else y for x, y in zip(a, b))


class MonomialOrder:
    """Base class for total, multiplicative monomial orders with 1 minimal."""

    def key_func(self, variables: tuple) -> Callable[[tuple], tuple]:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    @staticmethod
    def from_json(obj) -> "MonomialOrder":
        if obj == "lex":
            return Lex()
        if obj == "grevlex":
            return Grevlex()
        if isinstance(obj, Mapping) and "block" in obj:
            return Block(tuple(obj["block"]))
        raise ValueError(f"unknown monomial order {obj!r}")


def _grevlex_key(m: tuple) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


class Lex(MonomialOrder):
    def key_func(self, variables):
        return lambda m: m

    def to_json(self):
        return "lex"

    def __repr__(self):
        return "Lex()"

    def __eq__(self, other):
        return isinstance(other, Lex)

    def __hash__(self):
        return hash("lex")


class Grevlex(MonomialOrder):
    def key_func(self, variables):
        return _grevlex_key

    def to_json(self):
        return "grevlex"

    def __repr__(self):
        return "Grevlex()"

    def __eq__(self, other):
        return isinstance(other, Grevlex)

    def __hash__(self):
        return hash("grevlex")


class Block(MonomialOrder):
    """Elimination order: a front block of variables dominates the rest,
    with grevlex inside each block.  Front variables are given by name, so
    the same order object makes sense in any ring containing them."""

    def __init__(self, front: Iterable[str]):
        self.front = tuple(front)
        if len(set(self.front)) != len(self.front):
            raise ValueError("duplicate names in front block")
        if not self.front:
            raise ValueError("front block must be nonempty")

    def key_func(self, variables):
        front_set = set(self.front)
        missing = front_set - set(variables)
        if missing:
            raise ValueError(f"front-block variables {sorted(missing)} not in ring")
        front_idx = tuple(i for i, v in enumerate(variables) if v in front_set)
        back_idx = tuple(i for i, v in enumerate(variables) if v not in front_set)

        def key(m: tuple) -> tuple:
            return (
                _grevlex_key(tuple(m[i] for i in front_idx)),
                _grevlex_key(tuple(m[i] for i in back_idx)),
            )

        return key

    def to_json(self):
        return {"block": list(self.front)}

    def __repr__(self):
        return f"Block({self.front!r})"

    def __eq__(self, other):
        return isinstance(other, Block) and other.front == self.front

    def __hash__(self):
        return hash(("block", self.front))


def order_compare(order: MonomialOrder, m1: tuple, m2: tuple, variables: tuple = None) -> int:
    """Total-order comparison of two exponent vectors: LT, EQ or GT.

    ``variables`` is only needed for block orders; lex and grevlex are
    positional.
    """
    if len(m1) != len(m2):
        raise ValueError(f"exponent length mismatch: {len(m1)} vs {len(m2)}")
    if variables is None:
        variables = tuple(f"v{i}" for i in range(len(m1)))
        if isinstance(order, Block):
            raise ValueError("block order comparison needs the variable table")
    key = order.key_func(variables)
    k1, k2 = key(m1), key(m2)
    if k1 < k2:
        return LT
    if k1 > k2:
        return GT
    return EQ


class PolynomialRing:
    """Ordered variable table + coefficient field + active monomial order."""

    __slots__ = ("variables", "field", "order", "_index", "_key")

    def __init__(self, variables: Iterable[str], field=QQ, order: MonomialOrder = None):
        vs = tuple(variables)
        if not vs:
            raise ValueError("a polynomial ring needs at least one variable")
        for v in vs:
            if not _VAR_NAME_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names")
        self.variables = vs
        self.field = field
        self.order = order if order is not None else Grevlex()
        self._index = {v: i for i, v in enumerate(vs)}
        self._key = self.order.key_func(vs)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def term_key(self, exps: tuple) -> tuple:
        return self._key(exps)

    def compare(self, m1: tuple, m2: tuple) -> int:
        if len(m1) != self.nvars or len(m2) != self.nvars:
            raise ValueError("exponent length does not match ring")
        k1, k2 = self._key(m1), self._key(m2)
        return LT if k1 < k2 else (GT if k1 > k2 else EQ)

    def coerce(self, value):
        """Coerce an int or a field element into a coefficient."""
        return self.field(value)

    def poly(self, terms: Mapping) -> "Polynomial":
        """Canonicalize a {exponent tuple: coefficient} mapping."""
        cleaned = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError(f"exponent vector {exps} does not match {self.nvars} variables")
            for e in exps:
                _check_exponent(e)
            if c:
                cleaned[exps] = c
        ordered = tuple(sorted(cleaned.items(), key=lambda t: self._key(t[0]), reverse=True))
        return Polynomial(self, ordered)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self.coerce(c)
        if not c:
            return self.zero
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.one),))

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return self.poly({tuple(exps): self.coerce(coeff)})

    def gens(self) -> tuple:
        return tuple(self.var(v) for v in self.variables)

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        if order == self.order:
            return self
        return PolynomialRing(self.variables, self.field, order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and other.variables == self.variables
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.field, self.order))

    def __repr__(self) -> str:
        return f"PolynomialRing({list(self.variables)}, {self.field!r}, {self.order!r})"


class Polynomial:
    """Canonical sparse polynomial; do not call directly, use ring factories."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    @property
    def lm(self) -> tuple:
        """Leading monomial (exponent tuple) under the ring's order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0][1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        c = self.lc
        if c == self.ring.field.one:
            return self
        return Polynomial(self.ring, tuple((e, coef / c) for e, coef in self.terms))

    def mul_term(self, exps: tuple, coeff) -> "Polynomial":
        """Multiply by a single term coeff * x^exps."""
        if not coeff:
            return self.ring.zero
        return Polynomial(self.ring, tuple((exp_add(e, exps), c * coeff) for e, c in self.terms))

    def _require_same_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def _as_poly(self, other):
        if isinstance(other, Polynomial):
            self._require_same_ring(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._as_poly(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            v = acc.get(e)
            v = c if v is None else v + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return self.ring.poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-self._as_poly(other))

    def __rsub__(self, other):
        return (-self) + self._as_poly(other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.coerce(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, tuple((e, k * c) for e, k in self.terms))
        self._require_same_ring(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = exp_add(e1, e2)
                prod = c1 * c2
                v = acc.get(e)
                v = prod if v is None else v + prod
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        return self.ring.poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed and n:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = self.ring.constant(other)
            except TypeError:
                return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __repr__(self) -> str:
        return format_poly(self)


def evaluate(f: Polynomial, point: Sequence):
    """Exact value of f at a point of field elements."""
    ring = f.ring
    if len(point) != ring.nvars:
        raise ValueError(f"point length {len(point)} != {ring.nvars} variables")
    values = [ring.coerce(v) for v in point]
    total = ring.field.zero
    for exps, c in f.terms:
        m = c
        for v, e in zip(values, exps):
            if e:
                m = m * v**e
        total = total + m
    return total


def substitute_monomials(f: Polynomial, images: Sequence[Sequence[int]], target: PolynomialRing) -> Polynomial:
    """Apply the ring map sending variable i of f's ring to the monomial
    x^images[i] of the target ring.  Exact; a homomorphism."""
    ring = f.ring
    if len(images) != ring.nvars:
        raise ValueError(f"need one image per variable: got {len(images)}, want {ring.nvars}")
    if target.field != ring.field:
        raise ValueError("monomial substitution cannot change the coefficient field")
    imgs = [tuple(int(x) for x in img) for img in images]
    for img in imgs:
        if len(img) != target.nvars:
            raise ValueError("image exponent vector does not match target ring")
    acc = {}
    for exps, c in f.terms:
        out = [0] * target.nvars
        for i, e in enumerate(exps):
            if e:
                img = imgs[i]
                for j in range(target.nvars):
                    if img[j]:
                        out[j] += img[j] * e
        key = tuple(_check_exponent(x) for x in out)
        v = acc.get(key)
        v = c if v is None else v + c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return target.poly(acc)


def convert(f: Polynomial, target: PolynomialRing) -> Polynomial:
    """Move f into another ring, matching variables by name.

    Coefficients are copied when the fields agree, and reduced mod p for a
    Q -> F_p change (an error if a denominator vanishes mod p).  Dropping a
    variable is allowed only when f never uses it.
    """
    ring = f.ring
    if ring == target:
        return f
    idx_map = []
    for name in ring.variables:
        idx_map.append(target._index.get(name))
    same_field = ring.field == target.field
    if not same_field and not (ring.field == QQ and isinstance(target.field, PrimeField)):
        raise ValueError(f"cannot convert coefficients from {ring.field!r} to {target.field!r}")
    acc = {}
    for exps, c in f.terms:
        out = [0] * target.nvars
        for i, e in enumerate(exps):
            if e:
                j = idx_map[i]
                if j is None:
                    raise ValueError(
                        f"polynomial uses variable {ring.variables[i]!r} absent from target ring"
                    )
                out[j] = e
        if same_field:
            nc = c
        else:
            nc = target.field.from_ratio(c.numerator, c.denominator)
        key = tuple(out)
        v = acc.get(key)
        v = nc if v is None else v + nc
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return target.poly(acc)


class ParseError(ValueError):
    """Polynomial text did not match the grammar; carries a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_poly(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse the canonical grammar:

        poly   := ["+"|"-"] term (("+"|"-") term)*
        term   := coeff ["*" factors] | factors
        factors:= factor ("*" factor)*
        factor := var ["^" posint]
        coeff  := int ["/" posint]

    Whitespace is insignificant.  Unknown variables and syntax errors raise
    ParseError with a position.
    """
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx]

    def advance():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def expect_int(what: str) -> int:
        kind, value, pos = peek()
        if kind != "int":
            raise ParseError(f"expected {what}", pos)
        advance()
        return value

    def parse_factor(exps: list):
        kind, value, pos = advance()
        if kind != "name":
            raise ParseError("expected a variable name", pos)
        if value not in ring._index:
            raise ParseError(f"unknown variable {value!r}", pos)
        e = 1
        if peek()[0] == "op" and peek()[1] == "^":
            advance()
            e = expect_int("an exponent")
            if e < 1:
                raise ParseError("exponent must be positive", peek()[2])
        i = ring.index(value)
        exps[i] = _check_exponent(exps[i] + e)

    def parse_term(sign: int):
        exps = [0] * ring.nvars
        kind, value, pos = peek()
        if kind == "int":
            advance()
            num = value
            den = 1
            if peek()[0] == "op" and peek()[1] == "/":
                advance()
                den = expect_int("a denominator")
                if den == 0:
                    raise ParseError("zero denominator", pos)
            coeff = ring.field.from_ratio(sign * num, den)
            if peek()[0] == "op" and peek()[1] == "*":
                advance()
                parse_factor(exps)
                while peek()[0] == "op" and peek()[1] == "*":
                    advance()
                    parse_factor(exps)
            return tuple(exps), coeff
        parse_factor(exps)
        while peek()[0] == "op" and peek()[1] == "*":
            advance()
            parse_factor(exps)
        return tuple(exps), ring.field.from_ratio(sign, 1)

    acc = {}

    def add_term(exps, coeff):
        v = acc.get(exps)
        v = coeff if v is None else v + coeff
        if v:
            acc[exps] = v
        else:
            acc.pop(exps, None)

    sign = 1
    kind, value, pos = peek()
    if kind == "op" and value in "+-":
        advance()
        sign = -1 if value == "-" else 1
    elif kind == "op":
        raise ParseError(f"unexpected operator {value!r}", pos)
    if peek()[0] == "end":
        raise ParseError("empty polynomial text", peek()[2])
    add_term(*parse_term(sign))
    while peek()[0] != "end":
        kind, value, pos = advance()
        if kind != "op" or value not in "+-":
            raise ParseError("expected '+' or '-' between terms", pos)
        add_term(*parse_term(-1 if value == "-" else 1))
    return ring.poly(acc)


def _coeff_sign_magnitude(field, c) -> tuple:
    """(is_negative, magnitude string).  F_p residues display balanced, so a
    binomial difference prints as a difference for any p."""
    if isinstance(c, PrimeFieldElement):
        p = c.field.p
        r = c.residue if c.residue <= p // 2 else c.residue - p
        return r < 0, str(abs(r))
    neg = c < 0
    return neg, str(-c if neg else c)


def format_poly(f: Polynomial) -> str:
    """Canonical text: terms descending under the ring's order, explicit '^'
    and '*', coefficient 1 elided except on constants."""
    if f.is_zero:
        return "0"
    ring = f.ring
    chunks = []
    for i, (exps, c) in enumerate(f.terms):
        neg, mag = _coeff_sign_magnitude(ring.field, c)
        factors = []
        for name, e in zip(ring.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = mag + "*" + "*".join(factors)
        if i == 0:
            chunks.append("-" + body if neg else body)
        else:
            chunks.append((" - " if neg else " + ") + body)
    return "".join(chunks)
