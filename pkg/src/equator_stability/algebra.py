"""Exact sparse polynomial arithmetic on the unit sphere, and radial fields.

The symbolic engine works in the coordinates y_i = x_i / r on the unit
sphere S^(m-1), where r = |x| is the Euclidean norm.  Everything here is
exact: coefficients are rationals, represented as integer numerators over
a single positive denominator shared by the whole polynomial.  No
floating point enters this module.

A :class:`Poly` is a sparse multivariate polynomial.  Monomials are packed
into a single integer key, ``EXP_BITS`` bits per variable, so that monomial
multiplication is integer addition and hashing is cheap.  This limits
per-variable exponents to ``MAX_EXP``, far above anything the desk-scale
computations here produce (degrees stay below 20).

A :class:`SpherePoly` is not a separate class: it is a :class:`Poly` in
normal form modulo the sphere relation sum(y_i^2) = 1.  The normal form is
computed by :func:`sphere_reduce`, which rewrites y_1^2 -> 1 - sum_{i>=2}
y_i^2 until the degree in y_1 is at most one.  The relation ideal is
principal, so this single confluent rewrite yields a unique normal form:
two polynomials agree as functions on the sphere iff their normal forms
are identical.

A :class:`RadialField` is a pair (P, d) representing the function
P(y) * r^(-d) on R^m minus the origin.  Differentiating such a function in
x is again such a function, which is what makes the whole verification
pipeline a closed, exact computation:

    d/dx_j [P(y) r^(-d)]
        = [dP/dy_j - y_j * (E + d)(P)] * r^(-d-1),

with E the Euler operator sum_i y_i d/dy_i.  Since E scales each monomial
by its total degree, the bracket costs one linear pass over P.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

EXP_BITS = 6
MAX_EXP = (1 << EXP_BITS) - 1
_EXP_MASK = MAX_EXP

Scalar = Union[int, Fraction]


class AlgebraError(ValueError):
    """Raised for domain violations in the exact-algebra layer."""


def _pack(exponents: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exponents):
        if e < 0 or e > MAX_EXP:
            raise AlgebraError(f"exponent {e} outside supported range 0..{MAX_EXP}")
        key |= e << (EXP_BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple:
    return tuple((key >> (EXP_BITS * i)) & _EXP_MASK for i in range(nvars))


def _term_degree(key: int, nvars: int) -> int:
    deg = 0
    for i in range(nvars):
        deg += (key >> (EXP_BITS * i)) & _EXP_MASK
    return deg


def _as_num_den(value: Scalar) -> tuple:
    if isinstance(value, int):
        return value, 1
    num, den = value.numerator, value.denominator
    return int(num), int(den)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients.

    ``terms`` maps packed monomial keys to integer numerators; ``den`` is
    the shared positive denominator.  The stored form is canonical: no
    zero numerators, and gcd(content, den) == 1.  Canonical form makes
    equality and hashing structural.
    """

    __slots__ = ("nvars", "terms", "den", "_hash", "_degree_bound")

    def __init__(self, nvars: int, terms: dict, den: int = 1, _degree_bound: int | None = None):
        if den <= 0:
            raise AlgebraError("denominator must be positive")
        if terms:
            g = den
            for c in terms.values():
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                terms = {k: c // g for k, c in terms.items()}
                den //= g
        else:
            den = 1
        self.nvars = nvars
        self.terms = terms
        self.den = den
        self._hash = None
        self._degree_bound = _degree_bound

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {}, 1, 0)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Poly":
        num, den = _as_num_den(value)
        if num == 0:
            return cls.zero(nvars)
        return cls(nvars, {0: num}, den, 0)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        """The polynomial y_index, with 0-based index."""
        if not 0 <= index < nvars:
            raise AlgebraError(f"variable index {index} out of range for {nvars} variables")
        return cls(nvars, {1 << (EXP_BITS * index): 1}, 1, 1)

    @classmethod
    def from_terms(cls, nvars: int, coeffs: Mapping[Sequence[int], Scalar]) -> "Poly":
        """Build from a mapping of exponent tuples to rational coefficients."""
        acc: dict = {}
        den = 1
        for exps, value in coeffs.items():
            num, d = _as_num_den(value)
            if num == 0:
                continue
            key = _pack(exps)
            if d != den:
                g = gcd(den, d)
                scale_old, scale_new = d // g, den // g
                if scale_old != 1:
                    acc = {k: c * scale_old for k, c in acc.items()}
                den *= scale_old
                num *= scale_new
            acc[key] = acc.get(key, 0) + num
        acc = {k: c for k, c in acc.items() if c != 0}
        return cls(nvars, acc, den)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero for the empty one)."""
        if not self.is_constant():
            raise AlgebraError("polynomial is not constant")
        return Fraction(self.terms.get(0, 0), self.den)

    def total_degree(self) -> int:
        """Exact total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(_term_degree(k, self.nvars) for k in self.terms)

    def degree_bound(self) -> int:
        """Cheap upper bound for the total degree (exact when constructed directly)."""
        if self._degree_bound is None:
            self._degree_bound = self.total_degree()
        return self._degree_bound

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return Fraction(self.terms.get(_pack(exponents), 0), self.den)

    def as_dict(self) -> dict:
        """Expanded view {exponent tuple: Fraction coefficient}."""
        return {_unpack(k, self.nvars): Fraction(c, self.den) for k, c in self.terms.items()}

    def evaluate(self, point: Sequence) -> object:
        """Evaluate at a point; exact for Fraction inputs, float for floats."""
        if len(point) != self.nvars:
            raise AlgebraError("point dimension mismatch")
        total = 0
        for key, num in self.terms.items():
            value = num
            for i in range(self.nvars):
                e = (key >> (EXP_BITS * i)) & _EXP_MASK
                if e:
                    value = value * point[i] ** e
            total = total + value
        if self.den == 1:
            return total
        return total * Fraction(1, self.den)

    # -- ring operations --------------------------------------------------

    def _check_same_ring(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise AlgebraError("polynomials live in different variable counts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_ring(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        g = gcd(self.den, other.den)
        ls, rs = other.den // g, self.den // g
        out = {k: c * ls for k, c in self.terms.items()} if ls != 1 else dict(self.terms)
        for k, c in other.terms.items():
            c = c * rs
            acc = out.get(k, 0) + c
            if acc:
                out[k] = acc
            else:
                del out[k]
        bound = max(self.degree_bound(), other.degree_bound())
        return Poly(self.nvars, out, self.den * ls, bound)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {k: -c for k, c in self.terms.items()}, self.den, self._degree_bound)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check_same_ring(other)
        if not self.terms or not other.terms:
            return Poly.zero(self.nvars)
        if self.degree_bound() + other.degree_bound() > MAX_EXP:
            raise AlgebraError("product degree exceeds packed-exponent capacity")
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out: dict = {}
        get = out.get
        for k1, c1 in small.items():
            for k2, c2 in big.items():
                k = k1 + k2
                prev = get(k)
                if prev is None:
                    out[k] = c1 * c2
                else:
                    acc = prev + c1 * c2
                    if acc:
                        out[k] = acc
                    else:
                        del out[k]
        return Poly(self.nvars, out, self.den * other.den,
                    self.degree_bound() + other.degree_bound())

    __rmul__ = __mul__

    def scale(self, value: Scalar) -> "Poly":
        num, den = _as_num_den(value)
        if num == 0:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {k: c * num for k, c in self.terms.items()},
                    self.den * den, self._degree_bound)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise AlgebraError("negative powers are not defined")
        result = Poly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed:
                base = base * base
        return result

    def partial(self, index: int) -> "Poly":
        """Partial derivative with respect to variable ``index`` (0-based)."""
        if not 0 <= index < self.nvars:
            raise AlgebraError(f"variable index {index} out of range")
        shift = EXP_BITS * index
        step = 1 << shift
        out = {}
        for k, c in self.terms.items():
            e = (k >> shift) & _EXP_MASK
            if e:
                out[k - step] = c * e
        bound = max(self.degree_bound() - 1, 0)
        return Poly(self.nvars, out, self.den, bound)

    def substitute(self, replacements: Sequence["Poly"]) -> "Poly":
        """Evaluate at polynomial arguments, one replacement per variable."""
        if len(replacements) != self.nvars:
            raise AlgebraError("need one replacement polynomial per variable")
        target_vars = replacements[0].nvars
        result = Poly.zero(target_vars)
        power_cache = [{0: Poly.constant(target_vars, 1)} for _ in range(self.nvars)]

        def var_power(i: int, e: int) -> Poly:
            cache = power_cache[i]
            if e not in cache:
                cache[e] = var_power(i, e - 1) * replacements[i]
            return cache[e]

        for key, num in self.terms.items():
            term = Poly.constant(target_vars, Fraction(num, self.den))
            for i in range(self.nvars):
                e = (key >> (EXP_BITS * i)) & _EXP_MASK
                if e:
                    term = term * var_power(i, e)
            result = result + term
        return result

    # -- structural ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.nvars == other.nvars and self.den == other.den
                and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.den, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, reverse=True):
            coeff = Fraction(self.terms[key], self.den)
            factors = []
            for i in range(self.nvars):
                e = (key >> (EXP_BITS * i)) & _EXP_MASK
                if e == 1:
                    factors.append(f"y{i + 1}")
                elif e > 1:
                    factors.append(f"y{i + 1}^{e}")
            mono = "*".join(factors)
            if mono:
                if coeff == 1:
                    parts.append(mono)
                elif coeff == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{coeff}*{mono}")
            else:
                parts.append(str(coeff))
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def _reducer_power(nvars: int, n: int) -> Poly:
    """(1 - sum_{i>=2} y_i^2)^n, the replacement for y_1^(2n)."""
    if n == 0:
        return Poly.constant(nvars, 1)
    base = Poly.constant(nvars, 1)
    for i in range(1, nvars):
        base = base - Poly.variable(nvars, i) * Poly.variable(nvars, i)
    return _reducer_power(nvars, n - 1) * base


def sphere_reduce(p: Poly) -> Poly:
    """Normal form of ``p`` modulo the sphere relation sum(y_i^2) = 1.

    Exhaustively rewrites y_1^2 -> 1 - sum_{i>=2} y_i^2, leaving a unique
    representative of degree at most one in y_1.  Idempotent.
    """
    if p.nvars < 1:
        raise AlgebraError("need at least one variable")
    worst = 0
    for key in p.terms:
        e0 = key & _EXP_MASK
        if e0 > worst:
            worst = e0
    if worst <= 1:
        return p
    kept: dict = {}
    rewritten = Poly.zero(p.nvars)
    for key, num in p.terms.items():
        e0 = key & _EXP_MASK
        if e0 <= 1:
            kept[key] = num
        else:
            rest_key = key - e0 + (e0 & 1)
            rest = Poly(p.nvars, {rest_key: num}, p.den)
            rewritten = rewritten + rest * _reducer_power(p.nvars, e0 // 2)
    return Poly(p.nvars, kept, p.den) + rewritten


class RadialField:
    """The function P(y) * r^(-d) on R^m minus the origin.

    Canonical form: the numerator is sphere-reduced, and the zero function
    is stored as (0, d=0).  The r-power is never reduced against the
    numerator; two nonzero fields are equal iff they share d and have
    equal numerators, since fields with different d scale differently.
    """

    __slots__ = ("poly", "d", "_hash")

    def __init__(self, poly: Poly, d: int):
        if d < 0:
            raise AlgebraError("r-power must be non-negative")
        poly = sphere_reduce(poly)
        if poly.is_zero():
            d = 0
        self.poly = poly
        self.d = d
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> "RadialField":
        return cls(Poly.zero(nvars), 0)

    @classmethod
    def constant(cls, nvars: int, value: Scalar, d: int = 0) -> "RadialField":
        return cls(Poly.constant(nvars, value), d)

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "RadialField") -> "RadialField":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.d != other.d:
            raise AlgebraError(
                f"cannot add fields of different homogeneity (r^-{self.d} vs r^-{other.d})")
        return RadialField(self.poly + other.poly, self.d)

    def __neg__(self) -> "RadialField":
        return RadialField(-self.poly, self.d)

    def __sub__(self, other: "RadialField") -> "RadialField":
        return self + (-other)

    def __mul__(self, other) -> "RadialField":
        if isinstance(other, RadialField):
            return RadialField(self.poly * other.poly, self.d + other.d)
        return RadialField(self.poly.scale(other), self.d)

    __rmul__ = __mul__

    def mul_r(self) -> "RadialField":
        """Multiply by r.  Only defined while the result stays in r^(-d), d >= 0."""
        if self.is_zero():
            return self
        if self.d < 1:
            raise AlgebraError("multiplying by r would produce a positive r-power")
        return RadialField(self.poly, self.d - 1)

    def evaluate(self, x: Sequence[float]) -> float:
        """Evaluate at a point of R^m away from the origin."""
        r2 = sum(c * c for c in x)
        if r2 == 0:
            raise AlgebraError("radial fields are undefined at the origin")
        r = r2 ** 0.5
        y = [c / r for c in x]
        return self.poly.evaluate(y) / r ** self.d

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadialField):
            return NotImplemented
        return self.d == other.d and self.poly == other.poly

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.d, self.poly))
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        if self.d == 0:
            return repr(self.poly)
        return f"({self.poly!r}) * r^-{self.d}"


@lru_cache(maxsize=None)
def radial_partial(f: RadialField, axis: int) -> RadialField:
    """Exact x-derivative d/dx_axis of a radial field (axis is 1-based).

    With f = P(y) r^(-d) the chain rule for y = x/r gives

        df/dx_j = [dP/dy_j - y_j * (E(P) + d P)] * r^(-d-1),

    where the Euler operator E scales each monomial by its total degree.
    """
    m = f.nvars
    if not 1 <= axis <= m:
        raise AlgebraError(f"axis {axis} out of range 1..{m}")
    if f.is_zero():
        return f
    j = axis - 1
    p = f.poly
    shift = EXP_BITS * j
    step = 1 << shift
    out: dict = {}
    get = out.get
    for key, num in p.terms.items():
        e_j = (key >> shift) & _EXP_MASK
        if e_j:
            k = key - step
            acc = get(k, 0) + num * e_j
            if acc:
                out[k] = acc
            else:
                del out[k]
        weight = _term_degree(key, m) + f.d
        if weight:
            k = key + step
            acc = get(k, 0) - num * weight
            if acc:
                out[k] = acc
            else:
                del out[k]
    bound = p.degree_bound() + 1
    return RadialField(Poly(m, out, p.den, bound), f.d + 1)


@lru_cache(maxsize=None)
def laplacian(f: RadialField) -> RadialField:
    """Flat Laplacian sum_j d^2/dx_j^2, exact on radial fields."""
    total = RadialField.zero(f.nvars)
    for axis in range(1, f.nvars + 1):
        total = total + radial_partial(radial_partial(f, axis), axis)
    return total


def inner_product(a: Iterable[RadialField], b: Iterable[RadialField]) -> RadialField:
    """Componentwise Euclidean pairing sum_i a_i * b_i."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise AlgebraError(f"length mismatch: {len(a)} vs {len(b)}")
    if not a:
        raise AlgebraError("empty component lists")
    total = RadialField.zero(a[0].nvars)
    for fa, fb in zip(a, b):
        total = total + fa * fb
    return total
