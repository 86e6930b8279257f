"""Exact arithmetic for braiding phases.

Every coefficient produced by the contour representation is a finite sum of
monomials

    c * q^a * z_1^{m_1} * ... * z_N^{m_N}

with rational c and a and integer m_k, or a formal quotient of two such sums.
Here q is the deformation parameter and z_k is the weight phase q^{-alpha_k
. lambda} kept formal at generic weight.  Exponents of q are rational because
a symmetrizer of 1/2 produces half-integer powers.

A sum is stored as a sparse dict mapping the monomial key (a, m) to its
nonzero rational coefficient; the zero sum is the empty dict.  Because the
key group Q x Z^N is ordered, the sums form an integral domain, so the
quotients below are a genuine fraction field and equality can be decided by
cross-multiplication.  No gcd over these sums is ever computed: `normalize`
only fixes the unit ambiguity (a common monomial factor and a common rational
scale), which is enough to make canonical forms reproducible.

The number of z slots (the arity) is fixed per computation: single modules
use one slot per simple root, tensor squares use two.  Mixing arities is an
error, never a silent coercion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

# Monomial key: (q-exponent, z-exponent vector).
Key = tuple[Fraction, tuple[int, ...]]
# Sparse sum of monomials; zero-coefficient entries are never stored.
Poly = dict[Key, Fraction]

Rational = Union[int, Fraction]


class ArityMismatchError(ValueError):
    """Raised when scalars from different weight-variable contexts meet."""


class DenominatorVanishesError(ZeroDivisionError):
    """Raised when a z-substitution sends a denominator to zero."""


def _zero_key(arity: int) -> Key:
    return (Fraction(0), (0,) * arity)


def _one_poly(arity: int) -> Poly:
    return {_zero_key(arity): Fraction(1)}


def _strip(p: Poly) -> Poly:
    return {k: c for k, c in p.items() if c != 0}


def _padd(p1: Poly, p2: Poly) -> Poly:
    out = dict(p1)
    for k, c in p2.items():
        out[k] = out.get(k, Fraction(0)) + c
    return _strip(out)


def _pneg(p: Poly) -> Poly:
    return {k: -c for k, c in p.items()}

def _pmul(p1: Poly, p2: Poly) -> Poly:
    out: Poly = {}
    for (a1, m1), c1 in p1.items():
        for (a2, m2), c2 in p2.items():
            k = (a1 + a2, tuple(x + y for x, y in zip(m1, m2)))
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return _strip(out)


def _pdiv_term(p: Poly, key: Key, coeff: Fraction) -> Poly:
    """Divide a sum by the single monomial coeff*key (always exact)."""
    a0, m0 = key
    return {
        (a - a0, tuple(x - y for x, y in zip(m, m0))): c / coeff
        for (a, m), c in p.items()
    }


def term_order(key: Key):
    """Total order on monomial keys used for leading terms and rendering.

    Sorts by the z-exponent vector first (lexicographically ascending), then
    by descending q-exponent, so that e.g. q - q^-1 and z1^-1 - z1 both read
    in their customary order.
    """
    a, m = key
    return (m, -a)


class PhaseScalar:
    """An element of the fraction field of phase sums.

    Instances are immutable by convention; all operations return new values.
    The stored pair (num, den) is canonical only up to units: `normalize`
    fixes the unit, `==` compares by cross-multiplication.
    """

    __slots__ = ("num", "den", "arity")

    def __init__(self, num: Poly, den: Poly, arity: int):
        num = _strip(num)
        den = _strip(den)
        if not den:
            raise ZeroDivisionError("phase scalar with zero denominator")
        if not num:
            den = _one_poly(arity)
        elif len(den) == 1:
            # A single-monomial denominator is a unit: fold it away.
            key, coeff = next(iter(den.items()))
            num = _pdiv_term(num, key, coeff)
            den = _one_poly(arity)
        self.num = num
        self.den = den
        self.arity = arity

    # ---- constructors ----

    @classmethod
    def zero(cls, arity: int) -> "PhaseScalar":
        return cls({}, _one_poly(arity), arity)

    @classmethod
    def one(cls, arity: int) -> "PhaseScalar":
        return cls.from_rational(1, arity)

    @classmethod
    def from_rational(cls, c: Rational, arity: int) -> "PhaseScalar":
        c = Fraction(c)
        num = {} if c == 0 else {_zero_key(arity): c}
        return cls(num, _one_poly(arity), arity)

    @classmethod
    def monomial(cls, coeff: Rational, a: Rational, m: Sequence[int],
                 arity: int) -> "PhaseScalar":
        m = tuple(m)
        if len(m) != arity:
            raise ArityMismatchError(f"exponent vector {m} has arity {len(m)}, expected {arity}")
        coeff = Fraction(coeff)
        num = {} if coeff == 0 else {(Fraction(a), m): coeff}
        return cls(num, _one_poly(arity), arity)

    def _coerce(self, other) -> "PhaseScalar":
        if isinstance(other, PhaseScalar):
            if other.arity != self.arity:
                raise ArityMismatchError(
                    f"mixed scalar arities {self.arity} and {other.arity}")
            return other
        if isinstance(other, (int, Fraction)):
            return PhaseScalar.from_rational(other, self.arity)
        return NotImplemented

    # ---- predicates ----

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self == PhaseScalar.one(self.arity)

    # ---- arithmetic ----

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return PhaseScalar(_padd(self.num, other.num), self.den, self.arity)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return PhaseScalar(num, _pmul(self.den, other.den), self.arity)

    __radd__ = __add__

    def __neg__(self):
        return PhaseScalar(_pneg(self.num), self.den, self.arity)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PhaseScalar(_pmul(self.num, other.num),
                           _pmul(self.den, other.den), self.arity)

    __rmul__ = __mul__

    def invert(self) -> "PhaseScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero phase scalar")
        return PhaseScalar(self.den, self.num, self.arity)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, n: int) -> "PhaseScalar":
        if not isinstance(n, int):
            raise TypeError("phase scalars support integer powers only")
        if n < 0:
            return self.invert() ** (-n)
        result = PhaseScalar.one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- comparison ----

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    __hash__ = None  # mutable dicts inside; equality is semantic anyway

    # ---- normal form ----

    def normalize(self) -> "PhaseScalar":
        """Return the unit-canonical representative of this value.

        The numerator and denominator are divided by the denominator's
        leading term (leading under `term_order`), so the denominator's
        leading monomial becomes exactly 1.  Two representations that differ
        by a common monomial factor and a common rational scale normalize to
        identical (num, den) pairs.
        """
        if self.is_zero():
            return PhaseScalar.zero(self.arity)
        lead = min(self.den, key=term_order)
        coeff = self.den[lead]
        out = PhaseScalar.__new__(PhaseScalar)
        out.num = _pdiv_term(self.num, lead, coeff)
        out.den = _pdiv_term(self.den, lead, coeff)
        out.arity = self.arity
        return out

    def leading_unit(self) -> "PhaseScalar":
        """The leading numerator term as a standalone monomial.

        Dividing by it rescales a value by a unit; linear solvers use this to
        strip common monomial/rational factors from whole rows.
        """
        if self.is_zero():
            raise ZeroDivisionError("zero scalar has no leading unit")
        key = min(self.num, key=term_order)
        a, m = key
        return PhaseScalar.monomial(self.num[key], a, m, self.arity)

    # ---- substitution ----

    def substitute_z(self, q_exponents: Sequence[Rational]) -> "PhaseScalar":
        """Substitute z_k -> q^{e_k} for each slot k.

        Used to specialize a generic-weight result at a concrete weight
        (e_k = -alpha_k . lambda).  Raises DenominatorVanishesError when the
        substitution kills the denominator, which happens at weights where
        the generic expression is a genuine 0/0.
        """
        exps = [Fraction(e) for e in q_exponents]
        if len(exps) != self.arity:
            raise ArityMismatchError(
                f"{len(exps)} substitution values for arity {self.arity}")

        def sub(p: Poly) -> Poly:
            out: Poly = {}
            for (a, m), c in p.items():
                key = (a + sum(mk * ek for mk, ek in zip(m, exps)),
                       (0,) * self.arity)
                out[key] = out.get(key, Fraction(0)) + c
            return _strip(out)

        den = sub(self.den)
        if not den:
            raise DenominatorVanishesError(
                "denominator vanishes under z substitution")
        return PhaseScalar(sub(self.num), den, self.arity)

    # ---- rendering ----

    def render(self, wrap: bool = False) -> str:
        """Deterministic text form; `wrap` parenthesizes multi-term sums."""
        if self.is_zero():
            return "0"
        num_s = render_poly(self.num)
        if self.den == _one_poly(self.arity):
            if wrap and len(self.num) > 1:
                return f"({num_s})"
            return num_s
        return f"({num_s})/({render_poly(self.den)})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PhaseScalar({self.render()!r}, arity={self.arity})"


def render_poly(p: Poly) -> str:
    """Render a sum of monomials, terms ordered by `term_order`."""
    if not p:
        return "0"
    parts: list[str] = []
    for key in sorted(p, key=term_order):
        c = p[key]
        body = _render_monomial(abs(c), key)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def _render_monomial(c: Fraction, key: Key) -> str:
    a, m = key
    factors: list[str] = []
    if a != 0:
        factors.append("q" if a == 1 else f"q^{_render_exp(a)}")
    for slot, e in enumerate(m):
        if e != 0:
            name = f"z{slot + 1}"
            factors.append(name if e == 1 else f"{name}^{e}")
    if c != 1 or not factors:
        factors.insert(0, str(c))
    return "·".join(factors)


def _render_exp(a: Fraction) -> str:
    return str(a) if a.denominator == 1 else f"({a})"


# ---- convenience constructors ----

def q_power(a: Rational, arity: int) -> PhaseScalar:
    """The monomial q^a with coefficient 1."""
    return PhaseScalar.monomial(1, a, (0,) * arity, arity)


def z_power(slot: int, n: int, arity: int) -> PhaseScalar:
    """The monomial z_{slot+1}^n (slot is 0-based) with coefficient 1."""
    if not 0 <= slot < arity:
        raise ArityMismatchError(f"z slot {slot} out of range for arity {arity}")
    m = [0] * arity
    m[slot] = n
    return PhaseScalar.monomial(1, 0, m, arity)


def q_number(a: int, base: PhaseScalar) -> PhaseScalar:
    """The q-analog [a]_base = 1 + base + ... + base^{a-1}.

    Computed in polynomial form, so base = 1 is safe and [a] then degenerates
    to the integer a.  Agrees with (1 - base^a)/(1 - base) whenever base != 1.
    """
    if a < 0:
        raise ValueError("q-numbers are defined for nonnegative integers")
    total = PhaseScalar.zero(base.arity)
    power = PhaseScalar.one(base.arity)
    for _ in range(a):
        total = total + power
        power = power * base
    return total
