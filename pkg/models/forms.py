"""
Exact algebraic value types

Binary forms in (s,t), homogeneous polynomials in x_0..x_{n-1} (the ternary
case carries implicit equations) and moving lines. All coefficients are
``fractions.Fraction``; every value is immutable once built.
"""

from fractions import Fraction
from itertools import product as cartesian
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from models.errors import DivideByZeroError, NotDivisibleError


ExactScalar = Fraction
ScalarLike = Union[int, str, Fraction]
Exponent = Tuple[int, ...]


def to_scalar(value: ScalarLike) -> Fraction:
    """Convert an int, a "p/q" string or a Fraction to an exact scalar"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"Refusing inexact scalar {value!r}")
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    """Render a scalar as "p" or "p/q" """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _signed_term(coeff: Fraction, monomial: str) -> str:
    if not monomial:
        return format_scalar(coeff)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return f"-{monomial}"
    return f"{format_scalar(coeff)}*{monomial}"


def _join_terms(terms: List[str]) -> str:
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            text += f" - {term[1:]}"
        else:
            text += f" + {term}"
    return text


# ============================================
# Binary forms
# ============================================

class BinaryForm:
    """
    Homogeneous polynomial in (s,t) of a declared degree n

    ``coeffs[i]`` is the coefficient of s^(n-i) t^i. The zero form keeps its
    declared degree.
    """

    __slots__ = ("_degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Iterable[ScalarLike]):
        values = tuple(to_scalar(c) for c in coeffs)
        if degree < 0:
            raise ValueError(f"Binary form degree must be non-negative, got {degree}")
        if len(values) != degree + 1:
            raise ValueError(
                f"A degree-{degree} form needs {degree + 1} coefficients, got {len(values)}"
            )
        self._degree = degree
        self._coeffs = values

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[ScalarLike]) -> "BinaryForm":
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, [0] * (degree + 1))

    @classmethod
    def one(cls) -> "BinaryForm":
        return cls(0, [1])

    @classmethod
    def monomial(cls, degree: int, t_power: int, coeff: ScalarLike = 1) -> "BinaryForm":
        """coeff * s^(degree - t_power) * t^t_power"""
        coeffs = [0] * (degree + 1)
        coeffs[t_power] = coeff
        return cls(degree, coeffs)

    @classmethod
    def linear(cls, s_coeff: ScalarLike, t_coeff: ScalarLike) -> "BinaryForm":
        return cls(1, [s_coeff, t_coeff])

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self._degree == other._degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._degree, self._coeffs))

    def __repr__(self) -> str:
        return f"BinaryForm({self._degree}, [{', '.join(format_scalar(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return self.to_text()

    # ---- ring operations ----

    def _check_same_degree(self, other: "BinaryForm") -> None:
        if self._degree != other._degree:
            raise ValueError(
                f"Cannot add forms of degrees {self._degree} and {other._degree}"
            )

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_same_degree(other)
        return BinaryForm(self._degree, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_same_degree(other)
        return BinaryForm(self._degree, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self._degree, [-c for c in self._coeffs])

    def __mul__(self, other: Union["BinaryForm", ScalarLike]) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self._degree + other._degree + 1)
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j, b in enumerate(other._coeffs):
                    if b:
                        out[i + j] += a * b
            return BinaryForm(self._degree + other._degree, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: ScalarLike) -> "BinaryForm":
        c = to_scalar(factor)
        return BinaryForm(self._degree, [c * a for a in self._coeffs])

    def power(self, exponent: int) -> "BinaryForm":
        result = BinaryForm.one()
        for _ in range(exponent):
            result = result * self
        return result

    def times_monomial(self, s_power: int, t_power: int) -> "BinaryForm":
        """Multiply by s^s_power t^t_power"""
        coeffs = [Fraction(0)] * t_power + list(self._coeffs) + [Fraction(0)] * s_power
        return BinaryForm(self._degree + s_power + t_power, coeffs)

    # ---- normalization ----

    def leading_index(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None for the zero form"""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def leading_coefficient(self) -> Fraction:
        index = self.leading_index()
        return Fraction(0) if index is None else self._coeffs[index]

    def monic(self) -> "BinaryForm":
        """Scale so that the first nonzero coefficient equals 1"""
        lead = self.leading_coefficient()
        if not lead:
            return self
        return self.scale(1 / lead)

    def t_valuation(self) -> int:
        """Largest j with t^j dividing the form"""
        index = self.leading_index()
        return self._degree + 1 if index is None else index

    def s_valuation(self) -> int:
        """Largest j with s^j dividing the form"""
        for j, c in enumerate(reversed(self._coeffs)):
            if c:
                return j
        return self._degree + 1

    # ---- calculus and evaluation ----

    def derivative_s(self) -> "BinaryForm":
        if self._degree == 0:
            return BinaryForm.zero(0)
        n = self._degree
        return BinaryForm(n - 1, [(n - i) * self._coeffs[i] for i in range(n)])

    def derivative_t(self) -> "BinaryForm":
        if self._degree == 0:
            return BinaryForm.zero(0)
        return BinaryForm(
            self._degree - 1, [i * self._coeffs[i] for i in range(1, self._degree + 1)]
        )

    def evaluate(self, s0: ScalarLike, t0: ScalarLike) -> Fraction:
        s_val, t_val = to_scalar(s0), to_scalar(t0)
        n = self._degree
        return sum(
            (c * s_val ** (n - i) * t_val ** i for i, c in enumerate(self._coeffs) if c),
            Fraction(0),
        )

    def substitute_linear(
        self, a: ScalarLike, b: ScalarLike, c: ScalarLike, e: ScalarLike
    ) -> "BinaryForm":
        """Return f(a*s + b*t, c*s + e*t)"""
        s_image = BinaryForm.linear(a, b)
        t_image = BinaryForm.linear(c, e)
        n = self._degree
        s_powers = [BinaryForm.one()]
        t_powers = [BinaryForm.one()]
        for _ in range(n):
            s_powers.append(s_powers[-1] * s_image)
            t_powers.append(t_powers[-1] * t_image)
        result = BinaryForm.zero(n)
        for i, coeff in enumerate(self._coeffs):
            if coeff:
                result = result + (s_powers[n - i] * t_powers[i]).scale(coeff)
        return result

    # ---- text ----

    def to_text(self) -> str:
        n = self._degree
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            parts = []
            if n - i:
                parts.append("s" if n - i == 1 else f"s^{n - i}")
            if i:
                parts.append("t" if i == 1 else f"t^{i}")
            terms.append(_signed_term(c, "*".join(parts)))
        return _join_terms(terms)


# ============================================
# Homogeneous polynomials in x_0..x_{n-1}
# ============================================

class HomogeneousPoly:
    """
    Sparse homogeneous polynomial in ``nvars`` variables

    With ``nvars == 3`` this is the ternary polynomial that carries implicit
    equations; the quadrics through a lifted curve use ``nvars == k + 2``.
    Terms are stored only when nonzero. Leading terms use lex order with
    x_0 > x_1 > ...
    """

    __slots__ = ("_nvars", "_degree", "_terms")

    def __init__(self, nvars: int, degree: int, terms: Mapping[Exponent, ScalarLike]):
        if nvars < 1 or degree < 0:
            raise ValueError(f"Invalid polynomial shape nvars={nvars} degree={degree}")
        clean: Dict[Exponent, Fraction] = {}
        for exponent, value in terms.items():
            exponent = tuple(exponent)
            if len(exponent) != nvars or min(exponent) < 0 or sum(exponent) != degree:
                raise ValueError(f"Exponent {exponent} does not fit degree {degree} in {nvars} variables")
            coeff = to_scalar(value)
            if coeff:
                clean[exponent] = coeff
        self._nvars = nvars
        self._degree = degree
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "HomogeneousPoly":
        return cls(nvars, degree, {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "HomogeneousPoly":
        exponent = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, 1, {exponent: 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence[ScalarLike]) -> "HomogeneousPoly":
        nvars = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            terms[tuple(1 if j == i else 0 for j in range(nvars))] = c
        return cls(nvars, 1, terms)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if self._nvars != other._nvars or self._terms != other._terms:
            return False
        return self._degree == other._degree or not self._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self._nvars}, {self._degree}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # ---- ring operations ----

    def _result_degree(self, other: "HomogeneousPoly") -> int:
        if self._nvars != other._nvars:
            raise ValueError("Polynomials live in different variable sets")
        if self._degree == other._degree or other.is_zero():
            return self._degree
        if self.is_zero():
            return other._degree
        raise ValueError(f"Cannot add polynomials of degrees {self._degree} and {other._degree}")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        degree = self._result_degree(other)
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coeff
        return HomogeneousPoly(self._nvars, degree, terms)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self._nvars, self._degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def __mul__(self, other: Union["HomogeneousPoly", ScalarLike]) -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return self.scale(other)
        if self._nvars != other._nvars:
            raise ValueError("Polynomials live in different variable sets")
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return HomogeneousPoly(self._nvars, self._degree + other._degree, terms)

    __rmul__ = __mul__

    def scale(self, factor: ScalarLike) -> "HomogeneousPoly":
        c = to_scalar(factor)
        return HomogeneousPoly(self._nvars, self._degree, {e: c * v for e, v in self._terms.items()})

    def power(self, exponent: int) -> "HomogeneousPoly":
        result = HomogeneousPoly(self._nvars, 0, {(0,) * self._nvars: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("The zero polynomial has no leading term")
        exponent = max(self._terms)
        return exponent, self._terms[exponent]

    def div_exact(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        """Exact quotient by ``other``; raises NotDivisibleError on a remainder"""
        if other.is_zero():
            raise DivideByZeroError("Division by the zero polynomial")
        if self._nvars != other._nvars:
            raise ValueError("Polynomials live in different variable sets")
        if self.is_zero():
            return HomogeneousPoly.zero(self._nvars, max(self._degree - other._degree, 0))
        if self._degree < other._degree:
            raise NotDivisibleError("Divisor has larger degree than dividend")
        lead_exp, lead_coeff = other.leading_term()
        remainder = dict(self._terms)
        quotient: Dict[Exponent, Fraction] = {}
        while remainder:
            exponent = max(remainder)
            q_exp = tuple(a - b for a, b in zip(exponent, lead_exp))
            if min(q_exp) < 0:
                raise NotDivisibleError("Polynomial division leaves a remainder")
            q_coeff = remainder[exponent] / lead_coeff
            quotient[q_exp] = q_coeff
            for o_exp, o_coeff in other._terms.items():
                target = tuple(a + b for a, b in zip(q_exp, o_exp))
                value = remainder.get(target, 0) - q_coeff * o_coeff
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return HomogeneousPoly(self._nvars, self._degree - other._degree, quotient)

    def partial(self, index: int) -> "HomogeneousPoly":
        terms = {}
        for exponent, coeff in self._terms.items():
            if exponent[index]:
                lowered = list(exponent)
                lowered[index] -= 1
                terms[tuple(lowered)] = coeff * exponent[index]
        return HomogeneousPoly(self._nvars, max(self._degree - 1, 0), terms)

    # ---- normalization ----

    def monic(self) -> "HomogeneousPoly":
        """Scale so that the lex-leading coefficient equals 1"""
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_term()[1])

    def primitive(self) -> "HomogeneousPoly":
        """Coprime integer coefficients with a positive lex-leading coefficient"""
        if self.is_zero():
            return self
        denominators = lcm(*(c.denominator for c in self._terms.values()))
        numerators = [c * denominators for c in self._terms.values()]
        content = gcd(*(int(n) for n in numerators))
        factor = Fraction(denominators, content)
        if self.leading_term()[1] < 0:
            factor = -factor
        return self.scale(factor)

    # ---- evaluation ----

    def evaluate(self, point: Sequence[ScalarLike]) -> Fraction:
        values = [to_scalar(v) for v in point]
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = coeff
            for value, power in zip(values, exponent):
                if power:
                    term *= value ** power
            total += term
        return total

    def substitute(self, forms: Sequence[BinaryForm]) -> BinaryForm:
        """Compose with binary forms of a common degree d; the result has degree d * degree"""
        if len(forms) != self._nvars:
            raise ValueError(f"Expected {self._nvars} forms, got {len(forms)}")
        d = forms[0].degree
        if any(f.degree != d for f in forms):
            raise ValueError("Substituted forms must share one degree")
        powers: List[List[BinaryForm]] = []
        for form in forms:
            chain = [BinaryForm.one()]
            for _ in range(self._degree):
                chain.append(chain[-1] * form)
            powers.append(chain)
        result = BinaryForm.zero(d * self._degree)
        for exponent, coeff in self._terms.items():
            term = BinaryForm.one()
            for chain, power in zip(powers, exponent):
                term = term * chain[power]
            result = result + term.scale(coeff)
        return result

    # ---- text ----

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        names = list(names) if names else [f"x{i}" for i in range(self._nvars)]
        terms = []
        for exponent in sorted(self._terms, reverse=True):
            parts = []
            for name, power in zip(names, exponent):
                if power == 1:
                    parts.append(name)
                elif power > 1:
                    parts.append(f"{name}^{power}")
            terms.append(_signed_term(self._terms[exponent], "*".join(parts)))
        return _join_terms(terms)


def ternary_poly(degree: int, terms: Mapping[Exponent, ScalarLike]) -> HomogeneousPoly:
    """Polynomial in x0, x1, x2"""
    return HomogeneousPoly(3, degree, terms)


def monomial_exponents(nvars: int, degree: int) -> List[Exponent]:
    """All exponent vectors of the given degree, in decreasing lex order"""
    exponents = [e for e in cartesian(range(degree + 1), repeat=nvars) if sum(e) == degree]
    return sorted(exponents, reverse=True)


# ============================================
# Moving lines
# ============================================

class MovingLine:
    """
    Triple (A0, A1, A2) of binary forms of one degree, read as A0*x0 + A1*x1 + A2*x2
    """

    __slots__ = ("_degree", "_components")

    def __init__(self, a0: BinaryForm, a1: BinaryForm, a2: BinaryForm):
        if not (a0.degree == a1.degree == a2.degree):
            raise ValueError(
                f"Moving line components have degrees {a0.degree}, {a1.degree}, {a2.degree}"
            )
        if a0.is_zero() and a1.is_zero() and a2.is_zero():
            raise ValueError("A moving line cannot be identically zero")
        self._degree = a0.degree
        self._components = (a0, a1, a2)

    @classmethod
    def from_vector(cls, degree: int, vector: Sequence[ScalarLike]) -> "MovingLine":
        """Inverse of ``to_vector``: coefficients of A0, then A1, then A2"""
        size = degree + 1
        if len(vector) != 3 * size:
            raise ValueError(f"Expected {3 * size} coefficients, got {len(vector)}")
        return cls(*(BinaryForm(degree, vector[i * size:(i + 1) * size]) for i in range(3)))

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def a0(self) -> BinaryForm:
        return self._components[0]

    @property
    def a1(self) -> BinaryForm:
        return self._components[1]

    @property
    def a2(self) -> BinaryForm:
        return self._components[2]

    @property
    def components(self) -> Tuple[BinaryForm, BinaryForm, BinaryForm]:
        return self._components

    def to_vector(self) -> Tuple[Fraction, ...]:
        return self.a0.coeffs + self.a1.coeffs + self.a2.coeffs

    def apply(self, f0: BinaryForm, f1: BinaryForm, f2: BinaryForm) -> BinaryForm:
        """A0*f0 + A1*f1 + A2*f2"""
        return self.a0 * f0 + self.a1 * f1 + self.a2 * f2

    def times(self, factor: BinaryForm) -> "MovingLine":
        return MovingLine(*(c * factor for c in self._components))

    def scale(self, factor: ScalarLike) -> "MovingLine":
        return MovingLine(*(c.scale(factor) for c in self._components))

    def monic(self) -> "MovingLine":
        """Scale so that the first nonzero entry of ``to_vector`` equals 1"""
        lead = next(c for c in self.to_vector() if c)
        return self.scale(1 / lead)

    def is_constant(self) -> bool:
        return self._degree == 0

    def coefficient_forms(self) -> List[HomogeneousPoly]:
        """Linear forms in x multiplying s^(n-i) t^i, for i = 0..n"""
        return [
            HomogeneousPoly.linear_form([self.a0.coeffs[i], self.a1.coeffs[i], self.a2.coeffs[i]])
            for i in range(self._degree + 1)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MovingLine):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self) -> str:
        return f"MovingLine({', '.join(c.to_text() for c in self._components)})"

    def to_text(self) -> str:
        return f"({self.a0.to_text()}, {self.a1.to_text()}, {self.a2.to_text()})"
