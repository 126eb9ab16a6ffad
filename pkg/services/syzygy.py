"""
Graded Syzygies and mu-Bases

Syzygies of a triple of binary forms are computed degree by degree as the
kernel of a coefficient matrix. The first nonempty degree gives p; q is a
canonical complement of the multiples of p in degree d - k.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from models.errors import DegenerateLineError, MinorMismatchError, NotPrimitiveError, ZeroInputError
from models.forms import BinaryForm, MovingLine
from models.matrix import ExactMatrix
from services.exact_arith import bf_gcd_many, cross_minors
from services.linalg import echelon_basis, kernel_basis, rank, reduce_against, solve_linear


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MuBasis:
    """Generators (p, q) of the syzygy module, of degrees (k, d - k)"""
    k: int
    p: MovingLine
    q: MovingLine
    balanced: bool

    @property
    def d(self) -> int:
        return self.p.degree + self.q.degree

    @property
    def degrees(self) -> Tuple[int, int]:
        return self.p.degree, self.q.degree


def _check_forms(forms: Sequence[BinaryForm]) -> int:
    if len(forms) != 3:
        raise ValueError(f"Expected three forms, got {len(forms)}")
    d = forms[0].degree
    if any(f.degree != d for f in forms):
        raise ValueError(f"Forms have unequal degrees {[f.degree for f in forms]}")
    return d


def coefficient_matrix(forms: Sequence[BinaryForm], n: int) -> ExactMatrix:
    """The (n+d+1) x 3(n+1) matrix whose kernel is the degree-n syzygy space"""
    d = _check_forms(forms)
    rows = n + d + 1
    cols = 3 * (n + 1)
    entries = [[Fraction(0)] * cols for _ in range(rows)]
    for b, form in enumerate(forms):
        for i, c in enumerate(form.coeffs):
            if not c:
                continue
            for j in range(n + 1):
                entries[i + j][b * (n + 1) + j] = c
    return ExactMatrix.from_rows(entries, cols)


def syzygy_space(f0: BinaryForm, f1: BinaryForm, f2: BinaryForm, n: int) -> List[MovingLine]:
    """
    Basis of the degree-n syzygies of (f0, f1, f2)

    Args:
        f0, f1, f2: Binary forms of a common degree d
        n: Syzygy degree, n >= 0

    Returns:
        Moving lines in canonical echelon order of their stacked coefficient vectors
    """
    if n < 0:
        raise ValueError(f"Syzygy degree must be non-negative, got {n}")
    basis = kernel_basis(coefficient_matrix((f0, f1, f2), n))
    return [MovingLine.from_vector(n, v) for v in basis]


def multiples_span(line: MovingLine, degree: int) -> List[Tuple[Fraction, ...]]:
    """Reduced echelon basis of {lambda * line : deg lambda = degree - deg line}"""
    shift = degree - line.degree
    if shift < 0:
        return []
    vectors = [line.times(BinaryForm.monomial(shift, j)).to_vector() for j in range(shift + 1)]
    return echelon_basis(vectors)


def minimal_syzygies(forms: Sequence[BinaryForm], start: int = 0) -> MuBasis:
    """
    Minimal generators of the syzygies of a primitive triple

    Used for the parameterization itself and for the second-level triple
    (alpha_0, alpha_1, alpha_2), which may be linearly dependent.
    """
    d = _check_forms(forms)
    for n in range(start, d + 1):
        basis = syzygy_space(*forms, n)
        logger.debug(f"Syzygy space in degree {n} has dimension {len(basis)}")
        if basis:
            break
    else:
        raise DegenerateLineError(f"No syzygy found up to degree {d}")
    k = n
    p = basis[0]
    if 2 * k == d:
        if len(basis) < 2:
            raise MinorMismatchError(f"Balanced degree {k} has only {len(basis)} syzygy")
        return MuBasis(k=k, p=p, q=basis[1], balanced=True)
    complement_degree = d - k
    candidates = [line.to_vector() for line in syzygy_space(*forms, complement_degree)]
    reduced = reduce_against(candidates, multiples_span(p, complement_degree))
    vector = next((v for v in reduced if any(v)), None)
    if vector is None:
        raise MinorMismatchError(f"No syzygy of degree {complement_degree} independent of p")
    q = MovingLine.from_vector(complement_degree, vector).monic()
    return MuBasis(k=k, p=p, q=q, balanced=False)


def mu_basis(f0: BinaryForm, f1: BinaryForm, f2: BinaryForm) -> MuBasis:
    """
    mu-basis of a parameterization

    Raises:
        ZeroInputError: if all three forms vanish
        NotPrimitiveError: if the forms share a common factor
        DegenerateLineError: if the forms span at most a two-dimensional space
    """
    forms = (f0, f1, f2)
    d = _check_forms(forms)
    if all(f.is_zero() for f in forms):
        raise ZeroInputError("All three forms are zero")
    common = bf_gcd_many(forms)
    if common.degree > 0:
        raise NotPrimitiveError(f"Forms share the factor {common.to_text()}")
    if rank(ExactMatrix.from_rows([f.coeffs for f in forms], d + 1)) < 3:
        raise DegenerateLineError("Forms are linearly dependent; the image is a line or a point")
    basis = minimal_syzygies(forms, start=1)
    logger.info(f"mu-basis found with degrees {basis.degrees}")
    return basis


def hilbert_burch_check(f0: BinaryForm, f1: BinaryForm, f2: BinaryForm, basis: MuBasis) -> Fraction:
    """
    Constant lambda with minors(p; q) = lambda * (f0, f1, f2)

    Raises:
        MinorMismatchError: if no such nonzero constant exists
    """
    forms = (f0, f1, f2)
    minors = cross_minors(basis.p.components, basis.q.components)
    if any(m.degree != f.degree for m, f in zip(minors, forms)):
        raise MinorMismatchError("Minor degrees differ from the curve degree")
    ratio: Optional[Fraction] = None
    for form, minor in zip(forms, minors):
        index = form.leading_index()
        if index is not None:
            ratio = minor.coeffs[index] / form.coeffs[index]
            break
    if not ratio:
        raise MinorMismatchError("Minors vanish")
    for form, minor in zip(forms, minors):
        if minor != form.scale(ratio):
            raise MinorMismatchError(f"Minor {minor.to_text()} is not {ratio} * {form.to_text()}")
    return ratio


def decompose_syzygy(
    syzygy: MovingLine, first: MovingLine, second: MovingLine
) -> Tuple[Optional[BinaryForm], Optional[BinaryForm]]:
    """
    Write a syzygy as lam * first + mu * second

    Args:
        syzygy: Syzygy of degree n
        first, second: Generators of the syzygy module

    Returns:
        (lam, mu); a coefficient whose degree would be negative is None

    Raises:
        ValueError: if the syzygy is not in the span
    """
    n = syzygy.degree
    columns = []
    shapes = []
    for line in (first, second):
        shift = n - line.degree
        shapes.append(shift)
        for j in range(shift + 1):
            columns.append(line.times(BinaryForm.monomial(shift, j)).to_vector())
    target = syzygy.to_vector()
    if not columns:
        raise ValueError(f"Degree-{n} syzygy lies below both generators")
    matrix = ExactMatrix.from_rows([list(row) for row in zip(*columns)], len(columns))
    solution = solve_linear(matrix, target)
    if solution is None:
        raise ValueError(f"Syzygy {syzygy.to_text()} is not generated by the given pair")
    parts: List[Optional[BinaryForm]] = []
    offset = 0
    for shift in shapes:
        if shift < 0:
            parts.append(None)
            continue
        parts.append(BinaryForm(shift, solution[offset:offset + shift + 1]))
        offset += shift + 1
    return parts[0], parts[1]
