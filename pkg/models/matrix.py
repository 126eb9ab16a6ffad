"""
Dense exact matrices over Q
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from models.forms import ScalarLike, format_scalar, to_scalar


Vector = Tuple[Fraction, ...]


class ExactMatrix:
    """Immutable row-major matrix of Fractions"""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike]):
        values = tuple(to_scalar(v) for v in entries)
        if rows < 0 or cols < 0:
            raise ValueError(f"Invalid matrix shape {rows}x{cols}")
        if len(values) != rows * cols:
            raise ValueError(f"A {rows}x{cols} matrix needs {rows * cols} entries, got {len(values)}")
        self._rows = rows
        self._cols = cols
        self._entries = values

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: int = None) -> "ExactMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("Rows of unequal length")
        return cls(len(rows), cols, [v for row in rows for v in row])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls(size, size, [1 if i == j else 0 for i in range(size) for j in range(size)])

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> Vector:
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def column(self, j: int) -> Vector:
        return tuple(self._entries[i * self._cols + j] for i in range(self._rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_rows([self.column(j) for j in range(self._cols)], self._rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self._cols != other._rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = [other.column(j) for j in range(other._cols)]
        return ExactMatrix.from_rows(
            [[sum((a * b for a, b in zip(self.row(i), col)), Fraction(0)) for col in columns]
             for i in range(self._rows)],
            other._cols,
        )

    def apply(self, vector: Sequence[ScalarLike]) -> Vector:
        """Matrix times column vector"""
        values = [to_scalar(v) for v in vector]
        if len(values) != self._cols:
            raise ValueError(f"Vector of length {len(values)} does not match {self._cols} columns")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), values)), Fraction(0)) for i in range(self._rows)
        )

    def is_zero(self) -> bool:
        return not any(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(format_scalar(v) for v in self.row(i)) for i in range(self._rows))
        return f"ExactMatrix({self._rows}x{self._cols}: [{body}])"
