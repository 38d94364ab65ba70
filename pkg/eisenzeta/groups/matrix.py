"""
2x2 matrices over Q(zeta_24)
"""

from dataclasses import dataclass

from eisenzeta.arith.cyclotomic import ONE, ZERO, CycloNumber, Scalar, cyclo_inv


def _cyclo(value: Scalar) -> CycloNumber:
    if isinstance(value, CycloNumber):
        return value
    return CycloNumber.from_rational(value)


def entry_to_json(value: CycloNumber) -> dict:
    """Exact coordinates of one entry plus a rounded complex preview"""

    approx = value.embed()
    return {
        "coords": value.to_json(),
        "approx": [round(approx.real, 12) + 0.0, round(approx.imag, 12) + 0.0],
    }


@dataclass(frozen=True)
class Mat2:
    """
    Row-major 2x2 matrix (a b; c d) acting by x -> ax + by, y -> cx + dy

    Args:
        a: Top-left entry
        b: Top-right entry
        c: Bottom-left entry
        d: Bottom-right entry
    """

    a: CycloNumber
    b: CycloNumber
    c: CycloNumber
    d: CycloNumber

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _cyclo(getattr(self, name)))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def diag(cls, first: Scalar, second: Scalar) -> "Mat2":
        return cls(first, ZERO, ZERO, second)

    @classmethod
    def scalar(cls, value: Scalar) -> "Mat2":
        return cls.diag(value, value)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def first_row(self) -> tuple:
        return (self.a, self.b)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, value: Scalar) -> "Mat2":
        value = _cyclo(value)
        return Mat2(*(value * e for e in self.entries))

    def det(self) -> CycloNumber:
        return self.a * self.d - self.b * self.c

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def inverse(self) -> "Mat2":
        """
        Exact inverse via the adjugate.

        Raises:
            CycloDivisionByZero: If the matrix is singular
        """

        inv_det = cyclo_inv(self.det())
        return Mat2(
            self.d * inv_det, -self.b * inv_det, -self.c * inv_det, self.a * inv_det
        )

    def is_identity(self) -> bool:
        return self == Mat2.identity()

    def sort_key(self) -> tuple:
        return tuple(e.sort_key() for e in self.entries)

    def to_json(self) -> list:
        return [
            [entry_to_json(self.a), entry_to_json(self.b)],
            [entry_to_json(self.c), entry_to_json(self.d)],
        ]

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"
