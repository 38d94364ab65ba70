"""
Finite matrix groups for the four self-dual code types

Each group is the closure of two generators: a "Hadamard-like" matrix and a
diagonal one. Closures are built breadth-first with exact equality, so the
element list is reproducible and its order is a genuine fixture.
"""

import logging
from collections import Counter, deque
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

from eisenzeta.arith.cyclotomic import CycloNumber, cyclo_symbol
from eisenzeta.errors import CapExceededError, SingularGeneratorError
from eisenzeta.groups.matrix import Mat2
from eisenzeta.poly.homog import HomogPoly, act_on_poly

logger = logging.getLogger("GroupBuilder")

TYPE_LABELS = ("I", "II", "III", "IV")
CUSTOM_LABEL = "CUSTOM"
DEFAULT_CAP = 10_000


class MatrixGroup:
    """
    Finite group of 2x2 matrices over Q(zeta_24)

    Elements are deduplicated with exact equality and stored in canonical
    order (lexicographic on serialized coordinates).

    Args:
        elements: Group elements, in any order
        label: One of I, II, III, IV, CUSTOM
        generators: Matrices the group was generated from
        name: Human-readable provenance, e.g. "G_II"
    """

    def __init__(
        self,
        elements: Iterable[Mat2],
        label: str,
        generators: Sequence[Mat2],
        name: str = "",
    ):
        self.elements: Tuple[Mat2, ...] = tuple(sorted(set(elements), key=Mat2.sort_key))
        self.label = label
        self.generators: Tuple[Mat2, ...] = tuple(generators)
        self.name = name or f"G_{label}"
        self._members = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Mat2]:
        return iter(self.elements)

    def __contains__(self, sigma: Mat2) -> bool:
        return sigma in self._members

    def contains(self, sigma: Mat2) -> bool:
        return sigma in self._members

    def inverse(self, sigma: Mat2) -> Mat2:
        """
        Inverse of a member, checked to be a member.

        Raises:
            ValueError: If sigma or its inverse is not in the group
        """

        if sigma not in self:
            raise ValueError(f"{sigma} is not an element of {self.name}")
        inv = sigma.inverse()
        if inv not in self:
            raise ValueError(f"Inverse of {sigma} is missing from {self.name}")
        return inv

    def verify(self, exhaustive: bool = True) -> bool:
        """
        Check the group axioms exactly.

        The exhaustive check multiplies every pair of elements and inverts
        every element. The quick check only confirms that the identity is
        present and that the set is stable under right multiplication by the
        generators, which already forces closure for a set built from them.

        Args:
            exhaustive: Run the full |G|^2 product check

        Returns:
            bool: True when every check passes
        """

        if Mat2.identity() not in self:
            logger.warning(f"{self.name} does not contain the identity")
            return False

        if not exhaustive:
            return all(sigma @ g in self for sigma in self.elements for g in self.generators)

        for sigma in self.elements:
            for tau in self.elements:
                if sigma @ tau not in self:
                    logger.warning(f"{self.name} is not closed: {sigma} @ {tau}")
                    return False
            if sigma.inverse() not in self:
                logger.warning(f"{self.name} is missing the inverse of {sigma}")
                return False
        logger.debug(f"{self.name} passed the exhaustive check ({self.order}^2 products)")
        return True

    def is_subgroup_of(self, other: "MatrixGroup") -> bool:
        return all(sigma in other for sigma in self.elements)

    def first_rows(self) -> List[Tuple[Tuple[CycloNumber, CycloNumber], int]]:
        """
        Distinct first rows (a, b) with their multiplicities.

        (sigma x)^l only depends on the first row of sigma, so averages over
        the group reduce to a weighted sum over this list.
        """

        counts = Counter(sigma.first_row for sigma in self.elements)
        seen = []
        for sigma in self.elements:
            row = sigma.first_row
            if row in counts:
                seen.append((row, counts.pop(row)))
        return seen

    def to_json(self) -> dict:
        """Group dump: label, order, generators and every element"""

        return {
            "label": self.label,
            "name": self.name,
            "order": self.order,
            "generators": [g.to_json() for g in self.generators],
            "elements": [sigma.to_json() for sigma in self.elements],
        }

    def __repr__(self):
        return f"MatrixGroup({self.name}, order={self.order})"


def generate_closure(
    gens: Sequence[Mat2],
    cap: int = DEFAULT_CAP,
    label: str = CUSTOM_LABEL,
    name: str = "",
) -> MatrixGroup:
    """
    Breadth-first closure of a generator list under multiplication.

    Args:
        gens: Invertible generator matrices
        cap: Largest admissible group order
        label: Group label for provenance
        name: Optional display name

    Returns:
        MatrixGroup: The generated finite group

    Raises:
        SingularGeneratorError: If a generator has zero determinant
        CapExceededError: If the closure grows beyond `cap` elements
    """

    if cap < 1:
        raise ValueError(f"Closure cap must be positive, got {cap}")
    for g in gens:
        if not g.is_invertible():
            raise SingularGeneratorError(f"Generator {g} is not invertible")

    identity = Mat2.identity()
    visited = {identity}
    queue = deque([identity])

    while queue:
        current = queue.popleft()
        for g in gens:
            nxt = current @ g
            if nxt not in visited:
                visited.add(nxt)
                if len(visited) > cap:
                    raise CapExceededError(
                        f"Closure exceeded {cap} elements; the group is infinite or too large"
                    )
                queue.append(nxt)

    group = MatrixGroup(visited, label, gens, name)
    logger.info(f"Generated {group.name} of order {group.order}")
    return group


def _hadamard(scale: CycloNumber, top_right: int) -> Mat2:
    # scale * (1 top_right; 1 -1)
    return Mat2(scale, scale * top_right, scale, -scale)


def builtin_generators(label: str) -> Tuple[Mat2, Mat2]:
    """
    The two printed generators for a code type.

    Args:
        label: One of I, II, III, IV

    Returns:
        tuple[Mat2, Mat2]: (Hadamard-like matrix, diagonal matrix)
    """

    sqrt2, sqrt3 = cyclo_symbol("SQRT2"), cyclo_symbol("SQRT3")
    if label == "I":
        return _hadamard(sqrt2.inv(), 1), Mat2.diag(1, -1)
    if label == "II":
        return _hadamard(sqrt2.inv(), 1), Mat2.diag(1, cyclo_symbol("I"))
    if label == "III":
        return _hadamard(sqrt3.inv(), 2), Mat2.diag(1, cyclo_symbol("ZETA3"))
    if label == "IV":
        return _hadamard(CycloNumber.from_rational(1) / 2, 3), Mat2.diag(1, -1)
    raise ValueError(f"Invalid group label: {label}. Choose one of {', '.join(TYPE_LABELS)}")


@lru_cache(maxsize=None)
def builtin_group(label: str) -> MatrixGroup:
    """
    Closure of the printed generators for a code type.

    Args:
        label: One of I, II, III, IV

    Returns:
        MatrixGroup: G_I (order 16), G_II (192), G_III (48) or G_IV (12)
    """

    return generate_closure(builtin_generators(label), label=label, name=f"G_{label}")


@lru_cache(maxsize=None)
def averaging_group(label: str) -> MatrixGroup:
    """
    The group Eisenstein polynomials of a type are averaged over.

    For Types I, III and IV this is the builtin group. For Type II it is the
    order-96 subgroup generated by zeta_8 * H and diag(1, i), i.e. the
    elements of G_II with entries in Q(i). G_II itself contains the scalar
    zeta_8 and so kills every weight not divisible by 8.

    Args:
        label: One of I, II, III, IV

    Returns:
        MatrixGroup: The averaging group
    """

    if label != "II":
        return builtin_group(label)
    hadamard, phase = builtin_generators("II")
    gens = (hadamard.scale(cyclo_symbol("ZETA8")), phase)
    return generate_closure(gens, label="II", name="G_II*")


def ring_generators(label: str) -> Tuple[HomogPoly, HomogPoly]:
    """
    The two generators (f, g) of the invariant ring of a code type.

    Args:
        label: One of I, II, III, IV

    Returns:
        tuple[HomogPoly, HomogPoly]: f and g
    """

    x, y = HomogPoly.x(), HomogPoly.y()
    if label == "I":
        return x**2 + y**2, x**2 * y**2 * (x**2 - y**2) ** 2
    if label == "II":
        return (
            x**8 + (x**4 * y**4).scale(14) + y**8,
            x**4 * y**4 * (x**4 - y**4) ** 4,
        )
    if label == "III":
        return x**4 + (x * y**3).scale(8), y**3 * (x**3 - y**3) ** 3
    if label == "IV":
        return x**2 + (y**2).scale(3), y**2 * (x**2 - y**2) ** 2
    raise ValueError(f"Invalid group label: {label}. Choose one of {', '.join(TYPE_LABELS)}")


def is_invariant_under(f: HomogPoly, sigmas: Iterable[Mat2]) -> bool:
    """True when act_on_poly(sigma, f) == f for every sigma given"""

    return all(act_on_poly(sigma, f) == f for sigma in sigmas)
