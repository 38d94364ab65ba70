"""
Valuation scans with witnesses
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Tuple, Union

from eisenzeta.arith.rational import VP_INFINITY, require_prime, vp


@dataclass
class IntegralityReport:
    """
    p-adic valuation scan of a coefficient list

    Attributes:
        p: Prime
        target: What was scanned, e.g. "EIS I l=12"
        min_valuation: Smallest valuation seen, infinity if all terms vanish
        offending_terms: (term index, valuation) for every valuation < 0
        flagged: The item is a documented exception and is not asserted
        note: Why the item is flagged
    """

    p: int
    target: str
    min_valuation: Union[int, float]
    offending_terms: List[Tuple[int, int]] = field(default_factory=list)
    flagged: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.offending_terms

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "target": self.target,
            "min_valuation": (
                "inf" if self.min_valuation == VP_INFINITY else self.min_valuation
            ),
            "offending_terms": [list(term) for term in self.offending_terms],
            "passed": self.passed,
            "flagged": self.flagged,
            "note": self.note,
        }


def scan_valuations(terms: Iterable[Tuple[int, object]], p: int, target: str) -> IntegralityReport:
    """
    Valuation of every (index, coefficient) pair.

    Args:
        terms: Indexed rational coefficients
        p: Prime
        target: Description for the report

    Returns:
        IntegralityReport: Full scan with every negative valuation listed

    Raises:
        NotPrimeError: If p is not a prime
    """

    require_prime(p)
    minimum: Union[int, float] = VP_INFINITY
    offending = []
    for index, coeff in terms:
        valuation = vp(coeff, p)
        minimum = min(minimum, valuation)
        if valuation < 0:
            offending.append((index, valuation))
    return IntegralityReport(p, target, minimum, offending)
