"""
Structured results of verification sweeps
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List


class Status(str, Enum):
    """Outcome of one check item"""

    PASS = "PASS"
    FAIL = "FAIL"
    # documented discrepancy or vacuous claim, never fails a run
    FLAGGED = "FLAGGED"


@dataclass
class CheckItem:
    """
    One verified claim

    Attributes:
        subject: What was checked, e.g. "RHA I l=12"
        claim: The statement the item instantiates
        status: PASS, FAIL or FLAGGED
        witness: JSON-serializable evidence (values, residues, errors)
    """

    subject: str
    claim: str
    status: Status
    witness: Dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "claim": self.claim,
            "status": self.status.value,
            "witness": self.witness,
        }


@dataclass
class CheckReport:
    """
    Named collection of check items

    Attributes:
        suite: Suite name
        items: Items in a fixed, reproducible order
        notes: Definitions and decisions printed alongside the items
    """

    suite: str
    items: List[CheckItem] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, subject: str, claim: str, status: Status, **witness) -> CheckItem:
        item = CheckItem(subject, claim, status, witness)
        self.items.append(item)
        return item

    def extend(self, other: "CheckReport") -> None:
        self.items.extend(other.items)
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)

    def count(self, status: Status) -> int:
        return sum(1 for item in self.items if item.status == status)

    @property
    def passed(self) -> bool:
        """True unless some item FAILed"""

        return self.count(Status.FAIL) == 0

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def summary(self) -> str:
        return (
            f"{self.suite}: {self.count(Status.PASS)} passed, "
            f"{self.count(Status.FAIL)} failed, {self.count(Status.FLAGGED)} flagged"
        )

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "counts": {status.value: self.count(status) for status in Status},
            "notes": list(self.notes),
            "items": [item.to_json() for item in self.items],
        }
