"""
Representability verdicts shared by every classifier
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class VerdictClass(str, Enum):
    RADICALS = "Radicals"
    K_RADICALS = "KRadicals"
    QUADRATURES = "Quadratures"
    K_QUADRATURES = "KQuadratures"
    GENERALIZED_QUADRATURES = "GeneralizedQuadratures"


class VerdictStatus(str, Enum):
    REPRESENTABLE = "Representable"
    STRONGLY_NON_REPRESENTABLE = "StronglyNonRepresentable"
    NOT_REPRESENTABLE = "NotRepresentable"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    """
    One representability statement with the evidence behind it

    Attributes:
        verdict_class: function class the statement is about
        status: outcome for that class
        reason: short human-readable justification
        k: parameter of the k-radical / k-quadrature classes, None otherwise
        evidence: machine-checkable fields (group order, factor signature, witness, case tag)
    """
    verdict_class: VerdictClass
    status: VerdictStatus
    reason: str
    k: Optional[int] = None
    evidence: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        needs_k = self.verdict_class in (VerdictClass.K_RADICALS, VerdictClass.K_QUADRATURES)
        if needs_k != (self.k is not None):
            raise ValueError(f"{self.verdict_class.value} verdicts {'need' if needs_k else 'take no'} k")

    @property
    def label(self) -> str:
        if self.k is None:
            return self.verdict_class.value
        return f"{self.verdict_class.value}({self.k})"

    @property
    def is_inconclusive(self) -> bool:
        return self.status is VerdictStatus.INCONCLUSIVE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.label,
            "status": self.status.value,
            "reason": self.reason,
            "evidence": self.evidence,
        }

    def __str__(self) -> str:
        return f"{self.status.value}({self.label}): {self.reason}"


def find_verdict(verdicts: List[Verdict], verdict_class: VerdictClass,
                 k: Optional[int] = None) -> Optional[Verdict]:
    """First verdict for the given class (and k), if any"""
    for verdict in verdicts:
        if verdict.verdict_class is verdict_class and verdict.k == k:
            return verdict
    return None
