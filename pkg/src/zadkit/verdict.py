from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @property
    def exit_code(self) -> int:
        return {Answer.YES: 0, Answer.NO: 1, Answer.UNKNOWN: 2}[self]


@dataclass
class Verdict:
    """A three-valued decision plus the evidence that produced it.

    ``method`` names the route (oracle, theorem branch, reduction).  ``evidence``
    holds a certificate or witness object when one exists; ``reason`` is free
    text, mandatory for Unknown.
    """

    answer: Answer
    method: str
    evidence: Any = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def no(self) -> bool:
        return self.answer is Answer.NO

    @property
    def unknown(self) -> bool:
        return self.answer is Answer.UNKNOWN

    def __bool__(self):
        raise TypeError("a Verdict is three-valued; test .yes / .no / .unknown instead")


def yes(method: str, evidence=None, reason: str = "", **details) -> Verdict:
    return Verdict(Answer.YES, method, evidence, reason, details)


def no(method: str, evidence=None, reason: str = "", **details) -> Verdict:
    return Verdict(Answer.NO, method, evidence, reason, details)


def unknown(method: str, reason: str, **details) -> Verdict:
    return Verdict(Answer.UNKNOWN, method, None, reason, details)


def conjunction(verdicts, method: str) -> Verdict:
    """No dominates, then Unknown; Yes only if every part is Yes."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.no:
            return Verdict(Answer.NO, method, v.evidence, v.reason or f"a part failed ({v.method})",
                           {"failing": v.method})
    for v in verdicts:
        if v.unknown:
            return unknown(method, v.reason or f"a part is undecided ({v.method})")
    return yes(method, reason=f"all {len(verdicts)} parts hold")
