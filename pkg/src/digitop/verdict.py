"""Three-valued search results.

Bounded searches must never report a truncated search as a definitive No;
Unknown is a first-class outcome carrying the bounds that were exhausted.
"""

from dataclasses import dataclass, field
from typing import Any, Mapping

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    witness: Any = None
    obstruction: Any = None
    bounds_used: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def yes(cls, witness=None, **bounds):
        return cls(YES, witness=witness, bounds_used=bounds)

    @classmethod
    def no(cls, obstruction=None, **bounds):
        return cls(NO, obstruction=obstruction, bounds_used=bounds)

    @classmethod
    def unknown(cls, obstruction=None, **bounds):
        return cls(UNKNOWN, obstruction=obstruction, bounds_used=bounds)

    @property
    def is_yes(self):
        return self.outcome == YES

    @property
    def is_no(self):
        return self.outcome == NO

    @property
    def is_unknown(self):
        return self.outcome == UNKNOWN

    def exit_code(self):
        """CLI convention: 0 = yes/verified, 1 = no, 2 = unknown."""
        return {YES: 0, NO: 1, UNKNOWN: 2}[self.outcome]
