from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional


class VerdictStatus(Enum):
    CERTIFIED = 'certified'
    REFUTED = 'refuted'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class Verdict3:
    """Outcome of a semi-decidable test.

    REFUTED carries a checkable witness. CERTIFIED carries a certificate or
    the id of the exact rule that decided it. UNKNOWN records the exhausted
    search radius.
    """

    status: VerdictStatus
    rule: str = ''
    witness: Optional[Any] = None
    radius: Optional[int] = None

    @classmethod
    def certified(cls, rule: str, witness=None) -> 'Verdict3':
        return cls(VerdictStatus.CERTIFIED, rule, witness)

    @classmethod
    def refuted(cls, rule: str, witness=None) -> 'Verdict3':
        return cls(VerdictStatus.REFUTED, rule, witness)

    @classmethod
    def unknown(cls, rule: str, radius: Optional[int] = None) -> 'Verdict3':
        return cls(VerdictStatus.UNKNOWN, rule, None, radius)

    @property
    def is_certified(self) -> bool:
        return self.status is VerdictStatus.CERTIFIED

    @property
    def is_refuted(self) -> bool:
        return self.status is VerdictStatus.REFUTED

    @property
    def is_unknown(self) -> bool:
        return self.status is VerdictStatus.UNKNOWN

    def to_dict(self, formatter=str) -> dict:
        data = {'status': self.status.value, 'rule': self.rule}
        if self.witness is not None:
            data['witness'] = formatter(self.witness)
        if self.radius is not None:
            data['radius'] = self.radius
        return data
