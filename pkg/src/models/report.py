"""Reports of the verdict layer. Every verdict carries the conditions it was decided on."""

from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from models.graph import JoinDecomposition

ANSWER_YES = 'yes'
ANSWER_NO = 'no'
ANSWER_UNKNOWN = 'unknown'
ANSWER_DIHEDRAL = 'dihedral-exception'

FLAG_ACYL = 'acylindrically-hyperbolic'
FLAG_DIHEDRAL = 'dihedral-exception'


@dataclass(frozen=True)
class Condition:
    """One hypothesis of a verdict; passed is None when the metadata does not decide it."""

    name: str
    passed: Optional[bool]
    detail: str = ''

    def to_dict(self) -> dict:
        data = {'condition': self.name, 'passed': self.passed}
        if self.detail:
            data['detail'] = self.detail
        return data


@dataclass
class StructureReport:
    decomposition: JoinDecomposition
    formula: str
    factor_flags: List[str] = field(default_factory=list)
    permuted_factors: bool = False

    @property
    def n(self) -> int:
        return len(self.decomposition.factors)

    def to_dict(self, order=sorted) -> dict:
        return {
            'clique_part': list(order(self.decomposition.clique_part)),
            'factors': [list(order(f)) for f in self.decomposition.factors],
            'n': self.n,
            'formula': self.formula,
            'factor_flags': list(self.factor_flags),
            'permuted_factors': self.permuted_factors,
        }


@dataclass
class AcylVerdict:
    target: str
    answer: str
    conditions: List[Condition] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'target': self.target,
            'answer': self.answer,
            'conditions': [c.to_dict() for c in self.conditions],
        }


@dataclass
class VastnessReport:
    statement: str
    sq_universal: Optional[bool]
    many_quasimorphisms: Optional[bool]
    not_boundedly_generated: Optional[bool]
    conditions: List[Condition] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'statement': self.statement,
            'sq_universal': self.sq_universal,
            'many_quasimorphisms': self.many_quasimorphisms,
            'not_boundedly_generated': self.not_boundedly_generated,
            'conditions': [c.to_dict() for c in self.conditions],
        }


@dataclass(frozen=True)
class GensetCheck:
    noncommuting: bool
    irreducible: bool
    primitive: bool
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.noncommuting and self.irreducible and self.primitive

    def to_dict(self) -> dict:
        return {
            'noncommuting': self.noncommuting,
            'irreducible': self.irreducible,
            'primitive': self.primitive,
            'failures': list(self.failures),
        }


@dataclass(frozen=True)
class EndomorphismCheck:
    violations: Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {'valid': self.valid, 'violations': list(self.violations)}


@dataclass(frozen=True)
class InvariantBounds:
    asdim: Optional[int]
    dehn: Optional[str]

    def to_dict(self) -> dict:
        return {'asdim_bound': self.asdim, 'dehn_bound': self.dehn}


STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_UNKNOWN = 'unknown'


@dataclass(frozen=True)
class SuiteRecord:
    """One JSON line of the invariant suite."""

    check: str
    instance: str
    status: str
    value: Any
    expected: Any

    @property
    def failed(self) -> bool:
        return self.status == STATUS_FAIL

    def to_dict(self) -> dict:
        return {
            'check': self.check,
            'instance': self.instance,
            'status': self.status,
            'value': self.value,
            'expected': self.expected,
        }
