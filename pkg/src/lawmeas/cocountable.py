"""Countable/cocountable subsets of an abstract uncountable ground set.

Only finitely supported sets are representable: ``Small(S)`` is exactly the
listed points and ``CoSmall(S)`` is everything except them.  Complement and
finite unions stay inside this fragment.  Unions over uncountable families
cannot even be written down, which is why the non-topology argument is
reported as checked facts rather than computed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Tag(enum.Enum):
    SMALL = "Small"
    COSMALL = "CoSmall"


@dataclass(frozen=True)
class CocoSet:
    tag: Tag
    support: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(sorted(set(self.support))))

    def __str__(self) -> str:
        return f"{self.tag.value}([{', '.join(self.support)}])"


def small(*points: str) -> CocoSet:
    return CocoSet(Tag.SMALL, points)


def cosmall(*points: str) -> CocoSet:
    return CocoSet(Tag.COSMALL, points)


EMPTY = small()
FULL = cosmall()


def coco_complement(s: CocoSet) -> CocoSet:
    return CocoSet(Tag.COSMALL if s.tag is Tag.SMALL else Tag.SMALL, s.support)


def coco_union(family: Iterable[CocoSet]) -> CocoSet:
    """Finite union; the empty union is ``Small([])``."""
    family = list(family)
    covered = set()
    exceptions = None
    for s in family:
        if s.tag is Tag.SMALL:
            covered.update(s.support)
        elif exceptions is None:
            exceptions = set(s.support)
        else:
            exceptions &= set(s.support)
    if exceptions is None:
        return CocoSet(Tag.SMALL, tuple(covered))
    return CocoSet(Tag.COSMALL, tuple(exceptions - covered))


def coco_intersection(family: Iterable[CocoSet]) -> CocoSet:
    """Finite intersection by De Morgan; the empty intersection is the full set."""
    return coco_complement(coco_union(coco_complement(s) for s in family))


def coco_member(s: CocoSet, x: str) -> bool:
    return (x in s.support) if s.tag is Tag.SMALL else (x not in s.support)


@dataclass(frozen=True)
class Countability:
    """What a set is known to satisfy inside an uncountable ground set."""

    countable: bool
    complement_countable: bool


def countability(s: CocoSet) -> Countability:
    # the ground set is uncountable, so a countable set has uncountable complement
    if s.tag is Tag.SMALL:
        return Countability(True, False)
    return Countability(False, True)


@dataclass
class CaseRefutation:
    tag: str
    forces: str
    contradicts: str

    def to_dict(self) -> dict:
        return {"tag": self.tag, "forces": self.forces, "contradicts": self.contradicts}


@dataclass
class NonTopologyReport:
    fact_a: bool
    fact_a_samples: list[str]
    fact_b: bool
    fact_b_cases: list[CaseRefutation]
    fact_c: bool
    conclusion: str
    gaps: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema": "1",
            "fact_a": self.fact_a,
            "fact_a_samples": self.fact_a_samples,
            "fact_b": self.fact_b,
            "fact_b_cases": [c.to_dict() for c in self.fact_b_cases],
            "fact_c": self.fact_c,
            "conclusion": self.conclusion,
            "gaps": self.gaps,
        }

    def to_text(self) -> str:
        lines = [
            "countable/cocountable σ-algebra on an uncountable set",
            f"(a) every singleton is a member: {_yes(self.fact_a)}",
        ]
        lines += [f"    {s}" for s in self.fact_a_samples]
        lines.append(f"(b) H uncountable with H^c uncountable has no representation: {_yes(self.fact_b)}")
        lines += [f"    case {c.tag}: forces {c.forces}, contradicting {c.contradicts}" for c in self.fact_b_cases]
        lines.append(f"(c) not closed under the union of the singletons of H: {_yes(self.fact_c)}")
        lines.append(f"conclusion: {self.conclusion}")
        lines += [f"gap: {g}" for g in self.gaps]
        return "\n".join(lines) + "\n"


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def coco_non_topology_witness(sample_points: Sequence[str] = ("p", "q", "r")) -> NonTopologyReport:
    """Check, case by case, why this σ-algebra is not a topology.

    A topology containing every singleton is discrete, hence contains ``H``.
    """
    samples = []
    fact_a = True
    for x in sample_points:
        s = small(x)
        ok = coco_member(s, x) and all(not coco_member(s, y) for y in sample_points if y != x)
        fact_a &= ok
        samples.append(f"{{{x}}} = {s}")

    # H is required to satisfy: not countable, and complement not countable
    required = Countability(False, False)
    cases = []
    fact_b = True
    for tag in Tag:
        known = countability(CocoSet(tag))
        if known.countable and not required.countable:
            cases.append(CaseRefutation(tag.value, "H countable", "H uncountable"))
        elif known.complement_countable and not required.complement_countable:
            cases.append(CaseRefutation(tag.value, "H^c countable", "H^c uncountable"))
        else:
            fact_b = False

    # each {x}, x ∈ H, is a member while their union H is not
    fact_c = fact_a and fact_b
    conclusion = "not a topology" if fact_c else "undetermined"
    gaps = [
        "countable supports are modelled by finite supports",
        "closure under countably infinite unions is not checked, only finite unions",
    ]
    return NonTopologyReport(fact_a, samples, fact_b, cases, fact_c, conclusion, gaps)
