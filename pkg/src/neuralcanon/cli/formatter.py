"""Reports emitted by the CLI, as text or JSON."""

from typing import Optional

from pydantic import BaseModel, Field

from ..canonicity.checker import CanonicityVerdict
from ..core.models import MonomialIdeal, MonomialPrime
from ..core.parser import format_ideal_text
from ..engine.canonical import CanonicalResult


class CanonReport(BaseModel):
    """Result of the canon subcommand."""
    n: int
    input: list[str]
    result: list[str]
    canonical: bool
    strategy: str
    added: list[str] = Field(default_factory=list)
    removed: list[str] = Field(default_factory=list)


class WitnessReport(BaseModel):
    first: int
    second: int
    index: int


class CheckReport(BaseModel):
    """Result of the check subcommand; generator positions are 1-based."""
    n: int
    input: list[str]
    canonical: bool
    hypotheses_met: bool
    witness: Optional[WitnessReport] = None
    reason: Optional[str] = None
    shortcut_indices: list[int] = Field(default_factory=list)


class OracleReport(BaseModel):
    n: int
    code: list[str]
    result: list[str]


class DecomposeReport(BaseModel):
    n: int
    input: list[str]
    strategy: str
    primes: list[list[str]]


def _strs(gens) -> list[str]:
    return [str(g) for g in gens]


def canon_report(a: MonomialIdeal, result: CanonicalResult) -> CanonReport:
    return CanonReport(
        n=a.n,
        input=_strs(a.gens),
        result=_strs(result.canonical.gens),
        canonical=result.was_already_canonical,
        strategy=result.strategy,
        added=_strs(result.added),
        removed=_strs(result.removed),
    )


def check_report(a: MonomialIdeal, verdict: CanonicityVerdict, shortcut: list[int]) -> CheckReport:
    witness = None
    reason = None
    if verdict.witness is not None:
        w = verdict.witness
        witness = WitnessReport(first=w.first + 1, second=w.second + 1, index=w.index)
        reason = (
            f"{a.gens[w.first]} and {a.gens[w.second]} share only index {w.index} "
            f"and no other generator divides their reduced lcm"
        )
    elif verdict.precondition_failure is not None:
        reason = verdict.precondition_failure.describe(a)

    return CheckReport(
        n=a.n,
        input=_strs(a.gens),
        canonical=verdict.canonical,
        hypotheses_met=verdict.hypotheses_met,
        witness=witness,
        reason=reason,
        shortcut_indices=shortcut,
    )


def decompose_report(a: MonomialIdeal, primes: list[MonomialPrime], strategy: str) -> DecomposeReport:
    return DecomposeReport(
        n=a.n,
        input=_strs(a.gens),
        strategy=strategy,
        primes=[[f"{axis.value}{i}" for axis, i in p.variables()] for p in primes],
    )


def format_check(report: CheckReport) -> str:
    """One verdict line, followed by the reason when there is one."""
    if report.canonical:
        return "canonical\n"
    head = "not canonical" if report.hypotheses_met else "hypotheses not met"
    return f"{head}: {report.reason}\n"


def format_primes(primes: list[MonomialPrime]) -> str:
    return "".join(f"{p}\n" for p in primes)


def format_diff(fast: MonomialIdeal, full: MonomialIdeal) -> str:
    """Generators found by only one of the two strategies."""
    lines = []
    for g in full.gens:
        if g not in fast.generator_set:
            lines.append(f"- {g}  (full only)")
    for g in fast.gens:
        if g not in full.generator_set:
            lines.append(f"+ {g}  (fast only)")
    return "\n".join(lines) + "\n"


def format_ideal(a: MonomialIdeal) -> str:
    """Ideal file text, so that output can be fed back as input."""
    return format_ideal_text(a)


def format_generators(gens: list) -> str:
    """One generator per line; works for any printable monomial type."""
    return "".join(f"{g}\n" for g in gens)
