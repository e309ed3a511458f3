"""The arithmetical layer: naturals, Archimedean witnesses, induction battery.

Naturals are interpreted as the rho-polynomials with nonnegative integer
exponents, integer coefficients and nonnegative value.  This family is
discrete (no natural strictly between x and x+1: the difference would be an
integer polynomial with value in (0,1), impossible), closed under + and *, and
cofinal, which is what the Archimedean axiom needs.

The full first-order induction scheme cannot hold for any computable
interpretation of N (a Tennenbaum-type obstruction); for instance "every
natural is even or odd" fails here because (rho - 1)/2 is not in the family.
Induction is therefore verified only on a curated catalog of {+,*}-formulas,
with the even/odd instance kept as a documented expected failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import InternalError, PreconditionFailedError, UnknownFormulaError
from .external import ExternalNum, as_external, canonicalize, ext_compare, ext_mul
from .field import Ordering, PreciseLike, PreciseNum, RhoPoly, as_polynomial
from .neutrix import NeutrixKind


@dataclass(frozen=True)
class NaturalWitness:
    """A natural number in this interpretation, kept in polynomial form."""

    value: RhoPoly

    def as_precise(self) -> PreciseNum:
        return PreciseNum.of(self.value)

    def __str__(self) -> str:
        return str(self.value)


def is_natural(p: PreciseLike) -> bool:
    """Membership in the natural-number family.

    The value must be a polynomial (the denominator divides out exactly) with
    integer exponents >= 0, integer coefficients, and nonnegative sign.
    """
    poly = as_polynomial(PreciseNum.of(p))
    if poly is None:
        return False
    if poly.sign() < 0:
        return False
    for e, c in poly.terms:
        if e.denominator != 1 or e < 0 or c.denominator != 1:
            return False
    return True


def natural(p: PreciseLike) -> NaturalWitness:
    p = PreciseNum.of(p)
    if not is_natural(p):
        raise PreconditionFailedError(f"{p} is not a natural in this interpretation")
    return NaturalWitness(as_polynomial(p))


def _upper_degree(alpha: ExternalNum):
    d = alpha.rep.degree()
    if alpha.nx.kind in (NeutrixKind.OPEN_CUT, NeutrixKind.CLOSED_CUT):
        d = max(d, alpha.nx.q)
    return d


def archimedean_witness(x: ExternalNum, y: ExternalNum) -> NaturalWitness:
    """A natural z with z*x > y, given 0 < x < y.

    The candidate C*rho^k starts from the degree gap and the leading
    coefficient ratio and escalates until the comparison confirms it, so the
    postcondition is verified rather than assumed.  ``y`` must stay below some
    precise element: the whole-field magnitude has no precise majorant, so no
    multiple of x can exceed it.
    """
    zero = canonicalize(0)
    if not (zero < x and ext_compare(x, y) is Ordering.LT):
        raise PreconditionFailedError("requires 0 < x < y")
    if y.nx.kind is NeutrixKind.FULL:
        raise PreconditionFailedError("no natural multiple exceeds the whole-field magnitude")

    gap = _upper_degree(y) - _upper_degree(x)
    k0 = max(0, math.ceil(gap)) if gap > 0 else 0

    cx = x.rep.num.leading_coeff() or 1
    cy = y.rep.num.leading_coeff() or 1
    c = int(abs(cy / cx)) + 1

    for k in range(k0, k0 + 64):
        z = RhoPoly.rho_power(k, c)
        if ext_compare(ext_mul(as_external(z), x), y) is Ordering.GT:
            return NaturalWitness(z)
        c *= 2
    raise InternalError("archimedean witness escalation failed to terminate")


# --- curated induction catalog ------------------------------------------------

Predicate = Callable[[PreciseNum], bool]


@dataclass(frozen=True)
class InductionFormula:
    formula_id: str
    description: str
    holds: Predicate
    expected_fail: bool = False
    explanation: str = ""


@dataclass
class InductionReport:
    formula_id: str
    bound: int
    base_ok: bool = True
    step_failures: list[str] = field(default_factory=list)
    conclusion_failures: list[str] = field(default_factory=list)
    expected_fail: bool = False
    explanation: str = ""

    @property
    def holds(self) -> bool:
        return self.base_ok and not self.step_failures and not self.conclusion_failures

    @property
    def status(self) -> str:
        if self.holds:
            return "unexpected-pass" if self.expected_fail else "pass"
        return "expected-fail" if self.expected_fail else "fail"

    @property
    def ok(self) -> bool:
        return self.holds != self.expected_fail


def _eq(a: PreciseNum, b: PreciseNum) -> bool:
    return a == b


def _even_or_odd(x: PreciseNum) -> bool:
    return is_natural(x / 2) or is_natural((x - 1) / 2)


def _predecessor(x: PreciseNum) -> bool:
    return x == 0 or is_natural(x - 1)


def _catalog() -> dict[str, InductionFormula]:
    two, three, four, five, six = (PreciseNum.of(n) for n in (2, 3, 4, 5, 6))
    formulas = [
        InductionFormula("add_zero", "x + 0 = x", lambda x: _eq(x + 0, x)),
        InductionFormula("add_comm", "x + 3 = 3 + x", lambda x: _eq(x + three, three + x)),
        InductionFormula(
            "add_assoc", "(x + 2) + 5 = x + (2 + 5)", lambda x: _eq((x + two) + five, x + (two + five))
        ),
        InductionFormula("mul_one", "x * 1 = x", lambda x: _eq(x * 1, x)),
        InductionFormula("mul_zero", "x * 0 = 0", lambda x: _eq(x * 0, PreciseNum.of(0))),
        InductionFormula(
            "mul_succ", "x * (4 + 1) = x * 4 + x", lambda x: _eq(x * (four + 1), x * four + x)
        ),
        InductionFormula("mul_comm", "x * 6 = 6 * x", lambda x: _eq(x * six, six * x)),
        InductionFormula(
            "mul_assoc", "x * (2 * 3) = (x * 2) * 3", lambda x: _eq(x * (two * three), (x * two) * three)
        ),
        InductionFormula(
            "distrib", "x * (2 + 5) = x * 2 + x * 5", lambda x: _eq(x * (two + five), x * two + x * five)
        ),
        InductionFormula(
            "square_expand",
            "(x + 1) * (x + 1) = x * x + 2 * x + 1",
            lambda x: _eq((x + 1) * (x + 1), x * x + two * x + 1),
        ),
        InductionFormula("double", "x + x = 2 * x", lambda x: _eq(x + x, two * x)),
        InductionFormula("predecessor", "x = 0 or exists y with x = y + 1", _predecessor),
        InductionFormula(
            "even_or_odd",
            "exists y with x = 2*y or x = 2*y + 1",
            _even_or_odd,
            expected_fail=True,
            explanation=(
                "holds on the standard naturals 0..bound but fails at the "
                "nonstandard natural rho: neither rho/2 nor (rho-1)/2 has "
                "integer coefficients, so rho is neither even nor odd in this "
                "interpretation; the induction scheme provably cannot hold in "
                "full for a computable family"
            ),
        ),
    ]
    return {f.formula_id: f for f in formulas}


INDUCTION_CATALOG = _catalog()

#: Nonstandard naturals used for step and conclusion spot checks.
NONSTANDARD_SAMPLES = tuple(
    RhoPoly.from_terms(t)
    for t in (
        [(1, 1)],                      # rho
        [(1, 1), (0, 1)],              # rho + 1
        [(1, 2)],                      # 2 rho
        [(2, 1)],                      # rho^2
        [(2, 1), (1, 3), (0, 1)],      # rho^2 + 3 rho + 1
        [(1, 1), (0, -1)],             # rho - 1
    )
)


def induction_spotcheck(formula_id: str, bound: int = 50) -> InductionReport:
    """Check base case, inductive step and conclusion for one catalog formula.

    The step is verified on standard naturals 0..bound and on the nonstandard
    samples; the conclusion on the same sets (the expected failure shows up
    only at the nonstandard points).
    """
    try:
        formula = INDUCTION_CATALOG[formula_id]
    except KeyError:
        raise UnknownFormulaError(formula_id) from None
    report = InductionReport(
        formula_id=formula_id,
        bound=bound,
        expected_fail=formula.expected_fail,
        explanation=formula.explanation,
    )
    a = formula.holds
    report.base_ok = a(PreciseNum.of(0))

    samples = [PreciseNum.of(n) for n in range(bound + 1)]
    samples += [PreciseNum.of(p) for p in NONSTANDARD_SAMPLES]
    for x in samples:
        if a(x) and not a(x + 1):
            report.step_failures.append(str(x))

    for n in range(bound + 1):
        if not a(PreciseNum.of(n)):
            report.conclusion_failures.append(str(n))
    for p in NONSTANDARD_SAMPLES:
        if not a(PreciseNum.of(p)):
            report.conclusion_failures.append(str(p))
    return report


def run_induction_battery(bound: int = 50) -> list[InductionReport]:
    return [induction_spotcheck(fid, bound) for fid in INDUCTION_CATALOG]
