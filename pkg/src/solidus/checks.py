"""Executable encodings of the axioms and theorems, with counterexample reports.

Every entry in the registry evaluates one law on randomly generated instances
(or once, for exact identities).  Failures are shrunk toward fewer terms,
simpler exponents and smaller coefficients, and rendered in the canonical
expression syntax.  Two deliberately wrong entries (naive distributivity and a
corrupted magnitude product table) are registered as expected failures to
demonstrate that the harness discriminates.

Evaluation is sequential; reports are keyed by sample index, so the output is
deterministic for a given (check id, config, count).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Optional

from .errors import InternalError, UnknownCheckError
from .external import (
    ExternalNum,
    canonicalize,
    ext_abs,
    ext_add,
    ext_compare,
    ext_disjoint,
    ext_div,
    ext_inv,
    ext_member,
    ext_mul,
    ext_neg,
    ext_subset,
    magnitude,
    pure,
    shadow,
    unity,
)
from .field import Ordering, PreciseNum, RhoPoly
from .generate import GeneratorConfig, Sampler, shrink
from .halfline import (
    Halfline,
    HalflineKind,
    hl_complement,
    hl_member,
    lower,
    magnitude_gap_witness,
    separate_from_hole,
    separate_precise,
    zup,
)
from .naturals import (
    INDUCTION_CATALOG,
    archimedean_witness,
    induction_spotcheck,
    is_natural,
)
from .neutrix import (
    FULL,
    IDEMPOTENTS,
    INFINITESIMALS,
    LIMITED,
    Neutrix,
    NeutrixKind,
    NX_ZERO,
    decompose,
    is_ideal_of,
    is_idempotent,
    maximal_ideal,
    nx_add,
    nx_compare,
    nx_contains,
    nx_mul,
    nx_scale,
)

LT, EQ, GT = Ordering.LT, Ordering.EQ, Ordering.GT


# --- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class CheckFailure:
    inputs: tuple[tuple[str, str], ...]
    expected: str
    observed: str


@dataclass
class CheckReport:
    check_id: str
    samples: int
    failures: list[CheckFailure] = dc_field(default_factory=list)
    expect_failures: bool = False
    notes: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.failures:
            return "expected-fail" if self.expect_failures else "fail"
        return "unexpected-pass" if self.expect_failures else "pass"

    @property
    def ok(self) -> bool:
        return bool(self.failures) == self.expect_failures


@dataclass(frozen=True)
class Check:
    check_id: str
    group: str
    description: str
    names: tuple[str, ...]
    draw: Callable[[Sampler], tuple]
    verdict: Callable[..., Optional[str]]
    expected: str
    single: bool = False
    expect_failures: bool = False
    note: str = ""


REGISTRY: dict[str, Check] = {}
ALIASES: dict[str, str] = {}

AXIOM_GROUPS = (
    "addition",
    "multiplication",
    "order",
    "mixed",
    "existence",
    "magnitude-product",
)


def _register(check: Check, *aliases: str) -> None:
    if check.check_id in REGISTRY:
        raise ValueError(f"duplicate check id {check.check_id}")
    REGISTRY[check.check_id] = check
    for alias in aliases:
        ALIASES[alias] = check.check_id


def resolve_check_id(check_id: str) -> str:
    if check_id in REGISTRY:
        return check_id
    if check_id in ALIASES:
        return ALIASES[check_id]
    raise UnknownCheckError(check_id)


def run_check(check_id: str, cfg: GeneratorConfig, n: int) -> CheckReport:
    chk = REGISTRY[resolve_check_id(check_id)]
    sampler = Sampler(cfg, chk.check_id)
    count = 1 if chk.single else n
    report = CheckReport(chk.check_id, count, expect_failures=chk.expect_failures)
    if chk.note:
        report.notes.append(chk.note)

    def evaluate(values: tuple) -> Optional[str]:
        try:
            return chk.verdict(*values)
        except Exception as exc:  # a crashing law counts as a failing law
            return f"raised {type(exc).__name__}: {exc}"

    def still_fails(values: tuple) -> bool:
        return evaluate(values) is not None

    for _ in range(count):
        values = chk.draw(sampler)
        observed = evaluate(values)
        if observed is None:
            continue
        shrunk = shrink(values, still_fails)
        observed = evaluate(shrunk) or observed
        report.failures.append(
            CheckFailure(
                inputs=tuple(zip(chk.names, (str(v) for v in shrunk))),
                expected=chk.expected,
                observed=observed,
            )
        )
    return report


def check(check_id: str, cfg: GeneratorConfig | None = None, n: int = 1000) -> CheckReport:
    """Evaluate one registered law; raises UnknownCheckError for bad ids."""
    return run_check(check_id, cfg or GeneratorConfig(), n)


def catalog_ids(groups: tuple[str, ...] | None = None) -> list[str]:
    return [cid for cid, chk in REGISTRY.items() if groups is None or chk.group in groups]


def run_catalog(
    cfg: GeneratorConfig | None = None,
    n: int = 1000,
    only: str | None = None,
) -> list[CheckReport]:
    cfg = cfg or GeneratorConfig()
    if only is not None:
        resolved = resolve_check_id(only) if (only in REGISTRY or only in ALIASES) else None
        ids = [resolved] if resolved else [cid for cid in REGISTRY if cid.startswith(only)]
        if not ids:
            raise UnknownCheckError(only)
    else:
        ids = list(REGISTRY)
    return [run_check(cid, cfg, n) for cid in ids]


def format_report(report: CheckReport) -> str:
    lines = [
        f"{report.check_id}\t{report.status}\t{report.samples}\t{len(report.failures)}"
    ]
    for note in report.notes:
        lines.append(f"# note: {note}")
    for failure in report.failures:
        for name, text in failure.inputs:
            lines.append(f"# input {name} = {text}")
        lines.append(f"# expected: {failure.expected}")
        lines.append(f"# observed: {failure.observed}")
    return "\n".join(lines)


def format_reports(reports: list[CheckReport]) -> str:
    return "\n".join(format_report(r) for r in reports)


def exit_code(reports: list[CheckReport]) -> int:
    return 0 if all(r.ok for r in reports) else 1


# --- small helpers -------------------------------------------------------------


def _neq(expected: ExternalNum, got: ExternalNum) -> Optional[str]:
    if expected == got:
        return None
    return f"{got} (expected {expected})"


def _member_menu(nx: Neutrix) -> list[PreciseNum]:
    """Deterministic group elements hugging the threshold, for oracles."""
    if nx.kind is NeutrixKind.ZERO:
        return [PreciseNum.of(0)]
    if nx.kind is NeutrixKind.FULL:
        return [PreciseNum.of(v) for v in (0, 1, -1, RhoPoly.rho_power(2), RhoPoly.rho_power(-2, -3))]
    q = nx.q
    rp = RhoPoly.rho_power
    menu = [
        PreciseNum.of(0),
        PreciseNum.of(rp(q - Fraction(1, 2))),
        PreciseNum.of(rp(q - Fraction(1, 2), -2)),
        PreciseNum.of(rp(q - 1, 3)),
        PreciseNum.of(rp(q - 1, -1) + rp(q - 2, 1)),
    ]
    if nx.kind is NeutrixKind.CLOSED_CUT:
        menu += [PreciseNum.of(rp(q)), PreciseNum.of(rp(q, -3)), PreciseNum.of(rp(q, 2) + rp(q - 1))]
    return menu


def _representative_menu(alpha: ExternalNum, k: int | None = None) -> list[PreciseNum]:
    menu = [alpha.rep + g for g in _member_menu(alpha.nx)]
    return menu if k is None else menu[:k]


def _witness_above(a: ExternalNum, b: ExternalNum) -> PreciseNum:
    """A precise member of ``a`` strictly above ``b``; requires a > b."""
    delta = a.rep - b.rep
    combined = nx_add(a.nx, b.nx)
    if not nx_contains(combined, delta):
        return a.rep
    # inclusion case: b.nx is a proper subset of a.nx; climb inside a.nx
    big, small = a.nx, b.nx
    floors: list[Fraction] = []
    if small.kind in (NeutrixKind.OPEN_CUT, NeutrixKind.CLOSED_CUT):
        floors.append(small.q)
    d = delta.degree()
    if isinstance(d, Fraction):
        floors.append(d)
    if big.kind is NeutrixKind.FULL:
        t = max(floors, default=Fraction(0)) + 1
    elif big.kind is NeutrixKind.CLOSED_CUT:
        t = big.q
    else:
        floor = max([f for f in floors if f < big.q], default=big.q - 1)
        t = (big.q + floor) / 2
    coeff = 1
    for _ in range(64):
        candidate = a.rep + PreciseNum.of(RhoPoly.rho_power(t, coeff))
        if ext_member(candidate, a) and ext_compare(canonicalize(candidate), b) is GT:
            return candidate
        coeff *= 2
    raise InternalError("failed to climb above the smaller external number")


# --- draws ---------------------------------------------------------------------


def _d_ext(k: int):
    def draw(s: Sampler) -> tuple:
        return tuple(s.external() for _ in range(k))

    return draw


def _d_zeroless(k: int):
    def draw(s: Sampler) -> tuple:
        return tuple(s.zeroless() for _ in range(k))

    return draw


def _d_nothing(s: Sampler) -> tuple:
    return ()


def _d_absorbable(s: Sampler) -> tuple:
    x = s.external()
    if s.rng.random() < 0.6:
        sub = s.neutrix()
        if nx_compare(sub, x.nx) is GT:
            sub = x.nx
        y = canonicalize(s.member_of(x.nx), sub)
    else:
        y = s.external()
    return (x, y)


def _d_often_equal_pair(s: Sampler) -> tuple:
    # antisymmetry is vacuous on strictly ordered pairs; feed it equal values
    # rebuilt from different representatives a third of the time
    x = s.external()
    if s.rng.random() < 0.35:
        y = canonicalize(s.representative_of(x), x.nx)
    else:
        y = s.external()
    return (x, y)


def _d_unity_minimality(s: Sampler) -> tuple:
    x = s.zeroless()
    if s.rng.random() < 0.7:
        # candidates v with x*v = x: unity blurred below its own neutrix
        u = unity(x)
        sub = s.neutrix()
        if nx_compare(sub, u.nx) is GT:
            sub = u.nx
        v = canonicalize(1, sub)
    else:
        v = s.zeroless()
    return (x, v)


def _d_positive_mul(s: Sampler) -> tuple:
    x = s.positive_zeroless() if s.rng.random() < 0.8 else s.external()
    y, z = s.external(), s.external()
    if ext_compare(y, z) is GT:
        y, z = z, y
    return (x, y, z)


def _d_amplification(s: Sampler) -> tuple:
    x = s.external()
    y = ext_abs(s.external())
    z = ext_add(y, ext_abs(s.external()))
    return (x, y, z)


def _d_neutrix_pair(s: Sampler) -> tuple:
    return (s.neutrix(), s.neutrix())


def _d_magnitude(s: Sampler) -> tuple:
    return (s.neutrix(),)


def _d_archimedean(s: Sampler) -> tuple:
    for _ in range(64):
        x = ext_abs(s.zeroless()) if s.rng.random() < 0.7 else pure(s.scaled_neutrix())
        step = ext_abs(s.external())
        y = ext_add(ext_add(x, step), canonicalize(1))
        if y.nx.kind is NeutrixKind.FULL:
            continue
        if canonicalize(0) < x and ext_compare(x, y) is LT:
            return (x, y)
    return (canonicalize(1), canonicalize(RhoPoly.rho_power(1)))


def _d_halfline(s: Sampler) -> tuple:
    kind = s.rng.choice(list(HalflineKind))
    return (lower(kind, s.external()),)


def _d_nonprecise(s: Sampler) -> tuple:
    for _ in range(64):
        alpha = s.external()
        if alpha.nx.kind is not NeutrixKind.ZERO:
            return (alpha,)
    return (canonicalize(0, LIMITED),)


def _d_nonprecise_pair(s: Sampler) -> tuple:
    return (_d_nonprecise(s)[0], _d_nonprecise(s)[0])


def _d_limited_triple(s: Sampler) -> tuple:
    return (s.limited_precise(), s.limited_precise(), s.limited_precise())


def _d_positive_precise(s: Sampler) -> tuple:
    return (s.positive_precise(),)


def _d_square_root_pair(s: Sampler) -> tuple:
    # positive monomials, so the square root exists in the model
    q = s.exponent()
    c = abs(s.coefficient())
    return (PreciseNum.of(RhoPoly.rho_power(q, c)),)


def _d_degree_zero_positive(s: Sampler) -> tuple:
    x = abs(s.limited_precise())
    d = x.degree()
    if d < 0:
        x = x * PreciseNum.of(RhoPoly.rho_power(-d))
    return (x,)


def _d_naturals(s: Sampler) -> tuple:
    def nat_poly() -> RhoPoly:
        n = s.rng.randint(0, 2)
        p = RhoPoly.from_terms(
            (s.rng.randint(0, 2), s.rng.randint(-s.cfg.coeff_bound, s.cfg.coeff_bound))
            for _ in range(n)
        )
        return -p if p.sign() < 0 else p

    x, y = PreciseNum.of(nat_poly()), PreciseNum.of(nat_poly())
    mid_offset = s.rng.choice(
        [
            PreciseNum.of(Fraction(1, s.rng.randint(2, 5))),
            PreciseNum.of(RhoPoly.rho_power(-1, s.rng.randint(1, 3))),
            PreciseNum.of(Fraction(1, 2)) + PreciseNum.of(RhoPoly.rho_power(-2)),
        ]
    )
    return (x, y, mid_offset)


def _d_order_consistency(s: Sampler) -> tuple:
    p = abs(s.member_of(INFINITESIMALS, allow_zero=False))
    q = abs(_d_degree_zero_positive(s)[0]) * PreciseNum.of(
        RhoPoly.rho_power(Fraction(s.rng.randint(0, 4), 2))
    )
    return (p, q)


def _d_sup_consistency(s: Sampler) -> tuple:
    p = abs(s.member_of(INFINITESIMALS, allow_zero=False))
    q = _d_degree_zero_positive(s)[0]
    below = s.scaled_neutrix()
    while nx_compare(below, INFINITESIMALS) is not LT:
        below = s.scaled_neutrix()
    above = FULL if s.rng.random() < 0.2 else s.scaled_neutrix()
    while above.kind is not NeutrixKind.FULL and nx_compare(above, LIMITED) is not GT:
        above = s.scaled_neutrix()
    return (p, q, below, above)


# --- axiom verdicts -------------------------------------------------------------

# 1. addition


def _v_add_assoc(x, y, z):
    return _neq(ext_add(ext_add(x, y), z), ext_add(x, ext_add(y, z)))


def _v_add_comm(x, y):
    return _neq(ext_add(x, y), ext_add(y, x))


def _v_add_neutral(x, f):
    e = magnitude(x)
    if ext_add(x, e) != x:
        return f"x + e(x) = {ext_add(x, e)}"
    if ext_add(x, f) == x and ext_add(e, f) != e:
        return f"f absorbed by x but e + f = {ext_add(e, f)}"
    return None


def _v_add_symmetric(x):
    s = ext_neg(x)
    if ext_add(x, s) != magnitude(x):
        return f"x + (-x) = {ext_add(x, s)}"
    if magnitude(s) != magnitude(x):
        return f"e(-x) = {magnitude(s)}"
    return None


def _v_add_magnitude_linear(x, y):
    e = magnitude(ext_add(x, y))
    if e != magnitude(x) and e != magnitude(y):
        return f"e(x + y) = {e}"
    return None


# 2. multiplication


def _v_mul_assoc(x, y, z):
    return _neq(ext_mul(ext_mul(x, y), z), ext_mul(x, ext_mul(y, z)))


def _v_mul_comm(x, y):
    return _neq(ext_mul(x, y), ext_mul(y, x))


def _v_mul_unity(x, v):
    u = unity(x)
    if ext_mul(x, u) != x:
        return f"x * u(x) = {ext_mul(x, u)}"
    if ext_mul(x, v) == x and ext_mul(u, v) != u:
        return f"x * v = x but u * v = {ext_mul(u, v)}"
    return None


def _v_mul_inverse(x):
    d = ext_inv(x)
    if ext_mul(x, d) != unity(x):
        return f"x * d(x) = {ext_mul(x, d)}"
    if unity(d) != unity(x):
        return f"u(d(x)) = {unity(d)}"
    return None


def _v_mul_unity_product(x, y):
    u = unity(ext_mul(x, y))
    if u != unity(x) and u != unity(y):
        return f"u(x*y) = {u}"
    return None


# 3. order


def _v_order_reflexive(x):
    if ext_compare(x, x) is not EQ:
        return f"compare(x, x) = {ext_compare(x, x).name}"
    return None


def _v_order_antisymmetric(x, y):
    if ext_compare(x, y) is not GT and ext_compare(y, x) is not GT and x != y:
        return "x <= y and y <= x but x != y"
    return None


def _v_order_transitive(x, y, z):
    if ext_compare(x, y) is not GT and ext_compare(y, z) is not GT:
        if ext_compare(x, z) is GT:
            return "x <= y <= z but x > z"
    return None


def _v_order_total(x, y):
    ab, ba = ext_compare(x, y), ext_compare(y, x)
    if ab.value != -ba.value:
        return f"compare(x, y) = {ab.name} but compare(y, x) = {ba.name}"
    return None


def _v_order_add_compatible(x, y, z):
    if ext_compare(x, y) is not GT and ext_compare(ext_add(x, z), ext_add(y, z)) is GT:
        return f"x + z = {ext_add(x, z)} > y + z = {ext_add(y, z)}"
    return None


def _v_order_absorbed_below(x, y):
    e = magnitude(x)
    if ext_add(y, e) == e:
        if ext_compare(y, e) is GT:
            return "y + e(x) = e(x) but y > e(x)"
        if ext_compare(ext_neg(y), e) is GT:
            return "y + e(x) = e(x) but -y > e(x)"
    return None


def _v_order_mul_compatible(x, y, z):
    if ext_compare(magnitude(x), x) is LT and ext_compare(y, z) is not GT:
        if ext_compare(ext_mul(x, y), ext_mul(x, z)) is GT:
            return f"x*y = {ext_mul(x, y)} > x*z = {ext_mul(x, z)}"
    return None


def _v_order_amplification(x, y, z):
    e = magnitude(x)
    if ext_compare(magnitude(y), y) is not GT and ext_compare(y, z) is not GT:
        if ext_compare(ext_mul(e, y), ext_mul(e, z)) is GT:
            return f"e(x)*y = {ext_mul(e, y)} > e(x)*z = {ext_mul(e, z)}"
    return None


# 4. mixed


def _v_mixed_scale(x, y):
    product = ext_mul(magnitude(x), y)
    if not product.rep.is_zero():
        return f"e(x)*y = {product} is not a magnitude"
    return None


def _v_mixed_product_magnitude(x, y):
    lhs = magnitude(ext_mul(x, y))
    rhs = ext_add(ext_mul(magnitude(x), y), ext_mul(magnitude(y), x))
    return _neq(rhs, lhs)


def _v_mixed_unity_magnitude(x):
    lhs = magnitude(unity(x))
    rhs = ext_div(magnitude(x), x)
    return _neq(rhs, lhs)


def _v_distributivity(x, y, z):
    lhs = ext_add(ext_mul(x, y), ext_mul(x, z))
    e = magnitude(x)
    rhs = ext_add(
        ext_add(ext_mul(x, ext_add(y, z)), ext_mul(e, y)), ext_mul(e, z)
    )
    return _neq(rhs, lhs)


def _v_mixed_negation(x, y):
    return _neq(ext_mul(ext_neg(x), y), ext_neg(ext_mul(x, y)))


# 5. existence


def _v_exist_zero_min(x):
    return _neq(x, ext_add(canonicalize(0), x))


def _v_exist_one_unity(x):
    return _neq(x, ext_mul(canonicalize(1), x))


def _v_exist_max_absorbs(x):
    return _neq(pure(FULL), ext_add(magnitude(x), pure(FULL)))


def _v_exist_intermediate():
    o = pure(INFINITESIMALS)
    if not (canonicalize(0) < o < pure(FULL)):
        return "infinitesimals not strictly between 0 and M"
    return None


def _v_exist_decomposition(x):
    a = canonicalize(x.rep)
    if magnitude(a) != canonicalize(0):
        return f"representative has magnitude {magnitude(a)}"
    return _neq(x, ext_add(a, magnitude(x)))


def _v_exist_separation(a, b):
    order = nx_compare(a, b)
    if order is EQ:
        return None
    lo, hi = (a, b) if order is LT else (b, a)
    z = separate_precise(pure(lo), pure(hi))
    zx = canonicalize(z)
    if z.is_zero():
        return "witness is not zeroless"
    if not (pure(lo) < zx < pure(hi)):
        return f"witness {z} not strictly between"
    return None


# 6. magnitude products


def _v_magprod_maximal_ideal():
    problems = []
    for j in (LIMITED, FULL):
        i = maximal_ideal(j)
        if nx_mul(i, j) != i:
            problems.append(f"I*J = {nx_mul(i, j)} for J = {j}")
        if not is_ideal_of(i, j):
            problems.append(f"I = {i} is not an ideal of {j}")
        if nx_compare(i, j) is not LT:
            problems.append(f"I = {i} not strictly below {j}")
    if maximal_ideal(LIMITED) != INFINITESIMALS or maximal_ideal(FULL) != NX_ZERO:
        problems.append("maximal ideal table wrong")
    return "; ".join(problems) or None


def _v_magprod_scale_to_idempotent(a):
    p, i = decompose(a)
    if not is_idempotent(i):
        return f"decomposed idempotent {i} is not idempotent"
    if p.is_zero():
        return "decomposed scalar is zero"
    if a.kind in (NeutrixKind.ZERO, NeutrixKind.FULL):
        return None if i == a else f"expected {a}, got {i}"
    if nx_scale(p, i) != a:
        return f"p*I = {nx_scale(p, i)}"
    return None


# schemes and arithmetical axioms


def _probe_points(b: ExternalNum) -> list[ExternalNum]:
    points = [b, canonicalize(b.rep), canonicalize(0), pure(FULL)]
    points += [canonicalize(b.rep + g) for g in _member_menu(b.nx)[:4]]
    one = PreciseNum.of(1)
    points += [canonicalize(b.rep + one), canonicalize(b.rep - one)]
    big = PreciseNum.of(RhoPoly.rho_power(5))
    points += [canonicalize(b.rep + big), canonicalize(b.rep - big)]
    return points


def _v_scheme_dedekind(h: Halfline):
    b = zup(h)
    points = _probe_points(b)
    in_bound = hl_member(h, b)
    if h.kind is HalflineKind.CLOSED and not in_bound:
        return "closed halfline misses its maximum"
    if h.kind is not HalflineKind.CLOSED and in_bound:
        return f"{h.kind.value} halfline contains its weak bound"
    members = [x for x in points if hl_member(h, x)]
    for x in members:
        for y in points:
            if ext_compare(y, x) is LT and not hl_member(h, y):
                return f"not downward closed: {y} < member {x}"
    try:
        comp = hl_complement(h)
    except Exception:
        return None
    for x in points:
        if hl_member(h, x) == hl_member(comp, x):
            return f"complement fails to partition at {x}"
    return None


def _v_arith_naturals(x, y, mid_offset):
    if not is_natural(PreciseNum.of(0)):
        return "0 is not natural"
    if is_natural(-(x + 1)):
        return f"negative {-(x + 1)} accepted as natural"
    one = PreciseNum.of(1)
    for v in (x, y, x + y, x * y, x + one):
        if not is_natural(v):
            return f"{v} escapes the natural family"
    mid = x + mid_offset
    if x < mid < x + one and is_natural(mid):
        return f"natural strictly between {x} and its successor: {mid}"
    return None


def _v_arith_induction():
    problems = []
    for fid in INDUCTION_CATALOG:
        report = induction_spotcheck(fid, bound=25)
        if not report.ok:
            problems.append(f"{fid}: {report.status}")
    return "; ".join(problems) or None


def _v_arith_induction_even_odd():
    report = induction_spotcheck("even_or_odd", bound=25)
    if report.status == "expected-fail":
        first = report.conclusion_failures[0]
        return f"even-or-odd fails at the nonstandard natural {first}, as documented"
    return None


def _v_arith_archimedean(x, y):
    witness = archimedean_witness(x, y)
    z = witness.as_precise()
    if not is_natural(z):
        return f"witness {z} is not natural"
    if ext_compare(ext_mul(canonicalize(z), x), y) is not GT:
        return f"z*x = {ext_mul(canonicalize(z), x)} does not exceed y"
    return None


# theorems


def _v_thm_chain():
    chain = [canonicalize(0), pure(INFINITESIMALS), canonicalize(1), pure(LIMITED), pure(FULL)]
    for a, b in zip(chain, chain[1:]):
        if ext_compare(a, b) is not LT:
            return f"{a} not strictly below {b}"
    return None


def _v_thm_no_magnitude_between(a):
    if nx_compare(INFINITESIMALS, a) is LT and nx_compare(a, LIMITED) is LT:
        return f"{a} lies strictly between the two canonical magnitudes"
    return None


def _v_thm_reciprocal_pound(p):
    lhs = ext_compare(pure(LIMITED), canonicalize(p)) is LT
    rhs = ext_compare(canonicalize(1 / p), pure(INFINITESIMALS)) is LT
    if lhs != rhs:
        return f"L < p is {lhs} but 1/p < o is {rhs}"
    return None


def _v_thm_reciprocal_oslash(p):
    lhs = ext_compare(pure(INFINITESIMALS), canonicalize(p)) is LT
    rhs = ext_compare(canonicalize(1 / p), pure(LIMITED)) is LT
    if lhs != rhs:
        return f"o < p is {lhs} but 1/p < L is {rhs}"
    return None


def _v_thm_sqrt_below(s):
    p = s * s
    if ext_compare(canonicalize(p), pure(INFINITESIMALS)) is LT:
        if ext_compare(canonicalize(s), pure(INFINITESIMALS)) is not LT:
            return f"p = {p} infinitesimal but sqrt(p) = {s} is not"
    return None


def _v_thm_sqrt_above(s):
    p = s * s
    if ext_compare(pure(LIMITED), canonicalize(p)) is LT:
        if ext_compare(pure(LIMITED), canonicalize(s)) is not LT:
            return f"p = {p} above L but sqrt(p) = {s} is not"
    return None


def _v_thm_square_between(p):
    o, limited = pure(INFINITESIMALS), pure(LIMITED)
    if o < canonicalize(p) < limited:
        sq = canonicalize(p * p)
        if not (o < sq < limited):
            return f"p^2 = {p * p} escapes (o, L)"
    return None


def _v_thm_sup_inf_characterization(below, above):
    # below < o: exhibit p with below < p < o and L < 1/p
    s = below.q if below.kind is not NeutrixKind.ZERO else Fraction(-2)
    w = PreciseNum.of(RhoPoly.rho_power(s / 2))
    if not (pure(below) < canonicalize(w)):
        return f"cofinal witness {w} not above {below}"
    if not (canonicalize(w) < pure(INFINITESIMALS)):
        return f"cofinal witness {w} not below o"
    if not (pure(LIMITED) < canonicalize(1 / w)):
        return f"1/w = {1 / w} not above L"
    # above > L: exhibit 1/p with p < o and 1/p < above
    if above.kind is NeutrixKind.FULL:
        inv = PreciseNum.of(RhoPoly.rho_power(1))
    else:
        inv = PreciseNum.of(RhoPoly.rho_power(above.q / 2))
    if not (canonicalize(inv) < pure(above)):
        return f"co-initial witness {inv} not below {above}"
    if not (canonicalize(1 / inv) < pure(INFINITESIMALS)):
        return f"1/witness = {1 / inv} not below o"
    if not (pure(LIMITED) < canonicalize(inv)):
        return f"co-initial witness {inv} not above L"
    return None


def _v_thm_oslash_oslash():
    got = nx_mul(INFINITESIMALS, INFINITESIMALS)
    return None if got == INFINITESIMALS else f"o*o = {got}"


def _v_thm_pound_pound():
    got = nx_mul(LIMITED, LIMITED)
    return None if got == LIMITED else f"L*L = {got}"


def _v_thm_oslash_pound():
    got = nx_mul(INFINITESIMALS, LIMITED)
    return None if got == INFINITESIMALS else f"o*L = {got}"


def _v_thm_max_ideal_sup(omega):
    # J = LIMITED: every precise omega with L < |omega| has 1/omega below o,
    # and the family climbs past any magnitude below o.
    w = abs(omega)
    if w.is_zero():
        return None
    if ext_compare(pure(LIMITED), canonicalize(w)) is LT:
        if ext_compare(canonicalize(1 / w), pure(INFINITESIMALS)) is not LT:
            return f"1/|omega| = {1 / w} not below o"
    if ext_compare(pure(FULL), canonicalize(w)) is LT:
        return "a precise element exceeds the whole-field magnitude"
    return None


def _v_thm_product_idempotents():
    problems = []
    for e in IDEMPOTENTS:
        for f in IDEMPOTENTS:
            got = nx_mul(e, f)
            lo, hi = (e, f) if nx_compare(e, f) is not GT else (f, e)
            if ext_compare(pure(hi), canonicalize(1)) is LT:
                expected = lo
            elif nx_compare(lo, maximal_ideal(hi)) is not GT:
                expected = lo
            else:
                expected = hi
            if got != expected:
                problems.append(f"{e}*{f} = {got}, expected {expected}")
    return "; ".join(problems) or None


_UNIT_SCALARS = (
    PreciseNum.of(7),
    PreciseNum.of(RhoPoly.rho_power(2)),
    PreciseNum.of(RhoPoly.rho_power(Fraction(-3, 2), 4)),
)


def _v_thm_idempotent_unique(a):
    if a.kind is NeutrixKind.ZERO:
        return None
    _, i = decompose(a)
    for scalar in _UNIT_SCALARS:
        rescaled = nx_scale(scalar, a)
        if decompose(rescaled)[1] != i:
            return f"idempotent part changed under scaling by {scalar}: {decompose(rescaled)[1]}"
    for other in IDEMPOTENTS:
        if other == i:
            continue
        if any(nx_scale(scalar, other) == a for scalar in _UNIT_SCALARS):
            return f"{a} also decomposes over the idempotent {other}"
    return None


def _v_thm_linearization(e, f):
    product = nx_mul(e, f)
    candidates: list[tuple[PreciseNum, Neutrix]] = []
    for base in (e, f):
        if base.kind is NeutrixKind.ZERO or base.kind is NeutrixKind.FULL:
            if product == base:
                candidates.append((PreciseNum.of(1), base))
        elif product.kind == base.kind:
            candidates.append((PreciseNum.of(RhoPoly.rho_power(product.q - base.q)), base))
    if product.kind is NeutrixKind.ZERO:
        zero_side = e if e.kind is NeutrixKind.ZERO else f
        candidates.append((PreciseNum.of(1), zero_side))
    for p, base in candidates:
        if p.sign() > 0 and nx_scale(p, base) == product:
            return None
    return f"no positive precise p with e*f = p*e or p*f (e*f = {product})"


def _v_thm_order_consistency(p, q):
    i, j = INFINITESIMALS, LIMITED
    ij = nx_mul(i, j)
    if nx_contains(i, p):
        pj = nx_scale(p, j)
        if nx_compare(pj, ij) is not LT:
            return f"p*J = {pj} not below I*J"
        pi = nx_scale(p, i)
        if nx_compare(pi, ij) is GT:
            return f"p*I = {pi} above I*J"
    if ext_compare(pure(i), canonicalize(q)) is LT:
        qj = nx_scale(q, j)
        if ext_compare(pure(j), canonicalize(q)) is LT:
            qi = nx_scale(q, i)
            if nx_compare(ij, qi) is not LT:
                return f"I*J not below q*I = {qi} for q above J"
        if nx_compare(ij, qj) is not LT:
            return f"I*J = {ij} not below q*J = {qj}"
    return None


def _v_thm_sup_consistency(p, q, below, above):
    i, j = INFINITESIMALS, LIMITED
    ij = nx_mul(i, j)
    if ij != i:
        return f"I*J = {ij}"
    # approximation from below: p*J < I, and the family passes any magnitude below I
    pj = nx_scale(p, j)
    if nx_compare(pj, i) is not LT:
        return f"p*J = {pj} not strictly below I"
    s = below.q
    w = PreciseNum.of(RhoPoly.rho_power(s / 2))
    if not (nx_compare(below, nx_scale(w, j)) is LT and nx_compare(nx_scale(w, j), i) is LT):
        return f"w*J = {nx_scale(w, j)} does not pass {below} from below"
    # the maximum over scalars strictly inside J is attained: q has degree 0
    if nx_scale(q, i) != i:
        return f"q*I = {nx_scale(q, i)} for I < q < J"
    # approximation from above: r*I > J for J < r, never equal, and co-initial
    r = PreciseNum.of(RhoPoly.rho_power(1))
    if nx_compare(j, nx_scale(r, i)) is not LT:
        return f"r*I = {nx_scale(r, i)} not above J"
    if above.kind is NeutrixKind.FULL:
        r2 = PreciseNum.of(RhoPoly.rho_power(1))
    else:
        r2 = PreciseNum.of(RhoPoly.rho_power(above.q / 2))
    scaled = nx_scale(r2, i)
    if not (nx_compare(j, scaled) is LT and nx_compare(scaled, above) is LT):
        return f"r*I = {scaled} does not pass {above} from above"
    return None


def _v_thm_subdistributivity(x, y, z):
    target = ext_add(ext_mul(x, y), ext_mul(x, z))
    for a in _representative_menu(x, 3):
        for b in _representative_menu(y, 3):
            for c in _representative_menu(z, 3):
                if not ext_member(a * (b + c), target):
                    return f"{a}*({b} + {c}) escapes x*y + x*z = {target}"
    return None


def _v_thm_trichotomy(x, y):
    disjoint = ext_disjoint(x, y)
    sub = ext_subset(x, y)
    sup = ext_subset(y, x)
    cmp = ext_compare(x, y)
    if x == y:
        if disjoint or not (sub and sup):
            return "equal values must be mutual subsets"
        return None
    if disjoint + sub + sup != 1:
        return f"trichotomy count = {disjoint + sub + sup}"
    if disjoint and cmp is EQ:
        return "disjoint but compared equal"
    if sub and cmp is not LT:
        return f"x strictly inside y but compare = {cmp.name}"
    if sup and cmp is not GT:
        return f"y strictly inside x but compare = {cmp.name}"
    return None


def _v_thm_three_cases(b1: ExternalNum, b2: ExternalNum):
    # pairwise separation of the three kinds at a common non-precise bound
    closed, open_, so = (lower(k, b1) for k in HalflineKind)
    if hl_member(closed, b1) == hl_member(open_, b1):
        return "bound fails to separate closed from open"
    if hl_member(closed, b1) == hl_member(so, b1):
        return "bound fails to separate closed from strongly open"
    rep_point = canonicalize(b1.rep)
    if hl_member(open_, rep_point) == hl_member(so, rep_point):
        return "representative fails to separate open from strongly open"
    # uniqueness of bounds for a fixed kind
    if b1 != b2:
        order = ext_compare(b1, b2)
        lo, hi = (b1, b2) if order is LT else (b2, b1)
        if hl_member(lower(HalflineKind.CLOSED, lo), hi):
            return f"closed({lo}) contains the larger bound {hi}"
        s = separate_precise(lo, hi)
        if hl_member(lower(HalflineKind.OPEN, lo), canonicalize(s)) or not hl_member(
            lower(HalflineKind.OPEN, hi), canonicalize(s)
        ):
            return f"separator {s} fails to distinguish the open halflines"
        if _so_distinguisher(lo, hi) is None:
            return f"no separator found for strongly open bounds {lo} / {hi}"
    return None


def _so_distinguisher(lo: ExternalNum, hi: ExternalNum) -> ExternalNum | None:
    """A point in exactly one of the strongly-open lower halflines at lo < hi."""
    lo_so = lower(HalflineKind.STRONGLY_OPEN, lo)
    hi_so = lower(HalflineKind.STRONGLY_OPEN, hi)
    candidates = []
    if hl_member(hi_so, lo):
        candidates.append(canonicalize(separate_from_hole(lo, hi)))
    if nx_compare(lo.nx, hi.nx) is LT:
        u = magnitude_gap_witness(lo.nx, hi.nx)
        candidates.append(canonicalize(lo.rep - u))
    candidates.append(canonicalize(lo.rep))
    for x in candidates:
        if hl_member(lo_so, x) != hl_member(hi_so, x):
            return x
    return None


def _v_thm_dedekind_precise_collapse(p: PreciseNum):
    b = canonicalize(p)
    points = [canonicalize(p + d) for d in (PreciseNum.of(-1), PreciseNum.of(0), PreciseNum.of(1), PreciseNum.of(RhoPoly.rho_power(-1)))]
    points.append(canonicalize(p, INFINITESIMALS))
    for x in points:
        if hl_member(lower(HalflineKind.OPEN, b), x) != hl_member(
            lower(HalflineKind.STRONGLY_OPEN, b), x
        ):
            return f"open and strongly open differ at {x} for precise bound"
    return None


def _v_thm_rational_form(alpha: ExternalNum):
    if not alpha.rep.is_polynomial():
        return f"canonical representative {alpha.rep} is not polynomial"
    if canonicalize(alpha.rep, alpha.nx) != alpha:
        return "canonical form does not reconstruct"
    for y in _representative_menu(alpha, 4):
        if canonicalize(y, alpha.nx) != alpha:
            return f"representative {y} reconstructs to {canonicalize(y, alpha.nx)}"
    return None


def _v_thm_shadow_field(a, b, c):
    sh = lambda v: shadow(canonicalize(v))
    x, y, z = sh(a), sh(b), sh(c)
    zero, one = pure(INFINITESIMALS), shadow(canonicalize(1))
    if ext_add(x, y) != sh(a + b) or ext_mul(x, y) != sh(a * b):
        return "shadow operations disagree with shadows of results"
    for g in (PreciseNum.of(RhoPoly.rho_power(-1, 2)), PreciseNum.of(RhoPoly.rho_power(Fraction(-1, 2)))):
        if sh(a + g) != x:
            return f"shadow depends on representative: {a} vs {a + g}"
    if ext_add(ext_add(x, y), z) != ext_add(x, ext_add(y, z)):
        return "shadow addition not associative"
    if ext_mul(ext_mul(x, y), z) != ext_mul(x, ext_mul(y, z)):
        return "shadow multiplication not associative"
    if ext_mul(x, ext_add(y, z)) != ext_add(ext_mul(x, y), ext_mul(x, z)):
        return "shadow distributivity fails"
    if ext_add(x, zero) != x or ext_mul(x, one) != x:
        return "shadow identities fail"
    if ext_add(x, sh(-a)) != zero:
        return "shadow negation fails"
    if x != zero:
        if ext_mul(x, sh(1 / a)) != one:
            return f"shadow inverse fails: {ext_mul(x, sh(1 / a))}"
    return None


def _v_thm_unity_multiplicative(x, y):
    return _neq(ext_mul(unity(x), unity(y)), unity(ext_mul(x, y)))


# oracles


def minkowski_oracle(
    alpha: ExternalNum, beta: ExternalNum, op: str, k: int
) -> CheckReport:
    """Sampled representatives of both operands land inside the computed result."""
    if k < 1:
        raise ValueError("need at least one representative")
    if op == "add":
        result = ext_add(alpha, beta)
        combine = lambda x, y: x + y
    elif op == "mul":
        result = ext_mul(alpha, beta)
        combine = lambda x, y: x * y
    else:
        raise ValueError(f"unknown Minkowski operation {op!r}")
    report = CheckReport(f"oracle.minkowski.{op}", samples=0)
    xs = _representative_menu(alpha)
    ys = _representative_menu(beta)
    pairs = [(x, y) for x in xs for y in ys][: max(k, 1)]
    report.samples = len(pairs)
    for x, y in pairs:
        value = combine(x, y)
        if not ext_member(value, result):
            report.failures.append(
                CheckFailure(
                    inputs=(("alpha", str(alpha)), ("beta", str(beta)), ("x", str(x)), ("y", str(y))),
                    expected=f"x {op} y lands in {result}",
                    observed=str(value),
                )
            )
    return report


def _v_oracle_minkowski(x, y):
    for op in ("add", "mul"):
        sub = minkowski_oracle(x, y, op, 20)
        if sub.failures:
            f = sub.failures[0]
            return f"{op}: {f.observed} escapes (x={dict(f.inputs)['x']}, y={dict(f.inputs)['y']})"
    return None


def _v_oracle_order(x, y):
    cmp = ext_compare(x, y)
    if cmp is not GT:
        for rep in _representative_menu(x, 20):
            if ext_compare(canonicalize(rep), y) is GT:
                return f"x <= y but member {rep} exceeds y"
    if cmp is not LT:
        for rep in _representative_menu(y, 20):
            if ext_compare(canonicalize(rep), x) is GT:
                return f"y <= x but member {rep} exceeds x"
    if cmp is LT:
        w = _witness_above(y, x)
        if not ext_member(w, y) or ext_compare(canonicalize(w), x) is not GT:
            return f"x < y but no member of y exceeds x (tried {w})"
    if cmp is GT:
        w = _witness_above(x, y)
        if not ext_member(w, x) or ext_compare(canonicalize(w), y) is not GT:
            return f"y < x but no member of x exceeds y (tried {w})"
    return None


# mutants


def _d_distributivity_stress(s: Sampler) -> tuple:
    # Violations of the naive law need cancellation in y + z; draw some.
    x, y = s.external(), s.external()
    z = ext_neg(y) if s.rng.random() < 0.5 else s.external()
    return (x, y, z)


def _v_mutant_distributivity(x, y, z):
    lhs = ext_add(ext_mul(x, y), ext_mul(x, z))
    rhs = ext_mul(x, ext_add(y, z))
    return _neq(rhs, lhs)


def _mutant_nx_mul(a: Neutrix, b: Neutrix) -> Neutrix:
    if {a, b} == {INFINITESIMALS, LIMITED}:
        return LIMITED
    return nx_mul(a, b)


def _v_mutant_oslash_pound():
    i, j = INFINITESIMALS, LIMITED
    got = _mutant_nx_mul(i, j)
    if got != maximal_ideal(j):
        return f"corrupted table gives o*L = {got}, breaking I*J = I"
    return None


# --- registry -----------------------------------------------------------------


def _build_registry() -> None:
    ext_names = ("x", "y", "z")

    # 1. addition
    _register(Check("axiom.add.assoc", "addition", "x+(y+z) = (x+y)+z", ext_names, _d_ext(3), _v_add_assoc, "associativity of addition"))
    _register(Check("axiom.add.comm", "addition", "x+y = y+x", ("x", "y"), _d_ext(2), _v_add_comm, "commutativity of addition"))
    _register(Check("axiom.add.neutral", "addition", "x+e(x) = x, minimally", ("x", "f"), _d_absorbable, _v_add_neutral, "individualized neutral element"))
    _register(Check("axiom.add.symmetric", "addition", "x+(-x) = e(x) with e(-x) = e(x)", ("x",), _d_ext(1), _v_add_symmetric, "individualized symmetric element"))
    _register(Check("axiom.add.magnitude_linear", "addition", "e(x+y) is e(x) or e(y)", ("x", "y"), _d_ext(2), _v_add_magnitude_linear, "magnitude of a sum"))

    # 2. multiplication
    _register(Check("axiom.mul.assoc", "multiplication", "x(yz) = (xy)z", ext_names, _d_ext(3), _v_mul_assoc, "associativity of multiplication"))
    _register(Check("axiom.mul.comm", "multiplication", "xy = yx", ("x", "y"), _d_ext(2), _v_mul_comm, "commutativity of multiplication"))
    _register(Check("axiom.mul.unity", "multiplication", "x*u(x) = x, minimally", ("x", "v"), _d_unity_minimality, _v_mul_unity, "individualized unity"))
    _register(Check("axiom.mul.inverse", "multiplication", "x*d(x) = u(x) with u(d) = u(x)", ("x",), _d_zeroless(1), _v_mul_inverse, "individualized division"))
    _register(Check("axiom.mul.unity_product", "multiplication", "u(xy) is u(x) or u(y)", ("x", "y"), _d_zeroless(2), _v_mul_unity_product, "unity of a product"))

    # 3. order
    _register(Check("axiom.order.reflexive", "order", "x <= x", ("x",), _d_ext(1), _v_order_reflexive, "reflexivity"))
    _register(Check("axiom.order.antisymmetric", "order", "x<=y and y<=x imply x=y", ("x", "y"), _d_often_equal_pair, _v_order_antisymmetric, "antisymmetry"))
    _register(Check("axiom.order.transitive", "order", "x<=y<=z implies x<=z", ext_names, _d_ext(3), _v_order_transitive, "transitivity"))
    _register(Check("axiom.order.total", "order", "compare is total and antitone under swap", ("x", "y"), _d_ext(2), _v_order_total, "totality"))
    _register(Check("axiom.order.add_compatible", "order", "x<=y implies x+z<=y+z", ext_names, _d_ext(3), _v_order_add_compatible, "compatibility with addition"))
    _register(Check("axiom.order.absorbed_below", "order", "y+e(x)=e(x) implies y<=e(x) and -y<=e(x)", ("x", "y"), _d_absorbable, _v_order_absorbed_below, "absorbed elements are small"))
    _register(Check("axiom.order.mul_compatible", "order", "e(x)<x and y<=z imply xy<=xz", ext_names, _d_positive_mul, _v_order_mul_compatible, "compatibility with positive multiplication"))
    _register(Check("axiom.order.amplification", "order", "e(y)<=y<=z implies e(x)y<=e(x)z", ext_names, _d_amplification, _v_order_amplification, "amplification by magnitudes"))

    # 4. mixed
    _register(Check("axiom.mixed.scale", "mixed", "e(x)*y is a magnitude", ("x", "y"), _d_ext(2), _v_mixed_scale, "products with magnitudes are magnitudes"))
    _register(Check("axiom.mixed.product_magnitude", "mixed", "e(xy) = e(x)y + e(y)x", ("x", "y"), _d_ext(2), _v_mixed_product_magnitude, "magnitude of a product"))
    _register(Check("axiom.mixed.unity_magnitude", "mixed", "e(u(x)) = e(x)/x", ("x",), _d_zeroless(1), _v_mixed_unity_magnitude, "magnitude of the unity"))
    _register(
        Check("axiom.mixed.distributivity", "mixed", "xy+xz = x(y+z)+e(x)y+e(x)z", ext_names, _d_ext(3), _v_distributivity, "distributivity with magnitude correction"),
        "axiom.distributivity",
    )
    _register(Check("axiom.mixed.negation", "mixed", "-(xy) = (-x)y", ("x", "y"), _d_ext(2), _v_mixed_negation, "negation of a product"))

    # 5. existence
    _register(Check("axiom.exist.zero_min", "existence", "0 + x = x", ("x",), _d_ext(1), _v_exist_zero_min, "minimal magnitude"))
    _register(Check("axiom.exist.one_unity", "existence", "1 * x = x", ("x",), _d_ext(1), _v_exist_one_unity, "minimal unity"))
    _register(Check("axiom.exist.max_absorbs", "existence", "e(x) + M = M", ("x",), _d_ext(1), _v_exist_max_absorbs, "maximal magnitude"))
    _register(Check("axiom.exist.intermediate_magnitude", "existence", "a magnitude strictly between 0 and M exists", (), _d_nothing, _v_exist_intermediate, "intermediate magnitudes", single=True))
    _register(Check("axiom.exist.decomposition", "existence", "x = a + e(x) with a precise", ("x",), _d_ext(1), _v_exist_decomposition, "representative decomposition"))
    _register(Check("axiom.exist.separation", "existence", "distinct magnitudes are separated by a zeroless element", ("A", "B"), _d_neutrix_pair, _v_exist_separation, "separation of magnitudes"))

    # 6. magnitude products
    _register(Check("axiom.magprod.maximal_ideal", "magnitude-product", "I*J = I for the maximal ideal I of J", (), _d_nothing, _v_magprod_maximal_ideal, "maximal ideal absorption", single=True))
    _register(Check("axiom.magprod.scale_to_idempotent", "magnitude-product", "every magnitude is precise * idempotent", ("A",), _d_magnitude, _v_magprod_scale_to_idempotent, "scaling to an idempotent"))

    # schemes / arithmetical
    _register(Check("axiom.scheme.dedekind", "scheme", "represented halflines have weak bounds of the right kind", ("h",), _d_halfline, _v_scheme_dedekind, "generalized completeness on represented halflines"))
    _register(Check("axiom.arith.naturals", "arithmetical", "naturals are discrete, closed and nonnegative", ("x", "y", "offset"), _d_naturals, _v_arith_naturals, "natural number axiom"))
    _register(Check("axiom.arith.induction", "arithmetical", "curated induction battery", (), _d_nothing, _v_arith_induction, "induction spot checks", single=True, note="full induction provably fails for computable interpretations; see even_or_odd"))
    _register(
        Check(
            "axiom.arith.induction_even_odd",
            "arithmetical",
            "the even-or-odd induction instance fails at nonstandard points",
            (),
            _d_nothing,
            _v_arith_induction_even_odd,
            "documented expected failure",
            single=True,
            expect_failures=True,
            note=INDUCTION_CATALOG["even_or_odd"].explanation,
        )
    )
    _register(Check("axiom.arith.archimedean", "arithmetical", "some natural multiple of x exceeds y", ("x", "y"), _d_archimedean, _v_arith_archimedean, "Archimedean witness"))

    # theorems
    _register(Check("thm.chain", "theorem", "0 < o < 1 < L < M", (), _d_nothing, _v_thm_chain, "the canonical chain", single=True))
    _register(Check("thm.no_magnitude_between", "theorem", "no magnitude strictly between o and L", ("A",), _d_magnitude, _v_thm_no_magnitude_between, "extremality of o and L"))
    _register(Check("thm.reciprocal_pound", "theorem", "L < p iff 1/p < o", ("p",), _d_positive_precise, _v_thm_reciprocal_pound, "reciprocal across L"))
    _register(Check("thm.reciprocal_oslash", "theorem", "o < p iff 1/p < L", ("p",), _d_positive_precise, _v_thm_reciprocal_oslash, "reciprocal across o"))
    _register(Check("thm.sqrt_below_oslash", "theorem", "p < o implies sqrt(p) < o (power witnesses)", ("s",), _d_square_root_pair, _v_thm_sqrt_below, "roots stay infinitesimal"))
    _register(Check("thm.sqrt_above_pound", "theorem", "L < p implies L < sqrt(p) (power witnesses)", ("s",), _d_square_root_pair, _v_thm_sqrt_above, "roots stay large"))
    _register(Check("thm.square_between", "theorem", "o < p < L implies o < p^2 < L", ("p",), _d_degree_zero_positive, _v_thm_square_between, "squares stay appreciable"))
    _register(Check("thm.sup_inf_characterization", "theorem", "o = sup of reciprocals of large elements; L = inf of their inverses", ("below", "above"), lambda s: _d_sup_consistency(s)[2:], _v_thm_sup_inf_characterization, "sup/inf characterization"))
    _register(Check("thm.oslash_oslash", "theorem", "o*o = o", (), _d_nothing, _v_thm_oslash_oslash, "idempotency of o", single=True))
    _register(Check("thm.pound_pound", "theorem", "L*L = L", (), _d_nothing, _v_thm_pound_pound, "idempotency of L", single=True))
    _register(Check("thm.oslash_pound", "theorem", "o*L = o", (), _d_nothing, _v_thm_oslash_pound, "mixed product collapses down", single=True))
    _register(Check("thm.max_ideal", "theorem", "maximal ideals match their sup characterization", ("omega",), lambda s: (s.nonzero_precise(),), _v_thm_max_ideal_sup, "sup characterization of maximal ideals"))
    _register(Check("thm.product_idempotents", "theorem", "product of idempotents follows the trichotomy", (), _d_nothing, _v_thm_product_idempotents, "idempotent product trichotomy", single=True))
    _register(Check("thm.idempotent_unique", "theorem", "the idempotent factor of a magnitude is unique", ("A",), _d_magnitude, _v_thm_idempotent_unique, "uniqueness of the idempotent part"))
    _register(Check("thm.linearization", "theorem", "e*f = p*e or p*f for a positive precise p", ("A", "B"), _d_neutrix_pair, _v_thm_linearization, "linearization of magnitude products"))
    _register(Check("thm.order_consistency", "theorem", "magnitude products sit where the order demands", ("p", "q"), _d_order_consistency, _v_thm_order_consistency, "consistency with the order"))
    _register(Check("thm.sup_consistency", "theorem", "I*J is approachable from below but not from above", ("p", "q", "below", "above"), _d_sup_consistency, _v_thm_sup_consistency, "consistency with suprema"))
    _register(
        Check("thm.distributivity_total", "theorem", "xy+xz = x(y+z) + e(x)y + e(x)z exactly", ext_names, _d_ext(3), _v_distributivity, "total distributivity formula")
    )
    _register(Check("thm.subdistributivity", "theorem", "x(y+z) lands inside xy+xz for sampled members", ext_names, _d_ext(3), _v_thm_subdistributivity, "subdistributivity as sets"))
    _register(Check("thm.trichotomy", "theorem", "disjoint, subset or superset, consistent with compare", ("x", "y"), _d_ext(2), _v_thm_trichotomy, "set trichotomy"))
    _register(Check("thm.three_cases", "theorem", "the three halfline kinds are mutually exclusive", ("b1", "b2"), _d_nonprecise_pair, _v_thm_three_cases, "three cases are exclusive"))
    _register(Check("thm.dedekind_precise", "theorem", "open and strongly open coincide at precise bounds", ("p",), lambda s: (s.precise(),), _v_thm_dedekind_precise_collapse, "precise collapse"))
    _register(Check("thm.rational_form", "theorem", "non-precise values canonicalize to polynomial + magnitude", ("x",), _d_nonprecise, _v_thm_rational_form, "canonical rational form"))
    _register(Check("thm.shadow_field", "theorem", "shadows of limited precise elements form a field", ("a", "b", "c"), _d_limited_triple, _v_thm_shadow_field, "shadow field laws"))
    _register(Check("thm.unity_multiplicative", "theorem", "u(xy) = u(x)u(y)", ("x", "y"), _d_zeroless(2), _v_thm_unity_multiplicative, "multiplicativity of unities"))

    # oracles
    _register(Check("oracle.minkowski", "oracle", "sampled member sums/products land in the computed value", ("x", "y"), _d_ext(2), _v_oracle_minkowski, "Minkowski soundness"))
    _register(Check("oracle.order", "oracle", "the order decision matches the member-sampling definition", ("x", "y"), _d_ext(2), _v_oracle_order, "order oracle agreement"))

    # mutants (expected failures, demonstrating discrimination)
    _register(
        Check("mutant.distributivity_naive", "mutant", "the naive law xy+xz = x(y+z) must fail", ext_names, _d_distributivity_stress, _v_mutant_distributivity, "naive distributivity (deliberately wrong)", expect_failures=True, note="kept failing on purpose: the harness must refute the naive law"),
        "axiom.distributivity_naive",
    )
    _register(
        Check("mutant.oslash_pound_wrong", "mutant", "a corrupted o*L = L table must fail the ideal axiom", (), _d_nothing, _v_mutant_oslash_pound, "corrupted magnitude product (deliberately wrong)", single=True, expect_failures=True, note="kept failing on purpose: o*L = L contradicts maximal-ideal absorption"),
    )


_build_registry()
