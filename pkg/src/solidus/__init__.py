"""solidus: exact arithmetic for external numbers over a computable
non-Archimedean ordered field, with an executable axiom-checking harness.

The value hierarchy:

    RhoPoly      finite sums of rational powers of the infinite symbol rho
    PreciseNum   the ratio field of RhoPolys (the precise elements)
    Neutrix      magnitudes: convex additive subgroups cut out by degree
    ExternalNum  canonical pairs representative + neutrix

plus halflines with weak bounds, a natural-number interpretation, and a
registry of randomized axiom/theorem checks.
"""

from .errors import (
    DegenerateDomainError,
    EmptySetError,
    InternalError,
    NotAboveUnityError,
    NotIdempotentError,
    NotLimitedError,
    NotStrictlyOrderedError,
    NotZerolessError,
    ParseError,
    PreconditionFailedError,
    SolidusError,
    UnknownCheckError,
    UnknownFormulaError,
    ZeroScalarError,
)
from .field import (
    NEG_INFINITY,
    ONE_POLY,
    Ordering,
    PreciseNum,
    RHO,
    RhoPoly,
    ZERO_POLY,
    as_polynomial,
    compare_precise,
    degree,
    poly_arith,
    precise_arith,
    series_expand,
)
from .neutrix import (
    FULL,
    IDEMPOTENTS,
    INFINITESIMALS,
    LIMITED,
    Neutrix,
    NeutrixKind,
    NX_ZERO,
    closed_cut,
    decompose,
    is_ideal_of,
    is_idempotent,
    maximal_ideal,
    nx_add,
    nx_compare,
    nx_contains,
    nx_mul,
    nx_scale,
    open_cut,
)
from .external import (
    Classification,
    ExternalNum,
    as_external,
    canonicalize,
    classify,
    ext_abs,
    ext_add,
    ext_compare,
    ext_div,
    ext_inv,
    ext_le,
    ext_member,
    ext_mul,
    ext_neg,
    ext_sub,
    ext_subset,
    ext_disjoint,
    is_limited,
    is_zeroless,
    magnitude,
    neutrix_part,
    pure,
    shadow,
    unity,
)
from .halfline import (
    Halfline,
    HalflineKind,
    Side,
    hl_complement,
    hl_member,
    lower,
    separate_from_hole,
    separate_precise,
    upper,
    winf,
    winf_finite,
    zup,
    zup_finite,
)
from .naturals import (
    INDUCTION_CATALOG,
    InductionReport,
    NaturalWitness,
    archimedean_witness,
    induction_spotcheck,
    is_natural,
    run_induction_battery,
)
from .generate import GeneratorConfig, Sampler
from .checks import (
    CheckFailure,
    CheckReport,
    check,
    exit_code,
    format_report,
    format_reports,
    minkowski_oracle,
    run_catalog,
)
from .parser import evaluate, parse

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
