"""Exact invertibility certificates for rational circulant matrices.

The package decides, in exact rational arithmetic, whether the circulant
matrix built from a given first row is invertible.  The decision pipeline:

1. evaluate one integer-coefficient linear condition per divisor of n
   (coefficients are Ramanujan sums) - if none vanishes, the matrix is
   certifiably nonsingular;
2. otherwise test, for each vanishing divisor d, whether the d-th
   cyclotomic polynomial divides the row polynomial - a divisor certifies
   singularity, and the exhaustive check certifies nonsingularity.

Every verdict carries a `Certificate` with the full screen values and, when
needed, the witnessing divisor or the exact determinant.  Two independent
determinant routes (fraction-free elimination and cyclotomic resultants)
and an independent symbolic oracle for the Ramanujan sums guard against
implementation bugs.

`families` adds generators and scan tools for two structured families: the
power-product matrices generalizing the classical Maillet determinant, and
zero/one circulants of prime-power size.
"""

from .circulant import (
    FirstRow,
    det_bareiss,
    det_resultant,
    eigenvalue_is_zero,
    expand,
    first_row,
    is_singular_exact,
    matrix_csv,
    parse_row,
    rotate,
)
from .conditions import (
    Certificate,
    DivisorCondition,
    ScreenOutcome,
    ScreenVerdict,
    TemplateComparison,
    TemplateDeviation,
    Verdict,
    classify_prime,
    compare_templates_to_generic,
    condition_value,
    decide,
    generate_conditions,
    screen,
    template_conditions,
    template_deviations,
    templates_match_generic,
)
from .errors import CircaError, InputError, InternalInconsistencyError
from .families import (
    DEFAULT_SEED,
    MailletSpec,
    PairRecord,
    Tag,
    TagGrid,
    ZeroOneReport,
    four_q_plus_one_scan,
    half_prime_criterion,
    maillet_matrix,
    maillet_row,
    ones_count_criterion,
    power_sum_inequality_holds,
    quarter_prime_criterion,
    quarter_prime_residue,
    render_tag_grid,
    tag_grid,
    threshold_inequality_holds,
    verify_permutation_similarity,
    zeroone_scan,
)
from .numtheory import (
    divisors,
    factorize,
    is_prime,
    is_prime_power,
    is_primitive_element,
    multiplicative_order,
    primitive_elements,
    totient,
    unit_group,
)
from .polys import IntPolynomial, resultant
from .ramanujan import (
    cyclotomic,
    ramanujan_sum,
    ramanujan_sum_oracle,
    ramanujan_table_tsv,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "CircaError",
    "InputError",
    "InternalInconsistencyError",
    # number theory
    "divisors",
    "factorize",
    "is_prime",
    "is_prime_power",
    "is_primitive_element",
    "multiplicative_order",
    "primitive_elements",
    "totient",
    "unit_group",
    # polynomials
    "IntPolynomial",
    "resultant",
    # Ramanujan sums and cyclotomics
    "cyclotomic",
    "ramanujan_sum",
    "ramanujan_sum_oracle",
    "ramanujan_table_tsv",
    # circulants
    "FirstRow",
    "first_row",
    "parse_row",
    "rotate",
    "expand",
    "matrix_csv",
    "det_bareiss",
    "det_resultant",
    "eigenvalue_is_zero",
    "is_singular_exact",
    # conditions and decisions
    "ScreenOutcome",
    "Verdict",
    "DivisorCondition",
    "ScreenVerdict",
    "Certificate",
    "TemplateDeviation",
    "TemplateComparison",
    "generate_conditions",
    "condition_value",
    "screen",
    "decide",
    "classify_prime",
    "template_conditions",
    "template_deviations",
    "compare_templates_to_generic",
    "templates_match_generic",
    # families
    "DEFAULT_SEED",
    "MailletSpec",
    "Tag",
    "TagGrid",
    "ZeroOneReport",
    "PairRecord",
    "maillet_matrix",
    "maillet_row",
    "verify_permutation_similarity",
    "threshold_inequality_holds",
    "power_sum_inequality_holds",
    "half_prime_criterion",
    "quarter_prime_criterion",
    "quarter_prime_residue",
    "tag_grid",
    "render_tag_grid",
    "ones_count_criterion",
    "zeroone_scan",
    "four_q_plus_one_scan",
]
