"""Exact computation and falsification tooling for generalized inverses.

The package has three layers, re-exported here:

* constructions — exact generalized inverses of rational and Gaussian
  rational matrices (`mp_inverse`, `drazin_inverse`, `wd_canonical`,
  `wdmp_inverse`, ...), each returning an `InverseResult` whose witness
  has been re-verified against the defining equations;
* oracles — brute-force witness sets over small finite *-rings
  (`ring_build`, `witness_set`), used to cross-check the constructions
  and to hunt counterexamples;
* the law layer — a tiny language for identities with hypotheses
  (`parse_law`, `evaluate_law`) and a curated theorem catalog
  (`run_theorem`, `run_all`) that replays known results and reports
  counterexamples when a claim fails on some carrier.

>>> from ginvlab import mp_inverse, ExactMatrix
>>> a = ExactMatrix.from_rows([[1, 1], [0, 0]], "Q")
>>> mp_inverse(a).value
ExactMatrix(Q, [1/2 0; 1/2 0])
>>> from ginvlab import ring_build, witness_set, InverseKind
>>> sorted(witness_set(ring_build("Zn:6"), 2, InverseKind.WD).witnesses)
[2, 5]
"""

from ._version import __version__
from .scalars import (
    FIELD_GAUSSIAN,
    FIELD_RATIONAL,
    GaussianRational,
    format_scalar,
    parse_scalar,
)
from .matrices import (
    DimensionMismatch,
    ExactMatrix,
    MatrixFormatError,
    SingularMatrix,
    drazin_index,
    inverse_matrix,
    left_nullspace_basis,
    nullspace_basis,
    range_included,
    rank,
    row_space_equal,
    row_space_included,
)
from .engine import (
    IndexTooLarge,
    InverseKind,
    InverseResult,
    VerificationFailed,
    core_inverse,
    dmp_inverse,
    drazin_inverse,
    group_inverse,
    hirano_invertible,
    is_ep,
    k_used,
    mp_inverse,
    pseudo_core_inverse,
    right_pseudo_core_inverse,
    verify_definition,
    wd_canonical,
    wd_family_sample,
    wdmp_inverse,
)
from .rings import (
    FiniteRing,
    RingFormatError,
    WitnessSet,
    annihilators,
    proper_check,
    ring_build,
    ring_from_tables,
    witness_set,
)
from .laws import (
    LawSyntaxError,
    VerificationReport,
    evaluate_law,
    necessity_probe,
    parse_law,
    print_law,
)
from .sampling import MatrixSampler, MatrixSpecError, parse_matrix_spec, variety_pool
from .catalog import (
    DEFAULT_MATRIX_ROSTER,
    DEFAULT_RING_ROSTER,
    DEFAULT_ROSTER,
    InapplicableCarrier,
    TheoremEntry,
    UnknownTheorem,
    run_all,
    run_theorem,
)

__all__ = [
    "__version__",
    # scalars
    "FIELD_GAUSSIAN",
    "FIELD_RATIONAL",
    "GaussianRational",
    "format_scalar",
    "parse_scalar",
    # matrices
    "DimensionMismatch",
    "ExactMatrix",
    "MatrixFormatError",
    "SingularMatrix",
    "drazin_index",
    "inverse_matrix",
    "left_nullspace_basis",
    "nullspace_basis",
    "range_included",
    "rank",
    "row_space_equal",
    "row_space_included",
    # engine
    "IndexTooLarge",
    "InverseKind",
    "InverseResult",
    "VerificationFailed",
    "core_inverse",
    "dmp_inverse",
    "drazin_inverse",
    "group_inverse",
    "hirano_invertible",
    "is_ep",
    "k_used",
    "mp_inverse",
    "pseudo_core_inverse",
    "right_pseudo_core_inverse",
    "verify_definition",
    "wd_canonical",
    "wd_family_sample",
    "wdmp_inverse",
    # rings
    "FiniteRing",
    "RingFormatError",
    "WitnessSet",
    "annihilators",
    "proper_check",
    "ring_build",
    "ring_from_tables",
    "witness_set",
    # laws
    "LawSyntaxError",
    "VerificationReport",
    "evaluate_law",
    "necessity_probe",
    "parse_law",
    "print_law",
    # sampling
    "MatrixSampler",
    "MatrixSpecError",
    "parse_matrix_spec",
    "variety_pool",
    # catalog
    "DEFAULT_MATRIX_ROSTER",
    "DEFAULT_RING_ROSTER",
    "DEFAULT_ROSTER",
    "InapplicableCarrier",
    "TheoremEntry",
    "UnknownTheorem",
    "run_all",
    "run_theorem",
]


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
