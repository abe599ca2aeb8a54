"""Second Chern classes of SL(n) representations.

Computes the index n_lambda = c2(gamma_n^lambda) for irreducible
representations labelled by partitions, enumerates minimal generating
sets of the representation rings of the quotients SL(n)/mu_d, and
certifies the gcd of the indices over such a set.
"""
from .chern import (
    ChernResult,
    CrossCheckError,
    EnumerationCeilingError,
    c2,
    c2_closed_form,
    c2_enumeration,
    casimir,
    dual_partition,
)
from .partitions import (
    Partition,
    PartitionError,
    conjugate,
    partition,
    schur_dimension,
    ssyt_count,
    ssyt_stream,
    ssyt_substreams,
)
from .tables import (
    CASES,
    REFERENCE_TABLES,
    CaseReport,
    ConjectureReport,
    GeneratorTable,
    TableRow,
    explore_conjecture,
    generator_table,
    image_index,
    table_against_reference,
    verify_case,
)
from .weights import (
    GroupSpec,
    Weight,
    dual_weight,
    hilbert_basis,
    is_monoid_irreducible,
    monoid_members_up_to,
    partition_of,
    weight_of,
    weight_str,
)

__version__ = "0.1.0"

__all__ = [
    "CASES",
    "CaseReport",
    "ChernResult",
    "ConjectureReport",
    "CrossCheckError",
    "EnumerationCeilingError",
    "GeneratorTable",
    "GroupSpec",
    "Partition",
    "PartitionError",
    "REFERENCE_TABLES",
    "TableRow",
    "Weight",
    "c2",
    "c2_closed_form",
    "c2_enumeration",
    "casimir",
    "conjugate",
    "dual_partition",
    "dual_weight",
    "explore_conjecture",
    "generator_table",
    "hilbert_basis",
    "image_index",
    "is_monoid_irreducible",
    "monoid_members_up_to",
    "partition",
    "partition_of",
    "schur_dimension",
    "ssyt_count",
    "ssyt_stream",
    "ssyt_substreams",
    "table_against_reference",
    "verify_case",
    "weight_of",
    "weight_str",
    "__version__",
]
