"""Exact integral homology of links of weighted homogeneous hypersurface
singularities: Betti numbers, torsion coefficients, Brieskorn-Pham and
chain representability tests, and an independent monodromy-cokernel check.
"""

from ._core import (
    ConventionViolation,
    HomologyResult,
    InvalidInput,
    PolynomialForm,
    __version__,
    betti,
    bp_exponents,
    bp_link,
    chain_exponents,
    eigen1_count,
    fano_degree,
    find_chain_orderings,
    homology,
    milnor_number,
    oracle_homology,
    scan_csv,
    smith_normal_form,
    torsion,
    validate_weights,
)

__all__ = [
    "ConventionViolation",
    "HomologyResult",
    "InvalidInput",
    "PolynomialForm",
    "__version__",
    "betti",
    "bp_exponents",
    "bp_link",
    "chain_exponents",
    "eigen1_count",
    "fano_degree",
    "find_chain_orderings",
    "homology",
    "milnor_number",
    "oracle_homology",
    "scan_csv",
    "smith_normal_form",
    "torsion",
    "validate_weights",
]
