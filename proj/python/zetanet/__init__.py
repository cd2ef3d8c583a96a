"""Python bindings for the zetanet core library."""

from ._zetanet import (
    BalanceError,
    ConvergenceError,
    DegreeDistribution,
    GraphSample,
    LSeries,
    NoSignChangeError,
    ScanResult,
    SignedDistributionError,
    clustering,
    critical_exponent,
    critical_transmissibility,
    directed_margin,
    epidemic_threshold_product,
    giant_component_fraction,
    import_csv,
    known_formula_tags,
    psi_bipartite,
    sample_bipartite,
    scan,
    sir_percolation,
    tc_curve,
    unipartite_margin,
)

__all__ = [name for name in dir() if not name.startswith("_")]
