"""Python bindings for the drg toolkit (intersection arrays, spectra,
feasibility bounds, exhaustive enumeration, graph certification)."""

from drgpy._core import (  # noqa: F401
    DrgError,
    DrgParseError,
    __version__,
    adjacency_eigenvalues,
    antipodal_check,
    biggs_multiplicity,
    catalog_get,
    catalog_list,
    certify,
    check,
    claim1_property,
    derive,
    enumerate_arrays,
    finiteness_census,
    flag_family,
    format_array,
    hadamard_family,
    lemma7_dichotomy,
    lemma9_diameter_cap,
    parse_array,
    ratio_k2_over_k,
    spectrum,
    standard_sequence,
    terwilliger_filter,
    terwilliger_scan,
    theorem2_pipeline,
    theta1_lower_bound_check,
)
