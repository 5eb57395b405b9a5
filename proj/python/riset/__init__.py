"""Rainbow independent set extraction on sparse graph powers."""

from ._core import (
    CapExceeded,
    Graph,
    check_chromatic_bound,
    extract_bounded_expansion,
    extract_treedepth,
    f_exact,
    find_rainbow,
    is_independent,
    m_bound,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_empty,
    make_path,
    make_star,
    power,
    rainbow_induced_matching,
    shortest_path_closure,
    treedepth,
    wcol,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "check_chromatic_bound",
    "extract_bounded_expansion",
    "extract_treedepth",
    "f_exact",
    "find_rainbow",
    "is_independent",
    "m_bound",
    "make_complete",
    "make_complete_multipartite",
    "make_cycle",
    "make_empty",
    "make_path",
    "make_star",
    "power",
    "rainbow_induced_matching",
    "shortest_path_closure",
    "treedepth",
    "wcol",
]
