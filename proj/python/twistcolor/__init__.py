"""Finite biquandles with v- and t-structures and colorings of twisted diagrams."""

from ._twistcolor import (
    Biquandle,
    Diagram,
    Quandle,
    TwistcolorError,
    VTStructure,
    alexander,
    brute_force_colorings,
    check_moves,
    count_colorings,
    delta_set,
    derived,
    detect_nonvirtual,
    dihedral,
    dump_structure,
    fm,
    fm_jones,
    load_structure,
    product_formula,
    random_diagram,
    remark_structure,
    standard_twisted_product,
    twisted_product,
)

__all__ = [
    "Biquandle",
    "Diagram",
    "Quandle",
    "TwistcolorError",
    "VTStructure",
    "alexander",
    "brute_force_colorings",
    "check_moves",
    "count_colorings",
    "delta_set",
    "derived",
    "detect_nonvirtual",
    "dihedral",
    "dump_structure",
    "fm",
    "fm_jones",
    "load_structure",
    "product_formula",
    "random_diagram",
    "remark_structure",
    "standard_twisted_product",
    "twisted_product",
]
