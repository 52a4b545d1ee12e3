"""Exact enumeration of positive solutions of the Conway-Coxeter matrix
equation via quiddities of 3-periodic polygon dissections.

Three independent computation paths cross-validate each other: brute-force
enumeration with surgery-based canonicalization, fixed-point solving of the
generating-function equations, and closed-form binomial formulas.
"""

from .geometry import (
    Dissection,
    cells_of,
    is_l_periodic,
    multi_index_of,
    parse,
    quiddity_of,
    validate,
)
from .matrixeq import (
    INFINITY,
    Mat2,
    SolutionClass,
    cc_product,
    continuant,
    enumerate_positive_solutions,
    hj_value,
    is_cc_solution,
)
from .enumeration import (
    CountTable,
    count_dissections,
    count_multi_index_dissections,
    count_quiddities,
    enumerate_dissections,
)
from .formulas import (
    D_l_nm,
    D_l_total,
    D_multi,
    P_multi,
    P_nk,
    P_total,
    Q_n3,
    Q_n6,
    Q_nk,
    Q_total,
    blowup_count,
    catalan,
)
from .series import (
    BSeries,
    MSeries,
    USeries,
    d1_closed_form,
    eval_w1,
    lb_extract,
    solve_fixed_point,
    substitute_periodic,
)
from .surgery import (
    IndexedDissection,
    SurgeryMove,
    apply,
    blow_up,
    canonicalize,
    expand,
    index,
    is_base_open,
    is_maximally_open,
    legal_moves,
)
from .asymptotics import (
    AsymptoticConstants,
    constants,
    empirical_ratio,
    least_positive_root,
    periodic_constants,
)
from .toric import (
    classify_type,
    enumerate_blowups,
    fan_blow_up,
    fan_from_sequence,
    type_census,
    winding_index,
)

__version__ = "0.1.0"
