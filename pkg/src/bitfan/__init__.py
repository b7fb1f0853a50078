"""Exact computation on infinite binary sequences: bars, the bit-metric, finite subcovers."""

from .balls import Ball, Cylinder, Relation, ball_contains, ball_to_cylinder, balls_relation, cylinder_contains
from .bars import (
    BarTrie,
    EscapeWitness,
    FuelExceeded,
    extract_finite_subbar,
    find_escape,
    is_bar,
    minimal_antichain,
    subcover_cantor,
)
from .bitstring import EPB, INFINITE, beta, bit_at, is_standard_form, lcp_length, normalize
from .heine_borel import (
    CoverDiagnostic,
    NotCovered,
    OpenInterval,
    cylinder_to_interval,
    heine_borel_subcover,
    iota,
    iota_inv,
    verify_cover,
)
from .sat import CnfFormula, check_bar_via_sat, dimacs_emit, dimacs_parse, dpll_solve, encode_bar_cnf

__version__ = "0.1.0"
