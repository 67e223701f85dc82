"""Augmented directed complexes: Steiner conditions, ν-cells, joins, tensors, slices and homotopies."""

from .cells import Cell, cell_compose, cell_identity, enumerate_adc_morphisms, enumerate_cells
from .chains import Chain
from .complexes import (
    Complex,
    ComplexError,
    Morphism,
    atom_table,
    compose_morphisms,
    generator_atom,
    identity_morphism,
    is_isomorphism,
    validate_complex,
    validate_morphism,
)
from .constructions import (
    co,
    disk_complex,
    globular_sum,
    join,
    op,
    opp,
    simplex_complex,
    street_nerve,
    tensor,
    truncate_bete,
    truncate_intelligent,
)
from .homotopy import ANTIHOMOTOPY, HOMOTOPY, Family, validate_homotopy
from .reports import Report
from .slices import Slice, coslice, cone_homotopy, triangle_pullback
from .steiner import is_rigid, is_steiner, is_strong_steiner, steiner_report

__version__ = "0.1.0"
