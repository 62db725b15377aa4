"""Lexicographic shellability toolkit: posets, complexes, shellings,
EL/CL-labelings and recursive atom orderings."""

from .errors import *  # noqa: F401,F403
from .poset import Poset, atoms, build_poset, dual, interval, is_graded, maximal_chains
from .simplicial import SimplicialComplex, build_complex, dual_face_lattice, order_complex
from .shelling import find_shelling, forced_last_facet, is_shelling, lex_order_shelling_check
from .labeling import (
    lift,
    search_el_labeling,
    verify_cl_labeling,
    verify_el_labeling,
)
from .rao import (
    RaoNode,
    el_obstruction,
    find_rao,
    find_root_independent_rao,
    forced_first_set,
    instantiate_family,
    verify_rao,
)
from .constructions import (
    build_graded_example,
    build_graded_rao,
    load_hachimori,
    load_ungraded_example,
    pentagon,
)

__version__ = "0.1.0"
