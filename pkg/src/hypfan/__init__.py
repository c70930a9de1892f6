"""Orbit complexes of totally hyperbolic actions: fans, flows, parity laws and moves."""

from .cells3 import CellComplex3, validate_complex3
from .errors import HypfanError
from .fan import Fan, cone_contains, face_compatible_2d, domain_compatible_3d, fan_compatible, is_generic
from .flow import (assign_levels, attractor_pair_decomposition_s2, check_domain_count,
                   detect_cycles, index_counts, morse_inequalities, orient_edges, vertex_index)
from .fansearch import realizability_report, search_fan
from .generators import (generate_genus_g, generate_nonorientable, generate_octahedral,
                         generate_rp3, generate_s3)
from .moves import MoveScript, SpherePair, augment, insert_spheres, remove_spheres
from .quotient import Involution2, Involution3, quotient_by_involution
from .sphere2 import (bicolor, color_balance, corner_pairing, eye_checks, eyes,
                      parity_theorem, vertex_parities)
from .surface import SurfaceComplex, build_surface_complex, trace_loops


def euler_characteristic(c):
    return c.euler_characteristic()


__all__ = [name for name in dir() if not name.startswith("_")]
