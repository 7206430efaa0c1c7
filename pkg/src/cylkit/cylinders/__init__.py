"""Cylinders over Delta[1]: constructions, divisions, presheaves, base change, Reedy checks."""
from .basechange import pullback_cyl, pushforward, triangle_identities
from .collage import Profunctor, collage_category, collage_nerve, profunctor_from_category
from .core import (Cylinder, CylinderError, cylinder_isomorphism, cylinders_equal,
                   dual_cylinder, exterior_product, initial, initial_map, is_cylinder_map,
                   left_cone, leibniz_exterior, make_cylinder, reflect_L, split_cylinder,
                   terminal)
from .division import (divide, division_map, leibniz_lift_check, left_divide, right_divide,
                       verify_division_adjunction)
from .presheaf import CylinderPresheaf, from_presheaf, to_presheaf
from .reedy import check_reedy_local, is_ambifibrant, verify_tfae

__all__ = [
    "Cylinder", "CylinderError", "CylinderPresheaf", "Profunctor", "check_reedy_local",
    "collage_category", "collage_nerve", "cylinder_isomorphism", "cylinders_equal", "divide",
    "division_map", "dual_cylinder", "exterior_product", "from_presheaf", "initial",
    "initial_map", "is_ambifibrant", "is_cylinder_map", "left_cone", "left_divide",
    "leibniz_exterior", "leibniz_lift_check", "make_cylinder", "profunctor_from_category",
    "pullback_cyl", "pushforward", "reflect_L", "right_divide", "split_cylinder", "terminal",
    "to_presheaf", "triangle_identities", "verify_division_adjunction", "verify_tfae",
]
