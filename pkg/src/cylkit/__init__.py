"""cylkit: finite simplicial sets, bounded lifting problems and cylinders.

Decision procedures return :class:`~cylkit.verdict.Verdict` objects with one
of four statuses; see :mod:`cylkit.verdict`.
"""
from .anodyne import certify_inner_anodyne, is_absolute_wce, soa_factor
from .category import FiniteCategory, nerve
from .classify import check_inn2triv, classify_fibration, is_isofibration, is_quasicategory
from .lifting import has_rlp
from .limits import join, pullback, pushout
from .maps import SimplicialMap, compose, identity_map
from .sset import FiniteSimplicialSet, Simplex
from .standard import boundary, horn, simplex, spine
from .verdict import EXHAUSTED, NO, YES_BOUNDED, YES_CERTIFIED, Verdict

__version__ = "0.1.0"

__all__ = [
    "EXHAUSTED", "FiniteCategory", "FiniteSimplicialSet", "NO", "Simplex", "SimplicialMap",
    "Verdict", "YES_BOUNDED", "YES_CERTIFIED", "boundary", "certify_inner_anodyne",
    "check_inn2triv", "classify_fibration", "compose", "has_rlp", "horn", "identity_map",
    "is_absolute_wce", "is_isofibration", "is_quasicategory", "join", "nerve", "pullback",
    "pushout", "simplex", "soa_factor", "spine",
]
