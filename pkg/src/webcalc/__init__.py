"""Finite web calculus: warps, waves, alternating paths and Menger structures."""

from .alternating import (
    AlternatingPath,
    Link,
    find_augmenting,
    is_safe,
    sap_family,
    strongly_maximal_warp,
    validate_alternating,
)
from .bipartite import BipartiteGraph, hall_check, konig
from .core import Warp, Web, WebError, make_web, reverse_web
from .io import emit_web, parse_web, random_web
from .menger import (
    MengerStructure,
    is_hindered,
    linkage,
    menger_certificate_check,
    menger_structure,
    safe_link,
)
from .separation import essential, is_separating, quotient_web, rf, roof
from .waves import Wave, compare_waves, is_loose, is_wave, maximal_wave

__all__ = [
    "AlternatingPath",
    "BipartiteGraph",
    "Link",
    "MengerStructure",
    "Warp",
    "Wave",
    "Web",
    "WebError",
    "compare_waves",
    "emit_web",
    "essential",
    "find_augmenting",
    "hall_check",
    "is_hindered",
    "is_loose",
    "is_safe",
    "is_separating",
    "is_wave",
    "konig",
    "linkage",
    "make_web",
    "maximal_wave",
    "menger_certificate_check",
    "menger_structure",
    "parse_web",
    "quotient_web",
    "random_web",
    "reverse_web",
    "rf",
    "roof",
    "safe_link",
    "sap_family",
    "strongly_maximal_warp",
    "validate_alternating",
]
