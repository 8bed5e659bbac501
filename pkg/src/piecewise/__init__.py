from .algebra import (
    compose_cadlag_homeo,
    compose_homeo,
    compose_timechange_homeo,
    composed_map_distance,
    composed_sup_distance,
    evaluate,
    invert_homeo,
    left_limit,
    map_sup_distance,
    restrict,
    sup_distance,
    time_change_from_cadlag,
    total_variation,
)
from .cadlag import NODE_TOLERANCE, CadlagFunction, normalize_cadlag_nodes
from .maps import Homeomorphism, TimeChange, normalize_map_nodes

__all__ = [
    "NODE_TOLERANCE",
    "CadlagFunction",
    "Homeomorphism",
    "TimeChange",
    "compose_cadlag_homeo",
    "compose_homeo",
    "compose_timechange_homeo",
    "composed_map_distance",
    "composed_sup_distance",
    "evaluate",
    "invert_homeo",
    "left_limit",
    "map_sup_distance",
    "normalize_cadlag_nodes",
    "normalize_map_nodes",
    "restrict",
    "sup_distance",
    "time_change_from_cadlag",
    "total_variation",
]
