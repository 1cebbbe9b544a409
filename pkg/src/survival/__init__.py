"""Voronoi cells, competition processes and survival-number evidence on
implicit vertex-transitive graphs."""

from .graphs import GraphSpec, parse_graph, origin, neighbors, encode, decode
from .metric import ball, sphere, distance, Beyond, CapacityError
from .voronoi import SiteSet, voronoi_cells, growth_process, competition_run
from .covering import CoverInstance, cover_check, min_cover, survival_probe

__all__ = [
    "GraphSpec", "parse_graph", "origin", "neighbors", "encode", "decode",
    "ball", "sphere", "distance", "Beyond", "CapacityError",
    "SiteSet", "voronoi_cells", "growth_process", "competition_run",
    "CoverInstance", "cover_check", "min_cover", "survival_probe",
]
