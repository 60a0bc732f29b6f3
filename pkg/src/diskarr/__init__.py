"""Exact planar arrangements of polygonal topological disks."""
from .analysis import (
    AnalysisReport,
    boundary_interval_report,
    check_two_disk_paths,
    diameter,
    dual_graph,
    intersection_components,
    maximal_faces,
    monotone_partition,
    overlap_number,
    st_distance,
    two_disk_classification,
    verify_bounds,
)
from .arrangement import Arrangement, build_arrangement
from .generators import GeneratedInstance, comb_pair, grid_instance, random_instance, spiral_pair
from .geometry import Disk, Point, orientation, point_in_disk, pt, segment_intersection, validate_general_position

__version__ = "0.1.0"
