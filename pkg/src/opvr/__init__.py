"""Ortho-polygon visibility representations of 1-plane graphs.

Pipeline: parse a 1-plane graph, find its forbidden configurations, reduce
them to a non-redundant set, match them to poles, subdivide, compute a
minimum-complexity orthogonal representation, compact it to integer
coordinates and verify the result geometrically.
"""

__version__ = "0.1.0"
