"""CRIPT topological contour codes for black-white raster images."""

__version__ = "0.1.0"
