"""Exact computations with locally finite and extended affine root supersystems."""

__version__ = "0.1.0"
