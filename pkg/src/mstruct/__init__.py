"""Exact verification engine for compatible associative products, M-structure
representations of affine ADE type, and the associated r-matrices."""

__version__ = "0.1.0"
