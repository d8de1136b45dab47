"""Exact verification of cyclic sieving triples on small combinatorial families."""

__version__ = "0.1.0"
