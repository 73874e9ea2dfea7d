"""Exact computations in the Fock space of r-colored partitions and the
class algebras of wreath products of a cyclic group."""

__version__ = "0.1.0"
