"""Exact verification toolkit for the equivariant Reidemeister pairing on abelian covers of closed surfaces."""

__version__ = "0.1.0"
